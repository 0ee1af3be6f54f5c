// Copyright 2026 The cgrand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CGRAND_CLI_CLI_HPP
#define CGRAND_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgrand/channel_sim.hpp"
#include "cgrand/codes.hpp"
#include "cgrand/constraints.hpp"

namespace cgrand::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kRuntime = 2 };

/// Thrown for flag values that are malformed or inconsistent.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// "start:stop:step" in dB, or a single value. Endpoints are inclusive and
/// every grid point is snapped to 0.01 dB.
std::vector<double> parse_snr_grid(std::string_view spec);

inline constexpr std::string_view kCsvHeader =
    "snr_db,frames,block_errors,bler,avg_queries_checked,avg_candidates_generated,abandons,p,b,b_prime,seed";

std::string format_csv(const SimReport& report);

/// Console table: one column per SNR point, one row per quantity.
std::string format_summary(const SimReport& report);

/// Human-readable dump of a derived constraint layout.
std::string format_layout(const LinearCode& code, const ConstraintLayout& layout);

struct VerifyTrial {
    std::vector<std::size_t> set_sizes;
    std::uint64_t targets = 0;
    std::uint64_t count = 0;
    std::uint64_t expected = 0;

    bool passed() const { return count == expected; }
};

/// Random disjoint layouts and targets on n <= 24 positions, each counted
/// exhaustively.
std::vector<VerifyTrial> verify_search_space(std::size_t n, std::size_t p, std::size_t trials, std::uint64_t seed);

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgrand::cli

#endif  // CGRAND_CLI_CLI_HPP
