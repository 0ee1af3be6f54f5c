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


#include "cgrand_cli/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace cgrand::cli {

namespace {

double parse_double(std::string_view token, const char* what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(std::string(token), &used);
    } catch (const std::exception&) {
        throw UsageError(fmt::format("malformed {} '{}'", what, token));
    }
    if (used != token.size() || !std::isfinite(value)) throw UsageError(fmt::format("malformed {} '{}'", what, token));
    return value;
}

double snap(double db) { return std::round(db * 100.0) / 100.0; }

std::string format_set(const std::vector<std::size_t>& set) {
    return fmt::format("{{{}}}", fmt::join(set, ","));
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunOptions {
    std::string code = "ebch128";
    std::string profile;
    std::string snr;
    std::uint64_t frames = 1000;
    std::uint64_t budget = 100000;
    std::uint64_t budget_checked = 0;
    std::size_t constraints = 0;
    std::uint64_t seed = 1;
    std::string out_path;
    unsigned threads = 0;
};

struct AnalyzeOptions {
    std::string code;
    std::string profile;
    std::size_t constraints = kMaxConstraints;
};

struct VerifyOptions {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
};

LinearCode load_code(const std::string& id, const std::string& profile_path, std::ostream& err) {
    const WarningSink warn = [&err](std::string_view msg) { err << "warning: " << msg << '\n'; };
    if (!profile_path.empty()) {
        if (id != "pac64") throw UsageError("--profile is only valid with --code pac64");
        const RateProfile profile = parse_rate_profile(read_text(profile_path));
        LinearCode code = build_pac(profile, pac_default_polynomial());
        code.name = fmt::format("pac{}({})", profile.n, profile_path);
        return code;
    }
    if (id != "ebch128" && id != "ebch8" && id != "pac64" && !id.starts_with("file:")) {
        throw UsageError(fmt::format("unknown code '{}' (expected ebch128, ebch8, pac64 or file:PATH)", id));
    }
    return resolve_code(id, warn);
}

ConstraintLayout layout_for(const LinearCode& code, std::size_t p) {
    ConstraintLayout layout = derive_constraints_upto(code.parity_check, p);
    if (layout.p() < p) {
        throw UsageError(fmt::format("--constraints {} is not achievable for {}: at most {} disjoint constraints", p,
                                     code.name, layout.p()));
    }
    return layout;
}

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    const std::vector<double> snrs = parse_snr_grid(opt.snr);
    if (opt.frames == 0) throw UsageError("--frames must be at least 1");
    if (opt.budget == 0) throw UsageError("--budget must be at least 1");

    const LinearCode code = load_code(opt.code, opt.profile, err);
    if (code.k == 0) throw UsageError(fmt::format("{} has dimension 0", code.name));
    layout_for(code, opt.constraints);

    SimConfig config;
    config.snrs_db = snrs;
    config.frames = opt.frames;
    config.budget = DecodeBudget::matched(opt.budget);
    if (opt.budget_checked != 0) config.budget.max_checks = opt.budget_checked;
    config.constraints = opt.constraints;
    config.seed = opt.seed;
    config.threads = opt.threads;

    const SimReport report = run_montecarlo(code, config, [&err](const SimPoint& pt) {
        err << fmt::format("{:.2f} dB: {} frames, {} errors, {} abandoned\n", pt.snr_db, pt.frames, pt.block_errors,
                           pt.abandons);
    });

    const std::string csv = format_csv(report);
    if (opt.out_path.empty()) {
        out << csv;
    } else {
        std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", opt.out_path));
        file << csv;
        if (!file.flush()) throw std::runtime_error(fmt::format("write to '{}' failed", opt.out_path));
    }
    out << format_summary(report);
    return kSuccess;
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.constraints > kMaxConstraints) {
        throw UsageError(fmt::format("--constraints must be at most {}", kMaxConstraints));
    }
    const LinearCode code = load_code(opt.code, opt.profile, err);
    out << format_layout(code, derive_constraints_upto(code.parity_check, opt.constraints));
    return kSuccess;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const std::vector<VerifyTrial> trials = verify_search_space(opt.n, opt.p, opt.trials, opt.seed);
    bool all = true;
    for (std::size_t t = 0; t < trials.size(); ++t) {
        const VerifyTrial& tr = trials[t];
        all = all && tr.passed();
        out << fmt::format("trial {}: sizes [{}] targets {:#x} count {} expected {} {}\n", t + 1,
                           fmt::join(tr.set_sizes, " "), tr.targets, tr.count, tr.expected,
                           tr.passed() ? "pass" : "FAIL");
    }
    out << fmt::format("n={} p={}: {}\n", opt.n, opt.p, all ? "pass" : "FAIL");
    return all ? kSuccess : kRuntime;
}

}  // namespace

std::vector<double> parse_snr_grid(std::string_view spec) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = spec.find(':', start);
        fields.push_back(spec.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (fields.size() == 1) return {snap(parse_double(fields[0], "SNR"))};
    if (fields.size() != 3) throw UsageError(fmt::format("SNR grid '{}' must be start:stop:step", spec));

    const double first = parse_double(fields[0], "SNR start");
    const double last = parse_double(fields[1], "SNR stop");
    const double step = parse_double(fields[2], "SNR step");
    if (!(step > 0.0)) throw UsageError("SNR step must be positive");
    if (last < first) throw UsageError("SNR stop must not be below start");

    const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
    if (count > 10000) throw UsageError("SNR grid has too many points");
    std::vector<double> grid;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(snap(first + static_cast<double>(i) * step));
    return grid;
}

std::string format_csv(const SimReport& report) {
    std::string csv(kCsvHeader);
    csv += '\n';
    for (const SimPoint& pt : report.points) {
        csv += fmt::format("{:.2f},{},{},{:.6e},{:.4f},{:.4f},{},{},{},{},{}\n", pt.snr_db, pt.frames, pt.block_errors,
                           pt.bler(), pt.avg_queries_checked(), pt.avg_candidates_generated(), pt.abandons,
                           report.constraints, report.budget.max_checks, report.budget.max_candidates, report.seed);
    }
    return csv;
}

std::string format_summary(const SimReport& report) {
    std::string s = fmt::format("{} (n={}, k={})  p={}  b={}  b'={}  seed={}\n", report.code_name, report.n, report.k,
                                report.constraints, report.budget.max_checks, report.budget.max_candidates,
                                report.seed);
    s += fmt::format("rng {}; averages over {}\n", report.rng_algorithm, report.averaging);
    auto row = [&](std::string_view label, auto&& cell) {
        s += fmt::format("{:<18}", label);
        for (const SimPoint& pt : report.points) s += fmt::format("{:>12}", cell(pt));
        s += '\n';
    };
    row("Eb/N0 (dB)", [](const SimPoint& pt) { return fmt::format("{:.2f}", pt.snr_db); });
    row(fmt::format("queries (p={})", report.constraints),
        [](const SimPoint& pt) { return fmt::format("{:.1f}", pt.avg_queries_checked()); });
    row("candidates", [](const SimPoint& pt) { return fmt::format("{:.1f}", pt.avg_candidates_generated()); });
    row("BLER", [](const SimPoint& pt) { return fmt::format("{:.3e}", pt.bler()); });
    row("abandons", [](const SimPoint& pt) { return fmt::format("{}", pt.abandons); });
    row("frames", [](const SimPoint& pt) { return fmt::format("{}", pt.frames); });
    return s;
}

std::string format_layout(const LinearCode& code, const ConstraintLayout& layout) {
    std::string s = fmt::format("code {} n={} k={} parity rows={}\n", code.name, code.n, code.k,
                                code.parity_check.rows());
    s += fmt::format("all-one row in row space: {}\n", layout.has_overall_parity ? "yes" : "no");
    s += fmt::format("disjoint constraints: {}\n", layout.p());
    for (std::size_t j = 0; j < layout.p(); ++j) {
        const auto [lo, hi] = layout.intervals[j];
        s += fmt::format("  h{}: weight {} interval [{},{}] set {}\n", j + 1, layout.sets[j].size(), lo, hi,
                         format_set(layout.sets[j]));
    }
    const std::size_t covered = std::accumulate(layout.sets.begin(), layout.sets.end(), std::size_t{0},
                                                [](std::size_t acc, const auto& set) { return acc + set.size(); });
    s += fmt::format("unconstrained positions: {}\n", code.n - covered);
    return s;
}

std::vector<VerifyTrial> verify_search_space(std::size_t n, std::size_t p, std::size_t trials, std::uint64_t seed) {
    if (n == 0 || n > kMaxEnumerationLength) {
        throw UsageError(fmt::format("--n must be in [1, {}]", kMaxEnumerationLength));
    }
    if (p > n) throw UsageError("--p must not exceed --n");
    if (trials == 0) throw UsageError("--trials must be at least 1");

    std::mt19937_64 engine(splitmix64(seed));
    std::vector<VerifyTrial> results;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), engine);

        std::vector<BitVec> rows(p, BitVec(n));
        for (std::size_t i = 0; i < n; ++i) {
            // The first p shuffled positions seed one set each; the rest go to
            // a random set or stay unconstrained (slot p).
            const std::size_t slot = i < p ? i : static_cast<std::size_t>(engine() % (p + 1));
            if (slot < p) rows[slot].set(order[i]);
        }
        VerifyTrial trial;
        for (const BitVec& r : rows) trial.set_sizes.push_back(r.weight());
        const ConstraintLayout layout = make_layout(n, std::move(rows));
        ConstraintTargets targets{p, p == 0 ? 0 : engine() & (p == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1)};
        trial.targets = targets.bits;
        trial.count = count_search_space(n, layout, targets);
        trial.expected = std::uint64_t{1} << (n - p);
        results.push_back(std::move(trial));
    }
    return results;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constrained ORBGRAND decoding and simulation", args.empty() ? "cgrand" : args.front()};
    app.require_subcommand(1);

    RunOptions run;
    CLI::App* run_cmd = app.add_subcommand("run", "Monte Carlo BLER / query-count simulation");
    run_cmd->add_option("--code", run.code, "ebch128 | ebch8 | pac64 | file:PATH")->capture_default_str();
    run_cmd->add_option("--profile", run.profile, "rate-profile file for pac64");
    run_cmd->add_option("--snr", run.snr, "Eb/N0 grid start:stop:step in dB")->required();
    run_cmd->add_option("--frames", run.frames, "frames per SNR point")->capture_default_str();
    run_cmd->add_option("--budget", run.budget, "abandonment budget, sets b = b' = B")->capture_default_str();
    run_cmd->add_option("--budget-checked", run.budget_checked, "separate codebook-check budget b");
    run_cmd->add_option("--constraints", run.constraints, "number of disjoint parity constraints p")
        ->capture_default_str();
    run_cmd->add_option("--seed", run.seed, "simulation seed")->capture_default_str();
    run_cmd->add_option("--out", run.out_path, "CSV output path (stdout if omitted)");
    run_cmd->add_option("--threads", run.threads, "worker threads, 0 = all cores")->capture_default_str();

    AnalyzeOptions analyze;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "show the derived constraint layout of a code");
    analyze_cmd->add_option("--code", analyze.code, "ebch128 | ebch8 | pac64 | file:PATH")->required();
    analyze_cmd->add_option("--profile", analyze.profile, "rate-profile file for pac64");
    analyze_cmd->add_option("--constraints", analyze.constraints, "maximum number of constraints")
        ->capture_default_str();

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive search-space count for random disjoint layouts");
    verify_cmd->add_option("--n", verify.n, "code length, at most 24")->required();
    verify_cmd->add_option("--p", verify.p, "number of constraints")->required();
    verify_cmd->add_option("--trials", verify.trials, "random layouts to check")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "layout seed")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("cgrand");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run, out, err);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze, out, err);
        return cmd_verify(verify, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntime;
    }
}

}  // namespace cgrand::cli
