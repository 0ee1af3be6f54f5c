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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cgrand_cli/cli.hpp"

namespace cgrand::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "cgrand");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cgrand_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

TEST(SnrGrid, InclusiveAndSnapped) {
    EXPECT_EQ(parse_snr_grid("3:5.5:0.5"), (std::vector<double>{3.0, 3.5, 4.0, 4.5, 5.0, 5.5}));
    EXPECT_EQ(parse_snr_grid("4:4:1"), (std::vector<double>{4.0}));
    EXPECT_EQ(parse_snr_grid("5"), (std::vector<double>{5.0}));
    const std::vector<double> fine = parse_snr_grid("0.1:0.3:0.1");
    ASSERT_EQ(fine.size(), 3u);
    EXPECT_EQ(fine[2], 0.3);
    EXPECT_THROW(parse_snr_grid("5:4:1"), UsageError);
    EXPECT_THROW(parse_snr_grid("4:5:0"), UsageError);
    EXPECT_THROW(parse_snr_grid("4:5"), UsageError);
    EXPECT_THROW(parse_snr_grid("a:5:1"), UsageError);
}

TEST(Run, DeterministicCsv) {
    const auto path = temp_path("run.csv");
    const std::vector<std::string> args{"run",      "--code",   "ebch8", "--snr",         "4:4:1",
                                        "--frames", "100",      "--budget", "100",        "--constraints",
                                        "0",        "--seed",   "1",     "--out",         path.string()};
    const Result a = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    const std::string first = slurp(path);
    const Result b = run(args);
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(slurp(path), first);

    const std::vector<std::string> lines = lines_of(first);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0], kCsvHeader);
    EXPECT_EQ(std::count(lines[1].begin(), lines[1].end(), ','), 10);
    EXPECT_EQ(lines[1].rfind("4.00,100,", 0), 0u);
    EXPECT_NE(lines[1].find(",0,100,100,1"), std::string::npos);
    EXPECT_NE(a.out.find("Eb/N0 (dB)"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Run, ThreadsDoNotChangeCsv) {
    std::vector<std::string> args{"run", "--code", "ebch128", "--snr", "4:5:0.5", "--frames", "60",
                                  "--budget", "500", "--constraints", "2", "--seed", "3"};
    auto one = args, four = args;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const Result a = run(one), b = run(four);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(lines_of(a.out).size(), 1u + 3u + 8u);
}

TEST(Run, SeparateCheckBudget) {
    const Result r = run({"run", "--code", "ebch8", "--snr", "3", "--frames", "10", "--budget", "50",
                          "--budget-checked", "20", "--constraints", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find(",1,20,50,1\n"), std::string::npos) << r.out;
}

TEST(Run, TooManyConstraintsReportsAchievable) {
    const Result r = run({"run", "--code", "ebch8", "--snr", "4:4:1", "--constraints", "9"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("at most 2"), std::string::npos) << r.err;
}

TEST(Run, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"run"}).code, 1);
    EXPECT_EQ(run({"run", "--snr", "4", "--frames", "0"}).code, 1);
    EXPECT_EQ(run({"run", "--snr", "4", "--code", "bogus"}).code, 1);
    EXPECT_EQ(run({"run", "--snr", "4", "--frames", "x"}).code, 1);
    EXPECT_EQ(run({"run", "--snr", "4", "--code", "ebch8", "--profile", "p.txt"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Run, MissingFileIsRuntimeFailure) {
    EXPECT_EQ(run({"run", "--snr", "4", "--code", "file:/nonexistent/h.txt"}).code, 2);
}

TEST(Analyze, Ebch128) {
    const Result r = run({"analyze", "--code", "ebch128"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("all-one row in row space: yes"), std::string::npos);
    EXPECT_NE(r.out.find("disjoint constraints: 2"), std::string::npos);
    EXPECT_NE(r.out.find("h2: weight 64"), std::string::npos);
}

TEST(Analyze, Ebch8) {
    const Result r = run({"analyze", "--code", "ebch8"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all-one row in row space: yes"), std::string::npos);
}

TEST(Analyze, NestedPairFile) {
    const auto path = temp_path("nested_pair.h");
    std::ofstream(path) << "8 6\n11110110\n01010010\n";
    const Result r = run({"analyze", "--code", "file:" + path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("set {1,3,6}"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("set {2,4,7}"), std::string::npos);
    EXPECT_NE(r.out.find("interval [3,5]"), std::string::npos);
    EXPECT_NE(r.out.find("all-one row in row space: no"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Analyze, PacProfileFile) {
    const Result r = run({"analyze", "--code", "pac64", "--profile",
                          std::string(CGRAND_TEST_DATA_DIR) + "/pac64_44.profile", "--constraints", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("n=64 k=44"), std::string::npos);
    EXPECT_NE(r.out.find("h3: weight 16"), std::string::npos);
}

TEST(Verify, SearchSpaceCounts) {
    const Result a = run({"verify", "--n", "8", "--p", "2"});
    EXPECT_EQ(a.code, 0);
    EXPECT_NE(a.out.find("count 64 expected 64 pass"), std::string::npos);
    const Result b = run({"verify", "--n", "10", "--p", "0", "--trials", "2"});
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("count 1024"), std::string::npos);
    const Result c = run({"verify", "--n", "12", "--p", "3", "--seed", "4"});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("count 512"), std::string::npos);
    EXPECT_NE(c.out.find("n=12 p=3: pass"), std::string::npos);
}

TEST(Verify, RangeChecked) {
    EXPECT_EQ(run({"verify", "--n", "25", "--p", "1"}).code, 1);
    EXPECT_EQ(run({"verify", "--n", "4", "--p", "5"}).code, 1);
}

TEST(Csv, FormatsReport) {
    SimReport report;
    report.constraints = 2;
    report.budget = DecodeBudget{10, 20};
    report.seed = 9;
    SimPoint pt;
    pt.snr_db = 4.5;
    pt.frames = 4;
    pt.block_errors = 1;
    pt.abandons = 1;
    pt.total_queries_checked = 10;
    pt.total_candidates_generated = 30;
    report.points.push_back(pt);
    EXPECT_EQ(format_csv(report), std::string(kCsvHeader) + "\n4.50,4,1,2.500000e-01,2.5000,7.5000,1,2,10,20,9\n");
}

}  // namespace
}  // namespace cgrand::cli
