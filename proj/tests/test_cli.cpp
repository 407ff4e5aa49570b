#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "wpd");
    std::ostringstream out, err;
    int code = wpd::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, SeriesOrder4) {
    auto r = run({"series", "--order", "4"});
    EXPECT_EQ(r.code, wpd::cli::kOk);
    EXPECT_TRUE(has(r.out, "Todd: 1, 1/2, 1/12, 0, -1/720\n")) << r.out;
    EXPECT_FALSE(has(r.out, "FAIL"));
}

TEST(Cli, Decompose) {
    auto r = run({"decompose", "--builtin", "trapezoid", "--compare-seed", "7"});
    EXPECT_EQ(r.code, wpd::cli::kOk) << r.out << r.err;
    EXPECT_TRUE(has(r.out, "check weighted polar decomposition: PASS"));
    EXPECT_TRUE(has(r.out, "check polarization independence: PASS"));
    // deterministic output
    EXPECT_EQ(r.out, run({"decompose", "--builtin", "trapezoid", "--compare-seed", "7"}).out);
}

TEST(Cli, FileInput) {
    auto r = run({"count", WPD_TEST_DATA "/square.json", "--y", "1"});
    EXPECT_EQ(r.code, wpd::cli::kOk) << r.err;
    EXPECT_TRUE(has(r.out, "weighted count at y: 1\n")) << r.out;
    EXPECT_TRUE(has(r.out, "digest: "));
}

TEST(Cli, ChiAndBrion) {
    EXPECT_EQ(run({"chi", "--builtin", "prism", "--y", "1/3", "--z", "2,-3,5"}).code, wpd::cli::kOk);
    EXPECT_EQ(run({"brion", "--builtin", "simplex:2,3"}).code, wpd::cli::kOk);
    auto pole = run({"chi", "--builtin", "cube:2", "--y", "1", "--z", "1,2"});
    EXPECT_EQ(pole.code, wpd::cli::kInputError);
    EXPECT_TRUE(has(pole.err, "pole"));
}

TEST(Cli, NegativeControls) {
    auto oct = run({"vertices", "--builtin", "octahedron"});
    EXPECT_EQ(oct.code, wpd::cli::kInputError);
    EXPECT_TRUE(has(oct.err, "not simple"));
    auto skew = run({"count", "--builtin", "skew-triangle"});
    EXPECT_EQ(skew.code, wpd::cli::kInputError);
    EXPECT_TRUE(has(skew.err, "regular"));
    for (const char* cmd : {"decompose", "count", "chi", "series", "svg"}) {
        std::vector<std::string> args{cmd, "--y", "-1"};
        if (std::string(cmd) != "series")
            args.insert(args.end(), {"--builtin", "cube:2"});
        if (std::string(cmd) == "chi")
            args.insert(args.end(), {"--z", "2,3"});
        auto r = run(args);
        EXPECT_EQ(r.code, wpd::cli::kInputError) << cmd;
        EXPECT_TRUE(has(r.err, "y != -1")) << cmd << r.err;
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, wpd::cli::kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, wpd::cli::kInputError);
    EXPECT_EQ(run({"count"}).code, wpd::cli::kInputError);
    EXPECT_EQ(run({"count", "--builtin", "cube:2", "x.json"}).code, wpd::cli::kInputError);
    EXPECT_EQ(run({"count", WPD_TEST_DATA "/bad_float.json"}).code, wpd::cli::kInputError);
    EXPECT_EQ(run({"--help"}).code, wpd::cli::kOk);
}

TEST(Cli, Svg) {
    auto r = run({"svg", "--builtin", "trapezoid", "--y", "1", "--out", "-"});
    EXPECT_EQ(r.code, wpd::cli::kOk);
    EXPECT_TRUE(has(r.out, "<svg"));
    EXPECT_EQ(run({"svg", "--builtin", "cube:3"}).code, wpd::cli::kInputError);
}

TEST(Cli, DocumentedExamples) {
    auto count = run({"count", "--builtin", "interval:2", "--symbolic"});
    EXPECT_TRUE(has(count.out, "weighted count: 1 + 2/(1+y)\n")) << count.out;
    auto chi = run({"chi", "--builtin", "interval:1", "--y", "3", "--z", "2"});
    EXPECT_TRUE(has(chi.out, "lhs: 3/4\nrhs: 3/4\nEQUAL\n")) << chi.out;
    auto dec = run({"decompose", "--builtin", "simplex:2,2", "--seed", "2"});
    EXPECT_EQ(dec.code, wpd::cli::kOk);
    EXPECT_TRUE(has(dec.out, "cone (0, 0) sign + flips 2"));
    EXPECT_TRUE(has(dec.out, "cone (0, 2) sign + flips 0"));
    EXPECT_TRUE(has(dec.out, "cone (2, 0) sign - flips 1"));
    auto oct = run({"vertices", WPD_TEST_DATA "/octahedron.json"});
    EXPECT_EQ(oct.code, wpd::cli::kInputError);
    EXPECT_TRUE(has(oct.err, "not simple"));
}

TEST(Cli, Decimal) {
    auto r = run({"count", "--builtin", "cube:2", "--y", "2", "--decimal", "3"});
    EXPECT_TRUE(has(r.out, "weighted count at y: 0.444")) << r.out;
}
