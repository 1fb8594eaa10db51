#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cli_cases.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(bool(in), "cannot open ", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("golden outputs and exit codes for every subcommand") {
    for (const auto& c : clicases::cases()) {
        CAPTURE(c.name);
        auto r = clicases::run(CSUM_BIN, clicases::expand(c.args, CSUM_TEST_DATA));
        CHECK(r.exit_code == c.expected_exit);
        CHECK(r.output == slurp(std::string(CSUM_GOLDEN) + "/" + c.name + ".txt"));
    }
}

TEST_CASE("determinism: repeated runs are byte-identical") {
    const std::string args =
        clicases::expand("complete --balanced --target {d}/zero23_z5.mat {d}/ex3x.mat --all",
                         CSUM_TEST_DATA);
    auto a = clicases::run(CSUM_BIN, args);
    auto b = clicases::run(CSUM_BIN, args);
    CHECK(a.output == b.output);
    CHECK(a.exit_code == 0);
}

TEST_CASE("streamed completions match the reported count") {
    auto count = clicases::run(
        CSUM_BIN, clicases::expand("complete --balanced --target {d}/zero23_z5.mat "
                                   "{d}/ex3x.mat --count",
                                   CSUM_TEST_DATA));
    auto all = clicases::run(
        CSUM_BIN, clicases::expand("complete --balanced --target {d}/zero23_z5.mat "
                                   "{d}/ex3x.mat --all",
                                   CSUM_TEST_DATA));
    long lines = std::count(all.output.begin(), all.output.end(), '\n');
    CHECK(std::to_string(lines) + "\n" == count.output);
}

TEST_CASE("usage and unsupported exit codes") {
    // ragged input file -> parse error, exit 2
    auto bad = clicases::run(CSUM_BIN, clicases::expand("collapse {d}/ragged.mat", CSUM_TEST_DATA));
    CHECK(bad.exit_code == 2);
    // unknown subcommand -> usage error, exit 2
    auto usage = clicases::run(CSUM_BIN, "frobnicate");
    CHECK(usage.exit_code == 2);
    // enumerating completions over the integers -> unsupported, exit 3
    auto unsup = clicases::run(
        CSUM_BIN,
        clicases::expand("complete --balanced --target {d}/zero23_int.mat {d}/blank34_int.mat --all",
                         CSUM_TEST_DATA));
    CHECK(unsup.exit_code == 3);
}
