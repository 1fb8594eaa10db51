#include <doctest.h>

#include <cstdlib>
#include <set>
#include <string>

#include "csum/completion.hpp"
#include "csum/oracle.hpp"
#include "test_util.hpp"

using namespace csum;

namespace {

const Group Z = Group::integers();
const Group Z2 = Group::mod(2);
const Group Z5 = Group::mod(5);

PartialMatrix from_rows(const Group& g,
                        std::initializer_list<std::initializer_list<const char*>> rows) {
    PartialMatrix out(g, static_cast<int>(rows.size()),
                      static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const char* tok : row) {
            if (std::string(tok) != "*")
                out.set(i, j, std::atoll(tok));
            ++j;
        }
        ++i;
    }
    return out;
}

PartialMatrix figure1() {
    return from_rows(Z, {{"3", "0", "*", "*"}, {"8", "*", "2", "0"}, {"*", "1", "*", "7"}});
}

PartialMatrix example3x() {
    return from_rows(Z5, {{"0", "*", "1", "*"}, {"*", "*", "*", "2"}, {"1", "*", "2", "*"}});
}

PartialMatrix random_partial(std::mt19937_64& rng, const Group& g, int m, int n,
                             double fill) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> val(
        g.finite() ? 0 : -50, g.finite() ? g.modulus() - 1 : 50);
    PartialMatrix a(g, m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (coin(rng) < fill)
                a.set(i, j, val(rng));
    return a;
}

} // namespace

TEST_CASE("incidence graph of the 3x4 connected pattern") {
    auto g = build_graph(figure1());
    CHECK(g.edges.size() == 7);
    CHECK(g.component_count == 1);
    std::vector<std::pair<int, int>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 2},
                                              {1, 3}, {2, 1}, {2, 3}};
    CHECK(g.edges == expected);
}

TEST_CASE("incidence graph with three components") {
    auto g = build_graph(example3x());
    CHECK(g.edges.size() == 5);
    CHECK(g.component_count == 3);
    // {x1, x3, y1, y3}, {x2, y4}, {y2}
    CHECK(g.component_of_row(0) == 0);
    CHECK(g.component_of_row(2) == 0);
    CHECK(g.component_of_col(0) == 0);
    CHECK(g.component_of_col(2) == 0);
    CHECK(g.component_of_row(1) == 1);
    CHECK(g.component_of_col(3) == 1);
    CHECK(g.component_of_col(1) == 2);
}

TEST_CASE("all-blank graph is edgeless") {
    auto g = build_graph(PartialMatrix(Z, 3, 5));
    CHECK(g.edges.empty());
    CHECK(g.component_count == 8);
}

TEST_CASE("cycle balance") {
    auto fig1 = cycle_balance(figure1());
    CHECK_FALSE(fig1.balanced);
    REQUIRE(fig1.violation.has_value());
    CHECK(fig1.violation->sum != 0);
    CHECK(fig1.violation->vertices.size() >= 4);

    auto bad = cycle_balance(PartialMatrix::from_dense(DenseMatrix(Z, {{0, 0}, {0, 1}})));
    CHECK_FALSE(bad.balanced);
    CHECK(bad.violation->vertices.size() == 4);
    CHECK(bad.violation->sum != 0);

    // forests are trivially cycle-balanced
    CHECK(is_cycle_balanced(example3x()));
    CHECK(is_cycle_balanced(PartialMatrix(Z, 4, 4)));
}

TEST_CASE("consistency checks") {
    CHECK(check_consistency(example3x(), DenseMatrix(Z5, 2, 3), Flavor::balanced));
    CHECK_FALSE(check_consistency(PartialMatrix::from_dense(DenseMatrix(Z, {{0, 0}, {0, 1}})),
                                  DenseMatrix(Z, {{0}}), Flavor::balanced));
    CHECK(check_consistency(PartialMatrix(Z, 4, 4), DenseMatrix(Z, 3, 3), Flavor::balanced));
}

TEST_CASE("connected pattern forces the single blank") {
    auto a = from_rows(Z, {{"0", "0"}, {"0", "*"}});
    auto out = complete(a, DenseMatrix(Z, {{7}}), Flavor::balanced);
    REQUIRE(out.consistent);
    CHECK((*out.witness)(1, 1) == 7);
    CHECK(out.component_count == 1);
    CHECK(out.unique);
    CHECK(*out.completion_count == 1);
}

TEST_CASE("worked Z5 instance: witness, count, enumeration") {
    auto a = example3x();
    DenseMatrix zero(Z5, 2, 3);
    auto out = complete(a, zero, Flavor::balanced);
    REQUIRE(out.consistent);
    CHECK(a.extended_by(*out.witness));
    CHECK(collapse_balanced(*out.witness).is_zero());
    CHECK(out.component_count == 3);
    CHECK_FALSE(out.unique);
    CHECK(*out.completion_count == 25);

    auto all = enumerate_completions(a, zero, Flavor::balanced);
    CHECK(all.size() == 25);
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& c : all) {
        CHECK(a.extended_by(c));
        CHECK(collapse_balanced(c).is_zero());
        seen.insert(c.data());
    }
    CHECK(seen.size() == 25);

    // the published completion is among them
    DenseMatrix paper_c(Z5, {{0, 1, 1, 3}, {4, 0, 0, 2}, {1, 2, 2, 4}});
    CHECK(seen.count(paper_c.data()) == 1);
}

TEST_CASE("all-blank 2x2 over Z2 yields the kernel") {
    PartialMatrix a(Z2, 2, 2);
    DenseMatrix zero(Z2, 1, 1);
    auto out = complete(a, zero, Flavor::balanced);
    REQUIRE(out.consistent);
    CHECK(*out.completion_count == 8);

    auto all = enumerate_completions(a, zero, Flavor::balanced);
    CHECK(all.size() == 8);
    for (const auto& c : all)
        CHECK(in_kernel(c, Flavor::balanced));
}

TEST_CASE("inconsistent input: no witness, zero count, empty enumeration") {
    auto a = PartialMatrix::from_dense(DenseMatrix(Z2, {{0, 0}, {0, 1}}));
    DenseMatrix zero(Z2, 1, 1);
    auto out = complete(a, zero, Flavor::balanced);
    CHECK_FALSE(out.consistent);
    CHECK_FALSE(out.witness.has_value());
    CHECK(*out.completion_count == 0);
    CHECK_FALSE(out.unique);
    REQUIRE(out.violation.has_value());
    CHECK(enumerate_completions(a, zero, Flavor::balanced).empty());
}

TEST_CASE("infinite group counting") {
    auto a = from_rows(Z, {{"0", "0"}, {"0", "*"}});
    auto out = complete(a, DenseMatrix(Z, {{3}}), Flavor::balanced);
    CHECK(out.completion_count.has_value());
    CHECK(*out.completion_count == 1);

    PartialMatrix blank(Z, 2, 2);
    auto out2 = complete(blank, DenseMatrix(Z, {{3}}), Flavor::balanced);
    CHECK(out2.consistent);
    CHECK_FALSE(out2.completion_count.has_value()); // infinitely many

    CHECK_THROWS_AS(enumerate_completions(blank, DenseMatrix(Z, {{3}}), Flavor::balanced),
                    unsupported_error);
}

TEST_CASE("uniqueness depends only on the blank pattern") {
    CHECK(uniqueness(figure1()));
    CHECK_FALSE(uniqueness(example3x()));

    // first row and column specified: star-shaped, connected
    PartialMatrix star(Z, 4, 5);
    for (int j = 0; j < 5; ++j)
        star.set(0, j, 1);
    for (int i = 0; i < 4; ++i)
        star.set(i, 0, 1);
    CHECK(uniqueness(star));
}

TEST_CASE("degenerate target dimensions are rejected") {
    CHECK_THROWS_AS(complete(PartialMatrix(Z, 1, 3), DenseMatrix(Z, 1, 2), Flavor::balanced),
                    dimension_error);
    CHECK_THROWS_AS(complete(PartialMatrix(Z, 3, 3), DenseMatrix(Z, 3, 3), Flavor::balanced),
                    dimension_error);
    CHECK_THROWS_AS(complete(PartialMatrix(Z, 3, 3), DenseMatrix(Z5, 2, 2), Flavor::balanced),
                    group_mismatch_error);
}

TEST_CASE("solver agrees with brute force on random instances") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 120; ++t) {
        const Group g = t % 2 ? Group::mod(3) : Z2;
        int m = 2 + t % 2, n = 2 + t % 3;
        auto a = random_partial(rng, g, m, n, 0.5);
        auto b = testutil::random_mod_matrix(rng, g, m - 1, n - 1);
        Flavor f = t % 3 ? Flavor::balanced : Flavor::unbalanced;

        auto brute = oracle::brute_completions(a, b, f);
        auto out = complete(a, b, f);
        CHECK(BigInt(brute.size()) == *out.completion_count);
        CHECK(out.consistent == !brute.empty());
        if (out.consistent) {
            CHECK(a.extended_by(*out.witness));
            CHECK(collapse(*out.witness, f) == b);
            // enumeration set equals the brute set
            std::set<std::vector<std::int64_t>> bs, es;
            for (const auto& c : brute)
                bs.insert(c.data());
            for (const auto& c : enumerate_completions(a, b, f))
                es.insert(c.data());
            CHECK(bs == es);
        }
    }
}

TEST_CASE("every 4-cycle of a solved completion is balanced") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 40; ++t) {
        auto a = random_partial(rng, Z5, 3, 4, 0.3);
        DenseMatrix b = testutil::random_mod_matrix(rng, Z5, 2, 3);
        auto out = complete(a, b, Flavor::balanced);
        if (!out.consistent)
            continue;
        auto reduced = subtract_dense(PartialMatrix::from_dense(*out.witness),
                                      plus_construction(b));
        for (const auto& c : oracle::brute_cycles(reduced))
            CHECK(c.balanced);
    }
}

TEST_CASE("unbalanced outcomes equal balanced outcomes of conjugated inputs") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        auto a = random_partial(rng, Group::mod(3), 3, 3, 0.5);
        auto b = testutil::random_mod_matrix(rng, Group::mod(3), 2, 2);
        auto direct = complete(a, b, Flavor::unbalanced);
        auto conj = complete(checkerboard(a), checkerboard(b), Flavor::balanced);
        CHECK(direct.consistent == conj.consistent);
        CHECK(direct.component_count == conj.component_count);
        CHECK(*direct.completion_count == *conj.completion_count);
        if (direct.consistent)
            CHECK(*direct.witness == checkerboard(*conj.witness));
    }
}

TEST_CASE("path sums agree across alternative paths") {
    // on cycle-balanced instances, any two x_s -> y_t paths give the same
    // alternating sum; checked against every simple cycle being balanced
    std::mt19937_64 rng(24);
    int balanced_seen = 0;
    for (int t = 0; t < 200; ++t) {
        auto a = random_partial(rng, Z2, 3, 3, 0.7);
        bool potential_verdict = is_cycle_balanced(a);
        bool all_cycles = true;
        for (const auto& c : oracle::brute_cycles(a))
            all_cycles &= c.balanced;
        CHECK(potential_verdict == all_cycles);
        balanced_seen += potential_verdict;
    }
    CHECK(balanced_seen > 0);
}
