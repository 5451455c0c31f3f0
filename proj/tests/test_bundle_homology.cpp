#include <random>

#include "doctest.h"

#include "support/oracle.hpp"
#include "support/random_problems.hpp"
#include "surfhom/bundle_homology.hpp"

using namespace surfhom;

namespace {

const IntegerMatrix ta1{{1, -1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
const IntegerMatrix tb1{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};

HolonomyProblem from_matrices(int h, BaseType base, int g, std::vector<IntegerMatrix> ms)
{
    std::vector<HolonomyEntry> entries;
    for (auto& m : ms)
        entries.push_back({std::move(m)});
    return make_problem(h, base, g, std::move(entries));
}

using Betti = std::array<long, 5>;

Verdict verdict_of(const BettiReport& r, const std::string& name)
{
    for (const auto& v : r.validations)
        if (v.name == name)
            return v.verdict;
    FAIL("no validation named " << name);
    return Verdict::fail;
}

/// Dimensions recomputed with textbook elimination.
struct NaiveDims {
    std::size_t W, Fix, K;
};

NaiveDims naive_dims(const HolonomyProblem& p)
{
    const std::size_t n = p.fiber_dim();
    oracle::QMat vertical;   // rows of all (M_i - I), for Fix
    oracle::QMat columns;    // columns of all (M_i - I) as rows, for W
    oracle::QMat horizontal(n); // [M_1 - I | ... | M_2g - I], for K
    for (const auto& m : p.matrices) {
        auto d = oracle::from(m.matrix());
        for (std::size_t i = 0; i < n; ++i)
            d[i][i] -= 1;
        vertical = oracle::stack(vertical, d);
        columns = oracle::stack(columns, oracle::transpose(d, n));
        for (std::size_t i = 0; i < n; ++i)
            horizontal[i].insert(horizontal[i].end(), d[i].begin(), d[i].end());
    }
    const std::size_t kcols = n * p.matrices.size();
    return {oracle::rank(columns), oracle::nullspace(vertical, n).size(),
            oracle::nullspace(horizontal, kcols).size()};
}

} // namespace

TEST_CASE("closed base, holonomy (Ta1, Ta1)")
{
    auto p = from_matrices(2, BaseType::closed, 1, {ta1, ta1});
    auto r = compute_homology(p);
    CHECK(r.dims.W == 1);
    CHECK(r.dims.Fix == 3);
    CHECK(r.dims.K == 7);
    CHECK(r.dims.rank_beta == 1);
    CHECK(r.betti == Betti{1, 5, 8, 5, 1});
    CHECK(r.all_pass());
}

TEST_CASE("one-boundary base, holonomy (Ta1, Ta1)")
{
    auto r = compute_homology(from_matrices(2, BaseType::one_boundary, 1, {ta1, ta1}));
    CHECK(r.betti == Betti{1, 5, 8, 2, 0});
    CHECK_FALSE(r.dims.rank_beta.has_value());
    CHECK(verdict_of(r, "poincare_duality") == Verdict::not_applicable);
    CHECK(r.all_pass());
}

TEST_CASE("one-boundary base, holonomy (Ta1, Tb1)")
{
    auto p = from_matrices(2, BaseType::one_boundary, 1, {ta1, tb1});
    auto r = compute_homology(p);
    CHECK(r.dims.W == 2);
    CHECK(r.evidence.Fix == Subspace::span(4, std::vector<RationalVector>{{0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(r.betti == Betti{1, 4, 7, 2, 0});
    CHECK(r.all_pass());
}

TEST_CASE("closed base, holonomy (-I, -I)")
{
    const auto m = -IntegerMatrix::identity(4);
    auto r = compute_homology(from_matrices(2, BaseType::closed, 1, {m, m}));
    CHECK(r.dims.W == 4);
    CHECK(r.dims.Fix == 0);
    CHECK(r.dims.K == 4);
    CHECK(r.dims.rank_beta == 4);
    CHECK(r.betti == Betti{1, 2, 2, 2, 1});
    CHECK(r.all_pass());
}

TEST_CASE("trivial holonomy reproduces Kunneth")
{
    for (int h = 2; h <= 4; ++h)
        for (int g = 1; g <= 3; ++g)
            for (auto base : {BaseType::closed, BaseType::one_boundary}) {
                std::vector<HolonomyEntry> entries(2 * static_cast<std::size_t>(g), HolonomyEntry{std::string()});
                auto r = compute_homology(make_problem(h, base, g, entries));
                CHECK(r.betti == kunneth_betti(h, g, base));
                CHECK(r.all_pass());
            }
    CHECK(kunneth_betti(3, 2, BaseType::closed) == Betti{1, 10, 26, 10, 1});
    CHECK(kunneth_betti(2, 1, BaseType::one_boundary) == Betti{1, 6, 9, 2, 0});
}

TEST_CASE("beta map for a genus-one base")
{
    // Q_1 = B^-1 A^-1 B A; blocks (I - A^-1 B A) and (A - Q_1). With B = A
    // these are I - A and A - I.
    auto p = from_matrices(2, BaseType::closed, 1, {ta1, ta1});
    auto beta = beta_map(p);
    REQUIRE(beta.rows() == 8);
    REQUIRE(beta.cols() == 4);
    const auto a = to_rational(ta1);
    const auto id = RationalMatrix::identity(4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(beta(r, c) == (id - a)(r, c));
            CHECK(beta(4 + r, c) == (a - id)(r, c));
        }
}

TEST_CASE("dimensions agree with textbook elimination on random tuples")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int h = 2 + static_cast<int>(rng() % 2);
        const int g = 1 + static_cast<int>(rng() % 2);
        auto p = trial % 2 ? testgen::random_bounded(rng, h, g, 6) : testgen::random_closed(rng, h, g, 6);
        auto r = compute_homology(p);
        auto naive = naive_dims(p);
        CHECK(r.dims.W == naive.W);
        CHECK(r.dims.Fix == naive.Fix);
        CHECK(r.dims.K == naive.K);
        CHECK(r.dims.K == 4 * static_cast<std::size_t>(g * h) - r.dims.W);
        if (r.dims.rank_beta)
            CHECK(*r.dims.rank_beta == oracle::rank(oracle::from(*r.evidence.beta)));
        CHECK(r.all_pass());
    }
}

TEST_CASE("non-commuting closed genus-two tuples")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        auto ms = testgen::noncommuting_genus_two(testgen::random_element(rng, 2, 5),
                                                  testgen::random_element(rng, 2, 5));
        auto r = compute_homology(make_problem(2, BaseType::closed, 2, ms));
        CHECK(r.betti[1] == r.betti[3]);
        CHECK(r.all_pass());
    }
}

TEST_CASE("cylinder space satisfies the gluing condition")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = testgen::random_bounded(rng, 2, 1 + static_cast<int>(rng() % 2), 5);
        auto k = cylinder_space(p);
        for (const auto& v : k.basis())
            CHECK(CylinderClass::from_flat(v, p.generator_count()).satisfies_gluing(p));
    }
    auto p = from_matrices(2, BaseType::one_boundary, 1, {ta1, tb1});
    RationalVector bad(8);
    bad[1] = 1; // (M_1 - I) b1 = -a1, not cancelled
    CHECK_FALSE(CylinderClass::from_flat(bad, 2).satisfies_gluing(p));
    CHECK_THROWS(CylinderClass::from_flat(RationalVector(7), 2));
}

TEST_CASE("validator catches a forged report")
{
    auto r = compute_homology(from_matrices(2, BaseType::closed, 1, {ta1, ta1}));
    REQUIRE(r.all_pass());
    auto forged = r;
    forged.betti[3] += 1;
    forged.validations = validate_report(forged);
    CHECK(verdict_of(forged, "poincare_duality") == Verdict::fail);
    CHECK(verdict_of(forged, "euler_characteristic") == Verdict::fail);
    CHECK_FALSE(forged.all_pass());

    auto wrong_fix = r;
    wrong_fix.evidence.Fix = Subspace::zero(4);
    wrong_fix.validations = validate_report(wrong_fix);
    CHECK(verdict_of(wrong_fix, "beta_kernel") == Verdict::fail);
}

TEST_CASE("one listed generator per Betti number in positive degree")
{
    auto r = compute_homology(from_matrices(2, BaseType::closed, 1, {ta1, ta1}));
    std::array<long, 5> counted{};
    for (const auto& g : r.generators)
        ++counted[static_cast<std::size_t>(g.degree)];
    for (std::size_t d = 1; d < 5; ++d)
        CHECK(counted[d] == r.betti[d]);
    bool saw_euler = false;
    for (const auto& g : r.generators)
        if (g.label == GeneratorLabel::euler_dual) {
            saw_euler = true;
            CHECK(g.boundary_coefficient == Integer(-2));
        }
    CHECK(saw_euler);
}
