#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "logmonoid/cones.hpp"
#include "logmonoid/error.hpp"
#include "support/oracles.hpp"

#include <functional>
#include <map>
#include <random>

using namespace logmonoid;

namespace {

RationalCone cone(Index d, std::initializer_list<std::initializer_list<long long>> rays) {
    std::vector<IntVector> v;
    for (auto r : rays) v.push_back(int_vector(r));
    return RationalCone(d, v);
}

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> v;
    for (auto r : rows) v.push_back(int_vector(r));
    return v;
}

RationalCone random_cone(std::mt19937_64& rng, Index d, int max_rays, long long bound) {
    std::vector<IntVector> rays;
    int n = static_cast<int>(oracle::uniform(rng, 1, max_rays));
    for (int i = 0; i < n; ++i) {
        IntVector r(d);
        for (Index j = 0; j < d; ++j) r(j) = oracle::uniform(rng, -bound, bound);
        rays.push_back(r);
    }
    return RationalCone(d, rays);
}

// Is x a nonnegative integer combination of hb? Depth-first with a positive grading.
bool decomposes(const std::vector<IntVector>& hb, const IntVector& g, const IntVector& x,
                std::map<IntVector, bool, LexLess>& memo) {
    if (is_zero(x)) return true;
    if (dot(g, x).sign() <= 0) return false;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& h : hb)
        if (decomposes(hb, g, IntVector(x - h), memo)) {
            ok = true;
            break;
        }
    memo[x] = ok;
    return ok;
}

}  // namespace

TEST_CASE("dual cone examples") {
    CHECK(dual_cone(cone(2, {{1, 0}, {0, 1}})) == cone(2, {{1, 0}, {0, 1}}));
    CHECK(dual_cone(cone(2, {{1, 0}, {1, 2}})) == cone(2, {{0, 1}, {2, -1}}));
    CHECK(dual_cone(cone(1, {{1}, {-1}})).is_zero());
    CHECK(dual_cone(RationalCone(2, {})) == cone(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    // Half-plane: dual is a ray.
    CHECK(dual_cone(cone(2, {{1, 0}, {-1, 0}, {0, 1}})) == cone(2, {{0, 1}}));
}

TEST_CASE("cone containment") {
    CHECK(contains(cone(2, {{1, 0}, {0, 1}}), int_vector({3, 5})));
    CHECK(!contains(cone(2, {{1, 0}, {0, 1}}), int_vector({-1, 0})));
    CHECK(contains(cone(2, {{1, 0}, {1, 2}}), int_vector({2, 1})));
    CHECK(!contains(cone(2, {{1, 0}, {1, 2}}), int_vector({0, 1})));
    CHECK(contains(cone(3, {{1, 0, 0}, {0, 1, 0}}), int_vector({2, 3, 0})));
    CHECK(!contains(cone(3, {{1, 0, 0}, {0, 1, 0}}), int_vector({2, 3, 1})));
    CHECK_THROWS_AS(contains(cone(2, {{1, 0}}), int_vector({1})), InputError);
}

TEST_CASE("hilbert basis examples") {
    CHECK(hilbert_basis(cone(2, {{1, 0}, {1, 2}})) == vecs({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(hilbert_basis(cone(2, {{1, 0}, {0, 1}})) == vecs({{0, 1}, {1, 0}}));
    CHECK(hilbert_basis(cone(2, {{1, 0}, {1, 3}})) == vecs({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    CHECK(hilbert_basis(RationalCone(3, {})).empty());
    CHECK_THROWS_AS(hilbert_basis(cone(1, {{1}, {-1}})), InputError);
    // Lower-dimensional cone inside Z^3; its span lattice is the plane x = z.
    CHECK(hilbert_basis(cone(3, {{2, 0, 2}, {0, 1, 0}})) == vecs({{0, 1, 0}, {1, 0, 1}}));
    // The cone over a square with apex-free corners has a non-simplicial facet structure.
    CHECK(hilbert_basis(cone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}})) ==
          vecs({{-1, 0, 1}, {0, -1, 1}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}}));
}

TEST_CASE("lineality space") {
    CHECK(lineality_space(cone(2, {{1, 0}, {0, 1}})).empty());
    CHECK(lineality_space(cone(2, {{1, 0}, {-1, 0}, {0, 1}})) == vecs({{1, 0}}));
    CHECK(lineality_space(cone(1, {{1}, {-1}})) == vecs({{1}}));
    CHECK(lineality_space(cone(2, {{1, 1}, {-2, -2}, {0, 1}})) == vecs({{1, 1}}));
}

TEST_CASE("extreme rays and grading") {
    RationalCone c = cone(2, {{1, 0}, {1, 1}, {1, 2}});
    CHECK(extreme_rays(c) == vecs({{1, 0}, {1, 2}}));
    IntVector g = positive_grading(c);
    for (const auto& r : c.rays()) CHECK(dot(g, r).sign() > 0);
}

TEST_CASE("double dual recovers the cone") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Index d = oracle::uniform(rng, 1, 4);
        RationalCone c = random_cone(rng, d, 5, 3);
        RationalCone dd = dual_cone(dual_cone(c));
        for (const auto& r : c.rays()) CHECK(contains(dd, r));
        for (const auto& r : dd.rays()) CHECK(contains(c, r));
    }
}

TEST_CASE("dual inequalities agree with the cone oracle") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        Index d = oracle::uniform(rng, 1, 3);
        RationalCone c = random_cone(rng, d, 4, 3);
        std::vector<oracle::Vec> gens;
        for (const auto& r : c.rays()) gens.push_back(oracle::to_vec(r));
        for (int probe = 0; probe < 20; ++probe) {
            oracle::Vec x(static_cast<size_t>(d));
            for (auto& v : x) v = oracle::uniform(rng, -4, 4);
            CHECK(contains(c, oracle::to_int(x)) == oracle::in_cone(gens, x));
        }
    }
}

TEST_CASE("hilbert basis matches exhaustive search") {
    std::mt19937_64 rng(21);
    int checked = 0;
    while (checked < 60) {
        Index d = oracle::uniform(rng, 1, 3);
        RationalCone c = random_cone(rng, d, 4, 4);
        if (c.is_zero() || !is_pointed(c)) continue;
        std::vector<oracle::Vec> gens;
        for (const auto& r : c.rays()) gens.push_back(oracle::to_vec(r));
        std::vector<IntVector> expect;
        for (const auto& h : oracle::hilbert_basis_by_search(gens)) expect.push_back(oracle::to_int(h));
        sort_unique(expect);
        CHECK(hilbert_basis(c) == expect);
        ++checked;
    }
}

TEST_CASE("hilbert basis is irreducible and generating") {
    std::mt19937_64 rng(33);
    int checked = 0;
    while (checked < 30) {
        Index d = oracle::uniform(rng, 2, 3);
        RationalCone c = random_cone(rng, d, 4, 3);
        if (c.is_zero() || !is_pointed(c)) continue;
        auto hb = hilbert_basis(c);
        IntVector g = positive_grading(c);
        for (size_t i = 0; i < hb.size(); ++i)
            for (size_t j = 0; j < hb.size(); ++j) {
                IntVector rest = hb[i] - hb[j];
                if (i != j) CHECK(!(contains(c, rest) && !is_zero(rest)));
            }
        std::map<IntVector, bool, LexLess> memo;
        std::vector<long long> x(static_cast<size_t>(d), -10);
        for (;;) {
            long long s = 0;
            for (auto v : x) s += std::llabs(v);
            if (s <= 10) {
                IntVector p = oracle::to_int(x);
                if (contains(c, p)) CHECK(decomposes(hb, g, p, memo));
            }
            size_t i = 0;
            while (i < x.size() && ++x[i] > 10) x[i++] = -10;
            if (i == x.size()) break;
        }
        ++checked;
    }
}
