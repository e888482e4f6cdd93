#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "logmonoid/error.hpp"
#include "logmonoid/kummer.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <functional>
#include <set>
#include <string>

using namespace logmonoid;

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> v;
    for (auto r : rows) v.push_back(int_vector(r));
    return v;
}

MonoidHom scalar(long long n) {
    IntegralMonoid z = IntegralMonoid::free(1);
    return MonoidHom(z, z, GroupHom(z.ambient(), z.ambient(), int_matrix({{n}})));
}

MonoidHom diagonal(std::initializer_list<long long> ns) {
    Index r = static_cast<Index>(ns.size());
    IntegralMonoid z = IntegralMonoid::free(r);
    IntMatrix m = zero_matrix(r, r);
    Index i = 0;
    for (long long n : ns) {
        m(i, i) = n;
        ++i;
    }
    return MonoidHom(z, z, GroupHom(z.ambient(), z.ambient(), m));
}

// Torsion part of Z^n / (columns of m), from minors.
std::vector<Integer> oracle_torsion(const IntMatrix& m) {
    std::vector<Integer> out;
    for (const auto& d : oracle::invariant_factors(oracle::to_mat(m)))
        if (d > Integer(1)) out.push_back(d);
    return out;
}

std::set<Integer> primes(std::initializer_list<long long> ps) {
    std::set<Integer> s;
    for (long long p : ps) s.insert(Integer(p));
    return s;
}

// Z_{>=0}^2 -> <e1, e2, (e1 + e2)/2>, the target written in its own group.
MonoidHom half_diagonal() {
    EmbeddedMonoid q = generated_submonoid(FinAbGroup::free(2), vecs({{2, 0}, {0, 2}, {1, 1}}));
    std::vector<IntVector> imgs{*preimage(q.inclusion, int_vector({2, 0})), *preimage(q.inclusion, int_vector({0, 2}))};
    return MonoidHom::from_images(IntegralMonoid::free(2), q.monoid, imgs);
}

}  // namespace

TEST_CASE("is_kummer examples") {
    CHECK(is_kummer(scalar(3)).ok);
    CHECK(is_kummer(MonoidHom::identity(IntegralMonoid::free(2))).ok);

    IntegralMonoid n = IntegralMonoid::free(1), n2 = IntegralMonoid::free(2);
    KummerCheck e1 = is_kummer(MonoidHom(n, n2, GroupHom(n.ambient(), n2.ambient(), int_matrix({{1}, {0}}))));
    CHECK(!e1.ok);
    CHECK(e1.clause == "finite_cokernel");
    REQUIRE(e1.witness);
    CHECK(*e1.witness == int_vector({0, 1}));

    KummerCheck add = is_kummer(MonoidHom(n2, n, GroupHom(n2.ambient(), n.ambient(), int_matrix({{1, 1}}))));
    CHECK(add.clause == "injective");

    IntegralMonoid z = IntegralMonoid::group(FinAbGroup::free(1));
    KummerCheck grp = is_kummer(MonoidHom(n, z, GroupHom::identity(n.ambient())));
    CHECK(grp.clause == "multiples");
    REQUIRE(grp.witness);
    CHECK(*grp.witness == int_vector({-1}));

    CHECK(is_kummer(half_diagonal()).ok);
    IntegralMonoid ns = generated_submonoid(FinAbGroup::free(1), vecs({{2}, {3}})).monoid;
    CHECK_THROWS_AS(is_kummer(MonoidHom::identity(ns)), PreconditionError);
}

TEST_CASE("cokernel groups") {
    CHECK(cokernel_group(scalar(5)) == FinAbGroup(0, {5}));
    CHECK(cokernel_group(diagonal({2, 3})) == FinAbGroup(0, {6}));
    CHECK(cokernel_group(MonoidHom::identity(IntegralMonoid::free(3))).is_trivial());
    CHECK(cokernel_group(half_diagonal()) == FinAbGroup(0, {2}));
}

TEST_CASE("cokernels agree with minors") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        MonoidHom u = gen::kummer(rng);
        FinAbGroup g = cokernel_group(u);
        CHECK(g.is_finite());
        CHECK(g.torsion() == oracle_torsion(u.gp().matrix()));
    }
}

TEST_CASE("self product examples") {
    SelfProduct two = self_product_decomposition(kummer_data(scalar(2)));
    CHECK(two.sum.monoid.ambient() == FinAbGroup(1, {2}));
    CHECK(two.split_group.group == FinAbGroup(1, {2}));
    CHECK(two.split.num_generators() == 2);

    SelfProduct id = self_product_decomposition(kummer_data(MonoidHom::identity(IntegralMonoid::free(2))));
    CHECK(id.split_group.group == FinAbGroup::free(2));
    CHECK(id.sum.monoid == IntegralMonoid::free(2));

    SelfProduct d23 = self_product_decomposition(kummer_data(diagonal({2, 3})));
    CHECK(d23.split_group.group == FinAbGroup(2, {6}));
    CHECK(d23.sum.monoid.ambient() == FinAbGroup(2, {6}));
}

TEST_CASE("self product maps are inverse and respect the coprojections") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        KummerData d = kummer_data(gen::kummer(rng, 2));
        SelfProduct s = self_product_decomposition(d);
        const FinAbGroup& Q = d.hom.target().ambient();
        for (Index k = 0; k < Q.dim(); ++k) {
            IntVector e = Q.basis(k);
            IntVector b = s.psi.apply(s.sum.coprojection2.apply(e));
            CHECK(s.split_group.proj1.apply(b) == e);
            CHECK(s.split_group.proj2.apply(b) == d.cokernel.projection.apply(e));
            IntVector a = s.psi.apply(s.sum.coprojection1.apply(e));
            CHECK(a == s.split_group.inj1.apply(e));
        }
        CHECK(compose(s.phi, s.psi).gp() == GroupHom::identity(s.sum.monoid.ambient()));
        CHECK(compose(s.psi, s.phi).gp() == GroupHom::identity(s.split_group.group));
    }
}

TEST_CASE("ramification index examples") {
    CHECK(ramification_index(kummer_data(scalar(4))) == Integer(4));
    CHECK(ramification_index(kummer_data(MonoidHom::identity(IntegralMonoid::free(2)))) == Integer(1));
    CHECK(ramification_index(kummer_data(half_diagonal())) == Integer(2));
    CHECK(ramification_index(kummer_data(diagonal({2, 3}))) == Integer(6));
}

TEST_CASE("ramification index is the exponent") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        KummerData d = kummer_data(gen::kummer(rng));
        auto t = oracle_torsion(d.hom.gp().matrix());
        Integer e = t.empty() ? Integer(1) : t.back();
        CHECK(ramification_index(d) == e);
    }
}

TEST_CASE("kummer homs are exact") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 40; ++trial) {
        MonoidHom u = gen::kummer(rng);
        REQUIRE(is_kummer(u).ok);
        HomProperties h = hom_properties(u);
        REQUIRE(h.exact);
        CHECK(*h.exact);
        CHECK(h.injective);
    }
}

TEST_CASE("multiples on generators give multiples everywhere") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 30; ++trial) {
        KummerData d = kummer_data(gen::kummer(rng));
        MembershipOracle p(d.hom.source());
        const auto& gens = d.hom.target().generators();
        for (int probe = 0; probe < 10; ++probe) {
            IntVector x = d.hom.target().ambient().zero();
            for (const auto& g : gens) x += Integer(oracle::uniform(rng, 0, 3)) * g;
            auto pre = preimage(d.hom.gp(), IntVector(d.exponent * x));
            REQUIRE(pre);
            CHECK(p.contains(*pre));
        }
    }
}

TEST_CASE("minimal divided factorization") {
    DividedFactorization two = minimal_divided_factorization(kummer_data(scalar(2)));
    CHECK(two.n == Integer(2));
    CHECK(two.embedding.gp().matrix() == int_matrix({{1}}));
    CHECK(minimal_divided_factorization(kummer_data(MonoidHom::identity(IntegralMonoid::free(2)))).n == Integer(1));
    DividedFactorization half = minimal_divided_factorization(kummer_data(half_diagonal()));
    CHECK(half.n == Integer(2));
    CHECK(compose(half.embedding, half_diagonal()).gp() == half.division.inclusion.gp());
}

TEST_CASE("log smooth chart conditions") {
    CHECK(log_smooth_chart_check(scalar(3), primes({3})).ok);
    ChartCheck bad = log_smooth_chart_check(scalar(3), primes({2}));
    CHECK(!bad.ok);
    CHECK(bad.bad_primes == std::vector<Integer>{Integer(3)});
    IntegralMonoid n = IntegralMonoid::free(1), n2 = IntegralMonoid::free(2);
    MonoidHom e1(n, n2, GroupHom(n.ambient(), n2.ambient(), int_matrix({{1}, {0}})));
    CHECK(log_smooth_chart_check(e1, {}).ok);
    CHECK(log_smooth_chart_check(diagonal({2, 3}), primes({2, 3})).ok);
    CHECK(!log_smooth_chart_check(diagonal({2, 3}), primes({2})).ok);
    MonoidHom add(n2, n, GroupHom(n2.ambient(), n.ambient(), int_matrix({{1, 1}})));
    ChartCheck inf = log_smooth_chart_check(add, primes({2}));
    CHECK(!inf.ok);
    CHECK(inf.kernel == FinAbGroup::free(1));
}

TEST_CASE("log differentials") {
    IntegralMonoid triv(FinAbGroup::free(0), {});
    IntegralMonoid n3 = IntegralMonoid::free(3);
    LogDifferentials free3 = log_differentials_module(MonoidHom(triv, n3, GroupHom::zero(triv.ambient(), n3.ambient())), {});
    CHECK(free3.relative_dimension == 3);
    CHECK(free3.group == FinAbGroup::free(3));
    CHECK(free3.basis_lifts.size() == 3);
    LogDifferentials five = log_differentials_module(scalar(5), primes({5}));
    CHECK(five.group == FinAbGroup(0, {5}));
    CHECK(five.relative_dimension == 0);
    CHECK(log_differentials_module(MonoidHom::identity(n3), {}).group.is_trivial());
    CHECK_THROWS_AS(log_differentials_module(scalar(5), primes({2})), PreconditionError);
}

TEST_CASE("abhyankar classification examples") {
    CHECK(abhyankar_classify(1, {Integer(2)}).size() == 2);
    CHECK(abhyankar_classify(2, {Integer(2), Integer(2)}).size() == 5);
    auto one = abhyankar_classify(1, {Integer(1)});
    REQUIRE(one.size() == 1);
    CHECK(one[0].generators == vecs({{1}}));
    CHECK_THROWS_AS(abhyankar_classify(1, {Integer(7)}), BoundExceeded);
    CHECK_THROWS_AS(abhyankar_classify(5, std::vector<Integer>(5, Integer(2))), BoundExceeded);
    CHECK_THROWS_AS(abhyankar_classify(2, {Integer(2)}), InputError);
}

TEST_CASE("abhyankar monoids are lattice slices of the orthant") {
    std::vector<std::vector<Integer>> cases{{Integer(2), Integer(2)}, {Integer(2), Integer(3)}, {Integer(4), Integer(2)},
                                            {Integer(3), Integer(3)}, {Integer(2), Integer(2), Integer(2)}};
    for (const auto& d : cases) {
        const Index r = static_cast<Index>(d.size());
        auto out = abhyankar_classify(r, d);
        // Count subgroups of + Z/d_i by brute force: distinct closures of pairs of elements in rank 2,
        // or triples in rank 3.
        std::vector<IntVector> elems;
        std::vector<long long> x(d.size(), 0);
        for (;;) {
            elems.push_back(oracle::to_int(x));
            size_t i = 0;
            while (i < x.size() && ++x[i] >= d[i].to_ll()) x[i++] = 0;
            if (i == x.size()) break;
        }
        auto reduce = [&](IntVector v) {
            for (Index i = 0; i < r; ++i) v(i) = mod(v(i), d[static_cast<size_t>(i)]);
            return v;
        };
        std::set<std::string> subgroups;
        std::function<void(std::set<IntVector, LexLess>, size_t)> grow = [&](std::set<IntVector, LexLess> s, size_t depth) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& a : std::vector<IntVector>(s.begin(), s.end()))
                    for (const auto& b : std::vector<IntVector>(s.begin(), s.end()))
                        changed = s.insert(reduce(a + b)).second || changed;
            }
            std::string key;
            for (const auto& v : s) key += to_string(v);
            subgroups.insert(key);
            if (depth == 0) return;
            for (const auto& e : elems) {
                auto t = s;
                t.insert(e);
                grow(t, depth - 1);
            }
        };
        grow({zero_vector(r)}, static_cast<size_t>(r));
        CHECK(out.size() == subgroups.size());

        std::set<std::string> distinct;
        for (const auto& m : out) {
            std::string key;
            for (const auto& g : m.generators) key += to_string(g);
            CHECK(distinct.insert(key).second);
            MembershipOracle q(m.monoid);
            // Every orthant point of Q^gp with small coordinates lies in Q.
            IntMatrix B = m.lattice;
            std::vector<long long> y(static_cast<size_t>(r), 0);
            for (;;) {
                IntVector p = oracle::to_int(y);
                auto c = solve_integer(B, p);
                if (c) CHECK(q.contains(*c));
                size_t i = 0;
                while (i < y.size() && ++y[i] > 7) y[i++] = 0;
                if (i == y.size()) break;
            }
            for (const auto& g : m.generators)
                for (Index i = 0; i < r; ++i) CHECK(g(i).sign() >= 0);
        }
    }
}
