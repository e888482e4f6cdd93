#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "logmonoid/error.hpp"
#include "logmonoid/monoids.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace logmonoid;

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> v;
    for (auto r : rows) v.push_back(int_vector(r));
    return v;
}

IntegralMonoid monoid(const FinAbGroup& g, std::initializer_list<std::initializer_list<long long>> gens) {
    return IntegralMonoid(g, vecs(gens));
}

IntegralMonoid numerical(std::initializer_list<std::initializer_list<long long>> gens) {
    return generated_submonoid(FinAbGroup::free(1), vecs(gens)).monoid;
}

MonoidPresentation presentation(Index s, std::vector<std::pair<std::vector<long long>, std::vector<long long>>> rels) {
    MonoidPresentation p;
    p.num_gens = s;
    for (auto& [u, v] : rels) {
        IntVector a(s), b(s);
        for (Index i = 0; i < s; ++i) {
            a(i) = u[static_cast<size_t>(i)];
            b(i) = v[static_cast<size_t>(i)];
        }
        p.relations.emplace_back(a, b);
    }
    return p;
}

// Random fine monoid with at most three generators in Z^2 + Z/2, presented in its own group.
EmbeddedMonoid random_fine(std::mt19937_64& rng) {
    FinAbGroup g(2, {2});
    for (;;) {
        std::vector<IntVector> gens;
        int n = static_cast<int>(oracle::uniform(rng, 1, 3));
        for (int i = 0; i < n; ++i)
            gens.push_back(int_vector({oracle::uniform(rng, -1, 3), oracle::uniform(rng, -1, 3), oracle::uniform(rng, 0, 1)}));
        bool nonzero = false;
        for (const auto& x : gens) nonzero = nonzero || !is_zero(g.reduce(x));
        if (nonzero) return generated_submonoid(g, gens);
    }
}

}  // namespace

TEST_CASE("group completion") {
    GroupCompletion c = group_completion(presentation(2, {{{3, 0}, {0, 2}}}));
    CHECK(c.group == FinAbGroup::free(1));
    CHECK(c.map.matrix() == int_matrix({{2, 3}}));
    CHECK(group_completion(presentation(2, {})).group == FinAbGroup::free(2));
    CHECK(group_completion(presentation(1, {{{2}, {0}}})).group == FinAbGroup(0, {2}));
    CHECK_THROWS_AS(group_completion(presentation(1, {{{-1}, {0}}})), InputError);
}

TEST_CASE("integralize") {
    CHECK(integralize(presentation(2, {{{1, 1}, {1, 0}}})) == IntegralMonoid::free(1));
    CHECK(integralize(presentation(2, {})) == IntegralMonoid::free(2));
    IntegralMonoid p = integralize(presentation(2, {{{3, 0}, {0, 2}}}));
    CHECK(p.generators() == vecs({{2}, {3}}));
    CHECK(p == numerical({{2}, {3}}));
}

TEST_CASE("membership examples") {
    EmbeddedMonoid m = generated_submonoid(FinAbGroup::free(2), vecs({{2, 0}, {1, 1}, {0, 2}}));
    auto in = [&](long long a, long long b) {
        auto c = preimage(m.inclusion, int_vector({a, b}));
        return c && membership(m.monoid, *c);
    };
    CHECK(in(1, 1));
    CHECK(!in(1, 0));
    CHECK(in(3, 1));
    CHECK(!in(-1, 1));
    IntegralMonoid p = numerical({{2}, {3}});
    CHECK(!membership(p, int_vector({1})));
    CHECK(membership(p, int_vector({5})));
    CHECK(membership(p, int_vector({0})));
    CHECK(!membership(p, int_vector({-2})));
    auto w = decompose(p, int_vector({7}));
    REQUIRE(w);
    CHECK(p.generator_matrix() * *w == int_vector({7}));
}

TEST_CASE("membership with units") {
    // Z_{>=0} + Z + Z/2.
    FinAbGroup g(2, {2});
    IntegralMonoid p = monoid(g, {{1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}});
    CHECK(membership(p, int_vector({3, -7, 1})));
    CHECK(!membership(p, int_vector({-1, 0, 0})));
    auto c = decompose(p, int_vector({2, -5, 1}));
    REQUIRE(c);
    for (Index i = 0; i < c->size(); ++i) CHECK((*c)(i).sign() >= 0);
    CHECK(g.reduce(p.generator_matrix() * *c) == int_vector({2, -5, 1}));
    // A group generated by a "triangle" of vectors.
    IntegralMonoid t = monoid(FinAbGroup::free(2), {{1, 0}, {0, 1}, {-1, -1}});
    auto d = decompose(t, int_vector({-4, 3}));
    REQUIRE(d);
    CHECK(t.generator_matrix() * *d == int_vector({-4, 3}));
}

TEST_CASE("saturation examples") {
    CHECK(saturate(numerical({{2}, {3}})) == IntegralMonoid::free(1));
    IntegralMonoid even = generated_submonoid(FinAbGroup::free(2), vecs({{2, 0}, {1, 1}, {0, 2}})).monoid;
    CHECK(saturate(even) == even);
    CHECK(is_saturated(even));
    IntegralMonoid tor = monoid(FinAbGroup(1, {2}), {{1, 0}, {0, 1}});
    CHECK(saturate(tor) == tor);
    // Half of a non-saturated lattice cone.
    IntegralMonoid q = monoid(FinAbGroup::free(2), {{1, 0}, {1, 2}, {0, 1}, {1, 1}});
    CHECK(is_saturated(q));
    IntegralMonoid q2 = generated_submonoid(FinAbGroup::free(2), vecs({{1, 0}, {1, 1}, {1, 3}})).monoid;
    CHECK(!is_saturated(q2));
}

TEST_CASE("saturation agrees with bounded multiples") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        IntegralMonoid p = random_fine(rng).monoid;
        IntegralMonoid s = saturate(p);
        MembershipOracle op(p), os(s);
        const FinAbGroup& g = p.ambient();
        for (int probe = 0; probe < 15; ++probe) {
            IntVector x(g.dim());
            for (Index i = 0; i < g.dim(); ++i) x(i) = oracle::uniform(rng, -3, 3);
            x = g.reduce(x);
            bool in_sat = os.contains(x);
            bool some_multiple = false;
            for (int n = 1; n <= (in_sat ? 48 : 12) && !some_multiple; ++n)
                some_multiple = op.contains(IntVector(Integer(n) * x));
            CHECK(in_sat == some_multiple);
        }
    }
}

TEST_CASE("saturation is idempotent, extensive and monotone") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        EmbeddedMonoid e = random_fine(rng);
        IntegralMonoid s = saturate(e.monoid);
        CHECK(contains_all(s, e.monoid.generators()));
        CHECK(saturate(s) == s);
        IntVector extra(e.monoid.ambient().dim());
        for (Index i = 0; i < extra.size(); ++i) extra(i) = oracle::uniform(rng, -2, 2);
        std::vector<IntVector> bigger = e.monoid.generators();
        bigger.push_back(extra);
        IntegralMonoid big(e.monoid.ambient(), bigger);
        CHECK(contains_all(saturate(big), s.generators()));
    }
}

TEST_CASE("saturation factors homs into saturated monoids") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        IntegralMonoid p = random_fine(rng).monoid;
        const FinAbGroup& g = p.ambient();
        IntMatrix m = zero_matrix(2, g.dim());
        for (Index i = 0; i < 2; ++i)
            for (Index j = 0; j < g.free_rank(); ++j) m(i, j) = oracle::uniform(rng, 0, 2);
        GroupHom f(g, FinAbGroup::free(2), m);
        std::vector<IntVector> tgt = vecs({{1, 0}, {0, 1}});
        for (const auto& x : p.generators()) tgt.push_back(f.apply(x));
        IntegralMonoid q = saturate(IntegralMonoid(FinAbGroup::free(2), tgt));
        MonoidHom h(p, q, f);
        MonoidHom through(saturate(p), q, f);
        for (const auto& x : p.generators()) CHECK(through.apply(x) == h.apply(x));
    }
}

TEST_CASE("units and sharpening") {
    CHECK(units(IntegralMonoid::free(1)).generators.empty());
    IntegralMonoid z = IntegralMonoid::group(FinAbGroup::free(1));
    CHECK(units(z).group.group == FinAbGroup::free(1));
    IntegralMonoid tor = monoid(FinAbGroup(1, {2}), {{1, 0}, {0, 1}});
    Units u = units(tor);
    CHECK(u.generators == vecs({{0, 1}}));
    CHECK(u.group.group == FinAbGroup(0, {2}));

    IntegralMonoid half = monoid(FinAbGroup::free(2), {{1, 0}, {0, 1}, {0, -1}});
    Sharpening s = sharpen(half);
    CHECK(s.monoid == IntegralMonoid::free(1));
    CHECK(sharpen(IntegralMonoid::free(2)).monoid == IntegralMonoid::free(2));
    CHECK(sharpen(z).monoid.is_trivial());
    CHECK(is_sharp(sharpen(tor).monoid));
}

TEST_CASE("quotients by submonoids") {
    IntegralMonoid p = IntegralMonoid::free(2);
    Quotient q = quotient_by_submonoid(p, vecs({{1, 0}}));
    CHECK(q.monoid == IntegralMonoid::free(1));
    CHECK(quotient_by_submonoid(p, p.generators()).monoid.is_trivial());
    CHECK(quotient_by_submonoid(p, {}).monoid == p);
    CHECK(integralize(q.presentation) == q.monoid);
    CHECK_THROWS_AS(quotient_by_submonoid(p, vecs({{-1, 0}})), PreconditionError);
}

TEST_CASE("quotient of a saturated monoid is saturated") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        IntegralMonoid s = saturate(random_fine(rng).monoid);
        std::vector<IntVector> sub{s.generators()[static_cast<size_t>(oracle::uniform(rng, 0, s.num_generators() - 1))]};
        Quotient q = quotient_by_submonoid(s, sub);
        CHECK(is_saturated(q.monoid));
        CHECK(is_toric(sharpen(q.monoid).monoid));
    }
}

TEST_CASE("localization") {
    IntegralMonoid n = IntegralMonoid::free(1);
    CHECK(localize(n, vecs({{1}})).target() == IntegralMonoid::group(FinAbGroup::free(1)));
    IntegralMonoid n2 = IntegralMonoid::free(2);
    CHECK(localize(n2, vecs({{1, 0}})).target() == monoid(FinAbGroup::free(2), {{1, 0}, {-1, 0}, {0, 1}}));
    CHECK(localize(n2, {}).target() == n2);
}

TEST_CASE("localization is universal") {
    // Homs Z_{>=0}^2 -> Q inverting e1 factor through the localization.
    IntegralMonoid n2 = IntegralMonoid::free(2);
    MonoidHom loc = localize(n2, vecs({{1, 0}}));
    IntegralMonoid q = monoid(FinAbGroup(1, {3}), {{1, 0}, {0, 1}});
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m(2, 2);
        m << Integer(0), Integer(oracle::uniform(rng, 0, 3)), Integer(oracle::uniform(rng, 0, 2)),
            Integer(oracle::uniform(rng, 0, 2));
        GroupHom f(FinAbGroup::free(2), q.ambient(), m);
        MonoidHom h(n2, q, f);
        MonoidHom through(loc.target(), q, f);
        CHECK(compose(through, loc).gp() == h.gp());
    }
}

TEST_CASE("amalgamated sums") {
    IntegralMonoid n = IntegralMonoid::free(1);
    MonoidHom id = MonoidHom::identity(n);
    CHECK(amalgamated_sum(id, id, SumMode::integral).monoid == n);

    IntegralMonoid triv(FinAbGroup::free(0), {});
    MonoidHom to_n(triv, n, GroupHom::zero(triv.ambient(), n.ambient()));
    AmalgamatedSum cp = amalgamated_sum(to_n, to_n, SumMode::integral);
    CHECK(cp.monoid.ambient() == FinAbGroup::free(2));
    CHECK(is_toric(cp.monoid));
    CHECK(cp.monoid.num_generators() == 2);

    MonoidHom two(n, n, GroupHom(n.ambient(), n.ambient(), int_matrix({{2}})));
    AmalgamatedSum sat = amalgamated_sum(two, two, SumMode::saturated);
    CHECK(sat.monoid.ambient() == FinAbGroup(1, {2}));
    CHECK(sat.monoid == IntegralMonoid(FinAbGroup(1, {2}), vecs({{1, 0}, {0, 1}})));
}

TEST_CASE("plain and integral amalgamated sums agree after integralization") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        IntegralMonoid p = IntegralMonoid::free(2);
        auto random_target = [&]() {
            IntegralMonoid q = random_fine(rng).monoid;
            std::vector<IntVector> imgs;
            for (int i = 0; i < 2; ++i) {
                IntVector x = q.ambient().zero();
                for (const auto& g : q.generators()) x += Integer(oracle::uniform(rng, 0, 2)) * g;
                imgs.push_back(q.ambient().reduce(x));
            }
            return MonoidHom(p, q, GroupHom(p.ambient(), q.ambient(), columns_matrix(imgs, q.ambient().dim())));
        };
        MonoidHom u = random_target(), v = random_target();
        AmalgamatedSum plain = amalgamated_sum(u, v, SumMode::plain);
        AmalgamatedSum integral = amalgamated_sum(u, v, SumMode::integral);
        REQUIRE(plain.presentation);
        GroupCompletion c = group_completion(*plain.presentation);
        CHECK(c.group == integral.monoid.ambient());
        IntegralMonoid a = integralize(*plain.presentation);
        // Generator classes: the plain presentation lists Q1's generators, then Q2's.
        std::vector<IntVector> expect;
        for (const auto& g : u.target().generators()) expect.push_back(integral.coprojection1.apply(g));
        for (const auto& g : v.target().generators()) expect.push_back(integral.coprojection2.apply(g));
        // Both groups are in invariant-factor form; compare through the cokernel map.
        GroupHom iso(c.group, integral.monoid.ambient(),
                     columns_matrix(expect, integral.monoid.ambient().dim()) * cokernel_of_relations(
                         [&] {
                             std::vector<IntVector> rel;
                             for (const auto& [x, y] : plain.presentation->relations) rel.emplace_back(x - y);
                             return columns_matrix(rel, plain.presentation->num_gens);
                         }()).section);
        for (Index i = 0; i < plain.presentation->num_gens; ++i)
            CHECK(iso.apply(c.map.apply(unit_vector(plain.presentation->num_gens, i))) ==
                  integral.monoid.ambient().reduce(expect[static_cast<size_t>(i)]));
        CHECK(kernel_lattice(iso).empty());
        CHECK(a.num_generators() <= integral.monoid.num_generators() + 0 + plain.presentation->num_gens);
    }
}

TEST_CASE("hom properties") {
    IntegralMonoid n = IntegralMonoid::free(1);
    MonoidHom three(n, n, GroupHom(n.ambient(), n.ambient(), int_matrix({{3}})));
    HomProperties h = hom_properties(three);
    CHECK(h.injective);
    CHECK(!h.surjective);
    CHECK(h.local);
    CHECK(h.sharp);
    CHECK(!h.strict);
    REQUIRE(h.exact);
    CHECK(*h.exact);

    HomProperties id = hom_properties(MonoidHom::identity(n));
    CHECK((id.injective && id.surjective && id.local && id.sharp && id.strict && *id.exact));

    IntegralMonoid z = IntegralMonoid::group(FinAbGroup::free(1));
    HomProperties inc = hom_properties(MonoidHom(n, z, GroupHom::identity(n.ambient())));
    CHECK(inc.injective);
    REQUIRE(inc.exact);
    CHECK(!*inc.exact);
    CHECK(!inc.local);

    // Target not saturated: exactness undecided.
    IntegralMonoid ns = numerical({{2}, {3}});
    CHECK(!hom_properties(MonoidHom(n, ns, GroupHom(n.ambient(), ns.ambient(), int_matrix({{2}})))).exact);
}

TEST_CASE("split sharp") {
    IntegralMonoid tor = monoid(FinAbGroup(1, {2}), {{1, 0}, {0, 1}});
    Sharpening s = sharpen(tor);
    MonoidHom pr(tor, s.monoid, s.projection);
    MonoidHom sec = split_sharp(pr);
    CHECK(sec.apply(int_vector({1})) == int_vector({1, 0}));
    CHECK(compose(pr, sec).gp() == GroupHom::identity(s.monoid.ambient()));

    IntegralMonoid half = monoid(FinAbGroup::free(2), {{1, 0}, {0, 1}, {0, -1}});
    Sharpening sh = sharpen(half);
    MonoidHom sec2 = split_sharp(MonoidHom(half, sh.monoid, sh.projection));
    CHECK(compose(MonoidHom(half, sh.monoid, sh.projection), sec2).gp() == GroupHom::identity(sh.monoid.ambient()));

    IntegralMonoid n = IntegralMonoid::free(1);
    CHECK(split_sharp(MonoidHom::identity(n)).gp() == GroupHom::identity(n.ambient()));

    // Kernel not inside the source.
    IntegralMonoid n2 = IntegralMonoid::free(2);
    MonoidHom add(n2, n, GroupHom(n2.ambient(), n.ambient(), int_matrix({{1, 1}})));
    CHECK_THROWS_AS(split_sharp(add), PreconditionError);
}

TEST_CASE("split sharp on random saturated monoids") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        IntegralMonoid p = saturate(random_fine(rng).monoid);
        Sharpening s = sharpen(p);
        MonoidHom pr(p, s.monoid, s.projection);
        MonoidHom sec = split_sharp(pr);
        CHECK(compose(pr, sec).gp() == GroupHom::identity(s.monoid.ambient()));
        CHECK(contains_all(p, sec.images()));
    }
}

TEST_CASE("division and divisibility") {
    IntegralMonoid n = IntegralMonoid::free(1);
    Division d = divide(n, 2);
    CHECK(d.inclusion.gp().matrix() == int_matrix({{2}}));
    CHECK(divide(IntegralMonoid::free(2), 3).inclusion.gp().matrix() == 3 * identity_matrix(2));
    CHECK(divide(n, 1).inclusion.gp() == GroupHom::identity(n.ambient()));
    CHECK_THROWS_AS(divide(IntegralMonoid(FinAbGroup(1, {2}), vecs({{1, 0}, {0, 1}})), 2), InputError);

    CHECK(!is_n_divisible(n, 2));
    CHECK(!is_n_divisible(IntegralMonoid::group(FinAbGroup::free(1)), 2));
    CHECK(is_n_divisible(IntegralMonoid(FinAbGroup::free(0), {}), 5));
    CHECK(is_n_divisible(IntegralMonoid::group(FinAbGroup(0, {3})), 2));
    CHECK(!is_n_divisible(IntegralMonoid::group(FinAbGroup(0, {2})), 2));
    CHECK(is_n_divisible(n, 1));
}

TEST_CASE("predicates") {
    Predicates a = predicates(IntegralMonoid::free(2));
    CHECK((a.toric && a.sharp && a.saturated && a.fine));
    Predicates b = predicates(numerical({{2}, {3}}));
    CHECK((b.fine && b.sharp && !b.saturated && !b.toric));
    Predicates c = predicates(IntegralMonoid::group(FinAbGroup(0, {2})));
    CHECK((c.fine && c.saturated && !c.sharp));
}

TEST_CASE("toric embedding") {
    CHECK(toric_embed(IntegralMonoid::free(2)).gp().matrix() == identity_matrix(2));
    CHECK(toric_embed(IntegralMonoid::free(1)).gp().matrix() == identity_matrix(1));
    IntegralMonoid c = monoid(FinAbGroup::free(2), {{1, 0}, {1, 1}, {1, 2}});
    MonoidHom e = toric_embed(c);
    CHECK(e.target().ambient() == FinAbGroup::free(2));
    CHECK(e.gp().matrix() == int_matrix({{2, -1}, {0, 1}}));
}

TEST_CASE("toric embedding separates generators") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        IntegralMonoid t = sharpen(saturate(random_fine(rng).monoid)).monoid;
        REQUIRE(is_toric(t));
        MonoidHom e = toric_embed(t);
        CHECK(kernel_lattice(e.gp()).empty());
        auto imgs = e.images();
        for (size_t i = 0; i < imgs.size(); ++i)
            for (size_t j = i + 1; j < imgs.size(); ++j) CHECK(imgs[i] != imgs[j]);
    }
}
