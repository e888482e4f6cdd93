#include "logmonoid/kummer.hpp"

#include "logmonoid/error.hpp"

#include <algorithm>

namespace logmonoid {

namespace {

void require_saturated(const MonoidHom& u, const char* what) {
    if (!is_saturated(u.source())) throw PreconditionError(std::string(what) + ": source is not saturated");
    if (!is_saturated(u.target())) throw PreconditionError(std::string(what) + ": target is not saturated");
}

// x in P with u(x) = y, if any.
bool in_image(const MonoidHom& u, const MembershipOracle& p, const IntVector& y) {
    auto x = preimage(u.gp(), y);
    return x && p.contains(*x);
}

}  // namespace

FinAbGroup cokernel_group(const MonoidHom& u) { return cokernel(u.gp()).group; }

KummerCheck is_kummer(const MonoidHom& u) {
    require_saturated(u, "is_kummer");
    KummerCheck out;
    auto ker = kernel_lattice(u.gp());
    if (!ker.empty()) {
        out.clause = "injective";
        out.witness = ker.front();
        return out;
    }
    Cokernel c = cokernel(u.gp());
    if (!c.group.is_finite()) {
        out.clause = "finite_cokernel";
        for (const auto& q : u.target().generators())
            if (!logmonoid::is_zero(c.group.free_part(c.projection.apply(q)))) {
                out.witness = q;
                break;
            }
        return out;
    }
    MembershipOracle p(u.source());
    for (const auto& q : u.target().generators()) {
        Integer n = *c.group.element_order(c.projection.apply(q));
        if (!in_image(u, p, IntVector(n * q))) {
            out.clause = "multiples";
            out.witness = q;
            return out;
        }
    }
    out.ok = true;
    return out;
}

KummerData kummer_data(const MonoidHom& u) {
    KummerCheck k = is_kummer(u);
    if (!k.ok)
        throw PreconditionError("hom is not Kummer (" + k.clause + ")", k.witness ? to_string(*k.witness) : "");
    Cokernel c = cokernel(u.gp());
    Integer e = c.group.exponent();
    return {u, c, e};
}

SelfProduct self_product_decomposition(const KummerData& d) {
    const MonoidHom& u = d.hom;
    const IntegralMonoid& q = u.target();
    const FinAbGroup& Qgp = q.ambient();
    const FinAbGroup& G = d.group();

    SelfProduct out;
    out.sum = amalgamated_sum(u, u, SumMode::saturated);
    out.split_group = direct_sum(Qgp, G);
    const DirectSum& ds = out.split_group;
    std::vector<IntVector> split_gens;
    for (const auto& g : q.generators()) split_gens.push_back(ds.inj1.apply(g));
    for (Index k = 0; k < G.dim(); ++k) split_gens.push_back(ds.inj2.apply(G.basis(k)));
    out.split = IntegralMonoid(ds.group, split_gens);

    const FinAbGroup& S = out.sum.monoid.ambient();
    const GroupHom& i1 = out.sum.coprojection1.gp();
    const GroupHom& i2 = out.sum.coprojection2.gp();
    std::vector<IntVector> gens, imgs;
    for (Index k = 0; k < Qgp.dim(); ++k) {
        IntVector e = Qgp.basis(k);
        gens.push_back(i1.apply(e));
        imgs.push_back(ds.inj1.apply(e));
        gens.push_back(i2.apply(e));
        imgs.push_back(ds.group.reduce(ds.inj1.apply(e) + ds.inj2.apply(d.cokernel.projection.apply(e))));
    }
    out.psi = MonoidHom(out.sum.monoid, out.split, hom_from_generators(S, gens, ds.group, imgs));

    gens.clear();
    imgs.clear();
    for (Index k = 0; k < Qgp.dim(); ++k) {
        gens.push_back(ds.inj1.apply(Qgp.basis(k)));
        imgs.push_back(i1.apply(Qgp.basis(k)));
    }
    for (Index k = 0; k < G.dim(); ++k) {
        IntVector s = d.cokernel.section.col(k);
        gens.push_back(ds.inj2.apply(G.basis(k)));
        imgs.push_back(S.reduce(i2.apply(s) - i1.apply(s)));
    }
    out.phi = MonoidHom(out.split, out.sum.monoid, hom_from_generators(ds.group, gens, S, imgs));

    for (const auto& x : out.sum.monoid.generators())
        if (!equal(out.phi.apply(out.psi.apply(x)), x))
            throw VerificationFailure("self_product_decomposition: phi o psi is not the identity at " + to_string(x));
    for (const auto& x : out.split.generators())
        if (!equal(out.psi.apply(out.phi.apply(x)), x))
            throw VerificationFailure("self_product_decomposition: psi o phi is not the identity at " + to_string(x));
    return out;
}

Integer ramification_index(const KummerData& d) {
    const MonoidHom& u = d.hom;
    if (!is_sharp(u.source()) || !is_sharp(u.target()))
        throw PreconditionError("ramification_index: source and target must be sharp");
    MembershipOracle p(u.source());
    for (Integer n(1); n <= d.exponent; n += Integer(1)) {
        bool all = true;
        for (const auto& q : u.target().generators())
            if (!in_image(u, p, IntVector(n * q))) {
                all = false;
                break;
            }
        if (!all) continue;
        if (n != d.exponent)
            throw VerificationFailure("ramification_index: " + n.str() + " differs from exponent " + d.exponent.str());
        return n;
    }
    throw VerificationFailure("ramification_index: no index up to the exponent " + d.exponent.str());
}

DividedFactorization minimal_divided_factorization(const KummerData& d) {
    const MonoidHom& u = d.hom;
    const IntegralMonoid& p = u.source();
    if (!p.ambient().is_torsion_free()) throw PreconditionError("minimal_divided_factorization: source has torsion");
    if (!is_toric(p)) throw PreconditionError("minimal_divided_factorization: source is not sharp and saturated");
    const FinAbGroup& Qgp = u.target().ambient();
    MembershipOracle po(p);
    for (Integer n(1);; n += Integer(1)) {
        IntMatrix M(p.ambient().dim(), Qgp.dim());
        bool ok = true;
        for (Index k = 0; k < Qgp.dim() && ok; ++k) {
            auto x = preimage(u.gp(), IntVector(n * Qgp.basis(k)));
            if (x) M.col(k) = *x;
            ok = x.has_value();
        }
        if (ok)
            for (const auto& q : u.target().generators())
                if (!in_image(u, po, IntVector(n * q))) ok = false;
        if (!ok) continue;
        if (n != d.exponent)
            throw VerificationFailure("minimal_divided_factorization: level " + n.str() + " differs from exponent");
        DividedFactorization out{n, divide(p, n), {}};
        out.embedding = MonoidHom(u.target(), out.division.monoid, GroupHom(Qgp, p.ambient(), M));
        if (!(compose(out.embedding, u).gp() == out.division.inclusion.gp()))
            throw VerificationFailure("minimal_divided_factorization: factorization does not commute");
        return out;
    }
}

ChartCheck log_smooth_chart_check(const MonoidHom& u, const std::set<Integer>& invertible_primes) {
    ChartCheck out;
    out.kernel = subgroup_structure(u.source().ambient(), kernel_lattice(u.gp())).group;
    out.cokernel = cokernel(u.gp()).group;
    out.ok = out.kernel.is_finite();
    std::set<Integer> seen;
    auto scan = [&](const std::vector<Integer>& torsion) {
        for (const auto& t : torsion)
            for (const auto& pr : prime_factors(t))
                if (!invertible_primes.count(pr) && seen.insert(pr).second) out.bad_primes.push_back(pr);
    };
    scan(out.kernel.torsion());
    scan(out.cokernel.torsion());
    std::sort(out.bad_primes.begin(), out.bad_primes.end());
    if (!out.bad_primes.empty()) out.ok = false;
    return out;
}

LogDifferentials log_differentials_module(const MonoidHom& u, const std::set<Integer>& invertible_primes) {
    ChartCheck c = log_smooth_chart_check(u, invertible_primes);
    if (!c.ok) throw PreconditionError("log_differentials_module: chart condition fails");
    Cokernel k = cokernel(u.gp());
    LogDifferentials out{k.group, matrix_columns(k.section), k.group.free_rank()};
    return out;
}

std::vector<AbhyankarMonoid> abhyankar_classify(Index r, const std::vector<Integer>& d, const AbhyankarBounds& bounds) {
    if (r < 0 || static_cast<Index>(d.size()) != r) throw InputError("abhyankar_classify: need one d_i per coordinate");
    if (r > bounds.max_rank) throw BoundExceeded("abhyankar_classify: rank " + std::to_string(r) + " exceeds bound");
    IntMatrix D = zero_matrix(r, r);
    for (Index i = 0; i < r; ++i) {
        const Integer& di = d[static_cast<size_t>(i)];
        if (di < 1) throw InputError("abhyankar_classify: d_i must be positive");
        if (di > bounds.max_d) throw BoundExceeded("abhyankar_classify: d_i = " + di.str() + " exceeds bound");
        D(i, i) = di;
    }
    Cokernel a = cokernel_of_relations(D);
    auto subgroups = subgroup_enumerate(a.group, pow(bounds.max_d, static_cast<unsigned>(bounds.max_rank)));

    std::vector<AbhyankarMonoid> out;
    for (const auto& h : subgroups) {
        GroupHom inc(FinAbGroup::free(static_cast<Index>(h.size())), a.group, columns_matrix(h, a.group.dim()));
        Cokernel quo = cokernel(inc);
        GroupHom to_quo = compose(quo.projection, a.projection);
        IntMatrix B = columns_matrix(kernel_lattice(to_quo), r);
        if (B.cols() != r) throw VerificationFailure("abhyankar_classify: preimage lattice has wrong rank");
        DualDescription cone = intersect_halfspaces(r, matrix_rows(B));
        AbhyankarMonoid m;
        m.subgroup = h;
        m.lattice = B;
        m.monoid = IntegralMonoid(FinAbGroup::free(r), saturated_generators(FinAbGroup::free(r), RationalCone(r, cone.rays)));
        for (const auto& g : m.monoid.generators()) m.generators.emplace_back(B * g);
        sort_unique(m.generators);
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace logmonoid
