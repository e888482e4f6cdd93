#include "logmonoid/covers.hpp"

#include "logmonoid/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace logmonoid {

LogPoint::LogPoint(IntegralMonoid p) : p_(std::move(p)) {
    if (!is_toric(p_)) throw InputError("log point: monoid is not sharp, fine and saturated");
}

namespace {

void require_level(const Integer& m) {
    if (m < 1) throw InputError("level must be positive");
}

// Coordinates of v in (Z/m)^n, empty at level 1.
IntVector to_level(const IntVector& v, const Integer& m) {
    if (m == 1) return IntVector(0);
    IntVector out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = mod(v(i), m);
    return out;
}

IntVector basis_values(const Subgroup& s, Index k) { return s.inclusion.apply(s.group.basis(k)); }

std::vector<IntVector> as_level_vectors(const std::vector<IntVector>& gens, Index n) {
    std::vector<IntVector> out;
    for (const auto& g : gens) {
        if (g.size() == n) out.push_back(g);
    }
    return out;
}

bool same_base(const LogPoint& a, const LogPoint& b) {
    return a.monoid().ambient() == b.monoid().ambient() && a.monoid().generators() == b.monoid().generators();
}

}  // namespace

FinAbGroup fundamental_group_level(const LogPoint& pt, const Integer& m) {
    require_level(m);
    if (m == 1) return FinAbGroup::free(0);
    return FinAbGroup(0, std::vector<Integer>(static_cast<size_t>(pt.rank()), m));
}

FketCover cover_from_subgroup(const LogPoint& pt, const Integer& m, const std::vector<IntVector>& gens) {
    require_level(m);
    const Index n = pt.rank();
    const FinAbGroup A = fundamental_group_level(pt, m);
    std::vector<IntVector> h;
    for (const auto& g : gens) {
        if (g.size() != n) throw InputError("subgroup generator " + to_string(g) + " has wrong length");
        h.push_back(to_level(g, m));
    }
    FketCover c;
    c.base = pt;
    c.level = m;
    c.subgroup = canonical_generators(A, h);
    c.group = subgroup_structure(A, c.subgroup);

    IntMatrix pi = m == 1 ? zero_matrix(0, n) : identity_matrix(n);
    GroupHom to_a(FinAbGroup::free(n), A, pi);
    GroupHom inc(FinAbGroup::free(static_cast<Index>(c.subgroup.size())), A, columns_matrix(c.subgroup, A.dim()));
    Cokernel quo = cokernel(inc);
    c.lattice = columns_matrix(kernel_lattice(compose(quo.projection, to_a)), n);
    if (c.lattice.cols() != n) throw VerificationFailure("cover_from_subgroup: preimage lattice has wrong rank");

    std::vector<IntVector> normals;
    for (const auto& f : dual_description(pt.monoid().free_cone()).rays) normals.emplace_back(c.lattice.transpose() * f);
    const FinAbGroup zn = FinAbGroup::free(n);
    DualDescription cone = intersect_halfspaces(n, normals);
    c.monoid = IntegralMonoid(zn, saturated_generators(zn, RationalCone(n, cone.rays)));
    for (const auto& g : c.monoid.generators()) c.generators.emplace_back(c.lattice * g);
    sort_unique(c.generators);

    if (!(cokernel(cover_inclusion(c).gp()).group == c.group.group))
        throw VerificationFailure("cover_from_subgroup: Q^gp / P^gp differs from the subgroup");
    return c;
}

MonoidHom cover_inclusion(const FketCover& c) {
    const Index n = c.base.rank();
    IntMatrix X(n, n);
    for (Index i = 0; i < n; ++i) {
        auto x = solve_integer(c.lattice, IntVector(c.level * unit_vector(n, i)));
        if (!x) throw VerificationFailure("cover_inclusion: P^gp is not inside the cover lattice");
        X.col(i) = *x;
    }
    return MonoidHom(c.base.monoid(), c.monoid, GroupHom(c.base.monoid().ambient(), FinAbGroup::free(n), X));
}

std::vector<FketCover> enumerate_connected_covers(const LogPoint& pt, const Integer& m, const Integer& bound) {
    FinAbGroup A = fundamental_group_level(pt, m);
    if (A.order() > bound)
        throw BoundExceeded("enumerate_connected_covers: |Gamma_m| = " + A.order().str() + " exceeds bound " + bound.str());
    std::vector<FketCover> out;
    for (const auto& h : subgroup_enumerate(A, bound)) out.push_back(cover_from_subgroup(pt, m, as_level_vectors(h, pt.rank())));
    return out;
}

FketCover lift_cover(const FketCover& c, const Integer& m) {
    require_level(m);
    if (!mod(m, c.level).is_zero()) throw InputError("lift_cover: level " + m.str() + " is not a multiple of " + c.level.str());
    const Integer k = m / c.level;
    std::vector<IntVector> gens;
    for (const auto& g : c.subgroup) gens.emplace_back(k * g);
    return cover_from_subgroup(c.base, m, gens);
}

bool is_valid(const GammaSet& s) {
    const size_t n = s.size();
    if (static_cast<Index>(s.action.size()) != s.rank) return false;
    for (const auto& p : s.action) {
        if (p.size() != n) return false;
        std::vector<char> hit(n, 0);
        for (size_t x : p) {
            if (x >= n || hit[x]) return false;
            hit[x] = 1;
        }
        for (size_t x = 0; x < n; ++x) {
            size_t y = x;
            for (Integer k(0); k < s.level; k += Integer(1)) y = p[y];
            if (y != x) return false;
        }
    }
    for (const auto& p : s.action)
        for (const auto& q : s.action)
            for (size_t x = 0; x < n; ++x)
                if (p[q[x]] != q[p[x]]) return false;
    return true;
}

std::vector<std::vector<size_t>> orbits(const GammaSet& s) {
    std::vector<long> label(s.size(), -1);
    std::vector<std::vector<size_t>> out;
    for (size_t start = 0; start < s.size(); ++start) {
        if (label[start] >= 0) continue;
        std::vector<size_t> orbit{start};
        label[start] = static_cast<long>(out.size());
        for (size_t k = 0; k < orbit.size(); ++k)
            for (const auto& p : s.action) {
                size_t y = p[orbit[k]];
                if (label[y] < 0) {
                    label[y] = static_cast<long>(out.size());
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool is_transitive(const GammaSet& s) { return orbits(s).size() == 1; }

GammaSet product(const GammaSet& a, const GammaSet& b) {
    if (a.rank != b.rank || a.level != b.level) throw InputError("product: Gamma-sets over different groups");
    GammaSet out{a.level, a.rank, {}, std::vector<std::vector<size_t>>(static_cast<size_t>(a.rank))};
    for (const auto& x : a.elements)
        for (const auto& y : b.elements) out.elements.push_back(concat(x, y));
    for (size_t i = 0; i < out.action.size(); ++i)
        for (size_t x = 0; x < a.size(); ++x)
            for (size_t y = 0; y < b.size(); ++y) out.action[i].push_back(a.action[i][x] * b.size() + b.action[i][y]);
    return out;
}

GammaSet restrict_to(const GammaSet& s, const std::vector<size_t>& orbit) {
    std::map<size_t, size_t> index;
    for (size_t k = 0; k < orbit.size(); ++k) index[orbit[k]] = k;
    GammaSet out{s.level, s.rank, {}, std::vector<std::vector<size_t>>(static_cast<size_t>(s.rank))};
    for (size_t x : orbit) out.elements.push_back(s.elements[x]);
    for (size_t i = 0; i < out.action.size(); ++i)
        for (size_t x : orbit) {
            auto it = index.find(s.action[i][x]);
            if (it == index.end()) throw InputError("restrict_to: elements are not a union of orbits");
            out.action[i].push_back(it->second);
        }
    return out;
}

std::optional<std::vector<size_t>> gamma_isomorphism(const GammaSet& a, const GammaSet& b) {
    if (a.size() != b.size() || a.rank != b.rank || a.level != b.level) return std::nullopt;
    if (a.size() == 0) return std::vector<size_t>{};
    const size_t none = a.size();
    for (size_t y0 = 0; y0 < b.size(); ++y0) {
        std::vector<size_t> f(a.size(), none);
        std::vector<char> used(b.size(), 0);
        f[0] = y0;
        used[y0] = 1;
        std::deque<size_t> queue{0};
        bool ok = true;
        while (!queue.empty() && ok) {
            size_t x = queue.front();
            queue.pop_front();
            for (size_t i = 0; i < a.action.size() && ok; ++i) {
                size_t ax = a.action[i][x], by = b.action[i][f[x]];
                if (f[ax] == none) {
                    if (used[by]) ok = false;
                    f[ax] = by;
                    used[by] = 1;
                    queue.push_back(ax);
                } else if (f[ax] != by) {
                    ok = false;
                }
            }
        }
        if (ok && std::find(f.begin(), f.end(), none) == f.end()) return f;
    }
    return std::nullopt;
}

GammaSet fiber_functor(const FketCover& c, const Integer& unit) {
    const Integer& m = c.level;
    if (gcd(unit, m) != 1) throw InputError("fiber_functor: " + unit.str() + " is not a unit modulo " + m.str());
    const Subgroup& h = c.group;
    const Index t = h.group.dim();
    GammaSet out{m, c.base.rank(), {}, std::vector<std::vector<size_t>>(static_cast<size_t>(c.base.rank()))};

    // chi(b_k) ranges over (m / d_k) Z / m Z.
    std::vector<Integer> step, radix;
    for (const auto& d : h.group.torsion()) {
        radix.push_back(d);
        step.push_back(m / d);
    }
    std::vector<Integer> digit(static_cast<size_t>(t), Integer(0));
    for (;;) {
        IntVector v(t);
        for (Index k = 0; k < t; ++k) v(k) = digit[static_cast<size_t>(k)] * step[static_cast<size_t>(k)];
        out.elements.push_back(v);
        size_t k = 0;
        while (k < digit.size()) {
            digit[k] += Integer(1);
            if (digit[k] < radix[k]) break;
            digit[k] = 0;
            ++k;
        }
        if (k == digit.size()) break;
    }
    sort_unique(out.elements);
    std::map<IntVector, size_t, LexLess> index;
    for (size_t x = 0; x < out.elements.size(); ++x) index[out.elements[x]] = x;

    for (Index i = 0; i < out.rank; ++i) {
        IntVector shift(t);
        for (Index k = 0; k < t; ++k) shift(k) = unit * basis_values(h, k)(i);
        for (const auto& v : out.elements) {
            IntVector w(t);
            for (Index k = 0; k < t; ++k) w(k) = mod(v(k) + shift(k), m);
            out.action[static_cast<size_t>(i)].push_back(index.at(w));
        }
    }
    return out;
}

std::vector<IntMatrix> monodromy_rep(const FketCover& c, const Integer& unit) {
    GammaSet s = fiber_functor(c, unit);
    const Index n = static_cast<Index>(s.size());
    std::vector<IntMatrix> out;
    for (const auto& p : s.action) {
        IntMatrix M = zero_matrix(n, n);
        for (Index x = 0; x < n; ++x) M(static_cast<Index>(p[static_cast<size_t>(x)]), x) = 1;
        out.push_back(M);
    }
    return out;
}

std::vector<size_t> restriction_map(const FketCover& c1, const FketCover& c2) {
    if (!same_base(c1.base, c2.base) || c1.level != c2.level)
        throw InputError("restriction_map: covers over different bases or levels");
    const Integer& m = c1.level;
    std::vector<IntVector> coords;
    for (Index k = 0; k < c2.group.group.dim(); ++k) {
        auto x = c1.group.coordinates(basis_values(c2.group, k));
        if (!x) throw InputError("restriction_map: second subgroup is not inside the first");
        coords.push_back(*x);
    }
    GammaSet f1 = fiber_functor(c1), f2 = fiber_functor(c2);
    std::map<IntVector, size_t, LexLess> index;
    for (size_t y = 0; y < f2.size(); ++y) index[f2.elements[y]] = y;
    std::vector<size_t> out;
    for (const auto& chi : f1.elements) {
        IntVector v(static_cast<Index>(coords.size()));
        for (size_t k = 0; k < coords.size(); ++k) v(static_cast<Index>(k)) = mod(dot(coords[k], chi), m);
        out.push_back(index.at(v));
    }
    return out;
}

FiberProduct cover_fiber_product(const FketCover& c1, const FketCover& c2) {
    if (!same_base(c1.base, c2.base)) throw InputError("cover_fiber_product: covers over different log points");
    const Index n = c1.base.rank();
    FiberProduct out;
    out.level = lcm(c1.level, c2.level);
    FketCover d1 = lift_cover(c1, out.level), d2 = lift_cover(c2, out.level);
    out.sum = amalgamated_sum(cover_inclusion(d1), cover_inclusion(d2), SumMode::saturated);
    const FinAbGroup& S = out.sum.monoid.ambient();
    out.components = 1;
    for (const auto& t : S.torsion()) out.components *= t;

    std::vector<IntVector> joint = d1.subgroup;
    joint.insert(joint.end(), d2.subgroup.begin(), d2.subgroup.end());
    out.component = cover_from_subgroup(c1.base, out.level, as_level_vectors(joint, n));

    std::vector<IntVector> gens, imgs;
    for (Index k = 0; k < n; ++k) {
        gens.push_back(out.sum.coprojection1.apply(unit_vector(n, k)));
        imgs.emplace_back(d1.lattice.col(k));
        gens.push_back(out.sum.coprojection2.apply(unit_vector(n, k)));
        imgs.emplace_back(d2.lattice.col(k));
    }
    GroupHom sum_map = hom_from_generators(S, gens, FinAbGroup::free(n), imgs);
    if (subgroup_order(S, kernel_lattice(sum_map)) != out.components)
        throw VerificationFailure("cover_fiber_product: kernel of the sum map is not the torsion");
    std::vector<IntVector> image;
    for (const auto& g : out.sum.monoid.generators()) {
        IntVector z = sum_map.apply(g);
        if (!logmonoid::is_zero(z)) image.push_back(z);
    }
    MembershipOracle comp(out.component.monoid);
    for (const auto& z : image) {
        auto x = solve_integer(out.component.lattice, z);
        if (!x || !comp.contains(*x)) throw VerificationFailure("cover_fiber_product: component monoid too small");
    }
    EmbeddedMonoid im = generated_submonoid(FinAbGroup::free(n), image);
    for (const auto& g : out.component.generators) {
        auto x = preimage(im.inclusion, g);
        if (!x || !membership(im.monoid, *x)) throw VerificationFailure("cover_fiber_product: component monoid too large");
    }

    out.product = product(fiber_functor(d1), fiber_functor(d2));
    out.orbits = orbits(out.product);
    if (Integer(static_cast<long long>(out.orbits.size())) != out.components)
        throw VerificationFailure("cover_fiber_product: orbit count differs from the number of components");
    GammaSet fc = fiber_functor(out.component);
    for (const auto& o : out.orbits) {
        auto iso = gamma_isomorphism(restrict_to(out.product, o), fc);
        if (!iso) throw VerificationFailure("cover_fiber_product: an orbit is not isomorphic to the component");
        out.isomorphisms.push_back(*iso);
    }
    return out;
}

QuotientCover cover_quotient(const FketCover& c, const std::vector<IntVector>& h) {
    const Index n = c.base.rank();
    for (const auto& g : h) {
        if (g.size() != n) throw InputError("cover_quotient: generator " + to_string(g) + " has wrong length");
        if (!c.group.coordinates(to_level(g, c.level)))
            throw InputError("cover_quotient: " + to_string(g) + " is not in the subgroup of the cover");
    }
    QuotientCover out;
    out.cover = cover_from_subgroup(c.base, c.level, h);
    out.acting_order = c.degree() / out.cover.degree();
    out.restriction = restriction_map(c, out.cover);

    GammaSet f = fiber_functor(c), g = fiber_functor(out.cover);
    std::vector<Integer> fiber(g.size(), Integer(0));
    for (size_t x = 0; x < f.size(); ++x) {
        fiber[out.restriction[x]] += Integer(1);
        for (size_t i = 0; i < f.action.size(); ++i)
            if (out.restriction[f.action[i][x]] != g.action[i][out.restriction[x]])
                throw VerificationFailure("cover_quotient: restriction is not equivariant");
    }
    for (const auto& k : fiber)
        if (k != out.acting_order) throw VerificationFailure("cover_quotient: fibers differ from the acting group");
    return out;
}

}  // namespace logmonoid
