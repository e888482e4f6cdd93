#include "logmonoid/monoids.hpp"

#include "logmonoid/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace logmonoid {

namespace {

IntVector embed_free(const FinAbGroup& g, const IntVector& f) {
    IntVector x = g.zero();
    x.head(f.size()) = f;
    return x;
}

bool orthogonal_to(const DualDescription& d, const IntVector& f) {
    for (const auto& l : d.lineality)
        if (!dot(l, f).is_zero()) return false;
    for (const auto& r : d.rays)
        if (!dot(r, f).is_zero()) return false;
    return true;
}

GroupHom from_free(const FinAbGroup& g, const std::vector<IntVector>& elems) {
    return GroupHom(FinAbGroup::free(static_cast<Index>(elems.size())), g, columns_matrix(elems, g.dim()));
}

}  // namespace

GroupCompletion group_completion(const MonoidPresentation& p) {
    const Index s = p.num_gens;
    if (s < 0) throw InputError("presentation: negative generator count");
    std::vector<IntVector> rel;
    for (const auto& [u, v] : p.relations) {
        if (u.size() != s || v.size() != s) throw InputError("presentation: relation has wrong length");
        for (Index i = 0; i < s; ++i)
            if (u(i).sign() < 0 || v(i).sign() < 0) throw InputError("presentation: relation has a negative entry");
        rel.emplace_back(u - v);
    }
    Cokernel c = cokernel_of_relations(columns_matrix(rel, s));
    return {c.group, c.projection};
}

IntegralMonoid::IntegralMonoid(FinAbGroup ambient, std::vector<IntVector> generators) : ambient_(std::move(ambient)) {
    for (const auto& g : generators) {
        IntVector r = ambient_.reduce(g);
        if (!logmonoid::is_zero(r)) gens_.push_back(r);
    }
    sort_unique(gens_);
    if (!cokernel(from_free(ambient_, gens_)).group.is_trivial())
        throw InputError("generators do not generate the ambient group " + to_string(ambient_));
}

IntegralMonoid IntegralMonoid::free(Index r) {
    return IntegralMonoid(FinAbGroup::free(r), matrix_columns(identity_matrix(r)));
}

IntegralMonoid IntegralMonoid::group(const FinAbGroup& g) {
    std::vector<IntVector> gens;
    for (Index i = 0; i < g.dim(); ++i) {
        gens.push_back(g.basis(i));
        gens.push_back(-g.basis(i));
    }
    return IntegralMonoid(g, gens);
}

RationalCone IntegralMonoid::free_cone() const {
    std::vector<IntVector> f;
    for (const auto& g : gens_) f.push_back(ambient_.free_part(g));
    return RationalCone(ambient_.free_rank(), f);
}

std::string to_string(const IntegralMonoid& p) {
    std::string s = "<";
    for (size_t i = 0; i < p.generators().size(); ++i) s += (i ? ", " : "") + to_string(p.generators()[i]);
    return s + "> in " + to_string(p.ambient());
}

EmbeddedMonoid generated_submonoid(const FinAbGroup& g, const std::vector<IntVector>& gens) {
    Subgroup h = subgroup_structure(g, gens);
    std::vector<IntVector> local;
    for (const auto& x : gens) {
        auto c = h.coordinates(x);
        if (!c) throw VerificationFailure("generated_submonoid: generator outside its own subgroup");
        local.push_back(*c);
    }
    return {IntegralMonoid(h.group, local), h.inclusion};
}

// ---------------------------------------------------------------- membership

MembershipOracle::MembershipOracle(const IntegralMonoid& p, std::size_t state_limit)
    : p_(p), limit_(state_limit), cone_(dual_description(p.free_cone())) {
    const FinAbGroup& G = p_.ambient();
    const auto& gens = p_.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        if (orthogonal_to(cone_, G.free_part(gens[i]))) unit_gens_.push_back(i);

    if (unit_gens_.empty()) {
        to_sharp_ = GroupHom::identity(G);
        sharp_ = p_;
        for (size_t i = 0; i < gens.size(); ++i) sharp_lift_.push_back(i);
    } else {
        std::vector<IntVector> ug;
        for (auto i : unit_gens_) ug.push_back(gens[i]);
        Subgroup units = subgroup_structure(G, ug);
        Cokernel c = cokernel(units.inclusion);
        to_sharp_ = c.projection;
        std::vector<IntVector> images;
        for (const auto& g : gens) images.push_back(to_sharp_.apply(g));
        sharp_ = IntegralMonoid(c.group, images);
        for (const auto& s : sharp_.generators()) {
            size_t j = 0;
            while (!equal(images[j], s)) ++j;
            sharp_lift_.push_back(j);
        }

        // A strictly positive relation among the unit generators.
        const Index k = static_cast<Index>(ug.size()), r = G.free_rank();
        std::vector<IntVector> normals;
        for (Index j = 0; j < k; ++j) normals.push_back(unit_vector(k, j));
        for (Index i = 0; i < r; ++i) {
            IntVector row(k);
            for (Index j = 0; j < k; ++j) row(j) = ug[static_cast<size_t>(j)](i);
            normals.push_back(row);
            normals.push_back(-row);
        }
        DualDescription rel = intersect_halfspaces(k, normals);
        IntVector c_pos = zero_vector(k);
        for (const auto& ray : rel.rays) c_pos += ray;
        for (Index j = 0; j < k; ++j)
            if (c_pos(j).sign() <= 0) throw VerificationFailure("unit generators admit no positive relation");
        IntVector t = G.reduce(columns_matrix(ug, G.dim()) * c_pos);
        auto e = G.element_order(t);
        if (!e) throw VerificationFailure("positive relation has a free part");
        positive_relation_ = *e * c_pos;
    }
    RationalCone sc = sharp_.free_cone();
    sharp_cone_ = dual_description(sc);
    grading_ = zero_vector(sc.dim());
    for (const auto& f : sharp_cone_.rays) grading_ += f;
}

std::optional<IntVector> MembershipOracle::decompose_sharp(const IntVector& a) const {
    const FinAbGroup& G = sharp_.ambient();
    const auto& gens = sharp_.generators();
    std::vector<Integer> deg;
    for (const auto& g : gens) deg.push_back(dot(grading_, G.free_part(g)));
    std::map<IntVector, bool, LexLess> memo;  // true when a decomposition exists
    std::map<IntVector, size_t, LexLess> choice;

    std::function<bool(const IntVector&)> search = [&](const IntVector& x) -> bool {
        if (logmonoid::is_zero(x)) return true;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        if (memo.size() >= limit_) throw BoundExceeded("membership search exceeded " + std::to_string(limit_) + " states");
        bool ok = false;
        IntVector f = G.free_part(x);
        Integer dx = dot(grading_, f);
        if (dx.sign() > 0 && logmonoid::contains(sharp_cone_, f)) {
            for (size_t i = 0; i < gens.size() && !ok; ++i) {
                if (deg[i] > dx) continue;
                IntVector y = G.reduce(x - gens[i]);
                if (search(y)) {
                    ok = true;
                    choice[x] = i;
                }
            }
        }
        memo[x] = ok;
        return ok;
    };

    IntVector x = G.reduce(a);
    if (!search(x)) return std::nullopt;
    IntVector c = zero_vector(static_cast<Index>(gens.size()));
    while (!logmonoid::is_zero(x)) {
        size_t i = choice.at(x);
        c(static_cast<Index>(i)) += 1;
        x = G.reduce(x - gens[i]);
    }
    return c;
}

std::optional<IntVector> MembershipOracle::decompose(const IntVector& a) const {
    const FinAbGroup& G = p_.ambient();
    IntVector x = G.reduce(a);
    if (!logmonoid::contains(cone_, G.free_part(x))) return std::nullopt;
    auto cs = decompose_sharp(to_sharp_.apply(x));
    if (!cs) return std::nullopt;
    const auto& gens = p_.generators();
    IntVector c = zero_vector(static_cast<Index>(gens.size()));
    for (size_t i = 0; i < sharp_lift_.size(); ++i) c(static_cast<Index>(sharp_lift_[i])) += (*cs)(static_cast<Index>(i));
    if (unit_gens_.empty()) return c;

    IntVector rem = G.reduce(x - p_.generator_matrix() * c);
    std::vector<IntVector> ug;
    for (auto i : unit_gens_) ug.push_back(gens[i]);
    auto z = preimage(from_free(G, ug), rem);
    if (!z) throw VerificationFailure("membership: remainder is not a unit");
    Integer m = 0;
    for (Index j = 0; j < z->size(); ++j)
        if ((*z)(j).sign() < 0) m = std::max(m, floor_div(-(*z)(j) + positive_relation_(j) - 1, positive_relation_(j)));
    for (Index j = 0; j < z->size(); ++j) c(static_cast<Index>(unit_gens_[j])) += (*z)(j) + m * positive_relation_(j);
    return c;
}

bool MembershipOracle::contains(const IntVector& a) const { return decompose(a).has_value(); }

bool membership(const IntegralMonoid& p, const IntVector& a) { return MembershipOracle(p).contains(a); }

std::optional<IntVector> decompose(const IntegralMonoid& p, const IntVector& a) {
    return MembershipOracle(p).decompose(a);
}

bool contains_all(const IntegralMonoid& p, const std::vector<IntVector>& elems) {
    MembershipOracle o(p);
    return std::all_of(elems.begin(), elems.end(), [&](const IntVector& x) { return o.contains(x); });
}

bool operator==(const IntegralMonoid& a, const IntegralMonoid& b) {
    if (!(a.ambient() == b.ambient())) return false;
    if (a.generators() == b.generators()) return true;
    return contains_all(a, b.generators()) && contains_all(b, a.generators());
}

// ---------------------------------------------------------------- homs

MonoidHom::MonoidHom(IntegralMonoid source, IntegralMonoid target, GroupHom gp)
    : source_(std::move(source)), target_(std::move(target)), gp_(std::move(gp)) {
    if (!(gp_.source() == source_.ambient()) || !(gp_.target() == target_.ambient()))
        throw InputError("monoid hom: group map does not match the ambient groups");
    MembershipOracle o(target_);
    for (const auto& g : source_.generators()) {
        IntVector y = gp_.apply(g);
        if (!o.contains(y))
            throw PreconditionError("monoid hom: generator " + to_string(g) + " maps outside the target", to_string(y));
    }
}

MonoidHom MonoidHom::from_images(const IntegralMonoid& source, const IntegralMonoid& target,
                                 const std::vector<IntVector>& images) {
    if (images.size() != source.generators().size()) throw InputError("monoid hom: wrong number of images");
    return MonoidHom(source, target, hom_from_generators(source.ambient(), source.generators(), target.ambient(), images));
}

MonoidHom MonoidHom::identity(const IntegralMonoid& p) { return MonoidHom(p, p, GroupHom::identity(p.ambient())); }

std::vector<IntVector> MonoidHom::images() const {
    std::vector<IntVector> out;
    for (const auto& g : source_.generators()) out.push_back(apply(g));
    return out;
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
    return MonoidHom(f.source(), g.target(), compose(g.gp(), f.gp()));
}

// ---------------------------------------------------------------- constructions

IntegralMonoid integralize(const MonoidPresentation& p) {
    GroupCompletion c = group_completion(p);
    return IntegralMonoid(c.group, matrix_columns(c.map.matrix()));
}

std::vector<IntVector> saturated_generators(const FinAbGroup& g, const RationalCone& c) {
    const Index r = g.free_rank();
    if (c.dim() != r) throw InputError("saturated_generators: cone dimension differs from the free rank");
    std::vector<IntVector> out;
    std::vector<IntVector> lin = lineality_space(c);
    for (const auto& l : lin) {
        out.push_back(embed_free(g, l));
        out.push_back(embed_free(g, IntVector(-l)));
    }
    Cokernel q = cokernel_of_relations(columns_matrix(lin, r));
    std::vector<IntVector> proj;
    for (const auto& x : c.rays()) proj.push_back(q.projection.apply(x));
    for (const auto& h : hilbert_basis(RationalCone(q.group.dim(), proj)))
        out.push_back(embed_free(g, IntVector(q.section * h)));
    for (Index i = r; i < g.dim(); ++i) out.push_back(g.basis(i));
    return out;
}

IntegralMonoid saturate(const IntegralMonoid& p) {
    std::vector<IntVector> gens = saturated_generators(p.ambient(), p.free_cone());
    return IntegralMonoid(p.ambient(), gens);
}

Units units(const IntegralMonoid& p) {
    DualDescription d = dual_description(p.free_cone());
    Units u;
    for (const auto& g : p.generators())
        if (orthogonal_to(d, p.ambient().free_part(g))) u.generators.push_back(g);
    u.group = subgroup_structure(p.ambient(), u.generators);
    return u;
}

Sharpening sharpen(const IntegralMonoid& p) {
    Units u = units(p);
    Cokernel c = cokernel(u.group.inclusion);
    std::vector<IntVector> images;
    for (const auto& g : p.generators()) images.push_back(c.projection.apply(g));
    return {IntegralMonoid(c.group, images), c.projection};
}

Quotient quotient_by_submonoid(const IntegralMonoid& p, const std::vector<IntVector>& sub) {
    MembershipOracle o(p);
    for (const auto& q : sub)
        if (!o.contains(q)) throw PreconditionError("quotient_by_submonoid: element is not in the monoid", to_string(q));
    Subgroup h = subgroup_structure(p.ambient(), sub);
    Cokernel c = cokernel(h.inclusion);
    Quotient out;
    out.projection = c.projection;
    const auto& gens = p.generators();
    std::vector<IntVector> images;
    for (const auto& g : gens) images.push_back(c.projection.apply(g));
    out.monoid = IntegralMonoid(c.group, images);
    out.presentation.num_gens = static_cast<Index>(gens.size());
    for (const auto& k : kernel_lattice(from_free(c.group, images))) {
        IntVector pos = k, neg = k;
        for (Index i = 0; i < k.size(); ++i) {
            pos(i) = k(i).sign() > 0 ? k(i) : Integer(0);
            neg(i) = k(i).sign() < 0 ? Integer(-k(i)) : Integer(0);
        }
        out.presentation.relations.emplace_back(pos, neg);
    }
    return out;
}

MonoidHom localize(const IntegralMonoid& p, const std::vector<IntVector>& s) {
    MembershipOracle o(p);
    std::vector<IntVector> gens = p.generators();
    for (const auto& x : s) {
        if (!o.contains(x)) throw PreconditionError("localize: element is not in the monoid", to_string(x));
        gens.emplace_back(-x);
    }
    IntegralMonoid loc(p.ambient(), gens);
    return MonoidHom(p, loc, GroupHom::identity(p.ambient()));
}

namespace {

std::vector<std::pair<IntVector, IntVector>> lattice_relations(const IntegralMonoid& q) {
    std::vector<std::pair<IntVector, IntVector>> out;
    for (const auto& k : kernel_lattice(from_free(q.ambient(), q.generators()))) {
        IntVector pos = k, neg = k;
        for (Index i = 0; i < k.size(); ++i) {
            pos(i) = k(i).sign() > 0 ? k(i) : Integer(0);
            neg(i) = k(i).sign() < 0 ? Integer(-k(i)) : Integer(0);
        }
        out.emplace_back(pos, neg);
    }
    return out;
}

}  // namespace

AmalgamatedSum amalgamated_sum(const MonoidHom& u, const MonoidHom& v, SumMode mode) {
    const IntegralMonoid& P = u.source();
    if (!(P.ambient() == v.source().ambient()) || P.generators() != v.source().generators())
        throw InputError("amalgamated_sum: homomorphisms have different sources");
    const IntegralMonoid& Q1 = u.target();
    const IntegralMonoid& Q2 = v.target();
    const Index n1 = Q1.ambient().dim(), n2 = Q2.ambient().dim(), np = P.ambient().dim();
    IntMatrix r1 = Q1.ambient().relations(), r2 = Q2.ambient().relations();
    IntMatrix R = zero_matrix(n1 + n2, r1.cols() + r2.cols() + np);
    R.block(0, 0, n1, r1.cols()) = r1;
    R.block(n1, r1.cols(), n2, r2.cols()) = r2;
    R.block(0, r1.cols() + r2.cols(), n1, np) = u.gp().matrix();
    R.block(n1, r1.cols() + r2.cols(), n2, np) = -v.gp().matrix();
    Cokernel c = cokernel_of_relations(R);
    const IntMatrix& pr = c.projection.matrix();
    GroupHom i1(Q1.ambient(), c.group, pr.leftCols(n1));
    GroupHom i2(Q2.ambient(), c.group, pr.rightCols(n2));
    std::vector<IntVector> gens;
    for (const auto& g : Q1.generators()) gens.push_back(i1.apply(g));
    for (const auto& g : Q2.generators()) gens.push_back(i2.apply(g));
    IntegralMonoid S(c.group, gens);
    if (mode == SumMode::saturated) S = saturate(S);

    AmalgamatedSum out;
    out.monoid = S;
    out.coprojection1 = MonoidHom(Q1, S, i1);
    out.coprojection2 = MonoidHom(Q2, S, i2);
    if (mode == SumMode::plain) {
        const Index s1 = Q1.num_generators(), s2 = Q2.num_generators();
        MonoidPresentation pres;
        pres.num_gens = s1 + s2;
        for (const auto& [a, b] : lattice_relations(Q1))
            pres.relations.emplace_back(concat(a, zero_vector(s2)), concat(b, zero_vector(s2)));
        for (const auto& [a, b] : lattice_relations(Q2))
            pres.relations.emplace_back(concat(zero_vector(s1), a), concat(zero_vector(s1), b));
        MembershipOracle o1(Q1), o2(Q2);
        for (const auto& p : P.generators()) {
            auto w1 = o1.decompose(u.apply(p));
            auto w2 = o2.decompose(v.apply(p));
            if (!w1 || !w2) throw VerificationFailure("amalgamated_sum: image of a generator has no word");
            pres.relations.emplace_back(concat(*w1, zero_vector(s2)), concat(zero_vector(s1), *w2));
        }
        out.presentation = std::move(pres);
    }
    return out;
}

namespace {

bool image_contains(const MonoidHom& u, const std::vector<IntVector>& targets) {
    EmbeddedMonoid im = generated_submonoid(u.target().ambient(), u.images());
    MembershipOracle o(im.monoid);
    for (const auto& q : targets) {
        auto c = preimage(im.inclusion, q);
        if (!c || !o.contains(*c)) return false;
    }
    return true;
}

}  // namespace

HomProperties hom_properties(const MonoidHom& u) {
    const IntegralMonoid& P = u.source();
    const IntegralMonoid& Q = u.target();
    HomProperties h;
    h.injective = kernel_lattice(u.gp()).empty();
    h.surjective = image_contains(u, Q.generators());

    Units up = units(P), uq = units(Q);
    h.local = std::all_of(P.generators().begin(), P.generators().end(),
                          [&](const IntVector& g) { return !uq.contains(u.apply(g)) || up.contains(g); });

    GroupHom on_units = compose(u.gp(), up.group.inclusion);
    bool units_inj = kernel_lattice(on_units).empty();
    bool units_surj = std::all_of(uq.generators.begin(), uq.generators.end(),
                                  [&](const IntVector& q) { return preimage(on_units, q).has_value(); });
    h.sharp = units_inj && units_surj;

    Sharpening sp = sharpen(P), sq = sharpen(Q);
    IntMatrix M(sq.monoid.ambient().dim(), sp.monoid.ambient().dim());
    for (Index k = 0; k < M.cols(); ++k) {
        auto x = preimage(sp.projection, sp.monoid.ambient().basis(k));
        if (!x) throw VerificationFailure("hom_properties: sharpening is not surjective");
        M.col(k) = sq.projection.apply(u.apply(*x));
    }
    MonoidHom bar(sp.monoid, sq.monoid, GroupHom(sp.monoid.ambient(), sq.monoid.ambient(), M));
    h.strict = kernel_lattice(bar.gp()).empty() && image_contains(bar, sq.monoid.generators());

    if (is_saturated(Q)) {
        const Index rp = P.ambient().free_rank(), rq = Q.ambient().free_rank();
        IntMatrix Uff = u.gp().matrix().topLeftCorner(rq, rp);
        DualDescription dq = dual_description(Q.free_cone());
        std::vector<IntVector> normals;
        for (const auto& y : dq.rays) normals.emplace_back(Uff.transpose() * y);
        for (const auto& l : dq.lineality) {
            normals.emplace_back(Uff.transpose() * l);
            normals.emplace_back(-(Uff.transpose() * l));
        }
        DualDescription D = intersect_halfspaces(rp, normals);
        std::vector<IntVector> dg = D.rays;
        for (const auto& l : D.lineality) {
            dg.push_back(l);
            dg.emplace_back(-l);
        }
        h.exact = contains_all(P, saturated_generators(P.ambient(), RationalCone(rp, dg)));
    }
    return h;
}

MonoidHom split_sharp(const MonoidHom& u) {
    const IntegralMonoid& P = u.source();
    const IntegralMonoid& Q = u.target();
    if (!is_toric(Q)) throw PreconditionError("split_sharp: target is not toric", to_string(Q));
    for (const auto& q : Q.generators())
        if (!image_contains(u, {q})) throw PreconditionError("split_sharp: map is not surjective", to_string(q));
    MembershipOracle o(P);
    for (const auto& k : kernel_lattice(u.gp()))
        for (const IntVector& x : {k, IntVector(-k)})
            if (!o.contains(x)) throw PreconditionError("split_sharp: kernel is not contained in the source", to_string(x));
    GroupHom s = section_onto_free(u.gp());
    for (const auto& q : Q.generators())
        if (!o.contains(s.apply(q)))
            throw PreconditionError("split_sharp: section leaves the source", to_string(s.apply(q)));
    return MonoidHom(Q, P, s);
}

Division divide(const IntegralMonoid& p, const Integer& n) {
    if (n < 1) throw InputError("divide: n must be positive");
    if (!p.ambient().is_torsion_free()) throw InputError("divide: ambient group has torsion");
    if (!is_toric(p)) throw InputError("divide: monoid is not sharp and saturated");
    const FinAbGroup& G = p.ambient();
    return {p, MonoidHom(p, p, GroupHom(G, G, n * identity_matrix(G.dim())))};
}

bool is_n_divisible(const IntegralMonoid& p, const Integer& n) {
    if (n < 1) throw InputError("is_n_divisible: n must be positive");
    const FinAbGroup& G = p.ambient();
    const Index r = G.free_rank();
    MembershipOracle o(p);
    for (const auto& g : p.generators()) {
        IntVector x0 = G.zero();
        bool solvable = true;
        std::vector<std::vector<Integer>> options;
        for (Index i = 0; i < r; ++i) {
            if (!mod(g(i), n).is_zero()) solvable = false;
            else x0(i) = g(i) / n;
        }
        Integer count = 1;
        for (size_t k = 0; k < G.torsion().size() && solvable; ++k) {
            const Integer& d = G.torsion()[k];
            Integer e = gcd(n, d);
            Integer t = g(r + static_cast<Index>(k));
            if (!mod(t, e).is_zero()) {
                solvable = false;
                break;
            }
            // Solve (n/e) x = t/e mod d/e.
            Integer m = d / e, a = mod(n / e, m), b = t / e;
            Integer inv = 1;
            for (Integer c = 1; c < m; c += 1)
                if (mod(a * c, m) == 1) {
                    inv = c;
                    break;
                }
            Integer base = mod(b * inv, m);
            std::vector<Integer> opts;
            for (Integer j = 0; j < e; j += 1) opts.push_back(base + j * m);
            count *= e;
            options.push_back(opts);
        }
        if (!solvable) return false;
        if (count > Integer(kMembershipStateLimit)) throw BoundExceeded("is_n_divisible: too many n-torsion translates");
        std::vector<size_t> pick(options.size(), 0);
        bool found = false;
        for (;;) {
            IntVector x = x0;
            for (size_t k = 0; k < options.size(); ++k) x(r + static_cast<Index>(k)) = options[k][pick[k]];
            if (o.contains(x)) {
                found = true;
                break;
            }
            size_t k = 0;
            while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
        if (!found) return false;
    }
    return true;
}

bool is_saturated(const IntegralMonoid& p) {
    return contains_all(p, saturated_generators(p.ambient(), p.free_cone()));
}

bool is_sharp(const IntegralMonoid& p) { return units(p).generators.empty(); }

bool is_toric(const IntegralMonoid& p) { return is_sharp(p) && is_saturated(p); }

Predicates predicates(const IntegralMonoid& p) {
    Predicates out;
    out.saturated = is_saturated(p);
    out.sharp = is_sharp(p);
    out.toric = out.saturated && out.sharp;
    return out;
}

MonoidHom toric_embed(const IntegralMonoid& p) {
    if (!is_toric(p)) throw InputError("toric_embed: monoid is not toric");
    std::vector<IntVector> rays = dual_description(p.free_cone()).rays;
    std::sort(rays.begin(), rays.end(), [](const IntVector& a, const IntVector& b) { return lex_less(b, a); });
    const Index k = static_cast<Index>(rays.size()), r = p.ambient().dim();
    GroupHom e(p.ambient(), FinAbGroup::free(k), rows_matrix(rays, r));
    if (!kernel_lattice(e).empty()) throw VerificationFailure("toric_embed: dual rays have a common kernel");
    return MonoidHom(p, IntegralMonoid::free(k), e);
}

}  // namespace logmonoid
