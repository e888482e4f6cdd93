#include "logmonoid/monalg.hpp"

#include "logmonoid/cones.hpp"
#include "logmonoid/error.hpp"
#include "logmonoid/lattice.hpp"

#include <functional>
#include <set>

namespace logmonoid {

MonAlgElement::MonAlgElement(IntegralMonoid base, Field field) : base_(std::move(base)), field_(std::move(field)) {
    if (!field_) throw InputError("monoid algebra without a field");
}

MonAlgElement MonAlgElement::monomial(IntegralMonoid base, Field field, const IntVector& p, long long coefficient) {
    MonAlgElement e(std::move(base), std::move(field));
    e.add_term(p, coefficient);
    return e;
}

void MonAlgElement::add_term(const IntVector& p, long long c) {
    if (p.size() != base_.ambient().dim()) throw InputError("monomial has the wrong length");
    IntVector key = base_.ambient().reduce(p);
    if (!membership(base_, key)) throw InputError("monomial " + to_string(key) + " is not in the monoid");
    accumulate(key, field_->from_integer(c));
}

void MonAlgElement::accumulate(const IntVector& p, std::uint32_t code) {
    if (code == 0) return;
    auto it = support_.find(p);
    if (it == support_.end()) {
        support_.emplace(p, code);
        return;
    }
    it->second = field_->add(it->second, code);
    if (it->second == 0) support_.erase(it);
}

namespace {

void require_compatible(const MonAlgElement& a, const MonAlgElement& b) {
    if (!a.field() || !b.field() || a.field()->order() != b.field()->order())
        throw InputError("elements over different fields");
    if (!(a.base().ambient() == b.base().ambient()) || !(a.base() == b.base()))
        throw InputError("elements of different monoid algebras");
}

}  // namespace

MonAlgElement multiply(const MonAlgElement& a, const MonAlgElement& b) {
    require_compatible(a, b);
    MonAlgElement out(a.base_, a.field_);
    const Fq& f = *a.field_;
    for (const auto& [p, c] : a.support_)
        for (const auto& [q, d] : b.support_) out.accumulate(a.base_.ambient().reduce(IntVector(p + q)), f.mul(c, d));
    return out;
}

MonAlgElement operator+(const MonAlgElement& a, const MonAlgElement& b) {
    require_compatible(a, b);
    MonAlgElement out = a;
    for (const auto& [q, d] : b.support_) out.accumulate(q, d);
    return out;
}

bool operator==(const MonAlgElement& a, const MonAlgElement& b) {
    return a.field()->order() == b.field()->order() && a.support() == b.support();
}

namespace {

void require_toric(const KummerData& u) {
    if (!is_toric(u.hom.source()) || !is_toric(u.hom.target()))
        throw InputError("Cech slices need a Kummer map between toric monoids");
}

IntVector degree_functional(const IntegralMonoid& p) {
    IntVector ell = zero_vector(p.ambient().dim());
    for (const auto& r : dual_description(p.free_cone()).rays) ell += r;
    return ell;
}

struct Grading {
    IntVector ell;
    IntMatrix u;
    Degree operator()(const IntVector& q) const {
        auto r = solve_rational(u, q);
        if (!r) throw InputError("element outside the rational span of P");
        return {dot(ell, r->num), r->den};
    }
};

bool within(const Degree& d, long long bound) { return d.num <= Integer(bound) * d.den; }

std::vector<IntVector> monomials_up_to(const IntegralMonoid& m, const std::function<bool(const IntVector&)>& keep) {
    std::set<IntVector, LexLess> seen{m.ambient().zero()};
    std::vector<IntVector> frontier{m.ambient().zero()};
    while (!frontier.empty()) {
        std::vector<IntVector> next;
        for (const auto& x : frontier)
            for (const auto& g : m.generators()) {
                IntVector y = x + g;
                if (!keep(y) || !seen.insert(y).second) continue;
                next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<IntVector> group_elements(const FinAbGroup& g) {
    std::vector<IntVector> out{g.zero()};
    for (Index i = 0; i < static_cast<Index>(g.torsion().size()); ++i) {
        const long long d = g.torsion()[static_cast<size_t>(i)].to_ll();
        std::vector<IntVector> next;
        for (long long c = 0; c < d; ++c)
            for (auto x : out) {
                x(i) = Integer(c);
                next.push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

Index group_index(const FinAbGroup& g, const IntVector& x) {
    Index idx = 0;
    for (Index i = static_cast<Index>(g.torsion().size()); i-- > 0;)
        idx = idx * g.torsion()[static_cast<size_t>(i)].to_ll() + x(i).to_ll();
    return idx;
}

}  // namespace

Degree degree(const KummerData& u, const IntVector& q) {
    require_toric(u);
    return Grading{degree_functional(u.hom.source()), u.hom.gp().matrix()}(q);
}

CechComplexSlice cech_slice(const KummerData& u, long long degree_bound, Index depth, const Field& field,
                            const std::optional<IntVector>& character) {
    require_toric(u);
    if (depth < 1) throw InputError("Cech depth must be positive");
    if (degree_bound < 0) throw InputError("degree bound must be nonnegative");
    const Fq& f = *field;
    const FinAbGroup& G = u.group();
    const GroupHom& proj = u.cokernel.projection;
    Grading deg{degree_functional(u.hom.source()), u.hom.gp().matrix()};

    CechComplexSlice s;
    s.degree_bound = degree_bound;
    s.depth = depth;
    if (character) {
        if (character->size() != G.dim()) throw InputError("character has the wrong length");
        s.character = G.reduce(*character);
    }
    s.group_elements = group_elements(G);
    const bool trivial_class = !s.character || *s.character == G.zero();
    if (trivial_class)
        s.p_monomials = monomials_up_to(u.hom.source(), [&](const IntVector& p) {
            return dot(deg.ell, p) <= Integer(degree_bound);
        });
    for (const auto& q : monomials_up_to(u.hom.target(), [&](const IntVector& q) { return within(deg(q), degree_bound); }))
        if (!s.character || proj.apply(q) == *s.character) s.q_monomials.push_back(q);

    std::map<IntVector, Index, LexLess> q_index;
    for (size_t i = 0; i < s.q_monomials.size(); ++i) q_index[s.q_monomials[i]] = static_cast<Index>(i);
    const Index order = static_cast<Index>(s.group_elements.size());
    std::vector<Index> dims{static_cast<Index>(s.p_monomials.size())};
    Index d = static_cast<Index>(s.q_monomials.size());
    for (Index j = 0; j <= depth; ++j, d *= order) dims.push_back(d);
    s.term_dims.assign(dims.begin(), dims.end() - 1);
    s.tail_dim = dims.back();

    FqMatrix aug = fq_zero(f, dims[1], dims[0]);
    for (size_t i = 0; i < s.p_monomials.size(); ++i)
        aug(q_index.at(u.hom.apply(s.p_monomials[i])), static_cast<Index>(i)) = FqElem(1, &f);
    s.differentials.push_back(aug);

    const FqElem one(1, &f), minus_one(f.neg(1), &f);
    for (Index j = 0; j < depth; ++j) {
        FqMatrix D = fq_zero(f, dims[static_cast<size_t>(j + 2)], dims[static_cast<size_t>(j + 1)]);
        for (Index col = 0; col < D.cols(); ++col) {
            std::vector<IntVector> h(static_cast<size_t>(j));
            Index rest = col;
            for (Index t = j; t-- > 0;) {
                h[static_cast<size_t>(t)] = s.group_elements[static_cast<size_t>(rest % order)];
                rest /= order;
            }
            const Index qi = rest;
            std::vector<IntVector> c{proj.apply(s.q_monomials[static_cast<size_t>(qi)])};
            for (const auto& x : h) c[0] = G.reduce(IntVector(c[0] - x));
            c.insert(c.end(), h.begin(), h.end());
            for (Index k = 0; k <= j + 1; ++k) {
                std::vector<IntVector> cc = c;
                cc.insert(cc.begin() + k, G.zero());
                Index row = qi;
                for (size_t t = 1; t < cc.size(); ++t) row = row * order + group_index(G, cc[t]);
                D(row, col) += (k % 2 ? minus_one : one);
            }
        }
        s.differentials.push_back(D);
    }
    for (size_t i = 0; i + 1 < s.differentials.size(); ++i)
        if (!is_zero(FqMatrix(s.differentials[i + 1] * s.differentials[i])))
            throw VerificationFailure("cech_slice: d o d is not zero");
    return s;
}

std::pair<bool, std::vector<Index>> slice_homology(const CechComplexSlice& s, const Fq& f) {
    std::vector<Index> ranks;
    for (const auto& d : s.differentials) ranks.push_back(rank(f, d));
    std::vector<Index> h;
    for (Index j = 0; j < s.depth; ++j) {
        const Index dim = s.term_dims[static_cast<size_t>(j + 1)];
        const Index kernel = dim - ranks[static_cast<size_t>(j + 1)];
        h.push_back(kernel - (j == 0 ? 0 : ranks[static_cast<size_t>(j)]));
    }
    const bool h0 = ranks[0] == s.term_dims[0] && h[0] == ranks[0];
    return {h0, h};
}

CechReport verify_cech_exact(const KummerData& u, long long degree_bound, Index depth, const Field& f) {
    CechReport r;
    r.degree_bound = degree_bound;
    r.depth = depth;
    r.h0_correct = true;
    r.term_dims.assign(static_cast<size_t>(depth + 1), 0);
    r.homology.assign(static_cast<size_t>(depth), 0);
    for (const auto& chi : group_elements(u.group())) {
        CechComplexSlice s = cech_slice(u, degree_bound, depth, f, chi);
        auto [h0, h] = slice_homology(s, *f);
        r.h0_correct = r.h0_correct && h0;
        for (size_t i = 0; i < s.term_dims.size(); ++i) r.term_dims[i] += s.term_dims[i];
        for (size_t i = 0; i < h.size(); ++i) r.homology[i] += h[i];
        r.characters.push_back({chi, s.term_dims, h});
    }
    r.exact = r.h0_correct;
    for (size_t i = 1; i < r.homology.size(); ++i) r.exact = r.exact && r.homology[i] == 0;
    return r;
}

}  // namespace logmonoid
