#include "logmonoid/cones.hpp"

#include "logmonoid/error.hpp"
#include "logmonoid/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace logmonoid {

RationalCone::RationalCone(Index dim, std::vector<IntVector> rays) : dim_(dim) {
    if (dim < 0) throw InputError("cone dimension must be nonnegative");
    for (auto& r : rays) {
        if (r.size() != dim) throw InputError("ray " + to_string(r) + " has wrong length");
        if (!logmonoid::is_zero(r)) rays_.push_back(primitive(r));
    }
    sort_unique(rays_);
}

namespace {

struct DDRay {
    IntVector v;
    std::vector<size_t> tight;  // sorted indices of processed constraints
};

Index rank_of(const std::vector<IntVector>& cons, const std::vector<size_t>& idx, Index dim) {
    if (idx.empty()) return 0;
    std::vector<IntVector> rows;
    for (auto i : idx) rows.push_back(cons[i]);
    return rank(rows_matrix(rows, dim));
}

// Component of r orthogonal to the column span of L, scaled to a primitive vector.
IntVector project_orthogonal(const IntMatrix& L, const IntVector& r) {
    if (L.cols() == 0) return primitive(r);
    IntMatrix G = L.transpose() * L;
    auto c = solve_rational(G, IntVector(L.transpose() * r));
    if (!c) throw VerificationFailure("project_orthogonal: singular Gram matrix");
    IntVector p = c->den * r - L * c->num;
    return primitive(p);
}

}  // namespace

DualDescription intersect_halfspaces(Index dim, const std::vector<IntVector>& normals) {
    std::vector<IntVector> lin;
    for (Index i = 0; i < dim; ++i) lin.push_back(unit_vector(dim, i));
    std::vector<DDRay> rays;
    std::vector<IntVector> cons;

    for (const auto& a : normals) {
        if (a.size() != dim) throw InputError("normal " + to_string(a) + " has wrong length");
        if (logmonoid::is_zero(a)) continue;
        const size_t t = cons.size();
        cons.push_back(a);

        size_t pick = lin.size();
        for (size_t i = 0; i < lin.size() && pick == lin.size(); ++i)
            if (!dot(a, lin[i]).is_zero()) pick = i;

        if (pick < lin.size()) {
            IntVector l0 = lin[pick];
            Integer s0 = dot(a, l0);
            if (s0.sign() < 0) {
                l0 = -l0;
                s0 = -s0;
            }
            std::vector<IntVector> next;
            for (size_t i = 0; i < lin.size(); ++i)
                if (i != pick) next.push_back(primitive(IntVector(s0 * lin[i] - dot(a, lin[i]) * l0)));
            lin = std::move(next);
            for (auto& r : rays) {
                r.v = primitive(IntVector(s0 * r.v - dot(a, r.v) * l0));
                r.tight.push_back(t);
            }
            std::vector<size_t> all(t);
            for (size_t i = 0; i < t; ++i) all[i] = i;
            rays.push_back({l0, all});
            continue;
        }

        const Index dlin = static_cast<Index>(lin.size());
        std::vector<Integer> s;
        for (const auto& r : rays) s.push_back(dot(a, r.v));
        std::vector<DDRay> next;
        for (size_t i = 0; i < rays.size(); ++i)
            if (s[i].sign() >= 0) {
                next.push_back(rays[i]);
                if (s[i].is_zero()) next.back().tight.push_back(t);
            }
        const Index need = dim - dlin - 2;
        for (size_t p = 0; p < rays.size(); ++p) {
            if (s[p].sign() <= 0) continue;
            for (size_t n = 0; n < rays.size(); ++n) {
                if (s[n].sign() >= 0) continue;
                std::vector<size_t> common;
                std::set_intersection(rays[p].tight.begin(), rays[p].tight.end(), rays[n].tight.begin(),
                                      rays[n].tight.end(), std::back_inserter(common));
                if (static_cast<Index>(common.size()) < need) continue;
                if (rank_of(cons, common, dim) != need) continue;
                IntVector v = primitive(IntVector(s[p] * rays[n].v - s[n] * rays[p].v));
                common.push_back(t);
                next.push_back({v, common});
            }
        }
        rays = std::move(next);
    }

    DualDescription out;
    IntMatrix L;
    if (cons.empty()) {
        L = identity_matrix(dim);
    } else {
        L = integer_kernel(rows_matrix(cons, dim));
    }
    out.lineality = matrix_columns(L);
    const Index want = dim - L.cols() - 1;
    for (const auto& r : rays)
        if (rank_of(cons, r.tight, dim) == want) out.rays.push_back(project_orthogonal(L, r.v));
    sort_unique(out.rays);
    return out;
}

DualDescription dual_description(const RationalCone& c) { return intersect_halfspaces(c.dim(), c.rays()); }

RationalCone dual_cone(const RationalCone& c) {
    DualDescription d = dual_description(c);
    std::vector<IntVector> gens = d.rays;
    for (const auto& l : d.lineality) {
        gens.push_back(l);
        gens.push_back(-l);
    }
    return RationalCone(c.dim(), gens);
}

bool contains(const DualDescription& dual, const IntVector& v) {
    for (const auto& l : dual.lineality)
        if (!dot(l, v).is_zero()) return false;
    for (const auto& r : dual.rays)
        if (dot(r, v).sign() < 0) return false;
    return true;
}

bool contains(const RationalCone& c, const IntVector& v) {
    if (v.size() != c.dim()) throw InputError("contains: vector " + to_string(v) + " has wrong length");
    return contains(dual_description(c), v);
}

std::vector<IntVector> lineality_space(const RationalCone& c) {
    DualDescription d = dual_description(c);
    std::vector<IntVector> gens = d.lineality;
    gens.insert(gens.end(), d.rays.begin(), d.rays.end());
    if (gens.empty()) return matrix_columns(identity_matrix(c.dim()));
    return matrix_columns(integer_kernel(rows_matrix(gens, c.dim())));
}

bool is_pointed(const RationalCone& c) { return lineality_space(c).empty(); }

IntMatrix span_lattice(const RationalCone& c) {
    const Index d = c.dim();
    if (c.is_zero()) return zero_matrix(d, 0);
    IntMatrix R = columns_matrix(c.rays(), d);
    IntMatrix K = integer_kernel(IntMatrix(R.transpose()));
    if (K.cols() == 0) return identity_matrix(d);
    return integer_kernel(IntMatrix(K.transpose()));
}

std::vector<IntVector> extreme_rays(const RationalCone& c) {
    if (c.is_zero()) return {};
    DualDescription d = dual_description(c);
    const Index k = rank(columns_matrix(c.rays(), c.dim()));
    std::vector<IntVector> out;
    for (const auto& r : c.rays()) {
        std::vector<IntVector> tight;
        for (const auto& f : d.rays)
            if (dot(f, r).is_zero()) tight.push_back(f);
        Index rk = tight.empty() ? 0 : rank(rows_matrix(tight, c.dim()));
        if (rk == k - 1) out.push_back(r);
    }
    return out;
}

IntVector positive_grading(const RationalCone& c) {
    if (!is_pointed(c)) throw InputError("positive_grading: cone is not pointed");
    IntVector g = zero_vector(c.dim());
    for (const auto& f : dual_description(c).rays) g += f;
    return g;
}

namespace {

using IndexSet = std::vector<size_t>;

struct Triangulator {
    const std::vector<IntVector>& rays;
    std::vector<IndexSet> facets;  // rays on each facet
    Index dim;

    Index rank_of(const IndexSet& s) const {
        std::vector<IntVector> v;
        for (auto i : s) v.push_back(rays[i]);
        return v.empty() ? 0 : rank(columns_matrix(v, dim));
    }

    void run(const IndexSet& S, Index f, std::vector<IndexSet>& out) const {
        if (static_cast<Index>(S.size()) == f) {
            out.push_back(S);
            return;
        }
        const size_t v = S[0];
        std::set<IndexSet> faces;
        for (const auto& F : facets) {
            IndexSet T;
            std::set_intersection(S.begin(), S.end(), F.begin(), F.end(), std::back_inserter(T));
            if (static_cast<Index>(T.size()) < f - 1 || T.size() == S.size()) continue;
            if (std::binary_search(T.begin(), T.end(), v)) continue;
            if (faces.count(T)) continue;
            if (rank_of(T) == f - 1) faces.insert(T);
        }
        for (const auto& T : faces) {
            std::vector<IndexSet> sub;
            run(T, f - 1, sub);
            for (auto& s : sub) {
                s.push_back(v);
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
        }
    }
};

// Nonzero lattice points of the half-open parallelotope spanned by the columns of A.
void parallelotope_points(const IntMatrix& A, std::set<IntVector, LexLess>& out) {
    SmithForm s = smith_normal_form(A);
    const Index k = A.cols();
    const Integer delta = s.diagonal.back();
    std::vector<long long> radix;
    long long total = 1;
    for (const auto& d : s.diagonal) {
        radix.push_back(d.to_ll());
        total *= radix.back();
    }
    std::vector<long long> y(static_cast<size_t>(k), 0);
    for (long long idx = 1; idx < total; ++idx) {
        for (size_t i = 0; i < y.size(); ++i) {
            if (++y[i] < radix[i]) break;
            y[i] = 0;
        }
        IntVector scaled(k);
        for (Index i = 0; i < k; ++i) scaled(i) = Integer(y[static_cast<size_t>(i)]) * (delta / s.diagonal[i]);
        IntVector N = s.V * scaled;
        for (Index i = 0; i < k; ++i) N(i) = mod(N(i), delta);
        IntVector x = A * N;
        for (Index i = 0; i < x.size(); ++i) x(i) /= delta;
        out.insert(x);
    }
}

}  // namespace

std::vector<IntVector> hilbert_basis(const RationalCone& c) {
    if (c.is_zero()) return {};
    if (!is_pointed(c)) throw InputError("hilbert_basis: cone is not pointed");
    const IntMatrix B = span_lattice(c);
    const Index k = B.cols();
    std::vector<IntVector> local;
    for (const auto& r : c.rays()) {
        auto x = solve_integer(B, r);
        if (!x) throw VerificationFailure("hilbert_basis: ray outside its span lattice");
        local.push_back(*x);
    }
    RationalCone lc(k, local);
    DualDescription dual = dual_description(lc);
    std::vector<IntVector> ext = extreme_rays(lc);

    Triangulator tri{ext, {}, k};
    for (const auto& f : dual.rays) {
        IndexSet on;
        for (size_t i = 0; i < ext.size(); ++i)
            if (dot(f, ext[i]).is_zero()) on.push_back(i);
        tri.facets.push_back(on);
    }
    IndexSet all(ext.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<IndexSet> simplices;
    tri.run(all, k, simplices);

    std::set<IntVector, LexLess> cand(ext.begin(), ext.end());
    for (const auto& s : simplices) {
        std::vector<IntVector> cols;
        for (auto i : s) cols.push_back(ext[i]);
        parallelotope_points(columns_matrix(cols, k), cand);
    }

    IntVector grading = zero_vector(k);
    for (const auto& f : dual.rays) grading += f;
    std::vector<std::pair<Integer, IntVector>> order;
    for (const auto& x : cand) order.emplace_back(dot(grading, x), x);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : lex_less(a.second, b.second);
    });
    std::vector<std::pair<Integer, IntVector>> irreducible;
    for (const auto& [deg, x] : order) {
        bool reducible = false;
        for (const auto& [hd, h] : irreducible) {
            if (hd >= deg) break;
            if (contains(dual, IntVector(x - h))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irreducible.emplace_back(deg, x);
    }
    std::vector<IntVector> out;
    for (const auto& [deg, h] : irreducible) out.emplace_back(B * h);
    sort_unique(out);
    return out;
}

}  // namespace logmonoid
