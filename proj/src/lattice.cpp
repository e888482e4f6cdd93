#include "logmonoid/lattice.hpp"

#include "logmonoid/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace logmonoid {

namespace {

struct SmithWork {
    IntMatrix D, U, Ui, V, Vi;

    void add_row(Index dst, Index src, const Integer& c) {  // row_dst += c * row_src
        D.row(dst) += c * D.row(src);
        U.row(dst) += c * U.row(src);
        Ui.col(src) -= c * Ui.col(dst);
    }
    void swap_rows(Index i, Index j) {
        if (i == j) return;
        D.row(i).swap(D.row(j));
        U.row(i).swap(U.row(j));
        Ui.col(i).swap(Ui.col(j));
    }
    void negate_row(Index i) {
        D.row(i) = -D.row(i);
        U.row(i) = -U.row(i);
        Ui.col(i) = -Ui.col(i);
    }
    void add_col(Index dst, Index src, const Integer& c) {  // col_dst += c * col_src
        D.col(dst) += c * D.col(src);
        V.col(dst) += c * V.col(src);
        Vi.row(src) -= c * Vi.row(dst);
    }
    void swap_cols(Index i, Index j) {
        if (i == j) return;
        D.col(i).swap(D.col(j));
        V.col(i).swap(V.col(j));
        Vi.row(i).swap(Vi.row(j));
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    const Index m = A.rows(), n = A.cols();
    SmithWork w{A, identity_matrix(m), identity_matrix(m), identity_matrix(n), identity_matrix(n)};
    Index t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            Index pi = -1, pj = -1;
            Integer best = 0;
            for (Index i = t; i < m; ++i)
                for (Index j = t; j < n; ++j)
                    if (!w.D(i, j).is_zero() && (pi < 0 || abs(w.D(i, j)) < best)) {
                        best = abs(w.D(i, j));
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) goto done;
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            bool clean = true;
            for (Index i = t + 1; i < m; ++i)
                if (!w.D(i, t).is_zero()) {
                    w.add_row(i, t, -floor_div(w.D(i, t), w.D(t, t)));
                    if (!w.D(i, t).is_zero()) clean = false;
                }
            for (Index j = t + 1; j < n; ++j)
                if (!w.D(t, j).is_zero()) {
                    w.add_col(j, t, -floor_div(w.D(t, j), w.D(t, t)));
                    if (!w.D(t, j).is_zero()) clean = false;
                }
            if (!clean) continue;
            Index bad = -1;
            for (Index i = t + 1; i < m && bad < 0; ++i)
                for (Index j = t + 1; j < n; ++j)
                    if (!mod(w.D(i, j), w.D(t, t)).is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            w.add_row(t, bad, 1);
        }
        if (w.D(t, t).sign() < 0) w.negate_row(t);
    }
done:
    SmithForm s;
    s.rank = t;
    for (Index i = 0; i < t; ++i) s.diagonal.push_back(w.D(i, i));
    s.D = std::move(w.D);
    s.U = std::move(w.U);
    s.U_inv = std::move(w.Ui);
    s.V = std::move(w.V);
    s.V_inv = std::move(w.Vi);
    return s;
}

HermiteForm hermite_normal_form(const IntMatrix& A) {
    const Index m = A.rows(), n = A.cols();
    IntMatrix H = A, U = identity_matrix(m);
    auto add_row = [&](Index dst, Index src, const Integer& c) {
        H.row(dst) += c * H.row(src);
        U.row(dst) += c * U.row(src);
    };
    Index r = 0;
    for (Index c = 0; c < n && r < m; ++c) {
        for (;;) {
            Index p = -1;
            for (Index i = r; i < m; ++i)
                if (!H(i, c).is_zero() && (p < 0 || abs(H(i, c)) < abs(H(p, c)))) p = i;
            if (p < 0) break;
            if (p != r) {
                H.row(p).swap(H.row(r));
                U.row(p).swap(U.row(r));
            }
            bool clean = true;
            for (Index i = r + 1; i < m; ++i)
                if (!H(i, c).is_zero()) {
                    add_row(i, r, -floor_div(H(i, c), H(r, c)));
                    if (!H(i, c).is_zero()) clean = false;
                }
            if (clean) break;
        }
        if (H(r, c).is_zero()) continue;
        if (H(r, c).sign() < 0) {
            H.row(r) = -H.row(r);
            U.row(r) = -U.row(r);
        }
        for (Index i = 0; i < r; ++i)
            if (!H(i, c).is_zero()) add_row(i, r, -floor_div(H(i, c), H(r, c)));
        ++r;
    }
    return {std::move(H), std::move(U), r};
}

Index rank(const IntMatrix& A) { return hermite_normal_form(A).rank; }

IntMatrix integer_kernel(const IntMatrix& A) {
    SmithForm s = smith_normal_form(A);
    const Index n = A.cols();
    IntMatrix K = s.V.rightCols(n - s.rank);
    if (K.cols() == 0) return K;
    HermiteForm h = hermite_normal_form(IntMatrix(K.transpose()));
    return h.H.topRows(h.rank).transpose();
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows()) throw InputError("solve_integer: dimension mismatch");
    SmithForm s = smith_normal_form(A);
    IntVector c = s.U * b;
    IntVector y = zero_vector(A.cols());
    for (Index i = 0; i < A.rows(); ++i) {
        if (i < s.rank) {
            if (!mod(c(i), s.diagonal[i]).is_zero()) return std::nullopt;
            y(i) = c(i) / s.diagonal[i];
        } else if (!c(i).is_zero()) {
            return std::nullopt;
        }
    }
    return IntVector(s.V * y);
}

std::optional<RationalVector> solve_rational(const IntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows()) throw InputError("solve_rational: dimension mismatch");
    SmithForm s = smith_normal_form(A);
    IntVector c = s.U * b;
    for (Index i = s.rank; i < A.rows(); ++i)
        if (!c(i).is_zero()) return std::nullopt;
    Integer den = s.rank ? s.diagonal.back() : Integer(1);
    IntVector y = zero_vector(A.cols());
    for (Index i = 0; i < s.rank; ++i) y(i) = c(i) * (den / s.diagonal[i]);
    IntVector num = s.V * y;
    Integer g = gcd(content(num), den);
    if (g > 1) {
        for (Index i = 0; i < num.size(); ++i) num(i) /= g;
        den /= g;
    }
    return RationalVector{num, den};
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw InputError("hcat: row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    m.leftCols(a.cols()) = a;
    m.rightCols(b.cols()) = b;
    return m;
}

IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw InputError("vcat: column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    m.topRows(a.rows()) = a;
    m.bottomRows(b.rows()) = b;
    return m;
}

// ---------------------------------------------------------------- groups

FinAbGroup::FinAbGroup(Index free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    if (free_rank_ < 0) throw InputError("negative free rank");
    for (size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw InputError("torsion coefficient must be >= 2");
        if (i && !mod(torsion_[i], torsion_[i - 1]).is_zero())
            throw InputError("torsion coefficients must form a divisibility chain");
    }
}

Integer FinAbGroup::order() const {
    if (free_rank_) throw InputError("order of an infinite group");
    Integer o = 1;
    for (const auto& d : torsion_) o *= d;
    return o;
}

Integer FinAbGroup::exponent() const { return torsion_.empty() ? Integer(1) : torsion_.back(); }

IntVector FinAbGroup::reduce(const IntVector& x) const {
    if (x.size() != dim()) throw InputError("element has wrong length for " + to_string(*this));
    IntVector y = x;
    for (size_t i = 0; i < torsion_.size(); ++i) {
        Index k = free_rank_ + static_cast<Index>(i);
        y(k) = mod(y(k), torsion_[i]);
    }
    return y;
}

bool FinAbGroup::contains(const IntVector& x) const {
    if (x.size() != dim()) return false;
    for (size_t i = 0; i < torsion_.size(); ++i) {
        const Integer& v = x(free_rank_ + static_cast<Index>(i));
        if (v.sign() < 0 || v >= torsion_[i]) return false;
    }
    return true;
}

std::optional<Integer> FinAbGroup::element_order(const IntVector& x) const {
    IntVector y = reduce(x);
    for (Index i = 0; i < free_rank_; ++i)
        if (!y(i).is_zero()) return std::nullopt;
    Integer o = 1;
    for (size_t i = 0; i < torsion_.size(); ++i)
        o = lcm(o, torsion_[i] / gcd(y(free_rank_ + static_cast<Index>(i)), torsion_[i]));
    return o;
}

IntMatrix FinAbGroup::relations() const {
    IntMatrix r = zero_matrix(dim(), static_cast<Index>(torsion_.size()));
    for (size_t i = 0; i < torsion_.size(); ++i) r(free_rank_ + static_cast<Index>(i), static_cast<Index>(i)) = torsion_[i];
    return r;
}

std::string to_string(const FinAbGroup& g) {
    std::string s;
    if (g.free_rank() || g.torsion().empty()) s = "Z^" + std::to_string(g.free_rank());
    for (const auto& d : g.torsion()) s += (s.empty() ? "" : "+") + ("Z/" + d.str());
    return s;
}

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
        throw InputError("hom matrix has wrong shape");
    for (Index j = 0; j < matrix_.cols(); ++j) matrix_.col(j) = target_.reduce(matrix_.col(j));
    for (size_t i = 0; i < source_.torsion().size(); ++i) {
        Index j = source_.free_rank() + static_cast<Index>(i);
        IntVector img = matrix_.col(j) * source_.torsion()[i];
        if (!logmonoid::is_zero(target_.reduce(img))) throw InputError("hom does not respect torsion of the source");
    }
}

GroupHom GroupHom::identity(const FinAbGroup& g) { return GroupHom(g, g, identity_matrix(g.dim())); }

GroupHom GroupHom::zero(const FinAbGroup& source, const FinAbGroup& target) {
    return GroupHom(source, target, zero_matrix(target.dim(), source.dim()));
}

IntVector GroupHom::apply(const IntVector& x) const {
    if (x.size() != source_.dim()) throw InputError("element has wrong length for hom source");
    return target_.reduce(matrix_ * x);
}

bool GroupHom::is_zero() const {
    for (Index i = 0; i < matrix_.rows(); ++i)
        for (Index j = 0; j < matrix_.cols(); ++j)
            if (!matrix_(i, j).is_zero()) return false;
    return true;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (!(f.target() == g.source())) throw InputError("compose: incompatible groups");
    return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.source() == b.source() && a.target() == b.target() && a.matrix() == b.matrix();
}

Cokernel cokernel_of_relations(const IntMatrix& R) {
    const Index n = R.rows();
    SmithForm s = smith_normal_form(R);
    const Index rho = s.rank;
    std::vector<Index> tors;
    std::vector<Integer> tors_d;
    for (Index i = 0; i < rho; ++i)
        if (s.diagonal[i] > 1) {
            tors.push_back(i);
            tors_d.push_back(s.diagonal[i]);
        }
    const Index r = n - rho;
    IntMatrix F = s.U.bottomRows(r);
    HermiteForm hf = hermite_normal_form(F);
    IntMatrix L = s.U_inv.rightCols(r);
    // hf.H = W F, so the lifts become L W^{-1}.
    IntMatrix Winv(r, r);
    for (Index j = 0; j < r; ++j) {
        auto col = solve_integer(hf.U, unit_vector(r, j));
        if (!col) throw VerificationFailure("cokernel: non-unimodular Hermite transform");
        Winv.col(j) = *col;
    }
    const Index k = static_cast<Index>(tors.size());
    IntMatrix P(r + k, n), S(n, r + k);
    P.topRows(r) = hf.H;
    S.leftCols(r) = L * Winv;
    for (Index a = 0; a < k; ++a) {
        IntVector row = s.U.row(tors[a]).transpose();
        for (Index j = 0; j < n; ++j) row(j) = mod(row(j), tors_d[a]);
        P.row(r + a) = row.transpose();
        S.col(r + a) = s.U_inv.col(tors[a]);
    }
    FinAbGroup G(r, tors_d);
    return {G, GroupHom(FinAbGroup::free(n), G, P), S};
}

Cokernel cokernel(const GroupHom& f) {
    Cokernel c = cokernel_of_relations(hcat(f.matrix(), f.target().relations()));
    c.projection = GroupHom(f.target(), c.group, c.projection.matrix());
    for (Index j = 0; j < c.section.cols(); ++j) c.section.col(j) = f.target().reduce(c.section.col(j));
    return c;
}

std::vector<IntVector> kernel_lattice(const GroupHom& f) {
    IntMatrix K = integer_kernel(hcat(f.matrix(), f.target().relations()));
    std::vector<IntVector> gens;
    for (Index j = 0; j < K.cols(); ++j) gens.emplace_back(K.col(j).head(f.source().dim()));
    return canonical_generators(f.source(), gens);
}

std::optional<IntVector> preimage(const GroupHom& f, const IntVector& y) {
    auto z = solve_integer(hcat(f.matrix(), f.target().relations()), f.target().reduce(y));
    if (!z) return std::nullopt;
    return f.source().reduce(z->head(f.source().dim()));
}

std::vector<IntVector> canonical_generators(const FinAbGroup& g, const std::vector<IntVector>& gens) {
    std::vector<IntVector> rows;
    for (const auto& x : gens) rows.push_back(g.reduce(x));
    IntMatrix rel = g.relations();
    for (Index j = 0; j < rel.cols(); ++j) rows.emplace_back(rel.col(j));
    if (rows.empty()) return {};
    HermiteForm h = hermite_normal_form(rows_matrix(rows, g.dim()));
    std::vector<IntVector> out;
    for (Index i = 0; i < h.rank; ++i) {
        IntVector v = g.reduce(h.H.row(i).transpose());
        if (!is_zero(v)) out.push_back(v);
    }
    sort_unique(out);
    return out;
}

std::optional<IntVector> Subgroup::coordinates(const IntVector& x) const { return preimage(inclusion, x); }

Subgroup subgroup_structure(const FinAbGroup& g, const std::vector<IntVector>& gens) {
    const Index s = static_cast<Index>(gens.size());
    IntMatrix M(g.dim(), s);
    for (Index j = 0; j < s; ++j) M.col(j) = g.reduce(gens[static_cast<size_t>(j)]);
    GroupHom phi(FinAbGroup::free(s), g, M);
    std::vector<IntVector> ker = kernel_lattice(phi);
    Cokernel c = cokernel_of_relations(columns_matrix(ker, s));
    return {c.group, GroupHom(c.group, g, M * c.section)};
}

GroupHom hom_from_generators(const FinAbGroup& src, const std::vector<IntVector>& gens, const FinAbGroup& tgt,
                             const std::vector<IntVector>& imgs) {
    if (imgs.size() != gens.size()) throw InputError("hom_from_generators: wrong number of images");
    GroupHom phi(FinAbGroup::free(static_cast<Index>(gens.size())), src, columns_matrix(gens, src.dim()));
    IntMatrix I = columns_matrix(imgs, tgt.dim());
    IntMatrix M(tgt.dim(), src.dim());
    for (Index k = 0; k < src.dim(); ++k) {
        auto x = preimage(phi, src.basis(k));
        if (!x) throw PreconditionError("hom_from_generators: elements do not generate", to_string(src.basis(k)));
        M.col(k) = tgt.reduce(I * *x);
    }
    for (size_t i = 0; i < gens.size(); ++i)
        if (!equal(tgt.reduce(M * gens[i]), tgt.reduce(imgs[i])))
            throw InputError("hom_from_generators: images do not respect the relations");
    return GroupHom(src, tgt, M);
}

GroupHom section_onto_free(const GroupHom& f) {
    if (!f.target().is_torsion_free()) throw InputError("section_onto_free: target has torsion");
    const Index n = f.target().dim();
    IntMatrix S(f.source().dim(), n);
    for (Index j = 0; j < n; ++j) {
        auto x = preimage(f, unit_vector(n, j));
        if (!x) throw PreconditionError("section_onto_free: map is not surjective", to_string(unit_vector(n, j)));
        S.col(j) = *x;
    }
    return GroupHom(f.target(), f.source(), S);
}

Integer subgroup_order(const FinAbGroup& g, const std::vector<IntVector>& gens) {
    return subgroup_structure(g, gens).group.order();
}

namespace {

long long small(const Integer& x) { return x.to_ll(); }

// Subgroups of the p-primary part, as sorted index sets over mixed-radix elements.
struct PrimaryPart {
    std::vector<Index> coords;
    std::vector<long long> radix;
    long long size = 1;
    std::vector<std::vector<long long>> digits;

    long long add(long long a, long long b) const {
        long long idx = 0, mul = 1;
        for (size_t i = 0; i < radix.size(); ++i) {
            idx += ((digits[a][i] + digits[b][i]) % radix[i]) * mul;
            mul *= radix[i];
        }
        return idx;
    }
};

std::vector<long long> closure(const PrimaryPart& pp, const std::vector<long long>& H, long long g) {
    std::vector<char> in(static_cast<size_t>(pp.size), 0);
    for (auto h : H) in[h] = 1;
    std::vector<long long> out = H;
    long long kg = g;
    while (!in[kg]) {
        for (auto h : H) {
            long long e = pp.add(h, kg);
            if (!in[e]) {
                in[e] = 1;
                out.push_back(e);
            }
        }
        kg = pp.add(kg, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<IntVector>> subgroup_enumerate(const FinAbGroup& g, const Integer& bound) {
    if (!g.is_finite()) throw InputError("subgroup_enumerate: group is infinite");
    if (g.order() > bound)
        throw BoundExceeded("subgroup_enumerate: |G| = " + g.order().str() + " exceeds bound " + bound.str());
    const Index n = g.dim();
    std::vector<long long> primes;
    long long e = small(g.exponent());
    for (long long p = 2; p * p <= e; ++p)
        if (e % p == 0) {
            primes.push_back(p);
            while (e % p == 0) e /= p;
        }
    if (e > 1) primes.push_back(e);

    // Per prime: list of subgroups, each as generators embedded in G.
    std::vector<std::vector<std::vector<IntVector>>> per_prime;
    for (long long p : primes) {
        PrimaryPart pp;
        std::vector<long long> embed;
        for (Index i = 0; i < n; ++i) {
            long long d = small(g.torsion()[static_cast<size_t>(i)]), q = 1;
            while (d % (q * p) == 0) q *= p;
            if (q > 1) {
                pp.coords.push_back(i);
                pp.radix.push_back(q);
                embed.push_back(d / q);
                pp.size *= q;
            }
        }
        pp.digits.resize(static_cast<size_t>(pp.size));
        for (long long idx = 0; idx < pp.size; ++idx) {
            long long t = idx;
            for (long long r : pp.radix) {
                pp.digits[idx].push_back(t % r);
                t /= r;
            }
        }
        std::set<std::vector<long long>> seen;
        std::deque<std::vector<long long>> queue;
        seen.insert({0});
        queue.push_back({0});
        while (!queue.empty()) {
            std::vector<long long> H = queue.front();
            queue.pop_front();
            std::vector<char> in(static_cast<size_t>(pp.size), 0);
            for (auto h : H) in[h] = 1;
            for (long long x = 1; x < pp.size; ++x) {
                if (in[x]) continue;
                auto K = closure(pp, H, x);
                if (seen.insert(K).second) queue.push_back(std::move(K));
            }
        }
        std::vector<std::vector<IntVector>> subs;
        for (const auto& H : seen) {
            std::vector<long long> span{0};
            std::vector<IntVector> gens;
            for (long long x : H) {
                if (span.size() == H.size()) break;
                if (std::binary_search(span.begin(), span.end(), x)) continue;
                span = closure(pp, span, x);
                IntVector v = zero_vector(n);
                for (size_t i = 0; i < pp.coords.size(); ++i) v(pp.coords[i]) = pp.digits[x][i] * embed[i];
                gens.push_back(v);
            }
            subs.push_back(std::move(gens));
        }
        per_prime.push_back(std::move(subs));
    }

    std::vector<std::vector<IntVector>> out;
    std::vector<size_t> pick(per_prime.size(), 0);
    for (;;) {
        std::vector<IntVector> gens;
        for (size_t k = 0; k < per_prime.size(); ++k)
            for (const auto& v : per_prime[k][pick[k]]) gens.push_back(v);
        out.push_back(canonical_generators(g, gens));
        size_t k = 0;
        while (k < pick.size() && ++pick[k] == per_prime[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<IntVector>& a, const std::vector<IntVector>& b) { return lex_less(a, b); });
    return out;
}

DirectSum direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    const Index na = a.dim(), nb = b.dim();
    IntMatrix ra = a.relations(), rb = b.relations();
    IntMatrix R = zero_matrix(na + nb, ra.cols() + rb.cols());
    R.topLeftCorner(na, ra.cols()) = ra;
    R.bottomRightCorner(nb, rb.cols()) = rb;
    Cokernel c = cokernel_of_relations(R);
    const IntMatrix& P = c.projection.matrix();
    DirectSum d;
    d.group = c.group;
    d.inj1 = GroupHom(a, c.group, P.leftCols(na));
    d.inj2 = GroupHom(b, c.group, P.rightCols(nb));
    d.proj1 = GroupHom(c.group, a, c.section.topRows(na));
    d.proj2 = GroupHom(c.group, b, c.section.bottomRows(nb));
    return d;
}

}  // namespace logmonoid
