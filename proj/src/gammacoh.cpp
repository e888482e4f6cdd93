#include "logmonoid/gammacoh.hpp"

#include "logmonoid/error.hpp"

#include <algorithm>
#include <map>

namespace logmonoid {

namespace {

FqMatrix normalized(const Fq& f, const FqMatrix& m) {
    FqMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = FqElem(m(i, j).code(f), &f);
    return out;
}

std::vector<std::vector<Index>> subsets_of_size(Index n, Index k) {
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur;
    auto rec = [&](auto&& self, Index start) -> void {
        if (static_cast<Index>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (Index j = start; j < n; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Columns of a followed by columns of b.
FqMatrix hstack(const Fq& f, const FqMatrix& a, const FqMatrix& b) {
    FqMatrix out = fq_zero(f, a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

FqMatrix minus_identity(const Fq& f, const FqMatrix& g) { return FqMatrix(g - fq_identity(f, g.rows())); }

// Basis of the intersection of two column spaces.
FqMatrix intersect(const Fq& f, const FqMatrix& u, const FqMatrix& v) {
    if (u.cols() == 0 || v.cols() == 0) return fq_zero(f, u.rows(), 0);
    FqMatrix k = kernel(f, hstack(f, u, FqMatrix(-v)));
    FqMatrix w = u * k.topRows(u.cols());
    return column_basis(f, w);
}

void require_same_field(const GammaModule& a, const GammaModule& b) {
    if (a.fq().order() != b.fq().order()) throw InputError("modules over different fields");
}

}  // namespace

GammaModule::GammaModule(Field field, Index dim, std::vector<FqMatrix> gammas) : field_(std::move(field)), dim_(dim) {
    if (!field_) throw InputError("module without a field");
    if (dim < 0) throw InputError("negative module dimension");
    const Fq& f = *field_;
    for (auto& g : gammas) {
        if (g.rows() != dim || g.cols() != dim) throw InputError("operator has the wrong size");
        g = normalized(f, g);
        if (logmonoid::rank(f, g) != dim) throw InputError("operator is not invertible");
    }
    for (size_t i = 0; i < gammas.size(); ++i)
        for (size_t j = i + 1; j < gammas.size(); ++j)
            if (!fq_equal(FqMatrix(gammas[i] * gammas[j]), FqMatrix(gammas[j] * gammas[i])))
                throw InputError("operators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
    gammas_ = std::move(gammas);
}

GammaModule GammaModule::trivial(Field field, Index dim, Index n) {
    const Fq& f = *field;
    return GammaModule(field, dim, std::vector<FqMatrix>(static_cast<size_t>(n), fq_identity(f, dim)));
}

Index KoszulComplex::term_dim(Index i) const {
    if (i < 0 || i >= static_cast<Index>(subsets.size())) return 0;
    return module_dim * static_cast<Index>(subsets[static_cast<size_t>(i)].size());
}

KoszulComplex koszul_complex(const GammaModule& m) {
    const Fq& f = m.fq();
    const Index n = m.rank(), d = m.dim();
    KoszulComplex k;
    k.module_dim = d;
    for (Index i = 0; i <= n; ++i) k.subsets.push_back(subsets_of_size(n, i));
    for (Index i = 0; i < n; ++i) {
        const auto& src = k.subsets[static_cast<size_t>(i)];
        const auto& dst = k.subsets[static_cast<size_t>(i + 1)];
        std::map<std::vector<Index>, Index> where;
        for (size_t t = 0; t < dst.size(); ++t) where[dst[t]] = static_cast<Index>(t);
        FqMatrix D = fq_zero(f, d * static_cast<Index>(dst.size()), d * static_cast<Index>(src.size()));
        for (size_t s = 0; s < src.size(); ++s) {
            const auto& S = src[s];
            for (Index j = 0; j < n; ++j) {
                if (std::binary_search(S.begin(), S.end(), j)) continue;
                auto T = S;
                T.insert(std::upper_bound(T.begin(), T.end(), j), j);
                Index below = std::count_if(S.begin(), S.end(), [&](Index x) { return x < j; });
                FqMatrix block = minus_identity(f, m.gamma(j));
                if (below % 2) block = FqMatrix(-block);
                D.block(where.at(T) * d, static_cast<Index>(s) * d, d, d) = block;
            }
        }
        k.differentials.push_back(D);
    }
    for (size_t i = 0; i + 1 < k.differentials.size(); ++i)
        if (!is_zero(FqMatrix(k.differentials[i + 1] * k.differentials[i])))
            throw VerificationFailure("koszul_complex: d o d is not zero");
    return k;
}

namespace {

// Cycles of C^i and boundaries in C^i, as column bases.
struct CyclesBoundaries {
    std::vector<FqMatrix> cycles, boundaries;
};

CyclesBoundaries cycles_boundaries(const Fq& f, const KoszulComplex& k) {
    const Index n = static_cast<Index>(k.subsets.size()) - 1;
    CyclesBoundaries out;
    for (Index i = 0; i <= n; ++i) {
        const Index dim = k.term_dim(i);
        out.cycles.push_back(i < n ? kernel(f, k.differentials[static_cast<size_t>(i)]) : fq_identity(f, dim));
        out.boundaries.push_back(i > 0 ? column_basis(f, k.differentials[static_cast<size_t>(i - 1)]) : fq_zero(f, dim, 0));
    }
    return out;
}

}  // namespace

Cohomology koszul_cohomology(const GammaModule& m) {
    const Fq& f = m.fq();
    KoszulComplex k = koszul_complex(m);
    CyclesBoundaries cb = cycles_boundaries(f, k);
    Cohomology out;
    for (size_t i = 0; i < cb.cycles.size(); ++i) {
        FqMatrix acc = cb.boundaries[i];
        Index base = acc.cols();
        std::vector<Index> chosen;
        for (Index c = 0; c < cb.cycles[i].cols(); ++c) {
            FqMatrix trial = hstack(f, acc, cb.cycles[i].col(c));
            if (rank(f, trial) > acc.cols()) {
                acc = trial;
                chosen.push_back(c);
            }
        }
        FqMatrix basis = fq_zero(f, cb.cycles[i].rows(), static_cast<Index>(chosen.size()));
        for (size_t c = 0; c < chosen.size(); ++c) basis.col(static_cast<Index>(c)) = cb.cycles[i].col(chosen[c]);
        out.dims.push_back(acc.cols() - base);
        out.bases.push_back(basis);
    }
    return out;
}

GammaModule character_module(const LogPoint& pt, long long m, const std::vector<long long>& chi, const Field& f) {
    if (m < 1) throw InputError("character level must be positive");
    if (static_cast<Index>(chi.size()) != pt.rank()) throw InputError("character has the wrong number of values");
    auto zeta = f->root_of_unity(m);
    if (!zeta)
        throw InputError("F_" + std::to_string(f->order()) + " has no primitive " + std::to_string(m) + "-th root of unity");
    std::vector<FqMatrix> gammas;
    for (long long c : chi) {
        FqMatrix g(1, 1);
        g(0, 0) = FqElem(f->pow(*zeta, ((c % m) + m) % m), f.get());
        gammas.push_back(g);
    }
    return GammaModule(f, 1, gammas);
}

Annihilation annihilation_check(const GammaModule& m) {
    const Fq& f = m.fq();
    Annihilation out;
    for (Index j = 0; j < m.rank() && !out.applicable; ++j)
        if (rank(f, minus_identity(f, m.gamma(j))) == m.dim() && m.dim() > 0) {
            out.applicable = true;
            out.witness = j;
        }
    out.dims = koszul_cohomology(m).dims;
    if (out.applicable)
        for (Index d : out.dims)
            if (d != 0) throw VerificationFailure("annihilation_check: cohomology of a nontrivial character is nonzero");
    return out;
}

std::vector<IntVector> s_chi(const LogPoint& pt, long long m, const IntVector& chi) {
    if (m < 1) throw InputError("s_chi: level must be positive");
    const IntegralMonoid& p = pt.monoid();
    const Index n = pt.rank();
    if (chi.size() != n) throw InputError("s_chi: character has the wrong length");
    RationalCone cone = p.free_cone();
    DualDescription dual = dual_description(cone);
    std::vector<long long> bound(static_cast<size_t>(n), 0);
    for (const auto& r : extreme_rays(cone))
        for (Index k = 0; k < n; ++k) bound[static_cast<size_t>(k)] += m * abs(r(k)).to_ll();

    IntVector base(n);
    for (Index k = 0; k < n; ++k) base(k) = mod(chi(k), Integer(m));
    // Points base + m y in the box.
    auto for_box = [&](const std::vector<long long>& b, auto&& fn) {
        std::vector<long long> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n)), y(static_cast<size_t>(n));
        for (size_t k = 0; k < lo.size(); ++k) {
            long long c = base(static_cast<Index>(k)).to_ll();
            lo[k] = -((b[k] + c) / m) - 1;
            hi[k] = (b[k] - c) / m + 1;
            y[k] = lo[k];
        }
        for (;;) {
            IntVector z(n);
            for (Index k = 0; k < n; ++k) z(k) = base(k) + Integer(m * y[static_cast<size_t>(k)]);
            fn(z);
            size_t k = 0;
            while (k < y.size() && ++y[k] > hi[k]) y[k] = lo[k], ++k;
            if (k == y.size()) break;
        }
    };

    std::vector<IntVector> out;
    for_box(bound, [&](const IntVector& z) {
        if (!contains(dual, z)) return;
        for (const auto& g : p.generators())
            if (contains(dual, IntVector(z - Integer(m) * g))) return;
        out.push_back(z);
    });
    sort_unique(out);

    MembershipOracle po(p);
    std::vector<long long> region(bound);
    for (auto& b : region) b = 2 * b + m;
    for_box(region, [&](const IntVector& z) {
        bool in_fiber = contains(dual, z);
        bool covered = false;
        for (const auto& s : out) {
            IntVector w = z - s;
            for (Index k = 0; k < n; ++k) w(k) /= Integer(m);
            if (po.contains(w)) {
                covered = true;
                break;
            }
        }
        if (in_fiber != covered) throw VerificationFailure("s_chi: fiber is not S_chi + P at " + to_string(z));
    });
    return out;
}

GammaModule jr_module(Index r, const std::vector<long long>& n, const Field& f) {
    if (r < 1) throw InputError("jr_module: r must be positive");
    FqMatrix J = fq_identity(*f, r);
    for (Index i = 0; i + 1 < r; ++i) J(i, i + 1) = FqElem(1, f.get());
    std::vector<FqMatrix> gammas;
    for (long long k : n) gammas.push_back(power(*f, J, k));
    return GammaModule(f, r, gammas);
}

GammaModule km_module(Index m, const Field& f, const std::vector<long long>& n) {
    if (m < 1) throw InputError("km_module: m must be positive");
    FqMatrix C = fq_zero(*f, m, m);
    for (Index i = 0; i < m; ++i) C((i + 1) % m, i) = FqElem(1, f.get());
    std::vector<FqMatrix> gammas;
    for (long long k : n) gammas.push_back(power(*f, C, k));
    return GammaModule(f, m, gammas);
}

GammaModule tensor(const GammaModule& a, const GammaModule& b) {
    require_same_field(a, b);
    if (a.rank() != b.rank()) throw InputError("tensor: modules over groups of different rank");
    std::vector<FqMatrix> gammas;
    for (Index j = 0; j < a.rank(); ++j) gammas.push_back(kronecker(a.gamma(j), b.gamma(j)));
    return GammaModule(a.field(), a.dim() * b.dim(), gammas);
}

GammaModule external_tensor(const GammaModule& a, const GammaModule& b) {
    require_same_field(a, b);
    const Fq& f = a.fq();
    std::vector<FqMatrix> gammas;
    for (const auto& g : a.gammas()) gammas.push_back(kronecker(g, fq_identity(f, b.dim())));
    for (const auto& g : b.gammas()) gammas.push_back(kronecker(fq_identity(f, a.dim()), g));
    return GammaModule(a.field(), a.dim() * b.dim(), gammas);
}

GammaModule restrict(const GammaModule& m, long long k) {
    std::vector<FqMatrix> gammas;
    for (const auto& g : m.gammas()) gammas.push_back(power(m.fq(), g, k));
    return GammaModule(m.field(), m.dim(), gammas);
}

GammaModule direct_sum(const GammaModule& a, const GammaModule& b) {
    require_same_field(a, b);
    if (a.rank() != b.rank()) throw InputError("direct_sum: modules over groups of different rank");
    const Fq& f = a.fq();
    std::vector<FqMatrix> gammas;
    for (Index j = 0; j < a.rank(); ++j) {
        FqMatrix g = fq_zero(f, a.dim() + b.dim(), a.dim() + b.dim());
        g.topLeftCorner(a.dim(), a.dim()) = a.gamma(j);
        g.bottomRightCorner(b.dim(), b.dim()) = b.gamma(j);
        gammas.push_back(g);
    }
    return GammaModule(a.field(), a.dim() + b.dim(), gammas);
}

bool is_unipotent(const Fq& f, const FqMatrix& g) { return is_zero(power(f, minus_identity(f, g), g.rows())); }

Submodule unipotent_part(const GammaModule& m) {
    const Fq& f = m.fq();
    FqMatrix basis = fq_identity(f, m.dim());
    for (const auto& g : m.gammas()) basis = intersect(f, basis, kernel(f, power(f, minus_identity(f, g), m.dim())));
    std::vector<FqMatrix> gammas;
    for (const auto& g : m.gammas()) {
        FqMatrix a = fq_zero(f, basis.cols(), basis.cols());
        for (Index c = 0; c < basis.cols(); ++c) {
            auto x = solve(f, basis, FqVector(g * basis.col(c)));
            if (!x) throw VerificationFailure("unipotent_part: subspace is not invariant");
            a.col(c) = *x;
        }
        gammas.push_back(a);
    }
    return {basis, GammaModule(m.field(), basis.cols(), gammas)};
}

namespace {

struct Level {
    KoszulComplex complex;
    CyclesBoundaries cb;
};

// C^i at level r into C^i at level s: the first r J-coordinates of every copy of M.
FqMatrix transition(const Fq& f, const KoszulComplex& k, Index i, Index d, Index r, Index s) {
    const Index blocks = static_cast<Index>(k.subsets[static_cast<size_t>(i)].size());
    FqMatrix T = fq_zero(f, blocks * d * s, blocks * d * r);
    for (Index b = 0; b < blocks; ++b)
        for (Index a = 0; a < d; ++a)
            for (Index t = 0; t < r; ++t) T(b * d * s + a * s + t, b * d * r + a * r + t) = FqElem(1, &f);
    return T;
}

}  // namespace

NearbyCycles nearby_unipotent(const GammaModule& m, const std::vector<long long>& n, Index r_max) {
    const Fq& f = m.fq();
    if (static_cast<Index>(n.size()) != m.rank()) throw InputError("nearby_unipotent: one multiplicity per generator needed");
    if (std::all_of(n.begin(), n.end(), [](long long x) { return x == 0; }))
        throw PreconditionError("nearby_unipotent: no generator acts through J_r");
    const Index d = m.dim();
    const Index top = m.rank();

    std::map<Index, Level> levels;
    auto level = [&](Index r) -> const Level& {
        auto it = levels.find(r);
        if (it != levels.end()) return it->second;
        KoszulComplex k = koszul_complex(tensor(m, jr_module(r, n, m.field())));
        CyclesBoundaries cb = cycles_boundaries(f, k);
        return levels.emplace(r, Level{std::move(k), std::move(cb)}).first->second;
    };
    auto map_rank = [&](Index i, Index r, Index s) {
        const Level& a = level(r);
        const Level& b = level(s);
        FqMatrix image = transition(f, a.complex, i, d, r, s) * a.cb.cycles[static_cast<size_t>(i)];
        const FqMatrix& bd = b.cb.boundaries[static_cast<size_t>(i)];
        return rank(f, hstack(f, image, bd)) - bd.cols();
    };

    for (Index r = 1; 2 * r + 3 <= r_max; ++r) {
        std::vector<Index> dims;
        bool stable = true;
        for (Index i = 0; i <= top && stable; ++i) {
            Index a = map_rank(i, r, 2 * r + 1), b = map_rank(i, r, 2 * r + 3), c = map_rank(i, r + 1, 2 * r + 3);
            stable = a == b && b == c;
            dims.push_back(a);
        }
        for (auto it = levels.begin(); it != levels.end() && it->first <= r;) it = levels.erase(it);
        if (!stable) continue;
        NearbyCycles out;
        out.dims = dims;
        out.stable_level = r;
        const Index s = 2 * r + 3;
        const FqMatrix& z = level(s).cb.cycles[0];
        FqMatrix values = fq_zero(f, d, z.cols());
        for (Index c = 0; c < z.cols(); ++c)
            for (Index a = 0; a < d; ++a) values(a, c) = z(a * s, c);
        out.h0_values = column_basis(f, values);
        return out;
    }
    throw BoundExceeded("nearby_unipotent: no stabilization up to r = " + std::to_string(r_max));
}

QuasiUnipotentNearby nearby_quasi_unipotent(const GammaModule& m, const std::vector<long long>& n, long long level,
                                            Index r_max) {
    if (level < 1) throw InputError("nearby_quasi_unipotent: level must be positive");
    GammaModule res = restrict(m, level);
    for (Index j = 0; j < res.rank(); ++j)
        if (!is_unipotent(res.fq(), res.gamma(j)))
            throw PreconditionError("nearby_quasi_unipotent: gamma_" + std::to_string(j) + "^" + std::to_string(level) +
                                    " is not unipotent");
    QuasiUnipotentNearby out;
    out.result = nearby_unipotent(res, n, r_max);
    if (m.rank() == 1 && level % m.fq().characteristic() != 0) {
        NearbyCycles tower = nearby_unipotent(tensor(m, km_module(level, m.field(), {1})), n, r_max);
        if (tower.dims != out.result.dims)
            throw VerificationFailure("nearby_quasi_unipotent: K_m tower disagrees with the restriction");
        out.tower_checked = true;
    }
    return out;
}

std::vector<Index> cyclic_cohomology(const Fq& f, long long m, const FqMatrix& g) {
    if (m < 1) throw InputError("cyclic_cohomology: m must be positive");
    if (g.rows() != g.cols()) throw InputError("cyclic_cohomology: operator is not square");
    const Index d = g.rows();
    FqMatrix gn = normalized(f, g);
    if (!fq_equal(power(f, gn, m), fq_identity(f, d))) throw InputError("cyclic_cohomology: g^m is not the identity");
    FqMatrix norm = fq_zero(f, d, d), p = fq_identity(f, d);
    for (long long k = 0; k < m; ++k) {
        norm = FqMatrix(norm + p);
        p = FqMatrix(p * gn);
    }
    FqMatrix t = minus_identity(f, gn);
    const Index rt = rank(f, t), rn = rank(f, norm);
    return {d - rt, (d - rn) - rt, (d - rt) - rn};
}

}  // namespace logmonoid
