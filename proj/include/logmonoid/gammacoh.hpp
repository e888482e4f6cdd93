#ifndef LOGMONOID_GAMMACOH_HPP
#define LOGMONOID_GAMMACOH_HPP

#include "logmonoid/covers.hpp"
#include "logmonoid/field.hpp"

#include <optional>
#include <vector>

namespace logmonoid {

// Finite-dimensional F_q-representation of Z^n through commuting invertible gamma_1..gamma_n.
class GammaModule {
public:
    GammaModule() = default;
    GammaModule(Field field, Index dim, std::vector<FqMatrix> gammas);
    static GammaModule trivial(Field field, Index dim, Index n);

    const Field& field() const { return field_; }
    const Fq& fq() const { return *field_; }
    Index dim() const { return dim_; }
    Index rank() const { return static_cast<Index>(gammas_.size()); }
    const std::vector<FqMatrix>& gammas() const { return gammas_; }
    const FqMatrix& gamma(Index j) const { return gammas_[static_cast<size_t>(j)]; }

private:
    Field field_;
    Index dim_ = 0;
    std::vector<FqMatrix> gammas_;
};

// Term C^i is the sum over i-subsets S of {0..n-1} of copies of M, in lexicographic
// order of S; d sends m e_S to sum over j not in S of (-1)^{#{s in S : s < j}} (gamma_j - 1) m e_{S+j}.
struct KoszulComplex {
    std::vector<std::vector<std::vector<Index>>> subsets;  // subsets[i]
    std::vector<FqMatrix> differentials;                  // d^i : C^i -> C^{i+1}, i < n
    Index term_dim(Index i) const;
    Index module_dim = 0;
};
KoszulComplex koszul_complex(const GammaModule& m);

struct Cohomology {
    std::vector<Index> dims;        // i = 0..n
    std::vector<FqMatrix> bases;    // representatives of H^i, as columns in C^i
    Index dim(Index i) const { return i < static_cast<Index>(dims.size()) ? dims[static_cast<size_t>(i)] : 0; }
};
Cohomology koszul_cohomology(const GammaModule& m);

// gamma_j acts on F_q by zeta_m^{chi_j}, zeta_m the power (q-1)/m of the primitive element.
GammaModule character_module(const LogPoint& pt, long long m, const std::vector<long long>& chi, const Field& f);

struct Annihilation {
    bool applicable = false;  // the character is nontrivial
    Index witness = -1;       // a j with gamma_j - 1 invertible
    std::vector<Index> dims;
};
Annihilation annihilation_check(const GammaModule& m);

// Minimal elements of (chi + m Z^n) in the cone of P, in coordinates of (1/m)P scaled by m.
std::vector<IntVector> s_chi(const LogPoint& pt, long long m, const IntVector& chi);

// gamma_j = J_r^{n_j}, J_r = 1 + (superdiagonal ones).
GammaModule jr_module(Index r, const std::vector<long long>& n, const Field& f);
// gamma_j = C^{n_j}, C the m-cycle e_i -> e_{i+1}.
GammaModule km_module(Index m, const Field& f, const std::vector<long long>& n = {1});
GammaModule tensor(const GammaModule& a, const GammaModule& b);
// Module over Z^{n_a + n_b}: gamma_j acts on the first factor for j < n_a, on the second after.
GammaModule external_tensor(const GammaModule& a, const GammaModule& b);
GammaModule restrict(const GammaModule& m, long long k);
GammaModule direct_sum(const GammaModule& a, const GammaModule& b);

struct Submodule {
    FqMatrix basis;  // columns in the ambient module
    GammaModule module;
};
// Largest subspace on which every gamma_j - 1 is nilpotent.
Submodule unipotent_part(const GammaModule& m);
bool is_unipotent(const Fq& f, const FqMatrix& g);

inline constexpr Index kNearbyMaxLevel = 64;

struct NearbyCycles {
    std::vector<Index> dims;  // colimit of H^i(M (x) J_r) over r
    Index stable_level = 0;   // r*
    FqMatrix h0_values;       // b_0-components of the invariants at the last level computed
};
// The colimit runs through M (x) J_r -> M (x) J_{r+1}, the inclusion of the first r basis vectors.
// Stable at r once rank(r -> 2r+1) = rank(r -> 2r+3) = rank(r+1 -> 2r+3) in every degree.
NearbyCycles nearby_unipotent(const GammaModule& m, const std::vector<long long>& n, Index r_max = kNearbyMaxLevel);

struct QuasiUnipotentNearby {
    NearbyCycles result;
    bool tower_checked = false;  // compared with the colimit over M (x) K_m (x) J_r
};
QuasiUnipotentNearby nearby_quasi_unipotent(const GammaModule& m, const std::vector<long long>& n, long long level,
                                            Index r_max = kNearbyMaxLevel);

// H^0..H^2 of Z/m acting on V through g, by the periodic resolution.
std::vector<Index> cyclic_cohomology(const Fq& f, long long m, const FqMatrix& g);

}  // namespace logmonoid

#endif
