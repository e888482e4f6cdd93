#ifndef LOGMONOID_LATTICE_HPP
#define LOGMONOID_LATTICE_HPP

#include "logmonoid/integer.hpp"

#include <optional>
#include <vector>

namespace logmonoid {

// U * A * V = D with U, V unimodular and D diagonal with d_0 | d_1 | ...
struct SmithForm {
    IntMatrix U, V, D;
    IntMatrix U_inv, V_inv;
    std::vector<Integer> diagonal;  // the nonzero invariant factors
    Index rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& A);

// Row-style Hermite form: H = U * A, pivots positive, entries above a pivot in [0, pivot).
struct HermiteForm {
    IntMatrix H, U;
    Index rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix& A);

Index rank(const IntMatrix& A);
// Saturated basis of {x : A x = 0}, as columns in Hermite-canonical order.
IntMatrix integer_kernel(const IntMatrix& A);
std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b);
// Rational solution x = num / den of A x = b with den > 0, or nullopt.
struct RationalVector {
    IntVector num;
    Integer den;
};
std::optional<RationalVector> solve_rational(const IntMatrix& A, const IntVector& b);

// Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with d_1 | ... | d_k and each d_i >= 2.
// Elements are vectors of length r + k with torsion coordinates in [0, d_i).
class FinAbGroup {
public:
    FinAbGroup() = default;
    FinAbGroup(Index free_rank, std::vector<Integer> torsion);
    static FinAbGroup free(Index r) { return FinAbGroup(r, {}); }

    Index free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    Index dim() const { return free_rank_ + static_cast<Index>(torsion_.size()); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_trivial() const { return dim() == 0; }
    bool is_torsion_free() const { return torsion_.empty(); }
    // Order of a finite group; throws for infinite groups.
    Integer order() const;
    // Exponent of the torsion subgroup (1 if torsion-free).
    Integer exponent() const;

    IntVector reduce(const IntVector& x) const;
    IntVector zero() const { return zero_vector(dim()); }
    IntVector basis(Index i) const { return unit_vector(dim(), i); }
    IntVector free_part(const IntVector& x) const { return x.head(free_rank_); }
    bool contains(const IntVector& x) const;
    // Order of an element, nullopt if infinite.
    std::optional<Integer> element_order(const IntVector& x) const;
    // Columns d_i * e_{r+i}: the kernel of Z^dim -> G.
    IntMatrix relations() const;

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
    }

private:
    Index free_rank_ = 0;
    std::vector<Integer> torsion_;
};

std::string to_string(const FinAbGroup& g);

class GroupHom {
public:
    GroupHom() = default;
    GroupHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix);
    static GroupHom identity(const FinAbGroup& g);
    static GroupHom zero(const FinAbGroup& source, const FinAbGroup& target);

    const FinAbGroup& source() const { return source_; }
    const FinAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVector apply(const IntVector& x) const;
    IntVector operator()(const IntVector& x) const { return apply(x); }
    bool is_zero() const;

private:
    FinAbGroup source_, target_;
    IntMatrix matrix_;
};

// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);
bool operator==(const GroupHom& a, const GroupHom& b);

struct Cokernel {
    FinAbGroup group;
    GroupHom projection;  // target of f -> group
    IntMatrix section;    // columns: lifts of the canonical generators
};
Cokernel cokernel(const GroupHom& f);
// Z^n / (column span of relations).
Cokernel cokernel_of_relations(const IntMatrix& relations);

// Canonical generators of ker f.
std::vector<IntVector> kernel_lattice(const GroupHom& f);

// Some x with f(x) = y in the target, or nullopt.
std::optional<IntVector> preimage(const GroupHom& f, const IntVector& y);

// Hermite-canonical generating set of the subgroup generated by gens, sorted.
std::vector<IntVector> canonical_generators(const FinAbGroup& g, const std::vector<IntVector>& gens);

struct Subgroup {
    FinAbGroup group;
    GroupHom inclusion;
    // Coordinates of x in the subgroup, when x lies in it.
    std::optional<IntVector> coordinates(const IntVector& x) const;
};
Subgroup subgroup_structure(const FinAbGroup& g, const std::vector<IntVector>& gens);

// The hom src -> tgt sending gens[i] to imgs[i]; gens must generate src.
GroupHom hom_from_generators(const FinAbGroup& src, const std::vector<IntVector>& gens, const FinAbGroup& tgt,
                             const std::vector<IntVector>& imgs);

// Section s of a surjection onto a torsion-free group, f ∘ s = id.
GroupHom section_onto_free(const GroupHom& f);

// All subgroups of a finite group, as canonical generator lists in lexicographic order.
std::vector<std::vector<IntVector>> subgroup_enumerate(const FinAbGroup& g, const Integer& bound);
Integer subgroup_order(const FinAbGroup& g, const std::vector<IntVector>& gens);

struct DirectSum {
    FinAbGroup group;
    GroupHom inj1, inj2, proj1, proj2;
};
DirectSum direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// Stack columns: [A | B].
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);

}  // namespace logmonoid

#endif
