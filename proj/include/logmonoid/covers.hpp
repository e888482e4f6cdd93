#ifndef LOGMONOID_COVERS_HPP
#define LOGMONOID_COVERS_HPP

#include "logmonoid/monoids.hpp"

#include <optional>
#include <vector>

namespace logmonoid {

// An fs log point, through the sharp fs monoid P of its log structure modulo units.
class LogPoint {
public:
    LogPoint() = default;
    explicit LogPoint(IntegralMonoid p);
    const IntegralMonoid& monoid() const { return p_; }
    Index rank() const { return p_.ambient().dim(); }

private:
    IntegralMonoid p_;
};

// Default cap on |(Z/m)^n| for enumerations over a level.
inline const Integer kCoverBound{65536};

// (Z/m)^rank, dual to P^gp / m P^gp through the fixed identification mu_m = Z/m.
FinAbGroup fundamental_group_level(const LogPoint& pt, const Integer& m);

// Connected cover P <= Q <= (1/m)P. Elements of (1/m)P^gp are written as m times
// themselves, so (1/m)P^gp is Z^n and P^gp is m Z^n.
struct FketCover {
    LogPoint base;
    Integer level;
    std::vector<IntVector> subgroup;  // canonical generators of G_Q in (Z/m)^n
    Subgroup group;                   // G_Q with its inclusion into (Z/m)^n
    IntMatrix lattice;                // basis of Q^gp inside Z^n
    IntegralMonoid monoid;            // Q in lattice coordinates
    std::vector<IntVector> generators;  // generators of Q in Z^n
    Integer degree() const { return group.group.order(); }
};

FketCover cover_from_subgroup(const LogPoint& pt, const Integer& m, const std::vector<IntVector>& gens);
std::vector<FketCover> enumerate_connected_covers(const LogPoint& pt, const Integer& m,
                                                  const Integer& bound = kCoverBound);
// The same cover seen at a level m' divisible by its level.
FketCover lift_cover(const FketCover& c, const Integer& m);
// P -> Q in lattice coordinates.
MonoidHom cover_inclusion(const FketCover& c);

// Finite set with commuting permutations, one per canonical generator of Gamma_{/m}.
struct GammaSet {
    Integer level;
    Index rank = 0;
    std::vector<IntVector> elements;
    std::vector<std::vector<size_t>> action;  // action[i][x] = gamma_i . x
    size_t size() const { return elements.size(); }
};

bool is_valid(const GammaSet& s);
std::vector<std::vector<size_t>> orbits(const GammaSet& s);
bool is_transitive(const GammaSet& s);
GammaSet product(const GammaSet& a, const GammaSet& b);  // element (i, j) at index i * |b| + j
// Orbit of the given elements as a Gamma-set on its own.
GammaSet restrict_to(const GammaSet& s, const std::vector<size_t>& orbit);
// Equivariant bijection a -> b, for transitive sets.
std::optional<std::vector<size_t>> gamma_isomorphism(const GammaSet& a, const GammaSet& b);

// Characters of G_Q with values in Z/m, written by their values on the basis of G_Q.
// gamma_i adds unit * e_i. unit picks the identification mu_m = Z/m.
GammaSet fiber_functor(const FketCover& c, const Integer& unit = Integer(1));
// Permutation matrices of the canonical generators, P(y, x) = 1 when gamma . x = y.
std::vector<IntMatrix> monodromy_rep(const FketCover& c, const Integer& unit = Integer(1));

// F(c1) -> F(c2) by restriction of characters, for G_{Q2} <= G_{Q1} at the same level.
std::vector<size_t> restriction_map(const FketCover& c1, const FketCover& c2);

struct FiberProduct {
    Integer level;
    AmalgamatedSum sum;          // (Q1 +_P Q2)^Sat
    Integer components;          // torsion order of its group
    FketCover component;         // each component
    GammaSet product;            // F(c1) x F(c2)
    std::vector<std::vector<size_t>> orbits;
    std::vector<std::vector<size_t>> isomorphisms;  // orbits[k][j] |-> isomorphisms[k][j] in F(component)
};
FiberProduct cover_fiber_product(const FketCover& c1, const FketCover& c2);

struct QuotientCover {
    FketCover cover;                  // preimage of H
    Integer acting_order;             // |G_Q / H|, the order of the characters of G_Q trivial on H
    std::vector<size_t> restriction;  // F(c) -> F(cover), fibers are the orbits
};
QuotientCover cover_quotient(const FketCover& c, const std::vector<IntVector>& h);

}  // namespace logmonoid

#endif
