#ifndef LOGMONOID_MONOIDS_HPP
#define LOGMONOID_MONOIDS_HPP

#include "logmonoid/cones.hpp"
#include "logmonoid/lattice.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace logmonoid {

// Generators a_1..a_s subject to relations u = v, with u, v in Z_{>=0}^s.
struct MonoidPresentation {
    Index num_gens = 0;
    std::vector<std::pair<IntVector, IntVector>> relations;
};

struct GroupCompletion {
    FinAbGroup group;
    GroupHom map;  // Z^s -> group, sending a_i to the class of e_i
};
GroupCompletion group_completion(const MonoidPresentation& p);

// A finitely generated submonoid of an abelian group that it generates as a group.
// Generators are reduced, nonzero, distinct and sorted.
class IntegralMonoid {
public:
    IntegralMonoid() = default;
    IntegralMonoid(FinAbGroup ambient, std::vector<IntVector> generators);
    static IntegralMonoid free(Index r);   // Z_{>=0}^r
    static IntegralMonoid group(const FinAbGroup& g);

    const FinAbGroup& ambient() const { return ambient_; }
    const std::vector<IntVector>& generators() const { return gens_; }
    Index num_generators() const { return static_cast<Index>(gens_.size()); }
    bool is_trivial() const { return gens_.empty(); }
    // Matrix with the generators as columns.
    IntMatrix generator_matrix() const { return columns_matrix(gens_, ambient_.dim()); }
    // cone of the free parts of the generators, in Z^{free rank}.
    RationalCone free_cone() const;

private:
    FinAbGroup ambient_;
    std::vector<IntVector> gens_;
};

// Mutual generator membership over the same ambient group.
bool operator==(const IntegralMonoid& a, const IntegralMonoid& b);
std::string to_string(const IntegralMonoid& p);

// A monoid inside a group that it need not generate, with the inclusion of its group.
struct EmbeddedMonoid {
    IntegralMonoid monoid;
    GroupHom inclusion;  // monoid.ambient() -> the given group
};
EmbeddedMonoid generated_submonoid(const FinAbGroup& g, const std::vector<IntVector>& gens);

class MonoidHom {
public:
    MonoidHom() = default;
    // Checks that each source generator maps into the target.
    MonoidHom(IntegralMonoid source, IntegralMonoid target, GroupHom gp);
    // The homomorphism sending the i-th source generator to images[i].
    static MonoidHom from_images(const IntegralMonoid& source, const IntegralMonoid& target,
                                 const std::vector<IntVector>& images);
    static MonoidHom identity(const IntegralMonoid& p);

    const IntegralMonoid& source() const { return source_; }
    const IntegralMonoid& target() const { return target_; }
    const GroupHom& gp() const { return gp_; }
    IntVector apply(const IntVector& x) const { return gp_.apply(x); }
    std::vector<IntVector> images() const;

private:
    IntegralMonoid source_, target_;
    GroupHom gp_;
};

MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

// Default cap on the number of search states in one membership query.
inline constexpr std::size_t kMembershipStateLimit = 2'000'000;

// Exact membership in a fixed monoid. Searches keep their memo tables per call.
class MembershipOracle {
public:
    explicit MembershipOracle(const IntegralMonoid& p, std::size_t state_limit = kMembershipStateLimit);
    bool contains(const IntVector& a) const;
    // Nonnegative coefficients c with sum c_i g_i = a, over p.generators().
    std::optional<IntVector> decompose(const IntVector& a) const;

private:
    std::optional<IntVector> decompose_sharp(const IntVector& a) const;

    IntegralMonoid p_;
    std::size_t limit_;
    DualDescription cone_;
    std::vector<size_t> unit_gens_;
    IntVector positive_relation_;  // over unit_gens_, strictly positive, sums to zero
    GroupHom to_sharp_;
    std::vector<size_t> sharp_lift_;  // sharp generator -> a generator of p
    IntegralMonoid sharp_;
    IntVector grading_;
    DualDescription sharp_cone_;
};

bool membership(const IntegralMonoid& p, const IntVector& a);
std::optional<IntVector> decompose(const IntegralMonoid& p, const IntVector& a);
// Every element lies in p.
bool contains_all(const IntegralMonoid& p, const std::vector<IntVector>& elems);

IntegralMonoid integralize(const MonoidPresentation& p);
IntegralMonoid saturate(const IntegralMonoid& p);
// Generators of {x in g : free part of x in c}, with c a cone in Z^{free rank}.
std::vector<IntVector> saturated_generators(const FinAbGroup& g, const RationalCone& c);

struct Units {
    std::vector<IntVector> generators;  // generators of p that are invertible
    Subgroup group;                     // P* inside the ambient group
    bool contains(const IntVector& x) const { return group.coordinates(x).has_value(); }
};
Units units(const IntegralMonoid& p);

struct Sharpening {
    IntegralMonoid monoid;  // P / P*
    GroupHom projection;    // P^gp -> (P / P*)^gp
};
Sharpening sharpen(const IntegralMonoid& p);

struct Quotient {
    MonoidPresentation presentation;  // on the generators of P
    IntegralMonoid monoid;            // image of P in P^gp / Q^gp
    GroupHom projection;
};
Quotient quotient_by_submonoid(const IntegralMonoid& p, const std::vector<IntVector>& sub);

// S^{-1} P and the localization map.
MonoidHom localize(const IntegralMonoid& p, const std::vector<IntVector>& s);

enum class SumMode { plain, integral, saturated };
struct AmalgamatedSum {
    std::optional<MonoidPresentation> presentation;  // plain mode only
    IntegralMonoid monoid;                           // integral or saturated image
    MonoidHom coprojection1, coprojection2;
};
AmalgamatedSum amalgamated_sum(const MonoidHom& u, const MonoidHom& v, SumMode mode);

struct HomProperties {
    bool injective = false, surjective = false, local = false, sharp = false, strict = false;
    std::optional<bool> exact;  // decided when the target is saturated
};
HomProperties hom_properties(const MonoidHom& u);

// Section s: Q -> P of a surjection onto a toric monoid with ker u^gp in P.
MonoidHom split_sharp(const MonoidHom& u);

struct Division {
    IntegralMonoid monoid;  // (1/n)P in coordinates scaled by n
    MonoidHom inclusion;    // P -> (1/n)P, multiplication by n in those coordinates
};
Division divide(const IntegralMonoid& p, const Integer& n);

bool is_n_divisible(const IntegralMonoid& p, const Integer& n);

struct Predicates {
    bool fine = true, integral = true, saturated = false, sharp = false, toric = false;
};
Predicates predicates(const IntegralMonoid& p);
bool is_saturated(const IntegralMonoid& p);
bool is_sharp(const IntegralMonoid& p);
bool is_toric(const IntegralMonoid& p);

// Injective P -> Z_{>=0}^{r'} through the extreme rays of the dual cone.
MonoidHom toric_embed(const IntegralMonoid& p);

}  // namespace logmonoid

#endif
