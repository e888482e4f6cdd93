#ifndef LOGMONOID_CONES_HPP
#define LOGMONOID_CONES_HPP

#include "logmonoid/integer.hpp"

#include <vector>

namespace logmonoid {

// cone(rays) in Q^d. Rays are stored primitive, distinct and sorted.
class RationalCone {
public:
    RationalCone() = default;
    RationalCone(Index dim, std::vector<IntVector> rays);

    Index dim() const { return dim_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    bool is_zero() const { return rays_.empty(); }

    friend bool operator==(const RationalCone& a, const RationalCone& b) {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_;
    }

private:
    Index dim_ = 0;
    std::vector<IntVector> rays_;
};

// Minimal description of {y : <y, r> >= 0 for all rays r}: a saturated basis of
// its lineality space (in Hermite form) plus primitive extreme rays, each
// projected orthogonally to that space. For a pointed cone the rays are the
// inner facet normals.
struct DualDescription {
    std::vector<IntVector> lineality;
    std::vector<IntVector> rays;
};
DualDescription dual_description(const RationalCone& c);

// {y : <y, a> >= 0 for every a}, computed by double description.
DualDescription intersect_halfspaces(Index dim, const std::vector<IntVector>& normals);

RationalCone dual_cone(const RationalCone& c);
bool contains(const RationalCone& c, const IntVector& v);
bool contains(const DualDescription& dual, const IntVector& v);
// Saturated basis of C ∩ (-C).
std::vector<IntVector> lineality_space(const RationalCone& c);
bool is_pointed(const RationalCone& c);
// Saturated basis of span(C) ∩ Z^d, as columns.
IntMatrix span_lattice(const RationalCone& c);
// Extreme rays of a pointed cone.
std::vector<IntVector> extreme_rays(const RationalCone& c);
// An integer functional positive on C \ {0}; requires a pointed cone.
IntVector positive_grading(const RationalCone& c);

// Minimal generating set of C ∩ Z^d for pointed C, sorted.
std::vector<IntVector> hilbert_basis(const RationalCone& c);

}  // namespace logmonoid

#endif
