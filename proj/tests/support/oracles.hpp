#ifndef LOGMONOID_TESTS_ORACLES_HPP
#define LOGMONOID_TESTS_ORACLES_HPP

// Brute-force reference computations. None of these call into the library's
// normal-form or cone code, so they can be used to cross-check it.

#include "logmonoid/integer.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace logmonoid::oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // row-major

Mat to_mat(const IntMatrix& m);
IntMatrix to_int(const Mat& m);
IntVector to_int(const Vec& v);
Vec to_vec(const IntVector& v);

// Bareiss determinant of a square matrix.
Integer determinant(const std::vector<std::vector<Integer>>& a);
// Invariant factors from gcds of k x k minors.
std::vector<Integer> invariant_factors(const Mat& a);
// Lower-triangular basis of the column lattice, by naive column Euclid; full rank only.
std::optional<Mat> triangular_lattice_basis(const Mat& a, std::size_t n);
// Representatives of Z^n / (column lattice) from a triangular basis.
std::vector<Vec> quotient_representatives(const Mat& basis);

// Exact rational membership in cone(gens) via Caratheodory subsets.
bool in_cone(const std::vector<Vec>& gens, const Vec& x);
// Irreducible lattice points of a pointed cone found by bounded search.
std::vector<Vec> hilbert_basis_by_search(const std::vector<Vec>& gens);

std::uint64_t binomial(unsigned n, unsigned k);

// Deterministic integer in [lo, hi].
long long uniform(std::mt19937_64& rng, long long lo, long long hi);

}  // namespace logmonoid::oracle

#endif
