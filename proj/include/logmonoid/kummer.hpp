#ifndef LOGMONOID_KUMMER_HPP
#define LOGMONOID_KUMMER_HPP

#include "logmonoid/monoids.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace logmonoid {

// u: P -> Q Kummer, with G = Q^gp / u^gp(P^gp) and its exponent.
struct KummerData {
    MonoidHom hom;
    Cokernel cokernel;
    Integer exponent;
    const FinAbGroup& group() const { return cokernel.group; }
};

struct KummerCheck {
    bool ok = false;
    std::string clause;  // "injective", "finite_cokernel" or "multiples" on failure
    std::optional<IntVector> witness;
};

// Source and target must be saturated. Only the generators of Q are tested for multiples.
KummerCheck is_kummer(const MonoidHom& u);
KummerData kummer_data(const MonoidHom& u);
FinAbGroup cokernel_group(const MonoidHom& u);

// (Q +_P Q)^Sat and Q + G with mutually inverse homs.
struct SelfProduct {
    AmalgamatedSum sum;
    IntegralMonoid split;  // Q + G inside Q^gp + G
    DirectSum split_group;
    MonoidHom psi;  // sum -> split: i1(a) + i2(b) |-> (a + b, [b])
    MonoidHom phi;  // split -> sum: (q, [g]) |-> i1(q - g) + i2(g)
};
SelfProduct self_product_decomposition(const KummerData& d);

// Minimal n with n q in u(P) for every generator q of Q, checked against the exponent of G.
Integer ramification_index(const KummerData& d);

struct DividedFactorization {
    Integer n;
    Division division;    // (1/n)P with P -> (1/n)P
    MonoidHom embedding;  // Q -> (1/n)P, with embedding o u = division.inclusion
};
DividedFactorization minimal_divided_factorization(const KummerData& d);

struct ChartCheck {
    bool ok = false;
    FinAbGroup kernel;             // ker u^gp
    FinAbGroup cokernel;           // coker u^gp
    std::vector<Integer> bad_primes;  // primes dividing the orders that are not invertible
};
ChartCheck log_smooth_chart_check(const MonoidHom& u, const std::set<Integer>& invertible_primes);

struct LogDifferentials {
    FinAbGroup group;                    // Q^gp / u^gp(P^gp)
    std::vector<IntVector> basis_lifts;  // elements of Q^gp lifting the canonical generators
    Index relative_dimension = 0;
};
LogDifferentials log_differentials_module(const MonoidHom& u, const std::set<Integer>& invertible_primes);

struct AbhyankarBounds {
    Index max_rank = 4;
    Integer max_d{6};
};

// Z^r_{>=0} <= Q <= P' = + (1/d_i) Z_{>=0}, coordinates scaled so that P' is Z^r_{>=0}.
struct AbhyankarMonoid {
    std::vector<IntVector> subgroup;  // canonical generators of H <= + Z/d_i
    IntMatrix lattice;                // basis (columns) of Q^gp inside Z^r
    IntegralMonoid monoid;            // Q in lattice coordinates
    std::vector<IntVector> generators;  // generators of Q in P' coordinates
};
std::vector<AbhyankarMonoid> abhyankar_classify(Index r, const std::vector<Integer>& d,
                                                const AbhyankarBounds& bounds = {});

}  // namespace logmonoid

#endif
