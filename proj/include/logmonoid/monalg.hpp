#ifndef LOGMONOID_MONALG_HPP
#define LOGMONOID_MONALG_HPP

#include "logmonoid/field.hpp"
#include "logmonoid/kummer.hpp"

#include <map>
#include <optional>
#include <vector>

namespace logmonoid {

// Element of F_q[P]: finitely many chi^p with nonzero coefficients.
class MonAlgElement {
public:
    using Support = std::map<IntVector, std::uint32_t, LexLess>;

    MonAlgElement() = default;
    MonAlgElement(IntegralMonoid base, Field field);
    static MonAlgElement monomial(IntegralMonoid base, Field field, const IntVector& p, long long coefficient = 1);

    const IntegralMonoid& base() const { return base_; }
    const Field& field() const { return field_; }
    const Support& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    // Adds c chi^p; p must lie in the base monoid.
    void add_term(const IntVector& p, long long c);

    friend MonAlgElement multiply(const MonAlgElement& a, const MonAlgElement& b);
    friend MonAlgElement operator+(const MonAlgElement& a, const MonAlgElement& b);

private:
    void accumulate(const IntVector& p, std::uint32_t code);

    IntegralMonoid base_;
    Field field_;
    Support support_;
};

inline MonAlgElement operator*(const MonAlgElement& a, const MonAlgElement& b) { return multiply(a, b); }
bool operator==(const MonAlgElement& a, const MonAlgElement& b);

// deg = l_P o (u^gp (x) Q)^{-1} with l_P the sum of the inner facet normals of P, as num / den.
struct Degree {
    Integer num, den;
};
Degree degree(const KummerData& u, const IntVector& q);

// Degree <= D parts of R[P] -> R[Q] -> R[Q] (x) R[G] -> ... with R[Q] (x) R[G]^j standing for
// R[(Q +_P ... +_P Q)^Sat], basis (q, g_1..g_j). The coface dropping factor k of a j+1-fold
// product acts on (q, g) by inserting a zero class at position k of ([q] - sum g, g_1, ..., g_j)
// and dropping the first entry.
struct CechComplexSlice {
    std::optional<IntVector> character;  // class in G, or every class
    long long degree_bound = 0;
    Index depth = 0;
    std::vector<IntVector> p_monomials;      // in P coordinates
    std::vector<IntVector> q_monomials;      // in Q coordinates
    std::vector<IntVector> group_elements;   // G, in mixed radix order
    std::vector<Index> term_dims;            // R[P], then R[Q] (x) R[G]^j for j < depth
    Index tail_dim = 0;                      // j = depth, to test exactness at the last term
    std::vector<FqMatrix> differentials;     // augmentation, then d^0 .. d^{depth-1}
};
// u between toric monoids, depth >= 1.
CechComplexSlice cech_slice(const KummerData& u, long long degree_bound, Index depth, const Field& f,
                            const std::optional<IntVector>& character = std::nullopt);

struct CechReport {
    bool exact = false;                // h0_correct and higher homology vanishes
    bool h0_correct = false;           // R[P] injects onto ker d^0
    std::vector<Index> homology;       // at R[Q] (x) R[G]^j, j < depth
    std::vector<Index> term_dims;
    long long degree_bound = 0;
    Index depth = 0;
    struct Character {
        IntVector chi;
        std::vector<Index> term_dims, homology;
    };
    std::vector<Character> characters;
};
// Sums the per-character slices.
CechReport verify_cech_exact(const KummerData& u, long long degree_bound, Index depth, const Field& f);
// Homology of one slice: whether R[P] maps isomorphically onto ker d^0, and dim H^j for j < depth.
std::pair<bool, std::vector<Index>> slice_homology(const CechComplexSlice& s, const Fq& f);

}  // namespace logmonoid

#endif
