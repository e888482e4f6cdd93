#ifndef LOGMONOID_FIELD_HPP
#define LOGMONOID_FIELD_HPP

#include "logmonoid/integer.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace logmonoid {

// F_q with q = p^e. Elements are codes c_0 + c_1 p + ... + c_{e-1} p^{e-1} standing for
// sum c_i x^i modulo the monic irreducible of degree e with the smallest code.
class Fq {
public:
    explicit Fq(long long q);

    long long characteristic() const { return p_; }
    long long degree() const { return e_; }
    long long order() const { return q_; }
    // Coefficients of the modulus, constant term first; monic of degree e.
    const std::vector<long long>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, long long k) const;
    std::uint32_t from_integer(long long n) const;

    // Smallest code of multiplicative order q - 1.
    std::uint32_t primitive_element() const { return gen_; }
    // g^{(q-1)/m} for the primitive element g; nullopt unless m | q - 1.
    std::optional<std::uint32_t> root_of_unity(long long m) const;
    long long multiplicative_order(std::uint32_t a) const;

private:
    long long p_, e_, q_;
    std::vector<long long> modulus_;
    std::uint32_t gen_ = 0;
    std::vector<std::uint32_t> exp_, log_;
};

using Field = std::shared_ptr<const Fq>;
Field make_field(long long q);

// Scalar for Eigen matrices over F_q. Without a field it is an integer, mapped into
// the prime field on contact with a field element.
struct FqElem {
    long long v = 0;
    const Fq* f = nullptr;

    FqElem() = default;
    FqElem(int n) : v(n) {}
    FqElem(long long n) : v(n) {}
    FqElem(std::uint32_t code, const Fq* field) : v(code), f(field) {}

    bool is_zero() const;
    bool is_one() const;
    // Code in the given field.
    std::uint32_t code(const Fq& field) const;
};

FqElem operator+(const FqElem& a, const FqElem& b);
FqElem operator-(const FqElem& a, const FqElem& b);
FqElem operator-(const FqElem& a);
FqElem operator*(const FqElem& a, const FqElem& b);
FqElem operator/(const FqElem& a, const FqElem& b);
inline FqElem& operator+=(FqElem& a, const FqElem& b) { return a = a + b; }
inline FqElem& operator-=(FqElem& a, const FqElem& b) { return a = a - b; }
inline FqElem& operator*=(FqElem& a, const FqElem& b) { return a = a * b; }
bool operator==(const FqElem& a, const FqElem& b);

}  // namespace logmonoid

namespace Eigen {
template <>
struct NumTraits<logmonoid::FqElem> : GenericNumTraits<logmonoid::FqElem> {
    using Real = logmonoid::FqElem;
    using NonInteger = logmonoid::FqElem;
    using Nested = logmonoid::FqElem;
    using Literal = logmonoid::FqElem;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace logmonoid {

using FqVector = Vector<FqElem>;
using FqMatrix = Matrix<FqElem>;

FqElem element(const Fq& f, long long code);
FqMatrix fq_matrix(const Fq& f, const std::vector<std::vector<long long>>& codes);
FqMatrix fq_identity(const Fq& f, Index n);
FqMatrix fq_zero(const Fq& f, Index rows, Index cols);
// Entries as codes in f.
std::vector<std::vector<long long>> codes(const Fq& f, const FqMatrix& m);
bool fq_equal(const FqMatrix& a, const FqMatrix& b);
bool is_zero(const FqMatrix& m);

// Gaussian elimination over F_q.
Index rank(const Fq& f, const FqMatrix& m);
// Basis of the null space, as columns.
FqMatrix kernel(const Fq& f, const FqMatrix& m);
// Basis of the column space, as columns chosen among those of m.
FqMatrix column_basis(const Fq& f, const FqMatrix& m);
// x with m x = b, if any.
std::optional<FqVector> solve(const Fq& f, const FqMatrix& m, const FqVector& b);
std::optional<FqMatrix> inverse(const Fq& f, const FqMatrix& m);
FqMatrix power(const Fq& f, const FqMatrix& m, long long k);
FqMatrix kronecker(const FqMatrix& a, const FqMatrix& b);

}  // namespace logmonoid

#endif
