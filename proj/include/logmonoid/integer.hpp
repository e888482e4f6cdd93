#ifndef LOGMONOID_INTEGER_HPP
#define LOGMONOID_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace logmonoid {

// Arbitrary-precision integer usable as an Eigen scalar.
class Integer {
public:
    using Big = boost::multiprecision::cpp_int;

    Integer() = default;
    Integer(long long v) : v_(v) {}
    Integer(int v) : v_(v) {}
    Integer(long v) : v_(v) {}
    Integer(unsigned v) : v_(v) {}
    Integer(unsigned long v) : v_(v) {}
    Integer(unsigned long long v) : v_(v) {}
    explicit Integer(Big v) : v_(std::move(v)) {}

    static Integer parse(std::string_view text);

    const Big& big() const { return v_; }
    std::string str() const { return v_.str(); }
    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool fits_ll() const;
    long long to_ll() const;

    Integer operator-() const { return Integer(Big(-v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    Integer& operator/=(const Integer& o) { v_ /= o.v_; return *this; }
    Integer& operator%=(const Integer& o) { v_ %= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    // Truncating division, as in C++.
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& a);

private:
    Big v_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);
// Remainder in [0, |b|).
Integer mod(const Integer& a, const Integer& b);
Integer pow(const Integer& a, unsigned e);
// Distinct prime factors of |a| in increasing order, by trial division.
std::vector<Integer> prime_factors(const Integer& a);

}  // namespace logmonoid

namespace Eigen {
template <>
struct NumTraits<logmonoid::Integer> : GenericNumTraits<logmonoid::Integer> {
    using Real = logmonoid::Integer;
    using NonInteger = logmonoid::Integer;
    using Nested = logmonoid::Integer;
    using Literal = logmonoid::Integer;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace logmonoid {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using Index = Eigen::Index;

IntVector int_vector(std::initializer_list<long long> xs);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);
IntMatrix identity_matrix(Index n);
IntMatrix zero_matrix(Index rows, Index cols);
IntVector zero_vector(Index n);
IntVector unit_vector(Index n, Index i);

// Columns are the given vectors; `rows` is needed when the list is empty.
IntMatrix columns_matrix(const std::vector<IntVector>& cols, Index rows);
IntMatrix rows_matrix(const std::vector<IntVector>& rows, Index cols);
std::vector<IntVector> matrix_columns(const IntMatrix& m);
std::vector<IntVector> matrix_rows(const IntMatrix& m);

Integer dot(const IntVector& a, const IntVector& b);
Integer content(const IntVector& v);
IntVector primitive(const IntVector& v);
bool is_zero(const IntVector& v);
IntVector concat(const IntVector& a, const IntVector& b);

// Size-aware equality.
bool equal(const IntVector& a, const IntVector& b);

// Lexicographic order; shorter vectors first on a common prefix.
bool lex_less(const IntVector& a, const IntVector& b);
struct LexLess {
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};
bool lex_less(const std::vector<IntVector>& a, const std::vector<IntVector>& b);
void sort_unique(std::vector<IntVector>& vs);

std::string to_string(const IntVector& v);

}  // namespace logmonoid

#endif
