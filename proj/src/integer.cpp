#include "logmonoid/integer.hpp"

#include "logmonoid/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace logmonoid {

Integer Integer::parse(std::string_view text) {
    std::string_view t = text;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t.remove_prefix(1);
    }
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("not a decimal integer: '" + std::string(text) + "'");
    Big v{std::string(t)};
    return Integer(neg ? Big(-v) : v);
}

bool Integer::fits_ll() const {
    return v_ >= std::numeric_limits<long long>::min() && v_ <= std::numeric_limits<long long>::max();
}

long long Integer::to_ll() const {
    if (!fits_ll()) throw BoundExceeded("integer does not fit in 64 bits: " + str());
    return v_.convert_to<long long>();
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
    return Integer(Integer::Big(boost::multiprecision::gcd(a.big(), b.big())));
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
    return q;
}

Integer mod(const Integer& a, const Integer& b) {
    Integer r = a % b;
    if (r.sign() < 0) r += abs(b);
    return r;
}

Integer pow(const Integer& a, unsigned e) {
    return Integer(Integer::Big(boost::multiprecision::pow(a.big(), e)));
}

std::vector<Integer> prime_factors(const Integer& a) {
    std::vector<Integer> out;
    Integer n = abs(a);
    for (Integer p(2); p * p <= n; p += Integer(1)) {
        if (!mod(n, p).is_zero()) continue;
        out.push_back(p);
        while (mod(n, p).is_zero()) n /= p;
    }
    if (n > Integer(1)) out.push_back(n);
    return out;
}

IntVector int_vector(std::initializer_list<long long> xs) {
    IntVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (long long x : xs) v(i++) = x;
    return v;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    Index r = static_cast<Index>(rows.size());
    Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c) throw InputError("ragged matrix literal");
        Index j = 0;
        for (long long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

IntMatrix identity_matrix(Index n) {
    IntMatrix m = zero_matrix(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix zero_matrix(Index rows, Index cols) {
    IntMatrix m(rows, cols);
    m.fill(Integer(0));
    return m;
}

IntVector zero_vector(Index n) {
    IntVector v(n);
    v.fill(Integer(0));
    return v;
}

IntVector unit_vector(Index n, Index i) {
    IntVector v = zero_vector(n);
    v(i) = 1;
    return v;
}

IntMatrix columns_matrix(const std::vector<IntVector>& cols, Index rows) {
    IntMatrix m(rows, static_cast<Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InputError("vector length mismatch");
        m.col(static_cast<Index>(j)) = cols[j];
    }
    return m;
}

IntMatrix rows_matrix(const std::vector<IntVector>& rows, Index cols) {
    IntMatrix m(static_cast<Index>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("vector length mismatch");
        m.row(static_cast<Index>(i)) = rows[i].transpose();
    }
    return m;
}

std::vector<IntVector> matrix_columns(const IntMatrix& m) {
    std::vector<IntVector> out;
    for (Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
    return out;
}

std::vector<IntVector> matrix_rows(const IntMatrix& m) {
    std::vector<IntVector> out;
    for (Index i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).transpose());
    return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    return g;
}

IntVector primitive(const IntVector& v) {
    Integer g = content(v);
    if (g.is_zero() || g == 1) return v;
    IntVector w = v;
    for (Index i = 0; i < w.size(); ++i) w(i) /= g;
    return w;
}

bool is_zero(const IntVector& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

IntVector concat(const IntVector& a, const IntVector& b) {
    IntVector v(a.size() + b.size());
    v << a, b;
    return v;
}

bool equal(const IntVector& a, const IntVector& b) { return a.size() == b.size() && a == b; }

bool lex_less(const IntVector& a, const IntVector& b) {
    Index n = std::min(a.size(), b.size());
    for (Index i = 0; i < n; ++i) {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
}

bool lex_less(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
}

void sort_unique(std::vector<IntVector>& vs) {
    std::sort(vs.begin(), vs.end(), LexLess{});
    vs.erase(std::unique(vs.begin(), vs.end(), [](const IntVector& a, const IntVector& b) { return equal(a, b); }),
             vs.end());
}

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (Index i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v(i).str();
    }
    return s + ")";
}

}  // namespace logmonoid
