#include "logmonoid/field.hpp"

#include "logmonoid/error.hpp"

#include <numeric>
#include <utility>

namespace logmonoid {

namespace {

constexpr long long kMaxFieldOrder = 1 << 16;

using Poly = std::vector<long long>;  // coefficients mod p, constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long inv_mod(long long a, long long p) {
    long long r = 1, b = a % p, k = p - 2;
    while (k > 0) {
        if (k & 1) r = r * b % p;
        b = b * b % p;
        k >>= 1;
    }
    return r;
}

// Remainder of a by b over F_p, b nonzero.
Poly poly_mod(Poly a, const Poly& b, long long p) {
    trim(a);
    const size_t db = b.size() - 1;
    const long long lead = inv_mod(b.back(), p);
    while (a.size() > db) {
        long long c = a.back() * lead % p;
        size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly from_code(long long code, long long p, long long len) {
    Poly a(static_cast<size_t>(len));
    for (auto& c : a) {
        c = code % p;
        code /= p;
    }
    return a;
}

long long to_code(const Poly& a, long long p) {
    long long code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

bool irreducible(const Poly& f, long long p) {
    const long long e = static_cast<long long>(f.size()) - 1;
    for (long long d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (long long i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g = from_code(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Fq::Fq(long long q) : p_(0), e_(0), q_(q) {
    if (q < 2) throw InputError("field order must be at least 2");
    if (q > kMaxFieldOrder) throw InputError("field order " + std::to_string(q) + " is too large");
    for (long long d = 2; d <= q; ++d)
        if (q % d == 0) {
            p_ = d;
            break;
        }
    long long t = q;
    while (t % p_ == 0) {
        t /= p_;
        ++e_;
    }
    if (t != 1) throw InputError(std::to_string(q) + " is not a prime power");

    long long count = q_;
    for (long long code = 0; code < count; ++code) {
        Poly f = from_code(code, p_, e_);
        f.push_back(1);
        if (irreducible(f, p_)) {
            modulus_ = f;
            break;
        }
    }

    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
        Poly x = from_code(a, p_, e_), y = from_code(b, p_, e_);
        Poly z(static_cast<size_t>(2 * e_), 0);
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
        Poly r = poly_mod(z, modulus_, p_);
        r.resize(static_cast<size_t>(e_), 0);
        return static_cast<std::uint32_t>(to_code(r, p_));
    };

    std::vector<long long> primes;
    for (const auto& r : prime_factors(Integer(q_ - 1))) primes.push_back(r.to_ll());
    auto slow_pow = [&](std::uint32_t a, long long k) {
        std::uint32_t r = 1;
        while (k > 0) {
            if (k & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            k >>= 1;
        }
        return r;
    };
    for (std::uint32_t g = 1; g < static_cast<std::uint32_t>(q_); ++g) {
        bool ok = true;
        for (long long r : primes) ok = ok && slow_pow(g, (q_ - 1) / r) != 1;
        if (!ok) continue;
        gen_ = g;
        break;
    }
    exp_.resize(static_cast<size_t>(q_ - 1));
    std::uint32_t x = 1;
    for (auto& v : exp_) {
        v = x;
        x = slow_mul(x, gen_);
    }
    log_.assign(static_cast<size_t>(q_), 0);
    for (long long k = 0; k < q_ - 1; ++k) log_[exp_[static_cast<size_t>(k)]] = static_cast<std::uint32_t>(k);
}

std::uint32_t Fq::add(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>((a + b) % p_);
    std::uint32_t out = 0, place = 1;
    for (long long i = 0; i < e_; ++i) {
        out += static_cast<std::uint32_t>((a % p_ + b % p_) % p_) * place;
        a /= static_cast<std::uint32_t>(p_);
        b /= static_cast<std::uint32_t>(p_);
        place *= static_cast<std::uint32_t>(p_);
    }
    return out;
}

std::uint32_t Fq::neg(std::uint32_t a) const {
    if (e_ == 1) return static_cast<std::uint32_t>((p_ - a) % p_);
    std::uint32_t out = 0, place = 1;
    for (long long i = 0; i < e_; ++i) {
        out += static_cast<std::uint32_t>((p_ - a % p_) % p_) * place;
        a /= static_cast<std::uint32_t>(p_);
        place *= static_cast<std::uint32_t>(p_);
    }
    return out;
}

std::uint32_t Fq::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Fq::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % static_cast<std::uint32_t>(q_ - 1)];
}

std::uint32_t Fq::inv(std::uint32_t a) const {
    if (a == 0) throw InputError("division by zero in F_q");
    return exp_[(static_cast<std::uint32_t>(q_ - 1) - log_[a]) % static_cast<std::uint32_t>(q_ - 1)];
}

std::uint32_t Fq::pow(std::uint32_t a, long long k) const {
    if (a == 0) {
        if (k < 0) throw InputError("division by zero in F_q");
        return k == 0 ? 1 : 0;
    }
    long long n = q_ - 1;
    long long t = ((static_cast<long long>(log_[a]) * (k % n)) % n + n) % n;
    return exp_[static_cast<size_t>(t)];
}

std::uint32_t Fq::from_integer(long long n) const { return static_cast<std::uint32_t>(((n % p_) + p_) % p_); }

std::optional<std::uint32_t> Fq::root_of_unity(long long m) const {
    if (m < 1 || (q_ - 1) % m != 0) return std::nullopt;
    return pow(gen_, (q_ - 1) / m);
}

long long Fq::multiplicative_order(std::uint32_t a) const {
    if (a == 0) throw InputError("zero has no multiplicative order");
    long long n = q_ - 1;
    return n / std::gcd(n, static_cast<long long>(log_[a]));
}

Field make_field(long long q) { return std::make_shared<const Fq>(q); }

namespace {

const Fq* common(const FqElem& a, const FqElem& b) {
    if (a.f && b.f && a.f != b.f && a.f->order() != b.f->order()) throw InputError("mixing elements of different fields");
    return a.f ? a.f : b.f;
}

}  // namespace

std::uint32_t FqElem::code(const Fq& field) const {
    if (f) return static_cast<std::uint32_t>(v);
    return field.from_integer(v);
}

bool FqElem::is_zero() const { return f ? v == 0 : v == 0; }
bool FqElem::is_one() const { return v == 1; }

FqElem operator+(const FqElem& a, const FqElem& b) {
    const Fq* f = common(a, b);
    if (!f) return FqElem(a.v + b.v);
    return FqElem(f->add(a.code(*f), b.code(*f)), f);
}

FqElem operator-(const FqElem& a, const FqElem& b) {
    const Fq* f = common(a, b);
    if (!f) return FqElem(a.v - b.v);
    return FqElem(f->sub(a.code(*f), b.code(*f)), f);
}

FqElem operator-(const FqElem& a) {
    if (!a.f) return FqElem(-a.v);
    return FqElem(a.f->neg(static_cast<std::uint32_t>(a.v)), a.f);
}

FqElem operator*(const FqElem& a, const FqElem& b) {
    const Fq* f = common(a, b);
    if (!f) return FqElem(a.v * b.v);
    return FqElem(f->mul(a.code(*f), b.code(*f)), f);
}

FqElem operator/(const FqElem& a, const FqElem& b) {
    const Fq* f = common(a, b);
    if (!f) throw InputError("division of field-free scalars");
    return FqElem(f->mul(a.code(*f), f->inv(b.code(*f))), f);
}

bool operator==(const FqElem& a, const FqElem& b) {
    const Fq* f = common(a, b);
    if (!f) return a.v == b.v;
    return a.code(*f) == b.code(*f);
}

FqElem element(const Fq& f, long long code) {
    if (code < 0 || code >= f.order()) throw InputError("field element code " + std::to_string(code) + " out of range");
    return FqElem(static_cast<std::uint32_t>(code), &f);
}

FqMatrix fq_matrix(const Fq& f, const std::vector<std::vector<long long>>& rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r ? static_cast<Index>(rows[0].size()) : 0;
    FqMatrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        if (static_cast<Index>(rows[static_cast<size_t>(i)].size()) != c) throw InputError("ragged matrix");
        for (Index j = 0; j < c; ++j) m(i, j) = element(f, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

FqMatrix fq_zero(const Fq& f, Index rows, Index cols) {
    FqMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = FqElem(0, &f);
    return m;
}

FqMatrix fq_identity(const Fq& f, Index n) {
    FqMatrix m = fq_zero(f, n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = FqElem(1, &f);
    return m;
}

std::vector<std::vector<long long>> codes(const Fq& f, const FqMatrix& m) {
    std::vector<std::vector<long long>> out(static_cast<size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out[static_cast<size_t>(i)].push_back(m(i, j).code(f));
    return out;
}

bool fq_equal(const FqMatrix& a, const FqMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

bool is_zero(const FqMatrix& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

Rows to_rows(const Fq& f, const FqMatrix& m) {
    Rows r(static_cast<size_t>(m.rows()), std::vector<std::uint32_t>(static_cast<size_t>(m.cols())));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) r[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j).code(f);
    return r;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<size_t> rref(const Fq& f, Rows& a, size_t cols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < cols && row < a.size(); ++c) {
        size_t pr = row;
        while (pr < a.size() && a[pr][c] == 0) ++pr;
        if (pr == a.size()) continue;
        std::swap(a[pr], a[row]);
        std::uint32_t s = f.inv(a[row][c]);
        for (auto& x : a[row]) x = f.mul(x, s);
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            std::uint32_t t = a[r][c];
            for (size_t k = c; k < a[r].size(); ++k)
                if (a[row][k]) a[r][k] = f.sub(a[r][k], f.mul(t, a[row][k]));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

Index rank(const Fq& f, const FqMatrix& m) {
    Rows a = to_rows(f, m);
    return static_cast<Index>(rref(f, a, static_cast<size_t>(m.cols())).size());
}

FqMatrix kernel(const Fq& f, const FqMatrix& m) {
    const size_t n = static_cast<size_t>(m.cols());
    Rows a = to_rows(f, m);
    auto pivots = rref(f, a, n);
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<size_t> free;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);
    FqMatrix k = fq_zero(f, static_cast<Index>(n), static_cast<Index>(free.size()));
    for (size_t j = 0; j < free.size(); ++j) {
        k(static_cast<Index>(free[j]), static_cast<Index>(j)) = FqElem(1, &f);
        for (size_t r = 0; r < pivots.size(); ++r)
            k(static_cast<Index>(pivots[r]), static_cast<Index>(j)) = FqElem(f.neg(a[r][free[j]]), &f);
    }
    return k;
}

FqMatrix column_basis(const Fq& f, const FqMatrix& m) {
    Rows a = to_rows(f, m);
    auto pivots = rref(f, a, static_cast<size_t>(m.cols()));
    FqMatrix out(m.rows(), static_cast<Index>(pivots.size()));
    for (size_t j = 0; j < pivots.size(); ++j) out.col(static_cast<Index>(j)) = m.col(static_cast<Index>(pivots[j]));
    return out;
}

std::optional<FqVector> solve(const Fq& f, const FqMatrix& m, const FqVector& b) {
    const size_t n = static_cast<size_t>(m.cols());
    FqMatrix aug(m.rows(), m.cols() + 1);
    aug << m, b;
    Rows a = to_rows(f, aug);
    auto pivots = rref(f, a, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    FqVector x(static_cast<Index>(n));
    for (Index i = 0; i < x.size(); ++i) x(i) = FqElem(0, &f);
    for (size_t r = 0; r < pivots.size(); ++r) x(static_cast<Index>(pivots[r])) = FqElem(a[r][n], &f);
    return x;
}

std::optional<FqMatrix> inverse(const Fq& f, const FqMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const Index n = m.rows();
    FqMatrix aug(n, 2 * n);
    aug << m, fq_identity(f, n);
    Rows a = to_rows(f, aug);
    auto pivots = rref(f, a, static_cast<size_t>(n));
    if (static_cast<Index>(pivots.size()) != n) return std::nullopt;
    FqMatrix out(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) out(i, j) = FqElem(a[static_cast<size_t>(i)][static_cast<size_t>(n + j)], &f);
    return out;
}

FqMatrix power(const Fq& f, const FqMatrix& m, long long k) {
    FqMatrix base = m;
    if (k < 0) {
        auto inv = inverse(f, m);
        if (!inv) throw InputError("negative power of a singular matrix");
        base = *inv;
        k = -k;
    }
    FqMatrix out = fq_identity(f, m.rows());
    while (k > 0) {
        if (k & 1) out = FqMatrix(out * base);
        base = FqMatrix(base * base);
        k >>= 1;
    }
    return out;
}

FqMatrix kronecker(const FqMatrix& a, const FqMatrix& b) {
    FqMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace logmonoid
