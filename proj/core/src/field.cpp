#include "prealt/field.hpp"

#include <cctype>

namespace prealt {

void fail(const std::string& code, const std::string& what) { throw Error(code, what); }

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (p == 2) fail("BadCharacteristic", "characteristic 2 is not supported");
    if (p >= (std::uint64_t(1) << 62) || !is_prime(p))
        fail("BadCharacteristic", std::to_string(p) + " is not an odd prime");
    return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p)
{
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

Scalar Scalar::from_int(const Field& f, long long v)
{
    Scalar s(f);
    if (f.is_rational()) {
        if (v != 0) s.q_ = mpq_class(static_cast<long>(v));
    } else {
        long long p = static_cast<long long>(f.characteristic());
        long long m = v % p;
        if (m < 0) m += p;
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q)
{
    Scalar s(f);
    if (f.is_rational()) {
        if (q != 0) {
            s.q_ = q;
            s.q_->canonicalize();
        }
        return s;
    }
    std::uint64_t p = f.characteristic();
    std::uint64_t d = reduce_mpz(q.get_den(), p);
    if (d == 0) fail("ParseError", "denominator divisible by the characteristic");
    s.r_ = mulmod(reduce_mpz(q.get_num(), p), powmod(d, p - 2, p), p);
    return s;
}

Scalar Scalar::from_ratio(const Field& f, long long num, long long den)
{
    if (den == 0) fail("ParseError", "zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return from_mpq(f, q);
}

Scalar Scalar::parse(const Field& f, const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) fail("ParseError", "bad scalar '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) fail("ParseError", "zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return from_mpq(f, q);
}

bool Scalar::is_zero() const { return p_ == 0 ? !q_.has_value() : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? (q_.has_value() && *q_ == 1) : r_ == 1; }

mpq_class Scalar::rational() const
{
    if (p_ != 0) fail("FieldMismatch", "residue has no rational value");
    return q_ ? *q_ : mpq_class(0);
}

void Scalar::same_field(const Scalar& o) const
{
    if (p_ != o.p_) fail("FieldMismatch", "scalars from different fields");
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (p_ == 0) {
        if (s.q_) *s.q_ = -*s.q_;
    } else if (r_ != 0) {
        s.r_ = p_ - r_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    same_field(o);
    if (p_ == 0) {
        if (!o.q_) return *this;
        if (!q_) {
            q_ = o.q_;
            return *this;
        }
        *q_ += *o.q_;
        if (*q_ == 0) q_.reset();
    } else {
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o)
{
    same_field(o);
    if (p_ == 0) {
        if (!q_) return *this;
        if (!o.q_) {
            q_.reset();
            return *this;
        }
        *q_ *= *o.q_;
    } else {
        r_ = mulmod(r_, o.r_, p_);
    }
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) fail("SingularMap", "division by zero");
    Scalar s = *this;
    if (p_ == 0)
        *s.q_ = 1 / *q_;
    else
        s.r_ = powmod(r_, p_ - 2, p_);
    return s;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    same_field(o);
    return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const
{
    if (p_ != o.p_) return false;
    if (p_ != 0) return r_ == o.r_;
    if (q_.has_value() != o.q_.has_value()) return false;
    return !q_ || *q_ == *o.q_;
}

std::string Scalar::to_string() const
{
    if (p_ != 0) return std::to_string(r_);
    if (!q_) return "0";
    return q_->get_str();
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar(f)); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i)
{
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::from_int(f, 1);
    return v;
}

Vec& operator+=(Vec& a, const Vec& b)
{
    if (a.size() != b.size()) fail("DimensionMismatch", "vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b)
{
    if (a.size() != b.size()) fail("DimensionMismatch", "vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Vec operator+(const Vec& a, const Vec& b)
{
    Vec r = a;
    return r += b;
}

Vec operator-(const Vec& a, const Vec& b)
{
    Vec r = a;
    return r -= b;
}

Vec operator*(const Scalar& s, const Vec& a)
{
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace prealt
