#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prealt {

// Every failure carries a stable short code ("SingularMap", "NotAlternative", ...)
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] void fail(const std::string& code, const std::string& what);

// The rationals or GF(p) for an odd prime p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
public:
    Scalar() = default;  // rational zero
    explicit Scalar(const Field& f) : p_(f.characteristic()) {}

    static Scalar from_int(const Field& f, long long v);
    static Scalar from_ratio(const Field& f, long long num, long long den);
    static Scalar from_mpq(const Field& f, const mpq_class& q);
    // "a", "-a", "a/b"; in GF(p) the fraction is reduced mod p.
    static Scalar parse(const Field& f, const std::string& text);

    Field field() const { return Field(p_); }
    std::uint64_t characteristic() const { return p_; }
    bool is_zero() const;
    bool is_one() const;

    // residue in [0, p); only valid for prime fields
    std::uint64_t residue() const { return r_; }
    mpq_class rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "p/q" or "p" for rationals, decimal residue for GF(p)
    std::string to_string() const;

private:
    void same_field(const Scalar& o) const;
    std::uint64_t p_ = 0;
    std::uint64_t r_ = 0;
    std::optional<mpq_class> q_;  // engaged only for nonzero rationals
};

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
bool is_zero(const Vec& v);

}  // namespace prealt
