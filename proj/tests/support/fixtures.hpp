#pragma once

#include "random.hpp"

#include <doctest.h>

namespace fx {

using namespace prealt;

inline const Field Q = Field::rationals();
inline const Field F3 = Field::prime(3);
inline const Field F5 = Field::prime(5);

inline Scalar q(long long a, long long b = 1) { return Scalar::from_ratio(Q, a, b); }
inline Scalar s(const Field& f, long long a) { return Scalar::from_int(f, a); }

inline AlternativeAlgebra n2() { return catalog_entry("n2").alternative(); }
inline PreAlternativeAlgebra p2() { return catalog_entry("p2").prealternative(); }
inline AlternativeAlgebra octonion() { return catalog_entry("octonion").alternative(); }

inline Tensor2 t2(const Field& f, std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, long long>> e)
{
    Tensor2 r(f, n, n);
    for (auto [i, j, v] : e) r(i, j) += Scalar::from_int(f, v);
    return r;
}

// e1 (x) e2 + e2 (x) e1
inline Tensor2 r_sym(const Field& f = Q) { return t2(f, 2, {{0, 1, 1}, {1, 0, 1}}); }
// e1 (x) e2 - e2 (x) e1
inline Tensor2 r_skew(const Field& f = Q) { return t2(f, 2, {{0, 1, 1}, {1, 0, -1}}); }

inline Mat diag(const Field& f, std::initializer_list<Scalar> d)
{
    Mat m(f, d.size(), d.size());
    std::size_t i = 0;
    for (const auto& x : d) m(i, i) = x, ++i;
    return m;
}

inline Tensor3 cube(const Field& f, std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> e)
{
    Tensor3 t(f, n);
    for (const auto& [i, j, k, v] : e) t(i, j, k) = v;
    return t;
}

inline Tensor3 pure3(const Field& f, std::size_t n, std::size_t i, std::size_t j, std::size_t k, Scalar v)
{
    Tensor3 t(f, n);
    t(i, j, k) = v;
    return t;
}

// e_i (x) e_i* summed, on A (+) A*
inline Tensor2 identity_pairing(const Field& f, std::size_t n)
{
    Tensor2 r(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) r(i, n + i) = s(f, 1);
    return r;
}

inline Mat block_inclusion(const Field& f, std::size_t n, std::size_t offset)
{
    Mat m(f, 2 * n, n);
    for (std::size_t i = 0; i < n; ++i) m(offset + i, i) = s(f, 1);
    return m;
}

inline std::vector<std::string> ids(const CheckReport& r)
{
    std::vector<std::string> out;
    for (const auto& [id, c] : r.per_id)
        if (c > 0) out.push_back(id);
    return out;
}

}  // namespace fx
