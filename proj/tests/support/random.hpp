#pragma once

#include "oracles.hpp"

#include <random>

namespace gen {

using namespace prealt;

class Rng {
public:
    explicit Rng(std::uint32_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_); }
    bool coin(double p) { return std::bernoulli_distribution(p)(eng_); }

    Scalar scalar(const Field& f) { return Scalar::from_int(f, static_cast<long long>(below(f.characteristic()))); }

    // each entry nonzero with probability `density`
    Tensor3 cube(const Field& f, std::size_t n, double density)
    {
        Tensor3 t(f, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (coin(density)) t(i, j, k) = scalar(f);
        return t;
    }

    Mat mat(const Field& f, std::size_t rows, std::size_t cols)
    {
        Mat m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(f);
        return m;
    }

    Tensor2 symmetric(const Field& f, std::size_t n)
    {
        Mat m = mat(f, n, n);
        return m + m.transpose();
    }

    Tensor2 skew(const Field& f, std::size_t n)
    {
        Mat m = mat(f, n, n);
        return m - m.transpose();
    }

    Vec vec(const Field& f, std::size_t n)
    {
        Vec v(n, Scalar(f));
        for (auto& s : v) s = scalar(f);
        return v;
    }

    Family family(const Field& f, std::size_t count, std::size_t dim, double density)
    {
        Family out;
        for (std::size_t a = 0; a < count; ++a) {
            Mat m(f, dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (coin(density)) m(i, j) = scalar(f);
            out.push_back(m);
        }
        return out;
    }

    std::mt19937& engine() { return eng_; }

private:
    std::mt19937 eng_;
};

inline double density(std::size_t n) { return n <= 1 ? 0.5 : n == 2 ? 0.15 : 0.07; }

// Nonzero pre-alternative structures by rejection; acceptance is checked with the naive oracle.
inline PreAlternativeAlgebra prealt(Rng& rng, const Field& f, std::size_t n)
{
    for (;;) {
        Tensor3 P = rng.cube(f, n, density(n)), S = rng.cube(f, n, density(n));
        if ((P.is_zero() && S.is_zero()) || !oracle::prealt_exhaustive(P, S)) continue;
        return PreAlternativeAlgebra::make(P, S);
    }
}

inline AlternativeAlgebra alternative(Rng& rng, const Field& f, std::size_t n)
{
    for (;;) {
        Tensor3 c = rng.cube(f, n, n == 2 ? 0.2 : 0.08);
        if (c.is_zero() || !oracle::alternative_exhaustive(c)) continue;
        return AlternativeAlgebra::make(c);
    }
}

// raw sparse pre-alternative candidates; roughly half-valid for small n
inline PreAlternativeAlgebra raw_pair(Rng& rng, const Field& f, std::size_t n)
{
    return PreAlternativeAlgebra::make(rng.cube(f, n, density(n)), rng.cube(f, n, density(n)));
}

}  // namespace gen
