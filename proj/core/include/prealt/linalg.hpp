#pragma once

#include "prealt/field.hpp"

#include <optional>

namespace prealt {

// Dense matrix; a LinearMap stores column j as the image of the j-th domain basis vector.
class Mat {
public:
    Mat() = default;
    Mat(const Field& f, std::size_t rows, std::size_t cols);
    static Mat identity(const Field& f, std::size_t n);
    static Mat from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    bool is_zero() const;
    Mat transpose() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    Mat operator-() const;
    friend Mat operator*(const Scalar& s, Mat a);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Vec operator*(const Mat& a, const Vec& v);
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

using LinearMap = Mat;
using Tensor2 = Mat;
using BilinearForm = Mat;
using Family = std::vector<Mat>;  // one matrix per algebra basis vector

// Row echelon data from Gauss-Jordan elimination. Pivot = first nonzero entry
// of the column at or below the current row, scanning columns left to right.
struct Echelon {
    Mat reduced;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Mat& m);
std::size_t rank(const Mat& m);
bool invertible(const Mat& m);
Mat inverse(const Mat& m);  // throws SingularMap
std::vector<Vec> nullspace(const Mat& m);
std::optional<Vec> solve(const Mat& a, const Vec& b);
// basis of the column span, as a list of columns of m
std::vector<Vec> column_basis(const Mat& m);

// Family helpers
Family transpose_family(const Family& f);
Family negate_family(const Family& f);
Family add_families(const Family& a, const Family& b);
Family zero_family(const Field& f, std::size_t count, std::size_t dim);
// sum_k v_k f[k]
Mat combine(const Family& f, const Vec& v, const Field& field, std::size_t dim);

}  // namespace prealt
