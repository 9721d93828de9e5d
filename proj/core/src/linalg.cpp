#include "prealt/linalg.hpp"

namespace prealt {

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar(f))
{
}

Mat Mat::identity(const Field& f, std::size_t n)
{
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::from_int(f, 1);
    return m;
}

Mat Mat::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols)
{
    Mat m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) fail("DimensionMismatch", "column length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::column(std::size_t j) const
{
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Vec Mat::row(std::size_t i) const
{
    return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

bool Mat::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::transpose() const
{
    Mat t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat& Mat::operator+=(const Mat& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("DimensionMismatch", "matrix sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("DimensionMismatch", "matrix difference");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Mat Mat::operator-() const
{
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

Mat operator*(const Scalar& s, Mat a)
{
    for (auto& x : a.a_) x *= s;
    return a;
}

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.cols_ != b.rows_) fail("DimensionMismatch", "matrix product");
    Mat c(a.f_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) c(i, j) += x * y;
            }
        }
    return c;
}

Vec operator*(const Mat& a, const Vec& v)
{
    if (a.cols_ != v.size()) fail("DimensionMismatch", "matrix-vector product");
    Vec r = zero_vec(a.f_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Scalar& x = a(i, j);
            if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
        }
    return r;
}

bool Mat::operator==(const Mat& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Echelon row_reduce(const Mat& m)
{
    Echelon e{m, {}};
    Mat& a = e.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const Mat& m) { return row_reduce(m).pivots.size(); }

bool invertible(const Mat& m) { return m.square() && rank(m) == m.rows(); }

Mat inverse(const Mat& m)
{
    if (!m.square()) fail("SingularMap", "non-square matrix has no inverse");
    std::size_t n = m.rows();
    Mat aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::from_int(m.field(), 1);
    }
    Echelon e = row_reduce(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) fail("SingularMap", "matrix is not invertible");
    Mat inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::vector<Vec> nullspace(const Mat& m)
{
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[free] = Scalar::from_int(m.field(), 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b)
{
    if (b.size() != a.rows()) fail("DimensionMismatch", "right-hand side length");
    Mat aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vec x = zero_vec(a.field(), a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

std::vector<Vec> column_basis(const Mat& m)
{
    std::vector<Vec> out;
    for (auto c : row_reduce(m).pivots) out.push_back(m.column(c));
    return out;
}

Family transpose_family(const Family& f)
{
    Family out;
    out.reserve(f.size());
    for (const auto& m : f) out.push_back(m.transpose());
    return out;
}

Family negate_family(const Family& f)
{
    Family out;
    out.reserve(f.size());
    for (const auto& m : f) out.push_back(-m);
    return out;
}

Family add_families(const Family& a, const Family& b)
{
    if (a.size() != b.size()) fail("DimensionMismatch", "family lengths differ");
    Family out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Family zero_family(const Field& f, std::size_t count, std::size_t dim)
{
    return Family(count, Mat(f, dim, dim));
}

Mat combine(const Family& f, const Vec& v, const Field& field, std::size_t dim)
{
    if (f.size() != v.size()) fail("DimensionMismatch", "family/vector length");
    Mat m(field, dim, dim);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) m += v[k] * f[k];
    return m;
}

}  // namespace prealt
