#include "prealt/tensor.hpp"

namespace prealt {

Tensor3::Tensor3(const Field& f, std::size_t n) : f_(f), n_(n), a_(n * n * n, Scalar(f)) {}

bool Tensor3::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor3 Tensor3::permuted(std::array<int, 3> perm) const
{
    Tensor3 t(f_, n_);
    std::array<std::size_t, 3> idx{}, out{};
    for (idx[0] = 0; idx[0] < n_; ++idx[0])
        for (idx[1] = 0; idx[1] < n_; ++idx[1])
            for (idx[2] = 0; idx[2] < n_; ++idx[2]) {
                for (int a = 0; a < 3; ++a) out[perm[a]] = idx[a];
                t(out[0], out[1], out[2]) = (*this)(idx[0], idx[1], idx[2]);
            }
    return t;
}

Mat Tensor3::slice(std::size_t i) const
{
    Mat m(f_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) m(j, k) = (*this)(i, j, k);
    return m;
}

void Tensor3::set_slice(std::size_t i, const Mat& m)
{
    if (m.rows() != n_ || m.cols() != n_) fail("DimensionMismatch", "slice shape");
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) (*this)(i, j, k) = m(j, k);
}

Tensor3& Tensor3::operator+=(const Tensor3& o)
{
    if (n_ != o.n_) fail("DimensionMismatch", "tensor sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o)
{
    if (n_ != o.n_) fail("DimensionMismatch", "tensor difference");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Tensor3 Tensor3::operator-() const
{
    Tensor3 t = *this;
    for (auto& x : t.a_) x = -x;
    return t;
}

Tensor3 operator*(const Scalar& s, Tensor3 t)
{
    for (auto& x : t.a_) x *= s;
    return t;
}

bool Tensor3::operator==(const Tensor3& o) const { return n_ == o.n_ && a_ == o.a_; }

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> Tensor3::nonzeros() const
{
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (!(*this)(i, j, k).is_zero()) out.emplace_back(i, j, k, (*this)(i, j, k));
    return out;
}

Vec product(const Tensor3& c, const Vec& x, const Vec& y)
{
    std::size_t n = c.dim();
    if (x.size() != n || y.size() != n) fail("DimensionMismatch", "product operands");
    Vec out = zero_vec(c.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
        }
    }
    return out;
}

Mat left_mult(const Tensor3& c, const Vec& x)
{
    std::size_t n = c.dim();
    Mat m(c.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!c(i, j, k).is_zero()) m(k, j) += x[i] * c(i, j, k);
    }
    return m;
}

Mat right_mult(const Tensor3& c, const Vec& y)
{
    std::size_t n = c.dim();
    Mat m(c.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (!c(i, j, k).is_zero()) m(k, i) += y[j] * c(i, j, k);
    }
    return m;
}

Family left_family(const Tensor3& c)
{
    Family f;
    for (std::size_t i = 0; i < c.dim(); ++i) f.push_back(left_mult(c, unit_vec(c.field(), c.dim(), i)));
    return f;
}

Family right_family(const Tensor3& c)
{
    Family f;
    for (std::size_t i = 0; i < c.dim(); ++i) f.push_back(right_mult(c, unit_vec(c.field(), c.dim(), i)));
    return f;
}

Tensor2 tensor2_flip(const Tensor2& r) { return r.transpose(); }

bool is_symmetric(const Tensor2& r) { return r.square() && r == r.transpose(); }

bool is_skew(const Tensor2& r) { return r.square() && r == -r.transpose(); }

LinearMap tensor2_to_map(const Tensor2& r)
{
    if (!r.square()) fail("DimensionMismatch", "tensor must be square");
    return r;
}

Tensor2 map_to_tensor2(const LinearMap& t)
{
    if (!t.square()) fail("DimensionMismatch", "map must be square");
    return t;
}

BilinearForm map_to_form(const LinearMap& t) { return inverse(t); }

Tensor2 form_to_tensor2(const BilinearForm& b) { return inverse(b); }

Scalar form_eval(const BilinearForm& b, const Vec& x, const Vec& y)
{
    Vec by = b * y;
    Scalar s(b.field());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) s += x[i] * by[i];
    return s;
}

Family dual_action(const Family& rho)
{
    for (const auto& m : rho)
        if (!m.square() || m.rows() != rho.front().rows()) fail("DimensionMismatch", "action matrices differ in size");
    return transpose_family(rho);
}

Tensor3 pair_product(const Tensor2& r, Slots rs, const Tensor2& s, Slots ss, const Tensor3& prod)
{
    auto valid = [](Slots x) { return x.first >= 1 && x.first <= 3 && x.second >= 1 && x.second <= 3 && x.first != x.second; };
    if (!valid(rs) || !valid(ss)) fail("SlotError", "slots must be two distinct values in 1..3");
    int shared = 0, count = 0;
    for (int a : {rs.first, rs.second})
        for (int b : {ss.first, ss.second})
            if (a == b) {
                shared = a;
                ++count;
            }
    if (count != 1) fail("SlotError", "exactly one slot must be shared");
    std::size_t n = prod.dim();
    if (r.rows() != n || r.cols() != n || s.rows() != n || s.cols() != n)
        fail("DimensionMismatch", "pair product operands");

    bool r_shared_first = rs.first == shared;
    bool s_shared_first = ss.first == shared;
    int r_other = r_shared_first ? rs.second : rs.first;
    int s_other = s_shared_first ? ss.second : ss.first;

    Tensor3 out(prod.field(), n);
    std::array<std::size_t, 3> idx{};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& ra = r(a, b);
            if (ra.is_zero()) continue;
            std::size_t r_leg = r_shared_first ? a : b;
            std::size_t r_free = r_shared_first ? b : a;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Scalar& sc = s(c, d);
                    if (sc.is_zero()) continue;
                    std::size_t s_leg = s_shared_first ? c : d;
                    std::size_t s_free = s_shared_first ? d : c;
                    Scalar w = ra * sc;
                    idx[r_other - 1] = r_free;
                    idx[s_other - 1] = s_free;
                    for (std::size_t m = 0; m < n; ++m) {
                        const Scalar& p = prod(r_leg, s_leg, m);
                        if (p.is_zero()) continue;
                        idx[shared - 1] = m;
                        out(idx[0], idx[1], idx[2]) += w * p;
                    }
                }
        }
    return out;
}

Tensor2 apply2(const Mat& f, const Mat& g, const Tensor2& t) { return f * t * g.transpose(); }

Tensor3 apply3(const Mat& f, const Mat& g, const Mat& h, const Tensor3& t)
{
    std::size_t n = t.dim();
    // contract one axis at a time
    Tensor3 a(t.field(), n), b(t.field(), n), c(t.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& x = t(i, j, k);
                if (x.is_zero()) continue;
                for (std::size_t p = 0; p < n; ++p)
                    if (!f(p, i).is_zero()) a(p, j, k) += f(p, i) * x;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& x = a(i, j, k);
                if (x.is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q)
                    if (!g(q, j).is_zero()) b(i, q, k) += g(q, j) * x;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& x = b(i, j, k);
                if (x.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r)
                    if (!h(r, k).is_zero()) c(i, j, r) += h(r, k) * x;
            }
    return c;
}

Tensor3 swap12(const Tensor3& t) { return t.permuted({1, 0, 2}); }

Tensor3 swap23(const Tensor3& t) { return t.permuted({0, 2, 1}); }

Tensor2 comult_apply(const Tensor3& a, const Vec& v)
{
    std::size_t n = a.dim();
    if (v.size() != n) fail("DimensionMismatch", "comultiplication argument");
    Mat m(a.field(), n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!a(k, i, j).is_zero()) m(i, j) += v[k] * a(k, i, j);
    }
    return m;
}

Tensor3 comult_left(const Tensor3& a, const Tensor2& t)
{
    std::size_t n = a.dim();
    Tensor3 out(a.field(), n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& w = t(x, b);
            if (w.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!a(x, j, k).is_zero()) out(j, k, b) += w * a(x, j, k);
        }
    return out;
}

Tensor3 comult_right(const Tensor3& a, const Tensor2& t)
{
    std::size_t n = a.dim();
    Tensor3 out(a.field(), n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& w = t(x, b);
            if (w.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!a(b, j, k).is_zero()) out(x, j, k) += w * a(b, j, k);
        }
    return out;
}

Tensor3 dual_product(const Tensor3& comult) { return comult.permuted({2, 0, 1}); }

Tensor3 dual_comult(const Tensor3& prod) { return prod.permuted({1, 2, 0}); }

std::size_t span_dim(const Field& f, std::size_t n, const std::vector<Vec>& w)
{
    if (w.empty()) return 0;
    return rank(Mat::from_columns(f, n, w));
}

bool span_contains(const Field& f, std::size_t n, const std::vector<Vec>& w, const Vec& v)
{
    if (is_zero(v)) return true;
    if (w.empty()) return false;
    return solve(Mat::from_columns(f, n, w), v).has_value();
}

OrthResult orth_complement(const BilinearForm& b, const std::vector<Vec>& w)
{
    std::size_t n = b.rows();
    const Field& f = b.field();
    // x in W^perp iff B(x, w) = 0 for all w: rows are (B w)^T
    Mat sys(f, w.size(), n);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Vec bw = b * w[i];
        for (std::size_t j = 0; j < n; ++j) sys(i, j) = bw[j];
    }
    OrthResult res;
    res.complement = w.empty() ? std::vector<Vec>{} : nullspace(sys);
    if (w.empty())
        for (std::size_t i = 0; i < n; ++i) res.complement.push_back(unit_vec(f, n, i));
    res.isotropic = true;
    for (const auto& x : w)
        if (!span_contains(f, n, res.complement, x)) res.isotropic = false;
    res.lagrangian = res.isotropic && span_dim(f, n, w) == res.complement.size();
    return res;
}

}  // namespace prealt
