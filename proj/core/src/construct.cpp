#include "prealt/construct.hpp"
#include "prealt/ybe.hpp"

namespace prealt {

static void require_al_shape(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& al)
{
    if (act.algebra_dim != a.dim || al.rows() != a.dim || al.cols() != act.module_dim)
        fail("DimensionMismatch", "Al must map the module into the algebra");
}

CheckReport check_al_operator(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& al,
                              const CheckOptions& opts)
{
    require_al_shape(a, act, al);
    std::size_t m = act.module_dim;
    CheckReport rep;
    sweep(rep, opts, "al", m, [&](std::size_t u, Sink& s) {
        Vec tu = al.column(u);
        Mat Lu = act.left(tu);
        for (std::size_t v = 0; v < m; ++v) {
            Vec tv = al.column(v);
            Vec inner = Lu.column(v) + act.right(tv).column(u);
            s.check({u, v}, a.mul(tu, tv) - al * inner);
        }
    });
    return rep;
}

PreAlternativeAlgebra al_induce(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& al,
                                std::vector<std::string> labels, const CheckOptions& opts)
{
    if (!check_al_operator(a, act, al, opts).passed) fail("NotAlOperator", "map fails the Al-operator identity");
    std::size_t m = act.module_dim;
    Tensor3 lt(a.field, m), gt(a.field, m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            Vec x = act.right(al.column(v)).column(u);
            Vec y = act.left(al.column(u)).column(v);
            for (std::size_t k = 0; k < m; ++k) {
                lt(u, v, k) = x[k];
                gt(u, v, k) = y[k];
            }
        }
    if (labels.empty()) labels = default_labels(m, "v");
    return PreAlternativeAlgebra::make(lt, gt, labels);
}

Vec ImageStructure::coords(const Vec& x) const
{
    auto c = solve(basis, x);
    if (!c) fail("DimensionMismatch", "vector lies outside the image");
    return *c;
}

ImageStructure image_prealt(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& al,
                            const CheckOptions& opts)
{
    auto v = al_induce(a, act, al, {}, opts);
    ImageStructure img;
    img.pivots = row_reduce(al).pivots;
    std::vector<Vec> cols;
    for (auto p : img.pivots) cols.push_back(al.column(p));
    std::size_t k = cols.size();
    img.basis = Mat::from_columns(a.field, a.dim, cols);
    Tensor3 lt(a.field, k), gt(a.field, k);
    // Al(u) < Al(w) = Al(u < w) on image basis vectors
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            auto us = unit_vec(a.field, act.module_dim, img.pivots[s]);
            auto ut = unit_vec(a.field, act.module_dim, img.pivots[t]);
            Vec x = img.coords(al * v.lt(us, ut));
            Vec y = img.coords(al * v.gt(us, ut));
            for (std::size_t q = 0; q < k; ++q) {
                lt(s, t, q) = x[q];
                gt(s, t, q) = y[q];
            }
        }
    std::vector<std::string> labels;
    for (auto p : img.pivots) labels.push_back("Al(v" + std::to_string(p + 1) + ")");
    img.algebra = PreAlternativeAlgebra::make(lt, gt, labels);
    return img;
}

CheckReport check_1cocycle(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& d,
                           const CheckOptions& opts)
{
    if (act.algebra_dim != a.dim || d.cols() != a.dim || d.rows() != act.module_dim)
        fail("DimensionMismatch", "D must map the algebra into the module");
    std::size_t n = a.dim;
    CheckReport rep;
    sweep(rep, opts, "cocycle1", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = d * a.mul(a.basis(i), a.basis(j));
            s.check({i, j}, lhs - act.L[i] * d.column(j) - act.R[j] * d.column(i));
        }
    });
    rep.set_flag("bijective", invertible(d));
    return rep;
}

// x < y = M(R(y) M^-1 x), x > y = M(L(x) M^-1 y) with M : V -> A invertible
static PreAlternativeAlgebra conjugate_split(const AlternativeAlgebra& a, const AltBimoduleAction& act, const Mat& m,
                                             const Mat& minv)
{
    std::size_t n = a.dim;
    Tensor3 lt(a.field, n), gt(a.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = m * (act.R[j] * minv.column(i));
            Vec y = m * (act.L[i] * minv.column(j));
            for (std::size_t k = 0; k < n; ++k) {
                lt(i, j, k) = x[k];
                gt(i, j, k) = y[k];
            }
        }
    return PreAlternativeAlgebra::make(lt, gt, a.labels);
}

PreAlternativeAlgebra compatible_from_al(const AlternativeAlgebra& a, const AltBimoduleAction& act,
                                         const LinearMap& al, const CheckOptions& opts)
{
    if (!check_al_operator(a, act, al, opts).passed) fail("NotAlOperator", "map fails the Al-operator identity");
    if (!al.square() || !invertible(al)) fail("SingularMap", "Al-operator is not invertible");
    return conjugate_split(a, act, al, inverse(al));
}

PreAlternativeAlgebra compatible_from_1cocycle(const AlternativeAlgebra& a, const AltBimoduleAction& act,
                                               const LinearMap& d, const CheckOptions& opts)
{
    if (!check_1cocycle(a, act, d, opts).passed) fail("NotCocycle", "map fails the 1-cocycle identity");
    if (!d.square() || !invertible(d)) fail("SingularMap", "1-cocycle is not bijective");
    return conjugate_split(a, act, inverse(d), d);
}

PreAlternativeAlgebra graded_split(const AlternativeAlgebra& a, const Grading& g)
{
    std::size_t n = a.dim;
    if (g.degrees.size() != n) fail("NotGraded", "one degree per basis vector is required");
    for (auto d : g.degrees)
        if (d < 1) fail("NotGraded", "degrees must be positive integers");
    Tensor3 lt(a.field, n), gt(a.field, n);
    for (auto& [i, j, k, v] : a.mult.nonzeros()) {
        long long di = g.degrees[i], dj = g.degrees[j];
        if (g.degrees[k] != di + dj)
            fail("NotGraded", "product e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + " leaves degree " +
                                  std::to_string(di + dj));
        Scalar s = Scalar::from_int(a.field, di + dj);
        if (s.is_zero()) fail("BadCharacteristic", "degree sum " + std::to_string(di + dj) + " vanishes in " + a.field.name());
        gt(i, j, k) = Scalar::from_ratio(a.field, dj, di + dj) * v;
        lt(i, j, k) = Scalar::from_ratio(a.field, di, di + dj) * v;
    }
    return PreAlternativeAlgebra::make(lt, gt, a.labels);
}

PreAlternativeAlgebra symplectic_split(const AlternativeAlgebra& a, const BilinearForm& w, const CheckOptions& opts)
{
    std::size_t n = a.dim;
    if (w.rows() != n || w.cols() != n) fail("DimensionMismatch", "form size differs from algebra");
    if (!is_skew(w) || !check_form(a, w, FormKind::Symplectic, opts).passed)
        fail("NotSymplectic", "form is not a symplectic form on the algebra");
    // w(u, z) = u^T W z for all z  <=>  W^T u = rhs
    Mat wt = w.transpose();
    Tensor3 lt(a.field, n), gt(a.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // w(x < y, z) = w(x, y o z) = x^T W l(y) z
            Vec rhs_lt = left_mult(a.mult, a.basis(j)).transpose() * (wt * a.basis(i));
            // w(x > y, z) = w(y, z o x) = y^T W r(x) z
            Vec rhs_gt = right_mult(a.mult, a.basis(i)).transpose() * (wt * a.basis(j));
            auto x = solve(wt, rhs_lt), y = solve(wt, rhs_gt);
            if (!x || !y) fail("SingularMap", "split system has no solution");
            for (std::size_t k = 0; k < n; ++k) {
                lt(i, j, k) = (*x)[k];
                gt(i, j, k) = (*y)[k];
            }
        }
    return PreAlternativeAlgebra::make(lt, gt, a.labels);
}

PreAlternativeAlgebra compatible_from_pa_solution(const PreAlternativeAlgebra& p, const Tensor2& r,
                                                  const CheckOptions& opts)
{
    (void)opts;
    std::size_t n = p.dim;
    if (r.rows() != n || r.cols() != n) fail("DimensionMismatch", "tensor size differs from algebra");
    if (!is_symmetric(r)) fail("NotSolution", "r must be symmetric");
    if (!pa_residuals(p, r).all_zero()) fail("NotSolution", "r does not solve the PA-equations");
    if (!invertible(r)) fail("SingularMap", "r is degenerate");
    Mat t = tensor2_to_map(r), tinv = inverse(t);
    Tensor3 lt(p.field, n), gt(p.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = t * (left_mult(p.succ, p.basis(j)).transpose() * tinv.column(i));
            Vec y = t * (right_mult(p.prec, p.basis(i)).transpose() * tinv.column(j));
            for (std::size_t k = 0; k < n; ++k) {
                lt(i, j, k) = x[k];
                gt(i, j, k) = y[k];
            }
        }
    return PreAlternativeAlgebra::make(lt, gt, p.labels);
}

LinearMap form_to_dual_map(const BilinearForm& h) { return h.transpose(); }

LinearMap rota_baxter_candidate(const Tensor2& r, const BilinearForm& h)
{
    return tensor2_to_map(r) * form_to_dual_map(h);
}

CheckReport check_rota_baxter(const AlternativeAlgebra& a, const LinearMap& t, const CheckOptions& opts)
{
    return check_al_operator(a, regular_bimodule(a), t, opts);
}

}  // namespace prealt
