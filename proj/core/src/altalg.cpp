#include "prealt/altalg.hpp"

namespace prealt {

std::vector<std::string> default_labels(std::size_t n, const std::string& stem)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
    return out;
}

std::vector<std::string> dual_labels(const std::vector<std::string>& labels)
{
    std::vector<std::string> out;
    for (const auto& l : labels) out.push_back(l + "^*");
    return out;
}

AlternativeAlgebra AlternativeAlgebra::make(const Tensor3& mult, std::vector<std::string> labels)
{
    AlternativeAlgebra a;
    a.field = mult.field();
    a.dim = mult.dim();
    a.mult = mult;
    a.labels = labels.empty() ? default_labels(a.dim) : std::move(labels);
    if (a.labels.size() != a.dim) fail("DimensionMismatch", "label count differs from dimension");
    return a;
}

AlternativeAlgebra AlternativeAlgebra::zero(const Field& f, std::size_t n) { return make(Tensor3(f, n)); }

AltBimoduleAction AltBimoduleAction::make(Family L, Family R)
{
    if (L.size() != R.size()) fail("DimensionMismatch", "L and R family lengths differ");
    AltBimoduleAction act;
    act.algebra_dim = L.size();
    act.module_dim = L.empty() ? 0 : L.front().rows();
    for (const auto* fam : {&L, &R})
        for (const auto& m : *fam)
            if (m.rows() != act.module_dim || m.cols() != act.module_dim)
                fail("DimensionMismatch", "action matrices must be square of module size");
    act.L = std::move(L);
    act.R = std::move(R);
    return act;
}

AltBimoduleAction AltBimoduleAction::zero(const Field& f, std::size_t algebra_dim, std::size_t module_dim)
{
    AltBimoduleAction act;
    act.algebra_dim = algebra_dim;
    act.module_dim = module_dim;
    act.L = zero_family(f, algebra_dim, module_dim);
    act.R = zero_family(f, algebra_dim, module_dim);
    return act;
}

Mat AltBimoduleAction::left(const Vec& x) const
{
    return combine(L, x, x.empty() ? Field() : x.front().field(), module_dim);
}

Mat AltBimoduleAction::right(const Vec& x) const
{
    return combine(R, x, x.empty() ? Field() : x.front().field(), module_dim);
}

Vec associator(const Tensor3& c, const Vec& x, const Vec& y, const Vec& z)
{
    return product(c, product(c, x, y), z) - product(c, x, product(c, y, z));
}

namespace {

// assoc[(i*n + j)*n + k] = (e_i, e_j, e_k)
std::vector<Vec> associator_table(const Tensor3& c)
{
    std::size_t n = c.dim();
    const Field& f = c.field();
    std::vector<Vec> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = zero_vec(f, n);
            for (std::size_t k = 0; k < n; ++k) v[k] = c(i, j, k);
            prod[i * n + j] = std::move(v);
        }
    std::vector<Vec> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = product(c, prod[i * n + j], unit_vec(f, n, k));
                Vec rhs = product(c, unit_vec(f, n, i), prod[j * n + k]);
                table[(i * n + j) * n + k] = lhs - rhs;
            }
    return table;
}

}  // namespace

CheckReport check_alternative(const AlternativeAlgebra& a, const CheckOptions& opts)
{
    std::size_t n = a.dim;
    auto table = associator_table(a.mult);
    auto as = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vec& { return table[(i * n + j) * n + k]; };
    CheckReport rep;
    // (x,x,y) with x = e_i + e_j expands by multilinearity
    sweep(rep, opts, "alt.left", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec r = as(i, i, k);
                if (j != i) r = r + as(i, j, k) + as(j, i, k) + as(j, j, k);
                s.check({i, j, k}, r);
            }
    });
    sweep(rep, opts, "alt.right", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec r = as(k, i, i);
                if (j != i) r = r + as(k, i, j) + as(k, j, i) + as(k, j, j);
                s.check({i, j, k}, r);
            }
    });
    sweep(rep, opts, "alt.left.lin", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) s.check({i, j, k}, as(i, j, k) + as(j, i, k));
    });
    sweep(rep, opts, "alt.right.lin", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) s.check({i, j, k}, as(i, j, k) + as(i, k, j));
    });
    return rep;
}

CheckReport check_associative(const AlternativeAlgebra& a, const CheckOptions& opts)
{
    std::size_t n = a.dim;
    CheckReport rep;
    sweep(rep, opts, "assoc", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                s.check({i, j, k}, associator(a.mult, a.basis(i), a.basis(j), a.basis(k)));
    });
    return rep;
}

AltBimoduleAction regular_bimodule(const AlternativeAlgebra& a)
{
    return AltBimoduleAction::make(left_family(a.mult), right_family(a.mult));
}

static void require_action_shape(const AlternativeAlgebra& a, const AltBimoduleAction& act)
{
    if (act.algebra_dim != a.dim || act.L.size() != a.dim || act.R.size() != a.dim)
        fail("DimensionMismatch", "action is indexed by a basis of another size");
}

CheckReport check_alt_bimodule(const AlternativeAlgebra& a, const AltBimoduleAction& act, const CheckOptions& opts)
{
    require_action_shape(a, act);
    if (!check_alternative(a, opts).passed) fail("NotAlternative", "algebra fails the alternative axioms");
    std::size_t n = a.dim;
    const auto& L = act.L;
    const auto& R = act.R;
    auto Lv = [&](const Vec& v) { return act.left(v); };
    auto Rv = [&](const Vec& v) { return act.right(v); };
    CheckReport rep;
    sweep(rep, opts, "bm.left.sq", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec sym = a.mul(a.basis(i), a.basis(j)) + a.mul(a.basis(j), a.basis(i));
            s.check({i, j}, Lv(sym) - L[i] * L[j] - L[j] * L[i]);
        }
    });
    sweep(rep, opts, "bm.right.sq", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec sym = a.mul(a.basis(i), a.basis(j)) + a.mul(a.basis(j), a.basis(i));
            s.check({i, j}, Rv(sym) - R[i] * R[j] - R[j] * R[i]);
        }
    });
    sweep(rep, opts, "bm.rl", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j) {
            // R(y)L(x) - L(x)R(y) = R(x o y) - R(y)R(x)
            Vec xy = a.mul(a.basis(i), a.basis(j));
            s.check({i, j}, R[j] * L[i] - L[i] * R[j] - Rv(xy) + R[j] * R[i]);
        }
    });
    sweep(rep, opts, "bm.ll", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j) {
            // L(y o x) - L(y)L(x) = L(y)R(x) - R(x)L(y)
            Vec yx = a.mul(a.basis(j), a.basis(i));
            s.check({i, j}, Lv(yx) - L[j] * L[i] - L[j] * R[i] + R[i] * L[j]);
        }
    });
    return rep;
}

Tensor3 assemble_pair(const Tensor3& ca, const Tensor3& cb, const Family& LA, const Family& RA, const Family& LB,
                      const Family& RB)
{
    std::size_t n = ca.dim(), m = cb.dim();
    if (LA.size() != n || RA.size() != n || LB.size() != m || RB.size() != m)
        fail("DimensionMismatch", "matched pair family lengths");
    for (const auto* fam : {&LA, &RA})
        for (const auto& x : *fam)
            if (x.rows() != m || x.cols() != m) fail("DimensionMismatch", "A-indexed actions must act on B");
    for (const auto* fam : {&LB, &RB})
        for (const auto& x : *fam)
            if (x.rows() != n || x.cols() != n) fail("DimensionMismatch", "B-indexed actions must act on A");
    Tensor3 c(ca.field(), n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(i, j, k) = ca(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) c(n + i, n + j, n + k) = cb(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b) {
            // e_i * f_b = RB(f_b) e_i + LA(e_i) f_b
            for (std::size_t k = 0; k < n; ++k) c(i, n + b, k) += RB[b](k, i);
            for (std::size_t k = 0; k < m; ++k) c(i, n + b, n + k) += LA[i](k, b);
            // f_b * e_i = LB(f_b) e_i + RA(e_i) f_b
            for (std::size_t k = 0; k < n; ++k) c(n + b, i, k) += LB[b](k, i);
            for (std::size_t k = 0; k < m; ++k) c(n + b, i, n + k) += RA[i](k, b);
        }
    return c;
}

AlternativeAlgebra alt_semidirect(const AlternativeAlgebra& a, const AltBimoduleAction& act,
                                  std::vector<std::string> module_labels, const CheckOptions& opts)
{
    if (!check_alt_bimodule(a, act, opts).passed) fail("BadBimodule", "action fails the bimodule identities");
    std::size_t m = act.module_dim;
    if (module_labels.empty()) module_labels = default_labels(m, "v");
    if (module_labels.size() != m) fail("DimensionMismatch", "module label count");
    Tensor3 c = assemble_pair(a.mult, Tensor3(a.field, m), act.L, act.R, zero_family(a.field, m, a.dim),
                              zero_family(a.field, m, a.dim));
    auto labels = a.labels;
    labels.insert(labels.end(), module_labels.begin(), module_labels.end());
    return AlternativeAlgebra::make(c, labels);
}

AltBimoduleAction alt_dual_bimodule(const AltBimoduleAction& act)
{
    return AltBimoduleAction::make(dual_action(act.R), dual_action(act.L));
}

CheckReport check_form(const AlternativeAlgebra& a, const BilinearForm& b, FormKind kind, const CheckOptions& opts)
{
    std::size_t n = a.dim;
    if (b.rows() != n || b.cols() != n) fail("DimensionMismatch", "form size differs from algebra");
    CheckReport rep;
    auto B = [&](const Vec& x, const Vec& y) { return form_eval(b, x, y); };
    auto e = [&](std::size_t i) { return a.basis(i); };
    if (kind == FormKind::Invariant) {
        sweep(rep, opts, "form.invariant", n, [&](std::size_t i, Sink& s) {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    s.check({i, j, k}, B(a.mul(e(i), e(j)), e(k)) - B(e(i), a.mul(e(j), e(k))));
        });
        return rep;
    }
    if (!is_skew(b)) fail("NotSkew", "closed and symplectic forms must be skew-symmetric");
    sweep(rep, opts, "form.closed", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                s.check({i, j, k}, B(a.mul(e(i), e(j)), e(k)) + B(a.mul(e(j), e(k)), e(i)) + B(a.mul(e(k), e(i)), e(j)));
    });
    rep.set_flag("closed", rep.passed);
    if (kind == FormKind::Symplectic) {
        bool nondeg = invertible(b);
        rep.set_flag("nondegenerate", nondeg);
        sweep(rep, opts, "form.nondegenerate", 1, [&](std::size_t, Sink& s) {
            if (!nondeg) s.flag({}, Residual::of(Scalar::from_int(a.field, 1)));
        });
    }
    return rep;
}

bool is_subalgebra(const Tensor3& c, const std::vector<Vec>& w)
{
    std::size_t n = c.dim();
    for (const auto& x : w)
        for (const auto& y : w)
            if (!span_contains(c.field(), n, w, product(c, x, y))) return false;
    return true;
}

SubspaceVerdict subspace_lagrangian(const BilinearForm& b, const std::vector<Vec>& w, const AlternativeAlgebra* a)
{
    auto o = orth_complement(b, w);
    SubspaceVerdict v;
    v.isotropic = o.isotropic;
    v.lagrangian = o.lagrangian;
    if (a) v.subalgebra = is_subalgebra(a->mult, w);
    return v;
}

CheckReport alt_hom_check(const LinearMap& f, const AlternativeAlgebra& a, const AlternativeAlgebra& b,
                          const CheckOptions& opts)
{
    if (f.cols() != a.dim || f.rows() != b.dim) fail("DimensionMismatch", "map shape does not match algebras");
    std::size_t n = a.dim;
    CheckReport rep;
    sweep(rep, opts, "hom", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec fi = f.column(i), fj = f.column(j);
            s.check({i, j}, f * a.mul(a.basis(i), a.basis(j)) - b.mul(fi, fj));
        }
    });
    rep.set_flag("bijective", invertible(f));
    return rep;
}

BilinearForm pairing_form(const Field& f, std::size_t n)
{
    Mat b(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, n + i) = Scalar::from_int(f, 1);
        b(n + i, i) = Scalar::from_int(f, 1);
    }
    return b;
}

BilinearForm omega_p(const Field& f, std::size_t n)
{
    Mat b(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, n + i) = Scalar::from_int(f, -1);
        b(n + i, i) = Scalar::from_int(f, 1);
    }
    return b;
}

}  // namespace prealt
