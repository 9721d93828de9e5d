#include "prealt/prealt.hpp"

namespace prealt {

PreAlternativeAlgebra PreAlternativeAlgebra::make(const Tensor3& prec, const Tensor3& succ, std::vector<std::string> labels)
{
    if (prec.dim() != succ.dim()) fail("DimensionMismatch", "prec and succ cubes differ in size");
    if (prec.field() != succ.field()) fail("FieldMismatch", "prec and succ live over different fields");
    PreAlternativeAlgebra p;
    p.field = prec.field();
    p.dim = prec.dim();
    p.prec = prec;
    p.succ = succ;
    p.labels = labels.empty() ? default_labels(p.dim) : std::move(labels);
    if (p.labels.size() != p.dim) fail("DimensionMismatch", "label count differs from dimension");
    return p;
}

PreAlternativeAlgebra PreAlternativeAlgebra::zero(const Field& f, std::size_t n)
{
    return make(Tensor3(f, n), Tensor3(f, n));
}

PreAltBimoduleAction PreAltBimoduleAction::make(Family Lp, Family Rp, Family Ls, Family Rs)
{
    std::size_t n = Lp.size();
    if (Rp.size() != n || Ls.size() != n || Rs.size() != n) fail("DimensionMismatch", "action family lengths differ");
    PreAltBimoduleAction act;
    act.algebra_dim = n;
    act.module_dim = n ? Lp.front().rows() : 0;
    for (const auto* fam : {&Lp, &Rp, &Ls, &Rs})
        for (const auto& m : *fam)
            if (m.rows() != act.module_dim || m.cols() != act.module_dim)
                fail("DimensionMismatch", "action matrices must be square of module size");
    act.Lp = std::move(Lp);
    act.Rp = std::move(Rp);
    act.Ls = std::move(Ls);
    act.Rs = std::move(Rs);
    return act;
}

PreAltBimoduleAction PreAltBimoduleAction::zero(const Field& f, std::size_t algebra_dim, std::size_t module_dim)
{
    auto z = zero_family(f, algebra_dim, module_dim);
    PreAltBimoduleAction act;
    act.algebra_dim = algebra_dim;
    act.module_dim = module_dim;
    act.Lp = act.Rp = act.Ls = act.Rs = z;
    return act;
}

Vec assoc_r(const PreAlternativeAlgebra& p, const Vec& x, const Vec& y, const Vec& z)
{
    return p.lt(p.lt(x, y), z) - p.lt(x, p.circ(y, z));
}

Vec assoc_m(const PreAlternativeAlgebra& p, const Vec& x, const Vec& y, const Vec& z)
{
    return p.lt(p.gt(x, y), z) - p.gt(x, p.lt(y, z));
}

Vec assoc_l(const PreAlternativeAlgebra& p, const Vec& x, const Vec& y, const Vec& z)
{
    return p.gt(p.circ(x, y), z) - p.gt(x, p.gt(y, z));
}

namespace {

struct AssocTables {
    std::size_t n;
    std::vector<Vec> r, m, l;
    const Vec& R(std::size_t i, std::size_t j, std::size_t k) const { return r[(i * n + j) * n + k]; }
    const Vec& M(std::size_t i, std::size_t j, std::size_t k) const { return m[(i * n + j) * n + k]; }
    const Vec& L(std::size_t i, std::size_t j, std::size_t k) const { return l[(i * n + j) * n + k]; }
};

AssocTables assoc_tables(const PreAlternativeAlgebra& p)
{
    AssocTables t;
    t.n = p.dim;
    std::size_t n = p.dim, total = n * n * n;
    t.r.resize(total);
    t.m.resize(total);
    t.l.resize(total);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto x = p.basis(i), y = p.basis(j), z = p.basis(k);
                std::size_t at = (i * n + j) * n + k;
                t.r[at] = assoc_r(p, x, y, z);
                t.m[at] = assoc_m(p, x, y, z);
                t.l[at] = assoc_l(p, x, y, z);
            }
    return t;
}

}  // namespace

CheckReport check_prealternative(const PreAlternativeAlgebra& p, const CheckOptions& opts)
{
    std::size_t n = p.dim;
    auto t = assoc_tables(p);
    CheckReport rep;
    auto triples = [&](const char* id, auto&& f) {
        sweep(rep, opts, id, n, [&](std::size_t i, Sink& s) {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) s.check({i, j, k}, f(i, j, k));
        });
    };
    triples("pa.mr", [&](auto i, auto j, auto k) { return t.M(i, j, k) + t.R(j, i, k); });
    triples("pa.ml", [&](auto i, auto j, auto k) { return t.M(i, j, k) + t.L(i, k, j); });
    triples("pa.l.sym", [&](auto i, auto j, auto k) { return t.L(i, j, k) + t.L(j, i, k); });
    triples("pa.r.sym", [&](auto i, auto j, auto k) { return t.R(i, j, k) + t.R(i, k, j); });
    // quadratic forms, x = e_i (+ e_j), expanded by multilinearity
    sweep(rep, opts, "pa.q.r", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = t.R(k, i, i);
                if (j != i) v = v + t.R(k, i, j) + t.R(k, j, i) + t.R(k, j, j);
                s.check({i, j, k}, v);
            }
    });
    sweep(rep, opts, "pa.q.l", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = t.L(i, i, k);
                if (j != i) v = v + t.L(i, j, k) + t.L(j, i, k) + t.L(j, j, k);
                s.check({i, j, k}, v);
            }
    });
    return rep;
}

CheckReport check_dendriform(const PreAlternativeAlgebra& p, const CheckOptions& opts)
{
    std::size_t n = p.dim;
    auto t = assoc_tables(p);
    CheckReport rep;
    for (auto [id, which] : {std::pair{"dend.r", 0}, std::pair{"dend.m", 1}, std::pair{"dend.l", 2}})
        sweep(rep, opts, id, n, [&, which = which](std::size_t i, Sink& s) {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    s.check({i, j, k}, which == 0 ? t.R(i, j, k) : which == 1 ? t.M(i, j, k) : t.L(i, j, k));
        });
    return rep;
}

AlternativeAlgebra associated_algebra(const PreAlternativeAlgebra& p)
{
    return AlternativeAlgebra::make(p.sum(), p.labels);
}

CheckReport check_prealt_bimodule(const PreAlternativeAlgebra& p, const PreAltBimoduleAction& act,
                                  const CheckOptions& opts)
{
    if (act.algebra_dim != p.dim) fail("DimensionMismatch", "action is indexed by a basis of another size");
    if (!check_prealternative(p, opts).passed) fail("NotPreAlternative", "algebra fails the pre-alternative axioms");
    std::size_t n = p.dim, m = act.module_dim;
    const Field& f = p.field;
    auto Lc = act.Lc(), Rc = act.Rc();
    auto ev = [&](const Family& fam, const Vec& v) { return combine(fam, v, f, m); };
    CheckReport rep;
    using Fn = std::function<Mat(std::size_t, std::size_t)>;
    auto e = [&](std::size_t i) { return p.basis(i); };
    const auto &Lp = act.Lp, &Rp = act.Rp, &Ls = act.Ls, &Rs = act.Rs;
    std::vector<std::pair<const char*, Fn>> ids = {
        {"pb.1",
         [&](auto x, auto y) {
             return ev(Ls, p.circ(e(x), e(y)) + p.circ(e(y), e(x))) - Ls[x] * Ls[y] - Ls[y] * Ls[x];
         }},
        {"pb.2", [&](auto x, auto y) { return Rs[y] * (Lc[x] + Rc[x]) - Ls[x] * Rs[y] - ev(Rs, p.gt(e(x), e(y))); }},
        {"pb.3",
         [&](auto x, auto y) { return Rp[y] * Ls[x] + Rp[y] * Rp[x] - Ls[x] * Rp[y] - ev(Rp, p.circ(e(x), e(y))); }},
        {"pb.4",
         [&](auto x, auto y) { return Rp[y] * Rs[x] + Rp[y] * Lp[x] - ev(Rs, p.lt(e(x), e(y))) - Lp[x] * Rc[y]; }},
        {"pb.5",
         [&](auto x, auto y) {
             return ev(Lp, p.gt(e(x), e(y))) + ev(Lp, p.lt(e(y), e(x))) - Ls[x] * Lp[y] - Lp[y] * Lc[x];
         }},
        {"pb.6",
         [&](auto x, auto y) { return ev(Ls, p.circ(e(y), e(x))) + Rp[x] * Ls[y] - Ls[y] * Ls[x] - Ls[y] * Rp[x]; }},
        {"pb.7",
         [&](auto x, auto y) {
             return Rs[y] * Rc[x] + Rp[x] * Rs[y] - ev(Rs, p.gt(e(x), e(y))) - ev(Rs, p.lt(e(y), e(x)));
         }},
        {"pb.8",
         [&](auto x, auto y) { return Rs[x] * Lc[y] + ev(Lp, p.gt(e(y), e(x))) - Ls[y] * Rs[x] - Ls[y] * Lp[x]; }},
        {"pb.9",
         [&](auto x, auto y) {
             return Rp[y] * Rp[x] + Rp[x] * Rp[y] - ev(Rp, p.circ(e(x), e(y)) + p.circ(e(y), e(x)));
         }},
        {"pb.10",
         [&](auto x, auto y) { return Rp[y] * Lp[x] + ev(Lp, p.lt(e(x), e(y))) - Lp[x] * (Rc[y] + Lc[y]); }},
    };
    for (auto& [id, fn] : ids)
        sweep(rep, opts, id, n, [&](std::size_t i, Sink& s) {
            for (std::size_t j = 0; j < n; ++j) s.check({i, j}, fn(i, j));
        });
    return rep;
}

std::pair<Tensor3, Tensor3> assemble_prealt_pair(const PreAlternativeAlgebra& a, const PreAlternativeAlgebra& b,
                                                 const PreAltBimoduleAction& fa, const PreAltBimoduleAction& fb)
{
    return {assemble_pair(a.prec, b.prec, fa.Lp, fa.Rp, fb.Lp, fb.Rp),
            assemble_pair(a.succ, b.succ, fa.Ls, fa.Rs, fb.Ls, fb.Rs)};
}

PreAlternativeAlgebra prealt_semidirect(const PreAlternativeAlgebra& p, const PreAltBimoduleAction& act,
                                        std::vector<std::string> module_labels, const CheckOptions& opts)
{
    if (!check_prealt_bimodule(p, act, opts).passed) fail("BadBimodule", "action fails the bimodule identities");
    std::size_t m = act.module_dim;
    if (module_labels.empty()) module_labels = default_labels(m, "v");
    if (module_labels.size() != m) fail("DimensionMismatch", "module label count");
    auto zero_side = PreAltBimoduleAction::zero(p.field, m, p.dim);
    auto [lt, gt] = assemble_prealt_pair(p, PreAlternativeAlgebra::zero(p.field, m), act, zero_side);
    auto labels = p.labels;
    labels.insert(labels.end(), module_labels.begin(), module_labels.end());
    return PreAlternativeAlgebra::make(lt, gt, labels);
}

PreAltBimoduleAction prealt_dual_bimodule(const PreAltBimoduleAction& act)
{
    auto out = PreAltBimoduleAction::make(negate_family(dual_action(act.Rs)), dual_action(act.Lc()),
                                          dual_action(act.Rc()), negate_family(dual_action(act.Lp)));
    out.algebra_dim = act.algebra_dim;
    return out;
}

PreAltBimoduleAction regular_prealt_bimodule(const PreAlternativeAlgebra& p)
{
    return PreAltBimoduleAction::make(left_family(p.prec), right_family(p.prec), left_family(p.succ),
                                      right_family(p.succ));
}

std::vector<std::pair<std::string, PreAltBimoduleAction>> example_actions(const PreAlternativeAlgebra& p)
{
    auto c = p.sum();
    auto z = zero_family(p.field, p.dim, p.dim);
    auto lp = left_family(p.prec), rp = right_family(p.prec);
    auto ls = left_family(p.succ), rs = right_family(p.succ);
    auto lc = left_family(c), rc = right_family(c);
    return {
        {"regular", PreAltBimoduleAction::make(lp, rp, ls, rs)},
        {"split", PreAltBimoduleAction::make(z, rp, ls, z)},
        {"associated", PreAltBimoduleAction::make(z, rc, lc, z)},
        {"dual-associated", PreAltBimoduleAction::make(z, dual_action(lc), dual_action(rc), z)},
        {"dual-split", PreAltBimoduleAction::make(z, dual_action(ls), dual_action(rp), z)},
        {"dual-regular", prealt_dual_bimodule(PreAltBimoduleAction::make(lp, rp, ls, rs))},
    };
}

CheckReport check_2cocycle(const PreAlternativeAlgebra& p, const BilinearForm& b, const CheckOptions& opts)
{
    std::size_t n = p.dim;
    if (b.rows() != n || b.cols() != n) fail("DimensionMismatch", "form size differs from algebra");
    auto e = [&](std::size_t i) { return p.basis(i); };
    CheckReport rep;
    sweep(rep, opts, "cocycle2", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                s.check({i, j, k}, form_eval(b, p.circ(e(i), e(j)), e(k)) - form_eval(b, e(i), p.gt(e(j), e(k))) -
                                       form_eval(b, e(j), p.lt(e(k), e(i))));
    });
    auto closed = check_form(associated_algebra(p), b - b.transpose(), FormKind::Closed, opts);
    rep.set_flag("closed", closed.passed);
    return rep;
}

CheckReport prealt_hom_check(const LinearMap& f, const PreAlternativeAlgebra& p, const PreAlternativeAlgebra& q,
                             const CheckOptions& opts)
{
    if (f.cols() != p.dim || f.rows() != q.dim) fail("DimensionMismatch", "map shape does not match algebras");
    std::size_t n = p.dim;
    CheckReport rep;
    sweep(rep, opts, "hom.prec", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j)
            s.check({i, j}, f * p.lt(p.basis(i), p.basis(j)) - q.lt(f.column(i), f.column(j)));
    });
    sweep(rep, opts, "hom.succ", n, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < n; ++j)
            s.check({i, j}, f * p.gt(p.basis(i), p.basis(j)) - q.gt(f.column(i), f.column(j)));
    });
    rep.set_flag("bijective", invertible(f));
    return rep;
}

}  // namespace prealt
