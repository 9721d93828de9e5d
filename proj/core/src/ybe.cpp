#include "prealt/ybe.hpp"

#include <thread>

namespace prealt {

Symmetry symmetry_of(const Tensor2& r)
{
    if (is_symmetric(r)) return Symmetry::Symmetric;
    if (is_skew(r)) return Symmetry::Skew;
    return Symmetry::Neither;
}

std::string to_string(Symmetry s)
{
    switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Skew: return "skew";
    default: return "neither";
    }
}

const std::array<std::array<PaTerm, 3>, 6>& pa_term_table()
{
    using P = ProductKind;
    static const Slots s12{1, 2}, s13{1, 3}, s23{2, 3};
    static const std::array<std::array<PaTerm, 3>, 6> table = {{
        {{{s12, s13, P::Circ, 1}, {s23, s12, P::Succ, -1}, {s13, s23, P::Prec, -1}}},
        {{{s13, s12, P::Circ, 1}, {s12, s23, P::Prec, -1}, {s23, s13, P::Succ, -1}}},
        {{{s12, s23, P::Circ, 1}, {s23, s13, P::Prec, -1}, {s13, s12, P::Succ, -1}}},
        {{{s23, s12, P::Circ, 1}, {s13, s23, P::Succ, -1}, {s12, s13, P::Prec, -1}}},
        {{{s13, s23, P::Circ, 1}, {s12, s13, P::Succ, -1}, {s23, s12, P::Prec, -1}}},
        {{{s23, s13, P::Circ, 1}, {s13, s12, P::Prec, -1}, {s12, s23, P::Succ, -1}}},
    }};
    return table;
}

const std::array<std::string, 6> PaResiduals::term_names = {"PA_1^1", "PA_1^2", "PA_2^1", "PA_2^2", "PA_3^1", "PA_3^2"};
const std::array<std::string, 3> PaResiduals::sum_names = {"PA_1", "PA_2", "PA_3"};

bool PaResiduals::all_zero() const
{
    for (const auto& t : terms)
        if (!t.is_zero()) return false;
    return true;
}

static void require_tensor(std::size_t n, const Tensor2& r)
{
    if (r.rows() != n || r.cols() != n) fail("DimensionMismatch", "tensor size differs from algebra");
}

PaResiduals pa_residuals(const PreAlternativeAlgebra& p, const Tensor2& r)
{
    require_tensor(p.dim, r);
    Tensor3 circ = p.sum();
    PaResiduals out;
    const auto& table = pa_term_table();
    for (std::size_t t = 0; t < 6; ++t) {
        Tensor3 acc(p.field, p.dim);
        for (const auto& term : table[t]) {
            const Tensor3& prod = term.prod == ProductKind::Circ ? circ : term.prod == ProductKind::Prec ? p.prec : p.succ;
            Tensor3 x = pair_product(r, term.r, r, term.s, prod);
            if (term.sign > 0)
                acc += x;
            else
                acc -= x;
        }
        out.terms[t] = std::move(acc);
    }
    for (std::size_t j = 0; j < 3; ++j) out.sums[j] = out.terms[2 * j] + out.terms[2 * j + 1];
    return out;
}

Tensor3 aybe_residual(const AlternativeAlgebra& a, const Tensor2& r, AybeVariant v)
{
    require_tensor(a.dim, r);
    const Slots s12{1, 2}, s13{1, 3}, s23{2, 3};
    auto pp = [&](Slots x, Slots y) { return pair_product(r, x, r, y, a.mult); };
    if (v == AybeVariant::A1) return pp(s23, s12) - pp(s12, s13) - pp(s13, s23);
    return pp(s12, s23) - pp(s23, s13) - pp(s13, s12);
}

namespace {

// T(a) o T(b) - T(L(T a) b + R(T b) a) for the dual action families L, R on A*
CheckReport operator_route(const Tensor3& c, const Mat& t, const Family& L, const Family& R, const CheckOptions& opts)
{
    std::size_t n = c.dim();
    const Field& f = c.field();
    CheckReport rep;
    sweep(rep, opts, "yb.op", n, [&](std::size_t i, Sink& s) {
        Vec ta = t.column(i);
        Mat la = combine(L, ta, f, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec tb = t.column(j);
            Vec inner = la.column(j) + combine(R, tb, f, n).column(i);
            s.check({i, j}, product(c, ta, tb) - t * inner);
        }
    });
    return rep;
}

}  // namespace

CheckReport yb_operator_check(const AlternativeAlgebra& a, const Tensor2& r, const CheckOptions& opts)
{
    require_tensor(a.dim, r);
    if (!is_skew(r)) fail("WrongSymmetry", "operator form of the AYBE needs a skew-symmetric r");
    Mat t = tensor2_to_map(r);
    auto rep = operator_route(a.mult, t, dual_action(right_family(a.mult)), dual_action(left_family(a.mult)), opts);
    bool tensor_zero = aybe_residual(a, r).is_zero();
    rep.set_flag("tensor_zero", tensor_zero);
    rep.set_flag("routes_agree", tensor_zero == rep.passed);
    return rep;
}

CheckReport yb_operator_check(const PreAlternativeAlgebra& p, const Tensor2& r, const CheckOptions& opts)
{
    require_tensor(p.dim, r);
    if (!is_symmetric(r)) fail("WrongSymmetry", "operator form of the PA-equations needs a symmetric r");
    Mat t = tensor2_to_map(r);
    auto rep = operator_route(p.sum(), t, dual_action(right_family(p.prec)), dual_action(left_family(p.succ)), opts);
    auto pa = pa_residuals(p, r);
    bool first = pa.terms[0].is_zero(), coincide = true;
    for (const auto& x : pa.terms) coincide = coincide && x.is_zero() == first;
    rep.set_flag("tensor_zero", pa.all_zero());
    rep.set_flag("pa_coincide", coincide);
    rep.set_flag("routes_agree", pa.all_zero() == rep.passed && coincide);
    return rep;
}

static PreAlternativeAlgebra dual_split(const Field& f, std::size_t n, const Mat& t, const Tensor3& lt_src,
                                        const Tensor3& gt_src, const std::vector<std::string>& labels)
{
    // a* < b* = l*(T b*) a* from lt_src, a* > b* = r*(T a*) b* from gt_src
    Tensor3 lt(f, n), gt(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = left_mult(lt_src, t.column(j)).transpose().column(i);
            Vec y = right_mult(gt_src, t.column(i)).transpose().column(j);
            for (std::size_t k = 0; k < n; ++k) {
                lt(i, j, k) = x[k];
                gt(i, j, k) = y[k];
            }
        }
    return PreAlternativeAlgebra::make(lt, gt, dual_labels(labels));
}

PreAlternativeAlgebra induced_dual_prealt(const AlternativeAlgebra& a, const Tensor2& r, const CheckOptions& opts)
{
    if (!yb_operator_check(a, r, opts).passed) fail("NotSolution", "r is not a skew solution of the AYBE");
    return dual_split(a.field, a.dim, tensor2_to_map(r), a.mult, a.mult, a.labels);
}

PreAlternativeAlgebra induced_dual_prealt(const PreAlternativeAlgebra& p, const Tensor2& r, const CheckOptions& opts)
{
    if (!yb_operator_check(p, r, opts).passed) fail("NotSolution", "r is not a symmetric solution of the PA-equations");
    return dual_split(p.field, p.dim, tensor2_to_map(r), p.succ, p.prec, p.labels);
}

SolutionRecord SolutionRecord::aybe(AlternativeAlgebra ambient, Tensor2 r)
{
    if (!aybe_residual(ambient, r).is_zero()) fail("NotSolution", "AYBE residual is nonzero");
    SolutionRecord s;
    s.equation = Equation::AYBE;
    s.symmetry = symmetry_of(r);
    s.alt = std::move(ambient);
    s.r = std::move(r);
    return s;
}

SolutionRecord SolutionRecord::pa(PreAlternativeAlgebra ambient, Tensor2 r)
{
    if (!pa_residuals(ambient, r).all_zero()) fail("NotSolution", "PA residuals are nonzero");
    SolutionRecord s;
    s.equation = Equation::PA;
    s.symmetry = symmetry_of(r);
    s.pre = std::move(ambient);
    s.r = std::move(r);
    return s;
}

AlternativeAlgebra canonical_alt_ambient(const PreAlternativeAlgebra& p, const CheckOptions& opts)
{
    auto act = AltBimoduleAction::make(dual_action(right_family(p.prec)), dual_action(left_family(p.succ)));
    return alt_semidirect(associated_algebra(p), act, dual_labels(p.labels), opts);
}

PreAlternativeAlgebra canonical_prealt_ambient(const PreAlternativeAlgebra& p, const CheckOptions& opts)
{
    auto z = zero_family(p.field, p.dim, p.dim);
    auto act = PreAltBimoduleAction::make(z, dual_action(left_family(p.succ)), dual_action(right_family(p.prec)), z);
    return prealt_semidirect(p, act, dual_labels(p.labels), opts);
}

SolutionRecord canonical_r(const PreAlternativeAlgebra& p, Sign sign, const CheckOptions& opts)
{
    if (!check_prealternative(p, opts).passed) fail("NotPreAlternative", "algebra fails the pre-alternative axioms");
    std::size_t n = p.dim;
    Mat r(p.field, 2 * n, 2 * n);
    Scalar one = Scalar::from_int(p.field, 1);
    for (std::size_t i = 0; i < n; ++i) {
        r(i, n + i) = one;
        r(n + i, i) = sign == Sign::Minus ? -one : one;
    }
    if (sign == Sign::Minus) return SolutionRecord::aybe(canonical_alt_ambient(p, opts), r);
    return SolutionRecord::pa(canonical_prealt_ambient(p, opts), r);
}

Tensor2 skew_operator_tensor(const LinearMap& t)
{
    std::size_t n = t.rows(), m = t.cols();
    Mat r(t.field(), n + m, n + m);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            r(k, n + i) += t(k, i);
            r(n + i, k) -= t(k, i);
        }
    return r;
}

SolutionRecord r_from_operator(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& t,
                               OperatorMode mode, const CheckOptions& opts)
{
    if (!check_al_operator(a, act, t, opts).passed) fail("NotAlOperator", "map fails the Al-operator identity");
    std::size_t m = act.module_dim;
    auto vlabels = dual_labels(default_labels(m, "v"));
    if (mode == OperatorMode::Skew) {
        auto ambient = alt_semidirect(a, alt_dual_bimodule(act), vlabels, opts);
        return SolutionRecord::aybe(ambient, skew_operator_tensor(t));
    }
    auto img = image_prealt(a, act, t, opts);
    std::size_t k = img.pivots.size();
    Family Rp, Ls;
    for (std::size_t s = 0; s < k; ++s) {
        Vec b = img.basis.column(s);
        Rp.push_back(act.left(b).transpose());
        Ls.push_back(act.right(b).transpose());
    }
    auto z = zero_family(a.field, k, m);
    auto ambient = prealt_semidirect(img.algebra, PreAltBimoduleAction::make(z, Rp, Ls, z), vlabels, opts);
    Mat r(a.field, k + m, k + m);
    for (std::size_t i = 0; i < m; ++i) {
        Vec c = img.coords(t.column(i));
        for (std::size_t q = 0; q < k; ++q) {
            r(q, k + i) += c[q];
            r(k + i, q) += c[q];
        }
    }
    return SolutionRecord::pa(ambient, r);
}

static Mat form_of(const Tensor2& r)
{
    if (!invertible(r)) fail("Degenerate", "r is degenerate");
    return map_to_form(tensor2_to_map(r));
}

Correspondence nondegenerate_correspondence(const AlternativeAlgebra& a, const Tensor2& r, const CheckOptions& opts)
{
    require_tensor(a.dim, r);
    if (!is_skew(r)) fail("WrongSymmetry", "expected a skew-symmetric r");
    Correspondence c;
    c.form = form_of(r);
    c.equation_holds = aybe_residual(a, r).is_zero();
    c.form_verdict = check_form(a, c.form, FormKind::Symplectic, opts).passed;
    c.classification = c.form_verdict ? "symplectic" : "not-closed";
    c.agree = c.equation_holds == c.form_verdict;
    return c;
}

Correspondence nondegenerate_correspondence(const PreAlternativeAlgebra& p, const Tensor2& r, const CheckOptions& opts)
{
    require_tensor(p.dim, r);
    if (!is_symmetric(r)) fail("WrongSymmetry", "expected a symmetric r");
    Correspondence c;
    c.form = form_of(r);
    c.equation_holds = pa_residuals(p, r).all_zero();
    c.form_verdict = check_2cocycle(p, c.form, opts).passed;
    c.classification = c.form_verdict ? "2-cocycle" : "not-2-cocycle";
    c.agree = c.equation_holds == c.form_verdict;
    return c;
}

AlternativeAlgebra graph_alt_ambient(const AlternativeAlgebra& a)
{
    return alt_semidirect(a, alt_dual_bimodule(regular_bimodule(a)), dual_labels(a.labels));
}

PreAlternativeAlgebra graph_prealt_ambient(const PreAlternativeAlgebra& p)
{
    return prealt_semidirect(p, prealt_dual_bimodule(regular_prealt_bimodule(p)), dual_labels(p.labels));
}

namespace {

Vec graph_vec(const Mat& t, std::size_t i)
{
    std::size_t n = t.rows();
    Vec g = zero_vec(t.field(), 2 * n);
    for (std::size_t k = 0; k < n; ++k) g[k] = t(k, i);
    g[n + i] = Scalar::from_int(t.field(), 1);
    return g;
}

// x - T c for a product (x, c) in A (+) A*
Vec off_graph(const Mat& t, const Vec& v)
{
    std::size_t n = t.rows();
    Vec x(v.begin(), v.begin() + n), c(v.begin() + n, v.end());
    return x - t * c;
}

void graph_closure(CheckReport& rep, const CheckOptions& opts, const char* id, const Tensor3& prod, const Mat& t)
{
    std::size_t n = t.rows();
    sweep(rep, opts, id, n, [&](std::size_t i, Sink& s) {
        Vec gi = graph_vec(t, i);
        for (std::size_t j = 0; j < n; ++j) s.check({i, j}, off_graph(t, product(prod, gi, graph_vec(t, j))));
    });
}

void graph_isotropy(CheckReport& rep, const CheckOptions& opts, const BilinearForm& b, const Mat& t)
{
    std::size_t n = t.rows();
    sweep(rep, opts, "graph.lagrangian", n, [&](std::size_t i, Sink& s) {
        Vec gi = graph_vec(t, i);
        for (std::size_t j = 0; j < n; ++j) s.check({i, j}, form_eval(b, gi, graph_vec(t, j)));
    });
}

}  // namespace

CheckReport graph_check(const AlternativeAlgebra& a, const LinearMap& t, const CheckOptions& opts)
{
    std::size_t n = a.dim;
    if (t.rows() != n || t.cols() != n) fail("DimensionMismatch", "T must map A* to A");
    auto e = graph_alt_ambient(a);
    CheckReport rep;
    graph_closure(rep, opts, "graph.mult", e.mult, t);
    bool closed = rep.passed;
    // half-dimensional and isotropic for a nondegenerate form means Lagrangian
    graph_isotropy(rep, opts, pairing_form(a.field, n), t);
    bool lagrangian = !rep.failed("graph.lagrangian");
    bool op = check_al_operator(a, alt_dual_bimodule(regular_bimodule(a)), t, opts).passed;
    bool solution = is_skew(t) && aybe_residual(a, map_to_tensor2(t)).is_zero();
    rep.set_flag("operator", op);
    rep.set_flag("operator_agrees", op == closed);
    rep.set_flag("solution", solution);
    rep.set_flag("agrees", solution == (closed && lagrangian));
    return rep;
}

CheckReport graph_check(const PreAlternativeAlgebra& p, const LinearMap& t, const CheckOptions& opts)
{
    std::size_t n = p.dim;
    if (t.rows() != n || t.cols() != n) fail("DimensionMismatch", "T must map A* to A");
    auto e = graph_prealt_ambient(p);
    CheckReport rep;
    graph_closure(rep, opts, "graph.prec", e.prec, t);
    graph_closure(rep, opts, "graph.succ", e.succ, t);
    bool closed = rep.passed;
    graph_isotropy(rep, opts, omega_p(p.field, n), t);
    bool lagrangian = !rep.failed("graph.lagrangian");
    bool solution = is_symmetric(t) && pa_residuals(p, map_to_tensor2(t)).all_zero();
    rep.set_flag("solution", solution);
    rep.set_flag("agrees", solution == (closed && lagrangian));
    return rep;
}

PreAlternativeAlgebra graph_prealt(const AlternativeAlgebra& a, const LinearMap& t, const CheckOptions& opts)
{
    auto p = al_induce(a, alt_dual_bimodule(regular_bimodule(a)), t, {}, opts);
    p.labels = dual_labels(a.labels);
    return p;
}

std::string to_string(SearchTarget t)
{
    switch (t) {
    case SearchTarget::AybeSkew: return "aybe-skew";
    case SearchTarget::PaSym: return "pa-sym";
    default: return "al-operator";
    }
}

namespace {

std::uint64_t space_size(std::uint64_t p, std::size_t k, std::uint64_t cap)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > cap / p) fail("SearchSpaceTooLarge", std::to_string(p) + "^" + std::to_string(k) + " candidates exceed the cap of " + std::to_string(cap));
        total *= p;
    }
    if (total > cap) fail("SearchSpaceTooLarge", "candidate count exceeds the cap");
    return total;
}

// `fill` writes candidate digits into a matrix; `accept` tests it.
SearchResult scan(const Field& f, std::size_t k, const SearchOptions& opts,
                  const std::function<Mat(const std::vector<std::uint64_t>&)>& fill,
                  const std::function<bool(const Mat&)>& accept)
{
    if (f.is_rational()) fail("BadCharacteristic", "exhaustive search needs a prime field");
    std::uint64_t p = f.characteristic();
    std::uint64_t total = space_size(p, k, opts.cap);
    unsigned workers = std::max(1u, opts.workers);
    if (total < workers) workers = 1;
    std::vector<std::vector<Mat>> found(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
            std::vector<std::uint64_t> digits(k);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                std::uint64_t x = idx;
                for (std::size_t d = k; d-- > 0;) {
                    digits[d] = x % p;
                    x /= p;
                }
                Mat m = fill(digits);
                if (accept(m)) found[w].push_back(std::move(m));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    SearchResult res;
    res.candidates = total;
    for (auto& part : found)
        for (auto& m : part) res.hits.push_back(std::move(m));
    return res;
}

Scalar digit(const Field& f, std::uint64_t d) { return Scalar::from_int(f, static_cast<long long>(d)); }

}  // namespace

SearchResult brute_search_aybe(const AlternativeAlgebra& a, const SearchOptions& opts)
{
    std::size_t n = a.dim;
    auto fill = [&](const std::vector<std::uint64_t>& d) {
        Mat r(a.field, n, n);
        std::size_t at = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                r(i, j) = digit(a.field, d[at++]);
                r(j, i) = -r(i, j);
            }
        return r;
    };
    return scan(a.field, n * (n - 1) / 2, opts, fill, [&](const Mat& r) { return aybe_residual(a, r).is_zero(); });
}

SearchResult brute_search_pa(const PreAlternativeAlgebra& p, const SearchOptions& opts)
{
    std::size_t n = p.dim;
    auto fill = [&](const std::vector<std::uint64_t>& d) {
        Mat r(p.field, n, n);
        std::size_t at = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                r(i, j) = digit(p.field, d[at++]);
                r(j, i) = r(i, j);
            }
        return r;
    };
    return scan(p.field, n * (n + 1) / 2, opts, fill, [&](const Mat& r) { return pa_residuals(p, r).all_zero(); });
}

SearchResult brute_search_al(const AlternativeAlgebra& a, const AltBimoduleAction& act, const SearchOptions& opts)
{
    std::size_t n = a.dim, m = act.module_dim;
    if (act.algebra_dim != n) fail("DimensionMismatch", "action is indexed by a basis of another size");
    auto fill = [&](const std::vector<std::uint64_t>& d) {
        Mat t(a.field, n, m);
        std::size_t at = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) t(i, j) = digit(a.field, d[at++]);
        return t;
    };
    return scan(a.field, n * m, opts, fill,
                [&](const Mat& t) { return check_al_operator(a, act, t, {0, 1}).passed; });
}

}  // namespace prealt
