#include "support/fixtures.hpp"

#include <algorithm>

using namespace fx;

namespace {

bool al_operator_naive(const AlternativeAlgebra& a, const AltBimoduleAction& act, const Mat& t)
{
    for (std::size_t u = 0; u < act.module_dim; ++u)
        for (std::size_t v = 0; v < act.module_dim; ++v) {
            Vec tu = t.column(u), tv = t.column(v);
            Vec lhs = oracle::prod(a.mult, tu, tv);
            Vec inner = act.left(tu).column(v) + act.right(tv).column(u);
            if (lhs != t * inner) return false;
        }
    return true;
}

Tensor3 pure(const Field& f, std::size_t n, std::size_t i, std::size_t j, std::size_t k, long long v)
{
    return pure3(f, n, i, j, k, Scalar::from_int(f, v));
}

}  // namespace

TEST_CASE("symmetry classification")
{
    CHECK(symmetry_of(r_sym()) == Symmetry::Symmetric);
    CHECK(symmetry_of(r_skew()) == Symmetry::Skew);
    CHECK(symmetry_of(t2(Q, 2, {{0, 1, 1}})) == Symmetry::Neither);
    CHECK(to_string(Symmetry::Skew) == "skew");
}

TEST_CASE("AYBE residuals")
{
    auto a = n2();
    CHECK(aybe_residual(a, Tensor2(Q, 2, 2)).is_zero());
    // e1 (x) e2 (x) e1 - e2 (x) e1 (x) e1 - e1 (x) e1 (x) e2
    Tensor3 expect = pure(Q, 2, 0, 1, 0, 1) - pure(Q, 2, 1, 0, 0, 1) - pure(Q, 2, 0, 0, 1, 1);
    Tensor2 r = t2(Q, 2, {{0, 0, 1}});
    CHECK(aybe_residual(a, r) == expect);
    CHECK(oracle::aybe(a.mult, r) == expect);

    auto c = canonical_r(p2(), Sign::Minus);
    CHECK(aybe_residual(*c.alt, c.r).is_zero());
}

TEST_CASE("AYBE residual against the hand expansion")
{
    gen::Rng rng(51);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(3);
        auto a = AlternativeAlgebra::make(rng.cube(F3, n, 0.4));
        Tensor2 r = rng.mat(F3, n, n);
        CHECK(aybe_residual(a, r) == oracle::aybe(a.mult, r));
    }
}

TEST_CASE("PA residuals")
{
    auto p = p2();
    CHECK(pa_residuals(p, Tensor2(Q, 2, 2)).all_zero());
    auto res = pa_residuals(p, r_sym());
    CHECK(res.all_zero());
    // each term carries (1 - 1/2 - 1/2) e2 (x) e2 (x) e2; the pieces are nonzero
    CHECK_FALSE(pair_product(r_sym(), {1, 2}, r_sym(), {1, 3}, p.sum()).is_zero());

    auto c = canonical_r(p, Sign::Plus);
    CHECK(pa_residuals(*c.pre, c.r).all_zero());
    CHECK(PaResiduals::term_names[0] == "PA_1^1");
}

TEST_CASE("PA residuals against the hand expansion")
{
    gen::Rng rng(52);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(3);
        auto p = gen::raw_pair(rng, F3, n);
        Tensor2 r = rng.mat(F3, n, n);
        auto lib = pa_residuals(p, r);
        auto naive = oracle::pa(p.prec, p.succ, r);
        for (int k = 0; k < 6; ++k) CHECK(lib.terms[k] == naive[k]);
        CHECK(lib.sums[0] == naive[0] + naive[1]);
    }
}

TEST_CASE("tensor and operator forms of the equations agree")
{
    CHECK(yb_operator_check(n2(), Tensor2(Q, 2, 2)).passed);
    auto c = canonical_r(p2(), Sign::Minus);
    auto rep = yb_operator_check(*c.alt, c.r);
    CHECK(rep.passed);
    CHECK(rep.flag("tensor_zero"));
    CHECK(rep.flag("routes_agree"));

    gen::Rng rng(53);
    int agree = 0;
    for (int t = 0; t < 100; ++t) {
        auto a = gen::alternative(rng, F5, 2);
        Tensor2 r = rng.skew(F5, 2);
        auto op = yb_operator_check(a, r);
        agree += op.passed == aybe_residual(a, r).is_zero();
    }
    CHECK(agree == 100);

    CHECK_THROWS_AS(yb_operator_check(n2(), r_sym()), Error);
    CHECK_THROWS_AS(yb_operator_check(p2(), r_skew()), Error);
    CHECK(yb_operator_check(p2(), r_sym()).passed);
}

TEST_CASE("induced structures on the dual")
{
    auto z = induced_dual_prealt(p2(), Tensor2(Q, 2, 2));
    CHECK(z.prec.is_zero());
    CHECK(z.succ.is_zero());

    auto d = induced_dual_prealt(p2(), r_sym());
    CHECK(d.prec == pure3(Q, 2, 1, 1, 0, q(1, 2)));
    CHECK(d.succ == pure3(Q, 2, 1, 1, 0, q(1, 2)));

    auto c = canonical_r(p2(), Sign::Minus);
    auto dm = induced_dual_prealt(*c.alt, c.r);
    CHECK(check_prealternative(dm).passed);

    CHECK_THROWS_AS(induced_dual_prealt(n2(), t2(Q, 2, {{0, 0, 1}, {1, 1, -1}})), Error);
}

TEST_CASE("canonical solutions")
{
    auto p = p2();
    auto m = canonical_r(p, Sign::Minus);
    CHECK(m.dim() == 4);
    CHECK(m.symmetry == Symmetry::Skew);
    CHECK(m.alt->labels[2] == "e1^*");
    auto pl = canonical_r(p, Sign::Plus);
    CHECK(pl.dim() == 4);
    CHECK(pl.symmetry == Symmetry::Symmetric);

    for (auto sign : {Sign::Minus, Sign::Plus}) {
        auto z = canonical_r(PreAlternativeAlgebra::zero(Q, 2), sign);
        CHECK(z.dim() == 4);
    }
    auto p3 = catalog_entry("p3-graded").prealternative();
    CHECK(aybe_residual(*canonical_r(p3, Sign::Minus).alt, canonical_r(p3, Sign::Minus).r).is_zero());
    CHECK(pa_residuals(*canonical_r(p3, Sign::Plus).pre, canonical_r(p3, Sign::Plus).r).all_zero());

    CHECK_THROWS_AS(SolutionRecord::aybe(n2(), t2(Q, 2, {{0, 0, 1}})), Error);
}

TEST_CASE("solutions from operators")
{
    auto a = n2();
    auto reg = regular_bimodule(a);
    auto z = r_from_operator(a, reg, Mat(Q, 2, 2), OperatorMode::Skew);
    CHECK(z.r.is_zero());
    CHECK(z.dim() == 4);

    Mat t = diag(Q, {q(1), q(1, 2)});
    auto sk = r_from_operator(a, reg, t, OperatorMode::Skew);
    CHECK(sk.dim() == 4);
    CHECK(is_skew(sk.r));
    CHECK(aybe_residual(*sk.alt, sk.r).is_zero());

    auto sy = r_from_operator(a, reg, t, OperatorMode::Sym);
    CHECK(sy.dim() == 4);
    CHECK(is_symmetric(sy.r));
    CHECK(pa_residuals(*sy.pre, sy.r).all_zero());

    CHECK_THROWS_AS(r_from_operator(a, reg, Mat::identity(Q, 2), OperatorMode::Skew), Error);
}

TEST_CASE("T - tau T solves the equation exactly when T is an Al-operator")
{
    auto a = catalog_entry("n2mod3").alternative();
    auto reg = regular_bimodule(a);
    auto amb = alt_semidirect(a, alt_dual_bimodule(reg));
    gen::Rng rng(54);
    int agree = 0;
    for (int t = 0; t < 81; ++t) {
        Mat m = rng.mat(F3, 2, 2);
        agree += al_operator_naive(a, reg, m) == aybe_residual(amb, skew_operator_tensor(m)).is_zero();
    }
    CHECK(agree == 81);
}

TEST_CASE("nondegenerate correspondence")
{
    auto m = canonical_r(p2(), Sign::Minus);
    auto cm = nondegenerate_correspondence(*m.alt, m.r);
    CHECK(cm.form == omega_p(Q, 2));
    CHECK(cm.classification == "symplectic");
    CHECK(cm.agree);

    auto pl = canonical_r(p2(), Sign::Plus);
    auto cp = nondegenerate_correspondence(*pl.pre, pl.r);
    CHECK(cp.form == pairing_form(Q, 2));
    CHECK(cp.classification == "2-cocycle");
    CHECK(cp.agree);

    gen::Rng rng(55);
    int failing = 0, agree = 0, total = 0;
    for (int t = 0; t < 200 && failing < 20; ++t) {
        auto a = gen::alternative(rng, F5, 2);
        Tensor2 r = rng.skew(F5, 2);
        if (!invertible(r)) continue;
        auto c = nondegenerate_correspondence(a, r);
        ++total;
        agree += c.agree;
        failing += !c.equation_holds;
    }
    CHECK(agree == total);
    CHECK(failing > 0);

    CHECK_THROWS_AS(nondegenerate_correspondence(n2(), Tensor2(Q, 2, 2)), Error);
}

TEST_CASE("graphs of operators")
{
    auto a = n2();
    auto z = graph_check(a, Mat(Q, 2, 2));
    CHECK(z.passed);
    CHECK(z.flag("solution"));
    CHECK(z.flag("agrees"));

    auto m = canonical_r(p2(), Sign::Minus);
    Mat t = tensor2_to_map(m.r);
    auto g = graph_check(*m.alt, t);
    CHECK(g.passed);
    CHECK(g.flag("agrees"));
    CHECK(check_prealternative(graph_prealt(*m.alt, t)).passed);

    gen::Rng rng(56);
    auto a3 = catalog_entry("n2mod3").alternative();
    int agree = 0;
    for (int i = 0; i < 60; ++i) {
        auto rep = graph_check(a3, rng.mat(F3, 2, 2));
        agree += rep.flag("operator_agrees") && rep.flag("agrees");
    }
    CHECK(agree == 60);

    auto pz = graph_check(p2(), Mat(Q, 2, 2));
    CHECK(pz.passed);
    auto ps = graph_check(p2(), tensor2_to_map(r_sym()));
    CHECK(ps.flag("agrees"));
}

TEST_CASE("pre-alternative graph verdicts agree over GF(3)")
{
    gen::Rng rng(57);
    int agree = 0;
    const int samples = 80;
    for (int i = 0; i < samples; ++i) {
        auto p = gen::prealt(rng, F3, 2);
        agree += graph_check(p, rng.symmetric(F3, 2)).flag("agrees");
    }
    CHECK(agree == samples);
}

TEST_CASE("exhaustive searches")
{
    auto a = catalog_entry("n2mod3").alternative();
    auto reg = regular_bimodule(a);
    auto res = brute_search_al(a, reg);
    CHECK(res.candidates == 81);
    std::vector<Mat> naive;
    for (auto& m : oracle::all_vectors(F3, 4)) {
        Mat t(F3, 2, 2);
        // row-major, first coefficient most significant
        t(0, 0) = m[3]; t(0, 1) = m[2]; t(1, 0) = m[1]; t(1, 1) = m[0];
        if (al_operator_naive(a, reg, t)) naive.push_back(t);
    }
    CHECK(res.hits.size() == naive.size());
    for (const auto& h : res.hits) CHECK(std::find(naive.begin(), naive.end(), h) != naive.end());
    CHECK(std::find(res.hits.begin(), res.hits.end(), diag(F3, {s(F3, 1), s(F3, 2)})) != res.hits.end());

    auto z = AlternativeAlgebra::zero(F3, 2);
    auto za = brute_search_aybe(z);
    CHECK(za.candidates == 3);
    CHECK(za.hits.size() == 3);
    auto zp = brute_search_pa(PreAlternativeAlgebra::zero(F3, 2));
    CHECK(zp.candidates == 27);
    CHECK(zp.hits.size() == 27);

    auto p = catalog_entry("p2mod3").prealternative();
    auto sp = brute_search_pa(p);
    CHECK(std::find(sp.hits.begin(), sp.hits.end(), r_sym(F3)) != sp.hits.end());
    CHECK(std::find(sp.hits.begin(), sp.hits.end(), s(F3, 2) * r_sym(F3)) != sp.hits.end());
    for (const auto& h : sp.hits) {
        auto naive_pa = oracle::pa(p.prec, p.succ, h);
        for (const auto& t : naive_pa) CHECK(t.is_zero());
    }

    try {
        brute_search_al(a, reg, SearchOptions{10, 1});
        FAIL("expected SearchSpaceTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == "SearchSpaceTooLarge");
    }
    CHECK_THROWS_AS(brute_search_aybe(n2()), Error);
}

TEST_CASE("search output does not depend on the worker count")
{
    auto a = catalog_entry("n2mod3").alternative();
    auto r1 = brute_search_al(a, regular_bimodule(a), SearchOptions{10'000, 1});
    auto r4 = brute_search_al(a, regular_bimodule(a), SearchOptions{10'000, 4});
    CHECK(r1.hits == r4.hits);
}
