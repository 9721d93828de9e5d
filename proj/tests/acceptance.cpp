// Acceptance run: one line per criterion, exit status 1 if any of them fails.

#include "support/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace prealt;

namespace {

const Field Q = Field::rationals();
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

Scalar q(long long a, long long b = 1) { return Scalar::from_ratio(Q, a, b); }

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what)
    {
        if (ok) return;
        if (pass) note << "first failure: " << what << "; ";
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Tensor2 r_sym()
{
    Tensor2 r(Q, 2, 2);
    r(0, 1) = q(1);
    r(1, 0) = q(1);
    return r;
}

Mat inclusion(const Field& f, std::size_t n, std::size_t offset)
{
    Mat m(f, 2 * n, n);
    for (std::size_t i = 0; i < n; ++i) m(offset + i, i) = Scalar::from_int(f, 1);
    return m;
}

bool all_zero(const std::array<Tensor3, 6>& t)
{
    for (const auto& x : t)
        if (!x.is_zero()) return false;
    return true;
}

// ---- 1 ----------------------------------------------------------------------

void octonion_gate(Outcome& out)
{
    auto t0 = Clock::now();
    auto o = catalog_entry("octonion").alternative();
    auto alt = check_alternative(o);
    auto as = check_associative(o);
    double ms = ms_since(t0);
    out.require(o.dim == 8, "octonion dimension");
    out.require(alt.passed, "alternative suite");
    out.require(!as.passed && as.violation_count > 0, "associativity probe should fail");
    out.require(ms < 1000, "runtime");
    out.note << "associator witnesses " << as.violation_count << ", " << static_cast<long>(ms) << " ms";
}

// ---- 2 ----------------------------------------------------------------------

void associated_chain(Outcome& out)
{
    std::vector<std::pair<std::string, PreAlternativeAlgebra>> all;
    auto n2 = catalog_entry("n2").alternative();
    auto p2 = catalog_entry("p2").prealternative();
    auto p3 = catalog_entry("p3-graded").prealternative();
    all.emplace_back("p2", p2);
    all.emplace_back("p3-graded", p3);

    all.emplace_back("graded n2", graded_split(n2, Grading{{1, 2}}));
    {
        Tensor3 c(Q, 3);
        c(0, 0, 1) = q(1);
        c(0, 1, 2) = q(1);
        c(1, 0, 2) = q(1);
        all.emplace_back("graded 3-dim", graded_split(AlternativeAlgebra::make(c), Grading{{1, 2, 3}}));
    }
    all.emplace_back("graded n2 mod 5", graded_split(catalog_entry("n2mod5").alternative(), Grading{{1, 2}}));
    all.emplace_back("graded zero", graded_split(AlternativeAlgebra::zero(Q, 3), Grading{{1, 5, 2}}));

    all.emplace_back("symplectic p2", symplectic_split(canonical_alt_ambient(p2), omega_p(Q, 2)));
    all.emplace_back("symplectic p3", symplectic_split(canonical_alt_ambient(p3), omega_p(Q, 3)));

    Mat half(Q, 2, 2);
    half(0, 0) = q(1);
    half(1, 1) = q(1, 2);
    auto reg = regular_bimodule(n2);
    all.emplace_back("al-induce n2", al_induce(n2, reg, half));
    all.emplace_back("compatible n2", compatible_from_al(n2, reg, half));

    auto n23 = catalog_entry("n2mod3").alternative();
    auto reg3 = regular_bimodule(n23);
    std::size_t hit_no = 0;
    for (const auto& t : brute_search_al(n23, reg3).hits) {
        std::string tag = "hit " + std::to_string(hit_no++);
        all.emplace_back("al-induce " + tag, al_induce(n23, reg3, t));
        if (invertible(t)) all.emplace_back("compatible " + tag, compatible_from_al(n23, reg3, t));
    }

    for (const auto& [name, p] : all) {
        auto as = associated_algebra(p);
        auto act = AltBimoduleAction::make(left_family(p.succ), right_family(p.prec));
        out.require(check_alternative(as).passed, name + " associated algebra");
        out.require(check_alt_bimodule(as, act).passed, name + " (l>, r<) bimodule");
        out.require(oracle::alternative_linear(as.mult), name + " associated algebra (oracle)");
        out.require(oracle::alternative_linear(oracle::semidirect(as.mult, act.L, act.R)), name + " semidirect (oracle)");
    }
    out.note << all.size() << " structures";
}

// ---- 3 ----------------------------------------------------------------------

void canonical_solutions(Outcome& out)
{
    double worst = 0;
    for (const std::string name : {"p2", "p3-graded"}) {
        auto p = catalog_entry(name).prealternative();
        std::size_t n = p.dim;

        auto t0 = Clock::now();
        auto minus = canonical_r(p, Sign::Minus);
        out.require(minus.alt && minus.alt->dim == 2 * n, name + " minus ambient");
        out.require(aybe_residual(*minus.alt, minus.r).is_zero(), name + " AYBE residual");
        out.require(oracle::aybe(minus.alt->mult, minus.r).is_zero(), name + " AYBE residual (oracle)");
        out.require(check_form(*minus.alt, omega_p(Q, n), FormKind::Symplectic).passed, name + " omega symplectic");
        worst = std::max(worst, ms_since(t0));

        t0 = Clock::now();
        auto plus = canonical_r(p, Sign::Plus);
        out.require(plus.pre && plus.pre->dim == 2 * n, name + " plus ambient");
        out.require(pa_residuals(*plus.pre, plus.r).all_zero(), name + " PA residuals");
        out.require(all_zero(oracle::pa(plus.pre->prec, plus.pre->succ, plus.r)), name + " PA residuals (oracle)");
        out.require(check_2cocycle(*plus.pre, pairing_form(Q, n)).passed, name + " pairing 2-cocycle");
        worst = std::max(worst, ms_since(t0));
    }
    out.require(worst < 5000, "runtime");
    out.note << "slowest " << static_cast<long>(worst) << " ms";
}

// ---- 4 ----------------------------------------------------------------------

constexpr int kBattery = 200;

struct Tally {
    int samples = 0, agree = 0, positive = 0;
};

void battery(Outcome& out, const std::string& tag, const Tally& t)
{
    out.require(t.samples >= kBattery, tag + " sample count");
    out.require(t.agree == t.samples, tag + " disagreement");
    out.note << tag << " " << t.agree << "/" << t.samples << " (" << t.positive << " pass) ";
}

Tally battery_a(gen::Rng& rng, const Field& f)
{
    Tally t;
    for (; t.samples < kBattery; ++t.samples) {
        std::size_t n = 1 + rng.below(3);
        Tensor3 c = t.samples % 2 ? gen::alternative(rng, f, n).mult : rng.cube(f, n, gen::density(n));
        auto rep = check_alternative(AlternativeAlgebra::make(c));
        bool lib1 = rep.count("alt.left") + rep.count("alt.right") == 0;
        bool lib2 = rep.count("alt.left.lin") + rep.count("alt.right.lin") == 0;
        bool or1 = oracle::alternative_exhaustive(c), or2 = oracle::alternative_linear(c);
        t.agree += lib1 == lib2 && lib2 == or1 && or1 == or2 && or2 == rep.passed;
        t.positive += rep.passed;
    }
    return t;
}

Tally battery_b(gen::Rng& rng, const Field& f)
{
    Tally t;
    for (; t.samples < kBattery; ++t.samples) {
        std::size_t n = 1 + rng.below(3);
        auto a = gen::alternative(rng, f, n);
        Tensor2 r = rng.skew(f, n);
        auto rep = yb_operator_check(a, r);
        bool tensor = oracle::aybe(a.mult, r).is_zero();
        t.agree += rep.flag("routes_agree") && rep.passed == tensor;
        t.positive += tensor;
    }
    return t;
}

Tally battery_c(gen::Rng& rng, const Field& f)
{
    Tally t;
    for (; t.samples < kBattery; ++t.samples) {
        std::size_t n = 1 + rng.below(3);
        auto p = gen::prealt(rng, f, n);
        Tensor2 r = rng.symmetric(f, n);
        auto six = oracle::pa(p.prec, p.succ, r);
        auto lib = pa_residuals(p, r);
        bool ok = true;
        for (std::size_t i = 0; i < 6; ++i) {
            ok = ok && six[i].is_zero() == six[0].is_zero();
            ok = ok && lib.terms[i] == six[i];
        }
        auto rep = yb_operator_check(p, r);
        ok = ok && rep.flag("pa_coincide") && rep.flag("routes_agree") && rep.passed == six[0].is_zero();
        t.agree += ok;
        t.positive += six[0].is_zero();
    }
    return t;
}

Tally battery_d(gen::Rng& rng, const Field& f)
{
    Tally t;
    for (; t.samples < kBattery; ++t.samples) {
        std::size_t n = 1 + rng.below(3);
        auto a = gen::alternative(rng, f, n);
        Tensor2 r = rng.skew(f, n);
        Tensor3 a1 = aybe_residual(a, r, AybeVariant::A1), a2 = aybe_residual(a, r, AybeVariant::A2);
        bool ok = a1 == oracle::aybe(a.mult, r) && a2 == oracle::aybe2(a.mult, r) && a1.is_zero() == a2.is_zero();
        t.agree += ok;
        t.positive += a1.is_zero();
    }
    return t;
}

Tally battery_e(gen::Rng& rng, const Field& f)
{
    Tally t;
    for (; t.samples < kBattery; ++t.samples) {
        std::size_t n = 1 + rng.below(2);
        auto a = gen::alternative(rng, f, n);
        AltBimoduleAction act;
        switch (t.samples % 4) {
        case 0: act = regular_bimodule(a); break;
        case 1: act = alt_dual_bimodule(regular_bimodule(a)); break;
        default: {
            std::size_t m = 1 + rng.below(2);
            act = AltBimoduleAction::make(rng.family(f, n, m, 0.3), rng.family(f, n, m, 0.3));
        }
        }
        bool lib = check_alt_bimodule(a, act).passed;
        t.agree += lib == oracle::alternative_exhaustive(oracle::semidirect(a.mult, act.L, act.R));
        t.positive += lib;
    }
    return t;
}

Tally battery_f(gen::Rng& rng, const Field& f)
{
    Tally t;
    for (int attempt = 0; attempt < 20000 && t.samples < kBattery; ++attempt) {
        std::size_t n = 1 + rng.below(3);
        auto p = gen::prealt(rng, f, n);
        ComultiplicationPair c;
        if (attempt % 2 == 0)
            c = coboundary_comult(p, rng.symmetric(f, n));
        else
            c = {rng.cube(f, n, 0.2), rng.cube(f, n, 0.2)};
        if (!coalgebra_check(c).passed) continue;
        AltMatchedPairResult res;
        try {
            res = matched_pair_alt(bialgebra_alt_matched_pair(p, c));
        } catch (const Error& e) {
            if (e.code() == "BadBimodule") continue;
            throw;
        }
        ++t.samples;
        bool assembled = oracle::alternative_linear(res.assembled.mult);
        t.agree += res.report.passed == assembled && res.report.flag("agree");
        t.positive += res.report.passed;
    }
    return t;
}

void batteries(Outcome& out)
{
    gen::Rng rng(2024);
    const std::vector<std::pair<std::string, std::function<Tally(gen::Rng&, const Field&)>>> all = {
        {"a", battery_a}, {"b", battery_b}, {"c", battery_c}, {"d", battery_d}, {"e", battery_e}, {"f", battery_f}};
    for (const auto& [name, run] : all)
        for (const Field* f : {&F3, &F5}) battery(out, name + "/" + std::to_string(f->characteristic()), run(rng, *f));
}

// ---- 5 ----------------------------------------------------------------------

void coboundary_differential(Outcome& out)
{
    gen::Rng rng(7303);
    int samples = 0, zero_res = 0, equiv = 0, bialg = 0;
    for (; samples < 240; ++samples) {
        std::size_t n = 1 + rng.below(3);
        auto p = gen::prealt(rng, F3, n);
        Tensor2 r = rng.symmetric(F3, n);
        auto c = coboundary_comult(p, r);
        auto [al, be] = oracle::coboundary(p.prec, p.succ, r);
        bool same = c.alpha == al && c.beta == be;
        zero_res += same && bialgebra_equations(p, c).passed;
        bool full = false;
        try {
            full = bialgebra_check(p, c).passed;
        } catch (const Error& e) {
            if (e.code() != "NotCoalgebra") throw;
        }
        equiv += full == coboundary_condition_check(p, r).passed;
        bialg += full;
    }
    out.require(zero_res == samples, "bialgebra equations on coboundary pairs");
    out.require(equiv == samples, "bialgebra iff coboundary conditions");
    out.note << samples << " samples, " << bialg << " bialgebras";
}

// ---- 6 ----------------------------------------------------------------------

void pad_double_check(Outcome& out)
{
    auto t0 = Clock::now();
    auto p = catalog_entry("p2").prealternative();
    auto zero = PreAltBialgebra::make(p, ComultiplicationPair::zero(Q, 2));
    auto cob = PreAltBialgebra::make(p, coboundary_comult(p, r_sym()));
    for (const auto* b : {&zero, &cob}) {
        std::string tag = b == &zero ? "zero" : "coboundary";
        auto d = pad_double(*b);
        out.require(bialgebra_check(d.algebra, d.comult).passed, tag + " double is a bialgebra");
        out.require(hom_check_bialgebra(inclusion(Q, 2, 0), b->algebra, b->comult, d.algebra, d.comult).passed,
                    tag + " first inclusion");
        auto dual = dual_bialgebra(*b);
        out.require(hom_check_bialgebra(inclusion(Q, 2, 2), dual.algebra, dual.comult, d.algebra, d.comult).passed,
                    tag + " second inclusion");
        if (b == &cob) out.require(pad_closed_form_check(p, r_sym(), d.algebra).passed, "closed form products");
    }
    auto dual = dual_bialgebra(cob);
    out.require(hom_check_bialgebra(tensor2_to_map(r_sym()), dual.algebra, dual.comult, cob.algebra, cob.comult).passed,
                "T_r homomorphism");
    double ms = ms_since(t0);
    out.require(ms < 5000, "runtime");
    out.note << static_cast<long>(ms) << " ms";
}

// ---- 7 ----------------------------------------------------------------------

void skew_solution_doubles(Outcome& out)
{
    std::vector<AlternativeAlgebra> algebras = {catalog_entry("n2mod3").alternative(),
                                                catalog_entry("zero-2mod3").alternative()};
    gen::Rng rng(1010);
    for (int i = 0; i < 10; ++i) algebras.push_back(gen::alternative(rng, F3, 2));

    int hits = 0, misses = 0, paired = 0;
    for (const auto& a : algebras) {
        auto found = brute_search_aybe(a).hits;
        hits += static_cast<int>(found.size());
        for (const auto& r : found) {
            Tensor3 delta = coboundary_delta(a, r);
            auto co = coalgebra_check_alt(delta);
            auto db = alt_dbialgebra_check(a, delta);
            auto dbl = drinfeld_double(a, delta);
            out.require(co.passed, "co-identities on a hit");
            out.require(coboundary_condition_check(a, r).passed, "coboundary conditions on a hit");
            out.require(db.passed, "compatibility identities on a hit");
            out.require(check_alternative(dbl).passed && oracle::alternative_linear(dbl.mult), "double on a hit");
        }
        // every skew tensor over GF(3) in dim 2 is c (e1 (x) e2 - e2 (x) e1)
        for (long long v = 0; v < 3; ++v) {
            Tensor2 r(F3, 2, 2);
            r(0, 1) = Scalar::from_int(F3, v);
            r(1, 0) = Scalar::from_int(F3, -v);
            if (aybe_residual(a, r).is_zero()) continue;
            ++misses;
            Tensor3 delta = coboundary_delta(a, r);
            auto db = alt_dbialgebra_check(a, delta);
            bool dbl = oracle::alternative_linear(drinfeld_double(a, delta).mult);
            paired += db.flag("routes_agree") && db.passed == dbl;
        }
        for (int k = 0; k < 10; ++k) {
            Tensor3 delta = rng.cube(F3, 2, 0.2);
            auto db = alt_dbialgebra_check(a, delta);
            bool dbl = oracle::alternative_linear(drinfeld_double(a, delta).mult);
            ++misses;
            paired += db.flag("routes_agree") && db.passed == dbl;
        }
    }
    out.require(hits > 0, "no hits");
    out.require(paired == misses, "paired verdicts off the solution set");
    out.note << hits << " hits, " << misses << " non-hits paired";
}

// ---- 8 ----------------------------------------------------------------------

void pairing_oracle(Outcome& out)
{
    gen::Rng rng(88);
    int tensors = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (int t = 0; t < 50; ++t, ++tensors) {
            Tensor3 P = rng.cube(F3, n, 0.5), S = rng.cube(F3, n, 0.5);
            Tensor3 C = oracle::sum(P, S);
            Tensor2 r = rng.mat(F3, n, n), w = rng.mat(F3, n, n);
            for (auto pat : oracle::all_patterns())
                out.require(pair_product(r, oracle::slots_r(pat), w, oracle::slots_s(pat), C) == oracle::pair(pat, r, w, C),
                            "pair product pattern");
            // each of the 18 PA terms on its own
            for (const auto& row : pa_term_table())
                for (const auto& term : row) {
                    const Tensor3& prod = term.prod == ProductKind::Circ ? C : term.prod == ProductKind::Prec ? P : S;
                    bool matched = false;
                    for (auto pat : oracle::all_patterns()) {
                        auto sr = oracle::slots_r(pat), ss = oracle::slots_s(pat);
                        if (sr.first != term.r.first || sr.second != term.r.second || ss.first != term.s.first ||
                            ss.second != term.s.second)
                            continue;
                        matched = true;
                        out.require(pair_product(r, term.r, r, term.s, prod) == oracle::pair(pat, r, r, prod), "PA term");
                    }
                    out.require(matched, "PA term has a known pattern");
                }
            auto lib = pa_residuals(PreAlternativeAlgebra::make(P, S), r);
            auto ref = oracle::pa(P, S, r);
            for (std::size_t i = 0; i < 6; ++i) out.require(lib.terms[i] == ref[i], "PA residual");
        }
    out.note << tensors << " tensors, 6 patterns + 18 terms each";
}

// ---- 9 ----------------------------------------------------------------------

std::vector<CommandResult> all_reports(unsigned workers)
{
    RunOptions o;
    o.workers = workers;
    std::vector<CommandResult> out;
    auto entry = [](const std::string& n) { return catalog_entry(n); };
    out.push_back(cmd_check_file(entry("octonion"), "check octonion", "alternative", "", o));
    out.push_back(cmd_check_file(entry("octonion"), "check octonion", "associative", "", o));
    out.push_back(cmd_check_file(entry("p2"), "check p2", "prealt", "", o));
    out.push_back(cmd_check_file(entry("p3-graded"), "check p3", "prealt", "", o));
    out.push_back(cmd_check_file(entry("halved-idempotent"), "check halved", "prealt", "", o));
    out.push_back(cmd_check_file(entry("n2"), "check n2", "associative", "", o));
    for (const std::string s : {"minus", "plus"}) {
        ConstructArgs a;
        a.op = "canonical-r";
        a.sign = s;
        out.push_back(cmd_construct_file(entry("p3-graded"), a, o));
    }
    ConstructArgs pad;
    pad.op = "pad-double";
    out.push_back(cmd_construct_file(entry("p2"), pad, o));

    auto n2 = entry("n2");
    Mat r(Q, 2, 2);
    r(0, 0) = q(1);
    n2.r = r;
    out.push_back(cmd_residual_file(n2, "residual n2", "aybe", o));
    auto p2 = entry("p2");
    p2.r = r_sym();
    out.push_back(cmd_residual_file(p2, "residual p2", "pa", o));

    SearchArgs s;
    s.p = 3;
    s.dim = 2;
    for (const std::string target : {"aybe-skew", "al-operator"}) {
        s.target = target;
        s.algebra = "n2";
        out.push_back(cmd_search(s, o));
    }
    s.target = "pa-sym";
    s.algebra = "p2";
    out.push_back(cmd_search(s, o));
    s.dim = 3;
    s.algebra = "";
    s.target = "aybe-skew";
    out.push_back(cmd_search(s, o));
    return out;
}

void determinism(Outcome& out)
{
    auto a = all_reports(1), b = all_reports(1), c = all_reports(4);
    std::size_t same = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool ok = a[i].output == b[i].output && a[i].output == c[i].output && a[i].exit == b[i].exit &&
                  a[i].exit == c[i].exit && a[i].exit != 2 && !a[i].output.empty();
        out.require(ok, "report " + std::to_string(i));
        same += ok;
    }
    out.note << same << "/" << a.size() << " reports identical";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"octonion gate", octonion_gate},
        {"associated algebra chain", associated_chain},
        {"canonical solutions", canonical_solutions},
        {"equivalence batteries", batteries},
        {"coboundary differential test", coboundary_differential},
        {"PAD double", pad_double_check},
        {"doubles of skew solutions in dimension 2", skew_solution_doubles},
        {"tensor convention oracle", pairing_oracle},
        {"determinism", determinism},
    };
    int failed = 0, idx = 0;
    for (const auto& [name, run] : criteria) {
        Outcome out;
        auto t0 = Clock::now();
        try {
            run(out);
        } catch (const std::exception& e) {
            out.pass = false;
            out.note << "exception: " << e.what();
        }
        failed += !out.pass;
        std::printf("%s %d %s (%.0f ms): %s\n", out.pass ? "PASS" : "FAIL", ++idx, name.c_str(), ms_since(t0),
                    out.note.str().c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
