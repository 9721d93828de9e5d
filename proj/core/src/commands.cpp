#include "prealt/commands.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <set>

namespace prealt {

using json = nlohmann::ordered_json;

namespace {

json scalar_json(const Scalar& s)
{
    if (s.field().is_rational()) return s.to_string();
    return s.residue();
}

json residual_json(const Residual& r)
{
    json entries = json::array();
    for (const auto& [idx, v] : r.entries) {
        json e = idx;
        e.push_back(scalar_json(v));
        entries.push_back(e);
    }
    return json{{"shape", r.shape}, {"entries", entries}};
}

json sparse_cube(const Tensor3& t)
{
    json out = json::array();
    for (auto& [i, j, k, v] : t.nonzeros()) out.push_back(json::array({i, j, k, scalar_json(v)}));
    return out;
}

json sparse_mat(const Mat& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out.push_back(json::array({i, j, scalar_json(m(i, j))}));
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool usage_error(const std::string& code)
{
    static const std::set<std::string> codes = {"ParseError",  "DimensionMismatch",   "MissingSection",
                                                "UnknownName", "BadCharacteristic",   "SearchSpaceTooLarge",
                                                "IOError",     "Usage"};
    return codes.count(code) > 0;
}

CommandResult error_result(const std::string& command, const Error& e)
{
    json j;
    j["command"] = command;
    j["verdict"] = "error";
    j["error"] = json{{"code", e.code()}, {"message", e.what()}};
    return {dump(j), usage_error(e.code()) ? 2 : 1};
}

template <class F>
CommandResult guarded(const std::string& command, F&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return error_result(command, e);
    }
}

[[noreturn]] void usage(const std::string& what) { fail("Usage", what); }

template <class F>
std::pair<CheckReport, double> timed(F&& f)
{
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = f();
    auto t1 = std::chrono::steady_clock::now();
    return {std::move(rep), std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

FormKind form_kind(const std::string& kind)
{
    if (kind.empty() || kind == "symplectic") return FormKind::Symplectic;
    if (kind == "closed") return FormKind::Closed;
    if (kind == "invariant") return FormKind::Invariant;
    usage("form kind must be invariant, closed or symplectic");
}

CheckReport run_suite(const AlgebraFile& f, const std::string& suite, const std::string& kind, const CheckOptions& o)
{
    if (suite == "alternative") return check_alternative(f.alternative(), o);
    if (suite == "associative") return check_associative(f.alternative(), o);
    if (suite == "prealt") return check_prealternative(f.prealternative(), o);
    if (suite == "dendriform") return check_dendriform(f.prealternative(), o);
    if (suite == "bimodule") {
        const auto& s = f.need_actions();
        if (s.is_prealt()) return check_prealt_bimodule(f.prealternative(), s.prealternative(f.dim), o);
        return check_alt_bimodule(f.alternative(), s.alternative(f.dim), o);
    }
    if (suite == "coalgebra") {
        bool alt = kind == "alt" || (kind.empty() && f.delta && !f.alpha);
        if (!kind.empty() && kind != "alt" && kind != "prealt") usage("coalgebra kind must be prealt or alt");
        return alt ? coalgebra_check_alt(f.need_delta(), o) : coalgebra_check(f.comult(), o);
    }
    if (suite == "bialgebra") return bialgebra_check(f.prealternative(), f.comult(), o);
    if (suite == "dbialgebra") return alt_dbialgebra_check(f.alternative(), f.need_delta(), o);
    if (suite == "form") return check_form(f.alternative(), f.need_form(), form_kind(kind), o);
    if (suite == "cocycle2") return check_2cocycle(f.prealternative(), f.need_form(), o);
    usage("unknown suite '" + suite + "'");
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

// a constructed object must pass its own axioms before it is written
void revalidate(const CheckReport& rep, const std::string& what)
{
    if (!rep.passed) fail("ValidationFailed", what + " fails re-validation");
}

}  // namespace

RunOptions run_options_from_env()
{
    RunOptions o;
    if (const char* env = std::getenv("PREALT_MAX_WITNESSES")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && end != env) o.max_witnesses = v;
    }
    return o;
}

std::string report_json(const std::string& command, const CheckReport& rep, std::optional<double> millis)
{
    json j;
    j["command"] = command;
    j["verdict"] = rep.passed ? "pass" : "fail";
    j["violation_count"] = rep.violation_count;
    j["truncated"] = rep.truncated;
    json counts = json::array();
    for (const auto& [id, c] : rep.per_id) counts.push_back(json{{"id", id}, {"violations", c}});
    j["identities"] = counts;
    json flags = json::object();
    for (const auto& [k, v] : rep.flags) flags[k] = v;
    j["flags"] = flags;
    json viol = json::array();
    for (const auto& v : rep.violations)
        viol.push_back(json{{"id", v.id}, {"witness", v.witness}, {"residual", residual_json(v.residual)}});
    j["violations"] = viol;
    if (millis) j["timing_ms"] = *millis;
    return dump(j);
}

CommandResult cmd_check_file(const AlgebraFile& file, const std::string& echo, const std::string& suite,
                             const std::string& kind, const RunOptions& opts)
{
    return guarded(echo, [&] {
        auto [rep, ms] = timed([&] { return run_suite(file, suite, kind, opts.check()); });
        return CommandResult{report_json(echo, rep, opts.timing ? std::optional<double>(ms) : std::nullopt),
                             rep.passed ? 0 : 1};
    });
}

CommandResult cmd_check(const std::string& path, const std::string& suite, const std::string& kind,
                        const RunOptions& opts)
{
    std::string echo = join({"check", path, "--suite", suite});
    if (!kind.empty()) echo += " --kind " + kind;
    return guarded(echo, [&] { return cmd_check_file(read_algebra_file(path), echo, suite, kind, opts); });
}

CommandResult cmd_construct_file(const AlgebraFile& f, const ConstructArgs& args, const RunOptions& opts)
{
    std::string echo = "construct --op " + args.op;
    return guarded(echo, [&] {
        auto o = opts.check();
        const std::string& op = args.op;
        AlgebraFile out;
        if (op == "semidirect") {
            const auto& s = f.need_actions();
            if (s.is_prealt()) {
                auto p = prealt_semidirect(f.prealternative(), s.prealternative(f.dim), s.module_basis, o);
                revalidate(check_prealternative(p, o), "semidirect sum");
                out = AlgebraFile::from(p);
            } else {
                auto a = alt_semidirect(f.alternative(), s.alternative(f.dim), s.module_basis, o);
                revalidate(check_alternative(a, o), "semidirect sum");
                out = AlgebraFile::from(a);
            }
        } else if (op == "dual-bimodule") {
            const auto& s = f.need_actions();
            out = f;
            auto labels = dual_labels(s.module_basis);
            if (s.is_prealt()) {
                auto d = prealt_dual_bimodule(s.prealternative(f.dim));
                revalidate(check_prealt_bimodule(f.prealternative(), d, o), "dual bimodule");
                out.actions = ActionSection::from(d, labels);
            } else {
                auto d = alt_dual_bimodule(s.alternative(f.dim));
                d.algebra_dim = f.dim;
                revalidate(check_alt_bimodule(f.alternative(), d, o), "dual bimodule");
                out.actions = ActionSection::from(d, labels);
            }
        } else if (op == "associated") {
            auto a = associated_algebra(f.prealternative());
            revalidate(check_alternative(a, o), "associated algebra");
            out = AlgebraFile::from(a);
        } else if (op == "graded-split") {
            if (args.degrees.empty()) usage("graded-split needs --degrees");
            auto p = graded_split(f.alternative(), Grading{args.degrees});
            revalidate(check_prealternative(p, o), "graded split");
            out = AlgebraFile::from(p);
        } else if (op == "symplectic-split") {
            auto p = symplectic_split(f.alternative(), f.need_form(), o);
            revalidate(check_prealternative(p, o), "symplectic split");
            out = AlgebraFile::from(p);
            out.form = f.form;
        } else if (op == "al-induce" || op == "compatible-from-al") {
            const auto& s = f.need_actions();
            auto act = s.alternative(f.dim);
            auto p = op == "al-induce" ? al_induce(f.alternative(), act, f.need_operator(), s.module_basis, o)
                                       : compatible_from_al(f.alternative(), act, f.need_operator(), o);
            revalidate(check_prealternative(p, o), op);
            out = AlgebraFile::from(p);
        } else if (op == "double") {
            auto a = f.alternative();
            auto d = alt_double_bialgebra(a, f.need_delta());
            revalidate(check_alternative(d.algebra, o), "double");
            out = AlgebraFile::from(d.algebra);
            out.delta = d.delta;
        } else if (op == "pad-double") {
            auto p = f.prealternative();
            // explicit alpha/beta, else the coboundary of r, else zero
            auto c = f.alpha ? f.comult() : f.r ? coboundary_comult(p, *f.r) : ComultiplicationPair::zero(p.field, p.dim);
            auto pad = pad_double(PreAltBialgebra::make(p, c, o), o);
            out = AlgebraFile::from(pad.algebra);
            out.alpha = pad.comult.alpha;
            out.beta = pad.comult.beta;
        } else if (op == "canonical-r") {
            Sign sign;
            if (args.sign == "minus" || args.sign == "-")
                sign = Sign::Minus;
            else if (args.sign == "plus" || args.sign == "+")
                sign = Sign::Plus;
            else
                usage("canonical-r needs --sign minus or plus");
            auto rec = canonical_r(f.prealternative(), sign, o);
            BilinearForm form = map_to_form(tensor2_to_map(rec.r));
            if (sign == Sign::Minus) {
                revalidate(check_form(*rec.alt, form, FormKind::Symplectic, o), "canonical form");
                out = AlgebraFile::from(*rec.alt);
            } else {
                revalidate(check_2cocycle(*rec.pre, form, o), "canonical form");
                out = AlgebraFile::from(*rec.pre);
            }
            out.r = rec.r;
            out.form = form;
        } else if (op == "dual-bialgebra") {
            auto d = dual_bialgebra(PreAltBialgebra::make(f.prealternative(), f.comult(), o));
            out = AlgebraFile::from(d.algebra);
            out.alpha = d.comult.alpha;
            out.beta = d.comult.beta;
        } else {
            usage("unknown construct op '" + op + "'");
        }
        return CommandResult{serialize(out), 0};
    });
}

CommandResult cmd_construct(const std::string& path, const ConstructArgs& args, const RunOptions& opts)
{
    std::string echo = "construct " + path + " --op " + args.op;
    return guarded(echo, [&] { return cmd_construct_file(read_algebra_file(path), args, opts); });
}

CommandResult cmd_residual_file(const AlgebraFile& f, const std::string& echo, const std::string& eq,
                                const RunOptions& opts)
{
    return guarded(echo, [&] {
        const Mat& r = f.need_r();
        if (eq == "coboundary-cond") {
            auto rep = f.has_prealt() ? coboundary_condition_check(f.prealternative(), r, opts.check())
                                      : coboundary_condition_check(f.alternative(), r, opts.check());
            return CommandResult{report_json(echo, rep), rep.passed ? 0 : 1};
        }
        std::vector<std::pair<std::string, Tensor3>> parts;
        if (eq == "aybe") {
            parts.emplace_back("A1", aybe_residual(f.alternative(), r, AybeVariant::A1));
        } else if (eq == "aybe-a2") {
            parts.emplace_back("A2", aybe_residual(f.alternative(), r, AybeVariant::A2));
        } else if (eq == "pa") {
            auto pa = pa_residuals(f.prealternative(), r);
            for (std::size_t i = 0; i < 6; ++i) parts.emplace_back(PaResiduals::term_names[i], pa.terms[i]);
        } else {
            usage("unknown equation '" + eq + "'");
        }
        bool all_zero = true;
        json eqs = json::array();
        for (const auto& [id, t] : parts) {
            all_zero = all_zero && t.is_zero();
            eqs.push_back(json{{"id", id}, {"zero", t.is_zero()}, {"residual", sparse_cube(t)}});
        }
        json j;
        j["command"] = echo;
        j["verdict"] = all_zero ? "zero" : "nonzero";
        j["equations"] = eqs;
        return CommandResult{dump(j), all_zero ? 0 : 1};
    });
}

CommandResult cmd_residual(const std::string& path, const std::string& eq, const RunOptions& opts)
{
    std::string echo = "residual " + path + " --eq " + eq;
    return guarded(echo, [&] { return cmd_residual_file(read_algebra_file(path), echo, eq, opts); });
}

CommandResult cmd_search(const SearchArgs& a, const RunOptions& opts)
{
    std::string echo = "search --field " + std::to_string(a.p) + " --dim " + std::to_string(a.dim) + " --target " +
                       a.target + " --cap " + std::to_string(a.cap);
    if (!a.algebra.empty()) echo += " --algebra " + a.algebra;
    return guarded(echo, [&] {
        if (a.p == 2 || !is_prime(a.p)) fail("BadCharacteristic", "search needs an odd prime field");
        Field fp = Field::prime(a.p);
        AlgebraFile f = a.algebra.empty() ? catalog_entry("zero-" + std::to_string(a.dim)) : catalog_entry(a.algebra);
        if (f.field != fp) f = reduce_mod(f, fp);
        if (f.dim != a.dim) fail("DimensionMismatch", "algebra '" + a.algebra + "' has dimension " + std::to_string(f.dim));
        SearchOptions so{a.cap, opts.workers};
        auto o = opts.check();
        SearchResult res;
        if (a.target == "aybe-skew") {
            auto alg = f.alternative();
            res = brute_search_aybe(alg, so);
            for (const auto& r : res.hits) SolutionRecord::aybe(alg, r);
        } else if (a.target == "pa-sym") {
            auto p = f.prealternative();
            res = brute_search_pa(p, so);
            for (const auto& r : res.hits) SolutionRecord::pa(p, r);
        } else if (a.target == "al-operator") {
            auto alg = f.alternative();
            auto act = regular_bimodule(alg);
            res = brute_search_al(alg, act, so);
            for (const auto& t : res.hits)
                if (!check_al_operator(alg, act, t, o).passed) fail("NotAlOperator", "search hit fails re-verification");
        } else {
            usage("unknown search target '" + a.target + "'");
        }
        json hits = json::array();
        for (const auto& h : res.hits) hits.push_back(sparse_mat(h));
        json j;
        j["command"] = echo;
        j["field"] = json{{"Fp", a.p}};
        j["dim"] = a.dim;
        j["target"] = a.target;
        j["candidates"] = res.candidates;
        j["hit_count"] = res.hits.size();
        j["hits"] = hits;
        return CommandResult{dump(j), 0};
    });
}

CommandResult cmd_catalog(const std::string& name)
{
    return guarded("catalog " + name, [&] { return CommandResult{serialize(catalog_entry(name)), 0}; });
}

}  // namespace prealt
