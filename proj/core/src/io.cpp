#include "prealt/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace prealt {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail("ParseError", what); }

json scalar_json(const Scalar& s)
{
    if (s.field().is_rational()) return s.to_string();
    return s.residue();
}

Scalar scalar_from(const Field& f, const json& j)
{
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Scalar::parse(f, std::to_string(j.get<std::uint64_t>()));
        return Scalar::from_int(f, j.get<long long>());
    }
    parse_fail("scalar must be a string or an integer");
}

std::size_t index_from(const json& j, std::size_t bound, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) parse_fail(std::string(what) + ": index must be a non-negative integer");
    auto v = j.get<std::size_t>();
    if (v >= bound) parse_fail(std::string(what) + ": index " + std::to_string(v) + " out of range");
    return v;
}

json cube_json(const Tensor3& t)
{
    json out = json::array();
    for (auto& [i, j, k, v] : t.nonzeros()) out.push_back(json::array({i, j, k, scalar_json(v)}));
    return out;
}

Tensor3 cube_from(const Field& f, std::size_t n, const json& j, const char* what)
{
    if (!j.is_array()) parse_fail(std::string(what) + " must be a list of [i, j, k, value]");
    Tensor3 t(f, n);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4) parse_fail(std::string(what) + " entries are [i, j, k, value]");
        t(index_from(e[0], n, what), index_from(e[1], n, what), index_from(e[2], n, what)) += scalar_from(f, e[3]);
    }
    return t;
}

json mat_json(const Mat& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out.push_back(json::array({i, j, scalar_json(m(i, j))}));
    return out;
}

Mat mat_from(const Field& f, std::size_t rows, std::size_t cols, const json& j, const char* what)
{
    if (!j.is_array()) parse_fail(std::string(what) + " must be a list of [i, j, value]");
    Mat m(f, rows, cols);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) parse_fail(std::string(what) + " entries are [i, j, value]");
        m(index_from(e[0], rows, what), index_from(e[1], cols, what)) += scalar_from(f, e[2]);
    }
    return m;
}

// [a, i, j, value]: entry (i, j) of the matrix for algebra basis vector a
json family_json(const Family& fam)
{
    json out = json::array();
    for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t i = 0; i < fam[a].rows(); ++i)
            for (std::size_t j = 0; j < fam[a].cols(); ++j)
                if (!fam[a](i, j).is_zero()) out.push_back(json::array({a, i, j, scalar_json(fam[a](i, j))}));
    return out;
}

Family family_from(const Field& f, std::size_t count, std::size_t m, const json& j, const char* what)
{
    if (!j.is_array()) parse_fail(std::string(what) + " must be a list of [a, i, j, value]");
    Family fam = zero_family(f, count, m);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4) parse_fail(std::string(what) + " entries are [a, i, j, value]");
        fam[index_from(e[0], count, what)](index_from(e[1], m, what), index_from(e[2], m, what)) += scalar_from(f, e[3]);
    }
    return fam;
}

std::vector<std::string> labels_from(const json& j, std::size_t n, const char* what)
{
    if (!j.is_array() || j.size() != n) parse_fail(std::string(what) + " must list one label per basis vector");
    std::vector<std::string> out;
    for (const auto& l : j) {
        if (!l.is_string()) parse_fail(std::string(what) + " labels must be strings");
        out.push_back(l.get<std::string>());
    }
    return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key())) parse_fail("unknown key '" + it.key() + "' in " + where);
}

[[noreturn]] void missing(const std::string& what) { fail("MissingSection", "file has no '" + what + "' section"); }

Scalar reduce_scalar(const Scalar& s, const Field& target)
{
    if (!s.field().is_rational()) {
        if (s.field() != target) fail("BadCharacteristic", "cannot move between prime fields");
        return s;
    }
    if (s.rational().get_den() % mpz_class(static_cast<unsigned long>(target.characteristic())) == 0)
        fail("BadCharacteristic", "denominator of " + s.to_string() + " vanishes in " + target.name());
    return Scalar::from_mpq(target, s.rational());
}

Tensor3 reduce(const Tensor3& t, const Field& f)
{
    Tensor3 out(f, t.dim());
    for (auto& [i, j, k, v] : t.nonzeros()) out(i, j, k) = reduce_scalar(v, f);
    return out;
}

Mat reduce(const Mat& m, const Field& f)
{
    Mat out(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(i, j) = reduce_scalar(m(i, j), f);
    return out;
}

Family reduce(const Family& fam, const Field& f)
{
    Family out;
    for (const auto& m : fam) out.push_back(reduce(m, f));
    return out;
}

}  // namespace

AltBimoduleAction ActionSection::alternative(std::size_t algebra_dim) const
{
    if (!L || !R) fail("MissingSection", "actions need L and R for an alternative bimodule");
    auto act = AltBimoduleAction::make(*L, *R);
    act.algebra_dim = algebra_dim;
    act.module_dim = module_dim;
    return act;
}

PreAltBimoduleAction ActionSection::prealternative(std::size_t algebra_dim) const
{
    if (!Lp || !Rp || !Ls || !Rs) fail("MissingSection", "actions need Lp, Rp, Ls and Rs for a pre-alternative bimodule");
    auto act = PreAltBimoduleAction::make(*Lp, *Rp, *Ls, *Rs);
    act.algebra_dim = algebra_dim;
    act.module_dim = module_dim;
    return act;
}

ActionSection ActionSection::from(const AltBimoduleAction& a, std::vector<std::string> labels)
{
    ActionSection s;
    s.module_dim = a.module_dim;
    s.module_basis = labels.empty() ? default_labels(a.module_dim, "v") : std::move(labels);
    s.L = a.L;
    s.R = a.R;
    return s;
}

ActionSection ActionSection::from(const PreAltBimoduleAction& a, std::vector<std::string> labels)
{
    ActionSection s;
    s.module_dim = a.module_dim;
    s.module_basis = labels.empty() ? default_labels(a.module_dim, "v") : std::move(labels);
    s.Lp = a.Lp;
    s.Rp = a.Rp;
    s.Ls = a.Ls;
    s.Rs = a.Rs;
    return s;
}

AlternativeAlgebra AlgebraFile::alternative() const
{
    if (mult) return AlternativeAlgebra::make(*mult, basis);
    if (has_prealt()) return AlternativeAlgebra::make(*prec + *succ, basis);
    missing("mult");
}

PreAlternativeAlgebra AlgebraFile::prealternative() const
{
    if (!has_prealt()) missing(prec ? "succ" : "prec");
    return PreAlternativeAlgebra::make(*prec, *succ, basis);
}

ComultiplicationPair AlgebraFile::comult() const
{
    if (!alpha) missing("alpha");
    if (!beta) missing("beta");
    return {*alpha, *beta};
}

const Mat& AlgebraFile::need_form() const
{
    if (!form) missing("form");
    return *form;
}

const Mat& AlgebraFile::need_r() const
{
    if (!r) missing("r");
    return *r;
}

const Mat& AlgebraFile::need_operator() const
{
    if (!op) missing("operator");
    return *op;
}

const ActionSection& AlgebraFile::need_actions() const
{
    if (!actions) missing("actions");
    return *actions;
}

const Tensor3& AlgebraFile::need_delta() const
{
    if (!delta) missing("delta");
    return *delta;
}

AlgebraFile AlgebraFile::from(const AlternativeAlgebra& a)
{
    AlgebraFile f;
    f.field = a.field;
    f.dim = a.dim;
    f.basis = a.labels;
    f.mult = a.mult;
    return f;
}

AlgebraFile AlgebraFile::from(const PreAlternativeAlgebra& p)
{
    AlgebraFile f;
    f.field = p.field;
    f.dim = p.dim;
    f.basis = p.labels;
    f.prec = p.prec;
    f.succ = p.succ;
    return f;
}

AlgebraFile parse_algebra_file(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) parse_fail("top level must be an object");
    reject_unknown(j,
                   {"format_version", "field", "dim", "basis", "description", "mult", "prec", "succ", "alpha", "beta",
                    "delta", "form", "r", "operator", "actions"},
                   "file");
    if (!j.contains("format_version") || j["format_version"] != "1") parse_fail("format_version must be \"1\"");

    AlgebraFile f;
    if (!j.contains("field")) parse_fail("missing 'field'");
    const auto& fj = j["field"];
    if (fj == "Q") {
        f.field = Field::rationals();
    } else if (fj.is_object() && fj.size() == 1 && fj.contains("Fp") && fj["Fp"].is_number_unsigned()) {
        try {
            f.field = Field::prime(fj["Fp"].get<std::uint64_t>());
        } catch (const Error& e) {
            parse_fail(e.what());
        }
    } else {
        parse_fail("field must be \"Q\" or {\"Fp\": p}");
    }
    if (!j.contains("dim") || !j["dim"].is_number_unsigned()) parse_fail("missing or bad 'dim'");
    f.dim = j["dim"].get<std::size_t>();
    std::size_t n = f.dim;
    f.basis = j.contains("basis") ? labels_from(j["basis"], n, "basis") : default_labels(n);
    if (j.contains("description")) {
        if (!j["description"].is_string()) parse_fail("description must be a string");
        f.description = j["description"].get<std::string>();
    }

    try {
        for (auto [key, slot] : {std::pair{"mult", &f.mult}, std::pair{"prec", &f.prec}, std::pair{"succ", &f.succ},
                                 std::pair{"alpha", &f.alpha}, std::pair{"beta", &f.beta},
                                 std::pair{"delta", &f.delta}})
            if (j.contains(key)) *slot = cube_from(f.field, n, j[key], key);
        if (f.prec.has_value() != f.succ.has_value()) parse_fail("prec and succ must appear together");
        if (j.contains("form")) f.form = mat_from(f.field, n, n, j["form"], "form");
        if (j.contains("r")) f.r = mat_from(f.field, n, n, j["r"], "r");

        std::size_t m = n;
        if (j.contains("actions")) {
            const auto& aj = j["actions"];
            if (!aj.is_object()) parse_fail("actions must be an object");
            reject_unknown(aj, {"module_dim", "module_basis", "L", "R", "Lp", "Rp", "Ls", "Rs"}, "actions");
            if (!aj.contains("module_dim") || !aj["module_dim"].is_number_unsigned()) parse_fail("actions.module_dim");
            ActionSection s;
            s.module_dim = m = aj["module_dim"].get<std::size_t>();
            s.module_basis = aj.contains("module_basis") ? labels_from(aj["module_basis"], m, "module_basis")
                                                         : default_labels(m, "v");
            bool alt = aj.contains("L") || aj.contains("R");
            bool pre = aj.contains("Lp") || aj.contains("Rp") || aj.contains("Ls") || aj.contains("Rs");
            if (alt == pre) parse_fail("actions need either L, R or Lp, Rp, Ls, Rs");
            auto fam = [&](const char* key) {
                return aj.contains(key) ? family_from(f.field, n, m, aj[key], key) : zero_family(f.field, n, m);
            };
            if (alt) {
                s.L = fam("L");
                s.R = fam("R");
            } else {
                s.Lp = fam("Lp");
                s.Rp = fam("Rp");
                s.Ls = fam("Ls");
                s.Rs = fam("Rs");
            }
            f.actions = std::move(s);
        }
        if (j.contains("operator")) f.op = mat_from(f.field, n, m, j["operator"], "operator");
    } catch (const Error& e) {
        if (e.code() == "ParseError") throw;
        parse_fail(e.what());
    }
    return f;
}

std::string serialize(const AlgebraFile& f)
{
    json j;
    j["format_version"] = "1";
    if (f.field.is_rational())
        j["field"] = "Q";
    else
        j["field"] = json{{"Fp", f.field.characteristic()}};
    j["dim"] = f.dim;
    j["basis"] = f.basis;
    if (!f.description.empty()) j["description"] = f.description;
    for (auto [key, slot] : {std::pair{"mult", &f.mult}, std::pair{"prec", &f.prec}, std::pair{"succ", &f.succ},
                             std::pair{"alpha", &f.alpha}, std::pair{"beta", &f.beta}, std::pair{"delta", &f.delta}})
        if (*slot) j[key] = cube_json(**slot);
    if (f.form) j["form"] = mat_json(*f.form);
    if (f.r) j["r"] = mat_json(*f.r);
    if (f.actions) {
        const auto& s = *f.actions;
        json aj;
        aj["module_dim"] = s.module_dim;
        aj["module_basis"] = s.module_basis;
        for (auto [key, slot] : {std::pair{"L", &s.L}, std::pair{"R", &s.R}, std::pair{"Lp", &s.Lp},
                                 std::pair{"Rp", &s.Rp}, std::pair{"Ls", &s.Ls}, std::pair{"Rs", &s.Rs}})
            if (*slot) aj[key] = family_json(**slot);
        j["actions"] = aj;
    }
    if (f.op) j["operator"] = mat_json(*f.op);
    return j.dump(2) + "\n";
}

AlgebraFile read_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) parse_fail("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str());
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) fail("IOError", "cannot write '" + path + "'");
    out << text;
}

AlgebraFile reduce_mod(const AlgebraFile& f, const Field& target)
{
    AlgebraFile g = f;
    g.field = target;
    for (auto* slot : {&g.mult, &g.prec, &g.succ, &g.alpha, &g.beta, &g.delta})
        if (*slot) **slot = reduce(**slot, target);
    for (auto* slot : {&g.form, &g.r, &g.op})
        if (*slot) **slot = reduce(**slot, target);
    if (g.actions)
        for (auto* slot : {&g.actions->L, &g.actions->R, &g.actions->Lp, &g.actions->Rp, &g.actions->Ls, &g.actions->Rs})
            if (*slot) **slot = reduce(**slot, target);
    return g;
}

}  // namespace prealt
