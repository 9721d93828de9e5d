#pragma once

#include "prealt/construct.hpp"

#include <array>
#include <cstdint>

namespace prealt {

enum class Symmetry { Symmetric, Skew, Neither };
Symmetry symmetry_of(const Tensor2& r);
std::string to_string(Symmetry s);

enum class ProductKind { Circ, Prec, Succ };

// One term sign * r_{ab} <> r_{cd} of a PA-equation.
struct PaTerm {
    Slots r, s;
    ProductKind prod;
    int sign;
};
// Rows in the order PA_1^1, PA_1^2, PA_2^1, PA_2^2, PA_3^1, PA_3^2.
const std::array<std::array<PaTerm, 3>, 6>& pa_term_table();

struct PaResiduals {
    static const std::array<std::string, 6> term_names;  // "PA_1^1" .. "PA_3^2"
    static const std::array<std::string, 3> sum_names;   // "PA_1" .. "PA_3"
    std::array<Tensor3, 6> terms;
    std::array<Tensor3, 3> sums;
    bool all_zero() const;
};

PaResiduals pa_residuals(const PreAlternativeAlgebra& p, const Tensor2& r);

enum class AybeVariant { A1, A2 };
// A1 = r23 o r12 - r12 o r13 - r13 o r23, A2 = r12 o r23 - r23 o r13 - r13 o r12
Tensor3 aybe_residual(const AlternativeAlgebra& a, const Tensor2& r, AybeVariant v = AybeVariant::A1);

// Skew r on an alternative algebra: T(a) o T(b) = T(r*_o(T a) b + l*_o(T b) a).
// Symmetric r on a pre-alternative algebra: T(a) o T(b) = T(r*_<(T a) b + l*_>(T b) a).
// Id: yb.op over dual basis pairs; flags "tensor_zero" and "routes_agree". Throws WrongSymmetry.
CheckReport yb_operator_check(const AlternativeAlgebra& a, const Tensor2& r, const CheckOptions& opts = {});
CheckReport yb_operator_check(const PreAlternativeAlgebra& p, const Tensor2& r, const CheckOptions& opts = {});

// a* < b* = l*_o(T b*) a*, a* > b* = r*_o(T a*) b*   (skew case)
// a* < b* = l*_>(T b*) a*, a* > b* = r*_<(T a*) b*   (symmetric case)
// Throws NotSolution.
PreAlternativeAlgebra induced_dual_prealt(const AlternativeAlgebra& a, const Tensor2& r, const CheckOptions& opts = {});
PreAlternativeAlgebra induced_dual_prealt(const PreAlternativeAlgebra& p, const Tensor2& r, const CheckOptions& opts = {});

enum class Equation { AYBE, PA };

// A verified solution together with its ambient algebra.
struct SolutionRecord {
    Equation equation = Equation::AYBE;
    Symmetry symmetry = Symmetry::Neither;
    std::optional<AlternativeAlgebra> alt;    // ambient for AYBE
    std::optional<PreAlternativeAlgebra> pre; // ambient for PA
    Tensor2 r;

    // both re-verify the residuals and throw NotSolution
    static SolutionRecord aybe(AlternativeAlgebra ambient, Tensor2 r);
    static SolutionRecord pa(PreAlternativeAlgebra ambient, Tensor2 r);
    std::size_t dim() const { return r.rows(); }
};

enum class Sign { Minus, Plus };
// minus: sum e_i (x) e_i* - e_i* (x) e_i in As(P) x|_{r*_<, l*_>} A*
// plus:  sum e_i (x) e_i* + e_i* (x) e_i in P x|_{0, l*_>, r*_<, 0} A*
SolutionRecord canonical_r(const PreAlternativeAlgebra& p, Sign sign, const CheckOptions& opts = {});

AlternativeAlgebra canonical_alt_ambient(const PreAlternativeAlgebra& p, const CheckOptions& opts = {});
PreAlternativeAlgebra canonical_prealt_ambient(const PreAlternativeAlgebra& p, const CheckOptions& opts = {});

// T - tau T on A (+) V*, with T(v_i) placed as T(v_i) (x) v_i*
Tensor2 skew_operator_tensor(const LinearMap& t);

enum class OperatorMode { Skew, Sym };
// skew: r = T - tau T in A x|_{R*, L*} V*; sym: r = Al + tau Al in Al(V) x|_{0, L*, R*, 0} V*.
// Throws NotAlOperator.
SolutionRecord r_from_operator(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& t,
                               OperatorMode mode, const CheckOptions& opts = {});

struct Correspondence {
    BilinearForm form;
    std::string classification;  // "symplectic", "not-closed", "2-cocycle", "not-2-cocycle"
    bool equation_holds = false;
    bool form_verdict = false;
    bool agree = false;
};
// Skew r on an alternative algebra, or symmetric r on a pre-alternative one. Throws Degenerate, WrongSymmetry.
Correspondence nondegenerate_correspondence(const AlternativeAlgebra& a, const Tensor2& r, const CheckOptions& opts = {});
Correspondence nondegenerate_correspondence(const PreAlternativeAlgebra& p, const Tensor2& r,
                                            const CheckOptions& opts = {});

// graph(T) = {(T a*, a*)} in A x|_{r*_o, l*_o} A* with the symmetric pairing.
// Ids graph.mult, graph.lagrangian; flags "operator", "operator_agrees", "solution", "agrees".
CheckReport graph_check(const AlternativeAlgebra& a, const LinearMap& t, const CheckOptions& opts = {});
// graph(T) in P x|_{-r*_>, l*_o, r*_o, -l*_<} A* with omega_p.
// Ids graph.prec, graph.succ, graph.lagrangian; flags "solution", "agrees".
CheckReport graph_check(const PreAlternativeAlgebra& p, const LinearMap& t, const CheckOptions& opts = {});
// products carried by a closed graph, read on A*
PreAlternativeAlgebra graph_prealt(const AlternativeAlgebra& a, const LinearMap& t, const CheckOptions& opts = {});

AlternativeAlgebra graph_alt_ambient(const AlternativeAlgebra& a);
PreAlternativeAlgebra graph_prealt_ambient(const PreAlternativeAlgebra& p);

enum class SearchTarget { AybeSkew, PaSym, AlOperator };
std::string to_string(SearchTarget t);

struct SearchOptions {
    std::uint64_t cap = 10'000'000;
    unsigned workers = 1;
};
struct SearchResult {
    std::uint64_t candidates = 0;
    std::vector<Mat> hits;  // tensors r, or Al-operator matrices
};
// Exhaustive scan over a prime field; free coefficients are the upper triangle of r
// (strict for skew) or all entries of the operator matrix, row-major, first most significant.
// Throws SearchSpaceTooLarge, BadCharacteristic.
SearchResult brute_search_aybe(const AlternativeAlgebra& a, const SearchOptions& opts = {});
SearchResult brute_search_pa(const PreAlternativeAlgebra& p, const SearchOptions& opts = {});
SearchResult brute_search_al(const AlternativeAlgebra& a, const AltBimoduleAction& act, const SearchOptions& opts = {});

}  // namespace prealt
