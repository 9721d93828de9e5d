#pragma once

#include "prealt/ybe.hpp"

namespace prealt {

// alpha(e_i) = sum_{j,k} alpha(i, j, k) e_j (x) e_k, beta likewise
struct ComultiplicationPair {
    Tensor3 alpha, beta;
    std::size_t dim() const { return alpha.dim(); }
    static ComultiplicationPair zero(const Field& f, std::size_t n) { return {Tensor3(f, n), Tensor3(f, n)}; }
};

struct PreAltBialgebra {
    PreAlternativeAlgebra algebra;
    ComultiplicationPair comult;
    // runs bialgebra_check; throws NotBialgebra (or the gate errors of bialgebra_check)
    static PreAltBialgebra make(PreAlternativeAlgebra p, ComultiplicationPair c, const CheckOptions& opts = {});
};

// alpha(x) = (r_o(x) (x) 1 - 1 (x) l_>(x)) r, beta(x) = (1 (x) l_o(x) - r_<(x) (x) 1) r
ComultiplicationPair coboundary_comult(const PreAlternativeAlgebra& p, const Tensor2& r);
// Delta(x) = (r_o(x) (x) 1 - 1 (x) l_o(x)) r
Tensor3 coboundary_delta(const AlternativeAlgebra& a, const Tensor2& r);

// (A*, <*, >*) with a* <* b* = alpha*(a* (x) b*), a* >* b* = beta*(a* (x) b*)
PreAlternativeAlgebra dual_algebra(const ComultiplicationPair& c, std::vector<std::string> labels = {});

// Ids co.S1 .. co.S4 per basis element; flags "dual_route", "routes_agree".
CheckReport coalgebra_check(const ComultiplicationPair& c, const CheckOptions& opts = {});
// Ids co.A6, co.A7 per basis element; flags "dual_route", "routes_agree".
CheckReport coalgebra_check_alt(const Tensor3& delta, const CheckOptions& opts = {});

// Ids bi.1 .. bi.8 over basis pairs, without the gates.
CheckReport bialgebra_equations(const PreAlternativeAlgebra& p, const ComultiplicationPair& c, const CheckOptions& opts = {});
// Gated: throws NotPreAlternative, NotCoalgebra.
CheckReport bialgebra_check(const PreAlternativeAlgebra& p, const ComultiplicationPair& c, const CheckOptions& opts = {});

// Ids cob.1 .. cob.4 per basis element (symmetric r); flags "coalgebra", "routes_agree".
CheckReport coboundary_condition_check(const PreAlternativeAlgebra& p, const Tensor2& r, const CheckOptions& opts = {});
// Ids cob.a1, cob.a2 per basis element (skew r); flags "coalgebra", "routes_agree".
CheckReport coboundary_condition_check(const AlternativeAlgebra& a, const Tensor2& r, const CheckOptions& opts = {});

// LA, RA indexed by A acting on B; LB, RB indexed by B acting on A.
struct AltMatchedPair {
    AlternativeAlgebra a, b;
    Family LA, RA, LB, RB;
};
struct AltMatchedPairResult {
    CheckReport report;  // ids mp.1 .. mp.8; flags "assembled_alternative", "agree"
    AlternativeAlgebra assembled;
};
// Throws BadBimodule.
AltMatchedPairResult matched_pair_alt(const AltMatchedPair& data, const CheckOptions& opts = {});

struct PreAltMatchedPair {
    PreAlternativeAlgebra a, b;
    PreAltBimoduleAction fa;  // indexed by A, acting on B
    PreAltBimoduleAction fb;  // indexed by B, acting on A
};
struct PreAltMatchedPairResult {
    CheckReport report;  // the pre-alternative axioms of the assembled algebra
    PreAlternativeAlgebra assembled;
};
// Throws BadBimodule.
PreAltMatchedPairResult matched_pair_prealt_assemble(const PreAltMatchedPair& data, const CheckOptions& opts = {});

// (As(A), As(A*), r*_<, l*_>, r*_<*, l*_>*) for a bialgebra
AltMatchedPair bialgebra_alt_matched_pair(const PreAlternativeAlgebra& p, const ComultiplicationPair& c);
// (A, A*, -r*_>, l*_o, r*_o, -l*_<, -r*_>*, l*_*, r*_*, -l*_<*)
PreAltMatchedPair bialgebra_prealt_matched_pair(const PreAlternativeAlgebra& p, const ComultiplicationPair& c);

// A (+) A* with the product induced by Delta.
AlternativeAlgebra drinfeld_double(const AlternativeAlgebra& a, const Tensor3& delta);

// Ids ab.1 .. ab.4 over basis pairs; flags "double_alternative", "routes_agree".
CheckReport alt_dbialgebra_check(const AlternativeAlgebra& a, const Tensor3& delta, const CheckOptions& opts = {});

// The double D(A) with Delta_D = coboundary of sum e_i (x) e_i*.
struct AltDoubleBialgebra {
    AlternativeAlgebra algebra;
    Tensor3 delta;
};
AltDoubleBialgebra alt_double_bialgebra(const AlternativeAlgebra& a, const Tensor3& delta);

// (A*, <*, >*, gamma, delta) with gamma, delta dual to <, >
PreAltBialgebra dual_bialgebra(const PreAltBialgebra& b);

// A x|_{-r*_>, l*_o, r*_o, -l*_<} A* matched with the dual side, comultiplications the
// coboundary of sum e_i (x) e_i*.
PreAltBialgebra pad_double(const PreAltBialgebra& b, const CheckOptions& opts = {});
// Ids pad.closed.1 .. pad.closed.6 comparing a double against the closed forms for a symmetric r.
CheckReport pad_closed_form_check(const PreAlternativeAlgebra& p, const Tensor2& r, const PreAlternativeAlgebra& pad,
                                  const CheckOptions& opts = {});

// Ids ps.A.subalgebra, ps.dual.subalgebra, form.closed, form.nondegenerate,
// ps.A.lagrangian, ps.dual.lagrangian. E has dimension 2n with A first.
CheckReport phase_space_check(const AlternativeAlgebra& e, std::size_t n, const CheckOptions& opts = {});

struct SymplecticDouble {
    PreAlternativeAlgebra algebra;  // (<0, >0) on A (+) A*
    Tensor2 r;                      // inverse tensor of the form
    AlternativeAlgebra drinfeld;    // D(A) for Delta_r
    AlternativeAlgebra semidirect;  // A x|_{r*_o, l*_o} A*
    LinearMap lambda;               // (x, a*) -> (T_r a* + x, a*)
};
// Throws NotSymplectic.
SymplecticDouble symplectic_double_prealt(const AlternativeAlgebra& a, const BilinearForm& w, const CheckOptions& opts = {});

// Ids hom.prec, hom.succ, hom.alpha, hom.beta.
CheckReport hom_check_bialgebra(const LinearMap& f, const PreAlternativeAlgebra& p1, const ComultiplicationPair& c1,
                                const PreAlternativeAlgebra& p2, const ComultiplicationPair& c2,
                                const CheckOptions& opts = {});
// Ids hom, hom.delta.
CheckReport hom_check_alt_bialgebra(const LinearMap& f, const AlternativeAlgebra& a1, const Tensor3& d1,
                                    const AlternativeAlgebra& a2, const Tensor3& d2, const CheckOptions& opts = {});

}  // namespace prealt
