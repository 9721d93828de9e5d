#pragma once

#include "prealt/prealt.hpp"

namespace prealt {

// Al : V -> A is an n x m matrix for dim A = n, dim V = m.
// Id: al, witnesses (u, v) over module basis pairs.
CheckReport check_al_operator(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& al,
                              const CheckOptions& opts = {});

// u < v = R(Al v) u, u > v = L(Al u) v on V. Throws NotAlOperator.
PreAlternativeAlgebra al_induce(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& al,
                                std::vector<std::string> labels = {}, const CheckOptions& opts = {});

// The induced structure on the image Al(V) inside A.
struct ImageStructure {
    PreAlternativeAlgebra algebra;
    Mat basis;                        // n x k, columns are Al(v_p) for the pivot columns p
    std::vector<std::size_t> pivots;  // module basis indices spanning the image
    Vec coords(const Vec& x) const;   // coordinates of x in `basis`; throws if x is outside the image
};
ImageStructure image_prealt(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& al,
                            const CheckOptions& opts = {});

// D : A -> V, an m x n matrix. Id: cocycle1; flag "bijective".
CheckReport check_1cocycle(const AlternativeAlgebra& a, const AltBimoduleAction& act, const LinearMap& d,
                           const CheckOptions& opts = {});

// x < y = Al(R(y) Al^-1 x), x > y = Al(L(x) Al^-1 y). Throws NotAlOperator, SingularMap.
PreAlternativeAlgebra compatible_from_al(const AlternativeAlgebra& a, const AltBimoduleAction& act,
                                         const LinearMap& al, const CheckOptions& opts = {});
// x < y = D^-1(R(y) D x), x > y = D^-1(L(x) D y). Throws NotCocycle, SingularMap.
PreAlternativeAlgebra compatible_from_1cocycle(const AlternativeAlgebra& a, const AltBimoduleAction& act,
                                               const LinearMap& d, const CheckOptions& opts = {});

struct Grading {
    std::vector<long long> degrees;  // one positive degree per basis vector
};
// x_i > x_j = d_j/(d_i + d_j) x_i o x_j, x_i < x_j = d_i/(d_i + d_j) x_i o x_j.
// Throws NotGraded, BadCharacteristic.
PreAlternativeAlgebra graded_split(const AlternativeAlgebra& a, const Grading& g);

// Solves w(x < y, z) = w(x, y o z) and w(x > y, z) = w(y, z o x). Throws NotSymplectic.
PreAlternativeAlgebra symplectic_split(const AlternativeAlgebra& a, const BilinearForm& w, const CheckOptions& opts = {});

// x <' y = T(l*_>(y) T^-1 x), x >' y = T(r*_<(x) T^-1 y) for T = T_r.
// Throws NotSolution, SingularMap.
PreAlternativeAlgebra compatible_from_pa_solution(const PreAlternativeAlgebra& p, const Tensor2& r,
                                                  const CheckOptions& opts = {});

// <phi(x), y> = h(x, y), as a matrix A -> A*
LinearMap form_to_dual_map(const BilinearForm& h);
// T_r composed with phi; a Rota-Baxter candidate on A
LinearMap rota_baxter_candidate(const Tensor2& r, const BilinearForm& h);
// Al-operator check for the regular bimodule: T(x) o T(y) = T(T(x) o y + x o T(y))
CheckReport check_rota_baxter(const AlternativeAlgebra& a, const LinearMap& t, const CheckOptions& opts = {});

}  // namespace prealt
