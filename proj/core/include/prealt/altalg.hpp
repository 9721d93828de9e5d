#pragma once

#include "prealt/report.hpp"

#include <optional>

namespace prealt {

std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e");
std::vector<std::string> dual_labels(const std::vector<std::string>& labels);

// Structure constants only; alternativity is checked, not enforced.
struct AlternativeAlgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Tensor3 mult;

    static AlternativeAlgebra make(const Tensor3& mult, std::vector<std::string> labels = {});
    static AlternativeAlgebra zero(const Field& f, std::size_t n);
    Vec mul(const Vec& x, const Vec& y) const { return product(mult, x, y); }
    Vec basis(std::size_t i) const { return unit_vec(field, dim, i); }
};

// L, R : A -> gl(V), one matrix per basis vector of A.
struct AltBimoduleAction {
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    Family L, R;

    static AltBimoduleAction make(Family L, Family R);
    static AltBimoduleAction zero(const Field& f, std::size_t algebra_dim, std::size_t module_dim);
    Mat left(const Vec& x) const;
    Mat right(const Vec& x) const;
};

// (x,y,z) = (x o y) o z - x o (y o z)
Vec associator(const Tensor3& c, const Vec& x, const Vec& y, const Vec& z);

// Ids: alt.left, alt.right (quadratic, x over e_i and e_i + e_j), alt.left.lin, alt.right.lin.
// Quadratic witnesses are (i, j, k): x = e_i (i == j) or e_i + e_j (i < j), y = e_k.
CheckReport check_alternative(const AlternativeAlgebra& a, const CheckOptions& opts = {});
// Id: assoc, witnesses (i, j, k) with nonzero associator.
CheckReport check_associative(const AlternativeAlgebra& a, const CheckOptions& opts = {});

AltBimoduleAction regular_bimodule(const AlternativeAlgebra& a);

// Ids: bm.left.sq, bm.right.sq (linearized squares), bm.rl, bm.ll; witnesses (i, j).
CheckReport check_alt_bimodule(const AlternativeAlgebra& a, const AltBimoduleAction& act, const CheckOptions& opts = {});

// Product on A (+) B: x o y + LB(a)y + RB(b)x + a * b + LA(x)b + RA(y)a for (x + a)(y + b).
// LA, RA are indexed by A and act on B; LB, RB are indexed by B and act on A.
Tensor3 assemble_pair(const Tensor3& ca, const Tensor3& cb, const Family& LA, const Family& RA, const Family& LB,
                      const Family& RB);

AlternativeAlgebra alt_semidirect(const AlternativeAlgebra& a, const AltBimoduleAction& act,
                                  std::vector<std::string> module_labels = {}, const CheckOptions& opts = {});
AltBimoduleAction alt_dual_bimodule(const AltBimoduleAction& act);

enum class FormKind { Invariant, Closed, Symplectic };
// Ids: form.invariant, form.closed (triples), form.nondegenerate.
CheckReport check_form(const AlternativeAlgebra& a, const BilinearForm& b, FormKind kind, const CheckOptions& opts = {});

struct SubspaceVerdict {
    bool isotropic = false;
    bool lagrangian = false;
    std::optional<bool> subalgebra;
};
SubspaceVerdict subspace_lagrangian(const BilinearForm& b, const std::vector<Vec>& w, const AlternativeAlgebra* a = nullptr);
bool is_subalgebra(const Tensor3& c, const std::vector<Vec>& w);

// Id: hom; flag "bijective".
CheckReport alt_hom_check(const LinearMap& f, const AlternativeAlgebra& a, const AlternativeAlgebra& b,
                          const CheckOptions& opts = {});

// <a*, y> + <x, b*> on A (+) A*
BilinearForm pairing_form(const Field& f, std::size_t n);
// omega_p(x + a*, y + b*) = <a*, y> - <x, b*>
BilinearForm omega_p(const Field& f, std::size_t n);

}  // namespace prealt
