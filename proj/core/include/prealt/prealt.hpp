#pragma once

#include "prealt/altalg.hpp"

namespace prealt {

struct PreAlternativeAlgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Tensor3 prec, succ;

    static PreAlternativeAlgebra make(const Tensor3& prec, const Tensor3& succ, std::vector<std::string> labels = {});
    static PreAlternativeAlgebra zero(const Field& f, std::size_t n);
    Tensor3 sum() const { return prec + succ; }
    Vec lt(const Vec& x, const Vec& y) const { return product(prec, x, y); }
    Vec gt(const Vec& x, const Vec& y) const { return product(succ, x, y); }
    Vec circ(const Vec& x, const Vec& y) const { return lt(x, y) + gt(x, y); }
    Vec basis(std::size_t i) const { return unit_vec(field, dim, i); }
};

// Families (L_prec, R_prec, L_succ, R_succ), indexed by the algebra basis.
struct PreAltBimoduleAction {
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    Family Lp, Rp, Ls, Rs;

    static PreAltBimoduleAction make(Family Lp, Family Rp, Family Ls, Family Rs);
    static PreAltBimoduleAction zero(const Field& f, std::size_t algebra_dim, std::size_t module_dim);
    Family Lc() const { return add_families(Lp, Ls); }
    Family Rc() const { return add_families(Rp, Rs); }
};

// (x,y,z)_r = (x<y)<z - x<(y o z)
// (x,y,z)_m = (x>y)<z - x>(y<z)
// (x,y,z)_l = (x o y)>z - x>(y>z)
Vec assoc_r(const PreAlternativeAlgebra& p, const Vec& x, const Vec& y, const Vec& z);
Vec assoc_m(const PreAlternativeAlgebra& p, const Vec& x, const Vec& y, const Vec& z);
Vec assoc_l(const PreAlternativeAlgebra& p, const Vec& x, const Vec& y, const Vec& z);

// Ids: pa.mr, pa.ml, pa.l.sym, pa.r.sym over triples; pa.q.r for (y,x,x)_r and
// pa.q.l for (x,x,y)_l with witnesses (i, j, k): x = e_i or e_i + e_j, y = e_k.
CheckReport check_prealternative(const PreAlternativeAlgebra& p, const CheckOptions& opts = {});
// Ids: dend.r, dend.m, dend.l (all three associators vanish).
CheckReport check_dendriform(const PreAlternativeAlgebra& p, const CheckOptions& opts = {});

AlternativeAlgebra associated_algebra(const PreAlternativeAlgebra& p);

// Ids pb.1 .. pb.10 over basis pairs (x, y) = (e_i, e_j). Throws NotPreAlternative.
CheckReport check_prealt_bimodule(const PreAlternativeAlgebra& p, const PreAltBimoduleAction& act,
                                  const CheckOptions& opts = {});

PreAlternativeAlgebra prealt_semidirect(const PreAlternativeAlgebra& p, const PreAltBimoduleAction& act,
                                        std::vector<std::string> module_labels = {}, const CheckOptions& opts = {});
// (-Rs^T, (Lp + Ls)^T, (Rp + Rs)^T, -Lp^T)
PreAltBimoduleAction prealt_dual_bimodule(const PreAltBimoduleAction& act);

PreAltBimoduleAction regular_prealt_bimodule(const PreAlternativeAlgebra& p);
// The six standard actions: regular, (0, r<, l>, 0), (0, r o, l o, 0), (0, l*o, r*o, 0),
// (0, l*>, r*<, 0), (-r*>, l*o, r*o, -l*<).
std::vector<std::pair<std::string, PreAltBimoduleAction>> example_actions(const PreAlternativeAlgebra& p);

// The two products on A (+) B of a pre-alternative matched pair; fa acts on B, fb on A.
std::pair<Tensor3, Tensor3> assemble_prealt_pair(const PreAlternativeAlgebra& a, const PreAlternativeAlgebra& b,
                                                 const PreAltBimoduleAction& fa, const PreAltBimoduleAction& fb);

// Id: cocycle2, B(x o y, z) = B(x, y > z) + B(y, z < x); flag "closed" for B - B^T on As(P).
CheckReport check_2cocycle(const PreAlternativeAlgebra& p, const BilinearForm& b, const CheckOptions& opts = {});

// Ids: hom.prec, hom.succ; flag "bijective".
CheckReport prealt_hom_check(const LinearMap& f, const PreAlternativeAlgebra& p, const PreAlternativeAlgebra& q,
                             const CheckOptions& opts = {});

}  // namespace prealt
