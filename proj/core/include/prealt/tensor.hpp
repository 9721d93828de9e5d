#pragma once

#include "prealt/linalg.hpp"

#include <array>
#include <tuple>

namespace prealt {

// Coefficients of sum a[i][j][k] e_i (x) e_j (x) e_k. The same type stores
// structure constants (e_i o e_j = sum_k c[i][j][k] e_k) and comultiplications
// (alpha(e_i) = sum_{j,k} a[i][j][k] e_j (x) e_k).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(const Field& f, std::size_t n);

    const Field& field() const { return f_; }
    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * n_ + j) * n_ + k]; }

    bool is_zero() const;
    // result(i_{perm[0]}, i_{perm[1]}, i_{perm[2]}) = (*this)(i_0, i_1, i_2)
    Tensor3 permuted(std::array<int, 3> perm) const;
    // slice with first index fixed, as the matrix m[j][k]
    Mat slice(std::size_t i) const;
    void set_slice(std::size_t i, const Mat& m);

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    Tensor3 operator-() const;
    friend Tensor3 operator*(const Scalar& s, Tensor3 t);
    bool operator==(const Tensor3& o) const;
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    // nonzero entries in lexicographic order
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> nonzeros() const;

private:
    Field f_;
    std::size_t n_ = 0;
    std::vector<Scalar> a_;
};

// product of two vectors through a structure cube
Vec product(const Tensor3& c, const Vec& x, const Vec& y);
// l(x)[k][j] = sum_i x_i c[i][j][k], so l(x) y = x o y
Mat left_mult(const Tensor3& c, const Vec& x);
// r(y)[k][i] = sum_j y_j c[i][j][k], so r(y) x = x o y
Mat right_mult(const Tensor3& c, const Vec& y);
Family left_family(const Tensor3& c);
Family right_family(const Tensor3& c);

// sigma(x (x) y) = y (x) x
Tensor2 tensor2_flip(const Tensor2& r);
bool is_symmetric(const Tensor2& r);
bool is_skew(const Tensor2& r);
// T_r(e_l*) = sum_k r[k][l] e_k
LinearMap tensor2_to_map(const Tensor2& r);
Tensor2 map_to_tensor2(const LinearMap& t);
// B(e_i, e_j) = (T^{-1})[i][j]; throws SingularMap
BilinearForm map_to_form(const LinearMap& t);
// inverse reading of map_to_form: the tensor whose map induces B
Tensor2 form_to_tensor2(const BilinearForm& b);
Scalar form_eval(const BilinearForm& b, const Vec& x, const Vec& y);

// transposes each matrix; all must share one size
Family dual_action(const Family& rho);

// r_{pq} <> s_{st}: r's legs sit in slots (p, q), s's legs in (s, t), slots 1..3.
// Exactly one slot is shared; it receives (r's leg) <> (s's leg) via `prod`.
struct Slots {
    int first;
    int second;
};
Tensor3 pair_product(const Tensor2& r, Slots rs, const Tensor2& s, Slots ss, const Tensor3& prod);

// (F (x) G) t = F t G^T
Tensor2 apply2(const Mat& f, const Mat& g, const Tensor2& t);
// (F (x) G (x) H) T
Tensor3 apply3(const Mat& f, const Mat& g, const Mat& h, const Tensor3& t);
// tau (x) 1 and 1 (x) tau on a 3-tensor
Tensor3 swap12(const Tensor3& t);
Tensor3 swap23(const Tensor3& t);
// sum_k v_k a[k], i.e. a comultiplication applied to v
Tensor2 comult_apply(const Tensor3& a, const Vec& v);
// (a (x) 1) t and (1 (x) a) t for a comultiplication cube a and t in A (x) A
Tensor3 comult_left(const Tensor3& a, const Tensor2& t);
Tensor3 comult_right(const Tensor3& a, const Tensor2& t);
// product cube of A* dual to a comultiplication: a*(e_j*, e_k*) = sum_i a[i][j][k] e_i*
Tensor3 dual_product(const Tensor3& comult);
// comultiplication of A* dual to a product cube: gamma(e_k*) = sum c[i][j][k] e_i* (x) e_j*
Tensor3 dual_comult(const Tensor3& prod);

// Subspaces are lists of coordinate vectors (not necessarily independent on input).
struct OrthResult {
    std::vector<Vec> complement;
    bool isotropic = false;
    bool lagrangian = false;
};
OrthResult orth_complement(const BilinearForm& b, const std::vector<Vec>& w);
std::size_t span_dim(const Field& f, std::size_t n, const std::vector<Vec>& w);
bool span_contains(const Field& f, std::size_t n, const std::vector<Vec>& w, const Vec& v);

}  // namespace prealt
