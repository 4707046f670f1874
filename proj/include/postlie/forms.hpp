#pragma once

#include <utility>
#include <vector>

#include "postlie/algebra.hpp"
#include "postlie/report.hpp"

namespace postlie {

/// B(e_i, e_j) = matrix(i, j).
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  Scalar operator()(const Vector& x, const Vector& y) const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

/// Acts on coordinate columns; shape is target x source.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : m_(std::move(m)) {}

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t source_dim() const noexcept { return m_.cols(); }
  std::size_t target_dim() const noexcept { return m_.rows(); }
  Vector operator()(const Vector& v) const { return m_ * v; }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

/// sum_i x_i maps[i]; maps are carrier x carrier.
Matrix combine(const std::vector<Matrix>& maps, const Vector& x, std::size_t carrier);

/// Representation (V; l, r, rho) of a post-Lie algebra, one matrix per basis element.
struct RepSpec {
  std::size_t dim = 0;
  std::vector<Matrix> l, r, rho;

  Matrix l_of(const Vector& x) const { return combine(l, x, dim); }
  Matrix r_of(const Vector& x) const { return combine(r, x, dim); }
  Matrix rho_of(const Vector& x) const { return combine(rho, x, dim); }

  friend bool operator==(const RepSpec&, const RepSpec&) = default;
};

/// Representation (V; l_rtri, r_rtri, l_ltri, r_ltri, rho) of a pp-post-Lie algebra.
struct PPRepSpec {
  std::size_t dim = 0;
  std::vector<Matrix> l_rtri, r_rtri, l_ltri, r_ltri, rho;

  friend bool operator==(const PPRepSpec&, const PPRepSpec&) = default;
};

/// Left and right multiplication matrices of one table, per basis element.
std::vector<Matrix> left_mults(const Tensor3& t);
std::vector<Matrix> right_mults(const Tensor3& t);

/// rho*(x) = -rho(x)^T.
std::vector<Matrix> dual_map(const std::vector<Matrix>& maps);

std::vector<Matrix> operator+(const std::vector<Matrix>& a, const std::vector<Matrix>& b);
std::vector<Matrix> operator-(const std::vector<Matrix>& a, const std::vector<Matrix>& b);
std::vector<Matrix> operator-(const std::vector<Matrix>& a);

/// (A; L_circ, R_circ, ad).
RepSpec adjoint_rep(const AlgebraSpec& post_lie);
/// (A*; L_rtri* - R_ltri*, -R_ltri*, ad*) built from a pp-post-Lie algebra.
RepSpec coadjoint_type_rep(const AlgebraSpec& pp);
/// (A; L_rtri, R_rtri, L_ltri, R_ltri, ad).
PPRepSpec adjoint_pp_rep(const AlgebraSpec& pp);
/// (A*; L_diamond*, R_rtri*, R_bullet*, -R_circ*, ad*) computed from the tables.
PPRepSpec coadjoint_pp_rep(const AlgebraSpec& pp);
/// (A; L_se, R_ne, L_sw, R_nw, L_dot) of a pre-pp-post-Lie algebra.
PPRepSpec pre_pp_rep(const AlgebraSpec& pre_pp);

CheckReport check_invariant_form(const AlgebraSpec& post_lie, const BilinearForm& b);
CheckReport check_gph(const AlgebraSpec& post_lie, const BilinearForm& b);
CheckReport check_left_invariant(const AlgebraSpec& post_lie, const BilinearForm& b);

/// omega(x, y) = B(x, y) - B(y, x) and its cyclic cocycle identity on the
/// sub-adjacent bracket.
std::pair<BilinearForm, CheckReport> omega_cocycle(const AlgebraSpec& post_lie, const BilinearForm& b);

CheckReport check_rota_baxter_lie(const AlgebraSpec& lie, const LinearMap& p, const Scalar& weight);

/// x circ y = [P x, y]; requires P to be Rota-Baxter of weight one.
AlgebraSpec induced_post_lie(const AlgebraSpec& lie, const LinearMap& p);

CheckReport check_post_lie_rep(const AlgebraSpec& post_lie, const RepSpec& rep);
CheckReport check_pp_rep(const AlgebraSpec& pp, const PPRepSpec& rep);

/// (V*; l_rtri* - r_rtri* + l_ltri* - r_ltri*, r_rtri*, r_rtri* - l_ltri*, -(r_rtri* + r_ltri*), rho*).
PPRepSpec dual_pp_rep(const PPRepSpec& rep);
/// Same, after checking that rep is a representation of pp.
PPRepSpec dual_pp_rep(const AlgebraSpec& pp, const PPRepSpec& rep);

/// T: V -> A.
CheckReport check_o_operator_pp(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t);
/// The same identities without re-validating rep; for loops over many T with one rep.
CheckReport o_operator_pp_identities(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t);

/// T: V* -> A.
CheckReport check_dual_p_o_operator(const AlgebraSpec& post_lie, const RepSpec& rep, const LinearMap& t);
CheckReport check_strong(const AlgebraSpec& post_lie, const RepSpec& rep, const LinearMap& t);

/// pp-post-Lie structure on V* from a strong dual p-O-operator.
AlgebraSpec pp_from_dual_p_o(const AlgebraSpec& post_lie, const RepSpec& rep, const LinearMap& t);

/// phi(x) = B(x, -) as a map A -> A*; its matrix is B^T.
LinearMap form_to_dual(const BilinearForm& b);

}  // namespace postlie
