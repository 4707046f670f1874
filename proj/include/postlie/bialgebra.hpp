#pragma once

#include <map>
#include <string>
#include <vector>

#include "postlie/algebra.hpp"
#include "postlie/forms.hpp"
#include "postlie/report.hpp"
#include "postlie/tensor2.hpp"

namespace postlie {

/// Comultiplication names.
namespace coops {
inline constexpr const char* delta_rtri = "delta_rtri";
inline constexpr const char* delta_ltri = "delta_ltri";
inline constexpr const char* Delta = "Delta";
}  // namespace coops

/// Linear maps A -> A (x) A. A comap table d satisfies
/// delta(e_k) = sum_ij d(k, i, j) e_i (x) e_j.
struct CoalgebraSpec {
  Field field = Field::QI;
  std::vector<std::string> basis;
  std::map<std::string, Tensor3> comaps;

  CoalgebraSpec() = default;
  explicit CoalgebraSpec(std::size_t n, Field f = Field::QI);

  std::size_t dim() const noexcept { return basis.size(); }
  bool has(const std::string& name) const { return comaps.count(name) != 0; }
  /// Throws UnknownOperation.
  const Tensor3& comap(const std::string& name) const;
  /// Throws DimensionError on a shape mismatch.
  void set(const std::string& name, Tensor3 d);

  friend bool operator==(const CoalgebraSpec&, const CoalgebraSpec&) = default;
};

/// Operations on A* dual to the comaps: c(i, j, k) = d(k, i, j). Names map
/// delta_rtri -> rtri, delta_ltri -> ltri, Delta -> bracket; others keep theirs.
/// Basis names get a trailing "*" (or lose it when already present).
AlgebraSpec dualize(const CoalgebraSpec& co);
/// Inverse of dualize.
CoalgebraSpec dualize_alg(const AlgebraSpec& alg);

/// delta(x) as a 2-tensor.
Tensor2 coapply(const Tensor3& d, const Vector& x);

CheckReport check_lie_coalgebra(const CoalgebraSpec& co);

enum class CoalgebraMode { dual, direct };

/// dual: the dual operations form a pp-post-Lie algebra. direct: the
/// co-identities are evaluated on basis elements.
CheckReport check_pp_coalgebra(const CoalgebraSpec& co, CoalgebraMode mode = CoalgebraMode::dual);

/// Lie algebra, Lie coalgebra on Delta, and the cocycle condition.
CheckReport check_lie_bialgebra(const AlgebraSpec& lie, const CoalgebraSpec& co);

/// pp-post-Lie algebra, pp-post-Lie coalgebra and the nine compatibility conditions.
CheckReport check_pp_bialgebra(const AlgebraSpec& pp, const CoalgebraSpec& co);

/// Order-3 tensors reuse Tensor3 storage: t(i, j, k) is the coefficient of
/// e_i (x) e_j (x) e_k.
Tensor3 cybe_C(const AlgebraSpec& alg, const Tensor2& r);
Tensor3 cybe_D(const AlgebraSpec& pp, const Tensor2& r);
CheckReport check_pppcybe(const AlgebraSpec& pp, const Tensor2& r);

/// x diamond y = x ltri y + x rtri y - y ltri x - y rtri x.
Tensor3 diamond_table(const AlgebraSpec& pp);

/// n^2 x n^2 matrices acting on row-major vectorized 2-tensors, where
/// (M (x) N) r is M r N^T.
Matrix E_map(const AlgebraSpec& pp, const Vector& x);
Matrix F_map(const AlgebraSpec& pp, const Vector& x);
Matrix G_map(const AlgebraSpec& pp, const Vector& x);

/// delta_rtri(x) = E(x) r, delta_ltri(x) = -F(x) r, Delta(x) = G(x) r.
CoalgebraSpec cobrackets_from_r(const AlgebraSpec& pp, const Tensor2& r);

/// Evaluates each quasitriangular condition separately; identity ids are
/// qclb.1-2, qcldl.1-6, cldl.1-4 and inv.E, inv.F, inv.G.
CheckReport check_quasitriangular_conditions(const AlgebraSpec& pp, const Tensor2& r);

/// r~ : A* -> A with <r~(u*), v*> = <r, u* (x) v*>; its matrix is r^T.
LinearMap r_tilde(const Tensor2& r);

/// Operator-form identities for r~. Throws PreconditionError unless r is antisymmetric.
CheckReport operator_form_check(const AlgebraSpec& pp, const Tensor2& r);

}  // namespace postlie
