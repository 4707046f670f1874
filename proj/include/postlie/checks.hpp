#pragma once

#include <string>

#include "postlie/algebra.hpp"
#include "postlie/report.hpp"

namespace postlie {

/// Antisymmetry and the Jacobi identity.
CheckReport check_lie(const AlgebraSpec& alg, const std::string& bracket = ops::bracket);

/// Left-symmetry of the associator.
CheckReport check_pre_lie(const AlgebraSpec& alg, const std::string& op = ops::circ);

/// Throws PreconditionError when `bracket` is not a Lie bracket.
CheckReport check_post_lie(const AlgebraSpec& alg, const std::string& circ = ops::circ,
                           const std::string& bracket = ops::bracket);

/// Uses rtri, ltri and bracket. Throws PreconditionError when the bracket is
/// not Lie.
CheckReport check_pp_post_lie(const AlgebraSpec& alg);

/// Uses rtri and ltri only.
CheckReport check_l_dendriform(const AlgebraSpec& alg);

/// Uses se, ne, sw, nw, dot. Throws PreconditionError when dot is not pre-Lie.
CheckReport check_pre_pp_post_lie(const AlgebraSpec& alg);

/// Bracket x∘y - y∘x + [x,y]; output holds only `bracket`.
AlgebraSpec sub_adjacent_lie(const AlgebraSpec& alg);

/// circ' = circ + bracket, bracket' = opposite bracket.
AlgebraSpec opposite_post_lie(const AlgebraSpec& alg);

/// circ = rtri + ltri.
AlgebraSpec horizontal_post_lie(const AlgebraSpec& alg);

/// circ(x,y) = x rtri y - y ltri x.
AlgebraSpec vertical_post_lie(const AlgebraSpec& alg);

/// ltri'(x,y) = -(y ltri x).
AlgebraSpec transpose_pp(const AlgebraSpec& alg);

/// rtri = se + ne, ltri = sw + nw, bracket = dot - dot^op.
AlgebraSpec sub_adjacent_pp(const AlgebraSpec& alg);

/// Same space and field, no operations.
AlgebraSpec empty_like(const AlgebraSpec& alg);

}  // namespace postlie
