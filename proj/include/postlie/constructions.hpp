#pragma once

#include <string>
#include <vector>

#include "postlie/forms.hpp"
#include "postlie/tensor2.hpp"

namespace postlie {

/// A (+) V with (x+u) o (y+v) = x o y + l(x)v + r(y)u and the matching bracket.
/// Basis names of V default to v1..vm.
AlgebraSpec semidirect_post_lie(const AlgebraSpec& post_lie, const RepSpec& rep,
                                std::vector<std::string> rep_basis = {});
AlgebraSpec semidirect_pp(const AlgebraSpec& pp, const PPRepSpec& rep, std::vector<std::string> rep_basis = {});

/// l_a, r_a, rho_a: A -> End(B) and l_b, r_b, rho_b: B -> End(A).
struct MatchedPairActions {
  RepSpec a_on_b;
  RepSpec b_on_a;
};

CheckReport check_matched_pair(const AlgebraSpec& a, const AlgebraSpec& b, const MatchedPairActions& act);

/// Products on A (+) B without any check.
AlgebraSpec bowtie_products(const AlgebraSpec& a, const AlgebraSpec& b, const MatchedPairActions& act);
/// Same, after check_matched_pair.
AlgebraSpec bowtie(const AlgebraSpec& a, const AlgebraSpec& b, const MatchedPairActions& act);

/// Actions (L_rtri* - R_ltri*, -R_ltri*, ad*) of each pp algebra on the other's space.
MatchedPairActions coadjoint_actions(const AlgebraSpec& a_pp, const AlgebraSpec& astar_pp);

/// [[0, I], [I, 0]] on A (+) A*.
BilinearForm pairing_form(std::size_t n);

struct FormedAlgebra {
  AlgebraSpec algebra;
  BilinearForm form;
};

/// Horizontal post-Lie of pp, extended by its coadjoint-type representation.
FormedAlgebra double_construction(const AlgebraSpec& pp);

struct ManinTriple {
  AlgebraSpec algebra;
  BilinearForm form;
  CheckReport report;
};

/// Candidate double of two pp algebras on dual spaces; report covers post-Lie,
/// the pairing form, and both halves being subalgebras.
ManinTriple manin_triple_build(const AlgebraSpec& a_pp, const AlgebraSpec& astar_pp);

/// B(x rtri y, z) = -B(y, x o z - z o x), B(x ltri y, z) = B(x, z o y).
AlgebraSpec compatible_pp_from_gph(const AlgebraSpec& post_lie, const BilinearForm& b);
/// B(x bullet y, z) = -B(y, x o z); returned as circ.
AlgebraSpec bullet_from_gph(const AlgebraSpec& post_lie, const BilinearForm& b);

/// x rtri y = T((l* - r*)(x) T^-1 y), x ltri y = -T(r*(y) T^-1 x) for an invertible dual p-O-operator.
AlgebraSpec compatible_pp_from_dual_p_o(const AlgebraSpec& post_lie, const RepSpec& rep, const LinearMap& t);

/// Pre-pp structure on V from an O-operator T: V -> A.
AlgebraSpec pre_pp_from_o_operator(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t,
                                   std::vector<std::string> rep_basis = {});
/// Compatible pre-pp structure on A from an invertible O-operator.
AlgebraSpec invertible_o_to_compatible_pre_pp(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t);

struct EmbeddedR {
  AlgebraSpec ahat;
  Tensor2 r;
};

/// Ahat = A semidirect V* via the dual representation, and r = T - tau(T).
EmbeddedR hom_embed_r(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t);

}  // namespace postlie
