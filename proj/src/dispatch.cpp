#include "postlie/dispatch.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "postlie/checks.hpp"

namespace postlie {

namespace {

std::string kinds_text(const std::vector<DocKind>& kinds) {
  std::string s;
  for (DocKind k : kinds) s += (s.empty() ? "" : " ") + kind_name(k);
  return s;
}

/// Throws UsageError unless docs match the expected kinds; `optional` extra
/// trailing kinds may be omitted.
void expect_docs(std::string_view what, const std::vector<Document>& docs, const std::vector<DocKind>& kinds,
                 std::size_t optional = 0) {
  if (docs.size() > kinds.size() || docs.size() + optional < kinds.size())
    throw UsageError(std::string(what) + " expects documents: " + kinds_text(kinds));
  for (std::size_t i = 0; i < docs.size(); ++i)
    if (docs[i].kind != kinds[i])
      throw UsageError(std::string(what) + ": document " + std::to_string(i + 1) + " is a " +
                       kind_name(docs[i].kind) + ", expected " + kind_name(kinds[i]));
}

using K = DocKind;

AlgebraSpec as_post_lie(const AlgebraSpec& a) {
  if (!a.has(ops::circ) && a.has(ops::rtri) && a.has(ops::ltri)) return horizontal_post_lie(a);
  return a;
}

using Checker = std::function<CheckReport(const std::vector<Document>&, const CheckOptions&)>;

const std::vector<std::pair<std::string, Checker>>& checkers() {
  static const std::vector<std::pair<std::string, Checker>> table = {
      {"lie",
       [](const auto& d, const auto&) {
         expect_docs("lie", d, {K::algebra});
         return check_lie(as_algebra(d[0]));
       }},
      {"pre-lie",
       [](const auto& d, const auto&) {
         expect_docs("pre-lie", d, {K::algebra});
         return check_pre_lie(as_algebra(d[0]));
       }},
      {"post-lie",
       [](const auto& d, const auto&) {
         expect_docs("post-lie", d, {K::algebra});
         return check_post_lie(as_algebra(d[0]));
       }},
      {"pp",
       [](const auto& d, const auto&) {
         expect_docs("pp", d, {K::algebra});
         return check_pp_post_lie(as_algebra(d[0]));
       }},
      {"pre-pp",
       [](const auto& d, const auto&) {
         expect_docs("pre-pp", d, {K::algebra});
         return check_pre_pp_post_lie(as_algebra(d[0]));
       }},
      {"l-dendriform",
       [](const auto& d, const auto&) {
         expect_docs("l-dendriform", d, {K::algebra});
         return check_l_dendriform(as_algebra(d[0]));
       }},
      {"rep",
       [](const auto& d, const auto&) {
         expect_docs("rep", d, {K::algebra, K::bundle});
         return check_post_lie_rep(as_algebra(d[0]), as_rep(d[1]));
       }},
      {"pp-rep",
       [](const auto& d, const auto&) {
         expect_docs("pp-rep", d, {K::algebra, K::bundle});
         return check_pp_rep(as_algebra(d[0]), as_pp_rep(d[1]));
       }},
      {"rb",
       [](const auto& d, const CheckOptions& o) {
         expect_docs("rb", d, {K::algebra, K::map});
         return check_rota_baxter_lie(as_algebra(d[0]), as_map(d[1]), o.weight);
       }},
      {"o-op",
       [](const auto& d, const auto&) {
         expect_docs("o-op", d, {K::algebra, K::bundle, K::map});
         return check_o_operator_pp(as_algebra(d[0]), as_pp_rep(d[1]), as_map(d[2]));
       }},
      {"dual-p-o",
       [](const auto& d, const auto&) {
         expect_docs("dual-p-o", d, {K::algebra, K::bundle, K::map});
         return check_dual_p_o_operator(as_algebra(d[0]), as_rep(d[1]), as_map(d[2]));
       }},
      {"strong",
       [](const auto& d, const auto&) {
         expect_docs("strong", d, {K::algebra, K::bundle, K::map});
         return check_strong(as_algebra(d[0]), as_rep(d[1]), as_map(d[2]));
       }},
      {"invariant-form",
       [](const auto& d, const auto&) {
         expect_docs("invariant-form", d, {K::algebra, K::form});
         return check_invariant_form(as_algebra(d[0]), as_form(d[1]));
       }},
      {"gph",
       [](const auto& d, const auto&) {
         expect_docs("gph", d, {K::algebra, K::form});
         return check_gph(as_algebra(d[0]), as_form(d[1]));
       }},
      {"lie-coalg",
       [](const auto& d, const auto&) {
         expect_docs("lie-coalg", d, {K::coalgebra});
         return check_lie_coalgebra(as_coalgebra(d[0]));
       }},
      {"pp-coalg",
       [](const auto& d, const CheckOptions& o) {
         expect_docs("pp-coalg", d, {K::coalgebra});
         return check_pp_coalgebra(as_coalgebra(d[0]), o.mode);
       }},
      {"lie-bialg",
       [](const auto& d, const auto&) {
         expect_docs("lie-bialg", d, {K::algebra, K::coalgebra});
         return check_lie_bialgebra(as_algebra(d[0]), as_coalgebra(d[1]));
       }},
      {"pp-bialg",
       [](const auto& d, const auto&) {
         expect_docs("pp-bialg", d, {K::algebra, K::coalgebra});
         return check_pp_bialgebra(as_algebra(d[0]), as_coalgebra(d[1]));
       }},
      {"matched-pair",
       [](const auto& d, const auto&) {
         expect_docs("matched-pair", d, {K::algebra, K::algebra, K::bundle}, 1);
         const AlgebraSpec a = as_algebra(d[0]), b = as_algebra(d[1]);
         if (d.size() == 3) return check_matched_pair(a, b, as_actions(d[2]));
         return check_matched_pair(as_post_lie(a), as_post_lie(b), coadjoint_actions(a, b));
       }},
      {"manin-triple",
       [](const auto& d, const auto&) {
         expect_docs("manin-triple", d, {K::algebra, K::algebra});
         return manin_triple_build(as_algebra(d[0]), as_algebra(d[1])).report;
       }},
      {"cybe",
       [](const auto& d, const auto&) {
         expect_docs("cybe", d, {K::algebra, K::tensor2});
         return check_pppcybe(as_algebra(d[0]), as_tensor2(d[1]));
       }},
      {"quasi",
       [](const auto& d, const auto&) {
         expect_docs("quasi", d, {K::algebra, K::tensor2});
         return check_quasitriangular_conditions(as_algebra(d[0]), as_tensor2(d[1]));
       }},
      {"op-form",
       [](const auto& d, const auto&) {
         expect_docs("op-form", d, {K::algebra, K::tensor2});
         return operator_form_check(as_algebra(d[0]), as_tensor2(d[1]));
       }},
  };
  return table;
}

/// Throws PreconditionError carrying the report unless it passed.
void revalidate(const CheckReport& r) {
  if (!r.passed) throw PreconditionError("derived object failed re-validation: " + r.subject, r);
}

Document validated_algebra(const AlgebraSpec& a, const std::function<CheckReport(const AlgebraSpec&)>& check) {
  revalidate(check(a));
  return to_document(a);
}

CheckReport pp_check(const AlgebraSpec& a) { return check_pp_post_lie(a); }
CheckReport post_lie_check(const AlgebraSpec& a) { return check_post_lie(a); }

std::vector<std::string> starred(const std::vector<std::string>& basis) {
  std::vector<std::string> out;
  for (const auto& b : basis) out.push_back(b + "*");
  return out;
}

using Deriver = std::function<Document(const std::vector<Document>&)>;

const std::vector<std::pair<std::string, Deriver>>& derivers() {
  static const std::vector<std::pair<std::string, Deriver>> table = {
      {"sub-adjacent",
       [](const auto& d) {
         expect_docs("sub-adjacent", d, {K::algebra});
         const AlgebraSpec a = as_algebra(d[0]);
         if (a.has(ops::se)) return validated_algebra(sub_adjacent_pp(a), pp_check);
         return validated_algebra(sub_adjacent_lie(a), [](const AlgebraSpec& s) { return check_lie(s); });
       }},
      {"horizontal",
       [](const auto& d) {
         expect_docs("horizontal", d, {K::algebra});
         return validated_algebra(horizontal_post_lie(as_algebra(d[0])), post_lie_check);
       }},
      {"vertical",
       [](const auto& d) {
         expect_docs("vertical", d, {K::algebra});
         return validated_algebra(vertical_post_lie(as_algebra(d[0])), post_lie_check);
       }},
      {"transpose",
       [](const auto& d) {
         expect_docs("transpose", d, {K::algebra});
         return validated_algebra(transpose_pp(as_algebra(d[0])), pp_check);
       }},
      {"opposite",
       [](const auto& d) {
         expect_docs("opposite", d, {K::algebra});
         return validated_algebra(opposite_post_lie(as_algebra(d[0])), post_lie_check);
       }},
      {"induced",
       [](const auto& d) {
         expect_docs("induced", d, {K::algebra, K::map});
         return validated_algebra(induced_post_lie(as_algebra(d[0]), as_map(d[1])), post_lie_check);
       }},
      {"semidirect",
       [](const auto& d) {
         expect_docs("semidirect", d, {K::algebra, K::bundle});
         return validated_algebra(semidirect_post_lie(as_algebra(d[0]), as_rep(d[1]), d[1].basis), post_lie_check);
       }},
      {"semidirect-pp",
       [](const auto& d) {
         expect_docs("semidirect-pp", d, {K::algebra, K::bundle});
         return validated_algebra(semidirect_pp(as_algebra(d[0]), as_pp_rep(d[1]), d[1].basis), pp_check);
       }},
      {"bowtie",
       [](const auto& d) {
         expect_docs("bowtie", d, {K::algebra, K::algebra, K::bundle});
         return validated_algebra(bowtie(as_algebra(d[0]), as_algebra(d[1]), as_actions(d[2])), post_lie_check);
       }},
      {"double",
       [](const auto& d) {
         expect_docs("double", d, {K::algebra});
         FormedAlgebra fa = double_construction(as_algebra(d[0]));
         revalidate(check_gph(fa.algebra, fa.form));
         return to_document(fa);
       }},
      {"manin",
       [](const auto& d) {
         expect_docs("manin", d, {K::algebra, K::algebra});
         ManinTriple mt = manin_triple_build(as_algebra(d[0]), as_algebra(d[1]));
         revalidate(mt.report);
         return to_document(FormedAlgebra{mt.algebra, mt.form});
       }},
      {"pp-from-gph",
       [](const auto& d) {
         expect_docs("pp-from-gph", d, {K::algebra, K::form});
         return validated_algebra(compatible_pp_from_gph(as_algebra(d[0]), as_form(d[1])), pp_check);
       }},
      {"bullet-from-gph",
       [](const auto& d) {
         expect_docs("bullet-from-gph", d, {K::algebra, K::form});
         return validated_algebra(bullet_from_gph(as_algebra(d[0]), as_form(d[1])), post_lie_check);
       }},
      {"pre-pp-from-o",
       [](const auto& d) {
         expect_docs("pre-pp-from-o", d, {K::algebra, K::bundle, K::map});
         return validated_algebra(
             pre_pp_from_o_operator(as_algebra(d[0]), as_pp_rep(d[1]), as_map(d[2]), d[1].basis),
             [](const AlgebraSpec& s) { return check_pre_pp_post_lie(s); });
       }},
      {"embed-r",
       [](const auto& d) {
         expect_docs("embed-r", d, {K::algebra, K::bundle, K::map});
         EmbeddedR e = hom_embed_r(as_algebra(d[0]), as_pp_rep(d[1]), as_map(d[2]));
         revalidate(check_pp_post_lie(e.ahat));
         return to_document(e);
       }},
      {"cobrackets-from-r",
       [](const auto& d) {
         expect_docs("cobrackets-from-r", d, {K::algebra, K::tensor2});
         CoalgebraSpec co = cobrackets_from_r(as_algebra(d[0]), as_tensor2(d[1]));
         revalidate(check_pp_coalgebra(co, CoalgebraMode::direct));
         return to_document(co);
       }},
      {"dualize",
       [](const auto& d) {
         expect_docs("dualize", d, {K::coalgebra}, 0);
         return to_document(dualize(as_coalgebra(d[0])));
       }},
      {"codualize",
       [](const auto& d) {
         expect_docs("codualize", d, {K::algebra});
         return to_document(dualize_alg(as_algebra(d[0])));
       }},
      {"adjoint-rep",
       [](const auto& d) {
         expect_docs("adjoint-rep", d, {K::algebra});
         const AlgebraSpec a = as_algebra(d[0]);
         RepSpec rep = adjoint_rep(a);
         revalidate(check_post_lie_rep(a, rep));
         return to_document(rep, a.basis);
       }},
      {"adjoint-pp-rep",
       [](const auto& d) {
         expect_docs("adjoint-pp-rep", d, {K::algebra});
         const AlgebraSpec a = as_algebra(d[0]);
         PPRepSpec rep = adjoint_pp_rep(a);
         revalidate(check_pp_rep(a, rep));
         return to_document(rep, a.basis);
       }},
      {"coadjoint-pp-rep",
       [](const auto& d) {
         expect_docs("coadjoint-pp-rep", d, {K::algebra});
         const AlgebraSpec a = as_algebra(d[0]);
         PPRepSpec rep = coadjoint_pp_rep(a);
         revalidate(check_pp_rep(a, rep));
         return to_document(rep, starred(a.basis));
       }},
      {"pre-pp-rep",
       [](const auto& d) {
         expect_docs("pre-pp-rep", d, {K::algebra});
         const AlgebraSpec a = as_algebra(d[0]);
         PPRepSpec rep = pre_pp_rep(a);
         revalidate(check_pp_rep(sub_adjacent_pp(a), rep));
         return to_document(rep, a.basis);
       }},
      {"dual-pp-rep",
       [](const auto& d) {
         expect_docs("dual-pp-rep", d, {K::algebra, K::bundle});
         const AlgebraSpec a = as_algebra(d[0]);
         PPRepSpec rep = dual_pp_rep(a, as_pp_rep(d[1]));
         revalidate(check_pp_rep(a, rep));
         return to_document(rep, starred(d[1].basis));
       }},
  };
  return table;
}

template <class Table>
std::vector<std::string> names_of(const Table& t) {
  std::vector<std::string> out;
  for (const auto& [name, fn] : t) out.push_back(name);
  return out;
}

template <class Table>
const auto& lookup(const Table& t, std::string_view name, std::string_view what) {
  for (const auto& [n, fn] : t)
    if (n == name) return fn;
  throw UsageError("unknown " + std::string(what) + " '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> names = names_of(checkers());
  return names;
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = names_of(derivers());
  return names;
}

CheckReport run_check(std::string_view kind, const std::vector<Document>& docs, const CheckOptions& opt) {
  return lookup(checkers(), kind, "check kind")(docs, opt);
}

Document run_derive(std::string_view construction, const std::vector<Document>& docs) {
  return lookup(derivers(), construction, "construction")(docs);
}

}  // namespace postlie
