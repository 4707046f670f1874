#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "postlie/acceptance.hpp"
#include "postlie/checks.hpp"
#include "postlie/dispatch.hpp"

using namespace postlie;

namespace {

Document doc(const std::string& name) { return Corpus(POSTLIE_CORPUS_DIR).load(name); }

std::vector<Document> docs(std::initializer_list<const char*> names) {
  std::vector<Document> out;
  for (const char* n : names) out.push_back(doc(n));
  return out;
}

Document pp_rep_doc(const AlgebraSpec& a) { return to_document(adjoint_pp_rep(a), a.basis); }

bool same(const CheckReport& a, const CheckReport& b) {
  return a.passed == b.passed && a.failed_ids == b.failed_ids && a.total_violations == b.total_violations;
}

}  // namespace

TEST(Dispatch, KindListsAreComplete) {
  const std::vector<std::string> kinds = {"lie",       "pre-lie",  "post-lie",       "pp",           "pre-pp",
                                          "l-dendriform", "rep",   "pp-rep",         "rb",           "o-op",
                                          "dual-p-o",  "strong",   "invariant-form", "gph",          "lie-coalg",
                                          "pp-coalg",  "lie-bialg", "pp-bialg",      "matched-pair", "manin-triple",
                                          "cybe",      "quasi",    "op-form"};
  EXPECT_EQ(check_kinds(), kinds);
  for (const char* c : {"sub-adjacent", "horizontal", "vertical", "transpose", "opposite", "induced", "semidirect",
                        "semidirect-pp", "bowtie", "double", "manin", "pp-from-gph", "bullet-from-gph",
                        "pre-pp-from-o", "embed-r", "cobrackets-from-r", "dualize"})
    EXPECT_NE(std::find(construction_names().begin(), construction_names().end(), c), construction_names().end())
        << c;
}

TEST(Dispatch, VerdictsEqualLibraryVerdicts) {
  const AlgebraSpec lie = fixtures::sl2_lie(), postlie = fixtures::sl2_postlie(), pp = fixtures::sl2_pp();
  const AlgebraSpec ahat = fixtures::ahat(), prepp = fixtures::final_prepp(), sub = fixtures::final_sub_adjacent();
  const BilinearForm kappa(fixtures::kappa());
  const LinearMap p(fixtures::sl2_P());
  const Tensor2 r6(fixtures::r6());

  EXPECT_TRUE(same(run_check("lie", docs({"sl2_lie"})), check_lie(lie)));
  EXPECT_TRUE(same(run_check("lie", docs({"sl2_lie_broken"})), check_lie(as_algebra(doc("sl2_lie_broken")))));
  EXPECT_TRUE(same(run_check("post-lie", docs({"sl2_postlie"})), check_post_lie(postlie)));
  EXPECT_TRUE(same(run_check("pp", docs({"sl2_pp"})), check_pp_post_lie(pp)));
  EXPECT_TRUE(same(run_check("pp", docs({"sl2_pp_broken"})), check_pp_post_lie(as_algebra(doc("sl2_pp_broken")))));
  EXPECT_TRUE(same(run_check("pre-pp", docs({"final_prepp"})), check_pre_pp_post_lie(prepp)));
  EXPECT_TRUE(same(run_check("l-dendriform", docs({"sl2_pp"})), check_l_dendriform(pp)));
  EXPECT_TRUE(same(run_check("rb", docs({"sl2_lie", "sl2_P"})), check_rota_baxter_lie(lie, p, Scalar(1))));
  CheckOptions w0;
  w0.weight = 0;
  EXPECT_TRUE(same(run_check("rb", docs({"sl2_lie", "sl2_P"}), w0), check_rota_baxter_lie(lie, p, Scalar(0))));
  EXPECT_TRUE(same(run_check("gph", docs({"sl2_postlie", "kappa"})), check_gph(postlie, kappa)));
  EXPECT_TRUE(
      same(run_check("invariant-form", docs({"sl2_postlie", "kappa"})), check_invariant_form(postlie, kappa)));
  EXPECT_TRUE(same(run_check("cybe", docs({"ahat_pp", "r6"})), check_pppcybe(ahat, r6)));
  EXPECT_TRUE(same(run_check("cybe", docs({"ahat_pp", "r6_broken"})),
                   check_pppcybe(ahat, as_tensor2(doc("r6_broken")))));
  EXPECT_TRUE(same(run_check("quasi", docs({"ahat_pp", "r6"})), check_quasitriangular_conditions(ahat, r6)));
  EXPECT_TRUE(same(run_check("op-form", docs({"ahat_pp", "r6"})), operator_form_check(ahat, r6)));

  const CoalgebraSpec printed = as_coalgebra(doc("final_cobrackets"));
  EXPECT_TRUE(same(run_check("lie-coalg", docs({"final_cobrackets"})), check_lie_coalgebra(printed)));
  CheckOptions direct;
  direct.mode = CoalgebraMode::direct;
  EXPECT_TRUE(same(run_check("pp-coalg", docs({"final_cobrackets"}), direct),
                   check_pp_coalgebra(printed, CoalgebraMode::direct)));
  EXPECT_FALSE(run_check("pp-coalg", docs({"final_cobrackets"})).passed);
  EXPECT_TRUE(same(run_check("lie-bialg", docs({"ahat_pp", "final_cobrackets"})), check_lie_bialgebra(ahat, printed)));
  EXPECT_TRUE(same(run_check("pp-bialg", docs({"ahat_pp", "final_cobrackets"})), check_pp_bialgebra(ahat, printed)));
}

TEST(Dispatch, RepresentationKinds) {
  const AlgebraSpec pp = fixtures::sl2_pp(), postlie = fixtures::sl2_postlie();
  std::vector<Document> in = {doc("sl2_pp"), pp_rep_doc(pp)};
  EXPECT_TRUE(run_check("pp-rep", in).passed);

  std::vector<Document> rep_in = {doc("sl2_postlie"), to_document(adjoint_rep(postlie))};
  EXPECT_TRUE(same(run_check("rep", rep_in), check_post_lie_rep(postlie, adjoint_rep(postlie))));

  const AlgebraSpec sub = fixtures::final_sub_adjacent();
  const PPRepSpec rep = pre_pp_rep(fixtures::final_prepp());
  std::vector<Document> o_in = {to_document(sub), to_document(rep), to_document(LinearMap(Matrix::identity(3)))};
  EXPECT_TRUE(run_check("o-op", o_in).passed);

  const AlgebraSpec h = horizontal_post_lie(pp);
  const RepSpec co = coadjoint_type_rep(pp);
  std::vector<Document> d_in = {to_document(h), to_document(co), to_document(LinearMap(Matrix::identity(3)))};
  EXPECT_TRUE(same(run_check("dual-p-o", d_in), check_dual_p_o_operator(h, co, LinearMap(Matrix::identity(3)))));
  EXPECT_TRUE(same(run_check("strong", d_in), check_strong(h, co, LinearMap(Matrix::identity(3)))));
}

TEST(Dispatch, PairKinds) {
  std::vector<Document> ok = {doc("ahat_pp"), run_derive("dualize", {run_derive("cobrackets-from-r", docs({"ahat_pp", "r6"}))})};
  EXPECT_TRUE(run_check("manin-triple", ok).passed);
  EXPECT_TRUE(run_check("matched-pair", ok).passed);

  const AlgebraSpec a = fixtures::sl2_pp(), b = fixtures::final_sub_adjacent();
  MatchedPairActions act = coadjoint_actions(a, b);
  std::vector<Document> three = {to_document(horizontal_post_lie(a)), to_document(horizontal_post_lie(b)),
                                 to_document(act)};
  EXPECT_TRUE(same(run_check("matched-pair", three),
                   check_matched_pair(horizontal_post_lie(a), horizontal_post_lie(b), act)));
  EXPECT_FALSE(run_check("matched-pair", docs({"sl2_pp", "final_sub_adjacent"})).passed);
}

TEST(Dispatch, UsageErrors) {
  EXPECT_THROW(run_check("nope", {}), UsageError);
  EXPECT_THROW(run_check("lie", {}), UsageError);
  EXPECT_THROW(run_check("lie", docs({"sl2_lie", "sl2_lie"})), UsageError);
  EXPECT_THROW(run_check("gph", docs({"sl2_postlie", "sl2_P"})), UsageError);
  EXPECT_THROW(run_derive("nope", {}), UsageError);
}

TEST(Dispatch, PreconditionFailuresPropagate) {
  AlgebraSpec bad = fixtures::sl2_postlie();
  bad.set("bracket", as_algebra(doc("sl2_lie_broken")).op("bracket"));
  EXPECT_THROW(run_check("post-lie", {to_document(bad)}), PreconditionError);
  EXPECT_THROW(run_check("post-lie", docs({"sl2_pp"})), UnknownOperation);
  EXPECT_THROW(run_derive("induced", docs({"sl2_lie", "sl2_P_broken"})), PreconditionError);
  EXPECT_THROW(run_derive("pp-from-gph", docs({"sl2_postlie", "kappa_broken"})), PreconditionError);
}

TEST(Derive, InducedMatchesCorpus) {
  EXPECT_EQ(run_derive("induced", docs({"sl2_lie", "sl2_P"})), doc("sl2_postlie"));
}

TEST(Derive, PpFromGphDiffersFromCorpusOnlyInKnownEntries) {
  // The corpus keeps the printed structure; the construction's solution agrees
  // with it except in four entries, with the same sums rtri + ltri.
  const AlgebraSpec got = as_algebra(run_derive("pp-from-gph", docs({"sl2_postlie", "kappa"})));
  const AlgebraSpec want = as_algebra(doc("sl2_pp"));
  const Tensor3 drt = got.op("rtri") - want.op("rtri"), dlt = got.op("ltri") - want.op("ltri");
  EXPECT_EQ(drt.nonzero_count(), 2u);
  EXPECT_EQ(dlt.nonzero_count(), 2u);
  EXPECT_TRUE((drt + dlt).is_zero());
  EXPECT_EQ(got.op("rtri")(1, 2, 0), Scalar(1, 2));
  EXPECT_EQ(got.op("ltri")(1, 2, 0), Scalar(-1));
  EXPECT_EQ(got.op("bracket"), want.op("bracket"));
}

TEST(Derive, CobracketsFromRAgainstPrintedTables) {
  const CoalgebraSpec got = as_coalgebra(run_derive("cobrackets-from-r", docs({"ahat_pp", "r6"})));
  const CoalgebraSpec printed = as_coalgebra(doc("final_cobrackets"));
  EXPECT_EQ(got.comap("delta_rtri"), printed.comap("delta_rtri"));
  EXPECT_EQ(got.comap("Delta"), printed.comap("Delta"));
  EXPECT_EQ(got.comap("delta_ltri"), -printed.comap("delta_ltri"));
}

TEST(Derive, EveryConstructionRunsOnCorpusInputs) {
  const AlgebraSpec pp = fixtures::sl2_pp(), postlie = fixtures::sl2_postlie();
  const AlgebraSpec sub = fixtures::final_sub_adjacent();
  const Document id3 = to_document(LinearMap(Matrix::identity(3)));
  const Document prep = to_document(pre_pp_rep(fixtures::final_prepp()), sub.basis);

  EXPECT_TRUE(as_algebra(run_derive("sub-adjacent", docs({"sl2_postlie"}))).has("bracket"));
  EXPECT_EQ(as_algebra(run_derive("sub-adjacent", docs({"final_prepp"}))), sub);
  EXPECT_EQ(as_algebra(run_derive("horizontal", docs({"sl2_pp"}))).op("circ"), postlie.op("circ"));
  EXPECT_EQ(as_algebra(run_derive("vertical", docs({"sl2_pp"}))).op("circ"), postlie.op("circ"));
  EXPECT_EQ(run_derive("transpose", {run_derive("transpose", docs({"sl2_pp"}))}), doc("sl2_pp"));
  EXPECT_EQ(as_algebra(run_derive("opposite", docs({"sl2_postlie"}))), opposite_post_lie(postlie));
  EXPECT_EQ(as_algebra(run_derive("semidirect", {doc("sl2_postlie"), run_derive("adjoint-rep", docs({"sl2_postlie"}))})).dim(),
            6u);
  EXPECT_EQ(as_algebra(run_derive("semidirect-pp", {to_document(sub), run_derive("dual-pp-rep", {to_document(sub), prep})})),
            fixtures::ahat());
  const Document zero3 = run_derive("codualize", {to_document(sub)});
  EXPECT_EQ(as_algebra(run_derive("dualize", {zero3})), sub);
  FormedAlgebra d = as_formed(run_derive("double", docs({"sl2_pp"})));
  EXPECT_TRUE(check_gph(d.algebra, d.form).passed);
  EXPECT_EQ(as_algebra(run_derive("bullet-from-gph", docs({"sl2_postlie", "kappa"}))).op("circ"), postlie.op("circ"));
  EXPECT_EQ(as_algebra(run_derive("pre-pp-from-o", {doc("sl2_pp"), run_derive("adjoint-pp-rep", docs({"sl2_pp"})),
                                                     doc("final_P")})),
            fixtures::final_prepp());
  EmbeddedR e = as_embedded_r(run_derive("embed-r", {to_document(sub), prep, id3}));
  EXPECT_TRUE(check_pppcybe(e.ahat, e.r).passed);
  FormedAlgebra m = as_formed(run_derive("manin", {doc("ahat_pp"), run_derive("dualize", {run_derive(
                                                                             "cobrackets-from-r", docs({"ahat_pp", "r6"}))})}));
  EXPECT_EQ(m.algebra.dim(), 12u);

  AlgebraSpec zero(3);
  zero.basis = {"e1*", "e2*", "e3*"};
  for (const char* op : {"rtri", "ltri", "bracket"}) zero.set(op, Tensor3(3));
  const Document act = to_document(coadjoint_actions(pp, zero));
  Document bow = run_derive("bowtie", {to_document(horizontal_post_lie(pp)), to_document(horizontal_post_lie(zero)), act});
  EXPECT_EQ(as_algebra(bow).dim(), 6u);
  EXPECT_THROW(run_derive("bowtie", {to_document(horizontal_post_lie(pp)), to_document(horizontal_post_lie(pp)),
                                     to_document(coadjoint_actions(pp, pp))}),
               PreconditionError);

  EXPECT_EQ(as_pp_rep(run_derive("coadjoint-pp-rep", docs({"sl2_pp"}))), coadjoint_pp_rep(pp));
}

TEST(Derive, CobracketsRevalidationRejectsNonSolutions) {
  EXPECT_THROW(run_derive("cobrackets-from-r", docs({"ahat_pp", "r6_broken"})), PreconditionError);
}
