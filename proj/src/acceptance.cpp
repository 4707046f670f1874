#include "postlie/acceptance.hpp"

#include <cstdlib>
#include <fstream>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "postlie/checks.hpp"
#include "postlie/dispatch.hpp"

#ifndef POSTLIE_CORPUS_DIR
#define POSTLIE_CORPUS_DIR "corpus"
#endif

namespace postlie {

std::filesystem::path default_corpus_dir() {
  if (const char* env = std::getenv("POSTLIE_CORPUS"); env && *env) return env;
  return POSTLIE_CORPUS_DIR;
}

std::vector<Corpus::Mutation> Corpus::mutations() const {
  const auto path = dir_ / "mutations.txt";
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::vector<Mutation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    Mutation m;
    if (!(words >> m.kind)) continue;
    for (std::string f; words >> f;) m.files.push_back(f);
    out.push_back(std::move(m));
  }
  return out;
}

bool CriterionResult::passed() const {
  for (const auto& c : clauses)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> CriterionResult::failed_clauses() const {
  std::vector<std::string> out;
  for (const auto& c : clauses)
    if (!c.passed) out.push_back(c.name);
  return out;
}

std::string CriterionResult::line() const {
  std::string s = id + (passed() ? " PASS " : " FAIL ") + title;
  if (!passed()) {
    s += " [";
    bool first = true;
    for (const auto& c : failed_clauses()) {
      s += (first ? "" : ", ") + c;
      first = false;
    }
    s += "]";
  }
  return s;
}

bool AcceptanceResult::passed() const { return first_failure() == nullptr; }

const CriterionResult* AcceptanceResult::first_failure() const {
  for (const auto& c : criteria)
    if (!c.passed()) return &c;
  return nullptr;
}

namespace {

class Criterion {
 public:
  Criterion(std::string id, std::string title) { res_.id = std::move(id), res_.title = std::move(title); }

  /// fn returns the verdict and may fill in a detail line.
  void clause(std::string name, const std::function<bool(std::string&)>& fn) {
    Clause c{std::move(name), false, {}};
    try {
      c.passed = fn(c.detail);
    } catch (const PreconditionError& e) {
      c.detail = std::string(e.what()) + "\n" + e.report().render(Verbosity::quiet);
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    res_.clauses.push_back(std::move(c));
  }

  /// Clause that passes when the report passes.
  void report_clause(std::string name, const std::function<CheckReport()>& fn) {
    clause(std::move(name), [&](std::string& detail) {
      CheckReport r = fn();
      if (!r.passed) detail = r.render(Verbosity::quiet);
      return r.passed;
    });
  }

  CriterionResult finish() { return std::move(res_); }

 private:
  CriterionResult res_;
};

bool same_table(const Tensor3& got, const Tensor3& want, std::string& detail) {
  if (got.dim() != want.dim()) {
    detail = "dimension " + std::to_string(got.dim()) + " vs " + std::to_string(want.dim());
    return false;
  }
  if (got == want) return true;
  std::size_t bad = 0;
  std::string first;
  const std::size_t n = got.dim();
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    if (got(i, j, k) == want(i, j, k)) return;
    if (bad++ == 0)
      first = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
              "): got " + got(i, j, k).str() + ", expected " + want(i, j, k).str();
  });
  detail = std::to_string(bad) + " entries differ, first " + first;
  if (got == -want) detail += "; the table is the negative of the expected one";
  return false;
}

bool same_op(const AlgebraSpec& got, const AlgebraSpec& want, const std::string& op, std::string& detail) {
  return same_table(got.op(op), want.op(op), detail);
}

std::vector<std::string> starred(const std::vector<std::string>& basis) {
  std::vector<std::string> out;
  for (const auto& b : basis) out.push_back(b + "*");
  return out;
}

AlgebraSpec zero_pp(std::vector<std::string> basis) {
  AlgebraSpec z(basis.size());
  z.basis = std::move(basis);
  for (const char* op : {ops::rtri, ops::ltri, ops::bracket}) z.set(op, Tensor3(z.dim()));
  return z;
}

Tensor2 random_antisymmetric(std::mt19937& rng, std::size_t n, int density) {
  std::uniform_int_distribution<int> val(-2, 2), pick(0, density);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pick(rng) != 0) continue;
      m(i, j) = Scalar(val(rng));
      m(j, i) = -m(i, j);
    }
  return Tensor2(m);
}

/// Verdict of a check that may refuse its input.
bool verdict(const std::function<CheckReport()>& fn) {
  try {
    return fn().passed;
  } catch (const PreconditionError&) {
    return false;
  }
}

CriterionResult a1(const Corpus& c) {
  Criterion k("A1", "Rota-Baxter operator and induced post-Lie table");
  const AlgebraSpec lie = as_algebra(c.load("sl2_lie"));
  const LinearMap p = as_map(c.load("sl2_P"));
  const AlgebraSpec postlie = as_algebra(c.load("sl2_postlie"));
  k.report_clause("rota-baxter", [&] { return check_rota_baxter_lie(lie, p, Scalar(1)); });
  k.clause("induced-circ", [&](std::string& d) { return same_op(induced_post_lie(lie, p), postlie, ops::circ, d); });
  k.clause("induced-bracket",
           [&](std::string& d) { return same_op(induced_post_lie(lie, p), postlie, ops::bracket, d); });
  return k.finish();
}

CriterionResult a2(const Corpus& c) {
  Criterion k("A2", "invariant form on the sl2 post-Lie algebra");
  const AlgebraSpec postlie = as_algebra(c.load("sl2_postlie"));
  const BilinearForm kappa = as_form(c.load("kappa"));
  k.report_clause("gph", [&] { return check_gph(postlie, kappa); });
  k.report_clause("left-invariant", [&] { return check_left_invariant(postlie, kappa); });
  return k.finish();
}

CriterionResult a3(const Corpus& c) {
  Criterion k("A3", "compatible pp-post-Lie structure from the form");
  const AlgebraSpec postlie = as_algebra(c.load("sl2_postlie"));
  const BilinearForm kappa = as_form(c.load("kappa"));
  const AlgebraSpec pp = as_algebra(c.load("sl2_pp"));
  k.clause("reproduces-rtri",
           [&](std::string& d) { return same_op(compatible_pp_from_gph(postlie, kappa), pp, ops::rtri, d); });
  k.clause("reproduces-ltri",
           [&](std::string& d) { return same_op(compatible_pp_from_gph(postlie, kappa), pp, ops::ltri, d); });
  k.report_clause("pp-check", [&] { return check_pp_post_lie(pp); });
  k.report_clause("derived-pp-check", [&] { return check_pp_post_lie(compatible_pp_from_gph(postlie, kappa)); });
  k.clause("horizontal", [&](std::string& d) { return same_op(horizontal_post_lie(pp), postlie, ops::circ, d); });
  k.clause("vertical", [&](std::string& d) { return same_op(vertical_post_lie(pp), postlie, ops::circ, d); });
  return k.finish();
}

CriterionResult a4(const Corpus& c) {
  Criterion k("A4", "double construction with the pairing form");
  const AlgebraSpec pp = as_algebra(c.load("sl2_pp"));
  const FormedAlgebra d = double_construction(pp);
  k.clause("dim-6", [&](std::string& det) {
    det = "dim " + std::to_string(d.algebra.dim());
    return d.algebra.dim() == 6;
  });
  k.clause("pairing-form", [&](std::string&) { return d.form == pairing_form(3); });
  k.report_clause("gph", [&] { return check_gph(d.algebra, d.form); });
  return k.finish();
}

CriterionResult a5(const Corpus& c) {
  Criterion k("A5", "final example pipeline");
  const AlgebraSpec prepp = as_algebra(c.load("final_prepp"));
  const AlgebraSpec sub_expected = as_algebra(c.load("final_sub_adjacent"));
  const AlgebraSpec ahat = as_algebra(c.load("ahat_pp"));
  const Tensor2 r = as_tensor2(c.load("r6"));
  const CoalgebraSpec printed = as_coalgebra(c.load("final_cobrackets"));

  k.report_clause("pre-pp", [&] { return check_pre_pp_post_lie(prepp); });
  k.clause("sub-adjacent", [&](std::string& d) {
    const AlgebraSpec sub = sub_adjacent_pp(prepp);
    for (const char* op : {ops::rtri, ops::ltri, ops::bracket})
      if (!same_op(sub, sub_expected, op, d)) {
        d = std::string(op) + ": " + d;
        return false;
      }
    return true;
  });
  k.clause("ahat", [&](std::string& d) {
    const AlgebraSpec sub = sub_adjacent_pp(prepp);
    const AlgebraSpec built = semidirect_pp(sub, dual_pp_rep(sub, pre_pp_rep(prepp)), starred(sub.basis));
    if (built.basis != ahat.basis) {
      d = "basis names differ";
      return false;
    }
    for (const char* op : {ops::rtri, ops::ltri, ops::bracket})
      if (!same_op(built, ahat, op, d)) {
        d = std::string(op) + ": " + d;
        return false;
      }
    return true;
  });
  k.clause("C(r)=0", [&](std::string&) { return cybe_C(ahat, r).is_zero(); });
  k.clause("D(r)=0", [&](std::string&) { return cybe_D(ahat, r).is_zero(); });
  const CoalgebraSpec computed = cobrackets_from_r(ahat, r);
  for (const char* name : {coops::delta_rtri, coops::delta_ltri, coops::Delta})
    k.clause(name, [&](std::string& d) { return same_table(computed.comap(name), printed.comap(name), d); });
  k.report_clause("pp-bialgebra", [&] { return check_pp_bialgebra(ahat, computed); });
  return k.finish();
}

CriterionResult a6(const Corpus& c) {
  Criterion k("A6", "equivalence oracles");
  const AlgebraSpec sl2 = as_algebra(c.load("sl2_pp"));
  const AlgebraSpec sub = as_algebra(c.load("final_sub_adjacent"));
  const AlgebraSpec ahat = as_algebra(c.load("ahat_pp"));
  const AlgebraSpec prepp = as_algebra(c.load("final_prepp"));
  const Tensor2 r6 = as_tensor2(c.load("r6"));

  // Coadjoint representations, validated once per algebra.
  std::map<const AlgebraSpec*, PPRepSpec> coadj;
  auto coadjoint = [&](const AlgebraSpec& a) -> const PPRepSpec& {
    auto it = coadj.find(&a);
    if (it == coadj.end()) {
      PPRepSpec rep = coadjoint_pp_rep(a);
      require(check_pp_rep(a, rep));
      it = coadj.emplace(&a, std::move(rep)).first;
    }
    return it->second;
  };
  auto three = [&](const AlgebraSpec& a, const Tensor2& r) {
    bool tensor = check_pppcybe(a, r).passed;
    bool op = operator_form_check(a, r).passed;
    bool oop = o_operator_pp_identities(a, coadjoint(a), r_tilde(r)).passed;
    return std::array<bool, 3>{tensor, op, oop};
  };
  k.clause("cybe-corpus-r", [&](std::string& d) {
    auto v = three(ahat, r6);
    d = std::string("tensor ") + (v[0] ? "pass" : "fail");
    return v[0] == v[1] && v[1] == v[2];
  });
  k.clause("cybe-random", [&](std::string& d) {
    std::mt19937 rng(2024);
    const std::vector<const AlgebraSpec*> algs = {&sl2, &sub, &ahat};
    int passes = 0, failures = 0, disagreements = 0;
    for (int t = 0; t < 60; ++t) {
      const AlgebraSpec& a = *algs[t % algs.size()];
      auto v = three(a, random_antisymmetric(rng, a.dim(), a.dim() == 6 ? 12 : 4));
      if (v[0] != v[1] || v[1] != v[2]) ++disagreements;
      (v[0] ? passes : failures)++;
    }
    d = std::to_string(passes) + " solutions, " + std::to_string(failures) + " non-solutions, " +
        std::to_string(disagreements) + " disagreements";
    return disagreements == 0 && passes > 0 && failures > 0;
  });

  auto agree = [](const AlgebraSpec& a, const AlgebraSpec& astar, std::string& d) {
    bool mt = verdict([&] { return manin_triple_build(a, astar).report; });
    bool mp = verdict([&] {
      return check_matched_pair(horizontal_post_lie(a), horizontal_post_lie(astar), coadjoint_actions(a, astar));
    });
    bool bi = verdict([&] { return check_pp_bialgebra(a, dualize_alg(astar)); });
    d = std::string("manin ") + (mt ? "pass" : "fail") + ", matched pair " + (mp ? "pass" : "fail") +
        ", bialgebra " + (bi ? "pass" : "fail");
    return mt == mp && mp == bi;
  };
  k.clause("three-way-sl2", [&](std::string& d) { return agree(sl2, zero_pp(starred(sl2.basis)), d); });
  k.clause("three-way-sl2-mismatched", [&](std::string& d) { return agree(sl2, sub, d); });

  const PPRepSpec rep = pre_pp_rep(prepp);
  k.clause("embed-final-T", [&](std::string& d) {
    const LinearMap t(Matrix::identity(3));
    EmbeddedR e = hom_embed_r(sub, rep, t);
    bool o = check_o_operator_pp(sub, rep, t).passed;
    bool cy = check_pppcybe(e.ahat, e.r).passed;
    d = std::string("O-operator ") + (o ? "pass" : "fail") + ", cybe " + (cy ? "pass" : "fail");
    return o && cy;
  });
  k.clause("embed-mutated", [&](std::string& d) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> idx(0, 2), val(1, 3);
    int non_o = 0, disagreements = 0;
    for (int t = 0; t < 12; ++t) {
      Matrix m = Matrix::identity(3);
      m(idx(rng), idx(rng)) += Scalar(val(rng));
      const LinearMap tm(m);
      EmbeddedR e = hom_embed_r(sub, rep, tm);
      bool o = o_operator_pp_identities(sub, rep, tm).passed;
      if (o != check_pppcybe(e.ahat, e.r).passed) ++disagreements;
      if (!o) ++non_o;
    }
    d = std::to_string(non_o) + " non-O-operators, " + std::to_string(disagreements) + " disagreements";
    return disagreements == 0 && non_o >= 10;
  });
  return k.finish();
}

CriterionResult a7(const Corpus& c) {
  Criterion k("A7", "structural invariants");
  const AlgebraSpec postlie = as_algebra(c.load("sl2_postlie"));
  const AlgebraSpec prepp = as_algebra(c.load("final_prepp"));
  const std::vector<std::pair<std::string, AlgebraSpec>> pps = {
      {"sl2_pp", as_algebra(c.load("sl2_pp"))},
      {"final_sub_adjacent", as_algebra(c.load("final_sub_adjacent"))},
      {"ahat_pp", as_algebra(c.load("ahat_pp"))}};

  k.clause("sub-adjacent-jacobi", [&](std::string& d) {
    std::vector<std::pair<std::string, AlgebraSpec>> post = {{"sl2_postlie", postlie}};
    for (const auto& [name, a] : pps) post.emplace_back("horizontal " + name, horizontal_post_lie(a));
    for (const auto& [name, a] : post)
      if (!check_lie(sub_adjacent_lie(a)).passed) {
        d = name;
        return false;
      }
    return true;
  });
  k.clause("horizontal-vertical", [&](std::string& d) {
    for (const auto& [name, a] : pps)
      if (!check_post_lie(horizontal_post_lie(a)).passed || !check_post_lie(vertical_post_lie(a)).passed) {
        d = name;
        return false;
      }
    return true;
  });
  k.clause("transpose", [&](std::string& d) {
    for (const auto& [name, a] : pps) {
      const AlgebraSpec t = transpose_pp(a);
      bool ok = transpose_pp(t) == a &&
                horizontal_post_lie(t).op(ops::circ) == vertical_post_lie(a).op(ops::circ) &&
                vertical_post_lie(t).op(ops::circ) == horizontal_post_lie(a).op(ops::circ);
      if (!ok) {
        d = name;
        return false;
      }
    }
    return true;
  });
  k.clause("dualize-roundtrip", [&](std::string& d) {
    const CoalgebraSpec co = as_coalgebra(c.load("final_cobrackets"));
    if (dualize_alg(dualize(co)) != co) {
      d = "final_cobrackets";
      return false;
    }
    for (const auto& [name, a] : pps)
      if (dualize(dualize_alg(a)) != a) {
        d = name;
        return false;
      }
    return true;
  });
  k.clause("dual-pp-rep", [&](std::string& d) {
    for (const auto& [name, a] : pps)
      if (!check_pp_rep(a, dual_pp_rep(adjoint_pp_rep(a))).passed) {
        d = name;
        return false;
      }
    const AlgebraSpec sub = sub_adjacent_pp(prepp);
    if (!check_pp_rep(sub, dual_pp_rep(pre_pp_rep(prepp))).passed) {
      d = "final_prepp";
      return false;
    }
    return true;
  });
  k.clause("mutations", [&](std::string& d) {
    const auto muts = c.mutations();
    if (muts.empty()) {
      d = "no mutation fixtures listed";
      return false;
    }
    for (const auto& m : muts) {
      std::vector<Document> docs;
      for (const auto& f : m.files) docs.push_back(c.load(f));
      CheckReport r;
      try {
        r = run_check(m.kind, docs);
      } catch (const PreconditionError& e) {
        r = e.report();
      }
      if (r.passed || r.violations.empty()) {
        d = m.kind + " on " + m.files.back() + " reported no witness";
        return false;
      }
    }
    d = std::to_string(muts.size()) + " fixtures";
    return true;
  });
  return k.finish();
}

}  // namespace

AcceptanceResult run_acceptance(const Corpus& corpus) {
  AcceptanceResult out;
  using Fn = CriterionResult (*)(const Corpus&);
  const std::vector<std::pair<const char*, Fn>> all = {{"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},
                                                       {"A5", a5}, {"A6", a6}, {"A7", a7}};
  for (const auto& [id, fn] : all) {
    try {
      out.criteria.push_back(fn(corpus));
    } catch (const std::exception& e) {
      // Loading the corpus itself failed.
      CriterionResult r{id, "corpus unreadable", {{"load", false, e.what()}}};
      out.criteria.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace postlie
