#include "postlie/constructions.hpp"

#include <functional>

#include "postlie/checks.hpp"
#include "postlie/error.hpp"

namespace postlie {

namespace {

struct Split {
  Vector head, tail;
};

Split split(const Vector& v, std::size_t n) {
  return {Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)),
          Vector(v.begin() + static_cast<std::ptrdiff_t>(n), v.end())};
}

Vector join(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<std::string> starred(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(n + "*");
  return out;
}

std::vector<std::string> names_or_default(std::vector<std::string> given, std::size_t m, const char* prefix) {
  if (given.empty()) return default_basis(m, prefix);
  if (given.size() != m) throw DimensionError("wrong number of basis names");
  return given;
}

AlgebraSpec with_basis(Field f, std::vector<std::string> basis) {
  AlgebraSpec out;
  out.field = f;
  out.basis = std::move(basis);
  return out;
}

Matrix inverse_or_throw(const LinearMap& t) {
  if (t.source_dim() != t.target_dim()) throw SingularError("operator is not square, so not invertible");
  auto inv = mat_inverse(t.matrix());
  if (!inv) throw SingularError("operator is singular");
  return *inv;
}

// Solves B^T w = rhs column by column; column (i, j) of rhs holds z -> value.
Tensor3 solve_against_form(const BilinearForm& b, std::size_t n,
                           const std::function<Scalar(const Vector&, const Vector&, const Vector&)>& rhs) {
  const auto e = basis_vectors(n);
  Matrix cols(n, n * n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { cols(k, i * n + j) = rhs(e[i], e[j], e[k]); });
  auto sol = mat_solve(b.matrix().transpose(), cols);
  if (!sol) throw SingularError("bilinear form is degenerate");
  Tensor3 t(n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { t(i, j, k) = (*sol)(k, i * n + j); });
  return t;
}

}  // namespace

AlgebraSpec semidirect_post_lie(const AlgebraSpec& alg, const RepSpec& rep, std::vector<std::string> rep_basis) {
  require(check_post_lie_rep(alg, rep));
  const std::size_t n = alg.dim();
  std::vector<std::string> basis = alg.basis;
  for (auto& s : names_or_default(std::move(rep_basis), rep.dim, "v")) basis.push_back(s);
  AlgebraSpec out = with_basis(alg.field, std::move(basis));
  Product o(alg.op(ops::circ));
  Product br(alg.op(ops::bracket));
  out.set(ops::circ, tabulate(out.dim(), [&](const Vector& p, const Vector& q) {
            auto [x1, v1] = split(p, n);
            auto [x2, v2] = split(q, n);
            return join(o(x1, x2), rep.l_of(x1) * v2 + rep.r_of(x2) * v1);
          }));
  out.set(ops::bracket, tabulate(out.dim(), [&](const Vector& p, const Vector& q) {
            auto [x1, v1] = split(p, n);
            auto [x2, v2] = split(q, n);
            return join(br(x1, x2), rep.rho_of(x1) * v2 - rep.rho_of(x2) * v1);
          }));
  return out;
}

AlgebraSpec semidirect_pp(const AlgebraSpec& pp, const PPRepSpec& rep, std::vector<std::string> rep_basis) {
  require(check_pp_rep(pp, rep));
  const std::size_t n = pp.dim();
  const std::size_t m = rep.dim;
  std::vector<std::string> basis = pp.basis;
  for (auto& s : names_or_default(std::move(rep_basis), m, "v")) basis.push_back(s);
  AlgebraSpec out = with_basis(pp.field, std::move(basis));
  auto extend = [&](const Tensor3& t, const std::vector<Matrix>& l, const std::vector<Matrix>& r, Scalar sign) {
    Product p(t);
    return tabulate(out.dim(), [&](const Vector& a, const Vector& b) {
      auto [x1, v1] = split(a, n);
      auto [x2, v2] = split(b, n);
      return join(p(x1, x2), combine(l, x1, m) * v2 + sign * (combine(r, x2, m) * v1));
    });
  };
  out.set(ops::rtri, extend(pp.op(ops::rtri), rep.l_rtri, rep.r_rtri, Scalar(1)));
  out.set(ops::ltri, extend(pp.op(ops::ltri), rep.l_ltri, rep.r_ltri, Scalar(1)));
  out.set(ops::bracket, extend(pp.op(ops::bracket), rep.rho, rep.rho, Scalar(-1)));
  return out;
}

AlgebraSpec bowtie_products(const AlgebraSpec& a, const AlgebraSpec& b, const MatchedPairActions& act) {
  const std::size_t n = a.dim();
  std::vector<std::string> basis = a.basis;
  basis.insert(basis.end(), b.basis.begin(), b.basis.end());
  AlgebraSpec out = with_basis(a.field, std::move(basis));
  Product oa(a.op(ops::circ)), bra(a.op(ops::bracket));
  Product ob(b.op(ops::circ)), brb(b.op(ops::bracket));
  const RepSpec& ab = act.a_on_b;
  const RepSpec& ba = act.b_on_a;
  out.set(ops::circ, tabulate(out.dim(), [&](const Vector& p, const Vector& q) {
            auto [x, pa] = split(p, n);
            auto [y, qb] = split(q, n);
            return join(oa(x, y) + ba.l_of(pa) * y + ba.r_of(qb) * x, ob(pa, qb) + ab.l_of(x) * qb + ab.r_of(y) * pa);
          }));
  out.set(ops::bracket, tabulate(out.dim(), [&](const Vector& p, const Vector& q) {
            auto [x, pa] = split(p, n);
            auto [y, qb] = split(q, n);
            return join(bra(x, y) + ba.rho_of(pa) * y - ba.rho_of(qb) * x,
                        brb(pa, qb) + ab.rho_of(x) * qb - ab.rho_of(y) * pa);
          }));
  return out;
}

CheckReport check_matched_pair(const AlgebraSpec& a, const AlgebraSpec& b, const MatchedPairActions& act) {
  require(check_post_lie(a));
  require(check_post_lie(b));
  const std::size_t n = a.dim(), m = b.dim();
  if (act.a_on_b.dim != m || act.b_on_a.dim != n) throw DimensionError("action carriers do not match the algebras");

  ReportBuilder rb("matched pair of post-Lie algebras");
  rb.merge(check_post_lie_rep(a, act.a_on_b), "rep-a.");
  rb.merge(check_post_lie_rep(b, act.b_on_a), "rep-b.");

  Product oa(a.op(ops::circ)), bra(a.op(ops::bracket));
  Product ob(b.op(ops::circ)), brb(b.op(ops::bracket));
  auto curly_a = [&](const Vector& x, const Vector& y) { return oa(x, y) - oa(y, x) + bra(x, y); };
  auto curly_b = [&](const Vector& x, const Vector& y) { return ob(x, y) - ob(y, x) + brb(x, y); };
  auto la = [&](const Vector& x) { return act.a_on_b.l_of(x); };
  auto ra = [&](const Vector& x) { return act.a_on_b.r_of(x); };
  auto rhoa = [&](const Vector& x) { return act.a_on_b.rho_of(x); };
  auto lb = [&](const Vector& p) { return act.b_on_a.l_of(p); };
  auto rbm = [&](const Vector& p) { return act.b_on_a.r_of(p); };
  auto rhob = [&](const Vector& p) { return act.b_on_a.rho_of(p); };

  const auto ea = basis_vectors(n);
  const auto eb = basis_vectors(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector &x = ea[i], &p = eb[j], &q = eb[k];
        std::vector<std::size_t> w{i, n + j, n + k};
        rb.expect_equal("mp.1", w, rhoa(x) * brb(p, q),
                        brb(rhoa(x) * p, q) + brb(p, rhoa(x) * q) + rhoa(rhob(q) * x) * p - rhoa(rhob(p) * x) * q);
        rb.expect_equal("mp.2", w, rhoa(x) * ob(p, q),
                        ob(p, rhoa(x) * q) + brb(q, ra(x) * p) - rhoa(lb(p) * x) * q - ra(rhob(q) * x) * p);
        rb.expect_equal("mp.5", w, la(x) * brb(p, q),
                        brb(la(x) * p, q) + brb(p, la(x) * q) + rhoa(rbm(p) * x) * q - rhoa(rbm(q) * x) * p);
        rb.expect_equal("mp.6", w, la(x) * ob(p, q),
                        ob(la(x) * p, q) + ob(p, la(x) * q) - ob(ra(x) * p, q) + ob(rhoa(x) * p, q) +
                            ra(rbm(q) * x) * p - la(lb(p) * x) * q + la(rbm(p) * x) * q - la(rhob(p) * x) * q);
        rb.expect_equal("mp.9", w, ra(x) * curly_b(p, q),
                        ob(p, ra(x) * q) - ob(q, ra(x) * p) + ra(lb(q) * x) * p - ra(lb(p) * x) * q);
      }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector &p = eb[j], &x = ea[i], &y = ea[k];
        std::vector<std::size_t> w{n + j, i, k};
        rb.expect_equal("mp.3", w, rhob(p) * bra(x, y),
                        bra(rhob(p) * x, y) + bra(x, rhob(p) * y) + rhob(rhoa(y) * p) * x - rhob(rhoa(x) * p) * y);
        rb.expect_equal("mp.4", w, rhob(p) * oa(x, y),
                        oa(x, rhob(p) * y) + bra(y, rbm(p) * x) - rhob(la(x) * p) * y - rbm(rhoa(y) * p) * x);
        rb.expect_equal("mp.7", w, lb(p) * bra(x, y),
                        bra(lb(p) * x, y) + bra(x, lb(p) * y) + rhob(ra(x) * p) * y - rhob(ra(y) * p) * x);
        rb.expect_equal("mp.8", w, lb(p) * oa(x, y),
                        oa(lb(p) * x, y) + oa(x, lb(p) * y) - oa(rbm(p) * x, y) + oa(rhob(p) * x, y) +
                            rbm(ra(y) * p) * x - lb(la(x) * p) * y + lb(ra(x) * p) * y - lb(rhoa(x) * p) * y);
        rb.expect_equal("mp.10", w, rbm(p) * curly_a(x, y),
                        oa(x, rbm(p) * y) - oa(y, rbm(p) * x) + rbm(la(y) * p) * x - rbm(la(x) * p) * y);
      }
  return rb.finish();
}

AlgebraSpec bowtie(const AlgebraSpec& a, const AlgebraSpec& b, const MatchedPairActions& act) {
  require(check_matched_pair(a, b, act));
  return bowtie_products(a, b, act);
}

MatchedPairActions coadjoint_actions(const AlgebraSpec& a_pp, const AlgebraSpec& astar_pp) {
  if (a_pp.dim() != astar_pp.dim()) throw DimensionError("an algebra and its dual must have equal dimension");
  return {coadjoint_type_rep(a_pp), coadjoint_type_rep(astar_pp)};
}

BilinearForm pairing_form(std::size_t n) {
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = 1;
  }
  return BilinearForm(std::move(m));
}

FormedAlgebra double_construction(const AlgebraSpec& pp) {
  AlgebraSpec h = horizontal_post_lie(pp);
  return {semidirect_post_lie(h, coadjoint_type_rep(pp), starred(pp.basis)), pairing_form(pp.dim())};
}

ManinTriple manin_triple_build(const AlgebraSpec& a_pp, const AlgebraSpec& astar_pp) {
  if (a_pp.dim() != astar_pp.dim()) throw DimensionError("an algebra and its dual must have equal dimension");
  const std::size_t n = a_pp.dim();
  AlgebraSpec a = horizontal_post_lie(a_pp);
  AlgebraSpec b = horizontal_post_lie(astar_pp);
  ManinTriple out{bowtie_products(a, b, coadjoint_actions(a_pp, astar_pp)), pairing_form(n), {}};

  ReportBuilder rb("Manin triple");
  bool post_lie_ok = false;
  try {
    CheckReport pl = check_post_lie(out.algebra);
    post_lie_ok = pl.passed;
    rb.merge(pl, "double.");
  } catch (const PreconditionError& e) {
    rb.merge(e.report(), "double.");
  }
  if (post_lie_ok) rb.merge(check_gph(out.algebra, out.form), "form.");

  Product o(out.algebra.op(ops::circ));
  Product br(out.algebra.op(ops::bracket));
  const auto e = basis_vectors(2 * n);
  for_pairs(n, [&](std::size_t i, std::size_t j) {
    rb.expect_zero("subalgebra.A", {i, j}, split(o(e[i], e[j]), n).tail + split(br(e[i], e[j]), n).tail);
    rb.expect_zero("subalgebra.A*", {n + i, n + j},
                   split(o(e[n + i], e[n + j]), n).head + split(br(e[n + i], e[n + j]), n).head);
  });
  out.report = rb.finish();
  return out;
}

AlgebraSpec compatible_pp_from_gph(const AlgebraSpec& alg, const BilinearForm& b) {
  require(check_gph(alg, b));
  const std::size_t n = alg.dim();
  Product o(alg.op(ops::circ));
  AlgebraSpec out = empty_like(alg);
  out.set(ops::rtri, solve_against_form(b, n, [&](const Vector& x, const Vector& y, const Vector& z) {
            return -b(y, o(x, z) - o(z, x));
          }));
  out.set(ops::ltri, solve_against_form(b, n, [&](const Vector& x, const Vector& y, const Vector& z) {
            return b(x, o(z, y));
          }));
  out.set(ops::bracket, alg.op(ops::bracket));
  return out;
}

AlgebraSpec bullet_from_gph(const AlgebraSpec& alg, const BilinearForm& b) {
  require(check_gph(alg, b));
  Product o(alg.op(ops::circ));
  AlgebraSpec out = empty_like(alg);
  out.set(ops::circ, solve_against_form(b, alg.dim(), [&](const Vector& x, const Vector& y, const Vector& z) {
            return -b(y, o(x, z));
          }));
  out.set(ops::bracket, alg.op(ops::bracket));
  return out;
}

AlgebraSpec compatible_pp_from_dual_p_o(const AlgebraSpec& alg, const RepSpec& rep, const LinearMap& t) {
  require(check_dual_p_o_operator(alg, rep, t));
  Matrix tinv = inverse_or_throw(t);
  const std::size_t m = rep.dim;
  const auto ls = dual_map(rep.l);
  const auto rs = dual_map(rep.r);
  AlgebraSpec out = empty_like(alg);
  out.set(ops::rtri, tabulate(alg.dim(), [&](const Vector& x, const Vector& y) {
            return t((combine(ls, x, m) - combine(rs, x, m)) * (tinv * y));
          }));
  out.set(ops::ltri, tabulate(alg.dim(), [&](const Vector& x, const Vector& y) {
            return -t(combine(rs, y, m) * (tinv * x));
          }));
  out.set(ops::bracket, alg.op(ops::bracket));
  return out;
}

AlgebraSpec pre_pp_from_o_operator(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t,
                                   std::vector<std::string> rep_basis) {
  require(check_o_operator_pp(pp, rep, t));
  const std::size_t m = rep.dim;
  AlgebraSpec out = with_basis(pp.field, names_or_default(std::move(rep_basis), m, "v"));
  auto left = [&](const std::vector<Matrix>& maps) {
    return tabulate(m, [&](const Vector& u, const Vector& v) { return combine(maps, t(u), m) * v; });
  };
  auto right = [&](const std::vector<Matrix>& maps) {
    return tabulate(m, [&](const Vector& u, const Vector& v) { return combine(maps, t(v), m) * u; });
  };
  out.set(ops::se, left(rep.l_rtri));
  out.set(ops::ne, right(rep.r_rtri));
  out.set(ops::sw, left(rep.l_ltri));
  out.set(ops::nw, right(rep.r_ltri));
  out.set(ops::dot, left(rep.rho));
  return out;
}

AlgebraSpec invertible_o_to_compatible_pre_pp(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t) {
  require(check_o_operator_pp(pp, rep, t));
  Matrix tinv = inverse_or_throw(t);
  const std::size_t m = rep.dim;
  AlgebraSpec out = empty_like(pp);
  auto left = [&](const std::vector<Matrix>& maps) {
    return tabulate(pp.dim(), [&](const Vector& x, const Vector& y) { return t(combine(maps, x, m) * (tinv * y)); });
  };
  auto right = [&](const std::vector<Matrix>& maps) {
    return tabulate(pp.dim(), [&](const Vector& x, const Vector& y) { return t(combine(maps, y, m) * (tinv * x)); });
  };
  out.set(ops::se, left(rep.l_rtri));
  out.set(ops::ne, right(rep.r_rtri));
  out.set(ops::sw, left(rep.l_ltri));
  out.set(ops::nw, right(rep.r_ltri));
  out.set(ops::dot, left(rep.rho));
  return out;
}

EmbeddedR hom_embed_r(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t) {
  require(check_pp_rep(pp, rep));
  const std::size_t n = pp.dim(), m = rep.dim;
  if (t.source_dim() != m || t.target_dim() != n) throw DimensionError("operator must map V to A");
  std::vector<std::string> dual_names = starred(m == n ? pp.basis : default_basis(m, "v"));
  EmbeddedR out{semidirect_pp(pp, dual_pp_rep(rep), std::move(dual_names)), Tensor2(n + m)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      out.r(n + j, i) = t.matrix()(i, j);
      out.r(i, n + j) = -t.matrix()(i, j);
    }
  return out;
}

}  // namespace postlie
