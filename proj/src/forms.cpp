#include "postlie/forms.hpp"

#include <functional>

#include "postlie/checks.hpp"
#include "postlie/error.hpp"

namespace postlie {

namespace {

std::vector<Matrix> per_basis(std::size_t n, const std::function<Matrix(const Vector&)>& f) {
  std::vector<Matrix> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(basis_vector(n, i)));
  return out;
}

void require_rep_shape(const std::vector<Matrix>& maps, std::size_t n, std::size_t m, const char* name) {
  if (maps.size() != n) throw DimensionError(std::string("representation map '") + name + "' needs one matrix per basis element");
  for (const auto& a : maps)
    if (a.rows() != m || a.cols() != m) throw DimensionError(std::string("representation map '") + name + "' has the wrong shape");
}

void require_rep_shape(const RepSpec& rep, std::size_t n) {
  require_rep_shape(rep.l, n, rep.dim, "l");
  require_rep_shape(rep.r, n, rep.dim, "r");
  require_rep_shape(rep.rho, n, rep.dim, "rho");
}

void require_rep_shape(const PPRepSpec& rep, std::size_t n) {
  require_rep_shape(rep.l_rtri, n, rep.dim, "l_rtri");
  require_rep_shape(rep.r_rtri, n, rep.dim, "r_rtri");
  require_rep_shape(rep.l_ltri, n, rep.dim, "l_ltri");
  require_rep_shape(rep.r_ltri, n, rep.dim, "r_ltri");
  require_rep_shape(rep.rho, n, rep.dim, "rho");
}

void require_form_shape(const BilinearForm& b, std::size_t n) {
  if (b.dim() != n || !b.matrix().square()) throw DimensionError("form dimension does not match algebra");
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

BilinearForm::BilinearForm(Matrix m) : m_(std::move(m)) {
  if (!m_.square()) throw DimensionError("bilinear form must be square");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  Vector by = m_ * y;
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !by[i].is_zero()) s += x[i] * by[i];
  return s;
}

Matrix combine(const std::vector<Matrix>& maps, const Vector& x, std::size_t carrier) {
  if (maps.size() != x.size()) throw DimensionError("coefficient vector does not match map count");
  Matrix out(carrier, carrier);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * maps[i];
  return out;
}

std::vector<Matrix> left_mults(const Tensor3& t) {
  return per_basis(t.dim(), [&](const Vector& x) { return t.left(x); });
}

std::vector<Matrix> right_mults(const Tensor3& t) {
  return per_basis(t.dim(), [&](const Vector& y) { return t.right(y); });
}

std::vector<Matrix> dual_map(const std::vector<Matrix>& maps) {
  std::vector<Matrix> out;
  out.reserve(maps.size());
  for (const auto& m : maps) out.push_back(-m.transpose());
  return out;
}

std::vector<Matrix> operator+(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size()) throw DimensionError("map families differ in length");
  std::vector<Matrix> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<Matrix> operator-(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size()) throw DimensionError("map families differ in length");
  std::vector<Matrix> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

std::vector<Matrix> operator-(const std::vector<Matrix>& a) {
  std::vector<Matrix> out;
  out.reserve(a.size());
  for (const auto& m : a) out.push_back(-m);
  return out;
}

RepSpec adjoint_rep(const AlgebraSpec& alg) {
  const Tensor3& c = alg.op(ops::circ);
  return {alg.dim(), left_mults(c), right_mults(c), left_mults(alg.op(ops::bracket))};
}

RepSpec coadjoint_type_rep(const AlgebraSpec& pp) {
  auto lr = left_mults(pp.op(ops::rtri));
  auto rl = right_mults(pp.op(ops::ltri));
  return {pp.dim(), dual_map(lr) - dual_map(rl), -dual_map(rl), dual_map(left_mults(pp.op(ops::bracket)))};
}

PPRepSpec adjoint_pp_rep(const AlgebraSpec& pp) {
  const Tensor3& rt = pp.op(ops::rtri);
  const Tensor3& lt = pp.op(ops::ltri);
  return {pp.dim(), left_mults(rt), right_mults(rt), left_mults(lt), right_mults(lt),
          left_mults(pp.op(ops::bracket))};
}

PPRepSpec coadjoint_pp_rep(const AlgebraSpec& pp) {
  const Tensor3& rt = pp.op(ops::rtri);
  const Tensor3& lt = pp.op(ops::ltri);
  Tensor3 diamond = lt + rt - lt.swapped() - rt.swapped();
  Tensor3 bullet = rt - lt.swapped();
  Tensor3 circ = rt + lt;
  return {pp.dim(),
          dual_map(left_mults(diamond)),
          dual_map(right_mults(rt)),
          dual_map(right_mults(bullet)),
          -dual_map(right_mults(circ)),
          dual_map(left_mults(pp.op(ops::bracket)))};
}

PPRepSpec pre_pp_rep(const AlgebraSpec& a) {
  return {a.dim(), left_mults(a.op(ops::se)), right_mults(a.op(ops::ne)), left_mults(a.op(ops::sw)),
          right_mults(a.op(ops::nw)), left_mults(a.op(ops::dot))};
}

CheckReport check_invariant_form(const AlgebraSpec& alg, const BilinearForm& b) {
  require_form_shape(b, alg.dim());
  require(check_post_lie(alg));
  Product o(alg.op(ops::circ));
  Product br(alg.op(ops::bracket));
  const auto e = basis_vectors(alg.dim());
  ReportBuilder rb("invariant form");
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    rb.expect_equal("lie-invariance", {i, j, k}, {b(br(x, y), z)}, {b(x, br(y, z))});
    rb.expect_equal("cocycle", {i, j, k}, {b(o(x, y), z) - b(x, o(y, z))}, {b(o(y, x), z) - b(y, o(x, z))});
  });
  return rb.finish();
}

CheckReport check_gph(const AlgebraSpec& alg, const BilinearForm& b) {
  require_form_shape(b, alg.dim());
  ReportBuilder rb("generalized pseudo-Hessian form");
  const Matrix& m = b.matrix();
  for_pairs(alg.dim(), [&](std::size_t i, std::size_t j) {
    if (i < j) rb.expect_equal("symmetric", {i, j}, {m(i, j)}, {m(j, i)});
  });
  rb.expect_true("nondegenerate", !mat_det(m).is_zero());
  rb.merge(check_invariant_form(alg, b));
  return rb.finish();
}

CheckReport check_left_invariant(const AlgebraSpec& alg, const BilinearForm& b) {
  require_form_shape(b, alg.dim());
  require(check_post_lie(alg));
  Product o(alg.op(ops::circ));
  Product br(alg.op(ops::bracket));
  const auto e = basis_vectors(alg.dim());
  ReportBuilder rb("left-invariant form");
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    rb.expect_equal("lie-invariance", {i, j, k}, {b(br(x, y), z)}, {b(x, br(y, z))});
    rb.expect_equal("left-invariance", {i, j, k}, {b(o(x, y), z)}, {-b(y, o(x, z))});
  });
  return rb.finish();
}

std::pair<BilinearForm, CheckReport> omega_cocycle(const AlgebraSpec& alg, const BilinearForm& b) {
  require(check_invariant_form(alg, b));
  BilinearForm omega(b.matrix() - b.matrix().transpose());
  AlgebraSpec sub = sub_adjacent_lie(alg);
  Product curly(sub.op(ops::bracket));
  const auto e = basis_vectors(alg.dim());
  ReportBuilder rb("2-cocycle of the sub-adjacent Lie algebra");
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    rb.expect_zero("cyclic-cocycle", {i, j, k}, {omega(curly(x, y), z) + omega(curly(y, z), x) + omega(curly(z, x), y)});
  });
  return {omega, rb.finish()};
}

CheckReport check_rota_baxter_lie(const AlgebraSpec& lie, const LinearMap& p, const Scalar& weight) {
  if (p.source_dim() != lie.dim() || p.target_dim() != lie.dim()) throw DimensionError("operator shape does not match algebra");
  require(check_lie(lie));
  Product br(lie.op(ops::bracket));
  const auto e = basis_vectors(lie.dim());
  ReportBuilder rb("Rota-Baxter operator of weight " + weight.str());
  for_pairs(lie.dim(), [&](std::size_t i, std::size_t j) {
    const Vector &x = e[i], &y = e[j];
    rb.expect_equal("rota-baxter", {i, j}, br(p(x), p(y)), p(br(p(x), y) + br(x, p(y)) + weight * br(x, y)));
  });
  return rb.finish();
}

AlgebraSpec induced_post_lie(const AlgebraSpec& lie, const LinearMap& p) {
  require(check_rota_baxter_lie(lie, p, Scalar(1)));
  const Tensor3& br = lie.op(ops::bracket);
  AlgebraSpec out = empty_like(lie);
  out.set(ops::circ, tabulate(lie.dim(), [&](const Vector& x, const Vector& y) { return br.apply(p(x), y); }));
  out.set(ops::bracket, br);
  return out;
}

CheckReport check_post_lie_rep(const AlgebraSpec& alg, const RepSpec& rep) {
  require_rep_shape(rep, alg.dim());
  require(check_post_lie(alg));
  Product o(alg.op(ops::circ));
  Product br(alg.op(ops::bracket));
  AlgebraSpec sub = sub_adjacent_lie(alg);
  Product curly(sub.op(ops::bracket));
  const auto e = basis_vectors(alg.dim());
  auto l = [&](const Vector& x) { return rep.l_of(x); };
  auto r = [&](const Vector& x) { return rep.r_of(x); };
  auto rho = [&](const Vector& x) { return rep.rho_of(x); };
  ReportBuilder rb("post-Lie representation");
  for_pairs(alg.dim(), [&](std::size_t i, std::size_t j) {
    const Vector &x = e[i], &y = e[j];
    std::vector<std::size_t> w{i, j};
    rb.expect_equal("rep.lie", w, rho(br(x, y)), commutator(rho(x), rho(y)));
    rb.expect_equal("rep.1", w, rho(o(x, y)), l(x) * rho(y) - rho(y) * l(x));
    rb.expect_equal("rep.2", w, r(br(x, y)), rho(x) * r(y) - rho(y) * r(x));
    rb.expect_equal("rep.3", w, r(o(x, y)), l(x) * r(y) - r(y) * (l(x) - r(x) + rho(x)));
    rb.expect_equal("rep.4", w, l(curly(x, y)), commutator(l(x), l(y)));
  });
  return rb.finish();
}

CheckReport check_pp_rep(const AlgebraSpec& pp, const PPRepSpec& rep) {
  require_rep_shape(rep, pp.dim());
  require(check_pp_post_lie(pp));
  Product rt(pp.op(ops::rtri));
  Product lt(pp.op(ops::ltri));
  Product br(pp.op(ops::bracket));
  const std::size_t m = rep.dim;
  auto lr = [&](const Vector& x) { return combine(rep.l_rtri, x, m); };
  auto rr = [&](const Vector& x) { return combine(rep.r_rtri, x, m); };
  auto ll = [&](const Vector& x) { return combine(rep.l_ltri, x, m); };
  auto rl = [&](const Vector& x) { return combine(rep.r_ltri, x, m); };
  auto rho = [&](const Vector& x) { return combine(rep.rho, x, m); };
  auto o = [&](const Vector& x, const Vector& y) { return rt(x, y) + lt(x, y); };
  auto bullet = [&](const Vector& x, const Vector& y) { return rt(x, y) - lt(y, x); };
  auto curly = [&](const Vector& x, const Vector& y) { return o(x, y) - o(y, x) + br(x, y); };
  const auto e = basis_vectors(pp.dim());
  ReportBuilder rb("pp-post-Lie representation");
  for_pairs(pp.dim(), [&](std::size_t i, std::size_t j) {
    const Vector &x = e[i], &y = e[j];
    std::vector<std::size_t> w{i, j};
    rb.expect_equal("pp-rep.lie", w, rho(br(x, y)), commutator(rho(x), rho(y)));
    rb.expect_equal("pp-rep.1", w, rl(br(x, y)), rl(x) * rho(y) - rl(y) * rho(x));
    rb.expect_equal("pp-rep.2", w, ll(x) * rho(y), ll(br(x, y)) - rl(y) * rho(x));
    rb.expect_zero("pp-rep.3a", w, rho(x) * (ll(y) + rl(y)));
    rb.expect_zero("pp-rep.3b", w, ll(br(x, y)) + rl(br(x, y)));
    rb.expect_zero("pp-rep.3c", w, (ll(x) + rl(x)) * rho(y));
    rb.expect_zero("pp-rep.3d", w, rho(lt(x, y) + lt(y, x)));
    rb.expect_equal("pp-rep.4", w, (lr(x) - rl(x)) * rho(y), rho(o(x, y)) + rho(y) * (lr(x) - rl(x)));
    rb.expect_equal("pp-rep.5", w, rr(br(x, y)) - ll(br(x, y)),
                    rho(x) * (rr(y) - ll(y)) - rho(y) * (rr(x) - ll(x)));
    rb.expect_equal("pp-rep.6", w, (lr(x) + rho(x)) * ll(y), ll(bullet(x, y)) + ll(y) * (lr(x) + ll(x)));
    rb.expect_equal("pp-rep.7", w, (lr(x) + rho(x)) * rl(y), rl(o(x, y)) + rl(y) * (lr(x) - rl(x)));
    rb.expect_equal("pp-rep.8", w, rr(lt(x, y)),
                    rl(y) * (rr(x) - ll(x)) + ll(x) * (rr(y) + rl(y)) + rho(lt(x, y)));
    rb.expect_equal("pp-rep.9", w, rr(rt(x, y)),
                    lr(x) * rr(y) - rr(y) * (lr(x) + ll(x) - rr(x) - rl(x) + rho(x)) - rho(x) * rl(y) -
                        rl(y) * rho(x) - rho(lt(x, y)));
    rb.expect_equal("pp-rep.10", w, lr(curly(x, y)),
                    lr(x) * lr(y) - lr(y) * lr(x) + rho(y) * ll(x) - rho(x) * ll(y) - ll(br(x, y)));
  });
  return rb.finish();
}

PPRepSpec dual_pp_rep(const PPRepSpec& rep) {
  auto lr = dual_map(rep.l_rtri), rr = dual_map(rep.r_rtri);
  auto ll = dual_map(rep.l_ltri), rl = dual_map(rep.r_ltri);
  return {rep.dim, lr - rr + ll - rl, rr, rr - ll, -(rr + rl), dual_map(rep.rho)};
}

PPRepSpec dual_pp_rep(const AlgebraSpec& pp, const PPRepSpec& rep) {
  require(check_pp_rep(pp, rep));
  return dual_pp_rep(rep);
}

CheckReport check_o_operator_pp(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t) {
  require_rep_shape(rep, pp.dim());
  if (t.source_dim() != rep.dim || t.target_dim() != pp.dim()) throw DimensionError("operator must map V to A");
  require(check_pp_rep(pp, rep));
  return o_operator_pp_identities(pp, rep, t);
}

CheckReport o_operator_pp_identities(const AlgebraSpec& pp, const PPRepSpec& rep, const LinearMap& t) {
  require_rep_shape(rep, pp.dim());
  if (t.source_dim() != rep.dim || t.target_dim() != pp.dim()) throw DimensionError("operator must map V to A");
  Product rt(pp.op(ops::rtri));
  Product lt(pp.op(ops::ltri));
  Product br(pp.op(ops::bracket));
  const std::size_t m = rep.dim;
  const auto e = basis_vectors(m);
  ReportBuilder rb("O-operator");
  for_pairs(m, [&](std::size_t i, std::size_t j) {
    const Vector &u = e[i], &v = e[j];
    Vector tu = t(u), tv = t(v);
    std::vector<std::size_t> w{i, j};
    rb.expect_equal("o-op.1", w, rt(tu, tv), t(combine(rep.l_rtri, tu, m) * v + combine(rep.r_rtri, tv, m) * u));
    rb.expect_equal("o-op.2", w, lt(tu, tv), t(combine(rep.l_ltri, tu, m) * v + combine(rep.r_ltri, tv, m) * u));
    rb.expect_equal("o-op.3", w, br(tu, tv), t(combine(rep.rho, tu, m) * v - combine(rep.rho, tv, m) * u));
  });
  return rb.finish();
}

namespace {

struct DualRep {
  std::vector<Matrix> l, r, rho;
};

DualRep dualize(const RepSpec& rep) { return {dual_map(rep.l), dual_map(rep.r), dual_map(rep.rho)}; }

}  // namespace

CheckReport check_dual_p_o_operator(const AlgebraSpec& alg, const RepSpec& rep, const LinearMap& t) {
  require_rep_shape(rep, alg.dim());
  if (t.source_dim() != rep.dim || t.target_dim() != alg.dim()) throw DimensionError("operator must map V* to A");
  require(check_post_lie_rep(alg, rep));
  Product o(alg.op(ops::circ));
  Product br(alg.op(ops::bracket));
  const std::size_t m = rep.dim;
  DualRep d = dualize(rep);
  const auto e = basis_vectors(m);
  ReportBuilder rb("dual p-O-operator");
  for_pairs(m, [&](std::size_t i, std::size_t j) {
    const Vector &u = e[i], &v = e[j];
    Vector tu = t(u), tv = t(v);
    std::vector<std::size_t> w{i, j};
    rb.expect_equal("dual-p-o.1", w, o(tu, tv), t((combine(d.l, tu, m) - combine(d.r, tu, m)) * v - combine(d.r, tv, m) * u));
    rb.expect_equal("dual-p-o.2a", w, br(tu, tv), t(combine(d.rho, tu, m) * v));
    rb.expect_equal("dual-p-o.2b", w, br(tu, tv), -t(combine(d.rho, tv, m) * u));
  });
  return rb.finish();
}

CheckReport check_strong(const AlgebraSpec& alg, const RepSpec& rep, const LinearMap& t) {
  require(check_dual_p_o_operator(alg, rep, t));
  Product br(alg.op(ops::bracket));
  const std::size_t m = rep.dim;
  DualRep d = dualize(rep);
  auto rs = [&](const Vector& x) { return combine(d.r, x, m); };
  auto rhos = [&](const Vector& x) { return combine(d.rho, x, m); };
  const auto e = basis_vectors(m);
  ReportBuilder rb("strong dual p-O-operator");
  for_pairs(m, [&](std::size_t i, std::size_t j) {
    rb.expect_equal("strong.1", {i, j}, rhos(t(e[i])) * e[j], -(rhos(t(e[j])) * e[i]));
  });
  for_triples(m, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &u = e[i], &v = e[j], &w = e[k];
    Vector tu = t(u), tv = t(v), tw = t(w);
    std::vector<std::size_t> idx{i, j, k};
    rb.expect_zero("strong.2a", idx, rhos(tu) * (rs(tv) * w + rs(tw) * v));
    rb.expect_zero("strong.2b", idx, rs(br(tu, tw)) * v + rs(tv) * (rhos(tu) * w));
    rb.expect_zero("strong.3", idx, rhos(br(tu, tv)) * w + rhos(br(tv, tw)) * u + rhos(br(tw, tu)) * v);
  });
  return rb.finish();
}

AlgebraSpec pp_from_dual_p_o(const AlgebraSpec& alg, const RepSpec& rep, const LinearMap& t) {
  require(check_strong(alg, rep, t));
  const std::size_t m = rep.dim;
  DualRep d = dualize(rep);
  AlgebraSpec out(m, alg.field);
  for (auto& name : out.basis) name += "*";
  out.set(ops::rtri, tabulate(m, [&](const Vector& u, const Vector& v) {
            return (combine(d.l, t(u), m) - combine(d.r, t(u), m)) * v;
          }));
  out.set(ops::ltri, tabulate(m, [&](const Vector& u, const Vector& v) { return -(combine(d.r, t(v), m) * u); }));
  out.set(ops::bracket, tabulate(m, [&](const Vector& u, const Vector& v) { return combine(d.rho, t(u), m) * v; }));
  return out;
}

LinearMap form_to_dual(const BilinearForm& b) { return LinearMap(b.matrix().transpose()); }

}  // namespace postlie
