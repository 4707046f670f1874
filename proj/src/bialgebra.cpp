#include "postlie/bialgebra.hpp"

#include <functional>

#include "postlie/checks.hpp"
#include "postlie/error.hpp"

namespace postlie {

namespace {

const std::map<std::string, std::string>& co_to_op() {
  static const std::map<std::string, std::string> m = {
      {coops::delta_rtri, ops::rtri}, {coops::delta_ltri, ops::ltri}, {coops::Delta, ops::bracket}};
  return m;
}

std::string toggle_star(const std::string& name) {
  if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
  return name + "*";
}

std::vector<std::string> toggled(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(toggle_star(n));
  return out;
}

// c(i, j, k) = d(k, i, j), and back.
Tensor3 rotate_forward(const Tensor3& d) {
  const std::size_t n = d.dim();
  Tensor3 c(n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { c(i, j, k) = d(k, i, j); });
  return c;
}

Tensor3 rotate_back(const Tensor3& c) {
  const std::size_t n = c.dim();
  Tensor3 d(n);
  for_triples(n, [&](std::size_t k, std::size_t i, std::size_t j) { d(k, i, j) = c(i, j, k); });
  return d;
}

// Order-3 tensor helpers. t(i, j, k) is the coefficient of e_i (x) e_j (x) e_k.

Vector flatten(const Tensor3& t) {
  const std::size_t n = t.dim();
  Vector v;
  v.reserve(n * n * n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { v.push_back(t(i, j, k)); });
  return v;
}

// tau (x) id
Tensor3 swap12(const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { out(j, i, k) = t(i, j, k); });
  return out;
}

Tensor3 swap23(const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { out(i, k, j) = t(i, j, k); });
  return out;
}

// x (x) y (x) z -> y (x) z (x) x
Tensor3 cycle(const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { out(j, k, i) = t(i, j, k); });
  return out;
}

// Applies m in one tensor slot (0, 1 or 2).
Tensor3 act(const Matrix& m, int slot, const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Scalar& v = t(i, j, k);
    if (v.is_zero()) return;
    for (std::size_t a = 0; a < n; ++a) {
      switch (slot) {
        case 0:
          if (!m(a, i).is_zero()) out(a, j, k) += m(a, i) * v;
          break;
        case 1:
          if (!m(a, j).is_zero()) out(i, a, k) += m(a, j) * v;
          break;
        default:
          if (!m(a, k).is_zero()) out(i, j, a) += m(a, k) * v;
      }
    }
  });
  return out;
}

// (delta (x) id) t for a 2-tensor t.
Tensor3 co_first(const Tensor3& d, const Matrix& t) {
  const std::size_t n = d.dim();
  Tensor3 out(n);
  for_pairs(n, [&](std::size_t i, std::size_t j) {
    if (t(i, j).is_zero()) return;
    for_pairs(n, [&](std::size_t a, std::size_t b) { out(a, b, j) += t(i, j) * d(i, a, b); });
  });
  return out;
}

// (id (x) delta) t.
Tensor3 co_second(const Tensor3& d, const Matrix& t) {
  const std::size_t n = d.dim();
  Tensor3 out(n);
  for_pairs(n, [&](std::size_t i, std::size_t j) {
    if (t(i, j).is_zero()) return;
    for_pairs(n, [&](std::size_t a, std::size_t b) { out(i, a, b) += t(i, j) * d(j, a, b); });
  });
  return out;
}

// Comap table of tau delta.
Tensor3 co_flip(const Tensor3& d) {
  const std::size_t n = d.dim();
  Tensor3 out(n);
  for_triples(n, [&](std::size_t k, std::size_t i, std::size_t j) { out(k, j, i) = d(k, i, j); });
  return out;
}

// sum_i a_i (x) f(b_i) and sum_i f(a_i) (x) b_i for r = sum_i a_i (x) b_i.
Tensor3 lead(const Matrix& r, const std::function<Matrix(const Vector&)>& f) {
  const std::size_t n = r.rows();
  Tensor3 out(n);
  for (std::size_t q = 0; q < n; ++q) {
    Matrix fq = f(basis_vector(n, q));
    for (std::size_t p = 0; p < n; ++p) {
      if (r(p, q).is_zero()) continue;
      for_pairs(n, [&](std::size_t i, std::size_t j) { out(p, i, j) += r(p, q) * fq(i, j); });
    }
  }
  return out;
}

Tensor3 trail(const Matrix& r, const std::function<Matrix(const Vector&)>& f) {
  const std::size_t n = r.rows();
  Tensor3 out(n);
  for (std::size_t p = 0; p < n; ++p) {
    Matrix fp = f(basis_vector(n, p));
    for (std::size_t q = 0; q < n; ++q) {
      if (r(p, q).is_zero()) continue;
      for_pairs(n, [&](std::size_t i, std::size_t j) { out(i, j, q) += r(p, q) * fp(i, j); });
    }
  }
  return out;
}

Vector vec(const Matrix& m) { return m.entries(); }

Matrix unvec(const Vector& v, std::size_t n) { return Matrix(n, n, v); }

// (M (x) id) t and (id (x) M) t.
Matrix on_first(const Matrix& m, const Matrix& t) { return m * t; }
Matrix on_second(const Matrix& m, const Matrix& t) { return t * m.transpose(); }

struct PPTables {
  Tensor3 rt, lt, br, circ, bullet, diamond;

  explicit PPTables(const AlgebraSpec& pp)
      : rt(pp.op(ops::rtri)),
        lt(pp.op(ops::ltri)),
        br(pp.op(ops::bracket)),
        circ(rt + lt),
        bullet(rt - lt.swapped()),
        diamond(lt + rt - lt.swapped() - rt.swapped()) {}
};

CheckReport pp_report_or_lie_failure(const AlgebraSpec& alg) {
  try {
    return check_pp_post_lie(alg);
  } catch (const PreconditionError& e) {
    ReportBuilder rb("pp-post-Lie algebra");
    rb.merge(e.report(), "lie.");
    return rb.finish();
  }
}

void require_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimensions differ");
}

}  // namespace

CoalgebraSpec::CoalgebraSpec(std::size_t n, Field f) : field(f), basis(default_basis(n)) {}

const Tensor3& CoalgebraSpec::comap(const std::string& name) const {
  auto it = comaps.find(name);
  if (it == comaps.end()) throw UnknownOperation(name);
  return it->second;
}

void CoalgebraSpec::set(const std::string& name, Tensor3 d) {
  if (d.dim() != dim()) throw DimensionError("comap '" + name + "' has the wrong dimension");
  comaps[name] = std::move(d);
}

AlgebraSpec dualize(const CoalgebraSpec& co) {
  AlgebraSpec out;
  out.field = co.field;
  out.basis = toggled(co.basis);
  for (const auto& [name, d] : co.comaps) {
    auto it = co_to_op().find(name);
    out.set(it == co_to_op().end() ? name : it->second, rotate_forward(d));
  }
  return out;
}

CoalgebraSpec dualize_alg(const AlgebraSpec& alg) {
  CoalgebraSpec out;
  out.field = alg.field;
  out.basis = toggled(alg.basis);
  for (const auto& [name, c] : alg.ops) {
    std::string co_name = name;
    for (const auto& [cn, on] : co_to_op())
      if (on == name) co_name = cn;
    out.set(co_name, rotate_back(c));
  }
  return out;
}

Tensor2 coapply(const Tensor3& d, const Vector& x) {
  const std::size_t n = d.dim();
  require_dims(x.size(), n, "coapply");
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero()) continue;
    for_pairs(n, [&](std::size_t i, std::size_t j) { m(i, j) += x[k] * d(k, i, j); });
  }
  return Tensor2(std::move(m));
}

CheckReport check_lie_coalgebra(const CoalgebraSpec& co) {
  AlgebraSpec dual(co.dim(), co.field);
  dual.set(ops::bracket, rotate_forward(co.comap(coops::Delta)));
  CheckReport rep = check_lie(dual);
  rep.subject = "Lie coalgebra";
  return rep;
}

CheckReport check_pp_coalgebra(const CoalgebraSpec& co, CoalgebraMode mode) {
  if (mode == CoalgebraMode::dual) {
    CheckReport rep = pp_report_or_lie_failure(dualize(co));
    rep.subject = "pp-post-Lie coalgebra";
    return rep;
  }

  const std::size_t n = co.dim();
  const Tensor3& dr = co.comap(coops::delta_rtri);
  const Tensor3& dl = co.comap(coops::delta_ltri);
  const Tensor3& dd = co.comap(coops::Delta);
  const Tensor3 dcirc = dr + dl;
  const Tensor3 dbullet = dr - co_flip(dl);
  const Tensor3 dl_sym = dl + co_flip(dl);

  ReportBuilder rb("pp-post-Lie coalgebra");
  for (std::size_t k = 0; k < n; ++k) {
    const Vector x = basis_vector(n, k);
    const std::vector<std::size_t> w{k};
    const Matrix rx = coapply(dr, x).matrix();
    const Matrix lx = coapply(dl, x).matrix();
    const Matrix Dx = coapply(dd, x).matrix();
    const Matrix cx = coapply(dcirc, x).matrix();
    const Matrix bx = coapply(dbullet, x).matrix();

    rb.expect_zero("co-lie.antisymmetry", w, Dx + Dx.transpose());
    Tensor3 jac = co_first(dd, Dx);
    rb.expect_zero("co-lie.jacobi", w, flatten(jac + cycle(jac) + cycle(cycle(jac))));

    Tensor3 a = co_second(dd, lx);
    rb.expect_equal("ldlc.1", w, flatten(a), flatten(co_first(dd, lx) + swap12(a)));

    rb.expect_zero("ldlc.2a", w, flatten(co_second(dl_sym, Dx)));
    rb.expect_zero("ldlc.2b", w, flatten(co_first(dd, lx + lx.transpose())));

    rb.expect_equal("ldlc.3", w, flatten(co_second(dd, bx)),
                    flatten(co_first(dcirc, Dx) + swap12(co_second(dbullet, Dx))));

    rb.expect_equal("ldlc.4", w, flatten(co_second(dl, rx)),
                    flatten(co_first(dbullet, lx) + swap12(co_second(dcirc, lx)) - co_second(dl, Dx)));

    auto one_minus_swap = [](const Tensor3& t) { return t - swap12(t); };
    rb.expect_equal("ldlc.5", w, flatten(one_minus_swap(co_first(dcirc, rx))),
                    flatten(one_minus_swap(co_second(dr, rx)) - co_first(dd, cx) -
                            one_minus_swap(co_second(dl, Dx))));
  }
  return rb.finish();
}

namespace {

void add_liebc(ReportBuilder& rb, const Tensor3& br, const Tensor3& dd) {
  const std::size_t n = br.dim();
  const auto e = basis_vectors(n);
  for_pairs(n, [&](std::size_t i, std::size_t j) {
    const Vector &x = e[i], &y = e[j];
    Matrix adx = br.left(x), ady = br.left(y);
    Matrix Dx = coapply(dd, x).matrix(), Dy = coapply(dd, y).matrix();
    rb.expect_equal("liebc", {i, j}, coapply(dd, br.apply(x, y)).matrix(),
                    on_first(adx, Dy) + on_second(adx, Dy) - on_first(ady, Dx) -
                        on_second(ady, Dx));
  });
}

}  // namespace

CheckReport check_lie_bialgebra(const AlgebraSpec& lie, const CoalgebraSpec& co) {
  require_dims(lie.dim(), co.dim(), "check_lie_bialgebra");
  ReportBuilder rb("Lie bialgebra");
  rb.merge(check_lie(lie), "alg.");
  rb.merge(check_lie_coalgebra(co), "coalg.");
  add_liebc(rb, lie.op(ops::bracket), co.comap(coops::Delta));
  return rb.finish();
}

CheckReport check_pp_bialgebra(const AlgebraSpec& pp, const CoalgebraSpec& co) {
  require_dims(pp.dim(), co.dim(), "check_pp_bialgebra");
  const std::size_t n = pp.dim();
  ReportBuilder rb("pp-post-Lie bialgebra");
  rb.merge(pp_report_or_lie_failure(pp), "alg.");
  rb.merge(check_pp_coalgebra(co), "coalg.");

  const PPTables t(pp);
  const Tensor3& dr = co.comap(coops::delta_rtri);
  const Tensor3& dl = co.comap(coops::delta_ltri);
  const Tensor3& dd = co.comap(coops::Delta);
  const Tensor3 dcirc = dr + dl;
  const Tensor3 dbullet = dr - co_flip(dl);
  add_liebc(rb, t.br, dd);

  auto d = [](const Tensor3& table, const Vector& v) { return coapply(table, v).matrix(); };
  const auto e = basis_vectors(n);
  for_pairs(n, [&](std::size_t i, std::size_t j) {
    const Vector &x = e[i], &y = e[j];
    const std::vector<std::size_t> w{i, j};
    const Matrix adx = t.br.left(x), ady = t.br.left(y);
    const Matrix Dx = d(dd, x), Dy = d(dd, y);
    const Matrix lx = d(dl, x), ly = d(dl, y);
    const Matrix rx = d(dr, x);
    const Matrix cx = d(dcirc, x), cy = d(dcirc, y);
    const Matrix bx = d(dbullet, x), by = d(dbullet, y);
    const Matrix Lcirc_x = t.circ.left(x), Lbul_x = t.bullet.left(x), Lbul_y = t.bullet.left(y);
    const Matrix Lcirc_y = t.circ.left(y);
    const Matrix Lrt_x = t.rt.left(x), Llt_x = t.lt.left(x), Llt_y = t.lt.left(y);
    const Matrix Rlt_x = t.lt.right(x), Rlt_y = t.lt.right(y);

    rb.expect_equal("dpsplb.1", w, d(dd, t.circ.apply(x, y)),
                    on_first(Lcirc_x, Dy) + on_second(Lbul_x, Dy) + on_second(ady, lx) + on_first(ady, lx));
    rb.expect_equal("dpsplb.2", w, d(dd, t.bullet.apply(x, y)),
                    on_first(Lbul_x, Dy) + on_second(Lbul_x, Dy) - on_second(ady, lx.transpose()) +
                        on_first(ady, lx));
    rb.expect_equal("dpsplb.3", w, d(dbullet, t.br.apply(x, y)),
                    on_second(adx, by) - on_second(ady, bx) + on_first(Rlt_x, Dy) - on_first(Rlt_y, Dx));
    rb.expect_equal("dpsplb.4", w, d(dcirc, t.br.apply(x, y)),
                    on_second(adx, cy) - on_second(ady, bx) + on_first(Rlt_x, Dy) + on_first(Llt_y, Dx));
    rb.expect_equal("dpsplb.5", w, d(dbullet, t.circ.apply(x, y)),
                    on_second(Lcirc_x, by) + on_first(Lrt_x + adx, by) - on_first(Rlt_y, lx.transpose()) +
                        on_second(t.circ.right(y), rx + Dx));
    rb.expect_equal("dpsplb.6", w, d(dcirc, t.bullet.apply(x, y)),
                    on_second(Lbul_x, cy) + on_first(Lrt_x + adx, cy) - on_first(Llt_y, lx) +
                        on_second(t.bullet.right(y), rx + Dx));
    Vector curly = t.circ.apply(x, y) - t.circ.apply(y, x) + t.br.apply(x, y);
    rb.expect_equal("dpsplb.7", w, d(dl, curly),
                    on_second(Lbul_x, ly) + on_first(Lcirc_x, ly) - on_second(Lbul_y, lx) - on_first(Lcirc_y, lx));
    Vector xly = t.lt.apply(x, y);
    Matrix cxy = d(dcirc, xly);
    rb.expect_equal("dpsplb.8", w, cxy - cxy.transpose() + d(dd, xly),
                    on_second(Llt_x, by) + on_second(Rlt_y, cx) - on_first(Llt_x, by.transpose()) -
                        on_first(Rlt_y, cx.transpose()));
  });
  return rb.finish();
}

Tensor3 cybe_C(const AlgebraSpec& alg, const Tensor2& r) {
  const Tensor3& br = alg.op(ops::bracket);
  const std::size_t n = br.dim();
  require_dims(r.dim(), n, "cybe_C");
  Tensor3 out(n);
  for_pairs(n, [&](std::size_t p, std::size_t q) {
    if (r(p, q).is_zero()) return;
    for_pairs(n, [&](std::size_t s, std::size_t u) {
      const Scalar c = r(p, q) * r(s, u);
      if (c.is_zero()) return;
      for (std::size_t k = 0; k < n; ++k) {
        if (!br(p, s, k).is_zero()) out(k, q, u) += c * br(p, s, k);
        if (!br(q, s, k).is_zero()) out(p, k, u) += c * br(q, s, k);
        if (!br(q, u, k).is_zero()) out(p, s, k) += c * br(q, u, k);
      }
    });
  });
  return out;
}

Tensor3 cybe_D(const AlgebraSpec& pp, const Tensor2& r) {
  const PPTables t(pp);
  const std::size_t n = t.rt.dim();
  require_dims(r.dim(), n, "cybe_D");
  Tensor3 out(n);
  // With r = sum r(p,q) e_p (x) e_q, the second copy indexed (s, u).
  for_pairs(n, [&](std::size_t p, std::size_t q) {
    if (r(p, q).is_zero()) return;
    for_pairs(n, [&](std::size_t s, std::size_t u) {
      const Scalar c = r(p, q) * r(s, u);
      if (c.is_zero()) return;
      for (std::size_t k = 0; k < n; ++k) {
        if (!t.lt(p, s, k).is_zero()) out(k, u, q) += c * t.lt(p, s, k);
        if (!t.bullet(q, s, k).is_zero()) out(p, k, u) += c * t.bullet(q, s, k);
        if (!t.circ(q, u, k).is_zero()) out(p, s, k) += c * t.circ(q, u, k);
      }
    });
  });
  return out;
}

CheckReport check_pppcybe(const AlgebraSpec& pp, const Tensor2& r) {
  const Tensor3 c = cybe_C(pp, r);
  const Tensor3 d = cybe_D(pp, r);
  ReportBuilder rb("PPP-CYBE");
  for_triples(c.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    rb.expect_zero("cybe.C", {i, j, k}, Vector{c(i, j, k)});
    rb.expect_zero("cybe.D", {i, j, k}, Vector{d(i, j, k)});
  });
  return rb.finish();
}

Tensor3 diamond_table(const AlgebraSpec& pp) { return PPTables(pp).diamond; }

namespace {

Matrix e_map(const PPTables& t, const Vector& x) {
  const Matrix id = Matrix::identity(x.size());
  return kron(t.rt.left(x), id) + kron(id, t.diamond.left(x));
}

Matrix f_map(const PPTables& t, const Vector& x) {
  const Matrix id = Matrix::identity(x.size());
  return kron(t.circ.left(x), id) + kron(id, t.bullet.left(x));
}

Matrix g_map(const PPTables& t, const Vector& x) {
  const Matrix id = Matrix::identity(x.size());
  return kron(t.br.left(x), id) + kron(id, t.br.left(x));
}

// X(x) s for every basis element x, as 2-tensors; X(v) s is then linear in v.
using MapFn = Matrix (*)(const PPTables&, const Vector&);

struct Applied {
  std::vector<Matrix> per_basis;
  Matrix operator()(const Vector& v) const {
    Matrix out(per_basis[0].rows(), per_basis[0].cols());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) out += v[k] * per_basis[k];
    return out;
  }
};

Applied applied(MapFn f, const PPTables& t, const Matrix& s) {
  const std::size_t n = s.rows();
  Applied a;
  for (std::size_t k = 0; k < n; ++k) a.per_basis.push_back(unvec(f(t, basis_vector(n, k)) * vec(s), n));
  return a;
}

}  // namespace

Matrix E_map(const AlgebraSpec& pp, const Vector& x) { return e_map(PPTables(pp), x); }
Matrix F_map(const AlgebraSpec& pp, const Vector& x) { return f_map(PPTables(pp), x); }
Matrix G_map(const AlgebraSpec& pp, const Vector& x) { return g_map(PPTables(pp), x); }

CoalgebraSpec cobrackets_from_r(const AlgebraSpec& pp, const Tensor2& r) {
  const std::size_t n = pp.dim();
  require_dims(r.dim(), n, "cobrackets_from_r");
  const Vector vr = vec(r.matrix());
  CoalgebraSpec co(n, pp.field);
  co.basis = pp.basis;
  const PPTables t(pp);
  Tensor3 dr(n), dl(n), dd(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector x = basis_vector(n, k);
    const Vector a = e_map(t, x) * vr;
    const Vector b = -(f_map(t, x) * vr);
    const Vector c = g_map(t, x) * vr;
    for_pairs(n, [&](std::size_t i, std::size_t j) {
      dr(k, i, j) = a[i * n + j];
      dl(k, i, j) = b[i * n + j];
      dd(k, i, j) = c[i * n + j];
    });
  }
  co.set(coops::delta_rtri, std::move(dr));
  co.set(coops::delta_ltri, std::move(dl));
  co.set(coops::Delta, std::move(dd));
  return co;
}

CheckReport check_quasitriangular_conditions(const AlgebraSpec& pp, const Tensor2& r_in) {
  const PPTables t(pp);
  const std::size_t n = pp.dim();
  require_dims(r_in.dim(), n, "check_quasitriangular_conditions");
  const Matrix& r = r_in.matrix();
  const Matrix s = r + r.transpose();
  const Tensor3 C = cybe_C(pp, r_in);
  const Tensor3 D = cybe_D(pp, r_in);
  // X(x)(r + tau r) as a 2-tensor, for X in {E, F, G}.
  const Applied Es = applied(e_map, t, s);
  const Applied Fs = applied(f_map, t, s);
  const Applied Gs = applied(g_map, t, s);
  auto one_minus_swap = [](const Tensor3& u) { return u - swap12(u); };

  // sum_i a_i (x) F(b_i)(r + tau r)
  const Tensor3 W = lead(r, Fs);
  const Tensor3 sD = swap23(D);

  ReportBuilder rb("quasitriangular conditions");
  const auto e = basis_vectors(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector& x = e[k];
    const std::vector<std::size_t> w{k};
    const Matrix adx = t.br.left(x);
    const Matrix Lcirc = t.circ.left(x), Lbul = t.bullet.left(x), Llt = t.lt.left(x), Rlt = t.lt.right(x);
    const Matrix Lrt = t.rt.left(x), Ldia = t.diamond.left(x), Rbul = t.bullet.right(x);
    const Matrix Fx = Fs(x), Gx = Gs(x), Ex = Es(x);

    rb.expect_zero("qclb.1", w, Gx);
    rb.expect_zero("qclb.2", w, flatten(act(adx, 0, C) + act(adx, 1, C) + act(adx, 2, C)));

    Tensor3 q1 = act(Lcirc, 0, C) + act(Lcirc, 1, C) + act(Lbul, 2, C) +
                 trail(r, [&](const Vector& a) { return on_first(t.br.left(a), Fx.transpose()); });
    rb.expect_zero("qcldl.1", w, flatten(q1));

    Tensor3 inner = W - D;
    Tensor3 q2 = act(adx, 0, inner + swap23(inner)) +
                 lead(r, [&](const Vector& b) { return Fs(t.br.apply(x, b)); });
    rb.expect_zero("qcldl.2", w, flatten(q2));

    rb.expect_zero("qcldl.3", w, flatten(act(Llt + Rlt, 2, C)));

    Tensor3 q4 = act(Llt, 0, C) + act(adx, 1, sD - W) - act(adx, 2, D) -
                 trail(r, [&](const Vector& a) { return on_first(t.lt.right(a), Gx); });
    rb.expect_zero("qcldl.4", w, flatten(q4));

    Tensor3 tail5 = W - trail(r, [&](const Vector& a) { return Fs(a).transpose(); }) - sD;
    Tensor3 q5 = act(adx + Llt, 0, W - sD) + act(Lcirc, 1, W - sD) + act(Lbul, 2, tail5) +
                 trail(r, [&](const Vector& a) { return on_first(t.lt.right(a), Fx.transpose()); }) -
                 trail(r, [&](const Vector& a) { return Fs(t.circ.apply(x, a)).transpose(); });
    rb.expect_zero("qcldl.5", w, flatten(q5));

    Tensor3 q6 = one_minus_swap(act(adx, 0, W - sD)) +
                 trail(r, [&](const Vector& a) { return on_second(t.rt.right(a), Ex); }) +
                 trail(r, [&](const Vector& a) { return on_second(t.circ.right(a), Gx); }) +
                 one_minus_swap(act(Ldia, 2, D)) - act(Rbul, 2, C) + one_minus_swap(act(Lrt, 0, D - swap12(D)));
    rb.expect_zero("qcldl.6", w, flatten(q6));

    rb.expect_zero("inv.E", w, Ex);
    rb.expect_zero("inv.F", w, Fx);
    rb.expect_zero("inv.G", w, Gx);
  }

  for_pairs(n, [&](std::size_t i, std::size_t j) {
    const Vector &x = e[i], &y = e[j];
    const std::vector<std::size_t> w{i, j};
    const Matrix adx = t.br.left(x), ady = t.br.left(y);
    const Matrix Fx = Fs(x), Fy = Fs(y), Ey = Es(y), Ex = Es(x);

    rb.expect_zero("cldl.1", w, on_first(adx, Fy));
    rb.expect_zero("cldl.2", w, Fs(t.br.apply(x, y)) + on_first(adx, Fy) - on_first(ady, Fx));
    rb.expect_zero("cldl.3", w,
                   Fs(t.circ.apply(x, y)) + on_second(t.circ.left(x), Fy) + on_first(adx + t.rt.left(x), Fy) -
                       on_first(t.lt.right(y), Fx.transpose()));
    Vector xly = t.lt.apply(x, y);
    Matrix le = on_first(t.lt.left(x), Ey);
    rb.expect_zero("cldl.4", w,
                   Es(xly) - Fs(xly) + le - le.transpose() + Gs(x) + on_second(t.lt.right(y), Fx - Ex));
  });
  return rb.finish();
}

LinearMap r_tilde(const Tensor2& r) { return LinearMap(r.matrix().transpose()); }

CheckReport operator_form_check(const AlgebraSpec& pp, const Tensor2& r) {
  const std::size_t n = pp.dim();
  require_dims(r.dim(), n, "operator_form_check");
  if (!r.is_antisymmetric()) {
    ReportBuilder pre("antisymmetric 2-tensor");
    pre.expect_zero("antisymmetry", {}, (r + r.tau()).matrix());
    throw PreconditionError(pre.finish());
  }
  const PPTables t(pp);
  const LinearMap rt = r_tilde(r);
  auto star = [](const Matrix& m) { return -m.transpose(); };
  ReportBuilder rb("operator form of the PPP-CYBE");
  const auto e = basis_vectors(n);
  for_pairs(n, [&](std::size_t p, std::size_t q) {
    const Vector &a = e[p], &b = e[q];
    const Vector ta = rt(a), tb = rt(b);
    const std::vector<std::size_t> w{p, q};
    rb.expect_equal("arod.1", w, t.rt.apply(ta, tb),
                    rt(star(t.diamond.left(ta)) * b + star(t.rt.right(tb)) * a));
    rb.expect_equal("arod.2", w, t.lt.apply(ta, tb),
                    rt(star(t.bullet.right(ta)) * b - star(t.circ.right(tb)) * a));
    rb.expect_equal("arod.3", w, t.br.apply(ta, tb),
                    rt(star(t.br.left(ta)) * b - star(t.br.left(tb)) * a));
  });
  return rb.finish();
}

}  // namespace postlie
