#include "postlie/checks.hpp"

namespace postlie {

namespace {

void require_lie(const AlgebraSpec& alg, const std::string& bracket) {
  CheckReport r = check_lie(alg, bracket);
  if (!r.passed) throw PreconditionError("'" + bracket + "' is not a Lie bracket", r);
}

}  // namespace

AlgebraSpec empty_like(const AlgebraSpec& alg) {
  AlgebraSpec out;
  out.field = alg.field;
  out.basis = alg.basis;
  return out;
}

CheckReport check_lie(const AlgebraSpec& alg, const std::string& bracket) {
  Product br(alg.op(bracket));
  const auto e = basis_vectors(alg.dim());
  ReportBuilder rb("Lie algebra (" + bracket + ")");
  for_pairs(alg.dim(), [&](std::size_t i, std::size_t j) {
    rb.expect_equal("antisymmetry", {i, j}, br(e[i], e[j]), -br(e[j], e[i]));
  });
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    rb.expect_zero("jacobi", {i, j, k}, br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)));
  });
  return rb.finish();
}

CheckReport check_pre_lie(const AlgebraSpec& alg, const std::string& op) {
  Product m(alg.op(op));
  const auto e = basis_vectors(alg.dim());
  ReportBuilder rb("pre-Lie algebra (" + op + ")");
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    rb.expect_equal("left-symmetry", {i, j, k}, m(m(x, y), z) - m(x, m(y, z)), m(m(y, x), z) - m(y, m(x, z)));
  });
  return rb.finish();
}

CheckReport check_post_lie(const AlgebraSpec& alg, const std::string& circ, const std::string& bracket) {
  Product o(alg.op(circ));
  Product br(alg.op(bracket));
  require_lie(alg, bracket);
  const auto e = basis_vectors(alg.dim());
  ReportBuilder rb("post-Lie algebra (" + circ + ", " + bracket + ")");
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    rb.expect_equal("post-lie.1", {i, j, k}, o(x, br(y, z)), br(o(x, y), z) + br(y, o(x, z)));
    rb.expect_equal("post-lie.2", {i, j, k}, o(o(x, y) - o(y, x) + br(x, y), z), o(x, o(y, z)) - o(y, o(x, z)));
  });
  return rb.finish();
}

CheckReport check_pp_post_lie(const AlgebraSpec& alg) {
  Product rt(alg.op(ops::rtri));
  Product lt(alg.op(ops::ltri));
  Product br(alg.op(ops::bracket));
  require_lie(alg, ops::bracket);
  const auto e = basis_vectors(alg.dim());
  auto curly = [&](const Vector& x, const Vector& y) {
    return rt(x, y) + lt(x, y) - rt(y, x) - lt(y, x) + br(x, y);
  };
  ReportBuilder rb("pp-post-Lie algebra");
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    std::vector<std::size_t> w{i, j, k};
    rb.expect_equal("pp.1", w, lt(x, br(y, z)), lt(br(x, y), z) + lt(br(z, x), y));
    Vector a = br(x, lt(y, z) + lt(z, y));
    Vector b = lt(br(x, z), y) + lt(y, br(x, z));
    rb.expect_zero("pp.2a", w, a);
    rb.expect_zero("pp.2b", w, b);
    rb.expect_equal("pp.2c", w, a, b);
    rb.expect_equal("pp.3", w, rt(x, br(y, z)) - lt(br(y, z), x), br(rt(x, y) + lt(x, y), z) + br(y, rt(x, z) - lt(z, x)));
    rb.expect_equal("pp.4", w, rt(x, lt(y, z)),
                    lt(rt(x, y) - lt(y, x), z) + lt(y, rt(x, z) + lt(x, z)) - br(x, lt(y, z)));
    rb.expect_equal("pp.5", w, rt(curly(x, y), z),
                    rt(x, rt(y, z)) - rt(y, rt(x, z)) + br(y, lt(x, z)) - br(x, lt(y, z)) - lt(br(x, y), z));
  });
  return rb.finish();
}

CheckReport check_l_dendriform(const AlgebraSpec& alg) {
  Product rt(alg.op(ops::rtri));
  Product lt(alg.op(ops::ltri));
  const auto e = basis_vectors(alg.dim());
  ReportBuilder rb("L-dendriform algebra");
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    std::vector<std::size_t> w{i, j, k};
    rb.expect_equal("l-dendriform.1", w, lt(rt(x, y) - lt(y, x), z), rt(x, lt(y, z)) - lt(y, rt(x, z) + lt(x, z)));
    rb.expect_equal("l-dendriform.2", w, rt(rt(x, y) + lt(x, y) - rt(y, x) - lt(y, x), z),
                    rt(x, rt(y, z)) - rt(y, rt(x, z)));
  });
  return rb.finish();
}

CheckReport check_pre_pp_post_lie(const AlgebraSpec& alg) {
  Product se(alg.op(ops::se));
  Product ne(alg.op(ops::ne));
  Product sw(alg.op(ops::sw));
  Product nw(alg.op(ops::nw));
  Product dot(alg.op(ops::dot));
  {
    CheckReport r = check_pre_lie(alg, ops::dot);
    if (!r.passed) throw PreconditionError("'dot' is not pre-Lie", r);
  }
  const auto e = basis_vectors(alg.dim());
  auto br = [&](const Vector& x, const Vector& y) { return dot(x, y) - dot(y, x); };
  auto rt = [&](const Vector& x, const Vector& y) { return se(x, y) + ne(x, y); };
  auto lt = [&](const Vector& x, const Vector& y) { return nw(x, y) + sw(x, y); };
  auto o = [&](const Vector& x, const Vector& y) { return rt(x, y) + lt(x, y); };
  auto vee = [&](const Vector& x, const Vector& y) { return se(x, y) + sw(x, y); };
  auto wedge = [&](const Vector& x, const Vector& y) { return ne(x, y) + nw(x, y); };
  auto curly = [&](const Vector& x, const Vector& y) { return o(x, y) - o(y, x) + br(x, y); };

  ReportBuilder rb("pre-pp-post-Lie algebra");
  for_triples(alg.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector &x = e[i], &y = e[j], &z = e[k];
    std::vector<std::size_t> w{i, j, k};
    rb.expect_equal("pre-pp.1", w, nw(x, br(y, z)), nw(dot(z, x), y) - nw(dot(y, x), z));
    rb.expect_equal("pre-pp.2", w, sw(x, dot(y, z)), sw(br(x, y), z) - nw(dot(x, z), y));
    rb.expect_zero("pre-pp.3a", w, dot(x, sw(y, z) + nw(z, y)));
    rb.expect_zero("pre-pp.3b", w, sw(x, dot(y, z)) + nw(dot(y, z), x));
    rb.expect_zero("pre-pp.4a", w, sw(br(x, y), z) + nw(z, br(x, y)));
    rb.expect_zero("pre-pp.4b", w, dot(lt(x, y) + lt(y, x), z));
    rb.expect_equal("pre-pp.5", w, vee(x, dot(y, z)), dot(o(x, y), z) + dot(y, vee(x, z)));
    rb.expect_equal("pre-pp.6", w, wedge(x, br(y, z)), dot(y, wedge(x, z)) - dot(z, wedge(x, y)));
    rb.expect_equal("pre-pp.7", w, se(x, sw(y, z)) + dot(x, sw(y, z)),
                    sw(y, vee(x, z)) + sw(se(x, y) + ne(x, y) - sw(y, x) - nw(y, x), z));
    rb.expect_equal("pre-pp.8", w, se(x, nw(y, z)) + dot(x, nw(y, z)), nw(y, o(x, z)) + nw(se(x, y) - nw(y, x), z));
    rb.expect_equal("pre-pp.9", w, ne(x, lt(y, z)) - dot(lt(y, z), x), sw(y, wedge(x, z)) + nw(ne(x, y) - sw(y, x), z));
    rb.expect_equal("pre-pp.10", w, se(x, ne(y, z)) - ne(y, rt(x, z)),
                    ne(vee(x, y) - wedge(y, x) + dot(x, y), z) + dot(x, nw(y, z)) + nw(dot(x, y), z) + dot(lt(x, z), y));
    rb.expect_equal("pre-pp.11", w, se(curly(x, y), z) + sw(br(x, y), z),
                    se(x, se(y, z)) - se(y, se(x, z)) + dot(y, sw(x, z)) - dot(x, sw(y, z)));
  });
  return rb.finish();
}

AlgebraSpec sub_adjacent_lie(const AlgebraSpec& alg) {
  require(check_post_lie(alg));
  const Tensor3& c = alg.op(ops::circ);
  AlgebraSpec out = empty_like(alg);
  out.set(ops::bracket, c - c.swapped() + alg.op(ops::bracket));
  return out;
}

AlgebraSpec opposite_post_lie(const AlgebraSpec& alg) {
  require(check_post_lie(alg));
  const Tensor3& br = alg.op(ops::bracket);
  AlgebraSpec out = empty_like(alg);
  out.set(ops::circ, alg.op(ops::circ) + br);
  out.set(ops::bracket, br.swapped());
  return out;
}

AlgebraSpec horizontal_post_lie(const AlgebraSpec& alg) {
  require(check_pp_post_lie(alg));
  AlgebraSpec out = empty_like(alg);
  out.set(ops::circ, alg.op(ops::rtri) + alg.op(ops::ltri));
  out.set(ops::bracket, alg.op(ops::bracket));
  return out;
}

AlgebraSpec vertical_post_lie(const AlgebraSpec& alg) {
  require(check_pp_post_lie(alg));
  AlgebraSpec out = empty_like(alg);
  out.set(ops::circ, alg.op(ops::rtri) - alg.op(ops::ltri).swapped());
  out.set(ops::bracket, alg.op(ops::bracket));
  return out;
}

AlgebraSpec transpose_pp(const AlgebraSpec& alg) {
  require(check_pp_post_lie(alg));
  AlgebraSpec out = empty_like(alg);
  out.set(ops::rtri, alg.op(ops::rtri));
  out.set(ops::ltri, -alg.op(ops::ltri).swapped());
  out.set(ops::bracket, alg.op(ops::bracket));
  return out;
}

AlgebraSpec sub_adjacent_pp(const AlgebraSpec& alg) {
  require(check_pre_pp_post_lie(alg));
  const Tensor3& dot = alg.op(ops::dot);
  AlgebraSpec out = empty_like(alg);
  out.set(ops::rtri, alg.op(ops::se) + alg.op(ops::ne));
  out.set(ops::ltri, alg.op(ops::sw) + alg.op(ops::nw));
  out.set(ops::bracket, dot - dot.swapped());
  return out;
}

}  // namespace postlie
