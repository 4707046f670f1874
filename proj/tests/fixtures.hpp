// Hand-entered sl(2,C) tables used across the test suites.
#pragma once

#include <string>
#include <vector>

#include "postlie/algebra.hpp"
#include "postlie/matrix.hpp"

namespace fixtures {

using postlie::AlgebraSpec;
using postlie::Matrix;
using postlie::Scalar;
using postlie::Tensor3;

struct Entry {
  int i, j, k;  // 1-based
  const char* value;
};

inline Tensor3 table(std::size_t n, const std::vector<Entry>& entries) {
  Tensor3 t(n);
  for (const auto& e : entries) t(e.i - 1, e.j - 1, e.k - 1) = Scalar::parse(e.value);
  return t;
}

/// Entries (row, col, value), 1-based.
struct MEntry {
  int i, j;
  const char* value;
};

inline Matrix matrix(std::size_t rows, std::size_t cols, const std::vector<MEntry>& entries) {
  Matrix m(rows, cols);
  for (const auto& e : entries) m(e.i - 1, e.j - 1) = Scalar::parse(e.value);
  return m;
}

inline Tensor3 sl2_bracket() {
  return table(3, {{1, 2, 3, "1"}, {2, 1, 3, "-1"}, {2, 3, 1, "1"}, {3, 2, 1, "-1"}, {3, 1, 2, "1"}, {1, 3, 2, "-1"}});
}

inline Matrix kappa() { return Scalar(-2) * Matrix::identity(3); }

// P(e1) = e1, P(e2) = -1/2 e2 + i/2 e3, P(e3) = -i/2 e2 - 1/2 e3; columns are images.
inline Matrix sl2_P() {
  return matrix(3, 3, {{1, 1, "1"}, {2, 2, "-1/2"}, {3, 2, "1/2i"}, {2, 3, "-1/2i"}, {3, 3, "-1/2"}});
}

inline Tensor3 sl2_circ() {
  return table(3, {{1, 2, 3, "1"},
                   {1, 3, 2, "-1"},
                   {2, 1, 2, "1/2i"},
                   {2, 1, 3, "1/2"},
                   {2, 2, 1, "-1/2i"},
                   {2, 3, 1, "-1/2"},
                   {3, 1, 2, "-1/2"},
                   {3, 1, 3, "1/2i"},
                   {3, 2, 1, "1/2"},
                   {3, 3, 1, "-1/2i"}});
}

inline Tensor3 sl2_rtri() {
  return table(3, {{1, 2, 2, "1/2i"},
                   {1, 2, 3, "1/2"},
                   {1, 3, 2, "-1/2"},
                   {1, 3, 3, "1/2i"},
                   {2, 1, 3, "1"},
                   {2, 2, 1, "-1/2i"},
                   {2, 3, 1, "-5/2"},
                   {3, 1, 2, "-1"},
                   {3, 2, 1, "5/2"},
                   {3, 3, 1, "-1/2i"}});
}

inline Tensor3 sl2_ltri() {
  return table(3, {{1, 2, 2, "-1/2i"},
                   {1, 2, 3, "1/2"},
                   {1, 3, 2, "-1/2"},
                   {1, 3, 3, "-1/2i"},
                   {2, 1, 2, "1/2i"},
                   {2, 1, 3, "-1/2"},
                   {2, 3, 1, "2"},
                   {3, 1, 2, "1/2"},
                   {3, 1, 3, "1/2i"},
                   {3, 2, 1, "-2"}});
}

inline AlgebraSpec sl2_lie() {
  AlgebraSpec a(3);
  a.set("bracket", sl2_bracket());
  return a;
}

inline AlgebraSpec sl2_postlie() {
  AlgebraSpec a = sl2_lie();
  a.set("circ", sl2_circ());
  return a;
}

inline AlgebraSpec sl2_pp() {
  AlgebraSpec a = sl2_lie();
  a.set("rtri", sl2_rtri());
  a.set("ltri", sl2_ltri());
  return a;
}

// P(e1) = e1, P(e2) = P(e3) = 0.
inline Matrix final_P() { return matrix(3, 3, {{1, 1, "1"}}); }

inline AlgebraSpec final_prepp() {
  AlgebraSpec a(3);
  a.set("se", table(3, {{1, 2, 2, "1/2i"}, {1, 2, 3, "1/2"}, {1, 3, 2, "-1/2"}, {1, 3, 3, "1/2i"}}));
  a.set("ne", table(3, {{2, 1, 3, "1"}, {3, 1, 2, "-1"}}));
  a.set("sw", table(3, {{1, 2, 2, "-1/2i"}, {1, 2, 3, "1/2"}, {1, 3, 2, "-1/2"}, {1, 3, 3, "-1/2i"}}));
  a.set("nw", table(3, {{2, 1, 2, "1/2i"}, {2, 1, 3, "-1/2"}, {3, 1, 2, "1/2"}, {3, 1, 3, "1/2i"}}));
  a.set("dot", table(3, {{1, 2, 3, "1"}, {1, 3, 2, "-1"}}));
  return a;
}

inline AlgebraSpec final_sub_adjacent() {
  AlgebraSpec a(3);
  a.set("rtri", table(3, {{1, 2, 2, "1/2i"}, {1, 2, 3, "1/2"}, {1, 3, 2, "-1/2"}, {1, 3, 3, "1/2i"},
                          {2, 1, 3, "1"}, {3, 1, 2, "-1"}}));
  a.set("ltri", table(3, {{1, 2, 2, "-1/2i"}, {1, 2, 3, "1/2"}, {1, 3, 2, "-1/2"}, {1, 3, 3, "-1/2i"},
                          {2, 1, 2, "1/2i"}, {2, 1, 3, "-1/2"}, {3, 1, 2, "1/2"}, {3, 1, 3, "1/2i"}}));
  a.set("bracket", table(3, {{1, 2, 3, "1"}, {2, 1, 3, "-1"}, {1, 3, 2, "-1"}, {3, 1, 2, "1"}}));
  return a;
}

// Basis e1 e2 e3 e1* e2* e3*, indices 4..6 for the starred elements.
inline AlgebraSpec ahat() {
  AlgebraSpec a(6);
  a.basis = {"e1", "e2", "e3", "e1*", "e2*", "e3*"};
  a.set("rtri", table(6, {{1, 2, 2, "1/2i"}, {1, 2, 3, "1/2"}, {1, 3, 2, "-1/2"}, {1, 3, 3, "1/2i"},
                          {2, 1, 3, "1"}, {3, 1, 2, "-1"},
                          {1, 5, 5, "1/2i"}, {1, 5, 6, "1/2"}, {1, 6, 5, "-1/2"}, {1, 6, 6, "1/2i"},
                          {5, 1, 6, "1"}, {6, 1, 5, "-1"}}));
  a.set("ltri", table(6, {{1, 2, 2, "-1/2i"}, {1, 2, 3, "1/2"}, {1, 3, 2, "-1/2"}, {1, 3, 3, "-1/2i"},
                          {2, 1, 2, "1/2i"}, {2, 1, 3, "-1/2"}, {3, 1, 2, "1/2"}, {3, 1, 3, "1/2i"},
                          {1, 5, 5, "-1/2i"}, {1, 5, 6, "1/2"}, {1, 6, 5, "-1/2"}, {1, 6, 6, "-1/2i"},
                          {5, 1, 5, "1/2i"}, {5, 1, 6, "-1/2"}, {6, 1, 5, "1/2"}, {6, 1, 6, "1/2i"}}));
  a.set("bracket", table(6, {{1, 2, 3, "1"}, {2, 1, 3, "-1"}, {1, 3, 2, "-1"}, {3, 1, 2, "1"},
                             {1, 5, 6, "1"}, {5, 1, 6, "-1"}, {1, 6, 5, "-1"}, {6, 1, 5, "1"}}));
  return a;
}

// r = sum_i (ei* (x) ei - ei (x) ei*).
inline Matrix r6() {
  Matrix r(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    r(3 + i, i) = 1;
    r(i, 3 + i) = -1;
  }
  return r;
}

/// Cobracket tables d(k, i, j): coefficient of ei (x) ej in delta(ek).
struct Cobrackets {
  Tensor3 delta_rtri, delta_ltri, Delta;
};

inline Cobrackets final_cobrackets() {
  Cobrackets c;
  // delta_rtri(e2) = e1* (x) (i/2 e2 - 1/2 e3) - e3 (x) e1*
  // delta_rtri(e3) = e2 (x) e1* + e1* (x) (1/2 e2 + i/2 e3)
  std::vector<Entry> r = {{2, 4, 2, "1/2i"}, {2, 4, 3, "-1/2"}, {2, 3, 4, "-1"},
                          {3, 2, 4, "1"},    {3, 4, 2, "1/2"},  {3, 4, 3, "1/2i"}};
  // delta_ltri(e2) = e1* (x) (i/2 e2 + 1/2 e3) - (i/2 e2 + 1/2 e3) (x) e1*
  // delta_ltri(e3) = (1/2 e2 - i/2 e3) (x) e1* + e1* (x) (i/2 e3 - 1/2 e2)
  std::vector<Entry> l = {{2, 4, 2, "1/2i"}, {2, 4, 3, "1/2"}, {2, 2, 4, "-1/2i"}, {2, 3, 4, "-1/2"},
                          {3, 2, 4, "1/2"},  {3, 3, 4, "-1/2i"}, {3, 4, 3, "1/2i"}, {3, 4, 2, "-1/2"}};
  // Delta(e2) = e3 (x) e1* - e1* (x) e3, Delta(e3) = e1* (x) e2 - e2 (x) e1*
  std::vector<Entry> d = {{2, 3, 4, "1"}, {2, 4, 3, "-1"}, {3, 4, 2, "1"}, {3, 2, 4, "-1"}};
  // The starred copies keep e1* and send e2, e3 to e2*, e3*.
  auto with_starred = [](std::vector<Entry> es) {
    auto star = [](int x) { return x == 4 ? 4 : x + 3; };
    std::size_t count = es.size();
    for (std::size_t t = 0; t < count; ++t) es.push_back({star(es[t].i), star(es[t].j), star(es[t].k), es[t].value});
    return es;
  };
  r = with_starred(r);
  l = with_starred(l);
  d = with_starred(d);
  c.delta_rtri = table(6, r);
  c.delta_ltri = table(6, l);
  c.Delta = table(6, d);
  return c;
}

}  // namespace fixtures
