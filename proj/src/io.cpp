#include "postlie/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace postlie {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) l.tokens.push_back({line.substr(start, i - start), start + 1});
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& msg, const Line& l, const Token& t) {
  throw ParseError(msg, l.number, t.column);
}

std::size_t parse_count(const Line& l, const Token& t) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      t.text.size() > 9)
    fail("expected a non-negative integer, got '" + std::string(t.text) + "'", l, t);
  return std::stoul(std::string(t.text));
}

Scalar parse_value(const Line& l, const Token& t, Field field) {
  Scalar s;
  try {
    s = Scalar::parse(t.text);
  } catch (const ParseError& e) {
    std::size_t col = t.column + (e.column() > 0 ? e.column() - 1 : 0);
    throw ParseError(e.what(), l.number, col);
  }
  if (field == Field::Q && !s.is_real()) fail("imaginary scalar in a document over Q", l, t);
  return s;
}

std::vector<std::size_t> expected_shape(DocKind kind, std::size_t n) {
  switch (kind) {
    case DocKind::algebra:
    case DocKind::coalgebra:
      return {n, n, n};
    case DocKind::form:
    case DocKind::tensor2:
      return {n, n};
    default:
      return {};
  }
}

void expect_key(const Line& l, std::string_view key, std::size_t arity) {
  if (l.tokens[0].text != key) fail("expected '" + std::string(key) + "'", l, l.tokens[0]);
  if (arity != 0 && l.tokens.size() != arity + 1)
    fail("'" + std::string(key) + "' takes " + std::to_string(arity) + " value(s)", l, l.tokens[0]);
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '*' || c == '\'' || c == '-';
  });
}

}  // namespace

std::string kind_name(DocKind k) {
  switch (k) {
    case DocKind::algebra: return "algebra";
    case DocKind::form: return "form";
    case DocKind::map: return "map";
    case DocKind::tensor2: return "tensor2";
    case DocKind::coalgebra: return "coalgebra";
    case DocKind::bundle: return "bundle";
  }
  return "?";
}

DocKind parse_kind(std::string_view text) {
  for (DocKind k : {DocKind::algebra, DocKind::form, DocKind::map, DocKind::tensor2, DocKind::coalgebra,
                    DocKind::bundle})
    if (text == kind_name(k)) return k;
  throw ParseError("unknown document kind '" + std::string(text) + "'");
}

Array::Array(std::vector<std::size_t> s) : shape(std::move(s)) {
  std::size_t total = std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
  values.resize(total);
}

std::size_t Array::offset(const std::vector<std::size_t>& idx) const {
  if (idx.size() != shape.size()) throw DimensionError("index rank does not match array rank");
  std::size_t off = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= shape[a]) throw DimensionError("array index out of range");
    off = off * shape[a] + idx[a];
  }
  return off;
}

const Array& Document::table(const std::string& name) const {
  auto it = tables.find(name);
  if (it == tables.end()) throw DimensionError("document has no table '" + name + "'");
  return it->second;
}

Document parse_document(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  Document doc;
  std::size_t at = 0;
  auto next = [&](std::string_view what) -> const Line& {
    if (at >= lines.size()) {
      std::size_t last = lines.empty() ? 1 : lines.back().number;
      throw ParseError("unexpected end of document, expected " + std::string(what), last, 1);
    }
    return lines[at++];
  };

  {
    const Line& l = next("kind");
    expect_key(l, "kind", 1);
    try {
      doc.kind = parse_kind(l.tokens[1].text);
    } catch (const ParseError& e) {
      fail(e.what(), l, l.tokens[1]);
    }
  }
  {
    const Line& l = next("field");
    expect_key(l, "field", 1);
    try {
      doc.field = parse_field(l.tokens[1].text);
    } catch (const ParseError& e) {
      fail(e.what(), l, l.tokens[1]);
    }
  }
  {
    const Line& l = next("dim");
    expect_key(l, "dim", 1);
    doc.dim = parse_count(l, l.tokens[1]);
  }
  {
    const Line& l = next("basis");
    expect_key(l, "basis", 0);
    std::set<std::string_view> seen;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) {
      if (!valid_name(l.tokens[t].text)) fail("invalid basis name", l, l.tokens[t]);
      if (!seen.insert(l.tokens[t].text).second) fail("duplicate basis name", l, l.tokens[t]);
      doc.basis.emplace_back(l.tokens[t].text);
    }
    if (doc.basis.size() != doc.dim)
      fail("basis lists " + std::to_string(doc.basis.size()) + " names for dim " + std::to_string(doc.dim), l,
           l.tokens[0]);
  }

  while (at < lines.size()) {
    const Line& head = lines[at++];
    expect_key(head, "table", 0);
    if (head.tokens.size() < 3) fail("'table' needs a name and a shape", head, head.tokens[0]);
    const Token& name_tok = head.tokens[1];
    if (!valid_name(name_tok.text)) fail("invalid table name", head, name_tok);
    std::string name(name_tok.text);
    if (doc.tables.count(name)) fail("duplicate table '" + name + "'", head, name_tok);

    std::vector<std::size_t> shape;
    for (std::size_t t = 2; t < head.tokens.size(); ++t) shape.push_back(parse_count(head, head.tokens[t]));
    if (shape.size() > 3) fail("tables have at most three axes", head, head.tokens[5]);
    const auto want = expected_shape(doc.kind, doc.dim);
    if (!want.empty() && shape != want) fail("table shape does not match kind and dim", head, head.tokens[2]);
    if (doc.kind == DocKind::map && (shape.size() != 2 || shape[1] != doc.dim))
      fail("map tables must be (target dim) x dim", head, head.tokens[2]);

    Array arr(shape);
    std::vector<bool> filled(arr.size(), false);
    bool closed = false;
    while (at < lines.size()) {
      const Line& l = lines[at++];
      if (l.tokens[0].text == "end") {
        if (l.tokens.size() != 1) fail("'end' takes no values", l, l.tokens[1]);
        closed = true;
        break;
      }
      if (l.tokens.size() != shape.size() + 1)
        fail("entry needs " + std::to_string(shape.size()) + " indices and a value", l, l.tokens[0]);
      std::vector<std::size_t> idx;
      for (std::size_t a = 0; a < shape.size(); ++a) {
        std::size_t v = parse_count(l, l.tokens[a]);
        if (v < 1 || v > shape[a]) fail("index out of range", l, l.tokens[a]);
        idx.push_back(v - 1);
      }
      const std::size_t off = arr.offset(idx);
      if (filled[off]) fail("duplicate entry", l, l.tokens[0]);
      filled[off] = true;
      arr.values[off] = parse_value(l, l.tokens.back(), doc.field);
    }
    if (!closed) throw ParseError("table '" + name + "' is missing 'end'", head.number, head.tokens[0].column);
    doc.tables.emplace(std::move(name), std::move(arr));
  }
  return doc;
}

std::string format_document(const Document& doc) {
  std::ostringstream os;
  os << "kind " << kind_name(doc.kind) << '\n';
  os << "field " << field_name(doc.field) << '\n';
  os << "dim " << doc.dim << '\n';
  os << "basis";
  for (const auto& b : doc.basis) os << ' ' << b;
  os << '\n';
  for (const auto& [name, arr] : doc.tables) {
    os << "table " << name;
    for (std::size_t s : arr.shape) os << ' ' << s;
    os << '\n';
    std::vector<std::size_t> idx(arr.shape.size(), 0);
    for (std::size_t off = 0; off < arr.size(); ++off) {
      std::size_t rest = off;
      for (std::size_t a = arr.shape.size(); a-- > 0;) {
        idx[a] = rest % arr.shape[a];
        rest /= arr.shape[a];
      }
      if (arr.values[off].is_zero()) continue;
      for (std::size_t v : idx) os << v + 1 << ' ';
      os << arr.values[off].str() << '\n';
    }
    os << "end\n";
  }
  return os.str();
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_document(const std::filesystem::path& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << format_document(doc);
  if (!out) throw Error("write failed for " + path.string());
}

// ---------------------------------------------------------------- conversions

namespace {

Array from_tensor3(const Tensor3& t) {
  const std::size_t n = t.dim();
  Array a({n, n, n});
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { a.values[(i * n + j) * n + k] = t(i, j, k); });
  return a;
}

Tensor3 to_tensor3(const Array& a, std::size_t n, const std::string& name) {
  if (a.shape != std::vector<std::size_t>{n, n, n}) throw DimensionError("table '" + name + "' is not n x n x n");
  Tensor3 t(n);
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { t(i, j, k) = a.values[(i * n + j) * n + k]; });
  return t;
}

Array from_matrix(const Matrix& m) {
  Array a({m.rows(), m.cols()});
  a.values = m.entries();
  return a;
}

Matrix to_matrix(const Array& a, const std::string& name) {
  if (a.shape.size() != 2) throw DimensionError("table '" + name + "' is not a matrix");
  return Matrix(a.shape[0], a.shape[1], a.values);
}

Array from_family(const std::vector<Matrix>& ms, std::size_t m) {
  Array a({ms.size(), m, m});
  for (std::size_t x = 0; x < ms.size(); ++x)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a.values[(x * m + i) * m + j] = ms[x](i, j);
  return a;
}

std::vector<Matrix> to_family(const Array& a, const std::string& name) {
  if (a.shape.size() != 3 || a.shape[1] != a.shape[2])
    throw DimensionError("table '" + name + "' is not a family of square matrices");
  const std::size_t m = a.shape[1];
  std::vector<Matrix> out;
  for (std::size_t x = 0; x < a.shape[0]; ++x) {
    std::vector<Scalar> v(a.values.begin() + x * m * m, a.values.begin() + (x + 1) * m * m);
    out.emplace_back(m, m, std::move(v));
  }
  return out;
}

void require_kind(const Document& doc, DocKind k) {
  if (doc.kind != k)
    throw DimensionError("expected a " + kind_name(k) + " document, got " + kind_name(doc.kind));
}

std::vector<std::string> basis_or_default(std::vector<std::string> basis, std::size_t n, std::string_view prefix) {
  if (basis.empty()) return default_basis(n, prefix);
  if (basis.size() != n) throw DimensionError("basis size does not match dimension");
  return basis;
}

Document header(DocKind k, Field f, std::vector<std::string> basis) {
  Document d;
  d.kind = k;
  d.field = f;
  d.dim = basis.size();
  d.basis = std::move(basis);
  return d;
}

bool has_imaginary(const Document& d) {
  for (const auto& [name, a] : d.tables)
    for (const auto& s : a.values)
      if (!s.is_real()) return true;
  return false;
}

Document with_field(Document d) {
  d.field = has_imaginary(d) ? Field::QI : Field::Q;
  return d;
}

}  // namespace

Document to_document(const AlgebraSpec& alg) {
  Document d = header(DocKind::algebra, alg.field, alg.basis);
  for (const auto& [name, t] : alg.ops) d.tables.emplace(name, from_tensor3(t));
  return d;
}

Document to_document(const CoalgebraSpec& co) {
  Document d = header(DocKind::coalgebra, co.field, co.basis);
  for (const auto& [name, t] : co.comaps) d.tables.emplace(name, from_tensor3(t));
  return d;
}

Document to_document(const BilinearForm& b, std::vector<std::string> basis) {
  Document d = header(DocKind::form, Field::QI, basis_or_default(std::move(basis), b.dim(), "e"));
  d.tables.emplace("B", from_matrix(b.matrix()));
  return with_field(std::move(d));
}

Document to_document(const LinearMap& t, std::vector<std::string> source_basis) {
  Document d = header(DocKind::map, Field::QI, basis_or_default(std::move(source_basis), t.source_dim(), "e"));
  d.tables.emplace("T", from_matrix(t.matrix()));
  return with_field(std::move(d));
}

Document to_document(const Tensor2& r, std::vector<std::string> basis) {
  Document d = header(DocKind::tensor2, Field::QI, basis_or_default(std::move(basis), r.dim(), "e"));
  d.tables.emplace("r", from_matrix(r.matrix()));
  return with_field(std::move(d));
}

Document to_document(const RepSpec& rep, std::vector<std::string> basis) {
  Document d = header(DocKind::bundle, Field::QI, basis_or_default(std::move(basis), rep.dim, "v"));
  d.tables.emplace("l", from_family(rep.l, rep.dim));
  d.tables.emplace("r", from_family(rep.r, rep.dim));
  d.tables.emplace("rho", from_family(rep.rho, rep.dim));
  return with_field(std::move(d));
}

Document to_document(const PPRepSpec& rep, std::vector<std::string> basis) {
  Document d = header(DocKind::bundle, Field::QI, basis_or_default(std::move(basis), rep.dim, "v"));
  d.tables.emplace("l_rtri", from_family(rep.l_rtri, rep.dim));
  d.tables.emplace("r_rtri", from_family(rep.r_rtri, rep.dim));
  d.tables.emplace("l_ltri", from_family(rep.l_ltri, rep.dim));
  d.tables.emplace("r_ltri", from_family(rep.r_ltri, rep.dim));
  d.tables.emplace("rho", from_family(rep.rho, rep.dim));
  return with_field(std::move(d));
}

Document to_document(const FormedAlgebra& fa) {
  Document d = header(DocKind::bundle, fa.algebra.field, fa.algebra.basis);
  for (const auto& [name, t] : fa.algebra.ops) d.tables.emplace("alg." + name, from_tensor3(t));
  d.tables.emplace("form", from_matrix(fa.form.matrix()));
  return d;
}

Document to_document(const EmbeddedR& e) {
  Document d = header(DocKind::bundle, e.ahat.field, e.ahat.basis);
  for (const auto& [name, t] : e.ahat.ops) d.tables.emplace("ahat." + name, from_tensor3(t));
  d.tables.emplace("r", from_matrix(e.r.matrix()));
  return d;
}

Document to_document(const MatchedPairActions& act) {
  const std::size_t na = act.b_on_a.dim, nb = act.a_on_b.dim;
  Document d = header(DocKind::bundle, Field::QI, default_basis(na + nb, "e"));
  d.tables.emplace("a.l", from_family(act.a_on_b.l, nb));
  d.tables.emplace("a.r", from_family(act.a_on_b.r, nb));
  d.tables.emplace("a.rho", from_family(act.a_on_b.rho, nb));
  d.tables.emplace("b.l", from_family(act.b_on_a.l, na));
  d.tables.emplace("b.r", from_family(act.b_on_a.r, na));
  d.tables.emplace("b.rho", from_family(act.b_on_a.rho, na));
  return with_field(std::move(d));
}

AlgebraSpec as_algebra(const Document& doc, std::string_view prefix) {
  if (prefix.empty()) require_kind(doc, DocKind::algebra);
  AlgebraSpec a(doc.dim, doc.field);
  a.basis = doc.basis;
  for (const auto& [name, arr] : doc.tables) {
    if (name.compare(0, prefix.size(), prefix) != 0) continue;
    std::string op = name.substr(prefix.size());
    a.set(op, to_tensor3(arr, doc.dim, name));
  }
  return a;
}

CoalgebraSpec as_coalgebra(const Document& doc) {
  require_kind(doc, DocKind::coalgebra);
  CoalgebraSpec c(doc.dim, doc.field);
  c.basis = doc.basis;
  for (const auto& [name, arr] : doc.tables) c.set(name, to_tensor3(arr, doc.dim, name));
  return c;
}

BilinearForm as_form(const Document& doc) {
  require_kind(doc, DocKind::form);
  if (doc.tables.size() != 1) throw DimensionError("a form document holds exactly one table");
  const auto& [name, arr] = *doc.tables.begin();
  Matrix m = to_matrix(arr, name);
  if (m.rows() != doc.dim || m.cols() != doc.dim) throw DimensionError("form shape does not match dim");
  return BilinearForm(std::move(m));
}

LinearMap as_map(const Document& doc) {
  require_kind(doc, DocKind::map);
  if (doc.tables.size() != 1) throw DimensionError("a map document holds exactly one table");
  const auto& [name, arr] = *doc.tables.begin();
  Matrix m = to_matrix(arr, name);
  if (m.cols() != doc.dim) throw DimensionError("map source does not match dim");
  return LinearMap(std::move(m));
}

Tensor2 as_tensor2(const Document& doc) {
  require_kind(doc, DocKind::tensor2);
  if (doc.tables.size() != 1) throw DimensionError("a tensor2 document holds exactly one table");
  const auto& [name, arr] = *doc.tables.begin();
  Matrix m = to_matrix(arr, name);
  if (m.rows() != doc.dim || m.cols() != doc.dim) throw DimensionError("tensor2 shape does not match dim");
  return Tensor2(std::move(m));
}

RepSpec as_rep(const Document& doc, std::string_view prefix) {
  require_kind(doc, DocKind::bundle);
  const std::string p(prefix);
  RepSpec rep;
  rep.l = to_family(doc.table(p + "l"), p + "l");
  rep.r = to_family(doc.table(p + "r"), p + "r");
  rep.rho = to_family(doc.table(p + "rho"), p + "rho");
  rep.dim = doc.table(p + "l").shape[1];
  if (prefix.empty() && rep.dim != doc.dim) throw DimensionError("representation space does not match dim");
  for (const auto* fam : {&rep.r, &rep.rho})
    if (fam->size() != rep.l.size() || (!fam->empty() && fam->front().rows() != rep.dim))
      throw DimensionError("representation tables disagree in shape");
  return rep;
}

PPRepSpec as_pp_rep(const Document& doc) {
  require_kind(doc, DocKind::bundle);
  PPRepSpec rep;
  rep.dim = doc.dim;
  rep.l_rtri = to_family(doc.table("l_rtri"), "l_rtri");
  rep.r_rtri = to_family(doc.table("r_rtri"), "r_rtri");
  rep.l_ltri = to_family(doc.table("l_ltri"), "l_ltri");
  rep.r_ltri = to_family(doc.table("r_ltri"), "r_ltri");
  rep.rho = to_family(doc.table("rho"), "rho");
  for (const auto* fam : {&rep.l_rtri, &rep.r_rtri, &rep.l_ltri, &rep.r_ltri, &rep.rho})
    if (fam->size() != rep.l_rtri.size() || (!fam->empty() && fam->front().rows() != rep.dim))
      throw DimensionError("representation tables disagree in shape");
  return rep;
}

FormedAlgebra as_formed(const Document& doc) {
  require_kind(doc, DocKind::bundle);
  Matrix m = to_matrix(doc.table("form"), "form");
  if (m.rows() != doc.dim || m.cols() != doc.dim) throw DimensionError("form shape does not match dim");
  return {as_algebra(doc, "alg."), BilinearForm(std::move(m))};
}

EmbeddedR as_embedded_r(const Document& doc) {
  require_kind(doc, DocKind::bundle);
  Matrix m = to_matrix(doc.table("r"), "r");
  if (m.rows() != doc.dim || m.cols() != doc.dim) throw DimensionError("r shape does not match dim");
  return {as_algebra(doc, "ahat."), Tensor2(std::move(m))};
}

MatchedPairActions as_actions(const Document& doc) {
  require_kind(doc, DocKind::bundle);
  MatchedPairActions act{as_rep(doc, "a."), as_rep(doc, "b.")};
  if (act.a_on_b.l.size() != act.b_on_a.dim || act.b_on_a.l.size() != act.a_on_b.dim)
    throw DimensionError("matched-pair actions disagree in shape");
  return act;
}

}  // namespace postlie
