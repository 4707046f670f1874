#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "postlie/bialgebra.hpp"
#include "postlie/constructions.hpp"

namespace postlie {

enum class DocKind { algebra, form, map, tensor2, coalgebra, bundle };

std::string kind_name(DocKind k);
/// Throws ParseError.
DocKind parse_kind(std::string_view text);

/// Dense array of scalars, row-major.
struct Array {
  std::vector<std::size_t> shape;
  std::vector<Scalar> values;

  Array() = default;
  explicit Array(std::vector<std::size_t> shape);

  std::size_t size() const noexcept { return values.size(); }
  /// Row-major offset of a multi-index.
  std::size_t offset(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const Array&, const Array&) = default;
};

/// Text document holding one object (or a bundle of related ones).
///
///   kind algebra
///   field Q(i)
///   dim 3
///   basis e1 e2 e3
///   table bracket 3 3 3
///   1 2 3 1
///   2 1 3 -1
///   end
///
/// Entries list 1-based indices followed by a scalar; missing entries are zero.
/// `#` starts a comment. Bundle table names may carry a dotted prefix.
struct Document {
  DocKind kind = DocKind::algebra;
  Field field = Field::QI;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::map<std::string, Array> tables;

  const Array& table(const std::string& name) const;
  bool has(const std::string& name) const { return tables.count(name) != 0; }

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError with line and column.
Document parse_document(std::string_view text);
/// Canonical text: tables sorted by name, nonzero entries in row-major order.
std::string format_document(const Document& doc);

/// Throws Error when the file cannot be read, ParseError when malformed.
Document load_document(const std::filesystem::path& path);
void save_document(const std::filesystem::path& path, const Document& doc);

// Conversions. The as_* functions throw DimensionError on a kind or shape
// mismatch. A prefix selects the "prefix.name" tables of a bundle.

Document to_document(const AlgebraSpec& alg);
Document to_document(const CoalgebraSpec& co);
Document to_document(const BilinearForm& b, std::vector<std::string> basis = {});
/// dim and basis describe the source space.
Document to_document(const LinearMap& t, std::vector<std::string> source_basis = {});
Document to_document(const Tensor2& r, std::vector<std::string> basis = {});
/// Bundle with tables l, r, rho of shape (algebra dim, m, m).
Document to_document(const RepSpec& rep, std::vector<std::string> basis = {});
/// Bundle with tables l_rtri, r_rtri, l_ltri, r_ltri, rho.
Document to_document(const PPRepSpec& rep, std::vector<std::string> basis = {});
/// Bundle with "alg." tables and a "form" table.
Document to_document(const FormedAlgebra& fa);
/// Bundle with "ahat." tables and an "r" table.
Document to_document(const EmbeddedR& e);
/// Bundle with "a." and "b." action tables; dim is dim A + dim B.
Document to_document(const MatchedPairActions& act);

AlgebraSpec as_algebra(const Document& doc, std::string_view prefix = "");
CoalgebraSpec as_coalgebra(const Document& doc);
BilinearForm as_form(const Document& doc);
LinearMap as_map(const Document& doc);
Tensor2 as_tensor2(const Document& doc);
RepSpec as_rep(const Document& doc, std::string_view prefix = "");
PPRepSpec as_pp_rep(const Document& doc);
FormedAlgebra as_formed(const Document& doc);
EmbeddedR as_embedded_r(const Document& doc);
MatchedPairActions as_actions(const Document& doc);

}  // namespace postlie
