#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "postlie/io.hpp"

namespace postlie {

/// A directory of `<name>.pldoc` files plus `mutations.txt`.
class Corpus {
 public:
  explicit Corpus(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path file(const std::string& name) const { return dir_ / (name + ".pldoc"); }
  Document load(const std::string& name) const { return load_document(file(name)); }

  /// One mutation fixture: a check kind and the documents it runs on.
  struct Mutation {
    std::string kind;
    std::vector<std::string> files;
  };
  /// Parses mutations.txt; blank lines and `#` comments are skipped.
  std::vector<Mutation> mutations() const;

 private:
  std::filesystem::path dir_;
};

/// $POSTLIE_CORPUS when set, else the corpus bundled with the sources.
std::filesystem::path default_corpus_dir();

struct Clause {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  std::string id;
  std::string title;
  std::vector<Clause> clauses;

  bool passed() const;
  std::vector<std::string> failed_clauses() const;
  /// "A1 PASS title" or "A1 FAIL title [clause, clause]".
  std::string line() const;
};

struct AcceptanceResult {
  std::vector<CriterionResult> criteria;

  bool passed() const;
  /// nullptr when everything passed.
  const CriterionResult* first_failure() const;
};

/// Runs A1..A7 on the corpus. Exceptions inside a clause fail that clause.
AcceptanceResult run_acceptance(const Corpus& corpus);

}  // namespace postlie
