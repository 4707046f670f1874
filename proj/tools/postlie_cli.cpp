// Command-line front end: check, derive, corpus verify.
//
// Exit codes: 0 pass, 1 violation or failed precondition, 2 usage or parse error.
// POSTLIE_VERBOSITY=quiet|normal|full controls how much of a report is printed.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "postlie/acceptance.hpp"
#include "postlie/dispatch.hpp"

namespace fs = std::filesystem;
using namespace postlie;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

Verbosity verbosity_from_env() {
  const char* v = std::getenv("POSTLIE_VERBOSITY");
  if (!v) return Verbosity::normal;
  std::string s(v);
  if (s == "quiet") return Verbosity::quiet;
  if (s == "full") return Verbosity::full;
  return Verbosity::normal;
}

/// An existing path wins; otherwise a bare name is looked up in the corpus.
fs::path resolve(const std::string& arg, const fs::path& corpus) {
  if (fs::exists(arg)) return arg;
  fs::path in_corpus = Corpus(corpus).file(arg);
  if (fs::exists(in_corpus)) return in_corpus;
  throw UsageError("no such document: " + arg);
}

std::vector<Document> load_all(const std::vector<std::string>& args, const fs::path& corpus) {
  std::vector<Document> docs;
  for (const auto& a : args) docs.push_back(load_document(resolve(a, corpus)));
  return docs;
}

int cmd_check(const std::string& kind, const std::vector<std::string>& files, const fs::path& corpus,
              const std::string& weight, const std::string& mode) {
  CheckOptions opt;
  opt.weight = Scalar::parse(weight);
  if (mode == "direct") opt.mode = CoalgebraMode::direct;
  const auto docs = load_all(files, corpus);
  const auto basis = docs.empty() ? std::vector<std::string>{} : docs.front().basis;
  try {
    CheckReport r = run_check(kind, docs, opt);
    std::cout << r.render(verbosity_from_env(), basis);
    return r.passed ? exit_pass : exit_fail;
  } catch (const PreconditionError& e) {
    std::cout << "precondition failed: " << e.what() << '\n' << e.report().render(verbosity_from_env(), basis);
    return exit_fail;
  }
}

int cmd_derive(const std::string& construction, const std::vector<std::string>& files, const fs::path& corpus,
               const std::string& out) {
  const auto docs = load_all(files, corpus);
  try {
    Document d = run_derive(construction, docs);
    if (out.empty()) {
      std::cout << format_document(d);
    } else {
      save_document(out, d);
      std::cout << "wrote " << out << '\n';
    }
    return exit_pass;
  } catch (const PreconditionError& e) {
    const auto basis = docs.empty() ? std::vector<std::string>{} : docs.front().basis;
    std::cout << "precondition failed: " << e.what() << '\n' << e.report().render(verbosity_from_env(), basis);
    return exit_fail;
  } catch (const SingularError& e) {
    std::cout << "precondition failed: " << e.what() << '\n';
    return exit_fail;
  }
}

int cmd_verify(const fs::path& dir) {
  const AcceptanceResult res = run_acceptance(Corpus(dir));
  const Verbosity v = verbosity_from_env();
  for (const auto& c : res.criteria) {
    std::cout << c.line() << '\n';
    if (v == Verbosity::quiet) continue;
    for (const auto& cl : c.clauses) {
      if (cl.passed && v != Verbosity::full) continue;
      std::cout << "  " << (cl.passed ? "ok   " : "FAIL ") << cl.name;
      if (!cl.detail.empty()) std::cout << ": " << cl.detail;
      if (cl.detail.empty() || cl.detail.back() != '\n') std::cout << '\n';
    }
  }
  if (const CriterionResult* first = res.first_failure()) {
    std::cout << "first failing criterion: " << first->id << '\n';
    return exit_fail;
  }
  std::cout << "all criteria passed\n";
  return exit_pass;
}

std::string joined(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for post-Lie type algebras"};
  app.require_subcommand(1);
  std::string corpus = default_corpus_dir().string();
  app.add_option("--corpus", corpus, "Directory searched for bare document names");

  std::string kind, weight = "1", mode = "dual", construction, out, verify_dir;
  std::vector<std::string> files;

  auto* check = app.add_subcommand("check", "Run one checker: " + joined(check_kinds()));
  check->add_option("kind", kind, "Check kind")->required()->check(CLI::IsMember(check_kinds()));
  check->add_option("files", files, "Documents (paths or corpus names)");
  check->add_option("--weight", weight, "Rota-Baxter weight");
  check->add_option("--mode", mode, "pp-coalg evaluation mode")->check(CLI::IsMember({"dual", "direct"}));

  auto* derive = app.add_subcommand("derive", "Run one construction: " + joined(construction_names()));
  derive->add_option("construction", construction, "Construction")
      ->required()
      ->check(CLI::IsMember(construction_names()));
  derive->add_option("files", files, "Documents (paths or corpus names)");
  derive->add_option("-o,--output", out, "Output path; stdout when omitted");

  auto* corpus_cmd = app.add_subcommand("corpus", "Corpus operations");
  corpus_cmd->require_subcommand(1);
  auto* verify = corpus_cmd->add_subcommand("verify", "Run the acceptance pipeline A1-A7");
  verify->add_option("--dir", verify_dir, "Corpus directory (defaults to --corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (check->parsed()) return cmd_check(kind, files, corpus, weight, mode);
    if (derive->parsed()) return cmd_derive(construction, files, corpus, out);
    if (verify->parsed()) return cmd_verify(verify_dir.empty() ? fs::path(corpus) : fs::path(verify_dir));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DimensionError& e) {
    std::cerr << "shape error: " << e.what() << '\n';
    return exit_usage;
  } catch (const UnknownOperation& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
