// Verification suites run by the command line tool, and the report format.
#pragma once

#include "hermlat/finite_quotients.hpp"
#include "hermlat/io.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hermlat {

enum class CheckStatus { kPass, kFail, kSkip };

const char* to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::kFail;
  Json witness;
};

struct VerificationReport {
  std::string suite;
  std::string toolkit_version;
  std::map<std::string, std::string> input_hashes;  // data-relative path -> sha256
  std::vector<Check> checks;

  /// Pass iff every non-skipped check passes (and there is at least one).
  bool pass() const;
  /// Sorts checks by id.
  void canonicalize();
  Json to_json() const;
  static VerificationReport from_json(const Json& j);
};

struct SuiteOptions {
  std::filesystem::path data_dir;
  bool search = false;
  std::size_t order_cap = 200;
  std::uint64_t bfs_cap = kDefaultClosureCap;
  std::uint64_t seed = 20240607;
  unsigned threads = 1;
};

/// Directory of the shipped data files (compiled-in default).
std::filesystem::path default_data_dir();

/// lattice, y555, spider, extend26, gaussian, coxeter
const std::vector<std::string>& suite_names();

/// Runs one suite; unknown names throw std::invalid_argument.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

/// Runs every suite (concurrently when options.threads > 1) and merges the
/// results into one report named "all".
VerificationReport run_all_suites(const SuiteOptions& options);

// ---------------------------------------------------------------------------
// searches and data files

struct SearchArtifacts {
  std::string configuration_text;
  std::string certificate_text;
};

/// Deterministic searches; the texts are the canonical file contents.
SearchArtifacts search_extend26();
SearchArtifacts search_gaussian();

/// Writes the canonical lattice, diagram and seed configuration files.
void export_canonical_data(const std::filesystem::path& data_dir);

/// Certificate path next to a configuration file: x.json -> x.cert.json.
std::filesystem::path certificate_path(const std::filesystem::path& config);

/// Element order of a word in the reflections of a configuration file; the
/// lattice is looked up by the configuration's lattice_id.
struct WordOrderResult {
  std::optional<std::size_t> order;
  std::size_t cap;
};
WordOrderResult word_order(const std::string& word, const std::filesystem::path& config_path,
                           const std::filesystem::path& data_dir, std::size_t cap);

}  // namespace hermlat
