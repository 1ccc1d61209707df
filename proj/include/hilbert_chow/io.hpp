#ifndef HILBERT_CHOW_IO_HPP
#define HILBERT_CHOW_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hilbert_chow/graded_ideal.hpp"
#include "hilbert_chow/hilbert_weight.hpp"
#include "hilbert_chow/koszul_chow.hpp"

namespace hilbert_chow {

using json = nlohmann::json;

inline constexpr std::string_view kToolName = "hilbchow";
inline constexpr std::string_view kToolVersion = "1.0.0";

std::string sha256_hex(std::string_view data);

/// Graded-piece cache: one JSON file per key, named by the SHA-256 of the key.
class FilePieceStore : public PieceStore {
 public:
  explicit FilePieceStore(std::filesystem::path dir);

  std::optional<std::vector<VectorQ>> load(const std::string& key) override;
  /// Writes to a temporary file and renames it into place.
  void save(const std::string& key, const std::vector<VectorQ>& rows) override;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

/// Command-line overrides; unset fields fall back to the input file, then to defaults.
struct JobOptions {
  std::optional<int> m_start;
  std::optional<int> m_len;
  std::optional<std::string> mu;
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
  bool allow_gl = false;
  std::optional<std::string> cache_dir;
};

struct Pencil {
  LinearFormSet from;
  LinearFormSet to;
  std::optional<Rational> t0;
};

struct JobSpec {
  std::string input_path;
  json input;               ///< input echo
  std::string input_hash;   ///< SHA-256 of the raw input bytes
  std::vector<OnePS> lambdas;
  int m_start = 2;
  int m_len = 5;
  MuConvention mu = MuConvention::literal;
  int order = 1;
  std::uint64_t seed = 1;
  bool allow_gl = false;
  std::optional<int> chow_m;
  int scan_bound = 2;
  std::vector<LinearFormSet> forms;
  std::optional<Pencil> pencil;
  std::optional<std::string> cache_dir;
  std::vector<std::string> warnings;

  /// Every resolved setting, for the report.
  json to_json() const;
};

struct ParsedInput {
  HomogeneousIdeal ideal;
  JobSpec job;
};

/// Validates the whole document; schema problems are input Errors naming the field.
ParsedInput parse_input_text(std::string_view text, const JobOptions& opts);
ParsedInput parse_input(const std::string& path, const JobOptions& opts);

json rational_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& field);
LinearFormSet forms_from_json(const json& j, std::size_t num_vars, const std::string& field);
json forms_json(const LinearFormSet& f);

/// Nonzero integer vectors in [-bound, bound]^num_vars with zero sum, in
/// lexicographic ascending order.
std::vector<OnePS> scan_grid(std::size_t num_vars, int bound);

struct Report {
  json doc;
  int exit_code = 0;
};

inline constexpr const char* kSubcommands[] = {"hilbert",   "weight",      "futaki", "cgkm-verify",
                                               "chow-eval", "chow-interp", "scan",   "selftest"};

/// Dispatches one subcommand. `input` may be null only for selftest. Errors
/// are embedded in the report with their code and reflected in exit_code.
Report run(const std::string& subcommand, const ParsedInput* input);

/// The built-in invariant suite; sets *all_hold.
json selftest_result(bool* all_hold);

/// The report without its timing block (the part that must be reproducible).
json result_blocks(const json& doc);

/// "json" (pretty printed) or "text" (one "path: value" line per leaf).
std::string render(const json& doc, const std::string& format);

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_IO_HPP
