#pragma once

// End-to-end analysis of one edge ideal, batch verification of a corpus,
// and the JSON / text renderings used by the command line tool.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "linres/betti.hpp"
#include "linres/complex.hpp"
#include "linres/error.hpp"
#include "linres/hilbert.hpp"
#include "linres/io.hpp"
#include "linres/oracle.hpp"
#include "linres/resolution.hpp"

namespace linres {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr long kHilbertCheckDegrees = 20;

struct CheckResult {
  std::string name;
  bool mandatory = true;
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct MultiplicityReport {
  /// False when the Krull dimension is 0; the values below are then absent.
  bool defined = false;
  std::optional<BigInt> series_value;
  std::optional<BigInt> top_face_count;
  std::optional<Rational> pure_formula;
  std::optional<Rational> codim_formula;
  std::optional<Rational> chordal_formula;

  friend bool operator==(const MultiplicityReport&, const MultiplicityReport&) = default;
};

struct AnalysisReport {
  int schema = kSchemaVersion;
  std::string input;
  int n = 0;
  int m = 2;
  std::size_t edge_count = 0;
  std::vector<std::string> labels;
  /// How linearity of the resolution was established.
  std::string linearity;
  std::optional<bool> graph_chordal;
  std::optional<bool> complement_chordal;
  std::optional<FVector> clique_fvector;
  FVector independence_fvector;
  /// Closed-form values for i = 0..n, before any sanity check.
  std::vector<BigInt> betti_formula;
  /// Empty when betti_formula has a negative entry; the checks that need a
  /// genuine Betti sequence are then skipped.
  BettiVector betti;
  /// Values of the fixed-offset variant for m >= 3, for comparison.
  std::optional<std::vector<BigInt>> betti_m2_offset;
  /// pdim(R/I); 0 for the zero ideal.
  int pdim = 0;
  int krull_dimension = 0;
  HilbertSeries hilbert_series;
  MultiplicityReport multiplicity;
  std::optional<VerificationReport> herzog_kuhl;
  std::optional<VerificationReport> chordal_equations;
  std::optional<VerificationReport> chordal_inequalities;
  std::optional<VerificationReport> chordal_inequalities_ideal_indexed;
  std::optional<GradedBettiTable> oracle;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::vector<std::string> failed_checks() const;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  bool run_oracle = false;
  /// Trust an m-linear resolution for this m without recognition.
  std::optional<int> assert_linear;
  int max_n = kDefaultOracleCap;
};

/// Error NotLinear when linearity cannot be established, BadUniformity for
/// m = 1, TooLarge when the oracle is requested beyond the cap.
AnalysisReport analyze(const ParsedInput& input, const std::string& descriptor, const AnalyzeOptions& options);

Json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const Json& j);
std::string render_json(const AnalysisReport& report);
std::string render_text(const AnalysisReport& report);

/// Betti table in the usual row layout with module and ideal indices.
std::string render_betti_table(const BettiVector& betti);

enum class EntryStatus { Pass, Fail, NotLinear, InputError, TooLarge };

struct VerifyEntry {
  std::string file;
  EntryStatus status = EntryStatus::Pass;
  std::vector<std::string> failed_checks;
  std::string message;
};

struct VerifySummary {
  std::vector<VerifyEntry> entries;
  std::vector<std::string> warnings;

  /// 0 pass, 1 verification failure, 2 input error, 3 resource cap.
  int exit_code() const;
};

VerifySummary verify_corpus(const std::filesystem::path& directory, const AnalyzeOptions& options);
Json to_json(const VerifySummary& summary);

/// Exit code for an error escaping analyze().
int exit_code_for(ErrorKind kind);

// Serializers shared with tests.
Json fvector_to_json(const FVector& f);
FVector fvector_from_json(const Json& j);
Json series_to_json(const HilbertSeries& hs);
HilbertSeries series_from_json(const Json& j);
Json verification_to_json(const VerificationReport& r);
VerificationReport verification_from_json(const Json& j);
Json table_to_json(const GradedBettiTable& t);
GradedBettiTable table_from_json(const Json& j);

}  // namespace linres
