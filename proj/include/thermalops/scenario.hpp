#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "thermalops/report.hpp"

namespace thermalops {

enum class InputStateKind { Gibbs, CoherentGibbs, Diagonal, Pure, RandomMixed };
enum class OperationKind { Identity, PartialSwap, RandomTO, GeneralUnitary };

// One experiment, fully determined by its fields (seeds included): a system
// and bath with diagonal Hamiltonians built from the given spectra, an input
// family, an operation family, and the dephasing convention for the
// coherence figures. Parsed from a flat "key = value" text document.
struct ScenarioConfig {
  Index dS = 0;
  Index dB = 0;
  RealVector spectrumS;
  RealVector spectrumB;
  double beta = 1.0;
  InputStateKind input = InputStateKind::Gibbs;
  RealVector diagonalProbabilities;  // input = diagonal
  ComplexVector pureAmplitudes;      // input = pure
  std::uint64_t inputSeed = 0;       // input = random-mixed
  OperationKind operation = OperationKind::Identity;
  double theta = 0.0;                // operation = partial-swap
  std::uint64_t operationSeed = 0;   // operation = random-to / general-unitary
  DephasingConvention convention = DephasingConvention::EigenspaceProjectors;
  double tolerance = 1e-9;
};

// Grammar: one "key = value" per line; '#' starts a comment; blank lines
// ignored. Keys: dS, dB, spectrumS, spectrumB, beta, input, operation,
// convention, tolerance. Unknown keys and malformed values raise ConfigError.
ScenarioConfig parseConfig(std::istream& in);
ScenarioConfig parseConfigFile(const std::string& path);

// One identity check of a run. Checks that a scenario does not claim (for
// example thermal-operation identities under a general unitary) appear with
// applicable = false and an empty CSV cell. Advisory checks are recorded but
// never counted toward pass/fail: they are the convention-sensitive
// coherence identities when RankOneEigenbasis is selected.
struct CheckResult {
  std::string name;
  bool applicable = false;
  bool advisory = false;
  double deviation = 0.0;
  bool pass = true;
};

// Full result of one scenario: configuration echo, every report scalar, and
// one CheckResult per catalog entry (fixed order).
struct RunRecord {
  ScenarioConfig config;
  std::string label;
  ProcessReport report;
  CoherenceReport coherence;
  std::vector<CheckResult> checks;
  bool pass = true;           // all applicable non-advisory checks passed
  double maxDeviation = 0.0;  // worst applicable non-advisory deviation
};

// Names of every identity check, in the order they appear in RunRecord and
// in the CSV columns.
const std::vector<std::string>& checkCatalog();

// The process a config describes, without the checks (used by emit-state).
ProcessOutcome buildOutcome(const ScenarioConfig& cfg);

RunRecord runScenario(const ScenarioConfig& cfg);

// parameter is one of theta, beta, seed, dB. A dB sweep rebuilds the bath
// spectrum as the ladder {0, g, 2g, ...} with g the smallest positive gap of
// the system spectrum (1 if the system is fully degenerate), keeping the
// bath resonant with the system.
std::vector<RunRecord> runSweep(const ScenarioConfig& base,
                                const std::string& parameter,
                                const std::vector<double>& values);

// Canonical verification matrix: the given dimension pairs crossed with six
// input families (gibbs, coherent-gibbs, fixed diagonal, fixed pure, two
// random-mixed seeds) and the operation families that fit the dimensions
// (identity, partial swap at pi/4 when resonant, five random thermal
// operations, two general unitaries), all at beta = 1 under
// EigenspaceProjectors.
std::vector<std::pair<Index, Index>> defaultVerifyDims();

struct VerifySummary {
  int scenarioCount = 0;
  int failedCount = 0;
  bool pass = true;
  std::vector<RunRecord> records;
  // Worst applicable deviation for each catalog check across all records.
  std::vector<std::pair<std::string, double>> worstPerCheck;
};
VerifySummary verifyAll(double tolerance);
VerifySummary verifyAll(double tolerance, const std::vector<std::pair<Index, Index>>& dims);

// CSV: 17-significant-digit scientific notation, comma delimiter, LF line
// endings, leading schema_version column. includeTimestamp prepends a
// "# generated <UTC time>" comment line, which is the only
// run-to-run-varying byte in the output.
extern const char* const kCsvSchemaVersion;
std::vector<std::string> csvHeader();
std::string csvRow(const RunRecord& record);
void writeCsv(std::ostream& out, const std::vector<RunRecord>& records,
              bool includeTimestamp);

}  // namespace thermalops
