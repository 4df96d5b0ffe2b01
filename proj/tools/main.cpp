// Command-line front end: runs scenarios from config files, sweeps a
// parameter, verifies the full identity matrix, and serializes states.
// Exit codes: 0 success, 1 identity violation, 2 configuration error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thermalops/matrix_io.hpp"
#include "thermalops/scenario.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitIdentityViolation = 1;
constexpr int kExitConfigError = 2;
constexpr double kLn2 = 0.69314718055994531;

void printExceptionChain(const std::exception& e, int depth = 0) {
  std::cerr << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "error: "
            << e.what() << '\n';
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& nested) {
    printExceptionChain(nested, depth + 1);
  } catch (...) {
  }
}

void writeCsvTarget(const std::string& target,
                    const std::vector<thermalops::RunRecord>& records,
                    bool includeTimestamp) {
  if (target.empty()) return;
  if (target == "-") {
    thermalops::writeCsv(std::cout, records, includeTimestamp);
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) {
    throw thermalops::ConfigError("cannot open CSV output file '" + target + "'");
  }
  thermalops::writeCsv(out, records, includeTimestamp);
}

std::string formatShort(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return std::string(buffer);
}

void printRecord(const thermalops::RunRecord& record, bool bits) {
  const thermalops::ProcessReport& r = record.report;
  std::cout << "scenario: " << record.label << '\n';
  const double unit = bits ? kLn2 : 1.0;
  const char* entropyUnit = bits ? " bits" : " nats";
  std::cout << "  dE_S = " << formatShort(r.dES) << "    dE_B = " << formatShort(r.dEB)
            << '\n'
            << "  dS_S = " << formatShort(r.dSS / unit) << entropyUnit
            << "    dS_B = " << formatShort(r.dSB / unit) << entropyUnit << '\n'
            << "  dF_S = " << formatShort(r.dFS) << "    dF_B = " << formatShort(r.dFB)
            << '\n'
            << "  heat standard = " << formatShort(r.heatStandard)
            << "    heat new = " << formatShort(r.heatNew) << '\n'
            << "  entropy production standard = " << formatShort(r.sirrStandard / unit)
            << entropyUnit << '\n'
            << "  entropy production new      = " << formatShort(r.sirrNew / unit)
            << entropyUnit << '\n'
            << "  mutual information = " << formatShort(r.mutualInfo / unit)
            << entropyUnit << '\n'
            << "  splits: standard = " << formatShort(r.classicalStandard / unit) << " + "
            << formatShort(r.quantumStandard / unit) << ", new = "
            << formatShort(r.classicalNew / unit) << " + "
            << formatShort(r.quantumNew / unit) << entropyUnit << '\n'
            << "  correlated coherence = " << formatShort(r.correlatedCoherence / unit)
            << entropyUnit << '\n';
  std::cout << "  checks:\n";
  for (const thermalops::CheckResult& check : record.checks) {
    if (!check.applicable) continue;
    std::cout << "    " << (check.pass ? "pass" : "FAIL") << "  "
              << check.name << "  deviation " << formatShort(check.deviation);
    if (check.advisory) std::cout << "  (advisory)";
    std::cout << '\n';
  }
  std::cout << (record.pass ? "PASS" : "FAIL") << "  max deviation "
            << formatShort(record.maxDeviation) << '\n';
  if (record.config.convention == thermalops::DephasingConvention::RankOneEigenbasis) {
    bool advisoryFailed = false;
    for (const thermalops::CheckResult& check : record.checks) {
      if (check.applicable && check.advisory && !check.pass) advisoryFailed = true;
    }
    if (advisoryFailed) {
      std::cout << "warning: convention mismatch - rank-one dephasing breaks some "
                   "coherence identities on degenerate spectra (advisory checks "
                   "above); they are not counted toward the exit status\n";
    }
  }
}

std::vector<double> parseValuesList(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing");
      values.push_back(v);
    } catch (const std::exception&) {
      throw thermalops::ConfigError("--values: cannot parse '" + token + "'");
    }
  }
  if (values.empty()) {
    throw thermalops::ConfigError("--values: expected a comma-separated list of numbers");
  }
  return values;
}

std::vector<std::pair<thermalops::Index, thermalops::Index>> parseDimsList(
    const std::string& text) {
  std::vector<std::pair<thermalops::Index, thermalops::Index>> dims;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    const std::size_t x = token.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument("no x");
      const long dS = std::stol(token.substr(0, x));
      const long dB = std::stol(token.substr(x + 1));
      if (dS < 1 || dB < 1) throw std::invalid_argument("nonpositive");
      dims.emplace_back(dS, dB);
    } catch (const std::exception&) {
      throw thermalops::ConfigError("--dims: cannot parse '" + token +
                                    "' (expected e.g. 2x3)");
    }
  }
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermal-operation entropy-production experiments"};
  app.require_subcommand(1);

  std::string configPath;
  std::string csvTarget;
  bool noTimestamp = false;
  bool bits = false;
  double toleranceOverride = -1.0;

  CLI::App* run = app.add_subcommand("run", "run one scenario from a config file");
  run->add_option("config", configPath, "scenario config file")->required();
  run->add_option("--csv", csvTarget, "write the record as CSV to a file, or - for stdout");
  run->add_flag("--no-timestamp", noTimestamp, "omit the generated-at comment line");
  run->add_flag("--bits", bits, "display entropies in bits instead of nats");
  run->add_option("--tolerance", toleranceOverride, "override the config tolerance");

  std::string sweepParam;
  std::string sweepValues;
  CLI::App* sweep = app.add_subcommand("sweep", "run a scenario once per parameter value");
  sweep->add_option("config", configPath, "base scenario config file")->required();
  sweep->add_option("--param", sweepParam, "theta, beta, seed or dB")->required();
  sweep->add_option("--values", sweepValues, "comma-separated values")->required();
  sweep->add_option("--csv", csvTarget, "write records as CSV to a file, or - for stdout");
  sweep->add_flag("--no-timestamp", noTimestamp, "omit the generated-at comment line");

  double verifyTolerance = 1e-9;
  std::string dimsList = "2x2,2x3,3x3,2x4";
  CLI::App* verify = app.add_subcommand("verify", "run the canonical identity matrix");
  verify->add_option("--tolerance", verifyTolerance, "identity tolerance (default 1e-9)");
  verify->add_option("--dims", dimsList, "dimension pairs, e.g. 2x2,3x3 (empty = none)");
  verify->add_option("--csv", csvTarget, "write all records as CSV to a file, or - for stdout");
  verify->add_flag("--no-timestamp", noTimestamp, "omit the generated-at comment line");

  std::string outPath;
  CLI::App* emit = app.add_subcommand("emit-state", "serialize rho'_SB and its marginals");
  emit->add_option("config", configPath, "scenario config file")->required();
  emit->add_option("--out", outPath, "output file for the matrices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitConfigError;
  }

  try {
    if (run->parsed()) {
      thermalops::ScenarioConfig cfg = thermalops::parseConfigFile(configPath);
      if (toleranceOverride > 0.0) cfg.tolerance = toleranceOverride;
      const thermalops::RunRecord record = thermalops::runScenario(cfg);
      printRecord(record, bits);
      writeCsvTarget(csvTarget, {record}, !noTimestamp);
      return record.pass ? kExitSuccess : kExitIdentityViolation;
    }

    if (sweep->parsed()) {
      const thermalops::ScenarioConfig base = thermalops::parseConfigFile(configPath);
      const std::vector<thermalops::RunRecord> records =
          thermalops::runSweep(base, sweepParam, parseValuesList(sweepValues));
      bool pass = true;
      for (const thermalops::RunRecord& record : records) {
        std::cout << (record.pass ? "pass" : "FAIL") << "  " << record.label
                  << "  max deviation " << formatShort(record.maxDeviation) << '\n';
        if (!record.pass) pass = false;
      }
      writeCsvTarget(csvTarget, records, !noTimestamp);
      return pass ? kExitSuccess : kExitIdentityViolation;
    }

    if (verify->parsed()) {
      const thermalops::VerifySummary summary =
          thermalops::verifyAll(verifyTolerance, parseDimsList(dimsList));
      if (summary.scenarioCount == 0) {
        std::cout << "0 scenarios selected; nothing to verify\n";
        return kExitSuccess;
      }
      std::cout << summary.scenarioCount << " scenarios, " << summary.failedCount
                << " failed (tolerance " << formatShort(verifyTolerance) << ")\n";
      std::cout << "worst deviation per identity:\n";
      for (const auto& [name, worst] : summary.worstPerCheck) {
        std::cout << "  " << name << "  " << formatShort(worst) << '\n';
      }
      writeCsvTarget(csvTarget, summary.records, !noTimestamp);
      return summary.pass ? kExitSuccess : kExitIdentityViolation;
    }

    if (emit->parsed()) {
      const thermalops::ScenarioConfig cfg = thermalops::parseConfigFile(configPath);
      const thermalops::ProcessOutcome outcome = thermalops::buildOutcome(cfg);
      std::ofstream out(outPath, std::ios::binary);
      if (!out) {
        throw thermalops::ConfigError("cannot open output file '" + outPath + "'");
      }
      thermalops::writeNamedMatrices(
          out, {{"rho_prime_sb", outcome.rhoPrimeSB.matrix()},
                {"rho_prime_s", outcome.rhoPrimeS.matrix()},
                {"rho_prime_b", outcome.rhoPrimeB.matrix()}});
      return kExitSuccess;
    }
  } catch (const thermalops::Error& e) {
    printExceptionChain(e);
    return kExitConfigError;
  } catch (const std::exception& e) {
    printExceptionChain(e);
    return kExitConfigError;
  }
  return kExitConfigError;
}
