#include "thermalops/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "thermalops/matrix_io.hpp"

namespace thermalops {

const char* const kCsvSchemaVersion = "1";

namespace {

constexpr double kCovarianceProbeTime = 0.7;
constexpr double kQuarterTurn = 0.78539816339744831;  // pi/4

std::string inputFamilyName(InputStateKind kind) {
  switch (kind) {
    case InputStateKind::Gibbs: return "gibbs";
    case InputStateKind::CoherentGibbs: return "coherent-gibbs";
    case InputStateKind::Diagonal: return "diagonal";
    case InputStateKind::Pure: return "pure";
    case InputStateKind::RandomMixed: return "random-mixed";
  }
  return "?";
}

std::string operationFamilyName(OperationKind kind) {
  switch (kind) {
    case OperationKind::Identity: return "identity";
    case OperationKind::PartialSwap: return "partial-swap";
    case OperationKind::RandomTO: return "random-to";
    case OperationKind::GeneralUnitary: return "general-unitary";
  }
  return "?";
}

std::string conventionName(DephasingConvention conv) {
  return conv == DephasingConvention::EigenspaceProjectors ? "eigenspace" : "rank-one";
}

std::string makeLabel(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << cfg.dS << 'x' << cfg.dB << ' ' << inputFamilyName(cfg.input);
  if (cfg.input == InputStateKind::RandomMixed) out << '[' << cfg.inputSeed << ']';
  out << ' ' << operationFamilyName(cfg.operation);
  if (cfg.operation == OperationKind::PartialSwap) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", cfg.theta);
    out << '[' << buffer << ']';
  } else if (cfg.operation == OperationKind::RandomTO ||
             cfg.operation == OperationKind::GeneralUnitary) {
    out << '[' << cfg.operationSeed << ']';
  }
  return out.str();
}

std::vector<double> parseReals(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size() || !std::isfinite(v)) throw std::invalid_argument("bad");
      values.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("config: key '" + key + "' has a bad entry '" + token + "'");
    }
  }
  return values;
}

double parseOneReal(const std::string& text, const std::string& key) {
  const std::vector<double> values = parseReals(text, key);
  if (values.size() != 1) {
    throw ConfigError("config: key '" + key + "' expects exactly one number");
  }
  return values[0];
}

Index parseDimension(const std::string& text, const std::string& key) {
  const double value = parseOneReal(text, key);
  if (value < 1.0 || value != std::floor(value)) {
    throw ConfigError("config: key '" + key + "' must be a positive integer");
  }
  return static_cast<Index>(value);
}

std::uint64_t parseSeed(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    if (text.empty() || text[0] == '-') throw std::invalid_argument("negative");
    const unsigned long long seed = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return seed;
  } catch (const std::exception&) {
    throw ConfigError("config: " + context + " expects a nonnegative integer seed, got '" +
                      text + "'");
  }
}

Complex parseAmplitude(const std::string& token) {
  const std::size_t comma = token.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("config: pure-state amplitude '" + token + "' is not a re,im pair");
  }
  try {
    return Complex(std::stod(token.substr(0, comma)), std::stod(token.substr(comma + 1)));
  } catch (const std::exception&) {
    throw ConfigError("config: cannot parse amplitude '" + token + "'");
  }
}

void parseInputValue(const std::string& value, ScenarioConfig& cfg) {
  std::istringstream in(value);
  std::string family;
  in >> family;
  if (family == "gibbs") {
    cfg.input = InputStateKind::Gibbs;
  } else if (family == "coherent-gibbs") {
    cfg.input = InputStateKind::CoherentGibbs;
  } else if (family == "diagonal") {
    cfg.input = InputStateKind::Diagonal;
    std::string rest;
    std::getline(in, rest);
    const std::vector<double> probs = parseReals(rest, "input diagonal");
    cfg.diagonalProbabilities = Eigen::Map<const RealVector>(
        probs.data(), static_cast<Index>(probs.size()));
  } else if (family == "pure") {
    cfg.input = InputStateKind::Pure;
    std::vector<Complex> amps;
    std::string token;
    while (in >> token) amps.push_back(parseAmplitude(token));
    cfg.pureAmplitudes = Eigen::Map<const ComplexVector>(
        amps.data(), static_cast<Index>(amps.size()));
  } else if (family == "random-mixed") {
    cfg.input = InputStateKind::RandomMixed;
    std::string token;
    if (!(in >> token)) throw ConfigError("config: input random-mixed requires a seed");
    cfg.inputSeed = parseSeed(token, "input random-mixed");
  } else {
    throw ConfigError("config: unknown input family '" + family + "'");
  }
  std::string extra;
  if ((cfg.input == InputStateKind::Gibbs || cfg.input == InputStateKind::CoherentGibbs ||
       cfg.input == InputStateKind::RandomMixed) &&
      (in >> extra)) {
    throw ConfigError("config: unexpected trailing token '" + extra + "' after input");
  }
}

void parseOperationValue(const std::string& value, ScenarioConfig& cfg) {
  std::istringstream in(value);
  std::string family;
  in >> family;
  std::string token;
  if (family == "identity") {
    cfg.operation = OperationKind::Identity;
  } else if (family == "partial-swap") {
    cfg.operation = OperationKind::PartialSwap;
    if (!(in >> token)) throw ConfigError("config: operation partial-swap requires an angle");
    try {
      cfg.theta = std::stod(token);
    } catch (const std::exception&) {
      throw ConfigError("config: cannot parse partial-swap angle '" + token + "'");
    }
    if (!std::isfinite(cfg.theta)) {
      throw ConfigError("config: partial-swap angle must be finite");
    }
  } else if (family == "random-to") {
    cfg.operation = OperationKind::RandomTO;
    if (!(in >> token)) throw ConfigError("config: operation random-to requires a seed");
    cfg.operationSeed = parseSeed(token, "operation random-to");
  } else if (family == "general-unitary") {
    cfg.operation = OperationKind::GeneralUnitary;
    if (!(in >> token)) throw ConfigError("config: operation general-unitary requires a seed");
    cfg.operationSeed = parseSeed(token, "operation general-unitary");
  } else {
    throw ConfigError("config: unknown operation family '" + family + "'");
  }
  std::string extra;
  if (in >> extra) {
    throw ConfigError("config: unexpected trailing token '" + extra + "' after operation");
  }
}

void validateConfig(const ScenarioConfig& cfg) {
  if (cfg.dS < 1 || cfg.dB < 1) {
    throw ConfigError("config: dS and dB must be at least 1");
  }
  if (cfg.dS * cfg.dB > kMaxCompositeDim) {
    throw ConfigError("config: composite dimension exceeds " +
                      std::to_string(kMaxCompositeDim));
  }
  if (cfg.spectrumS.size() != cfg.dS) {
    throw ConfigError("config: spectrumS must list exactly dS energies");
  }
  if (cfg.spectrumB.size() != cfg.dB) {
    throw ConfigError("config: spectrumB must list exactly dB energies");
  }
  if (!cfg.spectrumS.allFinite() || !cfg.spectrumB.allFinite()) {
    throw ConfigError("config: spectra must be finite");
  }
  if (!(cfg.beta > 0.0) || !std::isfinite(cfg.beta)) {
    throw ConfigError("config: beta must be positive and finite "
                      "(the reported functionals divide by it)");
  }
  if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance)) {
    throw ConfigError("config: tolerance must be positive");
  }
  if (cfg.input == InputStateKind::Diagonal) {
    if (cfg.diagonalProbabilities.size() != cfg.dS) {
      throw ConfigError("config: diagonal input must list exactly dS probabilities");
    }
    if (cfg.diagonalProbabilities.minCoeff() < 0.0) {
      throw ConfigError("config: diagonal input probabilities must be nonnegative");
    }
    if (std::abs(cfg.diagonalProbabilities.sum() - 1.0) > kTraceTol) {
      throw ConfigError("config: diagonal input probabilities must sum to 1 within 1e-10");
    }
  }
  if (cfg.input == InputStateKind::Pure && cfg.pureAmplitudes.size() != cfg.dS) {
    throw ConfigError("config: pure input must list exactly dS amplitudes");
  }
}

struct ScenarioInstance {
  BipartiteSetup setup;
  DensityMatrix rhoInS;
  DensityMatrix rhoInB;
  std::optional<ThermalOperation> op;  // engaged for the energy-conserving families
  ComplexMatrix unitary;
};

DensityMatrix makeInputState(const ScenarioConfig& cfg, const BipartiteSetup& setup) {
  switch (cfg.input) {
    case InputStateKind::Gibbs:
      return setup.systemGibbs();
    case InputStateKind::CoherentGibbs:
      return coherentGibbsState(setup.systemHamiltonian(), cfg.beta);
    case InputStateKind::Diagonal:
      return DensityMatrix::diagonal(cfg.diagonalProbabilities);
    case InputStateKind::Pure:
      return DensityMatrix::pure(cfg.pureAmplitudes);
    case InputStateKind::RandomMixed:
      return randomMixedState(cfg.dS, cfg.inputSeed);
  }
  throw ConfigError("config: unhandled input family");
}

ScenarioInstance buildInstance(const ScenarioConfig& cfg) {
  validateConfig(cfg);
  BipartiteSetup setup(Hamiltonian::fromSpectrum(cfg.spectrumS),
                       Hamiltonian::fromSpectrum(cfg.spectrumB), cfg.beta);
  DensityMatrix rhoInS = makeInputState(cfg, setup);
  DensityMatrix rhoInB = setup.bathGibbs();
  std::optional<ThermalOperation> op;
  ComplexMatrix unitary;
  switch (cfg.operation) {
    case OperationKind::Identity:
      op = identityOperation(setup);
      unitary = op->unitary();
      break;
    case OperationKind::PartialSwap:
      op = partialSwapUnitary(setup, cfg.theta);
      unitary = op->unitary();
      break;
    case OperationKind::RandomTO:
      op = randomEnergyPreservingUnitary(setup, cfg.operationSeed);
      unitary = op->unitary();
      break;
    case OperationKind::GeneralUnitary:
      // An unconstrained unitary needs a non-thermal bath to be a real
      // contrast case; the bath seed is derived from the operation seed so
      // one number still reproduces the row.
      unitary = haarUnitary(setup.dimTotal(), cfg.operationSeed);
      rhoInB = randomMixedState(setup.dimBath(), cfg.operationSeed + 1);
      break;
  }
  return ScenarioInstance{std::move(setup), std::move(rhoInS), std::move(rhoInB),
                          std::move(op), std::move(unitary)};
}

std::vector<CheckResult> evaluateChecks(const ScenarioConfig& cfg,
                                        const ScenarioInstance& inst,
                                        const ProcessOutcome& outcome,
                                        const ProcessReport& report) {
  const double tol = cfg.tolerance;
  const BipartiteSetup& setup = outcome.setup;
  const bool isTO = inst.op.has_value();
  const bool bathThermal = outcome.bathIsThermal;
  const bool rankOne = cfg.convention == DephasingConvention::RankOneEigenbasis;

  std::vector<CheckResult> results;
  results.reserve(checkCatalog().size());
  auto add = [&](const std::string& name, bool applicable, bool advisory,
                 double deviation) {
    CheckResult r;
    r.name = name;
    r.applicable = applicable;
    r.advisory = advisory;
    r.deviation = applicable ? deviation : 0.0;
    r.pass = !applicable || r.deviation <= tol;
    results.push_back(std::move(r));
  };

  const Index dS = setup.dimSystem();
  const Index dB = setup.dimBath();

  add("marginal_system", true, false,
      maxAbs(outcome.rhoPrimeS.matrix() -
             partialTrace(outcome.rhoPrimeSB.matrix(), dS, dB, Subsystem::System)));
  add("marginal_bath", true, false,
      maxAbs(outcome.rhoPrimeB.matrix() -
             partialTrace(outcome.rhoPrimeSB.matrix(), dS, dB, Subsystem::Bath)));
  add("trace_out", true, false,
      std::abs(outcome.rhoPrimeSB.matrix().trace() - Complex(1.0, 0.0)));

  const double entropyIn =
      vonNeumannEntropy(outcome.rhoInS) + vonNeumannEntropy(outcome.rhoInB);
  add("unitary_total_entropy", true, false,
      std::abs(vonNeumannEntropy(outcome.rhoPrimeSB) - entropyIn));
  add("mutual_vs_entropy_changes", true, false,
      std::abs(report.mutualInfo - (report.dSS + report.dSB)));

  const DensityMatrix productOfMarginals(
      tensorProduct(outcome.rhoPrimeS.matrix(), outcome.rhoPrimeB.matrix()));
  add("mutual_vs_relative_entropy", true, false,
      std::abs(report.mutualInfo -
               relativeEntropy(outcome.rhoPrimeSB, productOfMarginals)));

  add("heat_bridge", true, false,
      std::abs(report.heatNew - report.heatStandard - report.dFB));

  const NewEntropyProduction epNew = entropyProductionNew(outcome);
  add("ep_new_def_vs_mutual", true, false,
      std::abs(epNew.value - epNew.fromMutualInformation));
  add("ep_new_nonneg", true, false, std::max(0.0, -epNew.value));

  add("energy_conservation", isTO, false, std::abs(report.dES + report.dEB));
  add("ep_new_def_vs_free_energy", isTO, false,
      std::abs(epNew.value - epNew.fromFreeEnergies));

  const StandardEntropyProduction epStd = entropyProductionStandard(outcome);
  add("ep_std_def_vs_free_energy", isTO, false,
      std::abs(epStd.value - epStd.fromFreeEnergy));
  add("ep_std_def_vs_relative_entropies", isTO, false,
      std::abs(epStd.value - epStd.fromRelativeEntropies));
  add("ep_std_def_vs_bath_plus_mutual", isTO, false,
      std::abs(epStd.value - epStd.fromBathAndMutualInformation));
  add("ep_std_nonneg", isTO, false, std::max(0.0, -epStd.value));

  const double gap = epStd.value - epNew.value;
  add("ep_gap_vs_bath_relative_entropy", bathThermal, false,
      std::abs(gap - report.relEntBathToGibbs));
  add("ep_gap_nonneg", bathThermal, false, std::max(0.0, -gap));

  const FreeEnergyBounds bounds = freeEnergyBounds(outcome);
  add("free_energy_bound_standard", isTO, false,
      std::max(0.0, bounds.dFS - bounds.boundStandard));
  add("free_energy_bound_new", isTO, false,
      std::max(0.0, bounds.dFS - bounds.boundNew));
  add("bound_tightness_nonpos", isTO, false, std::max(0.0, bounds.boundNew));

  add("gibbs_fixed_point", isTO && cfg.input == InputStateKind::Gibbs, false,
      maxAbs(outcome.rhoPrimeS.matrix() - setup.systemGibbs().matrix()));
  add("covariance", isTO, false,
      isTO ? checkTimeTranslationCovariance(*inst.op, outcome.rhoInS,
                                            kCovarianceProbeTime, tol)
                 .deviation
           : 0.0);

  const FreeEnergyDecomposition decomposition = freeEnergyDecomposition(
      outcome.rhoInS, setup.systemHamiltonian(), setup.beta(), cfg.convention);
  add("free_energy_decomposition", true, false,
      std::abs(freeEnergy(outcome.rhoInS, setup.systemHamiltonian(), setup.beta()) -
               decomposition.total()));

  const StandardEntropySplit splitStd =
      entropyProductionSplitStandard(outcome, cfg.convention);
  add("split_standard_sum", isTO, false,
      std::abs(splitStd.classical + splitStd.quantum - epStd.value));

  const NewEntropySplit splitNew = entropyProductionSplitNew(outcome, cfg.convention);
  add("split_new_sum", isTO, false,
      std::abs(splitNew.classical + splitNew.quantum - epNew.value));

  const double coherenceIn =
      relEntCoherence(outcome.rhoInS, setup.systemHamiltonian(), cfg.convention);
  const double coherenceOutTotal =
      relEntCoherence(outcome.rhoPrimeSB, setup.totalHamiltonian(), cfg.convention);
  add("coherence_preservation", isTO, rankOne,
      std::abs(coherenceOutTotal - coherenceIn));
  add("quantum_new_vs_correlated_coherence", isTO, rankOne,
      std::abs(splitNew.quantum - splitNew.correlatedCoherence));
  add("classical_new_vs_dephased_mutual", isTO, rankOne,
      std::abs(splitNew.classical - splitNew.dephasedMutualInformation));
  add("quantum_new_vs_mutual_difference", isTO, rankOne,
      std::abs(splitNew.quantum -
               (report.mutualInfo - splitNew.dephasedMutualInformation)));

  const bool diagonalInput =
      cfg.input == InputStateKind::Diagonal || cfg.input == InputStateKind::Gibbs;
  const double coherenceOutS =
      relEntCoherence(outcome.rhoPrimeS, setup.systemHamiltonian(), cfg.convention);
  const double coherenceOutB =
      relEntCoherence(outcome.rhoPrimeB, setup.bathHamiltonian(), cfg.convention);
  add("diagonal_input_theorem", isTO && diagonalInput, rankOne,
      std::max({coherenceOutS, coherenceOutB, std::abs(splitNew.correlatedCoherence),
                std::abs(epNew.value - splitNew.classical)}));
  add("coherent_gibbs_theorem", isTO && cfg.input == InputStateKind::CoherentGibbs,
      rankOne,
      std::max(std::abs(splitNew.classical),
               std::abs(epNew.value - splitNew.correlatedCoherence)));

  return results;
}

std::string joinReals(const RealVector& values) {
  std::string out;
  for (Index i = 0; i < values.size(); ++i) {
    if (i > 0) out += ';';
    out += formatDouble(values[i]);
  }
  return out;
}

std::string inputDetail(const ScenarioConfig& cfg) {
  switch (cfg.input) {
    case InputStateKind::Diagonal:
      return joinReals(cfg.diagonalProbabilities);
    case InputStateKind::Pure: {
      std::string out;
      for (Index i = 0; i < cfg.pureAmplitudes.size(); ++i) {
        if (i > 0) out += ';';
        out += formatDouble(cfg.pureAmplitudes[i].real()) + ':' +
               formatDouble(cfg.pureAmplitudes[i].imag());
      }
      return out;
    }
    default:
      return "";
  }
}

double smallestPositiveGap(const RealVector& spectrum) {
  std::vector<double> sorted(spectrum.data(), spectrum.data() + spectrum.size());
  std::sort(sorted.begin(), sorted.end());
  double gap = 0.0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double diff = sorted[i] - sorted[i - 1];
    if (diff > kDegeneracyTol && (gap == 0.0 || diff < gap)) gap = diff;
  }
  return gap > 0.0 ? gap : 1.0;
}

}  // namespace

const std::vector<std::string>& checkCatalog() {
  static const std::vector<std::string> names = {
      "marginal_system",
      "marginal_bath",
      "trace_out",
      "unitary_total_entropy",
      "mutual_vs_entropy_changes",
      "mutual_vs_relative_entropy",
      "heat_bridge",
      "ep_new_def_vs_mutual",
      "ep_new_nonneg",
      "energy_conservation",
      "ep_new_def_vs_free_energy",
      "ep_std_def_vs_free_energy",
      "ep_std_def_vs_relative_entropies",
      "ep_std_def_vs_bath_plus_mutual",
      "ep_std_nonneg",
      "ep_gap_vs_bath_relative_entropy",
      "ep_gap_nonneg",
      "free_energy_bound_standard",
      "free_energy_bound_new",
      "bound_tightness_nonpos",
      "gibbs_fixed_point",
      "covariance",
      "free_energy_decomposition",
      "split_standard_sum",
      "split_new_sum",
      "coherence_preservation",
      "quantum_new_vs_correlated_coherence",
      "classical_new_vs_dephased_mutual",
      "quantum_new_vs_mutual_difference",
      "diagonal_input_theorem",
      "coherent_gibbs_theorem",
  };
  return names;
}

ScenarioConfig parseConfig(std::istream& in) {
  ScenarioConfig cfg;
  std::string line;
  int lineNumber = 0;
  bool sawSpectrumS = false;
  bool sawSpectrumB = false;
  while (std::getline(in, line)) {
    ++lineNumber;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::size_t equals = line.find('=');
    if (equals == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineNumber) +
                        ": expected 'key = value'");
    }
    auto trim = [](std::string s) {
      const std::size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const std::size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, equals));
    const std::string value = trim(line.substr(equals + 1));
    if (value.empty()) {
      throw ConfigError("config: key '" + key + "' has an empty value");
    }
    if (key == "dS") {
      cfg.dS = parseDimension(value, key);
    } else if (key == "dB") {
      cfg.dB = parseDimension(value, key);
    } else if (key == "spectrumS") {
      const std::vector<double> v = parseReals(value, key);
      cfg.spectrumS = Eigen::Map<const RealVector>(v.data(), static_cast<Index>(v.size()));
      sawSpectrumS = true;
    } else if (key == "spectrumB") {
      const std::vector<double> v = parseReals(value, key);
      cfg.spectrumB = Eigen::Map<const RealVector>(v.data(), static_cast<Index>(v.size()));
      sawSpectrumB = true;
    } else if (key == "beta") {
      cfg.beta = parseOneReal(value, key);
    } else if (key == "input") {
      parseInputValue(value, cfg);
    } else if (key == "operation") {
      parseOperationValue(value, cfg);
    } else if (key == "convention") {
      if (value == "eigenspace") {
        cfg.convention = DephasingConvention::EigenspaceProjectors;
      } else if (value == "rank-one") {
        cfg.convention = DephasingConvention::RankOneEigenbasis;
      } else {
        throw ConfigError("config: convention must be 'eigenspace' or 'rank-one'");
      }
    } else if (key == "tolerance") {
      cfg.tolerance = parseOneReal(value, key);
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  if (cfg.dS == 0 || cfg.dB == 0 || !sawSpectrumS || !sawSpectrumB) {
    throw ConfigError("config: dS, dB, spectrumS and spectrumB are required");
  }
  validateConfig(cfg);
  return cfg;
}

ScenarioConfig parseConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  return parseConfig(in);
}

ProcessOutcome buildOutcome(const ScenarioConfig& cfg) {
  ScenarioInstance inst = buildInstance(cfg);
  if (inst.op) return applyTO(*inst.op, inst.rhoInS);
  return applyGeneralUnitary(inst.setup, inst.unitary, inst.rhoInS, inst.rhoInB);
}

RunRecord runScenario(const ScenarioConfig& cfg) {
  try {
    ScenarioInstance inst = buildInstance(cfg);
    const ProcessOutcome outcome =
        inst.op ? applyTO(*inst.op, inst.rhoInS)
                : applyGeneralUnitary(inst.setup, inst.unitary, inst.rhoInS, inst.rhoInB);

    RunRecord record;
    record.config = cfg;
    record.label = makeLabel(cfg);
    record.report = buildProcessReport(outcome, cfg.convention);
    record.coherence = buildCoherenceReport(outcome, cfg.convention);
    record.checks = evaluateChecks(cfg, inst, outcome, record.report);
    record.pass = true;
    record.maxDeviation = 0.0;
    for (const CheckResult& check : record.checks) {
      if (!check.applicable || check.advisory) continue;
      record.maxDeviation = std::max(record.maxDeviation, check.deviation);
      if (!check.pass) record.pass = false;
    }
    return record;
  } catch (const Error&) {
    std::throw_with_nested(Error("scenario '" + makeLabel(cfg) + "' failed"));
  }
}

std::vector<RunRecord> runSweep(const ScenarioConfig& base,
                                const std::string& parameter,
                                const std::vector<double>& values) {
  std::vector<RunRecord> records;
  records.reserve(values.size());
  for (const double value : values) {
    ScenarioConfig cfg = base;
    if (parameter == "theta") {
      if (cfg.operation != OperationKind::PartialSwap) {
        throw ConfigError("sweep: theta only applies to the partial-swap operation");
      }
      if (!std::isfinite(value)) throw ConfigError("sweep: theta must be finite");
      cfg.theta = value;
    } else if (parameter == "beta") {
      cfg.beta = value;
    } else if (parameter == "seed") {
      if (value < 0.0 || value != std::floor(value)) {
        throw ConfigError("sweep: seed values must be nonnegative integers");
      }
      cfg.operationSeed = static_cast<std::uint64_t>(value);
    } else if (parameter == "dB") {
      if (value < 1.0 || value != std::floor(value)) {
        throw ConfigError("sweep: dB values must be positive integers");
      }
      cfg.dB = static_cast<Index>(value);
      const double gap = smallestPositiveGap(cfg.spectrumS);
      cfg.spectrumB = RealVector::LinSpaced(cfg.dB, 0.0, gap * static_cast<double>(cfg.dB - 1));
      if (cfg.dB == 1) cfg.spectrumB = RealVector::Zero(1);
    } else {
      throw UnknownParameterError("sweep: unknown parameter '" + parameter +
                                  "' (expected theta, beta, seed or dB)");
    }
    records.push_back(runScenario(cfg));
  }
  return records;
}

std::vector<std::pair<Index, Index>> defaultVerifyDims() {
  return {{2, 2}, {2, 3}, {3, 3}, {2, 4}};
}

VerifySummary verifyAll(double tolerance) {
  return verifyAll(tolerance, defaultVerifyDims());
}

VerifySummary verifyAll(double tolerance,
                        const std::vector<std::pair<Index, Index>>& dims) {
  VerifySummary summary;
  for (const auto& [dS, dB] : dims) {
    ScenarioConfig base;
    base.dS = dS;
    base.dB = dB;
    base.spectrumS = RealVector::LinSpaced(dS, 0.0, static_cast<double>(dS - 1));
    base.spectrumB = RealVector::LinSpaced(dB, 0.0, static_cast<double>(dB - 1));
    if (dS == 1) base.spectrumS = RealVector::Zero(1);
    if (dB == 1) base.spectrumB = RealVector::Zero(1);
    base.beta = 1.0;
    base.tolerance = tolerance;

    std::vector<ScenarioConfig> inputs;
    {
      ScenarioConfig cfg = base;
      cfg.input = InputStateKind::Gibbs;
      inputs.push_back(cfg);
      cfg.input = InputStateKind::CoherentGibbs;
      inputs.push_back(cfg);
      cfg.input = InputStateKind::Diagonal;
      RealVector probs(dS);
      for (Index i = 0; i < dS; ++i) probs[i] = static_cast<double>(dS - i);
      cfg.diagonalProbabilities = probs / probs.sum();
      inputs.push_back(cfg);
      cfg = base;
      cfg.input = InputStateKind::Pure;
      ComplexVector amps(dS);
      for (Index i = 0; i < dS; ++i) {
        amps[i] = std::exp(Complex(0.0, 0.4 * static_cast<double>(i)));
      }
      cfg.pureAmplitudes = amps / std::sqrt(static_cast<double>(dS));
      inputs.push_back(cfg);
      cfg = base;
      cfg.input = InputStateKind::RandomMixed;
      cfg.inputSeed = 11;
      inputs.push_back(cfg);
      cfg.inputSeed = 12;
      inputs.push_back(cfg);
    }

    for (const ScenarioConfig& inputCfg : inputs) {
      std::vector<ScenarioConfig> scenarios;
      ScenarioConfig cfg = inputCfg;
      cfg.operation = OperationKind::Identity;
      scenarios.push_back(cfg);
      if (dS == dB) {
        cfg.operation = OperationKind::PartialSwap;
        cfg.theta = kQuarterTurn;
        scenarios.push_back(cfg);
        cfg = inputCfg;
      }
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        cfg.operation = OperationKind::RandomTO;
        cfg.operationSeed = seed;
        scenarios.push_back(cfg);
      }
      for (std::uint64_t seed = 21; seed <= 22; ++seed) {
        cfg.operation = OperationKind::GeneralUnitary;
        cfg.operationSeed = seed;
        scenarios.push_back(cfg);
      }
      for (const ScenarioConfig& scenario : scenarios) {
        summary.records.push_back(runScenario(scenario));
      }
    }
  }

  summary.scenarioCount = static_cast<int>(summary.records.size());
  for (const std::string& name : checkCatalog()) {
    summary.worstPerCheck.emplace_back(name, 0.0);
  }
  for (const RunRecord& record : summary.records) {
    if (!record.pass) ++summary.failedCount;
    for (std::size_t i = 0; i < record.checks.size(); ++i) {
      const CheckResult& check = record.checks[i];
      if (check.applicable && !check.advisory) {
        summary.worstPerCheck[i].second =
            std::max(summary.worstPerCheck[i].second, check.deviation);
      }
    }
  }
  summary.pass = summary.failedCount == 0;
  return summary;
}

std::vector<std::string> csvHeader() {
  std::vector<std::string> header = {
      "schema_version", "label", "dS", "dB", "beta", "spectrum_s", "spectrum_b",
      "input", "input_detail", "input_seed", "operation", "theta",
      "operation_seed", "convention", "tolerance",
      "des", "deb", "dss", "dsb", "dfs", "dfb",
      "heat_standard", "heat_new", "sirr_standard", "sirr_new",
      "mutual_info", "rel_ent_bath_to_gibbs",
      "classical_standard", "quantum_standard", "classical_new", "quantum_new",
      "correlated_coherence",
      "c_s", "c_s_prime", "c_b_prime", "c_sb_prime"};
  for (const std::string& name : checkCatalog()) {
    header.push_back("chk_" + name);
  }
  header.push_back("max_deviation");
  header.push_back("pass");
  return header;
}

std::string csvRow(const RunRecord& record) {
  const ScenarioConfig& cfg = record.config;
  std::vector<std::string> cells;
  cells.reserve(csvHeader().size());
  cells.push_back(kCsvSchemaVersion);
  cells.push_back(record.label);
  cells.push_back(std::to_string(cfg.dS));
  cells.push_back(std::to_string(cfg.dB));
  cells.push_back(formatDouble(cfg.beta));
  cells.push_back(joinReals(cfg.spectrumS));
  cells.push_back(joinReals(cfg.spectrumB));
  cells.push_back(inputFamilyName(cfg.input));
  cells.push_back(inputDetail(cfg));
  cells.push_back(std::to_string(cfg.inputSeed));
  cells.push_back(operationFamilyName(cfg.operation));
  cells.push_back(formatDouble(cfg.theta));
  cells.push_back(std::to_string(cfg.operationSeed));
  cells.push_back(conventionName(cfg.convention));
  cells.push_back(formatDouble(cfg.tolerance));

  const ProcessReport& r = record.report;
  for (double value : {r.dES, r.dEB, r.dSS, r.dSB, r.dFS, r.dFB, r.heatStandard,
                       r.heatNew, r.sirrStandard, r.sirrNew, r.mutualInfo,
                       r.relEntBathToGibbs, r.classicalStandard, r.quantumStandard,
                       r.classicalNew, r.quantumNew, r.correlatedCoherence}) {
    cells.push_back(formatDouble(value));
  }
  const CoherenceReport& c = record.coherence;
  for (double value : {c.cS, c.cSPrime, c.cBPrime, c.cSBPrime}) {
    cells.push_back(formatDouble(value));
  }
  for (const CheckResult& check : record.checks) {
    cells.push_back(check.applicable ? formatDouble(check.deviation) : "");
  }
  cells.push_back(formatDouble(record.maxDeviation));
  cells.push_back(record.pass ? "1" : "0");

  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row += ',';
    row += cells[i];
  }
  return row;
}

void writeCsv(std::ostream& out, const std::vector<RunRecord>& records,
              bool includeTimestamp) {
  if (includeTimestamp) {
    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# generated " << stamp << '\n';
  }
  const std::vector<std::string> header = csvHeader();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const RunRecord& record : records) {
    out << csvRow(record) << '\n';
  }
}

}  // namespace thermalops
