#include "rdcalib/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

#include "rdcalib/errors.hpp"
#include "rdcalib/version.hpp"

namespace rdcalib {

namespace {

using nlohmann::json;

void expect_keys(const json& object, const std::set<std::string>& allowed,
                 const std::string& where) {
  if (!object.is_object()) {
    throw ConfigError("config: " + where + " must be an object");
  }
  for (const auto& [key, value] : object.items()) {
    (void)value;
    if (allowed.find(key) == allowed.end()) {
      throw ConfigError("config: unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
T get_or(const json& object, const std::string& key, T fallback) {
  if (!object.contains(key)) return fallback;
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config: bad value for '" + key + "'");
  }
}

LcPart part_from_string(const std::string& name) {
  if (name == "c1") return LcPart::kC1;
  if (name == "c3") return LcPart::kC3;
  if (name == "l2") return LcPart::kL2;
  if (name == "l4") return LcPart::kL4;
  if (name == "rs") return LcPart::kRs;
  if (name == "rl") return LcPart::kRl;
  throw ConfigError("config: unknown component '" + name + "'");
}

std::string part_to_string(LcPart part) {
  switch (part) {
    case LcPart::kC1: return "c1";
    case LcPart::kC3: return "c3";
    case LcPart::kL2: return "l2";
    case LcPart::kL4: return "l4";
    case LcPart::kRs: return "rs";
    case LcPart::kRl: return "rl";
  }
  throw ConfigError("config: unknown component enum value");
}

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["study"] = to_string(c.study);
  j["front_end"] = to_string(c.front_end);
  j["tolerance"] = {{"sigma_fraction", c.tolerance.sigma_fraction},
                    {"truncation_sigmas", c.tolerance.truncation_sigmas}};
  json parts = json::array();
  for (LcPart part : c.perturb_set) parts.push_back(part_to_string(part));
  j["perturb_components"] = parts;
  j["trials"] = c.trials;
  j["dims"] = {{"grid_rate_hz", c.dims.grid_rate_hz},
               {"duration_s", c.dims.duration_s},
               {"subsampling_ratio", c.dims.subsampling_ratio},
               {"impulse_length_taps", c.dims.impulse_length}};
  j["discretization"] = {{"rate_hz", c.discretization.rate_hz},
                         {"prewarp_hz", c.discretization.prewarp_hz}};
  j["signal"] = {{"k_input", c.signal.k_input},
                 {"k_calibration", c.signal.k_calibration}};
  j["calibration_samples"] = c.calibration_samples;
  j["mq_list"] = c.mq_list;
  j["k_list"] = c.k_list;
  j["reconstruct"] = c.reconstruct;
  j["solver"] = {{"zeta_relative", c.solver.zeta_relative},
                 {"max_iterations", c.solver.max_iterations},
                 {"optimality_tolerance", c.solver.optimality_tolerance}};
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  expect_keys(j, {"study", "front_end", "tolerance", "perturb_components", "trials",
                  "dims", "discretization", "signal", "calibration_samples",
                  "mq_list", "k_list", "reconstruct", "solver", "seed", "threads"},
              "the top level");
  ExperimentConfig c;
  if (!j.contains("study")) throw ConfigError("config: missing 'study'");
  c.study = study_from_string(get_or<std::string>(j, "study", ""));
  c.front_end = front_end_from_string(get_or<std::string>(j, "front_end", "butterworth"));

  if (j.contains("tolerance")) {
    const json& t = j.at("tolerance");
    expect_keys(t, {"sigma_fraction", "truncation_sigmas"}, "tolerance");
    c.tolerance.sigma_fraction = get_or<double>(t, "sigma_fraction", 0.02);
    c.tolerance.truncation_sigmas = get_or<double>(t, "truncation_sigmas", 1.0);
  }
  if (j.contains("perturb_components")) {
    for (const auto& name : j.at("perturb_components")) {
      c.perturb_set.push_back(part_from_string(name.get<std::string>()));
    }
  }
  c.trials = get_or<int>(j, "trials", 100);
  if (j.contains("dims")) {
    const json& d = j.at("dims");
    expect_keys(d, {"grid_rate_hz", "duration_s", "subsampling_ratio",
                    "impulse_length_taps"},
                "dims");
    c.dims.grid_rate_hz = get_or<double>(d, "grid_rate_hz", 12600.0);
    c.dims.duration_s = get_or<double>(d, "duration_s", 1.0);
    c.dims.subsampling_ratio = get_or<int>(d, "subsampling_ratio", 12);
    c.dims.impulse_length = get_or<int>(d, "impulse_length_taps", 108);
  }
  if (j.contains("discretization")) {
    const json& d = j.at("discretization");
    expect_keys(d, {"rate_hz", "prewarp_hz"}, "discretization");
    c.discretization.rate_hz = get_or<double>(d, "rate_hz", 0.0);
    c.discretization.prewarp_hz = get_or<double>(d, "prewarp_hz", 0.0);
  }
  if (j.contains("signal")) {
    const json& s = j.at("signal");
    expect_keys(s, {"k_input", "k_calibration"}, "signal");
    c.signal.k_input = get_or<int>(s, "k_input", 5);
    c.signal.k_calibration = get_or<int>(s, "k_calibration", 10);
  }
  c.calibration_samples = get_or<int>(j, "calibration_samples", 189);
  c.mq_list = get_or<std::vector<int>>(j, "mq_list", {});
  c.k_list = get_or<std::vector<int>>(j, "k_list", {});
  c.reconstruct = get_or<bool>(j, "reconstruct", true);
  if (j.contains("solver")) {
    const json& s = j.at("solver");
    expect_keys(s, {"zeta_relative", "max_iterations", "optimality_tolerance"},
                "solver");
    c.solver.zeta_relative = get_or<double>(s, "zeta_relative", 1e-6);
    c.solver.max_iterations = get_or<int>(s, "max_iterations", 2500);
    c.solver.optimality_tolerance = get_or<double>(s, "optimality_tolerance", 1e-4);
  }
  c.seed = get_or<std::uint64_t>(j, "seed", 20130301ULL);
  c.threads = get_or<int>(j, "threads", 0);
  c.validate();
  return c;
}

}  // namespace

ExperimentConfig config_from_json_text(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& failure) {
    throw ConfigError(std::string("config: invalid JSON: ") + failure.what());
  }
  return config_from_json(parsed);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw ConfigError("config: cannot read " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(stream)),
                   std::istreambuf_iterator<char>());
  return config_from_json_text(text);
}

std::string config_to_json_text(const ExperimentConfig& config) {
  return config_to_json(config).dump(2);
}

std::string components_to_json_text(const LcComponents& c) {
  const json j = {{"c1", c.c1}, {"c3", c.c3}, {"l2", c.l2},
                  {"l4", c.l4}, {"rs", c.rs}, {"rl", c.rl}};
  return j.dump(2);
}

LcComponents components_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& failure) {
    throw ConfigError(std::string("components: invalid JSON: ") + failure.what());
  }
  expect_keys(j, {"c1", "c3", "l2", "l4", "rs", "rl"}, "components");
  LcComponents c;
  c.c1 = get_or<double>(j, "c1", 0.0);
  c.c3 = get_or<double>(j, "c3", 0.0);
  c.l2 = get_or<double>(j, "l2", 0.0);
  c.l4 = get_or<double>(j, "l4", 0.0);
  c.rs = get_or<double>(j, "rs", 0.0);
  c.rl = get_or<double>(j, "rl", 0.0);
  c.validate();
  return c;
}

std::string tolerance_to_json_text(const ToleranceModel& model) {
  const json j = {{"sigma_fraction", model.sigma_fraction},
                  {"truncation_sigmas", model.truncation_sigmas},
                  {"seed", model.seed}};
  return j.dump(2);
}

ToleranceModel tolerance_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& failure) {
    throw ConfigError(std::string("tolerance: invalid JSON: ") + failure.what());
  }
  expect_keys(j, {"sigma_fraction", "truncation_sigmas", "seed"}, "tolerance");
  ToleranceModel model;
  model.sigma_fraction = get_or<double>(j, "sigma_fraction", 0.02);
  model.truncation_sigmas = get_or<double>(j, "truncation_sigmas", 1.0);
  model.seed = get_or<std::uint64_t>(j, "seed", 0ULL);
  model.validate();
  return model;
}

std::string calibration_result_to_json_text(const CalibrationResult& result) {
  json j;
  j["branch"] = result.branch == CalibrationBranch::kLeastSquares ? "least-squares"
                                                                  : "tikhonov";
  j["residual_norm"] = result.residual_norm;
  j["truncated_rows"] = result.truncated_rows;
  j["retained_rows"] = result.retained_rows;
  j["error_estimate"] = std::vector<double>(
      result.error_estimate.data(),
      result.error_estimate.data() + result.error_estimate.size());
  j["calibrated_impulse"] = result.calibrated.samples;
  return j.dump(2);
}

std::string config_hash(const ExperimentConfig& config) {
  // nlohmann::json orders object keys, so dump() is canonical already.
  const std::string canonical = config_to_json(config).dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : canonical) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  json j;
  j["tool"] = "rdcalib";
  j["version"] = manifest.tool_version.empty() ? kVersion : manifest.tool_version;
  j["config_hash"] = manifest.config_hash;
  j["config"] = json::parse(manifest.resolved_config_json);
  j["master_seed"] = manifest.master_seed;
  j["started_utc"] = manifest.started_utc;
  j["finished_utc"] = manifest.finished_utc;
  j["outputs"] = manifest.outputs;
  std::ofstream stream(path);
  if (!stream) {
    throw std::runtime_error("write_manifest: cannot write " + path.string());
  }
  stream << j.dump(2) << "\n";
}

}  // namespace rdcalib
