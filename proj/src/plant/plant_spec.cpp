#include "sbpg/plant/plant_spec.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <fmt/format.h>

#include "sbpg/core/errors.hpp"

namespace sbpg::plant {

using nlohmann::json;

namespace {

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void PlantSpec::validate() const {
  if (!finite_positive(dt)) throw ConfigError("plant dt must be > 0");
  if (!finite_positive(demand_rate)) throw ConfigError("demand_rate must be > 0");
  if (actuators.empty()) throw ConfigError("plant needs at least one actuator");
  const std::size_t expected_buffers =
      demand_mode == DemandMode::last_buffer ? actuators.size() : actuators.size() - 1;
  if (buffers.size() != expected_buffers) {
    throw ConfigError(fmt::format("demand mode {} needs {} buffers for {} actuators",
                                  to_string(demand_mode), expected_buffers, actuators.size()));
  }
  if (demand_mode == DemandMode::last_buffer && buffers.empty())
    throw ConfigError("plant needs at least one buffer");
  if (!(weights.alpha_l > 0.0 && weights.alpha_p > 0.0 && weights.alpha_d > 0.0))
    throw ConfigError("utility weights must be positive");
  if (!(weights.alpha_d < 1.0)) throw ConfigError("alpha_d must be < 1 so the demand term stays finite");

  std::set<std::string> names{kSourceName, kDemandName};
  for (const auto& b : buffers) {
    if (!names.insert(b.name).second) throw ConfigError("duplicate buffer name '" + b.name + "'");
    if (!finite_positive(b.capacity)) throw ConfigError("buffer '" + b.name + "' capacity must be > 0");
    if (!(b.initial_fill >= 0.0 && b.initial_fill <= 1.0))
      throw ConfigError("buffer '" + b.name + "' initial_fill must be in [0,1]");
    if (!(b.lower > 0.0 && b.lower < b.upper && b.upper < 1.0))
      throw ConfigError("buffer '" + b.name + "' thresholds must satisfy 0 < lower < upper < 1");
  }
  for (std::size_t i = 0; i < actuators.size(); ++i) {
    const auto& a = actuators[i];
    const auto src = source_buffer(i);
    const auto dst = sink_buffer(i);
    const std::string expected_source = src ? buffers[*src].name : kSourceName;
    const std::string expected_sink = dst ? buffers[*dst].name : kDemandName;
    if (a.source != expected_source || a.sink != expected_sink) {
      throw ConfigError(fmt::format("actuator '{}' must move {} -> {} to keep the chain connected",
                                    a.name, expected_source, expected_sink));
    }
    if (!finite_positive(a.flow_max)) throw ConfigError("actuator '" + a.name + "' flow_max must be > 0");
    if (!(a.power_idle >= 0.0 && a.power_idle <= a.power_max && std::isfinite(a.power_max)))
      throw ConfigError("actuator '" + a.name + "' needs 0 <= power_idle <= power_max");
    if (!finite_positive(a.power_exponent))
      throw ConfigError("actuator '" + a.name + "' power_exponent must be > 0");
  }
}

std::optional<std::size_t> PlantSpec::source_buffer(std::size_t player) const {
  if (player == 0) return std::nullopt;
  return player - 1;
}

std::optional<std::size_t> PlantSpec::sink_buffer(std::size_t player) const {
  if (player >= buffers.size()) return std::nullopt;
  return player;
}

std::string_view to_string(PenaltyMode mode) {
  switch (mode) {
    case PenaltyMode::relief: return "relief";
    case PenaltyMode::band: return "band";
    case PenaltyMode::fault: return "fault";
  }
  return "relief";
}

std::string_view to_string(DemandMode mode) {
  return mode == DemandMode::last_buffer ? "last_buffer" : "last_actuator";
}

namespace {

DemandMode parse_demand_mode(const std::string& s) {
  if (s == "last_buffer") return DemandMode::last_buffer;
  if (s == "last_actuator") return DemandMode::last_actuator;
  throw ConfigError("demand_mode must be last_buffer or last_actuator, got '" + s + "'");
}

PenaltyMode parse_penalty_mode(const std::string& s) {
  if (s == "relief") return PenaltyMode::relief;
  if (s == "band") return PenaltyMode::band;
  if (s == "fault") return PenaltyMode::fault;
  throw ConfigError("penalty_mode must be relief, band or fault, got '" + s + "'");
}

}  // namespace

PlantSpec plant_spec_from_json(const json& j) {
  try {
    PlantSpec spec;
    spec.name = get_or<std::string>(j, "name", "plant");
    spec.dt = get_or(j, "dt", spec.dt);
    spec.demand_rate = j.at("demand_rate").get<double>();
    spec.demand_mode = parse_demand_mode(get_or<std::string>(j, "demand_mode", "last_buffer"));
    spec.penalty_mode = parse_penalty_mode(get_or<std::string>(j, "penalty_mode", "relief"));
    for (const auto& b : j.at("buffers")) {
      BufferSpec buf;
      buf.name = b.at("name").get<std::string>();
      buf.capacity = b.at("capacity").get<double>();
      buf.initial_fill = get_or(b, "initial_fill", buf.initial_fill);
      buf.lower = get_or(b, "lower", buf.lower);
      buf.upper = get_or(b, "upper", buf.upper);
      spec.buffers.push_back(std::move(buf));
    }
    for (const auto& a : j.at("actuators")) {
      ActuatorSpec act;
      act.name = a.at("name").get<std::string>();
      act.kind = get_or<std::string>(a, "class", "");
      act.flow_max = a.at("flow_max").get<double>();
      act.power_idle = get_or(a, "power_idle", 0.0);
      act.power_max = a.at("power_max").get<double>();
      act.power_exponent = get_or(a, "power_exponent", 1.0);
      act.source = a.at("source").get<std::string>();
      act.sink = a.at("sink").get<std::string>();
      spec.actuators.push_back(std::move(act));
    }
    if (j.contains("weights")) {
      const auto& w = j.at("weights");
      spec.weights.alpha_l = get_or(w, "alpha_l", spec.weights.alpha_l);
      spec.weights.alpha_d = get_or(w, "alpha_d", spec.weights.alpha_d);
      spec.weights.alpha_p = get_or(w, "alpha_p", spec.weights.alpha_p);
    }
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("plant definition: ") + e.what());
  }
}

json to_json(const PlantSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["dt"] = spec.dt;
  j["demand_rate"] = spec.demand_rate;
  j["demand_mode"] = std::string(to_string(spec.demand_mode));
  j["penalty_mode"] = std::string(to_string(spec.penalty_mode));
  j["buffers"] = json::array();
  for (const auto& b : spec.buffers) {
    j["buffers"].push_back({{"name", b.name},
                            {"capacity", b.capacity},
                            {"initial_fill", b.initial_fill},
                            {"lower", b.lower},
                            {"upper", b.upper}});
  }
  j["actuators"] = json::array();
  for (const auto& a : spec.actuators) {
    j["actuators"].push_back({{"name", a.name},
                              {"class", a.kind},
                              {"flow_max", a.flow_max},
                              {"power_idle", a.power_idle},
                              {"power_max", a.power_max},
                              {"power_exponent", a.power_exponent},
                              {"source", a.source},
                              {"sink", a.sink}});
  }
  j["weights"] = {{"alpha_l", spec.weights.alpha_l},
                  {"alpha_d", spec.weights.alpha_d},
                  {"alpha_p", spec.weights.alpha_p}};
  return j;
}

PlantSpec load_plant_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("plant definition not found: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("plant definition " + path + ": " + e.what());
  }
  return plant_spec_from_json(j);
}

}  // namespace sbpg::plant
