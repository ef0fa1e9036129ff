#include "wells/json_io.hpp"

namespace wells {

using nlohmann::json;

namespace {

double parse_depth(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfiniteDepth;
    throw DomainError(where + ": depth must be a positive number or \"inf\"");
  }
  if (!j.is_number()) {
    throw DomainError(where + ": depth must be a positive number or \"inf\"");
  }
  return j.get<double>();
}

WellSpec parse_well(const json& j, const std::string& where) {
  if (!j.is_object()) throw DomainError(where + ": expected an object");
  WellSpec w;
  if (!j.contains("center") || !j["center"].is_number()) {
    throw DomainError(where + ".center: expected a number");
  }
  w.center = j["center"].get<double>();
  if (!j.contains("half_width") || !j["half_width"].is_number()) {
    throw DomainError(where + ".half_width: expected a number");
  }
  w.half_width = j["half_width"].get<double>();
  if (j.contains("depth")) w.depth = parse_depth(j["depth"], where);
  return w;
}

std::vector<double> parse_depth_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw DomainError(where + ": expected an array");
  std::vector<double> out;
  for (const auto& d : j) out.push_back(parse_depth(d, where));
  return out;
}

}  // namespace

WellPair parse_well_pair(const json& j) {
  if (!j.is_object()) throw DomainError("well pair: expected an object");
  if (!j.contains("wells") || !j["wells"].is_array() || j["wells"].size() != 2) {
    throw DomainError("wells: expected an array of exactly two well specs");
  }
  WellPair pair;
  pair.left = parse_well(j["wells"][0], "wells[0]");
  pair.right = parse_well(j["wells"][1], "wells[1]");
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw DomainError("n: expected an integer");
    pair.n = j["n"].get<int>();
    if (pair.n < 1) throw DomainError("n: must be >= 1");
  }
  double hbar = 1.0, mass = 1.0;
  if (j.contains("hbar")) {
    if (!j["hbar"].is_number()) throw DomainError("hbar: expected a number");
    hbar = j["hbar"].get<double>();
  }
  if (j.contains("mass")) {
    if (!j["mass"].is_number()) throw DomainError("mass: expected a number");
    mass = j["mass"].get<double>();
  }
  pair.left.hbar = pair.right.hbar = hbar;
  pair.left.mass = pair.right.mass = mass;
  validate(pair.left);
  validate(pair.right);
  return pair;
}

SweepSpec parse_sweep_spec(const json& j) {
  if (!j.is_object() || !j.contains("base")) {
    throw DomainError("sweep: expected {\"base\", \"separations\", \"depths\"}");
  }
  SweepSpec spec;
  spec.base = parse_well_pair(j["base"]);
  if (!j.contains("separations") || !j["separations"].is_array()) {
    throw DomainError("separations: expected an array of numbers");
  }
  for (const auto& s : j["separations"]) {
    if (!s.is_number()) throw DomainError("separations: entries must be numbers");
    spec.separations.push_back(s.get<double>());
  }
  if (!j.contains("depths")) throw DomainError("depths: required");
  spec.depths = parse_depth_list(j["depths"], "depths");
  return spec;
}

}  // namespace wells
