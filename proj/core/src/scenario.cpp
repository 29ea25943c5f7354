#include "mwi/scenario.hpp"

#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

namespace mwi {

namespace {

using nlohmann::json;

void reject_unknown(const json& node, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError("scenario: unknown key \"" + where + it.key() + "\"");
    }
  }
}

double number(const json& node, const std::string& key, const std::string& where,
              bool required = true, double fallback = 0.0) {
  if (!node.contains(key)) {
    if (required) throw ConfigError("scenario: missing key \"" + where + key + "\"");
    return fallback;
  }
  const json& v = node.at(key);
  if (!v.is_number()) {
    throw ConfigError("scenario: \"" + where + key + "\" must be a number");
  }
  return v.get<double>();
}

MoleculeSpec parse_molecule(const json& node) {
  reject_unknown(node,
                 {"mass", "radius", "dielectric_constant", "emissivity",
                  "internal_temperature", "vibrational_photon_rate",
                  "vibrational_wavenumber"},
                 "molecule.");
  MoleculeSpec m;
  m.mass = number(node, "mass", "molecule.");
  m.radius = number(node, "radius", "molecule.");
  m.dielectric_constant = number(node, "dielectric_constant", "molecule.");
  m.emissivity = number(node, "emissivity", "molecule.");
  m.internal_temperature = number(node, "internal_temperature", "molecule.");
  m.vibrational_photon_rate = number(node, "vibrational_photon_rate", "molecule.", false);
  m.vibrational_wavenumber = number(node, "vibrational_wavenumber", "molecule.", false);
  return m;
}

EnvironmentSpec parse_environment(const json& node) {
  reject_unknown(node, {"temperature", "pressure", "gas_mass", "cross_section"},
                 "environment.");
  EnvironmentSpec e;
  e.temperature = number(node, "temperature", "environment.");
  e.pressure = number(node, "pressure", "environment.");
  e.gas_mass = number(node, "gas_mass", "environment.");
  e.cross_section = number(node, "cross_section", "environment.");
  return e;
}

CollimationSpec parse_collimation(const json& node) {
  reject_unknown(node, {"aperture", "separation", "sigma_kx"}, "collimation.");
  CollimationSpec c;
  c.aperture = number(node, "aperture", "collimation.", false);
  c.separation = number(node, "separation", "collimation.", false);
  c.sigma_kx = number(node, "sigma_kx", "collimation.", false);
  return c;
}

GratingSpec parse_grating(const json& node) {
  reject_unknown(node, {"period", "slit_width", "slit_count", "aperture_shape", "sigma_x"},
                 "grating.");
  GratingSpec g;
  g.period = number(node, "period", "grating.");
  g.slit_width = number(node, "slit_width", "grating.");
  if (!node.contains("slit_count") || !node.at("slit_count").is_number_integer()) {
    throw ConfigError("scenario: \"grating.slit_count\" must be an integer");
  }
  g.slit_count = node.at("slit_count").get<int>();
  if (node.contains("aperture_shape")) {
    const std::string s = node.at("aperture_shape").get<std::string>();
    if (s == "rectangular") {
      g.shape = ApertureShape::rectangular;
    } else if (s == "gaussian") {
      g.shape = ApertureShape::gaussian;
    } else {
      throw ConfigError("scenario: grating.aperture_shape must be \"rectangular\" or "
                        "\"gaussian\", got \"" + s + "\"");
    }
  }
  g.sigma_x = number(node, "sigma_x", "grating.", false);
  return g;
}

GeometrySpec parse_geometry(const json& node) {
  reject_unknown(node, {"screen_distance", "detector_half_width", "background"},
                 "geometry.");
  GeometrySpec g;
  g.screen_distance = number(node, "screen_distance", "geometry.");
  g.detector_half_width = number(node, "detector_half_width", "geometry.", false);
  g.background = number(node, "background", "geometry.", false);
  return g;
}

BeamSpec parse_beam(const json& node) {
  reject_unknown(node, {"mode", "wavelength", "v0", "v_hat", "velocity_window"}, "beam.");
  BeamSpec b;
  const std::string mode = node.contains("mode")
                               ? node.at("mode").get<std::string>()
                               : std::string("monochromatic");
  if (mode == "monochromatic") {
    b.mode = BeamMode::monochromatic;
  } else if (mode == "supersonic") {
    b.mode = BeamMode::supersonic;
  } else {
    throw ConfigError("scenario: beam.mode must be \"monochromatic\" or \"supersonic\", "
                      "got \"" + mode + "\"");
  }
  b.wavelength = number(node, "wavelength", "beam.", false);
  b.v0 = number(node, "v0", "beam.", false);
  b.v_hat = number(node, "v_hat", "beam.", false);
  if (node.contains("velocity_window")) {
    const json& w = node.at("velocity_window");
    if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number()) {
      throw ConfigError("scenario: beam.velocity_window must be [v_min, v_max]");
    }
    b.window_min = w[0].get<double>();
    b.window_max = w[1].get<double>();
  }
  return b;
}

ExperimentConfig parse_tree(const json& root) {
  if (!root.is_object()) throw ConfigError("scenario: top level must be an object");
  reject_unknown(root,
                 {"molecule", "environment", "collimation", "grating", "geometry", "beam"},
                 "");
  for (const char* key :
       {"molecule", "environment", "collimation", "grating", "geometry", "beam"}) {
    if (!root.contains(key)) {
      throw ConfigError(std::string("scenario: missing section \"") + key + "\"");
    }
  }
  ExperimentConfig cfg;
  cfg.molecule = parse_molecule(root.at("molecule"));
  cfg.environment = parse_environment(root.at("environment"));
  cfg.collimation = parse_collimation(root.at("collimation"));
  cfg.grating = parse_grating(root.at("grating"));
  cfg.geometry = parse_geometry(root.at("geometry"));
  cfg.beam = parse_beam(root.at("beam"));
  return cfg;
}

} // namespace

ExperimentConfig parse_scenario(const std::string& text) {
  json root;
  try {
    root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario: malformed JSON: ") + e.what());
  }
  return parse_tree(root);
}

ExperimentConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("scenario: cannot open \"" + path + "\"");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_scenario(text);
}

} // namespace mwi
