#include "elwave/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "elwave/errors.hpp"
#include "json.hpp"

namespace elwave {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("config: " + where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing required key '") + key + "'");
  return *it;
}

double as_num(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number, got " + std::string(v.type_name()));
  return v.get<double>();
}

double need_num(const json& j, const char* key, const std::string& where) {
  return as_num(need(j, key, where), where + "." + key);
}

double opt_num(const json& j, const char* key, double def, const std::string& where) {
  auto it = j.find(key);
  return it == j.end() ? def : as_num(*it, where + "." + key);
}

bool opt_bool(const json& j, const char* key, bool def, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) return def;
  if (!it->is_boolean()) fail(where + "." + key, "expected true or false");
  return it->get<bool>();
}

std::string need_str(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) {
        ok = true;
        break;
      }
    if (!ok) fail(where, "unknown key '" + it.key() + "'");
  }
}

}  // namespace

SimulationConfig parse_config_string(const std::string& text,
                                     const std::string& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  check_keys(root,
             {"regions", "media", "dt", "t_end", "source", "receivers", "output",
              "integrator", "sat", "cfl_safety"},
             "top level");

  SimulationConfig cfg;

  const json& regions = need(root, "regions", "top level");
  if (!regions.is_array() || regions.empty())
    fail("regions", "expected a non-empty array");
  for (size_t r = 0; r < regions.size(); ++r) {
    std::string where = "regions[" + std::to_string(r) + "]";
    check_keys(regions[r], {"Lx", "Ly", "h"}, where);
    RegionExtent e;
    e.Lx = need_num(regions[r], "Lx", where);
    e.Ly = need_num(regions[r], "Ly", where);
    e.h = need_num(regions[r], "h", where);
    cfg.regions.push_back(e);
  }

  const json& media = need(root, "media", "top level");
  if (media.contains("raster")) {
    check_keys(media, {"raster"}, "media");
    std::filesystem::path p = need_str(media, "raster", "media");
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    cfg.media.raster = load_media_raster(p.string());
  } else {
    check_keys(media, {"rho", "cp", "cs"}, "media");
    MediaPoint m;
    m.rho = need_num(media, "rho", "media");
    m.cp = need_num(media, "cp", "media");
    m.cs = need_num(media, "cs", "media");
    cfg.media.homogeneous = m;
  }

  cfg.dt = need_num(root, "dt", "top level");
  cfg.t_end = need_num(root, "t_end", "top level");

  if (root.contains("source")) {
    const json& s = root["source"];
    check_keys(s, {"x", "y", "f0", "t0", "amplitude", "spatial_sigma"}, "source");
    SourceSpec sp;
    sp.x = need_num(s, "x", "source");
    sp.y = need_num(s, "y", "source");
    sp.f0 = need_num(s, "f0", "source");
    sp.t0 = need_num(s, "t0", "source");
    sp.amplitude = opt_num(s, "amplitude", 1.0, "source");
    sp.spatial_sigma = opt_num(s, "spatial_sigma", 0.0, "source");
    cfg.source = sp;
  }

  if (root.contains("receivers")) {
    const json& recs = root["receivers"];
    if (!recs.is_array()) fail("receivers", "expected an array");
    for (size_t r = 0; r < recs.size(); ++r) {
      std::string where = "receivers[" + std::to_string(r) + "]";
      check_keys(recs[r], {"x", "y", "component"}, where);
      ReceiverSpec rs;
      rs.x = need_num(recs[r], "x", where);
      rs.y = need_num(recs[r], "y", where);
      rs.component = need_str(recs[r], "component", where);
      cfg.receivers.push_back(rs);
    }
  }

  if (root.contains("output")) {
    const json& o = root["output"];
    check_keys(o, {"directory", "decimation"}, "output");
    if (o.contains("directory")) cfg.output.directory = need_str(o, "directory", "output");
    double dec = opt_num(o, "decimation", 1.0, "output");
    if (dec < 1.0 || dec != std::floor(dec))
      fail("output.decimation", "expected a positive integer");
    cfg.output.decimation = int(dec);
  }

  if (root.contains("integrator")) {
    cfg.integrator = need_str(root, "integrator", "top level");
    if (cfg.integrator != "leapfrog" && cfg.integrator != "rk4")
      fail("integrator", "expected 'leapfrog' or 'rk4', got '" + cfg.integrator + "'");
  }

  if (root.contains("sat")) {
    const json& s = root["sat"];
    check_keys(s, {"free_surface", "interface"}, "sat");
    cfg.sat.free_surface = opt_bool(s, "free_surface", true, "sat");
    cfg.sat.interface = opt_bool(s, "interface", true, "sat");
  }

  cfg.cfl_safety = opt_num(root, "cfl_safety", 0.6, "top level");
  if (!(cfg.cfl_safety > 0.0) || cfg.cfl_safety > 1.0)
    fail("cfl_safety", "expected a value in (0, 1]");

  return cfg;
}

SimulationConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string dir = std::filesystem::path(path).parent_path().string();
  if (dir.empty()) dir = ".";
  return parse_config_string(ss.str(), dir);
}

}  // namespace elwave
