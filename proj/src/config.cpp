#include "liemag/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace liemag {

const char* kLiemagVersion = "1.0.0";

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (...) {
    throw std::invalid_argument("config: bad number for " + key + ": '" + v + "'");
  }
}

int64_t to_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (...) {
    throw std::invalid_argument("config: bad integer for " + key + ": '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  throw std::invalid_argument("config: bad boolean for " + key + ": '" + v + "'");
}

}  // namespace

void RunConfig::validate() const {
  model.validate();
  if (steps < 1) throw std::invalid_argument("config: steps must be >= 1");
  for (int a = 0; a < grid.rank; ++a)
    if (grid.n[a] < 3)
      throw std::invalid_argument("config: grid must have at least 3 points per axis");
  if (dt < 0.0) throw std::invalid_argument("config: dt must be positive or auto");
  if (report_cadence < 1) throw std::invalid_argument("config: report cadence must be >= 1");
  if (output_dir.empty()) throw std::invalid_argument("config: output dir required");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::istringstream is(text);
  std::string line, section;
  int nx = 0, ny = 1, nz = 1, rank = 1;
  double hx = 1.0, hy = 1.0, hz = 1.0;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not 'key = value'");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    std::string full = section.empty() ? key : section + "." + key;

    if (full == "run.case") c.model.case_id = case_from_name(val);
    else if (full == "run.spin") c.model.spin = to_double(full, val);
    else if (full == "run.steps") c.steps = to_int(full, val);
    else if (full == "run.dt") c.dt = (val == "auto") ? 0.0 : to_double(full, val);
    else if (full == "run.report_cadence") c.report_cadence = static_cast<int>(to_int(full, val));
    else if (full == "run.snapshot_cadence") c.snapshot_cadence = to_int(full, val);
    else if (full == "run.output") c.output_dir = val;
    else if (full == "grid.nx") nx = static_cast<int>(to_int(full, val));
    else if (full == "grid.ny") { ny = static_cast<int>(to_int(full, val)); rank = std::max(rank, 2); }
    else if (full == "grid.nz") { nz = static_cast<int>(to_int(full, val)); rank = std::max(rank, 3); }
    else if (full == "grid.hx") hx = to_double(full, val);
    else if (full == "grid.hy") hy = to_double(full, val);
    else if (full == "grid.hz") hz = to_double(full, val);
    else if (full == "constants.J") c.model.J = to_double(full, val);
    else if (full == "constants.Jbar") c.model.Jbar = to_double(full, val);
    else if (full == "constants.A") c.model.A = to_double(full, val);
    else if (full == "constants.B") c.model.B = to_double(full, val);
    else if (full == "ic.kind") c.ic.kind = ic_kind_from_name(val);
    else if (full == "ic.base") c.ic.base = to_double(full, val);
    else if (full == "ic.amplitude") c.ic.amplitude = to_double(full, val);
    else if (full == "ic.mode") c.ic.mode = static_cast<int>(to_int(full, val));
    else if (full == "ic.seed") c.ic.seed = static_cast<uint64_t>(to_int(full, val));
    else if (full == "projection.hermitize") c.projections.hermitize = to_bool(full, val);
    else if (full == "projection.reorthogonalize_r")
      c.projections.reorthogonalize_r = to_bool(full, val);
    else if (full == "projection.renormalize_n") c.projections.renormalize_n = to_bool(full, val);
    else
      throw std::invalid_argument("config: unknown key '" + full + "'");
  }
  if (nx == 0) throw std::invalid_argument("config: grid.nx is required");
  c.grid = Grid(rank, {nx, ny, nz}, {hx, hy, hz});
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config_text(buf.str());
}

std::string config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["run"]["case"] = case_name(c.model.case_id);
  j["run"]["spin"] = c.model.spin;
  j["run"]["steps"] = c.steps;
  j["run"]["dt"] = c.dt == 0.0 ? nlohmann::json("auto") : nlohmann::json(c.dt);
  j["run"]["report_cadence"] = c.report_cadence;
  j["run"]["snapshot_cadence"] = c.snapshot_cadence;
  j["run"]["output"] = c.output_dir;
  j["grid"]["rank"] = c.grid.rank;
  j["grid"]["n"] = {c.grid.n[0], c.grid.n[1], c.grid.n[2]};
  j["grid"]["h"] = {c.grid.h[0], c.grid.h[1], c.grid.h[2]};
  j["constants"]["J"] = c.model.J;
  j["constants"]["Jbar"] = c.model.Jbar;
  j["constants"]["A"] = c.model.A;
  j["constants"]["B"] = c.model.B;
  j["ic"]["kind"] = ic_kind_name(c.ic.kind);
  j["ic"]["base"] = c.ic.base;
  j["ic"]["amplitude"] = c.ic.amplitude;
  j["ic"]["mode"] = c.ic.mode;
  j["ic"]["seed"] = c.ic.seed;
  j["projection"]["hermitize"] = c.projections.hermitize;
  j["projection"]["reorthogonalize_r"] = c.projections.reorthogonalize_r;
  j["projection"]["renormalize_n"] = c.projections.renormalize_n;
  return j.dump(2);
}

}  // namespace liemag
