#include "liemag/runner.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "liemag/bracket.hpp"
#include "liemag/diagnostics.hpp"
#include "liemag/snapshot.hpp"

namespace liemag {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class DirLock {
 public:
  explicit DirLock(const fs::path& dir) : path_(dir / ".lock") {
    std::error_code ec;
    fs::create_directories(dir, ec);
    FILE* f = std::fopen(path_.c_str(), "wx");
    if (!f)
      throw std::runtime_error("output directory " + dir.string() +
                               " is locked by another run (remove .lock if stale)");
    std::fclose(f);
  }
  ~DirLock() {
    std::error_code ec;
    fs::remove(path_, ec);
  }

 private:
  fs::path path_;
};

void write_manifest(const fs::path& dir, const RunConfig& c, double dt_used,
                    const std::vector<std::string>& columns, const std::string& status) {
  nlohmann::json j = nlohmann::json::parse(config_to_json(c));
  j["version"] = kLiemagVersion;
  j["dt_used"] = dt_used;
  j["csv_columns"] = columns;
  j["status"] = status;
  // Component-picture scale conventions relative to the matrix entries; the
  // cross-picture equivalence maps are the identity on Jbar with these.
  j["normalization"]["spin_vector"] = "s_a = tr(g sigma_a)/2";
  j["normalization"]["spin1"] = "s_a = i eps_abc g_bc, q_ab = (g_ab+g_ba)/2";
  j["normalization"]["spin32"] =
      "s_a = i eps_abc g_bc, u_a = i(g_a4-g_4a), v_a = g_a4+g_4a, q traceless";
  j["normalization"]["dirac"] = "gamma_a = tr(g gamma_hat_a)/4";
  j["normalization"]["ll_from_matrix"] = "J_ll = -J, Jbar_ll = 2 Jbar";
  std::ofstream os(dir / "manifest.json");
  os << j.dump(2) << "\n";
}

}  // namespace

int run_simulation(const RunConfig& config) {
  const fs::path dir(config.output_dir);
  DirLock lock(dir);

  SimState st = make_initial_state(config.model, config.grid, config.ic);
  const double dt = config.dt > 0.0 ? config.dt : auto_dt(config.model, st);
  const int64_t snap_every =
      config.snapshot_cadence > 0 ? config.snapshot_cadence
                                  : std::max<int64_t>(1, config.steps / 10);

  ConservationReport base = conservation_report(config.model, st);
  std::vector<std::string> columns = {"step", "time", "energy", "energy_drift"};
  for (auto& [name, v] : base.charges) columns.push_back(name);
  for (auto& c : base.casimirs) {
    columns.push_back(c.name + "_min");
    columns.push_back(c.name + "_max");
  }

  std::ofstream csv(dir / "conservation.csv");
  for (size_t i = 0; i < columns.size(); ++i) csv << (i ? "," : "") << columns[i];
  csv << "\n";

  auto emit_row = [&](const ConservationReport& rep) {
    csv << rep.step << "," << fmt(rep.time) << "," << fmt(rep.energy) << ","
        << fmt(std::abs(rep.energy - base.energy) /
               std::max(std::abs(base.energy), 1e-9));
    for (auto& [name, v] : rep.charges) csv << "," << fmt(v);
    for (auto& c : rep.casimirs) csv << "," << fmt(c.min) << "," << fmt(c.max);
    csv << "\n";
  };

  auto snap_name = [&](int64_t step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "snap_%08lld.bin", static_cast<long long>(step));
    return dir / buf;
  };

  emit_row(base);
  save_snapshot(snap_name(0).string(), st);

  try {
    for (int64_t step = 1; step <= config.steps; ++step) {
      step_rk4(st, config.model, dt, config.projections);
      if (step % config.report_cadence == 0 || step == config.steps)
        emit_row(conservation_report(config.model, st));
      if (step % snap_every == 0 && step != config.steps)
        save_snapshot(snap_name(step).string(), st);
    }
  } catch (const IntegrationBlowup& e) {
    std::cerr << "run aborted: " << e.what() << "\n";
    save_snapshot((dir / "abort.bin").string(), st);
    write_manifest(dir, config, dt, columns, std::string("aborted: ") + e.what());
    return 2;
  }

  save_snapshot((dir / "final.bin").string(), st);
  write_manifest(dir, config, dt, columns, "completed");
  return 0;
}

void export_tables(const std::string& dirname) {
  const fs::path dir(dirname);
  fs::create_directories(dir);
  for (const BracketTable* t : all_shipped_tables()) {
    std::ofstream os(dir / (t->name + ".json"));
    os << table_to_json(*t) << "\n";
  }
  for (const BasisSet* b : {&pauli_basis(), &spin1_basis(), &dirac_basis(), &so5_basis()}) {
    std::ofstream os(dir / ("basis_" + b->name + ".json"));
    os << basis_to_json(*b) << "\n";
  }
  std::vector<RelationCheck> checks = compare_reference_relations();
  {
    std::ofstream os(dir / "reference_comparison.txt");
    os << relation_report_text(checks);
  }
  nlohmann::json j = nlohmann::json::array();
  for (const RelationCheck& c : checks) {
    nlohmann::json e;
    e["table"] = c.table;
    e["relation"] = c.relation;
    e["status"] = c.status == RelationCheck::Status::Match ? "match"
                  : c.status == RelationCheck::Status::Mismatch ? "mismatch"
                                                                : "flagged_malformed";
    if (c.status != RelationCheck::Status::MalformedReference) e["max_diff"] = c.max_diff;
    if (!c.note.empty()) e["note"] = c.note;
    j.push_back(e);
  }
  std::ofstream os(dir / "reference_comparison.json");
  os << j.dump(2) << "\n";
}

}  // namespace liemag
