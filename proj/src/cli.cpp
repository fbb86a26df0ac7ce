#include "qlift/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlift/cover.hpp"
#include "qlift/css_code.hpp"
#include "qlift/errors.hpp"
#include "qlift/gz_builder.hpp"
#include "qlift/hgp.hpp"
#include "qlift/io.hpp"
#include "qlift/presentation.hpp"
#include "qlift/zlift.hpp"

namespace qlift {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct LoadedCode {
  CodeManifest manifest;
  CssCode code;
  std::optional<ZLiftedCode> zlift;
};

LoadedCode load(const fs::path& manifest_path) {
  CodeManifest m = parse_manifest(manifest_path);
  const BitMatrix hx = read_bit_matrix(m.hx.path, m.hx.format);
  const BitMatrix hz = m.hz ? read_bit_matrix(m.hz->path, m.hz->format) : BitMatrix(0, hx.cols());
  CssCode code(hx, hz);
  std::optional<ZLiftedCode> zl;
  if (m.hx_lift || m.hz_lift) {
    if (!m.hx_lift) throw Error(ErrorKind::validation, "manifest gives hz_lift without hx_lift");
    const IntMatrix hxl = read_int_matrix(*m.hx_lift);
    const IntMatrix hzl = m.hz_lift ? read_int_matrix(*m.hz_lift) : IntMatrix(0, hxl.cols());
    zl = validate_zlift(code, hxl, hzl);
  }
  return {std::move(m), std::move(code), std::move(zl)};
}

/// The manifest's Z-lift, else the base read over Z, else a bounded search.
ZLiftedCode require_zlift(const LoadedCode& loaded) {
  if (loaded.zlift) return *loaded.zlift;
  try {
    return trivial_zlift(loaded.code);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::validation) throw;
  }
  if (auto w = support_preserving_witness(loaded.code)) return *w;
  throw Error(ErrorKind::validation, "no Z-lift given and no support-preserving lift with entries up to " +
                                         std::to_string(default_entry_bound) + " exists");
}

LiftPresentation load_presentation(const LoadedCode& loaded) {
  const std::string source = loaded.manifest.presentation.value_or("cone");
  if (source == "cone") return cone_presentation(loaded.code);
  if (source == "cellular") return cellular_presentation(require_zlift(loaded));
  return presentation_from_json(read_json(source));
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json params_json(const CodeParams& p) {
  json j{{"n", p.n}, {"k", p.k}, {"label", p.to_string()}};
  j["d"] = p.d ? json(*p.d) : json(nullptr);
  return j;
}

void write_json_file(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse, path.string() + ": cannot write file");
  out << j.dump(2) << '\n';
}

json report(const std::string& command) { return json{{"schema_version", schema_version}, {"command", command}}; }

struct Output {
  std::ostream& out;
  bool as_json = false;

  void emit(const json& j, const std::string& human) const {
    if (as_json) {
      out << j.dump(2) << '\n';
    } else {
      out << human;
    }
  }
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::budget: return 3;
    case ErrorKind::parse: return 4;
    default: return 2;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifting quantum CSS codes through covers of their cell complexes", "qlift"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print reports as JSON");

  std::string manifest;
  auto* check = app.add_subcommand("check", "Validate orthogonality and the Z-lift of a code");
  check->add_option("manifest", manifest, "Code manifest (JSON)")->required();

  bool with_distance = false;
  std::uint64_t budget = default_distance_budget;
  auto* params = app.add_subcommand("params", "Report code parameters");
  params->add_option("manifest", manifest, "Code manifest (JSON)")->required();
  params->add_flag("--distance", with_distance, "Compute the minimum distance by enumeration");
  params->add_option("--budget", budget, "Maximum kernel vectors to enumerate");

  std::string h1_path, h2_path, out_dir;
  auto* hgp = app.add_subcommand("hgp", "Build a hypergraph product code");
  hgp->add_option("h1", h1_path, "First classical parity-check matrix")->required();
  hgp->add_option("h2", h2_path, "Second classical parity-check matrix")->required();
  hgp->add_option("-o,--output", out_dir, "Output directory")->required();

  int k_max = default_k_max;
  std::int64_t bound = default_entry_bound;
  std::uint64_t search_budget = default_search_budget;
  auto* zlift = app.add_subcommand("zlift", "Search for or refute support-preserving Z-lifts");
  zlift->require_subcommand(1);
  auto* refute = zlift->add_subcommand("refute", "Refute by modular search");
  refute->add_option("manifest", manifest, "Code manifest (JSON)")->required();
  refute->add_option("--kmax", k_max, "Largest modulus exponent");
  refute->add_option("--budget", search_budget, "Search node budget per modulus");
  auto* witness = zlift->add_subcommand("witness", "Find a bounded support-preserving Z-lift");
  witness->add_option("manifest", manifest, "Code manifest (JSON)")->required();
  witness->add_option("--bound", bound, "Odd bound on entry magnitudes");
  witness->add_option("--budget", search_budget, "Search node budget");
  witness->add_option("-o,--output", out_dir, "Write the lifted matrices here");

  std::size_t z_index = 0;
  std::optional<std::uint64_t> seed;
  auto* gz = app.add_subcommand("gz", "Build G_z and its Betti-number descriptor");
  gz->add_option("manifest", manifest, "Code manifest (JSON)")->required();
  gz->add_option("--z", z_index, "Z-check index")->required();
  gz->add_option("--seed", seed, "Seed for a random edge pairing");

  std::string voltage_path;
  auto* lift = app.add_subcommand("lift", "Lift a code along a voltage assignment");
  lift->add_option("manifest", manifest, "Code manifest (JSON)")->required();
  lift->add_option("--voltages", voltage_path, "Voltage file (JSON)");
  lift->add_option("-o,--output", out_dir, "Output directory")->required();
  lift->add_option("--budget", budget, "Distance enumeration budget");

  std::size_t degree = 2;
  bool connected_only = false;
  auto* covers = app.add_subcommand("covers", "Enumerate covers of a given degree up to relabelling");
  covers->add_option("manifest", manifest, "Code manifest (JSON)")->required();
  covers->add_option("--degree", degree, "Cover degree")->required();
  covers->add_flag("--connected", connected_only, "Keep connected covers only");
  covers->add_option("-o,--output", out_dir, "Write one voltage file per class here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const Output o{out, as_json};
  try {
    if (*check) {
      const LoadedCode loaded = load(manifest);
      json j = report("check");
      j["n"] = loaded.code.n();
      j["x_checks"] = loaded.code.hx().rows();
      j["z_checks"] = loaded.code.hz().rows();
      j["orthogonal"] = true;
      std::string human = "CSS code valid: n=" + std::to_string(loaded.code.n()) + ", " +
                          std::to_string(loaded.code.hx().rows()) + " X-checks, " +
                          std::to_string(loaded.code.hz().rows()) + " Z-checks\n";
      if (loaded.zlift) {
        j["zlift"] = {{"valid", true}, {"support_preserving", loaded.zlift->support_preserving}};
        human += std::string("Z-lift valid, support-preserving: ") +
                 (loaded.zlift->support_preserving ? "yes" : "no") + "\n";
      }
      o.emit(j, human);
    } else if (*params) {
      const LoadedCode loaded = load(manifest);
      const CodeParams p = with_distance ? parameters_with_distance(loaded.code, budget) : parameters(loaded.code);
      json j = report("params");
      j["params"] = params_json(p);
      o.emit(j, p.to_string() + "\n");
    } else if (*hgp) {
      const BitMatrix h1 = read_bit_matrix(h1_path);
      const BitMatrix h2 = read_bit_matrix(h2_path);
      const CssCode code = hypergraph_product(h1, h2);
      const ZLiftedCode zl = hpc_naive_zlift(h1, h2);
      const fs::path dir(out_dir);
      fs::create_directories(dir);
      write_bit_matrix(dir / "hx.alist", code.hx(), MatrixFormat::alist);
      write_bit_matrix(dir / "hz.alist", code.hz(), MatrixFormat::alist);
      write_int_matrix(dir / "hx_lift.zmat", zl.hx);
      write_int_matrix(dir / "hz_lift.zmat", zl.hz);
      write_json_file(dir / "presentation.json", presentation_to_json(cone_presentation(code)));
      write_json_file(dir / "manifest.json", json{{"hx", "hx.alist"},
                                                  {"hz", "hz.alist"},
                                                  {"hx_lift", "hx_lift.zmat"},
                                                  {"hz_lift", "hz_lift.zmat"},
                                                  {"presentation", "presentation.json"}});
      const CodeParams p = parameters(code);
      json j = report("hgp");
      j["params"] = params_json(p);
      j["support_preserving"] = zl.support_preserving;
      write_json_file(dir / "report.json", j);
      o.emit(j, "hypergraph product " + p.to_string() + " written to " + dir.string() + "\n");
    } else if (*refute) {
      const LoadedCode loaded = load(manifest);
      const RefutationVerdict v = refute_support_preserving(loaded.code, k_max, search_budget);
      json j = report("zlift refute");
      j["refuted"] = v.refuted;
      j["exponent"] = v.exponent;
      j["verdict"] = v.to_string();
      o.emit(j, v.to_string() + "\n");
    } else if (*witness) {
      const LoadedCode loaded = load(manifest);
      const auto w = support_preserving_witness(loaded.code, bound, search_budget);
      json j = report("zlift witness");
      j["bound"] = bound;
      j["found"] = w.has_value();
      std::string human = "no support-preserving Z-lift with entries up to " + std::to_string(bound) + "\n";
      if (w) {
        j["hx"] = matrix_json(w->hx);
        j["hz"] = matrix_json(w->hz);
        human = "H_X lift:\n" + to_string(w->hx) + "H_Z lift:\n" + to_string(w->hz);
        if (!out_dir.empty()) {
          fs::create_directories(out_dir);
          write_int_matrix(fs::path(out_dir) / "hx_lift.zmat", w->hx);
          write_int_matrix(fs::path(out_dir) / "hz_lift.zmat", w->hz);
        }
      }
      o.emit(j, human);
    } else if (*gz) {
      const LoadedCode loaded = load(manifest);
      const ZLiftedCode zl = require_zlift(loaded);
      const MultCopyGraph m = multigraph_z(zl, z_index);
      const PairingStrategy strategy = seed ? PairingStrategy::seeded(*seed) : PairingStrategy::lexicographic();
      const GzGraph g = pair_edges(m, strategy);
      const YzDescriptor d = betti_components(g);
      json j = report("gz");
      j["z"] = z_index;
      j["q_copies"] = g.q_copies.size();
      j["x_copies"] = g.x_copies.size();
      j["vertices"] = g.graph.vertex_count;
      j["edges"] = json::array();
      for (const auto& e : g.graph.edges) j["edges"].push_back(json::array({e.from, e.to}));
      j["betti"] = d.betti;
      j["descriptor"] = d.to_string();
      o.emit(j, "q-copies: " + std::to_string(g.q_copies.size()) + "\nx-copies: " +
                    std::to_string(g.x_copies.size()) + "\nvertices: " + std::to_string(g.graph.vertex_count) +
                    "\nedges: " + std::to_string(g.graph.edges.size()) + "\ncomponents: " +
                    std::to_string(d.betti.size()) + "\nY_z: " + d.to_string() + "\n");
    } else if (*lift) {
      const LoadedCode loaded = load(manifest);
      const ZLiftedCode zl = require_zlift(loaded);
      const LiftPresentation p = load_presentation(loaded);
      std::string source = voltage_path;
      if (source.empty() && loaded.manifest.voltages) source = loaded.manifest.voltages->string();
      if (source.empty()) throw Error(ErrorKind::validation, "no voltage file given");
      const VoltageAssignment v = voltages_from_json(read_json(source), p);
      const LiftedCode lifted = lift_code(loaded.code, zl, p, v);
      const fs::path dir(out_dir);
      fs::create_directories(dir);
      write_int_matrix(dir / "hx_lift.zmat", lifted.zlifted.hx);
      write_int_matrix(dir / "hz_lift.zmat", lifted.zlifted.hz);
      write_bit_matrix(dir / "hx.alist", lifted.code().hx(), MatrixFormat::alist);
      write_bit_matrix(dir / "hz.alist", lifted.code().hz(), MatrixFormat::alist);
      write_json_file(dir / "manifest.json", json{{"hx", "hx.alist"},
                                                  {"hz", "hz.alist"},
                                                  {"hx_lift", "hx_lift.zmat"},
                                                  {"hz_lift", "hz_lift.zmat"}});
      json j = report("lift");
      j["degree"] = v.degree;
      j["components"] = cover_components(v, p).size();
      CodeParams base_params = parameters(loaded.code);
      CodeParams lifted_params = parameters(lifted.code());
      std::string note;
      try {
        base_params.d = distance(loaded.code, budget);
        lifted_params.d = distance(lifted.code(), budget);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::budget) throw;
        note = "distance skipped: " + std::string(e.what()) + "\n";
        j["distance_note"] = e.what();
      }
      j["base"] = params_json(base_params);
      j["lifted"] = params_json(lifted_params);
      write_json_file(dir / "report.json", j);
      o.emit(j, "base " + base_params.to_string() + " -> lifted " + lifted_params.to_string() + " (degree " +
                    std::to_string(v.degree) + ", " + std::to_string(cover_components(v, p).size()) +
                    " components)\n" + note);
    } else if (*covers) {
      const LoadedCode loaded = load(manifest);
      const LiftPresentation p = load_presentation(loaded);
      const auto classes = enumerate_covers(p, degree, connected_only);
      json j = report("covers");
      j["degree"] = degree;
      j["connected_only"] = connected_only;
      j["classes"] = json::array();
      std::string human = std::to_string(classes.size()) + " classes of degree " + std::to_string(degree) +
                          (connected_only ? " connected" : "") + " covers\n";
      if (!out_dir.empty()) fs::create_directories(out_dir);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto orbits = cover_components(classes[i], p);
        json entry{{"index", i}, {"orbits", orbits}, {"voltages", voltages_to_json(p, classes[i])}};
        j["classes"].push_back(entry);
        human += "class " + std::to_string(i) + ": " + std::to_string(orbits.size()) + " component(s)\n";
        if (!out_dir.empty()) {
          write_json_file(fs::path(out_dir) / ("voltages_" + std::to_string(i) + ".json"),
                          voltages_to_json(p, classes[i]));
        }
      }
      if (!out_dir.empty()) write_json_file(fs::path(out_dir) / "report.json", j);
      o.emit(j, human);
    }
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    if (as_json) out << json{{"error", {{"category", to_string(e.kind())}, {"message", e.what()}}}}.dump(2) << '\n';
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error[parse]: " << e.what() << '\n';
    return 4;
  }
  return 0;
}

}  // namespace qlift
