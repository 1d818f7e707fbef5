#include "stadion/diophantine.hpp"
#include "stadion/pipeline.hpp"
#include "stadion/report.hpp"
#include "stadion/semiclassics.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

using namespace stadion;

namespace {

struct Common {
  std::string case_name = "A";
  std::string config_path;
  double accuracy = 0.0;
  std::uint64_t zcap = 0;
  std::uint64_t z = 0;
  int threads = 0;
  std::string out;
};

void add_case(CLI::App* app, Common& c) {
  app->add_option("--case", c.case_name, "A, B or C")->capture_default_str();
  app->add_option("--config", c.config_path, "JSON case file; overrides --case");
}

void add_accuracy(CLI::App* app, Common& c) {
  app->add_option("--accuracy", c.accuracy, "Diophantine accuracy eps (default: the case preset)");
  app->add_option("--zcap", c.zcap, "largest multiplier scanned");
  app->add_option("--z", c.z, "use this multiplier instead of searching");
  app->add_option("--threads", c.threads, "worker threads (default: STADION_THREADS, then all cores)");
}

CaseConfig resolve_config(const Common& c) {
  if (!c.config_path.empty()) return load_config(c.config_path);
  const CaseLabel label = parse_case_label(c.case_name);
  if (label == CaseLabel::Custom) throw std::invalid_argument("custom cases need --config");
  return preset(label);
}

double resolve_eps(const Common& c, const CaseConfig& cfg) {
  const double eps = c.accuracy > 0 ? c.accuracy : cfg.accuracy;
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("no accuracy given and the case has no default");
  return eps;
}

Approximation resolve_z(const Common& c, const CaseGeometry& g, const IrrationalSet& x, double eps) {
  if (c.z > 0) {
    Approximation a = approximation_at(x, c.z);
    a.eps = eps;
    a.N = std::pow(eps, -double(x.size()));
    return a;
  }
  ScanOptions so;
  so.threads = resolve_threads(c.threads);
  const std::uint64_t cap = c.zcap ? c.zcap : g.config.z_cap;
  Approximation a = min_z_for_accuracy(x, eps, cap, so);
  if (!a.found) throw std::runtime_error("no multiplier up to zcap = " + std::to_string(cap) + " meets the accuracy");
  return a;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stadion: semiclassical quantization of stadium billiards through rational polygon envelopes"};
  app.require_subcommand(1);
  Common c;
  std::size_t samples = 10000, boundary_samples = 4096, grid = 512;
  long m = 1, n = 2, mmax = 10;
  std::vector<double> eps_list;
  bool certify = false, lattice = false;
  std::string format = "csv";

  auto* envelope = app.add_subcommand("envelope", "tangent polygon of the stadium");
  add_case(envelope, c);
  envelope->add_option("--samples", samples, "stadium boundary samples for the checks")->capture_default_str();
  envelope->add_option("--out", c.out, "JSON output (default stdout)");

  auto* unfold = app.add_subcommand("unfold", "unfolding, periods and genus of the quarter polygon");
  add_case(unfold, c);
  unfold->add_option("--out", c.out, "JSON output");

  auto* dioph = app.add_subcommand("dioph", "smallest multiplier Z for a given accuracy");
  add_case(dioph, c);
  dioph->add_option("--accuracy", eps_list, "one or more accuracies; several give the step function");
  dioph->add_option("--zcap", c.zcap, "largest multiplier scanned");
  dioph->add_option("--threads", c.threads, "worker threads");
  dioph->add_flag("--certify", certify, "independent exhaustive minimality check");
  dioph->add_flag("--lattice", lattice, "basis-reduction search instead of the scan (not certified minimal)");
  dioph->add_option("--out", c.out, "CSV output");

  auto* spectrum = app.add_subcommand("spectrum", "energy levels 8 pi^2 Z^2 (m^2 + n^2)");
  add_case(spectrum, c);
  add_accuracy(spectrum, c);
  spectrum->add_option("--mmax", mmax, "largest mode number")->capture_default_str();
  spectrum->add_option("--out", c.out, "CSV output");

  auto* swf = app.add_subcommand("swf", "wave function on a grid over the quarter");
  add_case(swf, c);
  add_accuracy(swf, c);
  swf->add_option("--m", m)->capture_default_str();
  swf->add_option("--n", n)->capture_default_str();
  swf->add_option("--grid", grid, "points per axis")->capture_default_str();
  swf->add_option("--format", format, "csv (x,y,re,im) or matrix (headerless Re psi)")
      ->check(CLI::IsMember({"csv", "matrix"}))
      ->capture_default_str();
  swf->add_option("--out", c.out, "output file");

  auto* residual = app.add_subcommand("residual", "boundary, diagonal and nodal certificates");
  add_case(residual, c);
  add_accuracy(residual, c);
  residual->add_option("--m", m)->capture_default_str();
  residual->add_option("--n", n)->capture_default_str();
  residual->add_option("--samples", boundary_samples, "points per boundary side")->capture_default_str();
  residual->add_option("--out", c.out, "JSON output");

  auto* report = app.add_subcommand("report", "full pipeline summary");
  add_case(report, c);
  add_accuracy(report, c);
  report->add_option("--m", m)->capture_default_str();
  report->add_option("--n", n)->capture_default_str();
  report->add_option("--mmax", mmax, "spectrum slice size")->capture_default_str();
  report->add_option("--samples", boundary_samples, "points per boundary side")->capture_default_str();
  report->add_option("--out", c.out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const CaseConfig cfg = resolve_config(c);
    const CaseGeometry g = build_case(cfg);

    if (envelope->parsed()) {
      emit(c.out, dump_json(envelope_json(g, samples)));
    } else if (unfold->parsed()) {
      emit(c.out, dump_json(unfold_json(g)));
    } else if (dioph->parsed()) {
      const IrrationalSet x = irrationals_for(g);
      if (eps_list.empty()) eps_list.push_back(resolve_eps(c, cfg));
      ScanOptions so;
      so.threads = resolve_threads(c.threads);
      const std::uint64_t cap = c.zcap ? c.zcap : cfg.z_cap;
      std::vector<Approximation> rows;
      if (lattice) {
        for (double e : eps_list) rows.push_back(lattice_search(x, e, cap));
      } else {
        std::vector<double> grid_eps = eps_list;
        std::sort(grid_eps.begin(), grid_eps.end(), std::greater<>());
        rows = step_function(x, grid_eps, cap, so);
      }
      std::string csv = dioph_csv_header(x.size());
      for (const auto& a : rows) csv += dioph_csv_row(a);
      emit(c.out, csv);
      if (certify) {
        for (const auto& a : rows) {
          if (!a.found) continue;
          const auto cert = verify_minimality(x, a.Z, a.eps, so.threads);
          std::cerr << "eps " << format_double(a.eps) << " Z " << a.Z << (cert.minimal() ? " minimal" : " NOT minimal")
                    << " (" << cert.checked << " smaller multipliers checked)\n";
          if (!cert.minimal()) return 3;
        }
      }
    } else {
      const double eps = resolve_eps(c, cfg);
      const IrrationalSet x = irrationals_for(g);
      const Approximation a = resolve_z(c, g, x, eps);
      const int threads = resolve_threads(c.threads);
      if (spectrum->parsed()) {
        std::string csv = "m,n,m2_plus_n2,energy,energy_over_pi2,poc_matches\n";
        for (const auto& r : spectrum_slice(g, a.Z, mmax))
          csv += std::to_string(r.mode.m) + "," + std::to_string(r.mode.n) + "," +
                 std::to_string(r.mode.m * r.mode.m + r.mode.n * r.mode.n) + "," + format_double(double(r.energy)) +
                 "," + r.energy_over_pi2.str() + "," + (r.poc_matches ? "true" : "false") + "\n";
        emit(c.out, csv);
      } else if (swf->parsed()) {
        const SwfModel model = SwfModel::build(g, a.Z, {m, n});
        if (model.degenerate()) std::cerr << "warning: |m| = |n|, the wave function vanishes identically\n";
        const auto samples_grid = grid_eval(model, g, grid, threads);
        emit(c.out, format == "csv" ? grid_csv(samples_grid) : grid_matrix(samples_grid, grid));
      } else if (residual->parsed()) {
        const SwfModel model = SwfModel::build(g, a.Z, {m, n});
        ResidualOptions ro;
        ro.boundary_samples = boundary_samples;
        ro.threads = threads;
        Json j = residual_json(g, model, a, eps, ro);
        j["approximation"] = approximation_json(x, a);
        emit(c.out, dump_json(j));
      } else if (report->parsed()) {
        Json j;
        j["case"] = cfg.name;
        const Json env = envelope_json(g);
        j["envelope"] = {{"vertex_count", env["vertex_count"]},
                         {"interior_angles_over_pi", Json::array()},
                         {"epsilon_pol", env["epsilon_pol"]},
                         {"check", env["check"]}};
        for (const auto& v : env["vertices"]) j["envelope"]["interior_angles_over_pi"].push_back(v["interior_angle_over_pi"]);
        Json un = unfold_json(g);
        un.erase("periods");
        j["unfolding"] = std::move(un);
        j["approximation"] = approximation_json(x, a);
        j["spectrum"] = spectrum_json(spectrum_slice(g, a.Z, mmax), a.Z)["levels"];
        const SwfModel model = SwfModel::build(g, a.Z, {m, n});
        ResidualOptions ro;
        ro.boundary_samples = boundary_samples;
        ro.threads = threads;
        Json res = residual_json(g, model, a, eps, ro);
        res.erase("wavelength");
        j["residual"] = std::move(res);
        emit(c.out, dump_json(j));
      }
    }
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    err["kind"] = dynamic_cast<const std::invalid_argument*>(&e) ? "invalid_config"
                  : dynamic_cast<const std::domain_error*>(&e)   ? "domain_error"
                                                                  : "runtime_error";
    std::cerr << dump_json(err);
    return 2;
  }
  return 0;
}
