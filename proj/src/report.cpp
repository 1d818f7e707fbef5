#include "stadion/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace stadion {

namespace {

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

Json field_json(const FieldElement& e) { return e.to_string(); }

Json point_json(Vec2 p) { return Json::array({p.x, p.y}); }

Json exact_point_json(const FieldPoint& p) { return Json::array({p.x.to_string(), p.y.to_string()}); }

Json coeff_json(const std::array<BigInt, kFieldDim>& a) {
  Json j = Json::array();
  for (const auto& c : a) j.push_back(big_json(c));
  return j;
}

void dump(const Json& j, std::string& out, int depth) {
  const std::string pad(std::size_t(2 * (depth + 1)), ' '), close(std::size_t(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        dump(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // short numeric arrays on one line
      const bool flat = j.size() <= 8 && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        dump(e, out, depth + 1);
      }
      out += flat ? "]" : "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: out += format_double(j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const Json& j) {
  std::string s;
  dump(j, s, 0);
  s += "\n";
  return s;
}

Json envelope_json(const CaseGeometry& g, std::size_t samples) {
  const auto& env = g.envelope;
  Json j;
  j["case"] = g.config.name;
  j["L"] = g.config.half_flat_length;
  j["orbit_count"] = g.config.orbit_count;
  if (auto k = g.tangents.sixteenths()) j["cap_angles_k16"] = *k;
  j["cap_angles"] = g.tangents.cap_angles();
  j["vertex_count"] = env.size();
  Json verts = Json::array();
  for (std::size_t i = 0; i < env.size(); ++i) {
    Json v;
    v["x"] = env.vertices[i].x;
    v["y"] = env.vertices[i].y;
    if (env.exact_vertices) v["exact"] = exact_point_json((*env.exact_vertices)[i]);
    v["interior_angle"] = env.interior_angles[i];
    v["interior_angle_over_pi"] = to_string(rationalize(env.interior_angles[i] / std::numbers::pi, 1e-12));
    verts.push_back(std::move(v));
  }
  j["vertices"] = std::move(verts);
  const auto bound = envelope_accuracy_bound(g.tangents);
  j["tangent_spacing"] = bound.tangent_spacing;
  j["epsilon_pol"] = bound.epsilon_pol;
  j["eta_pol"] = bound.eta_pol;
  j["sampled_deformation_sup"] = sampled_deformation_sup(g.stadium, env, samples);
  const auto chk = check_envelope(g.stadium, env, samples);
  j["check"] = {{"samples", chk.samples},
                {"contained", chk.contained},
                {"min_clearance", chk.min_clearance},
                {"max_touch_gap", chk.max_touch_gap},
                {"max_tangency_error", chk.max_tangency_error}};
  Json q;
  q["r"] = g.quarter.r;
  if (g.quarter.r_exact) q["r_exact"] = field_json(*g.quarter.r_exact);
  q["corner"] = point_json(g.quarter.center);
  Json qv = Json::array();
  for (std::size_t i = 0; i < g.quarter.polygon.size(); ++i) {
    Json v;
    v["side"] = g.quarter.polygon.side_names[i];
    v["start"] = point_json(g.quarter.polygon.vertices[i]);
    v["angle_over_pi"] = to_string(g.quarter.polygon.interior_angle[i]);
    qv.push_back(std::move(v));
  }
  q["sides"] = std::move(qv);
  j["quarter"] = std::move(q);
  return j;
}

Json unfold_json(const CaseGeometry& g) {
  const auto& s = g.summary;
  Json j;
  j["case"] = g.config.name;
  j["copies"] = s.copy_count;
  j["blocks"] = s.block_count;
  j["angle_unit"] = g.epp.angle_unit();
  j["maximal"] = is_maximal(g.epp);
  j["genus"] = s.genus;
  j["euler_genus"] = s.euler_genus;
  j["independent_periods"] = s.independent_period_count;
  j["linking_periods"] = s.linking_period_count;
  j["gluings"] = s.gluing_count;
  j["internal_gluings"] = s.internal_gluing_count;
  j["coefficient_lcm"] = big_json(s.coefficient_lcm);
  j["highest_generator"] = s.highest_generator;
  j["base_x"] = g.base_x.label;
  j["base_y"] = g.base_y.label;
  Json ps = Json::array();
  for (const auto& p : g.periods) {
    Json e;
    e["label"] = p.label;
    e["vector"] = point_json(p.vector);
    e["multiplicity"] = p.multiplicity;
    if (p.a_x) e["a_x"] = field_json(*p.a_x);
    if (p.a_y) e["a_y"] = field_json(*p.a_y);
    try {
      const auto c = period_constants(p);
      e["a_xf"] = coeff_json(c.a_x);
      e["a_yf"] = coeff_json(c.a_y);
      e["I_x"] = big_json(c.I_x);
      e["I_y"] = big_json(c.I_y);
    } catch (const std::domain_error&) {
      e["a_xf"] = nullptr;
    }
    ps.push_back(std::move(e));
  }
  j["periods"] = std::move(ps);
  return j;
}

Json approximation_json(const IrrationalSet& x, const Approximation& a) {
  Json j;
  j["irrationals"] = x.names;
  j["eps"] = a.eps;
  j["N"] = a.N;
  j["found"] = a.found;
  j["z_cap"] = a.z_cap;
  if (a.found) {
    j["Z"] = a.Z;
    Json q = Json::array();
    for (const auto& v : a.q) q.push_back(big_json(v));
    j["q"] = std::move(q);
    j["max_error"] = a.max_error;
  }
  return j;
}

std::string dioph_csv_header(std::size_t n) {
  std::string s = "eps,N,Z";
  for (std::size_t i = 1; i <= n; ++i) s += ",q_" + std::to_string(i);
  return s + ",max_error\n";
}

std::string dioph_csv_row(const Approximation& a) {
  std::string s = format_double(a.eps) + "," + format_double(a.N) + ",";
  if (!a.found) return s + ",,\n";
  s += std::to_string(a.Z);
  for (const auto& q : a.q) s += "," + q.str();
  return s + "," + format_double(a.max_error) + "\n";
}

std::vector<SpectrumRow> spectrum_slice(const CaseGeometry& g, std::uint64_t Z, long mmax) {
  std::vector<SpectrumRow> rows;
  for (long n = 1; n <= mmax; ++n)
    for (long m = 0; m <= n; ++m) {
      SpectrumRow r;
      r.mode = {m, n};
      r.energy = energy(Z, r.mode);
      r.energy_over_pi2 = energy_over_pi2(Z, r.mode);
      r.poc_matches = poc_level(g, Z, r.mode).matches;
      rows.push_back(std::move(r));
    }
  std::stable_sort(rows.begin(), rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
    return a.energy_over_pi2 != b.energy_over_pi2 ? a.energy_over_pi2 < b.energy_over_pi2 : a.mode.m < b.mode.m;
  });
  return rows;
}

Json spectrum_json(const std::vector<SpectrumRow>& rows, std::uint64_t Z) {
  Json j;
  j["Z"] = Z;
  Json levels = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["m"] = r.mode.m;
    e["n"] = r.mode.n;
    e["m2_plus_n2"] = r.mode.m * r.mode.m + r.mode.n * r.mode.n;
    e["energy"] = double(r.energy);
    e["energy_over_pi2"] = big_json(r.energy_over_pi2);
    e["poc_matches"] = r.poc_matches;
    levels.push_back(std::move(e));
  }
  j["levels"] = std::move(levels);
  return j;
}

Json residual_json(const CaseGeometry& g, const SwfModel& model, const Approximation& approx, double eps,
                   const ResidualOptions& o) {
  Json j;
  j["case"] = g.config.name;
  j["Z"] = model.Z();
  j["m"] = model.mode().m;
  j["n"] = model.mode().n;
  j["eps"] = eps;
  j["energy"] = double(model.energy());
  j["degenerate"] = model.degenerate();

  Json sides = Json::array();
  bool all_ok = true;
  for (const auto& r : boundary_residual(model, g, eps, o.boundary_samples, o.threads)) {
    Json e;
    e["side"] = r.constants.name;
    e["J_x"] = big_json(r.constants.J_x);
    e["J_y"] = big_json(r.constants.J_y);
    e["gluings"] = r.constants.gluings;
    e["construction_zero"] = r.constants.construction_zero;
    e["max_abs"] = double(r.max_abs);
    e["bound"] = double(r.nominal_bound);
    e["rigorous_bound"] = double(r.rigorous_bound);
    e["within_bound"] = r.within_bound();
    all_ok = all_ok && r.within_bound();
    sides.push_back(std::move(e));
  }
  j["boundary"] = std::move(sides);
  j["boundary_ok"] = all_ok;

  Json diags = Json::array();
  bool diag_ok = true;
  if (g.summary.highest_generator <= 3) {
    for (const auto& r : diagonal_residual(model, g, make_diagonals(g), eps, o.diagonal_samples, o.threads)) {
      Json e;
      e["x"] = r.diagonal.x.to_string();
      e["x_value"] = r.diagonal.value;
      e["construction_zero"] = r.construction_zero;
      e["max_abs"] = double(r.max_abs);
      e["bound"] = double(r.nominal_bound);
      e["term_bound"] = double(r.term_bound);
      e["term_bound_valid"] = r.term_bound_valid;
      diag_ok = diag_ok && r.max_abs < r.nominal_bound;
      diags.push_back(std::move(e));
    }
    j["diagonals"] = std::move(diags);
    j["diagonals_ok"] = diag_ok;
  } else {
    j["diagonals"] = nullptr;
  }

  Json wl = Json::array();
  for (const auto& p : g.periods) {
    const auto w = wavelength_mismatch(p, model, approx, eps);
    Json e;
    e["label"] = w.label;
    e["length"] = double(w.length);
    e["wavelength"] = double(w.wavelength);
    e["I_mn"] = big_json(w.I_mn);
    e["mismatch"] = double(w.mismatch);
    e["bound"] = double(w.bound);
    e["degenerate"] = w.degenerate;
    wl.push_back(std::move(e));
  }
  j["wavelength"] = std::move(wl);

  Json nodal = Json::array();
  for (const auto& s : nodal_scan(model, g, eps, o.nodal_samples)) {
    Json e;
    e["side"] = s.name;
    e["valid"] = s.valid;
    e["excluded"] = s.excluded;
    e["second_order"] = s.second_order;
    e["max_abs_l"] = double(s.max_abs_l);
    e["max_scaled"] = double(s.max_scaled);
    e["c1_factor"] = double(s.c1_factor);
    nodal.push_back(std::move(e));
  }
  j["nodal"] = std::move(nodal);

  const auto acc = spectrum_accuracy_report(model, g, eps, o.nodal_samples);
  j["accuracy"] = {{"epsilon_pol", acc.epsilon_pol},      {"epsilon_mn", acc.epsilon_mn},
                   {"composite", acc.composite},          {"admissibility", acc.admissibility},
                   {"admissible", acc.admissible},        {"regime", acc.regime},
                   {"eta", acc.eta_statement}};
  return j;
}

std::string grid_csv(const std::vector<GridSample>& grid) {
  std::string s = "x,y,re,im\n";
  for (const auto& p : grid) {
    if (!p.inside) continue;
    s += format_double(p.x) + "," + format_double(p.y) + "," + format_double(double(p.re)) + "," +
         format_double(double(p.im)) + "\n";
  }
  return s;
}

std::string grid_matrix(const std::vector<GridSample>& grid, std::size_t n) {
  std::string s;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = grid[j * n + i];
      if (i) s += ' ';
      s += p.inside ? format_double(double(p.re)) : "nan";
    }
    s += '\n';
  }
  return s;
}

}  // namespace stadion
