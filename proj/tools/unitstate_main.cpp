#include "unitstate/problem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace unitstate;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string problem;
  std::string unit;
  std::string unit2;
  std::string element;
  std::string out;
  std::string format;  // "", "json", "csv"
  std::string weights;
  std::string t_grid;
  long long bound = 0;
  int level = -1;
  int quad_level = 10;
  uint64_t seed = 0;
};

void write_output(const CommonOpts& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file \"" + opt.out + "\"");
  f << text;
}

json report_header(const std::string& command, const CommonOpts& opt) {
  json j;
  j["command"] = command;
  j["problem"] = opt.problem;
  j["digest"] = file_digest(opt.problem);
  json inputs = json::object();
  if (!opt.unit.empty()) inputs["unit"] = opt.unit;
  if (!opt.unit2.empty()) inputs["unit2"] = opt.unit2;
  if (!opt.element.empty()) inputs["element"] = opt.element;
  if (!opt.weights.empty()) inputs["weights"] = opt.weights;
  if (!opt.t_grid.empty()) inputs["t_grid"] = opt.t_grid;
  if (opt.bound > 0) inputs["bound"] = opt.bound;
  if (opt.level >= 0) inputs["level"] = opt.level;
  inputs["seed"] = opt.seed;
  j["inputs"] = inputs;
  return j;
}

std::string effective_format(const CommonOpts& opt, const std::string& natural) {
  if (!opt.format.empty()) return opt.format;
  return natural;
}

json state_report_json(const StateReport& rep) {
  json j;
  j["value"] = rat_str(rep.value);
  j["total_mass"] = rat_str(rep.total_mass);
  if (rep.level >= 0) j["level"] = rep.level;
  json cells = json::array();
  for (const auto& c : rep.per_simplex) {
    json jc;
    jc["cell"] = c.cell;
    jc["origin"] = c.origin;
    jc["nu"] = rat_str(c.nu);
    jc["average"] = rat_str(c.average);
    cells.push_back(jc);
  }
  j["per_simplex"] = cells;
  return j;
}

std::vector<Rat> parse_weights(const std::string& text) {
  std::vector<Rat> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(parse_rat(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (out.empty()) throw ValidationError("--weights: no weights given");
  return out;
}

std::vector<Int> parse_grid(const std::string& text) {
  std::vector<Int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(Int(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (out.empty()) throw ValidationError("--t-grid: no grid points given");
  return out;
}

int run_check(const CommonOpts& opt) {
  ProblemSpec spec = load_problem(opt.problem);
  json j = report_header("check", opt);
  json res;
  res["valid"] = true;
  res["name"] = spec.name;
  res["ambient"] = spec.n;
  res["cells"] = spec.complex.size();
  res["dim"] = spec.complex.dim();
  json levels = json::array();
  for (const auto& l : spec.complex.local_dim_partition().levels) {
    json jl;
    jl["level"] = l.level;
    jl["cells"] = l.cells;
    jl["spans"] = l.span_classes.size();
    levels.push_back(jl);
  }
  res["levels"] = levels;
  json terms = json::array();
  for (const auto& [name, t] : spec.terms) terms.push_back(name);
  res["terms"] = terms;
  res["units"] = spec.units;
  json elements = json::array();
  for (const auto& [name, t] : spec.elements) elements.push_back(name);
  res["elements"] = elements;
  j["results"] = res;
  write_output(opt, j.dump(2));
  return 0;
}

int run_state(const CommonOpts& opt) {
  ProblemSpec spec = load_problem(opt.problem);
  StateReport rep = state(spec.element(opt.element), spec.term(opt.unit), spec.complex);
  json j = report_header("state", opt);
  j["results"] = state_report_json(rep);
  write_output(opt, j.dump(2));
  return 0;
}

int run_state_level(const CommonOpts& opt) {
  if (opt.level < 0) throw ValidationError("state-level requires --level");
  ProblemSpec spec = load_problem(opt.problem);
  StateReport rep = state_level(spec.element(opt.element), spec.term(opt.unit), spec.complex, opt.level);
  json j = report_header("state-level", opt);
  j["results"] = state_report_json(rep);
  write_output(opt, j.dump(2));
  return 0;
}

int run_faithful(const CommonOpts& opt) {
  ProblemSpec spec = load_problem(opt.problem);
  WeightedReport rep = state_weighted(spec.element(opt.element), spec.term(opt.unit), spec.complex,
                                      parse_weights(opt.weights));
  json j = report_header("faithful", opt);
  json res;
  res["value"] = rat_str(rep.value);
  res["levels"] = rep.levels;
  json ws = json::array();
  for (const Rat& w : rep.weights) ws.push_back(rat_str(w));
  res["weights"] = ws;
  json per = json::array();
  for (const auto& l : rep.per_level) per.push_back(state_report_json(l));
  res["per_level"] = per;
  res["top_value"] = rat_str(state(spec.element(opt.element), spec.term(opt.unit), spec.complex).value);
  j["results"] = res;
  write_output(opt, j.dump(2));
  return 0;
}

int run_tau0(const CommonOpts& opt) {
  ProblemSpec spec = load_problem(opt.problem);
  Rat value = tau0_reference(spec.element(opt.element), spec.complex);
  json j = report_header("tau0", opt);
  j["results"]["value"] = rat_str(value);
  write_output(opt, j.dump(2));
  return 0;
}

int run_enumerate(const CommonOpts& opt) {
  if (opt.bound < 1) throw ValidationError("enumerate requires --bound >= 1");
  ProblemSpec spec = load_problem(opt.problem);
  EnumerationRun run = enumerate_primitive(spec.complex, spec.term(opt.unit), Int(opt.bound));
  std::string fmt = effective_format(opt, "csv");
  if (fmt == "csv") {
    std::string text = "index,coordinates,unit_value,denominator,section_point\n";
    for (size_t i = 0; i < run.states.size(); ++i) {
      const DiscreteState& st = run.states[i];
      text += std::to_string(i) + "," + vec_str(st.primitive) + "," + st.unit_value.str() + "," +
              st.denominator.str() + "," + vec_str(st.section_point) + "\n";
    }
    write_output(opt, text);
  } else {
    json j = report_header("enumerate", opt);
    json arr = json::array();
    for (size_t i = 0; i < run.states.size(); ++i) {
      const DiscreteState& st = run.states[i];
      json js;
      js["index"] = i;
      js["coordinates"] = vec_str(st.primitive);
      js["unit_value"] = st.unit_value.str();
      js["denominator"] = st.denominator.str();
      js["section_point"] = vec_str(st.section_point);
      arr.push_back(js);
    }
    j["results"]["count"] = run.states.size();
    j["results"]["block_size"] = run.block_size.str();
    j["results"]["states"] = arr;
    write_output(opt, j.dump(2));
  }
  return 0;
}

int run_converge(const CommonOpts& opt) {
  if (opt.bound < 1) throw ValidationError("converge requires --bound >= 1");
  ProblemSpec spec = load_problem(opt.problem);
  Element h = spec.element(opt.element);
  Term u = spec.term(opt.unit);
  if (!h.is_term()) throw ValidationError("converge requires a term element");
  EnumerationRun run = enumerate_primitive(spec.complex, u, Int(opt.bound));
  std::vector<Rat> partials = cesaro_partials(run, std::get<Term>(h.data));
  Rat exact = state(h, u, spec.complex).value;
  std::string fmt = effective_format(opt, "csv");
  if (fmt == "csv") {
    std::string text = "k,average,average_float\n";
    for (size_t k = 0; k < partials.size(); ++k) {
      text += std::to_string(k + 1) + "," + rat_str(partials[k]) + "," +
              std::to_string(to_double(partials[k])) + "\n";
    }
    write_output(opt, text);
  } else {
    json j = report_header("converge", opt);
    json res;
    res["count"] = partials.size();
    res["final_average"] = partials.empty() ? "0" : rat_str(partials.back());
    res["exact_state"] = rat_str(exact);
    res["abs_error"] = partials.empty() ? 0.0 : std::abs(to_double(partials.back() - exact));
    j["results"] = res;
    write_output(opt, j.dump(2));
  }
  return 0;
}

int run_density(const CommonOpts& opt) {
  ProblemSpec spec = load_problem(opt.problem);
  DensityReport rep = verify_density(spec.element(opt.element), spec.term(opt.unit),
                                     spec.term(opt.unit2), spec.complex, opt.quad_level, opt.seed);
  json j = report_header("density", opt);
  json res;
  res["dim"] = rep.dim;
  res["D1"] = rat_str(rep.d1);
  res["D2"] = rat_str(rep.d2);
  res["C"] = rat_str(rep.c);
  res["lhs"] = rat_str(rep.lhs);
  res["rhs"] = rep.rhs.value;
  res["rhs_error_bound"] = rep.rhs.error_bound;
  res["quad_level"] = rep.rhs.refinement_level;
  res["discrepancy"] = rep.discrepancy;
  res["exact_match"] = rep.exact_match;
  if (!rep.points.empty()) {
    json pts = json::array();
    for (const auto& p : rep.points) {
      json jp;
      jp["point"] = vec_str(p.point);
      jp["mu1"] = rat_str(p.mu1);
      jp["mu2"] = rat_str(p.mu2);
      jp["mu2_via_density"] = rat_str(p.mu2_via_density);
      pts.push_back(jp);
    }
    res["points"] = pts;
  }
  j["results"] = res;
  write_output(opt, j.dump(2));
  return 0;
}

int run_dimension(const CommonOpts& opt) {
  if (opt.t_grid.empty()) throw ValidationError("dimension requires --t-grid");
  ProblemSpec spec = load_problem(opt.problem);
  DimensionReport rep = dimension_estimate(spec.complex, spec.term(opt.unit), parse_grid(opt.t_grid));
  std::string fmt = effective_format(opt, "json");
  if (fmt == "csv") {
    std::string text = "t,xi,ratio,slope\n";
    for (size_t i = 0; i < rep.grid.size(); ++i) {
      text += rep.grid[i].str() + "," + rep.xi[i].str() + "," + std::to_string(rep.ratios[i]) + "," +
              std::to_string(rep.slopes[i]) + "\n";
    }
    write_output(opt, text);
  } else {
    json j = report_header("dimension", opt);
    json res;
    json grid = json::array(), xi = json::array();
    for (const Int& t : rep.grid) grid.push_back(t.str());
    for (const Int& x : rep.xi) xi.push_back(x.str());
    res["grid"] = grid;
    res["xi"] = xi;
    res["ratios"] = rep.ratios;
    res["slopes"] = rep.slopes;
    res["stabilized"] = rep.stabilized;
    res["dim_estimate"] = rep.dim_estimate;
    j["results"] = res;
    write_output(opt, j.dump(2));
  }
  return 0;
}

int run_ehrhart(const CommonOpts& opt) {
  if (opt.bound < 1) throw ValidationError("ehrhart requires --bound >= 1");
  ProblemSpec spec = load_problem(opt.problem);
  std::string fmt = effective_format(opt, "csv");
  struct Row {
    size_t cell;
    long long t;
    Int ehrhart, direct, inverted;
  };
  std::vector<Row> rows;
  for (size_t i = 0; i < spec.complex.size(); ++i) {
    for (long long t = 1; t <= opt.bound; ++t) {
      const Simplex& s = spec.complex.cell(i);
      rows.push_back({i, t, ehrhart_count(s, Int(t)), primitive_count_direct(s, Int(t)),
                      primitive_by_inversion(s, Int(t))});
    }
  }
  if (fmt == "csv") {
    std::string text = "simplex,t,ehrhart,primitive_direct,primitive_mobius\n";
    for (const Row& r : rows)
      text += std::to_string(r.cell) + "," + std::to_string(r.t) + "," + r.ehrhart.str() + "," +
              r.direct.str() + "," + r.inverted.str() + "\n";
    write_output(opt, text);
  } else {
    json j = report_header("ehrhart", opt);
    json arr = json::array();
    for (const Row& r : rows) {
      json jr;
      jr["simplex"] = r.cell;
      jr["t"] = r.t;
      jr["ehrhart"] = r.ehrhart.str();
      jr["primitive_direct"] = r.direct.str();
      jr["primitive_mobius"] = r.inverted.str();
      arr.push_back(jr);
    }
    j["results"]["rows"] = arr;
    write_output(opt, j.dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"States induced by strong units on finitely presented cancellative hoops"};
  app.require_subcommand(1);

  CommonOpts opt;
  auto add_common = [&](CLI::App* cmd, bool needs_unit, bool needs_element) {
    cmd->add_option("--problem", opt.problem, "Problem file (JSON)")->required();
    auto* u = cmd->add_option("--unit", opt.unit, "Unit term name");
    if (needs_unit) u->required();
    auto* e = cmd->add_option("--element", opt.element, "Element name (term or per-simplex)");
    if (needs_element) e->required();
    cmd->add_option("--out", opt.out, "Output path (default: stdout)");
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", opt.seed, "Seed for randomized quadrature");
  };

  CLI::App* check = app.add_subcommand("check", "Validate a problem file");
  add_common(check, false, false);

  CLI::App* state_cmd = app.add_subcommand("state", "Exact state m_u(h)");
  add_common(state_cmd, true, true);

  CLI::App* level_cmd = app.add_subcommand("state-level", "Level state m_u^l(h)");
  add_common(level_cmd, true, true);
  level_cmd->add_option("--level", opt.level, "Stratum dimension l")->required();

  CLI::App* faithful_cmd = app.add_subcommand("faithful", "Weighted faithful state m_u^p(h)");
  add_common(faithful_cmd, true, true);
  faithful_cmd->add_option("--weights", opt.weights,
                           "Comma-separated rational weights, one per nonempty level")->required();

  CLI::App* tau0_cmd = app.add_subcommand("tau0", "Denominator-weighted reference value on the isolated points");
  add_common(tau0_cmd, false, true);

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "Primitive points of Cone(W) with u <= bound");
  add_common(enum_cmd, true, false);
  enum_cmd->add_option("--bound", opt.bound, "Unit-value bound t")->required();

  CLI::App* conv_cmd = app.add_subcommand("converge", "Cesaro partial averages of h over the enumeration");
  add_common(conv_cmd, true, true);
  conv_cmd->add_option("--bound", opt.bound, "Unit-value bound t")->required();

  CLI::App* dens_cmd = app.add_subcommand("density", "Verify the reciprocal density between two unit measures");
  add_common(dens_cmd, true, true);
  dens_cmd->add_option("--unit2", opt.unit2, "Second unit term name")->required();
  dens_cmd->add_option("--quad-level", opt.quad_level, "Quadrature refinement level");

  CLI::App* dim_cmd = app.add_subcommand("dimension", "Spectral dimension estimate from Xi growth");
  add_common(dim_cmd, true, false);
  dim_cmd->add_option("--t-grid", opt.t_grid, "Comma-separated increasing bounds")->required();

  CLI::App* ehr_cmd = app.add_subcommand("ehrhart", "Ehrhart and primitive counts per simplex");
  add_common(ehr_cmd, false, false);
  ehr_cmd->add_option("--bound", opt.bound, "Max dilation t")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = 1;
  std::string name;
  try {
    if (check->parsed()) name = "check", rc = run_check(opt);
    else if (state_cmd->parsed()) name = "state", rc = run_state(opt);
    else if (level_cmd->parsed()) name = "state-level", rc = run_state_level(opt);
    else if (faithful_cmd->parsed()) name = "faithful", rc = run_faithful(opt);
    else if (tau0_cmd->parsed()) name = "tau0", rc = run_tau0(opt);
    else if (enum_cmd->parsed()) name = "enumerate", rc = run_enumerate(opt);
    else if (conv_cmd->parsed()) name = "converge", rc = run_converge(opt);
    else if (dens_cmd->parsed()) name = "density", rc = run_density(opt);
    else if (dim_cmd->parsed()) name = "dimension", rc = run_dimension(opt);
    else if (ehr_cmd->parsed()) name = "ehrhart", rc = run_ehrhart(opt);
  } catch (const ValidationError& e) {
    std::cerr << "unitstate: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unitstate: internal error: " << e.what() << "\n";
    return 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  // Timing goes to stderr only; reports stay byte-identical across runs.
  std::cerr << "unitstate: " << name << " finished in " << elapsed.count() << " ms\n";
  return rc;
}
