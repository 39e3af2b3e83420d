// projflow: command-line front end over the core library.
//
// Every subcommand builds one JSON document. With --json it is printed as is;
// otherwise it is rendered as "key: value" lines. Exit status is 0 when all
// checks pass, 1 when a check fails and 2 on usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "projflow/classify.hpp"
#include "projflow/dixon.hpp"
#include "projflow/errors.hpp"
#include "projflow/hypergeom.hpp"
#include "projflow/orbits.hpp"
#include "projflow/parse.hpp"
#include "projflow/series.hpp"
#include "projflow/special.hpp"
#include "projflow/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace projflow;

constexpr const char* kSchema = "projflow/1";

struct Config {
  int digits = 17;
  bool as_json = false;
  unsigned seed = 1;
};

Config g_config;

int precision_from_env() {
  const char* env = std::getenv("PROJFLOW_PRECISION");
  if (!env) return 17;
  int d = std::atoi(env);
  return std::clamp(d, 1, 21);
}

json num(long double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", g_config.digits, v);
  return std::stod(buf);
}

json header(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

// "a,b,c,d" (ax² + bxy • cxy + dy²), six comma-separated coefficients for a
// general quadratic pair, or {"pi": "...", "rho": "..."}.
VectorField parse_field(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("pi") || !j.contains("rho"))
      raise(Errc::ParseError, "field JSON needs string members pi and rho");
    return make_vector_field(parse_rational_function(j["pi"].get<std::string>()),
                             parse_rational_function(j["rho"].get<std::string>()));
  }
  std::vector<Rat> c;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) c.push_back(parse_rat(item));
  if (c.size() == 4) return quadratic_field(c[0], c[1], c[2], c[3]);
  if (c.size() == 6) return quadratic_field6(c[0], c[1], c[2], c[3], c[4], c[5]);
  raise(Errc::ParseError, "field needs 4 or 6 coefficients, or a JSON object");
}

std::pair<Rat, Rat> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) raise(Errc::ParseError, "expected p,q");
  return {parse_rat(text.substr(0, comma)), parse_rat(text.substr(comma + 1))};
}

json orbit_json(const OrbitForm& w) {
  json j;
  j["alpha"] = w.alpha;
  j["beta"] = w.beta;
  j["gamma"] = w.gamma;
  j["level"] = w.level;
  j["genus"] = w.genus ? json(*w.genus) : json(nullptr);
  j["equation"] = orbit_equation(w);
  return j;
}

json series_json(const UnivarSeries& s) {
  json c = json::array();
  for (int k = 0; k < s.prec(); ++k) c.push_back(to_string(s.coeff(k)));
  return c;
}

json jet_json(const LaurentJet& j) {
  json c = json::object();
  for (int k = j.valuation(); k < j.prec(); ++k)
    if (!j.coeff(k).is_zero()) c[std::to_string(k)] = to_string(j.coeff(k));
  return c;
}

json comparison_json(const SeriesComparison& c) {
  json j;
  j["equal"] = c.equal;
  j["first_mismatch"] = c.first_mismatch;
  j["expected"] = series_json(c.expected);
  j["computed"] = series_json(c.computed);
  return j;
}

json identity_json(const IdentityReport& r) {
  json j;
  j["holds"] = r.holds;
  j["known_through"] = r.known_through;
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  return j;
}

// ---------------------------------------------------------------- commands

struct Outcome {
  json doc;
  int status = 0;
};

Outcome cmd_classify(const std::string& field) {
  VectorField vf = parse_field(field);
  Classification c = classify(vf);
  json j = header("classify");
  j["field"] = to_string(vf);
  j["class"] = tag(c.value);
  struct Detail {
    json& j;
    void operator()(const flow::RayDegenerate&) const {}
    void operator()(const flow::AbelianI& a) const {
      j["B"] = to_string(a.B);
      j["C"] = to_string(a.C);
      j["orbit"] = orbit_json(a.orbit);
    }
    void operator()(const flow::AbelianII& a) const { j["reduced"] = a.pi_squarefree; }
    void operator()(const flow::Integral& i) const {
      j["case"] = to_string(i.value.kind);
      j["lambda"] = to_string(i.value.lambda);
    }
    void operator()(const flow::Algebraic& a) const {
      j["n"] = a.type.n;
      j["q"] = to_string(a.type.Q);
      j["B"] = to_string(a.B);
      j["C"] = to_string(a.C);
      j["orbit"] = orbit_json(a.orbit);
    }
    void operator()(const flow::Rational& r) const {
      j["level"] = to_string(r.level);
      j["n"] = r.type.n;
      j["q"] = to_string(r.type.Q);
    }
  };
  std::visit(Detail{j}, c.value);
  j["normal_form"] = to_string(c.normal_form);
  return {j, 0};
}

Outcome cmd_integrate(const std::string& field, int order, const std::string& line, bool ratio,
                      const std::string& component, bool normalize) {
  VectorField vf = parse_field(field);
  SeriesFlow sf = integrate_series(vf, order);
  json j = header("integrate");
  j["field"] = to_string(vf);
  j["order"] = order;
  if (line.empty()) {
    json u = json::array(), v = json::array();
    for (int i = 1; i <= order; ++i) {
      u.push_back(to_string(sf.u_at(i)));
      v.push_back(to_string(sf.v_at(i)));
    }
    j["u"] = u;
    j["v"] = v;
    return {j, 0};
  }
  auto [p, q] = parse_pair(line);
  j["line"] = {to_string(p), to_string(q)};
  if (ratio) {
    j["quantity"] = "u/v";
    j["coefficients"] = series_json(ratio_on_line(sf, p, q));
  } else {
    Component c = component == "v" ? Component::V : Component::U;
    j["quantity"] = component;
    j["normalized"] = normalize;
    j["coefficients"] = series_json(restrict_to_line(sf, p, q, c, normalize));
  }
  return {j, 0};
}

Outcome cmd_orbits(const std::string& field) {
  VectorField vf = parse_field(field);
  OrbitForm w = orbit_exponents(vf);
  InvarianceResult inv = orbit_invariance_check(vf, w);
  json j = header("orbits");
  j["field"] = to_string(vf);
  j["orbit"] = orbit_json(w);
  j["invariant"] = inv.holds;
  return {j, inv.holds ? 0 : 1};
}

Outcome cmd_algflow(long n, const std::string& q_text, long double x, long double y, long double z) {
  Rat Q = parse_rat(q_text);
  json j = header("algflow");
  j["n"] = n;
  j["q"] = to_string(Q);
  j["field"] = to_string(type_field(n, Q));
  RationalPolynomial p = p_nQ(n, Q);
  j["polynomial"] = to_string(p);
  j["ode_residual_zero"] = verify_sch_ode(p, n, Q).is_zero();
  AlgebraicPoint pt = algebraic_flow_eval(n, Q, x, y, z);
  j["u"] = num(pt.u);
  j["v"] = num(pt.v);
  j["orbit_residual"] = num(pt.orbit_residual);
  j["time_residual"] = num(pt.time_residual);
  j["steps"] = pt.steps;
  return {j, j["ode_residual_zero"].get<bool>() ? 0 : 1};
}

Outcome cmd_special(const std::string& verb, long double x, long double y, int order, const std::string& pi) {
  json j = header("special");
  j["verb"] = verb;
  int status = 0;
  if (verb == "alpha") {
    QuadratureResult r = alpha_integral(x);
    j["x"] = num(x);
    j["value"] = num(r.value);
    j["error_estimate"] = num(r.error_estimate);
  } else if (verb == "k") {
    j["t"] = num(x);
    j["value"] = num(k_invert(x));
  } else if (verb == "y") {
    QuadratureResult r = y_hypergeom(x);
    j["x"] = num(x);
    j["value"] = num(r.value);
    j["ode_residual"] = num(y_ode_residual(x));
  } else if (verb == "kjet") {
    AbelianJet a = k_jet(order);
    json c = json::array();
    for (const Rat& r : a.a) c.push_back(to_string(r));
    j["center"] = a.center_tag;
    j["scale"] = "4^(1/5)";
    j["a"] = c;
  } else if (verb == "erfjet") {
    j["coefficients"] = series_json(erf_jet(order));
  } else if (verb == "crosscheck") {
    SeriesComparison abel = abel_cross_check(order);
    SeriesComparison g = g_series_identity(order);
    j["abelian"] = comparison_json(abel);
    j["error_function"] = comparison_json(g);
    status = abel.equal && g.equal ? 0 : 1;
  } else if (verb == "type2") {
    VectorField vf = make_vector_field(parse_rational_function(pi), RationalFunction2());
    Type2Result r = type2_flow_eval(vf, x, y);
    j["field"] = to_string(vf);
    j["u"] = num(r.u);
    j["v"] = num(r.v);
    j["closed_form"] = r.closed_form;
  } else {
    raise(Errc::ParseError, "unknown special verb '" + verb + "'");
  }
  return {j, status};
}

Outcome cmd_dixon(const std::string& jet, int order, bool checks) {
  json j = header("dixon");
  int status = 0;
  if (!jet.empty()) {
    LaurentJet lj = dixon_jet(jet, order);
    j["jet"] = jet;
    j["series"] = to_string(lj);
    j["coefficients"] = jet_json(lj);
  }
  if (checks) {
    json c;
    c["fermat"] = identity_json(fermat_identity(order));
    c["sp_cp"] = identity_json(sp_cp_identity(order));
    c["pq_constraint"] = identity_json(pq_constraint(order));
    c["delta_gamma_cubic"] = identity_json(delta_gamma_cubic(order));
    c["odd_function"] = identity_json(odd_function_check(order));
    ScalingReport s = scaling_identity_check(order);
    c["scaling"] = {{"holds", s.holds}, {"worst_relative", num(s.worst_relative)}, {"checked", s.checked}};
    Pi3Report p = pi3_check();
    c["pi3"] = {{"holds", p.holds}, {"pi3", num(p.pi3)}, {"pi3_pow6", num(p.pi3_pow6)}};
    for (const auto& [name, rep] : c.items())
      if (!rep["holds"].get<bool>()) status = 1;
    j["checks"] = c;
  }
  return {j, status};
}

Outcome cmd_verify(std::vector<std::string> names, bool all, bool list, long double pde_tol, long double orbit_tol) {
  json j = header("verify");
  if (list) {
    json l = json::array();
    for (const FixtureFlow& f : fixtures())
      l.push_back({{"fixture", f.name}, {"formula", f.formula}, {"branch", f.branch}, {"invariant", f.invariant_text}});
    j["fixtures"] = l;
    return {j, 0};
  }
  if (all) names = fixture_names();
  if (names.empty()) raise(Errc::ParseError, "verify needs --fixture NAME, --all or --list");
  json reports = json::array();
  int status = 0;
  for (const std::string& name : names) {
    FixtureFlow f = fixture(name);
    if (pde_tol > 0) f.pde_tol = pde_tol;
    if (orbit_tol > 0) f.orbit_tol = orbit_tol;
    for (const CheckReport& r : run_fixture_checks(f)) {
      json row{{"fixture", r.fixture},
               {"check", r.check},
               {"max_residual", num(r.max_residual)},
               {"tolerance", num(r.tolerance)},
               {"pass", r.pass}};
      if (!r.note.empty()) row["note"] = r.note;
      if (!r.pass) status = 1;
      reports.push_back(row);
    }
  }
  j["reports"] = reports;
  j["pass"] = status == 0;
  return {j, status};
}

// Orbits are integral curves of (ϖ, ϱ); RK4 in arc length keeps the step
// bounded where the field is large.
std::vector<Point> trace_orbit(const PointMap& field, Point start, long double h, int steps, const SamplingBox& stop) {
  auto dir = [&](Point p) -> Point {
    Point w = field(p.first, p.second);
    long double n = std::hypot(w.first, w.second);
    if (!std::isfinite(n) || n == 0) return {NAN, NAN};
    return {w.first / n, w.second / n};
  };
  std::vector<Point> out{start};
  Point p = start;
  for (int i = 0; i < steps; ++i) {
    Point k1 = dir(p);
    Point k2 = dir({p.first + h / 2 * k1.first, p.second + h / 2 * k1.second});
    Point k3 = dir({p.first + h / 2 * k2.first, p.second + h / 2 * k2.second});
    Point k4 = dir({p.first + h * k3.first, p.second + h * k3.second});
    Point next{p.first + h / 6 * (k1.first + 2 * k2.first + 2 * k3.first + k4.first),
               p.second + h / 6 * (k1.second + 2 * k2.second + 2 * k3.second + k4.second)};
    if (!std::isfinite(next.first) || !std::isfinite(next.second)) break;
    if (next.first < stop.x_lo || next.first > stop.x_hi || next.second < stop.y_lo || next.second > stop.y_hi) break;
    out.push_back(next);
    p = next;
  }
  return out;
}

void write_csv_row(std::ostream& os, std::initializer_list<long double> values) {
  bool first = true;
  for (long double v : values) {
    if (!first) os << ',';
    first = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", g_config.digits, v);
    os << buf;
  }
  os << '\n';
}

Outcome cmd_plot(const std::string& fixture_name, const std::string& field, const std::string& box_text, int n,
                 int orbit_count, int steps, long double h, const std::string& out_dir) {
  PointMap fe;
  SamplingBox box{-1, 1, -1, 1};
  std::string label;
  if (!fixture_name.empty()) {
    const FixtureFlow& f = fixture(fixture_name);
    fe = f.field_eval;
    box = f.box;
    label = f.name;
  } else if (!field.empty()) {
    VectorField vf = parse_field(field);
    fe = [vf](long double x, long double y) -> Point { return {vf.pi().eval(x, y), vf.rho().eval(x, y)}; };
    label = to_string(vf);
  } else {
    raise(Errc::ParseError, "plot needs --fixture or --field");
  }
  if (!box_text.empty()) {
    std::vector<long double> b;
    std::stringstream ss(box_text);
    for (std::string item; std::getline(ss, item, ',');) b.push_back(std::stold(item));
    if (b.size() != 4 || !(b[0] < b[1]) || !(b[2] < b[3])) raise(Errc::ParseError, "box needs x0,x1,y0,y1");
    box = {b[0], b[1], b[2], b[3]};
  }
  if (n < 2) raise(Errc::ParseError, "plot needs --n >= 2");
  std::filesystem::create_directories(out_dir);
  const std::string field_path = (std::filesystem::path(out_dir) / "field.csv").string();
  std::ofstream fcsv(field_path);
  fcsv << "x,y,pi,rho\n";
  int rows = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      long double x = box.x_lo + (box.x_hi - box.x_lo) * i / (n - 1);
      long double y = box.y_lo + (box.y_hi - box.y_lo) * k / (n - 1);
      Point w = fe(x, y);
      if (!std::isfinite(w.first) || !std::isfinite(w.second)) continue;
      write_csv_row(fcsv, {x, y, w.first, w.second});
      ++rows;
    }
  }
  // Orbits may leave the sampling box; let them run over a box twice as wide.
  long double wx = box.x_hi - box.x_lo, wy = box.y_hi - box.y_lo;
  SamplingBox stop{box.x_lo - wx / 2, box.x_hi + wx / 2, box.y_lo - wy / 2, box.y_hi + wy / 2};
  std::mt19937 rng(g_config.seed);
  std::uniform_real_distribution<long double> ux(box.x_lo, box.x_hi), uy(box.y_lo, box.y_hi);
  json files = json::array({field_path});
  json lengths = json::array();
  for (int o = 0; o < orbit_count; ++o) {
    Point start{ux(rng), uy(rng)};
    auto fwd = trace_orbit(fe, start, h, steps, stop);
    auto bwd = trace_orbit(fe, start, -h, steps, stop);
    const std::string path = (std::filesystem::path(out_dir) / ("orbit_" + std::to_string(o) + ".csv")).string();
    std::ofstream ocsv(path);
    ocsv << "x,y\n";
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) write_csv_row(ocsv, {it->first, it->second});
    for (std::size_t i = 1; i < fwd.size(); ++i) write_csv_row(ocsv, {fwd[i].first, fwd[i].second});
    files.push_back(path);
    lengths.push_back(bwd.size() + fwd.size() - 1);
  }
  json j = header("plot");
  j["source"] = label;
  j["field_rows"] = rows;
  j["orbit_points"] = lengths;
  j["files"] = files;
  return {j, 0};
}

// ---------------------------------------------------------------- output

void render_text(const json& j, std::ostream& os, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      render_text(value, os, prefix + key + ".");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (const json& row : value) {
        std::string line;
        for (const auto& [k, v] : row.items()) line += (line.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
        os << prefix << key << ": " << line << '\n';
      }
    } else if (value.is_array()) {
      std::string line;
      for (const json& v : value) line += (line.empty() ? "" : ", ") + (v.is_string() ? v.get<std::string>() : v.dump());
      os << prefix << key << ": " << line << '\n';
    } else {
      os << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  g_config.digits = precision_from_env();
  CLI::App app{"Projective flows: series, classification, special functions and closed-form checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_config.as_json, "Print the versioned JSON document");
  app.add_option("--seed", g_config.seed, "Seed for sampled start points");

  std::string field, line, component = "u", q_text = "1", verb, pi, jet, box, out_dir = "plot";
  std::vector<std::string> names;
  int order = 12, n_grid = 21, orbit_count = 3, steps = 400;
  long n = 1;
  long double x = 0, y = 0, z = 0, h = 0.01L, pde_tol = 0, orbit_tol = 0;
  bool ratio = false, normalize = false, checks = false, all = false, list = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a vector field");
  classify_cmd->add_option("--field", field, "a,b,c,d | six coefficients | {\"pi\":..,\"rho\":..}")->required();

  auto* integrate_cmd = app.add_subcommand("integrate", "Series solution of the flow");
  integrate_cmd->add_option("--field", field, "Vector field")->required();
  integrate_cmd->add_option("--order", order, "Number of terms")->check(CLI::Range(2, 200));
  integrate_cmd->add_option("--line", line, "Restrict to (p t, q t), given as p,q");
  integrate_cmd->add_flag("--ratio", ratio, "Print u/v on the line");
  integrate_cmd->add_option("--component", component, "u or v")->check(CLI::IsMember({"u", "v"}));
  integrate_cmd->add_flag("--normalize", normalize, "Divide by p t or q t");

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit exponents, level and genus");
  orbits_cmd->add_option("--field", field, "Vector field")->required();

  auto* algflow_cmd = app.add_subcommand("algflow", "Algebraic flow of type (n, Q)");
  algflow_cmd->add_option("--n", n, "n")->check(CLI::Range(0L, 50L));
  algflow_cmd->add_option("--Q", q_text, "Q as p/q");
  algflow_cmd->add_option("--x", x)->required();
  algflow_cmd->add_option("--y", y)->required();
  algflow_cmd->add_option("--z", z)->required();

  auto* special_cmd = app.add_subcommand("special", "Special functions and series identities");
  special_cmd->add_option("verb", verb, "alpha | k | y | kjet | erfjet | crosscheck | type2")
      ->required()
      ->check(CLI::IsMember({"alpha", "k", "y", "kjet", "erfjet", "crosscheck", "type2"}));
  special_cmd->add_option("--x", x, "Argument (alpha, k, y) or point (type2)");
  special_cmd->add_option("--y", y, "Point (type2)");
  special_cmd->add_option("--order", order)->check(CLI::Range(1, 200));
  special_cmd->add_option("--pi", pi, "pi component for type2, e.g. \"x^3/y\"");

  auto* dixon_cmd = app.add_subcommand("dixon", "Dixonian jets and their identities");
  dixon_cmd->add_option("--jet", jet, "sm | cm | sp | cp | p | q | delta | gamma");
  dixon_cmd->add_option("--order", order)->check(CLI::Range(2, 400));
  dixon_cmd->add_flag("--checks", checks, "Run the identity checks");

  auto* verify_cmd = app.add_subcommand("verify", "Closed-form fixture checks");
  verify_cmd->add_option("--fixture", names, "Fixture name (repeatable)");
  verify_cmd->add_flag("--all", all, "Every registered fixture");
  verify_cmd->add_flag("--list", list, "List fixtures");
  verify_cmd->add_option("--pde-tol", pde_tol, "Override the PDE tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--orbit-tol", orbit_tol, "Override the orbit tolerance")->check(CLI::PositiveNumber);

  auto* plot_cmd = app.add_subcommand("plot", "Field samples and orbit polylines as CSV");
  plot_cmd->add_option("--fixture", names, "Fixture name")->expected(1);
  plot_cmd->add_option("--field", field, "Vector field");
  plot_cmd->add_option("--box", box, "x0,x1,y0,y1");
  plot_cmd->add_option("--n", n_grid, "Grid points per axis");
  plot_cmd->add_option("--orbits", orbit_count, "Number of orbits")->check(CLI::Range(0, 100));
  plot_cmd->add_option("--steps", steps, "RK4 steps each way")->check(CLI::Range(1, 100000));
  plot_cmd->add_option("--step", h, "RK4 arc-length step")->check(CLI::PositiveNumber);
  plot_cmd->add_option("--out", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Outcome out;
  try {
    if (*classify_cmd) out = cmd_classify(field);
    else if (*integrate_cmd) out = cmd_integrate(field, order, line, ratio, component, normalize);
    else if (*orbits_cmd) out = cmd_orbits(field);
    else if (*algflow_cmd) out = cmd_algflow(n, q_text, x, y, z);
    else if (*special_cmd) out = cmd_special(verb, x, y, order, pi);
    else if (*dixon_cmd) out = cmd_dixon(jet, order, checks || jet.empty());
    else if (*verify_cmd) out = cmd_verify(names, all, list, pde_tol, orbit_tol);
    else if (*plot_cmd) out = cmd_plot(names.empty() ? "" : names.front(), field, box, n_grid, orbit_count, steps, h, out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (g_config.as_json) std::cout << out.doc.dump(2) << '\n';
  else render_text(out.doc, std::cout);
  return out.status;
}
