#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "volterra/asymptotics.hpp"
#include "volterra/cli.hpp"
#include "volterra/errors.hpp"
#include "volterra/logkernel.hpp"
#include "volterra/ramanujan.hpp"
#include "volterra/residues.hpp"

namespace volterra::cli {

namespace {

QuadratureConfig quadrature_for(double tol) { return {tol * 1e-3, tol, 2'000'000}; }

struct EvalArgs {
  std::string t;
  double alpha = 0.0;
  double beta = 0.0;
  std::string method = "auto";
  double tol = 1e-10;
  int terms = 4;
  std::string format = "csv";
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  EvalRequest req;
  req.t = parse_grid(a.t);
  req.alpha = a.alpha;
  req.beta = a.beta;
  req.method = parse_method(a.method);
  req.tol = a.tol;
  req.terms = a.terms;
  const std::vector<OutputRecord> records = evaluate(req);
  if (a.format == "json") {
    write_records_json(out, records);
  } else {
    write_records_csv(out, records);
  }
  return 0;
}

struct RamanujanArgs {
  std::string t;
  int k = 0;
  double alpha = 0.0;
  std::string form = "integral";
  int terms = 4;
  int order = 1;
  double tol = 1e-10;
};

int cmd_ramanujan(const RamanujanArgs& a, std::ostream& out) {
  const std::vector<double> grid = parse_grid(a.t);
  const QuadratureConfig quad = quadrature_for(a.tol);
  out << "t,value\n";
  for (double t : grid) {
    double v = 0.0;
    if (a.form == "integral") {
      v = N_k(t, a.k, a.alpha, quad);
    } else if (a.form == "special") {
      if (a.alpha != 0.0) throw DomainError("the special form needs alpha = 0");
      v = N_k_special(t, a.k, quad);
    } else if (a.form == "expansion") {
      if (a.k == 0 && a.alpha == 0.0) {
        v = ramanujan_expansion(t, a.terms);
      } else {
        v = nk_expansion_conjecture(t, a.k, a.alpha, a.terms);
      }
    } else {
      if (a.k != 0 || a.alpha != 0.0) throw DomainError("the wood form needs k = 0 and alpha = 0");
      v = wood_derivative(t, a.order, quad);
    }
    out << format_number(t) << ',' << format_number(v) << '\n';
  }
  return 0;
}

struct CoeffArgs {
  std::string kind = "D";
  double alpha = 0.0;
  double beta = 0.0;
  int n = 4;
  double radius = 0.0;
  int nodes = 0;
};

int cmd_coeffs(const CoeffArgs& a, std::ostream& out) {
  if (a.n < 0) throw DomainError("--n must be non-negative");
  const bool custom = a.radius > 0.0 || a.nodes > 0;
  const double rho = a.radius > 0.0 ? a.radius : (a.n > 12 ? 0.75 : 0.5);
  const int nodes = a.nodes > 0 ? a.nodes : default_cauchy_nodes(a.n);
  std::shared_ptr<const CoefficientSeries> s;
  if (a.kind == "D") {
    s = custom ? coeff_D(a.alpha, a.n, rho, nodes) : coeff_D(a.alpha, a.n);
  } else if (a.kind == "Dab") {
    if (custom) throw DomainError("--radius/--nodes apply to D and E only");
    s = coeff_D_ab(a.alpha, a.beta, a.n);
  } else if (a.kind == "E") {
    s = custom ? coeff_E(a.alpha, a.beta, a.n, rho, nodes) : coeff_E(a.alpha, a.beta, a.n);
  } else {
    if (custom) throw DomainError("--radius/--nodes apply to D and E only");
    s = coeff_ramanujan(a.n);
  }
  out << "n,value\n";
  for (std::size_t i = 0; i < s->size(); ++i) out << i << ',' << format_number((*s)[i]) << '\n';
  return 0;
}

int cmd_residue_poly(int k, double alpha, bool ascending, std::ostream& out) {
  if (k < 0) throw DomainError("--k must be non-negative");
  const RealPolynomial p = residue_polynomial(k, alpha);
  std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p[i];
  if (!ascending) std::reverse(c.begin(), c.end());
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << format_number(c[i]);
  out << '\n';
  return 0;
}

struct SolveArgs {
  std::string f;
  std::string input;
  double h = 1.0 / 64.0;
  double T = 1.0;
  std::string form = "first";
  bool no_check = false;
};

SampledFunction builtin(const std::string& name, double h, std::size_t count) {
  if (name == "linear") {
    return SampledFunction::from_function([](double t) { return t; }, 0.0, h, count,
                                          [](double) { return 1.0; }, [](double) { return 0.0; });
  }
  if (name == "quadratic") {
    return SampledFunction::from_function([](double t) { return t * t; }, 0.0, h, count,
                                          [](double t) { return 2.0 * t; }, [](double) { return 2.0; });
  }
  if (name == "cubic") {
    return SampledFunction::from_function([](double t) { return t * t * t; }, 0.0, h, count,
                                          [](double t) { return 3.0 * t * t; },
                                          [](double t) { return 6.0 * t; });
  }
  throw DomainError("unknown built-in function '" + name + "'");
}

SampledFunction read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::vector<double> ts;
  std::vector<double> fs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("expected 't,f' rows in '" + path + "'");
    try {
      ts.push_back(parse_grid(line.substr(0, comma)).at(0));
      fs.push_back(parse_grid(line.substr(comma + 1)).at(0));
    } catch (const DomainError&) {
      if (ts.empty() && fs.empty()) continue;  // header
      throw;
    }
  }
  if (ts.size() < 2) throw DomainError("need at least two samples in '" + path + "'");
  const double h = ts[1] - ts[0];
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (std::abs(ts[i] - (ts[0] + static_cast<double>(i) * h)) > 1e-9 * std::max(1.0, std::abs(ts[i]))) {
      throw DomainError("samples in '" + path + "' are not on a uniform grid");
    }
  }
  return SampledFunction(ts[0], h, std::move(fs));
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  SampledFunction f = [&] {
    if (!a.input.empty()) return read_samples(a.input);
    if (!(a.h > 0.0) || !(a.T > 0.0)) throw DomainError("--step and --T must be positive");
    const double steps = std::round(a.T / a.h);
    if (steps < 2.0 || steps > 1e6) throw DomainError("--T / --step must give between 2 and 1e6 steps");
    return builtin(a.f.empty() ? "linear" : a.f, a.h, static_cast<std::size_t>(steps) + 1);
  }();
  SolverConfig cfg;
  if (a.no_check) cfg.residual_tolerance = 0.0;
  const SampledFunction u = a.form == "second" ? solve_second_form(f, cfg) : solve_first_kind(f, cfg);
  out << "t,u\n";
  for (std::size_t i = 0; i < u.size(); ++i) out << format_number(u.node(i)) << ',' << format_number(u[i]) << '\n';
  return 0;
}

int cmd_figures(const std::vector<int>& figs, const std::string& dir, std::ostream& out) {
  std::vector<int> list = figs;
  if (list.empty()) list = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  for (int fig : list) {
    if (fig < 1 || fig > 10) throw DomainError("figure number must be in 1..10");
  }
  if (dir.empty()) {
    if (list.size() != 1) throw DomainError("--out is required for more than one figure");
    write_figure(out, list.front());
    return 0;
  }
  std::filesystem::create_directories(dir);
  for (int fig : list) {
    // Render first so a failure leaves no partial file.
    std::ostringstream buf;
    write_figure(buf, fig);
    const std::filesystem::path path = std::filesystem::path(dir) / ("fig" + std::to_string(fig) + ".csv");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot write '" + path.string() + "'");
    file << buf.str();
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volterra functions, Ramanujan integrals and the log-kernel integral equation"};
  app.name("volterra");
  app.require_subcommand(1);
  const double tol_default = default_tolerance();

  EvalArgs ev;
  ev.tol = tol_default;
  auto* eval = app.add_subcommand("eval", "evaluate mu(t, beta, alpha)");
  eval->add_option("--t", ev.t, "t or start:step:end")->required();
  eval->add_option("--alpha", ev.alpha)->capture_default_str();
  eval->add_option("--beta", ev.beta)->capture_default_str();
  eval->add_option("--method", ev.method)
      ->check(CLI::IsMember({"auto", "direct", "laplace", "identity", "asymptotic-small", "asymptotic-large"}))
      ->capture_default_str();
  eval->add_option("--tol", ev.tol, "relative tolerance (VOLTERRA_TOL sets the default)");
  eval->add_option("--terms", ev.terms, "expansion order N for asymptotic methods")->capture_default_str();
  eval->add_option("--format", ev.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  RamanujanArgs ra;
  ra.tol = tol_default;
  auto* ram = app.add_subcommand("ramanujan", "evaluate N_k(t, alpha)");
  ram->add_option("--t", ra.t, "t or start:step:end")->required();
  ram->add_option("--k", ra.k)->capture_default_str();
  ram->add_option("--alpha", ra.alpha)->capture_default_str();
  ram->add_option("--form", ra.form)
      ->check(CLI::IsMember({"integral", "special", "expansion", "wood"}))
      ->capture_default_str();
  ram->add_option("--terms", ra.terms)->capture_default_str();
  ram->add_option("--order", ra.order, "derivative order for --form wood")->capture_default_str();
  ram->add_option("--tol", ra.tol);

  CoeffArgs co;
  auto* coeffs = app.add_subcommand("coeffs", "expansion coefficients");
  coeffs->add_option("--kind", co.kind)->check(CLI::IsMember({"D", "Dab", "E", "ramanujan"}))->capture_default_str();
  coeffs->add_option("--alpha", co.alpha)->capture_default_str();
  coeffs->add_option("--beta", co.beta)->capture_default_str();
  coeffs->add_option("--n", co.n, "highest index")->required();
  coeffs->add_option("--radius", co.radius, "Cauchy circle radius");
  coeffs->add_option("--nodes", co.nodes, "Cauchy circle nodes");

  int rk = 0;
  double ralpha = 0.0;
  bool ascending = false;
  auto* rp = app.add_subcommand("residue-poly", "coefficients of P_k(t), highest power first");
  rp->add_option("--k", rk)->required();
  rp->add_option("--alpha", ralpha)->capture_default_str();
  rp->add_flag("--ascending", ascending, "constant term first");

  SolveArgs so;
  auto* solve = app.add_subcommand("solve", "solve int_0^t u(s) log(t-s) ds = f(t)");
  auto* fopt = solve->add_option("--f", so.f, "built-in f: linear, quadratic, cubic")
                   ->check(CLI::IsMember({"linear", "quadratic", "cubic"}));
  solve->add_option("--input", so.input, "CSV file with t,f rows")->excludes(fopt);
  solve->add_option("--step", so.h, "grid step h")->capture_default_str();
  solve->add_option("--T", so.T)->capture_default_str();
  solve->add_option("--form", so.form)->check(CLI::IsMember({"first", "second"}))->capture_default_str();
  solve->add_flag("--no-check", so.no_check, "skip the forward residual check");

  std::vector<int> figs;
  std::string out_dir;
  auto* figures = app.add_subcommand("figures", "write figure data as CSV");
  figures->add_option("--fig", figs, "figure number 1..10 (repeatable; default all)");
  figures->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(ev, out);
    if (*ram) return cmd_ramanujan(ra, out);
    if (*coeffs) return cmd_coeffs(co, out);
    if (*rp) return cmd_residue_poly(rk, ralpha, ascending, out);
    if (*solve) return cmd_solve(so, out);
    if (*figures) return cmd_figures(figs, out_dir, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace volterra::cli
