#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "volterra/asymptotics.hpp"
#include "volterra/cli.hpp"
#include "volterra/direct.hpp"
#include "volterra/errors.hpp"
#include "volterra/laplace.hpp"
#include "volterra/ramanujan.hpp"
#include "volterra/scalar.hpp"

namespace volterra::cli {

std::string to_string(Method m) {
  switch (m) {
    case Method::auto_select: return "auto";
    case Method::direct: return "direct";
    case Method::laplace: return "laplace";
    case Method::identity: return "identity";
    case Method::asymptotic_small: return "asymptotic-small";
    case Method::asymptotic_large: return "asymptotic-large";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::auto_select, Method::direct, Method::laplace, Method::identity,
                   Method::asymptotic_small, Method::asymptotic_large}) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown method '" + name + "'");
}

std::string format_number(double x) {
  if (x == 0.0) return "0";  // also folds -0
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

namespace {

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw DomainError("not a finite number: '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() == 1) return {parse_real(parts[0])};
  if (parts.size() != 3) throw DomainError("grid must be 'x' or 'start:step:end'");
  const double start = parse_real(parts[0]);
  const double step = parse_real(parts[1]);
  const double end = parse_real(parts[2]);
  if (!(step > 0.0) || end < start) throw DomainError("grid needs step > 0 and end >= start");
  const double span = (end - start) / step;
  if (span > 1e7) throw DomainError("grid has too many points");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

double default_tolerance() {
  const char* env = std::getenv("VOLTERRA_TOL");
  if (env == nullptr || *env == '\0') return 1e-10;
  try {
    const double v = parse_real(env);
    if (v > 0.0) return v;
  } catch (const DomainError&) {
  }
  return 1e-10;
}

namespace {

OutputRecord run_route(Method m, double t, const EvalRequest& req) {
  const QuadratureConfig quad{req.tol * 1e-3, req.tol, 2'000'000};
  OutputRecord r{t, m, 0.0, std::nullopt};
  switch (m) {
    case Method::direct: {
      const QuadratureResult q = mu_direct_estimate(VolterraParams::make(t, req.beta, req.alpha), quad);
      r.value = q.value;
      r.error_estimate = q.error_estimate;
      break;
    }
    case Method::laplace: {
      const InversionResult inv = invert_detailed(t, req.beta, req.alpha, req.tol);
      r.value = inv.value;
      r.error_estimate = inv.contour.predicted_error + inv.roundoff_estimate;
      break;
    }
    case Method::identity: {
      if (!is_nonnegative_integer(req.beta)) throw DomainError("identity route needs integer beta >= 0");
      if (!(req.alpha <= 0.0)) throw DomainError("identity route needs -1 < alpha <= 0");
      const QuadratureResult q =
          mu_via_identity_estimate(t, static_cast<int>(std::round(req.beta)), req.alpha, quad);
      r.value = q.value;
      r.error_estimate = q.error_estimate;
      break;
    }
    case Method::asymptotic_small:
      r.value = mu_small(t, req.beta, req.alpha, req.terms);
      break;
    case Method::asymptotic_large:
      r.value = mu_large(t, req.beta, req.alpha, req.terms);
      break;
    case Method::auto_select:
      throw DomainError("auto is not a route");
  }
  return r;
}

OutputRecord run_named(Method m, double t, const EvalRequest& req) {
  try {
    return run_route(m, t, req);
  } catch (const DomainError&) {
    throw;
  } catch (const NumericalError& e) {
    throw NumericalError("route " + to_string(m) + " failed: " + e.what());
  }
}

}  // namespace

std::vector<OutputRecord> evaluate(const EvalRequest& req) {
  if (!(req.alpha > -1.0)) throw DomainError("alpha must be > -1");
  if (!(req.beta + 1.0 >= kMinShiftedParameter)) throw DomainError("beta must be > -1");
  if (!(req.tol > 0.0)) throw DomainError("tolerance must be positive");
  if (req.terms < 0) throw DomainError("terms must be non-negative");
  for (double t : req.t) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
  }

  std::vector<OutputRecord> out;
  out.reserve(req.t.size());
  for (double t : req.t) {
    if (req.method != Method::auto_select) {
      out.push_back(run_named(req.method, t, req));
      continue;
    }
    if (is_nonnegative_integer(req.beta) && req.alpha <= 0.0) {
      out.push_back(run_named(Method::identity, t, req));
      continue;
    }
    try {
      out.push_back(run_route(Method::laplace, t, req));
    } catch (const NumericalError&) {
      out.push_back(run_named(Method::direct, t, req));
    }
  }
  return out;
}

void write_records_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  out << "t,method,value,error_estimate\n";
  for (const OutputRecord& r : records) {
    out << format_number(r.t) << ',' << to_string(r.method) << ',' << format_number(r.value) << ',';
    if (r.error_estimate) out << format_number(*r.error_estimate);
    out << '\n';
  }
}

void write_records_json(std::ostream& out, const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const OutputRecord& r : records) {
    nlohmann::ordered_json rec;
    rec["t"] = r.t;
    rec["method"] = to_string(r.method);
    rec["value"] = r.value;
    rec["error_estimate"] = r.error_estimate ? nlohmann::ordered_json(*r.error_estimate) : nullptr;
    arr.push_back(std::move(rec));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace volterra::cli
