#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace volterra::cli {

enum class Method { auto_select, direct, laplace, identity, asymptotic_small, asymptotic_large };

std::string to_string(Method m);
/// Throws DomainError for unknown names.
Method parse_method(const std::string& name);

struct OutputRecord {
  double t = 0.0;
  Method method = Method::direct;
  double value = 0.0;
  std::optional<double> error_estimate;
};

/// Shortest text that parses back to the same double.
std::string format_number(double x);

/// Parses "x" or "start:step:end" (end inclusive).
std::vector<double> parse_grid(const std::string& spec);

/// Default tolerance: VOLTERRA_TOL if set and valid, else 1e-10.
double default_tolerance();

struct EvalRequest {
  std::vector<double> t;
  double alpha = 0.0;
  double beta = 0.0;
  Method method = Method::auto_select;
  double tol = 1e-10;
  int terms = 4;
};

/// One record per t. Throws DomainError on invalid parameters and
/// NumericalError (message naming the route) when a route fails.
std::vector<OutputRecord> evaluate(const EvalRequest& req);

void write_records_csv(std::ostream& out, const std::vector<OutputRecord>& records);
void write_records_json(std::ostream& out, const std::vector<OutputRecord>& records);

/// Writes the data behind figure `fig` (1..10) as CSV.
void write_figure(std::ostream& out, int fig);

/// Entry point of the `volterra` tool. Exit status 0 on success, 2 on
/// invalid arguments, 3 on numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace volterra::cli
