#include <cmath>
#include <utility>
#include <vector>

#include "volterra/asymptotics.hpp"
#include "volterra/cli.hpp"
#include "volterra/errors.hpp"
#include "volterra/ramanujan.hpp"

namespace volterra::cli {

namespace {

constexpr std::pair<double, double> kFirstPair{1.0, 0.8};
constexpr std::pair<double, double> kSecondPair{3.0, 0.6};
constexpr int kMaxTerms = 4;

// Reference values: the auto route of `eval` at the default tolerance.
double reference(double t, double beta, double alpha) {
  EvalRequest req;
  req.t = {t};
  req.beta = beta;
  req.alpha = alpha;
  return evaluate(req).front().value;
}

std::vector<double> linear_grid(double start, double step, int count) {
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = start + i * step;
  return g;
}

// 10^-6 .. 10^-1, ten points per decade.
std::vector<double> small_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 50; ++i) g.push_back(std::pow(10.0, -6.0 + 0.1 * i));
  return g;
}

std::vector<double> large_grid() { return linear_grid(2.0, 0.5, 97); }  // 2 .. 50

std::vector<double> ramanujan_grid() { return linear_grid(0.05, 0.05, 200); }  // 0.05 .. 10

void row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_number(v);
    first = false;
  }
  out << '\n';
}

void ramanujan_figure(std::ostream& out, int k) {
  out << "t,N\n";
  for (double t : ramanujan_grid()) row(out, {t, k == 0 ? N_classic(t) : N_k(t, k, 0.0)});
}

void small_compare(std::ostream& out, std::pair<double, double> p) {
  const auto [beta, alpha] = p;
  out << "t,mu,first_term\n";
  for (double t : small_grid()) row(out, {t, reference(t, beta, alpha), mu_small(t, beta, alpha, 0)});
}

void small_differences(std::ostream& out) {
  out << "beta,alpha,t,N,abs_difference\n";
  for (auto [beta, alpha] : {kFirstPair, kSecondPair}) {
    for (double t : small_grid()) {
      const double mu = reference(t, beta, alpha);
      for (int n = 0; n <= kMaxTerms; ++n) {
        row(out, {beta, alpha, t, double(n), std::abs(mu - mu_small(t, beta, alpha, n))});
      }
    }
  }
}

void large_compare(std::ostream& out, std::pair<double, double> p) {
  const auto [beta, alpha] = p;
  out << "t,mu,first_term\n";
  for (double t : large_grid()) row(out, {t, reference(t, beta, alpha), mu_large(t, beta, alpha, 0)});
}

void large_differences(std::ostream& out) {
  out << "beta,alpha,t,N,relative_difference\n";
  for (auto [beta, alpha] : {kFirstPair, kSecondPair}) {
    for (double t : large_grid()) {
      const double mu = reference(t, beta, alpha);
      for (int n = 0; n <= kMaxTerms; ++n) {
        row(out, {beta, alpha, t, double(n), std::abs(mu - mu_large(t, beta, alpha, n)) / std::abs(mu)});
      }
    }
  }
}

}  // namespace

void write_figure(std::ostream& out, int fig) {
  switch (fig) {
    case 1: return ramanujan_figure(out, 0);
    case 2: return ramanujan_figure(out, 1);
    case 3: return ramanujan_figure(out, 2);
    case 4: return ramanujan_figure(out, 3);
    case 5: return small_compare(out, kFirstPair);
    case 6: return small_differences(out);
    case 7: return small_compare(out, kSecondPair);
    case 8: return large_compare(out, kFirstPair);
    case 9: return large_compare(out, kSecondPair);
    case 10: return large_differences(out);
    default: throw DomainError("figure number must be in 1..10");
  }
}

}  // namespace volterra::cli
