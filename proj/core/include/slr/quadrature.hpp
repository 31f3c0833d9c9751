#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace slr::quad {

inline constexpr std::size_t kGaussOrder = 12;

/// Nodes and weights of the kGaussOrder-point Gauss–Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::array<double, kGaussOrder> nodes;
  std::array<double, kGaussOrder> weights;
};

const GaussLegendreRule& gauss_legendre_rule();

struct Options {
  double abs_tol = 1e-10;
  std::size_t max_panels = 4000;
  std::size_t initial_panels = 4;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t panels = 0;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T, class F>
T gauss_panel(const F& f, double lo, double hi) {
  const auto& rule = gauss_legendre_rule();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  T sum{};
  for (std::size_t i = 0; i < kGaussOrder; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

template <class T>
struct Panel {
  double lo;
  double hi;
  T left;
  T right;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class T, class F>
Panel<T> make_panel(const F& f, double lo, double hi, const T& whole) {
  const double mid = 0.5 * (lo + hi);
  Panel<T> p{lo, hi, gauss_panel<T>(f, lo, mid), gauss_panel<T>(f, mid, hi), 0.0};
  p.error = magnitude(whole - (p.left + p.right));
  return p;
}

}  // namespace detail

/// Globally adaptive Gauss–Legendre quadrature of f over [lo, hi].
///
/// Each panel is estimated by the rule on the panel and on its two halves;
/// the difference is the panel error. The panel with the largest error is
/// bisected until the summed error drops below abs_tol or max_panels is
/// reached. The result carries the summed error estimate either way.
/// T is double or std::complex<double>.
template <class T, class F>
Result<T> integrate(const F& f, double lo, double hi, const Options& opt = {}) {
  Result<T> out;
  if (!(hi > lo)) return out;

  std::priority_queue<detail::Panel<T>> heap;
  double total_error = 0.0;
  const std::size_t n0 = std::max<std::size_t>(1, opt.initial_panels);
  const double width = (hi - lo) / static_cast<double>(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = (i + 1 == n0) ? hi : lo + width * static_cast<double>(i + 1);
    auto p = detail::make_panel<T>(f, a, b, detail::gauss_panel<T>(f, a, b));
    total_error += p.error;
    heap.push(p);
  }

  while (total_error > opt.abs_tol && heap.size() < opt.max_panels) {
    auto worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;  // panel width at machine resolution
    heap.pop();
    total_error -= worst.error;
    auto left = detail::make_panel<T>(f, worst.lo, mid, worst.left);
    auto right = detail::make_panel<T>(f, mid, worst.hi, worst.right);
    total_error += left.error + right.error;
    heap.push(left);
    heap.push(right);
  }

  // Sum in a fixed order so that results depend only on the panel set.
  std::vector<detail::Panel<T>> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  double err = 0.0;
  for (const auto& p : panels) {
    out.value += p.left + p.right;
    err += p.error;
  }
  out.error = err;
  out.panels = panels.size();
  return out;
}

}  // namespace slr::quad
