#pragma once

// Adjacency spectra, resolvent energy from eigenvalues and from the moment
// series, exact spectral moments, and the Estrada index.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "resolvent/bigint.hpp"
#include "resolvent/error.hpp"
#include "resolvent/graph.hpp"

namespace resolvent {

/// Eigenvalues sorted in descending order.
struct Spectrum {
  std::vector<double> values;

  double largest() const { return values.front(); }
  double power_sum(int k) const {
    double s = 0;
    for (double x : values) s += std::pow(x, k);
    return s;
  }
};

/// Cyclic Jacobi rotations on the dense adjacency matrix until the
/// off-diagonal Frobenius norm falls below 1e-13.
inline Spectrum eigenvalues(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> a(n * n, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (auto [u, v] : g.edges()) {
    at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1.0;
    at(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1.0;
  }

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() >= 1e-13; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }

  Spectrum out;
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(at(i, i));
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

/// ER(G) = sum 1 / (n - lambda_i).
inline double er_spectral(const Graph& g) {
  const double n = g.order();
  double s = 0;
  for (double x : eigenvalues(g).values) s += 1.0 / (n - x);
  return s;
}

/// Estrada index, sum exp(lambda_i).
inline double ee_spectral(const Graph& g) {
  double s = 0;
  for (double x : eigenvalues(g).values) s += std::exp(x);
  return s;
}

/// Exact moments M_0..M_kmax, M_k = tr(A^k) = number of closed k-walks.
inline std::vector<BigInt> spectral_moments(const Graph& g, int kmax) {
  if (kmax < 0) throw invalid_parameter("moment order must be nonnegative");
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

  std::vector<BigInt> moments(static_cast<std::size_t>(kmax) + 1, BigInt(0));
  std::vector<BigInt> walk(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    // walk[u] = number of k-walks from start to u
    std::fill(walk.begin(), walk.end(), BigInt(0));
    walk[static_cast<std::size_t>(start)] = 1;
    moments[0] += 1;
    for (int k = 1; k <= kmax; ++k) {
      for (int u = 0; u < n; ++u) {
        BigInt s = 0;
        for (int w : adj[static_cast<std::size_t>(u)]) s += walk[static_cast<std::size_t>(w)];
        next[static_cast<std::size_t>(u)] = std::move(s);
      }
      std::swap(walk, next);
      moments[static_cast<std::size_t>(k)] += walk[static_cast<std::size_t>(start)];
    }
  }
  return moments;
}

inline BigInt spectral_moment(const Graph& g, int k) {
  return spectral_moments(g, k).back();
}

struct SeriesResult {
  double value = 0;
  double tail_bound = 0;
};

/// Truncation bound n ((n-1)/n)^{K+1} on the omitted tail of the moment
/// series, from M_k <= n (n-1)^k.
inline double series_tail_bound(int n, int terms) {
  return n * std::pow(static_cast<double>(n - 1) / n, terms + 1);
}

/// Smallest K with tail bound <= 1e-9, capped at 10000.
inline int default_series_terms(int n) {
  int k = 0;
  while (k < 10000 && series_tail_bound(n, k) > 1e-9) ++k;
  return k;
}

/// (1/n) sum_{k=0}^{K} M_k / n^k. Moments are exact; the quotient is summed
/// in rationals and converted once.
inline SeriesResult er_series(const Graph& g, std::optional<int> terms = std::nullopt) {
  const int n = g.order();
  if (n < 2) throw invalid_parameter("moment series needs n >= 2");
  const int kmax = terms.value_or(default_series_terms(n));
  const auto moments = spectral_moments(g, kmax);
  BigRational sum = 0;
  BigInt scale = n;  // n^{k+1}
  for (const auto& m : moments) {
    sum += BigRational(m, scale);
    scale *= n;
  }
  return {to_double(sum), series_tail_bound(n, kmax)};
}

struct Dominance {
  bool dominated_all = true;      // M_k(g) <= M_k(h) for all k <= kmax
  bool strict_somewhere = false;  // M_k(g) <  M_k(h) for some k <= kmax
  int first_strict_k = -1;
};

inline Dominance moment_dominance(const std::vector<BigInt>& mg, const std::vector<BigInt>& mh) {
  Dominance d;
  for (std::size_t k = 0; k < mg.size() && k < mh.size(); ++k) {
    if (mg[k] > mh[k]) d.dominated_all = false;
    if (mg[k] < mh[k] && !d.strict_somewhere) {
      d.strict_somewhere = true;
      d.first_strict_k = static_cast<int>(k);
    }
  }
  return d;
}

inline Dominance moment_dominance(const Graph& g, const Graph& h, int kmax) {
  if (g.order() != h.order())
    throw invalid_parameter("moment dominance needs equal orders, got " + std::to_string(g.order()) +
                            " and " + std::to_string(h.order()));
  return moment_dominance(spectral_moments(g, kmax), spectral_moments(h, kmax));
}

}  // namespace resolvent
