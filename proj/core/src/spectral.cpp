// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "regfactor/error.hpp"

namespace regfactor {

std::vector<double> symmetric_eigenvalues(SymmetricMatrix m, double off_tolerance) {
  const int n = m.n;
  auto off_norm = [&] {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) sum += 2.0 * m.at(i, j) * m.at(i, j);
    }
    return std::sqrt(sum);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= off_tolerance; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (apq == 0.0) continue;
        const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        m.at(p, p) -= t * apq;
        m.at(q, q) += t * apq;
        m.at(p, q) = m.at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = m.at(r, p);
          const double arq = m.at(r, q);
          m.at(r, p) = m.at(p, r) = c * arp - s * arq;
          m.at(r, q) = m.at(q, r) = s * arp + c * arq;
        }
      }
    }
  }

  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = m.at(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

Spectrum eigenvalues(const Graph& g) {
  SymmetricMatrix a(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) a.at(u, v) = 1.0;
  }
  return Spectrum{symmetric_eigenvalues(std::move(a))};
}

double characteristic_value(const Graph& g, double x) {
  const int n = g.order();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    at(i, i) = x;
    for (Vertex v : g.neighbors(i)) at(i, v) = -1.0;
  }
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i) {
      if (std::abs(at(i, col)) > std::abs(at(pivot, col))) pivot = i;
    }
    if (at(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(col, j));
      det = -det;
    }
    det *= at(col, col);
    for (int i = col + 1; i < n; ++i) {
      const double f = at(i, col) / at(col, col);
      for (int j = col; j < n; ++j) at(i, j) -= f * at(col, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> part_index(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) {
      throw DomainError("part " + std::to_string(i) + " is empty");
    }
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= g.order()) {
        throw DomainError("vertex " + std::to_string(v) + " out of range");
      }
      if (owner[v] != -1) {
        throw DomainError("vertex " + std::to_string(v) + " appears in two parts");
      }
      owner[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (owner[v] == -1) {
      throw DomainError("vertex " + std::to_string(v) + " is not covered by the partition");
    }
  }
  return owner;
}

}  // namespace

QuotientMatrix quotient_matrix(const Graph& g, std::vector<VertexSet> parts) {
  const std::vector<int> owner = part_index(g, parts);
  const std::size_t s = parts.size();
  QuotientMatrix q;
  q.edge_counts.assign(s, std::vector<std::int64_t>(s, 0));
  for (int u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) ++q.edge_counts[owner[u]][owner[v]];
  }
  q.b.assign(s, std::vector<double>(s, 0.0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      q.b[i][j] = static_cast<double>(q.edge_counts[i][j]) /
                  static_cast<double>(parts[i].size());
    }
  }
  q.parts = std::move(parts);
  return q;
}

bool is_equitable(const Graph& g, const std::vector<VertexSet>& parts) {
  const std::vector<int> owner = part_index(g, parts);
  const std::size_t s = parts.size();
  for (const VertexSet& part : parts) {
    std::vector<int> reference;
    for (Vertex u : part) {
      std::vector<int> counts(s, 0);
      for (Vertex v : g.neighbors(u)) ++counts[owner[v]];
      if (reference.empty()) {
        reference = std::move(counts);
      } else if (counts != reference) {
        return false;
      }
    }
  }
  return true;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
  const int s = q.parts_count();
  SymmetricMatrix m(s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      const double ni = static_cast<double>(q.parts[i].size());
      const double nj = static_cast<double>(q.parts[j].size());
      m.at(i, j) = static_cast<double>(q.edge_counts[i][j]) / std::sqrt(ni * nj);
    }
  }
  return symmetric_eigenvalues(std::move(m));
}

// ---------------------------------------------------------------------------

Cubic cubic_family(CubicFamily which, int r) {
  if (r < 3) throw DomainError("cubic families require r >= 3");
  const std::int64_t R = r;
  switch (which) {
    case CubicFamily::P:
      return {1, -(R - 2), -2 * R, R - 1};
    case CubicFamily::F1:
      return {1, -(R - 2), -(2 * R - 1), R};
    case CubicFamily::F2:
      return {1, -(R - 2), -(2 * R - 1), R - 2};
    case CubicFamily::F3:
      return {1, -(R - 2), -2 * R, 2 * (R - 2)};
  }
  throw DomainError("unknown cubic family");
}

std::array<double, 4> quotient_characteristic(const QuotientMatrix& q) {
  if (q.parts_count() != 3) {
    throw DomainError("characteristic cubic needs a 3-part quotient");
  }
  const auto& b = q.b;
  const double trace = b[0][0] + b[1][1] + b[2][2];
  const double minors = b[0][0] * b[1][1] - b[0][1] * b[1][0] +
                        b[0][0] * b[2][2] - b[0][2] * b[2][0] +
                        b[1][1] * b[2][2] - b[1][2] * b[2][1];
  const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                     b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                     b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  return {1.0, -trace, minors, -det};
}

double evaluate(std::span<const double, 4> c, double x) {
  const long double lx = x;
  return static_cast<double>(((c[0] * lx + c[1]) * lx + c[2]) * lx + c[3]);
}

namespace {

long double evaluate_ld(const std::array<double, 4>& c, long double x) {
  return ((c[0] * x + c[1]) * x + c[2]) * x + c[3];
}

long double derivative_ld(const std::array<double, 4>& c, long double x) {
  return (3.0L * c[0] * x + 2.0L * c[1]) * x + c[2];
}

}  // namespace

double largest_root(const std::array<double, 4>& coeffs) {
  const double bound = 1.0 + std::max({std::abs(coeffs[1]), std::abs(coeffs[2]),
                                       std::abs(coeffs[3])});
  return largest_root(coeffs, -bound, bound);
}

double largest_root(const std::array<double, 4>& c, double lo, double hi) {
  if (c[0] != 1.0) throw DomainError("largest_root expects a monic cubic");
  const long double bound =
      1.0L + std::max({std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});

  // Locate a bracket [a, b] with p(a) <= 0 < p(b) around the greatest root.
  // Past the larger critical point p increases; if p is still positive there,
  // the greatest root lies left of the smaller critical point.
  long double a = -bound;
  long double b = bound;
  const long double disc = 4.0L * c[1] * c[1] - 12.0L * c[2];
  if (disc > 0) {
    const long double sq = std::sqrt(disc);
    const long double x1 = (-2.0L * c[1] - sq) / 6.0L;
    const long double x2 = (-2.0L * c[1] + sq) / 6.0L;
    if (evaluate_ld(c, x2) <= 0) {
      a = x2;
    } else {
      b = x1;
    }
  }

  while (b - a > 1e-6L) {
    const long double mid = 0.5L * (a + b);
    if (evaluate_ld(c, mid) <= 0) {
      a = mid;
    } else {
      b = mid;
    }
  }

  long double x = 0.5L * (a + b);
  bool polished = false;
  for (int iter = 0; iter < 100; ++iter) {
    const long double d = derivative_ld(c, x);
    if (d == 0) break;
    const long double step = evaluate_ld(c, x) / d;
    const long double next = x - step;
    if (next < a || next > b) break;
    x = next;
    if (std::abs(step) < 1e-12L) {
      polished = true;
      break;
    }
  }
  if (!polished) {
    while (b - a > 1e-12L) {
      const long double mid = 0.5L * (a + b);
      if (evaluate_ld(c, mid) <= 0) {
        a = mid;
      } else {
        b = mid;
      }
    }
    x = 0.5L * (a + b);
  }

  const double root = static_cast<double>(x);
  if (root < lo || root > hi) {
    throw DomainError("greatest root " + std::to_string(root) + " outside bracket [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return root;
}

double largest_root(const Cubic& coeffs) {
  return largest_root(std::array<double, 4>{
      static_cast<double>(coeffs[0]), static_cast<double>(coeffs[1]),
      static_cast<double>(coeffs[2]), static_cast<double>(coeffs[3])});
}

std::string_view kind_name(ThresholdKind kind) {
  switch (kind) {
    case ThresholdKind::ClosedFormEven:
      return "closed-form-even";
    case ThresholdKind::ClosedFormOdd:
      return "closed-form-odd";
    case ThresholdKind::CubicM1:
      return "cubic-m1";
    case ThresholdKind::CubicM2:
      return "cubic-m2";
  }
  return "unknown";
}

SpectralThreshold rho1(int r, int m) {
  if (r < 3) throw DomainError("rho1: requires r >= 3");
  if (m % 2 != 0) throw DomainError("rho1: m must be even");
  if (m < 2 || m > r + 1) throw DomainError("rho1: requires 2 <= m <= r+1");
  const double rr = r;
  const double value = 0.5 * (rr - 2.0 + std::sqrt((rr + 2.0) * (rr + 2.0) - 4.0 * m));
  return {value, ThresholdKind::ClosedFormEven, r, m};
}

SpectralThreshold rho2(int r, int m) {
  if (r < 3) throw DomainError("rho2: requires r >= 3");
  if ((m - r) % 2 != 0) throw DomainError("rho2: requires m = r (mod 2)");
  if (m < 1 || m > r + 1) throw DomainError("rho2: requires 1 <= m <= r+1");
  const double rr = r;
  auto bracketed = [r](const Cubic& c) {
    const std::array<double, 4> d{static_cast<double>(c[0]), static_cast<double>(c[1]),
                                  static_cast<double>(c[2]), static_cast<double>(c[3])};
    return largest_root(d, 0.0, r + 1.0);
  };
  if (m == 1) {
    return {bracketed(cubic_family(CubicFamily::P, r)), ThresholdKind::CubicM1, r, m};
  }
  if (m == 2) {
    return {bracketed(cubic_family(CubicFamily::F1, r)), ThresholdKind::CubicM2, r, m};
  }
  const double value = 0.5 * (rr - 3.0 + std::sqrt((rr + 3.0) * (rr + 3.0) - 4.0 * m));
  return {value, ThresholdKind::ClosedFormOdd, r, m};
}

}  // namespace regfactor
