// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "regfactor/graph.hpp"

namespace regfactor {

inline constexpr double kDefaultTolerance = 1e-9;

/// Adjacency eigenvalues, sorted descending.
struct Spectrum {
  std::vector<double> values;

  /// 1-based access matching the usual lambda_i indexing.
  double lambda(int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
};

/// Row-major dense symmetric matrix.
struct SymmetricMatrix {
  int n = 0;
  std::vector<double> a;

  explicit SymmetricMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Cyclic Jacobi rotation. Converges when the off-diagonal Frobenius norm
/// drops below `off_tolerance`. Returns eigenvalues sorted descending.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix m,
                                          double off_tolerance = 1e-12);

Spectrum eigenvalues(const Graph& g);

/// det(xI - A) by partially pivoted elimination.
double characteristic_value(const Graph& g, double x);

// ---------------------------------------------------------------------------
// Quotient matrices.

struct QuotientMatrix {
  std::vector<VertexSet> parts;
  // b[i][j] = e(V_i, V_j) / |V_i|, diagonal 2 e_i / n_i.
  std::vector<std::vector<double>> b;
  // Integer edge counts behind b: e(V_i, V_j) off the diagonal, 2 e_i on it.
  std::vector<std::vector<std::int64_t>> edge_counts;

  int parts_count() const { return static_cast<int>(parts.size()); }
};

/// Throws DomainError if `parts` is not a partition of V(g) into non-empty sets.
QuotientMatrix quotient_matrix(const Graph& g, std::vector<VertexSet> parts);

/// True iff each vertex of part i has exactly b[i][j] neighbours in part j.
bool is_equitable(const Graph& g, const std::vector<VertexSet>& parts);

/// Eigenvalues of B, computed from the similar symmetric matrix
/// e(V_i,V_j) / sqrt(n_i n_j). Sorted descending.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

// ---------------------------------------------------------------------------
// Cubics and thresholds.

/// Monic cubic x^3 + c[1] x^2 + c[2] x + c[3]; c[0] is the leading 1.
using Cubic = std::array<std::int64_t, 4>;

enum class CubicFamily { P, F1, F2, F3 };

/// Integer coefficients of the characteristic polynomials attached to the
/// m = 1 and m = 2 odd-order extremal cases. Throws DomainError for r < 3.
Cubic cubic_family(CubicFamily which, int r);

/// Characteristic polynomial det(xI - B) of a 3-part quotient matrix,
/// leading coefficient first. Throws DomainError unless there are 3 parts.
std::array<double, 4> quotient_characteristic(const QuotientMatrix& q);

double evaluate(std::span<const double, 4> coeffs, double x);

/// Greatest real root of a monic cubic. Bisection to 1e-6 on a sign-change
/// bracket, then Newton polish to 1e-12. Throws DomainError if the root is
/// outside [lo, hi].
double largest_root(const std::array<double, 4>& coeffs);
double largest_root(const std::array<double, 4>& coeffs, double lo, double hi);
double largest_root(const Cubic& coeffs);

enum class ThresholdKind { ClosedFormEven, ClosedFormOdd, CubicM1, CubicM2 };

std::string_view kind_name(ThresholdKind kind);

struct SpectralThreshold {
  double value = 0.0;
  ThresholdKind kind = ThresholdKind::ClosedFormEven;
  int r = 0;
  int m = 0;
};

/// Minimum spectral radius over connected irregular graphs of maximum degree
/// r, order n != r (mod 2) and 2e >= rn - m:
///   (r - 2 + sqrt((r+2)^2 - 4m)) / 2.
/// Domain: m even, 2 <= m <= r+1, r >= 3.
SpectralThreshold rho1(int r, int m);

/// Threshold for the class with order n = r (mod 2). Domain: 1 <= m <= r+1,
/// m = r (mod 2), r >= 3. m >= 3 uses the closed form
/// (r - 3 + sqrt((r+3)^2 - 4m)) / 2; m = 1 and m = 2 the largest roots of
/// the P and f1 cubics.
///
/// Note: for m = 2 the f1 root lies strictly below the spectral radius of
/// every m = 2 construction; compare quotient_characteristic() of
/// Family::ExtremalOddM2.
SpectralThreshold rho2(int r, int m);

/// Strict "value < threshold" with the tolerance subtracted from the
/// threshold, so borderline values never count as below.
inline bool strictly_below(double value, double threshold,
                           double tolerance = kDefaultTolerance) {
  return value < threshold - tolerance;
}

}  // namespace regfactor
