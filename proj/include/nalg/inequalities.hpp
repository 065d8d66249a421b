#pragma once
// Frobenius-form commutator estimates over Hurwitz matrices and for compact Lie algebras.

#include <cstdint>
#include <random>

#include "nalg/analysis.hpp"
#include "nalg/hurwitz.hpp"

namespace nalg {

template <class T>
T frobenius_norm2(const HMat<T>& X) {
  return frobenius(X, X);
}

template <class T>
bool is_diagonal(const HMat<T>& X) {
  for (int i = 0; i < X.n(); ++i)
    for (int j = 0; j < X.n(); ++j)
      if (i != j && !is_zero_vec(X(i, j), 0.0)) return false;
  return true;
}

template <class T>
struct BwResidual {
  T value{0};              // 2(|X|^2 |Y|^2 - f(X,Y)^2) - |[X,Y]|^2
  bool in_domain = true;   // Hermitian pair, and diagonal X when octonionic
  bool hermitian = true;
};

template <class T>
BwResidual<T> bw_residual(const HMat<T>& X, const HMat<T>& Y) {
  if (X.n() != Y.n() || X.level() != Y.level()) throw std::invalid_argument("bw_residual: shape mismatch");
  BwResidual<T> r;
  r.hermitian = X.is_hermitian() && Y.is_hermitian();
  r.in_domain = r.hermitian && (X.level() < 8 || (X.n() == 3 && is_diagonal(X)));
  T fxy = frobenius(X, Y);
  HMat<T> C = commutator(X, Y);
  r.value = T(2) * (frobenius_norm2(X) * frobenius_norm2(Y) - fxy * fxy) - frobenius_norm2(C);
  return r;
}

// Residuals of the P/Q reduction, expanded over formal alpha = |X|, beta = |Y|
// (alpha^2, beta^2 stay in T, so rational inputs are checked exactly).
template <class T>
struct BwReduction {
  double commutator = 0;  // [P,Q] - 2 alpha beta [X,Y], coefficientwise
  double norm_chain = 0;  // |P|^2 |Q|^2 / (2 a b) - 2(ab - f^2), both components
  T pq_commutator2{0};    // |[P,Q]|^2 = 4 a b |[X,Y]|^2
  T pq_norms{0};          // |P|^2 |Q|^2; the alpha beta part cancels
};

template <class T>
BwReduction<T> bw_reduction_check(const HMat<T>& X, const HMat<T>& Y) {
  T a = frobenius_norm2(X), b = frobenius_norm2(Y);
  if (is_zero(a, 0.0) || is_zero(b, 0.0)) throw std::invalid_argument("bw_reduction_check: zero input");
  BwReduction<T> r;
  // [P,Q] = beta^2 [X,X] + alpha beta ([X,Y] - [Y,X]) - alpha^2 [Y,Y]
  HMat<T> XY = commutator(X, Y), YX = commutator(Y, X);
  r.commutator = std::max({commutator(X, X).max_abs_entry(), commutator(Y, Y).max_abs_entry(),
                           (XY - YX - XY.scaled(T(2))).max_abs_entry()});
  T f = frobenius(X, Y), g = frobenius(Y, X);
  // |P|^2 = 2ab - alpha beta (f + g), |Q|^2 = 2ab + alpha beta (f + g)
  T s = f + g;
  r.pq_norms = T(4) * a * b * a * b - s * s * a * b;
  r.pq_commutator2 = T(4) * a * b * frobenius_norm2(XY);
  T chain = r.pq_norms / (T(2) * a * b) - T(2) * (a * b - f * f);
  r.norm_chain = std::max(std::abs(to_double(chain)), std::abs(to_double(T(f - g))));
  return r;
}

// ---- random Hermitian matrices ----
template <class T>
HMat<T> random_hermitian(int n, int level, std::mt19937_64& rng, bool diagonal = false);

template <>
inline HMat<double> random_hermitian<double>(int n, int level, std::mt19937_64& rng, bool diagonal) {
  std::normal_distribution<double> N(0, 1);
  HMat<double> X(n, level);
  for (int i = 0; i < n; ++i) {
    X(i, i)[0] = N(rng);
    if (diagonal) continue;
    for (int j = i + 1; j < n; ++j) {
      for (int c = 0; c < level; ++c) X(i, j)[c] = N(rng);
      X(j, i) = hz_conj(X(i, j));
    }
  }
  return X;
}
template <>
inline HMat<Q> random_hermitian<Q>(int n, int level, std::mt19937_64& rng, bool diagonal) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto r = [&] { return Q(num(rng), den(rng)); };
  HMat<Q> X(n, level);
  for (int i = 0; i < n; ++i) {
    X(i, i)[0] = r();
    X(i, i)[0].canonicalize();
    if (diagonal) continue;
    for (int j = i + 1; j < n; ++j) {
      for (int c = 0; c < level; ++c) {
        X(i, j)[c] = r();
        X(i, j)[c].canonicalize();
      }
      X(j, i) = hz_conj(X(i, j));
    }
  }
  return X;
}

// e_11 - e_nn and e_1n + e_n1
template <class T>
std::pair<HMat<T>, HMat<T>> bw_equality_witness(int n, int level) {
  if (n < 2) throw std::invalid_argument("bw_equality_witness: n < 2");
  return {unit_matrix<T>(n, level, 0, 0) - unit_matrix<T>(n, level, n - 1, n - 1),
          unit_matrix<T>(n, level, 0, n - 1) + unit_matrix<T>(n, level, n - 1, 0)};
}

// Minimum of bw_residual over random pairs; the octonionic case uses diagonal X.
struct BwSweep {
  double min_residual = 0;
  std::size_t pairs = 0;
  std::size_t outside_domain = 0;
};
BwSweep bw_sweep(int n, int level, std::size_t pairs, std::uint64_t seed);
BwSweep bw_sweep_serial(int n, int level, std::size_t pairs, std::uint64_t seed);

// ---- bw of a compact Lie algebra: sup -B([x,y],[x,y]) / (B(x,x)B(y,y) - B(x,y)^2) ----
struct BwEstimate {
  double value = 0;
  std::pair<Vec<double>, Vec<double>> witness;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

template <class T>
double bw_ratio(const MetrizedAlgebra<T>& g, const Vec<T>& x, const Vec<T>& y) {
  Vec<T> c = multiply(g.alg, x, y);
  T bxy = bilinear(g.h, x, y);
  T den = bilinear(g.h, x, x) * bilinear(g.h, y, y) - bxy * bxy;
  if (is_zero(den)) throw std::domain_error("bw_ratio: dependent pair");
  return to_double(T(-bilinear(g.h, c, c) / den));
}

// g.h is the Killing form and must be negative definite
BwEstimate bw_lie_estimate(const MetrizedAlgebra<double>& g, std::size_t samples = 2000, int steps = 200,
                           std::uint64_t seed = 1);
BwEstimate bw_lie_estimate_serial(const MetrizedAlgebra<double>& g, std::size_t samples = 2000, int steps = 200,
                                  std::uint64_t seed = 1);

inline double bw_so_bound(int n) { return 2.0 / (n - 2); }
inline double bw_su_bound(int n) { return 1.0 / n; }

}  // namespace nalg
