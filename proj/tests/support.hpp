#pragma once
// Random inputs shared by the test binaries.

#include <random>

#include "nalg/algebra.hpp"

namespace nalg::testing {

inline Q rand_q(std::mt19937_64& rng, long lo = -6, long hi = 6, long maxden = 4) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, maxden);
  Q r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Q rand_nonzero_q(std::mt19937_64& rng) {
  for (;;) {
    Q r = rand_q(rng);
    if (sgn(r) != 0) return r;
  }
}

template <class T>
Vec<T> rand_vec(std::mt19937_64& rng, std::size_t n);
template <>
inline Vec<Q> rand_vec<Q>(std::mt19937_64& rng, std::size_t n) {
  Vec<Q> v(n);
  for (auto& x : v) x = rand_q(rng);
  return v;
}
template <>
inline Vec<double> rand_vec<double>(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> N(0, 1);
  Vec<double> v(n);
  for (auto& x : v) x = N(rng);
  return v;
}

inline Matrix<Q> rand_sym_q(std::mt19937_64& rng, std::size_t n) {
  Matrix<Q> S(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) S(i, j) = S(j, i) = rand_q(rng);
  return S;
}

// dense random commutative algebra
inline Algebra<Q> rand_commutative_q(std::mt19937_64& rng, std::size_t n) {
  Algebra<Q> A(n, Symmetry::commutative, "random");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) A.set(i, j, k, rand_q(rng, -3, 3, 3));
  return A;
}

template <class T>
bool vec_eq(const Vec<T>& a, const Vec<T>& b, double tol = 0.0) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(T(a[i] - b[i]), tol)) return false;
  return true;
}

}  // namespace nalg::testing
