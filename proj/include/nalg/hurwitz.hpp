#pragma once
// Cayley-Dickson arithmetic on R, C, H, O and matrices over them.

#include <array>
#include <string>

#include "nalg/linalg.hpp"

namespace nalg {

// number of real coordinates: 1, 2, 4, 8
int level_from_char(char c);
char level_char(int level);

// Unit table: e_a e_b = sign[a][b] e_{index[a][b]}, from (a,b)(c,d) = (ac - d*b, da + bc*).
struct CDTable {
  int level = 1;
  std::array<std::array<int, 8>, 8> index{}, sign{};
};
const CDTable& cd_table(int level);

template <class T>
using Hz = Vec<T>;

template <class T>
Hz<T> hz_mul(int level, const Hz<T>& x, const Hz<T>& y) {
  if (int(x.size()) != level || int(y.size()) != level) throw std::invalid_argument("hz_mul: level mismatch");
  const CDTable& t = cd_table(level);
  Hz<T> z(level, T(0));
  for (int a = 0; a < level; ++a) {
    if (is_zero(x[a], 0.0)) continue;
    for (int b = 0; b < level; ++b) {
      if (is_zero(y[b], 0.0)) continue;
      if (t.sign[a][b] > 0)
        z[t.index[a][b]] += x[a] * y[b];
      else
        z[t.index[a][b]] -= x[a] * y[b];
    }
  }
  return z;
}
template <class T>
Hz<T> hz_conj(const Hz<T>& x) {
  Hz<T> y(x);
  for (std::size_t i = 1; i < y.size(); ++i) y[i] = -y[i];
  return y;
}
template <class T>
T hz_re(const Hz<T>& x) {
  return x[0];
}
template <class T>
T hz_norm(const Hz<T>& x) {
  return dot(x, x);
}

// n x n matrix with Hurwitz entries, row-major.
template <class T>
class HMat {
 public:
  HMat() = default;
  HMat(int n, int level) : n_(n), level_(level), e_(n * n, Hz<T>(level, T(0))) {}
  static HMat identity(int n, int level) {
    HMat I(n, level);
    for (int i = 0; i < n; ++i) I(i, i)[0] = T(1);
    return I;
  }
  int n() const { return n_; }
  int level() const { return level_; }
  Hz<T>& operator()(int i, int j) { return e_[i * n_ + j]; }
  const Hz<T>& operator()(int i, int j) const { return e_[i * n_ + j]; }

  HMat operator*(const HMat& o) const {
    HMat r(n_, level_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Hz<T>& a = (*this)(i, k);
        if (is_zero_vec(a, 0.0)) continue;
        for (int j = 0; j < n_; ++j) {
          const Hz<T>& b = o(k, j);
          if (is_zero_vec(b, 0.0)) continue;
          Hz<T> p = hz_mul(level_, a, b);
          for (int c = 0; c < level_; ++c) r(i, j)[c] += p[c];
        }
      }
    return r;
  }
  HMat operator+(const HMat& o) const {
    HMat r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
      for (int c = 0; c < level_; ++c) r.e_[i][c] += o.e_[i][c];
    return r;
  }
  HMat operator-(const HMat& o) const {
    HMat r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
      for (int c = 0; c < level_; ++c) r.e_[i][c] -= o.e_[i][c];
    return r;
  }
  HMat scaled(const T& s) const {
    HMat r(*this);
    for (auto& z : r.e_)
      for (auto& v : z) v *= s;
    return r;
  }
  // left multiplication of every entry by a Hurwitz scalar
  HMat left_scalar(const Hz<T>& s) const {
    HMat r(n_, level_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = hz_mul(level_, s, e_[i]);
    return r;
  }
  HMat conj_transpose() const {
    HMat r(n_, level_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = hz_conj((*this)(i, j));
    return r;
  }
  Hz<T> trace() const {
    Hz<T> t(level_, T(0));
    for (int i = 0; i < n_; ++i)
      for (int c = 0; c < level_; ++c) t[c] += (*this)(i, i)[c];
    return t;
  }
  T re_trace() const { return trace()[0]; }
  bool is_hermitian() const { return conj_transpose() == *this; }
  bool operator==(const HMat& o) const { return n_ == o.n_ && level_ == o.level_ && e_ == o.e_; }
  // flat real coordinates, entry-major
  Vec<T> flat() const {
    Vec<T> v;
    for (const auto& z : e_) v.insert(v.end(), z.begin(), z.end());
    return v;
  }
  double max_abs_entry() const {
    double m = 0;
    for (const auto& z : e_) m = std::max(m, max_abs(z));
    return m;
  }

 private:
  int n_ = 0, level_ = 1;
  std::vector<Hz<T>> e_;
};

template <class T>
HMat<T> commutator(const HMat<T>& X, const HMat<T>& Y) {
  return X * Y - Y * X;
}
// (XY + YX) / 2
template <class T>
HMat<T> jordan(const HMat<T>& X, const HMat<T>& Y) {
  return (X * Y + Y * X).scaled(T(1) / T(2));
}
// f(X, Y) = re tr(X^* Y)
template <class T>
T frobenius(const HMat<T>& X, const HMat<T>& Y) {
  if (X.n() != Y.n() || X.level() != Y.level()) throw std::invalid_argument("frobenius: shape mismatch");
  return (X.conj_transpose() * Y).re_trace();
}
template <class T>
HMat<T> unit_matrix(int n, int level, int i, int j, int u = 0) {
  HMat<T> E(n, level);
  E(i, j)[u] = T(1);
  return E;
}

template <class U, class T>
HMat<U> convert_hmat(const HMat<T>& X) {
  HMat<U> Y(X.n(), X.level());
  for (int i = 0; i < X.n(); ++i)
    for (int j = 0; j < X.n(); ++j) Y(i, j) = convert_vec<U>(X(i, j));
  return Y;
}

}  // namespace nalg
