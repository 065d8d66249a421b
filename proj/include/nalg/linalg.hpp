#pragma once
// Small dense linear algebra over either backend.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "nalg/scalar.hpp"

namespace nalg {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vec<T> col(std::size_t j) const {
    Vec<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  void set_col(std::size_t j, const Vec<T>& v) {
    if (v.size() != r_) throw std::invalid_argument("set_col: size mismatch");
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

// ---- vectors ----
template <class T>
Vec<T> zeros(std::size_t n) {
  return Vec<T>(n, T(0));
}
template <class T>
Vec<T> unit(std::size_t n, std::size_t i) {
  Vec<T> v(n, T(0));
  v[i] = T(1);
  return v;
}
template <class T>
Vec<T> operator+(const Vec<T>& x, const Vec<T>& y) {
  Vec<T> z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}
template <class T>
Vec<T> operator-(const Vec<T>& x, const Vec<T>& y) {
  Vec<T> z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}
template <class T>
Vec<T> operator-(const Vec<T>& x) {
  Vec<T> z(x);
  for (auto& v : z) v = -v;
  return z;
}
template <class T>
Vec<T> operator*(const T& s, const Vec<T>& x) {
  Vec<T> z(x);
  for (auto& v : z) v *= s;
  return z;
}
// scalar expressions (gmpxx expression templates, integer literals) convert first
template <class T, class S>
  requires(!std::is_same_v<S, T> && std::is_convertible_v<S, T>)
Vec<T> operator*(const S& s, const Vec<T>& x) {
  return T(s) * x;
}
template <class T>
void axpy(const T& a, const Vec<T>& x, Vec<T>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}
template <class T>
T dot(const Vec<T>& x, const Vec<T>& y) {
  T s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}
template <class T>
double max_abs(const Vec<T>& x) {
  double m = 0;
  for (const auto& v : x) m = std::max(m, std::abs(to_double(v)));
  return m;
}
template <class T>
bool is_zero_vec(const Vec<T>& x, double tol = Tol{}.zero) {
  for (const auto& v : x)
    if (!is_zero(v, tol)) return false;
  return true;
}
template <class U, class T>
Vec<U> convert_vec(const Vec<T>& x) {
  Vec<U> y;
  y.reserve(x.size());
  for (const auto& v : x) y.push_back(convert<U>(v));
  return y;
}

// ---- matrices ----
template <class T>
Matrix<T> operator*(const Matrix<T>& A, const Matrix<T>& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix<T> C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const T& a = A(i, k);
      if (is_zero(a, 0.0)) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
    }
  return C;
}
template <class T>
Vec<T> operator*(const Matrix<T>& A, const Vec<T>& x) {
  if (A.cols() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
  Vec<T> y(A.rows(), T(0));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) y[i] += A(i, j) * x[j];
  return y;
}
template <class T>
Matrix<T> operator+(const Matrix<T>& A, const Matrix<T>& B) {
  Matrix<T> C(A);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) += B(i, j);
  return C;
}
template <class T>
Matrix<T> operator-(const Matrix<T>& A, const Matrix<T>& B) {
  Matrix<T> C(A);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) -= B(i, j);
  return C;
}
template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& A) {
  Matrix<T> C(A);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) *= s;
  return C;
}
template <class T, class S>
  requires(!std::is_same_v<S, T> && std::is_convertible_v<S, T>)
Matrix<T> operator*(const S& s, const Matrix<T>& A) {
  return T(s) * A;
}
template <class T>
Matrix<T> transpose(const Matrix<T>& A) {
  Matrix<T> B(A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) B(j, i) = A(i, j);
  return B;
}
template <class T>
T trace(const Matrix<T>& A) {
  T s(0);
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i) s += A(i, i);
  return s;
}
// tr(AB) without forming the product.
template <class T>
T trace_product(const Matrix<T>& A, const Matrix<T>& B) {
  T s(0);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      if (is_zero(A(i, k), 0.0)) continue;
      s += A(i, k) * B(k, i);
    }
  return s;
}
template <class T>
double max_abs(const Matrix<T>& A) {
  double m = 0;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) m = std::max(m, std::abs(to_double(A(i, j))));
  return m;
}
template <class T>
bool is_symmetric(const Matrix<T>& A, double tol = Tol{}.zero) {
  if (A.rows() != A.cols()) return false;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = i + 1; j < A.cols(); ++j)
      if (!is_zero(T(A(i, j) - A(j, i)), tol)) return false;
  return true;
}
// x^T G y
template <class T>
T bilinear(const Matrix<T>& G, const Vec<T>& x, const Vec<T>& y) {
  T s(0);
  for (std::size_t i = 0; i < G.rows(); ++i) {
    if (is_zero(x[i], 0.0)) continue;
    T t(0);
    for (std::size_t j = 0; j < G.cols(); ++j) t += G(i, j) * y[j];
    s += x[i] * t;
  }
  return s;
}
template <class U, class T>
Matrix<U> convert_mat(const Matrix<T>& A) {
  Matrix<U> B(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) B(i, j) = convert<U>(A(i, j));
  return B;
}

// ---- echelon forms ----
template <class T>
struct Rref {
  Matrix<T> R;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form.  Rational: first nonzero row is the pivot.
// Float: largest magnitude wins; entries below tol * scale count as zero.
template <class T>
Rref<T> rref(Matrix<T> M, double tol = Tol{}.rank) {
  const std::size_t m = M.rows(), n = M.cols();
  double thresh = 0;
  if constexpr (!Field<T>::exact) thresh = tol * std::max(1.0, max_abs(M));
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    if constexpr (Field<T>::exact) {
      for (std::size_t i = r; i < m; ++i)
        if (sgn(M(i, c)) != 0) {
          p = i;
          break;
        }
    } else {
      double best = thresh;
      for (std::size_t i = r; i < m; ++i)
        if (std::abs(M(i, c)) > best) {
          best = std::abs(M(i, c));
          p = i;
        }
    }
    if (p == m) {
      if constexpr (!Field<T>::exact)
        for (std::size_t i = r; i < m; ++i) M(i, c) = 0;
      continue;
    }
    if (p != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(r, j));
    T inv = T(1) / M(r, c);
    for (std::size_t j = c; j < n; ++j) M(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      T f = M(i, c);
      if (is_zero(f, 0.0)) continue;
      for (std::size_t j = c; j < n; ++j) M(i, j) -= f * M(r, j);
      M(i, c) = T(0);
    }
    piv.push_back(c);
    ++r;
  }
  if constexpr (!Field<T>::exact)
    for (std::size_t i = r; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = 0;
  return {std::move(M), std::move(piv)};
}

template <class T>
std::size_t rank(const Matrix<T>& M, double tol = Tol{}.rank) {
  return rref(M, tol).pivots.size();
}

// Basis of {x : M x = 0}, one vector per free column in ascending order.
template <class T>
std::vector<Vec<T>> nullspace(const Matrix<T>& M, double tol = Tol{}.rank) {
  auto [R, piv] = rref(M, tol);
  const std::size_t n = M.cols();
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec<T>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec<T> v(n, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -R(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

// Some solution of A x = b, or nullopt when inconsistent.
template <class T>
std::optional<Vec<T>> solve(const Matrix<T>& A, const Vec<T>& b, double tol = Tol{}.rank) {
  Matrix<T> Ab(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) Ab(i, j) = A(i, j);
    Ab(i, A.cols()) = b[i];
  }
  auto [R, piv] = rref(Ab, tol);
  if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
  Vec<T> x(A.cols(), T(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = R(r, A.cols());
  if constexpr (!Field<T>::exact) {
    Vec<T> res = A * x - b;
    if (max_abs(res) > 1e3 * tol * std::max(1.0, max_abs(b))) return std::nullopt;
  }
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& A, double tol = Tol{}.rank) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("inverse: not square");
  Matrix<T> Ai(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) Ai(i, j) = A(i, j);
    Ai(i, n + i) = T(1);
  }
  auto [R, piv] = rref(Ai, tol);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<T> B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = R(i, n + j);
  return B;
}

// ---- subspaces ----
// Columns of `basis` are the nonzero rows of the RREF of any spanning set,
// so two spanning sets of one subspace give identical bases (exact backend).
template <class T>
struct Subspace {
  std::size_t ambient = 0;
  Matrix<T> basis;  // ambient x dim
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.cols(); }
  Vec<T> vec(std::size_t k) const { return basis.col(k); }
};

template <class T>
Subspace<T> span(const std::vector<Vec<T>>& vs, std::size_t ambient, double tol = Tol{}.rank) {
  Matrix<T> M(vs.size(), ambient);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != ambient) throw std::invalid_argument("span: dimension mismatch");
    for (std::size_t j = 0; j < ambient; ++j) M(i, j) = vs[i][j];
  }
  auto [R, piv] = rref(M, tol);
  Subspace<T> S;
  S.ambient = ambient;
  S.pivots = piv;
  S.basis = Matrix<T>(ambient, piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t j = 0; j < ambient; ++j) S.basis(j, k) = R(k, j);
  return S;
}

template <class T>
Subspace<T> whole_space(std::size_t n) {
  std::vector<Vec<T>> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit<T>(n, i));
  return span(e, n);
}

// Coordinates of v in the reduced basis; nullopt when v is not in S.
template <class T>
std::optional<Vec<T>> coords_in(const Subspace<T>& S, const Vec<T>& v, double tol = Tol{}.zero) {
  Vec<T> c(S.dim());
  for (std::size_t k = 0; k < S.dim(); ++k) c[k] = v[S.pivots[k]];
  Vec<T> back = S.basis * c;
  double scale = std::max(1.0, max_abs(v));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(T(back[i] - v[i]), tol * scale)) return std::nullopt;
  return c;
}

template <class T>
bool contains(const Subspace<T>& S, const Vec<T>& v, double tol = Tol{}.zero) {
  return coords_in(S, v, tol).has_value();
}

template <class T>
bool same_subspace(const Subspace<T>& A, const Subspace<T>& B, double tol = Tol{}.zero) {
  if (A.dim() != B.dim() || A.ambient != B.ambient) return false;
  for (std::size_t k = 0; k < B.dim(); ++k)
    if (!contains(A, B.vec(k), tol)) return false;
  return true;
}

// f-orthogonal complement of S.  Throws when f restricted against S is degenerate.
template <class T>
Subspace<T> orthogonal_complement(const Subspace<T>& S, const Matrix<T>& G, double tol = Tol{}.rank) {
  const std::size_t n = S.ambient;
  if (G.rows() != n || G.cols() != n) throw std::invalid_argument("orthogonal_complement: shape");
  if (S.dim() == 0) return whole_space<T>(n);
  Matrix<T> M(S.dim(), n);
  for (std::size_t k = 0; k < S.dim(); ++k) {
    Vec<T> g = transpose(G) * S.vec(k);
    for (std::size_t j = 0; j < n; ++j) M(k, j) = g[j];
  }
  auto ns = nullspace(M, tol);
  if (ns.size() != n - S.dim())
    throw std::domain_error("orthogonal_complement: degenerate form on subspace");
  return span(ns, n, tol);
}

// ---- inertia ----
struct Inertia {
  std::size_t p = 0, m = 0, z = 0;
  bool operator==(const Inertia& o) const { return p == o.p && m == o.m && z == o.z; }
};

// Symmetric congruence diagonalization (exact for rationals).
template <class T>
Inertia congruence_inertia(Matrix<T> A, double tol = Tol{}.rank) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("inertia: not square");
  if (!is_symmetric(A, tol)) throw std::invalid_argument("inertia: asymmetric input");
  Inertia out;
  auto nz = [&](const T& x) { return !is_zero(x, tol); };
  for (std::size_t k = 0; k < n; ++k) {
    if (!nz(A(k, k))) {
      std::size_t j = k + 1;
      while (j < n && !nz(A(j, j))) ++j;
      if (j < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(A(k, c), A(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(A(r, k), A(r, j));
      } else {
        j = k + 1;
        while (j < n && !nz(A(k, j))) ++j;
        if (j == n) {
          ++out.z;
          continue;
        }
        // row/col k += row/col j makes the pivot 2 A(k,j)
        for (std::size_t c = 0; c < n; ++c) A(k, c) += A(j, c);
        for (std::size_t r = 0; r < n; ++r) A(r, k) += A(r, j);
      }
    }
    T piv = A(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (!nz(A(i, k))) continue;
      T f = A(i, k) / piv;
      for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      A(i, k) = T(0);
      A(k, i) = T(0);
    }
    if (to_double(piv) > 0)
      ++out.p;
    else
      ++out.m;
  }
  return out;
}

// ---- float eigen problems (Eigen-backed) ----
struct SymEigen {
  Vec<double> values;      // ascending
  Matrix<double> vectors;  // columns
};
SymEigen symmetric_eigen(const Matrix<double>& M);

struct RealEigen {
  Vec<double> re, im;
  bool has_complex = false;
  bool converged = true;
};
RealEigen general_real_eigenvalues(const Matrix<double>& M);

Inertia eigen_inertia(const Matrix<double>& M, double rank_tol = Tol{}.rank);

template <class T>
Inertia inertia(const Matrix<T>& G, double rank_tol = Tol{}.rank) {
  if constexpr (Field<T>::exact)
    return congruence_inertia(G, 0.0);
  else
    return eigen_inertia(G, rank_tol);
}

}  // namespace nalg
