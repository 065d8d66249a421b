#pragma once
// Algebras as structure-constant tensors, plus the intrinsic trace-form machinery.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nalg/linalg.hpp"

namespace nalg {

enum class Symmetry { commutative, anticommutative };
enum class Flag { unchecked, yes, no };

inline const char* symmetry_name(Symmetry s) {
  return s == Symmetry::commutative ? "commutative" : "anticommutative";
}

// m_{ij}^k kept for i <= j only.  For anticommutative algebras the diagonal
// slots stay zero and m_{ji} = -m_{ij} is implied.
template <class T>
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::size_t n, Symmetry s, std::string name = "")
      : n_(n), sym_(s), name_(std::move(name)), m_(n * (n + 1) / 2 * n, T(0)) {}

  std::size_t dim() const { return n_; }
  Symmetry symmetry() const { return sym_; }
  bool anti() const { return sym_ == Symmetry::anticommutative; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  // signed coefficient of e_k in e_i . e_j
  T coef(std::size_t i, std::size_t j, std::size_t k) const {
    if (i <= j) return m_[slot(i, j) + k];
    return anti() ? T(-m_[slot(j, i) + k]) : m_[slot(j, i) + k];
  }
  const T* pair(std::size_t i, std::size_t j) const { return &m_[slot(i, j)]; }

  // e_i . e_j gains v e_k.  Order of i, j is normalized here.
  void set(std::size_t i, std::size_t j, std::size_t k, const T& v) {
    check(i, j, k);
    if (i == j && anti()) {
      if (!is_zero(v, 0.0)) throw std::invalid_argument("anticommutative: e_i.e_i must vanish");
      return;
    }
    if (i <= j)
      m_[slot(i, j) + k] = v;
    else
      m_[slot(j, i) + k] = anti() ? T(-v) : v;
  }
  void set_product(std::size_t i, std::size_t j, const Vec<T>& v) {
    for (std::size_t k = 0; k < n_; ++k) set(i, j, k, v[k]);
  }

  bool operator==(const Algebra& o) const { return n_ == o.n_ && sym_ == o.sym_ && m_ == o.m_; }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const { return (i * n_ - i * (i - 1) / 2 + (j - i)) * n_; }
  void check(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("algebra index");
  }
  std::size_t n_ = 0;
  Symmetry sym_ = Symmetry::commutative;
  std::string name_;
  std::vector<T> m_;
};

template <class T>
struct MetrizedAlgebra {
  Algebra<T> alg;
  Matrix<T> h;
  Flag h_invariant = Flag::unchecked;
  Flag h_nondegenerate = Flag::unchecked;
  Flag exact = Flag::unchecked;

  std::size_t dim() const { return alg.dim(); }
};

struct Check {
  bool ok = true;
  double violation = 0;
};

template <class T>
struct EinsteinFit {
  T kappa{0};
  T residual{0};
  bool degenerate = false;  // tau vanishes identically
};

template <class T>
struct Decomposition {
  std::vector<Subspace<T>> ideals;
  bool decomposed = false;
};

// Retraction onto a subspace together with the embedding of its basis.
template <class T>
struct Retraction {
  MetrizedAlgebra<T> ma;
  Subspace<T> sub;  // sub.basis embeds the retracted basis
};

template <class U, class T>
Algebra<U> convert_algebra(const Algebra<T>& A) {
  Algebra<U> B(A.dim(), A.symmetry(), A.name());
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = A.anti() ? i + 1 : i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) B.set(i, j, k, convert<U>(A.coef(i, j, k)));
  return B;
}
template <class U, class T>
MetrizedAlgebra<U> convert_metrized(const MetrizedAlgebra<T>& M) {
  return {convert_algebra<U>(M.alg), convert_mat<U>(M.h), M.h_invariant, M.h_nondegenerate, M.exact};
}

// ---- products ----
template <class T>
Vec<T> multiply(const Algebra<T>& A, const Vec<T>& x, const Vec<T>& y) {
  const std::size_t n = A.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("multiply: dimension mismatch");
  Vec<T> z(n, T(0));
  T w;
  for (std::size_t i = 0; i < n; ++i) {
    bool xi = !is_zero(x[i], 0.0), yi = !is_zero(y[i], 0.0);
    for (std::size_t j = A.anti() ? i + 1 : i; j < n; ++j) {
      bool t1 = xi && !is_zero(y[j], 0.0);
      bool t2 = i != j && yi && !is_zero(x[j], 0.0);
      if (!t1 && !t2) continue;
      w = T(0);
      if (t1) w += x[i] * y[j];
      if (t2) {
        if (A.anti())
          w -= x[j] * y[i];
        else
          w += x[j] * y[i];
      }
      if (is_zero(w, 0.0)) continue;
      const T* m = A.pair(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(m[k], 0.0)) z[k] += w * m[k];
    }
  }
  return z;
}

// column j = x . e_j
template <class T>
Matrix<T> left_mult(const Algebra<T>& A, const Vec<T>& x) {
  const std::size_t n = A.dim();
  if (x.size() != n) throw std::invalid_argument("left_mult: dimension mismatch");
  Matrix<T> L(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i], 0.0)) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        T c = A.coef(i, j, k);
        if (!is_zero(c, 0.0)) L(k, j) += x[i] * c;
      }
  }
  return L;
}

template <class T>
std::vector<Matrix<T>> left_mult_basis(const Algebra<T>& A) {
  std::vector<Matrix<T>> Ls;
  for (std::size_t i = 0; i < A.dim(); ++i) Ls.push_back(left_mult(A, unit<T>(A.dim(), i)));
  return Ls;
}

template <class T>
Vec<T> associator(const Algebra<T>& A, const Vec<T>& x, const Vec<T>& y, const Vec<T>& z) {
  return multiply(A, multiply(A, x, y), z) - multiply(A, x, multiply(A, y, z));
}

// ---- trace forms ----
template <class T>
Vec<T> trace_linear(const Algebra<T>& A) {
  const std::size_t n = A.dim();
  Vec<T> t(n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i] += A.coef(i, j, j);
  return t;
}

template <class T>
bool is_exact(const Algebra<T>& A, double tol = Tol{}.zero) {
  return is_zero_vec(trace_linear(A), tol);
}

template <class T>
Matrix<T> killing_form_serial(const Algebra<T>& A) {
  auto Ls = left_mult_basis(A);
  const std::size_t n = A.dim();
  Matrix<T> G(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      G(i, j) = trace_product(Ls[i], Ls[j]);
      G(j, i) = G(i, j);
    }
  return G;
}

// Same Gram matrix; rows of the upper triangle are distributed over threads.
template <class T>
Matrix<T> killing_form(const Algebra<T>& A) {
  auto Ls = left_mult_basis(A);
  const long n = static_cast<long>(A.dim());
  Matrix<T> G(n, n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j) G(i, j) = trace_product(Ls[i], Ls[j]);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < i; ++j) G(i, j) = G(j, i);
  return G;
}

// ric(x, y) = tr L(x.y) - tau(x, y)
template <class T>
Matrix<T> ricci_form(const Algebra<T>& A, const Matrix<T>& tau) {
  const std::size_t n = A.dim();
  Vec<T> t = trace_linear(A);
  Matrix<T> R(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T s(0);
      for (std::size_t k = 0; k < n; ++k) s += A.coef(i, j, k) * t[k];
      R(i, j) = s - tau(i, j);
    }
  return R;
}
template <class T>
Matrix<T> ricci_form(const Algebra<T>& A) {
  return ricci_form(A, killing_form(A));
}

// h(e_i e_j, e_k) = h(e_i, e_j e_k) on all basis triples
template <class T>
Check is_invariant(const Algebra<T>& A, const Matrix<T>& G, double tol = Tol{}.zero) {
  const std::size_t n = A.dim();
  std::vector<Vec<T>> W(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) W[i * n + j] = G * multiply(A, unit<T>(n, i), unit<T>(n, j));
  Check c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        T d = W[i * n + j][k] - W[j * n + k][i];
        c.violation = std::max(c.violation, std::abs(to_double(d)));
        if (!is_zero(d, tol)) c.ok = false;
      }
  return c;
}

template <class T>
T cubic_value(const MetrizedAlgebra<T>& M, const Vec<T>& x) {
  return bilinear(M.h, multiply(M.alg, x, x), x) / T(6);
}

template <class T>
MetrizedAlgebra<T> with_flags(MetrizedAlgebra<T> M, double tol = Tol{}.zero) {
  M.h_invariant = is_invariant(M.alg, M.h, tol).ok ? Flag::yes : Flag::no;
  M.h_nondegenerate = inertia(M.h).z == 0 ? Flag::yes : Flag::no;
  M.exact = is_exact(M.alg, tol) ? Flag::yes : Flag::no;
  return M;
}

// Killing-metrized view: h = tau.
template <class T>
MetrizedAlgebra<T> killing_metrized(const Algebra<T>& A) {
  return with_flags(MetrizedAlgebra<T>{A, killing_form(A)});
}

// ---- ideals ----
template <class T>
bool is_ideal(const Algebra<T>& A, const Subspace<T>& S, double tol = Tol{}.zero) {
  const std::size_t n = A.dim();
  for (std::size_t k = 0; k < S.dim(); ++k) {
    Vec<T> b = S.vec(k);
    for (std::size_t i = 0; i < n; ++i)
      if (!contains(S, multiply(A, unit<T>(n, i), b), tol)) return false;
  }
  return true;
}

template <class T>
Subspace<T> ideal_closure(const Algebra<T>& A, const std::vector<Vec<T>>& gens, double tol = Tol{}.rank) {
  const std::size_t n = A.dim();
  Subspace<T> S = span(gens, n, tol);
  for (;;) {
    std::vector<Vec<T>> vs;
    for (std::size_t k = 0; k < S.dim(); ++k) {
      Vec<T> b = S.vec(k);
      vs.push_back(b);
      for (std::size_t i = 0; i < n; ++i) vs.push_back(multiply(A, unit<T>(n, i), b));
    }
    Subspace<T> S2 = span(vs, n, tol);
    if (S2.dim() == S.dim()) return S2;
    S = std::move(S2);
  }
}

// Monte Carlo splitting into ideals; every returned piece passes is_ideal in T.
template <class T>
Decomposition<T> decompose_ideals(const MetrizedAlgebra<T>& M, int trials, std::uint64_t seed);

// ---- constructions on algebras ----
template <class T>
MetrizedAlgebra<T> direct_sum(const MetrizedAlgebra<T>& A, const MetrizedAlgebra<T>& B) {
  if (A.alg.symmetry() != B.alg.symmetry()) throw std::invalid_argument("direct_sum: mixed symmetry");
  const std::size_t n = A.dim(), m = B.dim();
  Algebra<T> S(n + m, A.alg.symmetry(), A.alg.name() + "+" + B.alg.name());
  Matrix<T> h(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = A.h(i, j);
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) S.set(i, j, k, A.alg.coef(i, j, k));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) h(n + i, n + j) = B.h(i, j);
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) S.set(n + i, n + j, n + k, B.alg.coef(i, j, k));
  }
  return {S, h};
}

// Basis e_i (x) f_j at index i * dim(B) + j.
template <class T>
MetrizedAlgebra<T> tensor_product(const MetrizedAlgebra<T>& A, const MetrizedAlgebra<T>& B) {
  if (A.alg.symmetry() != B.alg.symmetry())
    throw std::invalid_argument("tensor_product: needs matching symmetry");
  const std::size_t n = A.dim(), m = B.dim(), N = n * m;
  Algebra<T> P(N, Symmetry::commutative, A.alg.name() + "*" + B.alg.name());
  Matrix<T> h(N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < m; ++b) {
          std::size_t p = i * m + a, q = j * m + b;
          h(p, q) = A.h(i, j) * B.h(a, b);
          if (q < p) continue;
          for (std::size_t k = 0; k < n; ++k) {
            T c = A.alg.coef(i, j, k);
            if (is_zero(c, 0.0)) continue;
            for (std::size_t l = 0; l < m; ++l) {
              T d = B.alg.coef(a, b, l);
              if (!is_zero(d, 0.0)) P.set(p, q, k * m + l, c * d);
            }
          }
        }
  return {P, h};
}

// (x, a)(y, b) = (x.y + a y + b x, a b + c(x, y)), unit appended last; metric c + ab.
template <class T>
MetrizedAlgebra<T> unitalization(const MetrizedAlgebra<T>& M, const Matrix<T>& c) {
  const std::size_t n = M.dim();
  if (M.alg.anti()) throw std::invalid_argument("unitalization: commutative algebras only");
  if (c.rows() != n || c.cols() != n) throw std::invalid_argument("unitalization: form dimension mismatch");
  Algebra<T> U(n + 1, Symmetry::commutative, "unit(" + M.alg.name() + ")");
  Matrix<T> h(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) U.set(i, j, k, M.alg.coef(i, j, k));
      U.set(i, j, n, c(i, j));
    }
    U.set(i, n, i, T(1));
    for (std::size_t j = 0; j < n; ++j) h(i, j) = c(i, j);
  }
  U.set(n, n, n, T(1));
  h(n, n) = T(1);
  return {U, h};
}
template <class T>
MetrizedAlgebra<T> unitalization(const MetrizedAlgebra<T>& M) {
  return unitalization(M, M.h);
}

// c = -ric / (n - 1)
template <class T>
MetrizedAlgebra<T> intrinsic_unitalization(const Algebra<T>& A) {
  const std::size_t n = A.dim();
  if (n < 2) throw std::invalid_argument("intrinsic_unitalization: dim < 2");
  Matrix<T> c = T(T(-1) / T(long(n - 1))) * ricci_form(A);
  return unitalization(MetrizedAlgebra<T>{A, c}, c);
}

template <class T>
std::optional<Vec<T>> find_unit(const Algebra<T>& A, double tol = Tol{}.zero) {
  const std::size_t n = A.dim();
  // sum_i e_i m_{ij}^k = delta_jk
  Matrix<T> S(n * n, n);
  Vec<T> rhs(n * n, T(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) S(j * n + k, i) = A.coef(i, j, k);
      if (j == k) rhs[j * n + k] = T(1);
    }
  auto e = solve(S, rhs);
  if (!e) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j) {
    Vec<T> ej = unit<T>(n, j);
    if (!is_zero_vec(Vec<T>(multiply(A, *e, ej) - ej), tol)) return std::nullopt;
    if (!is_zero_vec(Vec<T>(multiply(A, ej, *e) - ej), tol)) return std::nullopt;
  }
  return e;
}

// x.y = pi(pi(x) * pi(y)) on S, with pi the h-orthogonal projection.
template <class T>
Retraction<T> retraction(const MetrizedAlgebra<T>& M, const Subspace<T>& S, const T& scale = T(1)) {
  const Matrix<T>& B = S.basis;
  const std::size_t k = S.dim();
  Matrix<T> BtG = transpose(B) * M.h;
  Matrix<T> gram = BtG * B;
  auto inv = inverse(gram);
  if (!inv) throw std::domain_error("retraction: degenerate subspace");
  Matrix<T> proj = *inv * BtG;  // ambient -> S coordinates
  Algebra<T> R(k, M.alg.symmetry(), "retract(" + M.alg.name() + ")");
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = M.alg.anti() ? a + 1 : a; b < k; ++b) R.set_product(a, b, proj * multiply(M.alg, B.col(a), B.col(b)));
  return {MetrizedAlgebra<T>{R, scale * gram}, S};
}

// Retraction onto the h-complement of the unit, metric rescaled by g(e,e)^-1.
template <class T>
Retraction<T> deunitalization(const MetrizedAlgebra<T>& M) {
  auto e = find_unit(M.alg);
  if (!e) throw std::domain_error("deunitalization: no unit");
  T gee = bilinear(M.h, *e, *e);
  if (is_zero(gee)) throw std::domain_error("deunitalization: isotropic unit");
  auto comp = orthogonal_complement(span<T>({*e}, M.dim()), M.h);
  auto r = retraction(M, comp, T(T(1) / gee));
  r.ma.alg.set_name("deunit(" + M.alg.name() + ")");
  return r;
}

template <class T>
EinsteinFit<T> einstein_fit(const MetrizedAlgebra<T>& M, const Matrix<T>& tau) {
  const std::size_t n = M.dim();
  std::size_t b = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(M.h(i, i))) {
      b = i;
      break;
    }
  if (b == n) throw std::domain_error("einstein_fit: no anisotropic basis vector");
  EinsteinFit<T> f;
  f.kappa = tau(b, b) / M.h(b, b);
  f.degenerate = max_abs(tau) == 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T d = abs_of(T(tau(i, j) - f.kappa * M.h(i, j)));
      if (d > f.residual) f.residual = d;
    }
  return f;
}
template <class T>
EinsteinFit<T> einstein_fit(const MetrizedAlgebra<T>& M) {
  return einstein_fit(M, killing_form(M.alg));
}

// Psi : A -> B as a dim(B) x dim(A) matrix.
template <class T>
Check verify_homomorphism(const Matrix<T>& Psi, const Algebra<T>& A, const Algebra<T>& B,
                          double tol = Tol{}.zero) {
  if (Psi.cols() != A.dim() || Psi.rows() != B.dim()) throw std::invalid_argument("verify_homomorphism: shape");
  Check c;
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<T> d = Psi * multiply(A, unit<T>(n, i), unit<T>(n, j)) - multiply(B, Psi.col(i), Psi.col(j));
      c.violation = std::max(c.violation, max_abs(d));
      if (!is_zero_vec(d, tol)) c.ok = false;
    }
  return c;
}

template <class T>
Check verify_isometric(const Matrix<T>& Psi, const MetrizedAlgebra<T>& A, const MetrizedAlgebra<T>& B,
                       double tol = Tol{}.zero) {
  Check c = verify_homomorphism(Psi, A.alg, B.alg, tol);
  Matrix<T> pull = transpose(Psi) * B.h * Psi - A.h;
  c.violation = std::max(c.violation, max_abs(pull));
  for (std::size_t i = 0; i < pull.rows(); ++i)
    for (std::size_t j = 0; j < pull.cols(); ++j)
      if (!is_zero(pull(i, j), tol)) c.ok = false;
  return c;
}

// (dim, kappa) = (A g^2 + B g, B g - 2)
template <class T>
std::pair<T, T> griess_einstein(const T& a, const T& b, const T& gee) {
  return {a * gee * gee + b * gee, b * gee - T(2)};
}

// (-5c^2 + 88(n-2) - 2c(n+20)) / (4(5c+22))
Q voa_kappa(const Q& c, const Q& n);

}  // namespace nalg
