#pragma once
// Named algebras and functorial constructions.

#include <map>
#include <string>

#include "nalg/algebra.hpp"
#include "nalg/hurwitz.hpp"

namespace nalg {

// ---- T^n_alpha and E^n ----
// e_i e_i = e_i, e_i e_j = alpha (e_i + e_j)
template <class T>
Algebra<T> talg(std::size_t n, const T& alpha) {
  if (n < 2) throw std::invalid_argument("talg: n < 2");
  Algebra<T> A(n, Symmetry::commutative, "talg");
  for (std::size_t i = 0; i < n; ++i) {
    A.set(i, i, i, T(1));
    for (std::size_t j = i + 1; j < n; ++j) {
      A.set(i, j, i, alpha);
      A.set(i, j, j, alpha);
    }
  }
  return A;
}

// E^n on gamma_1..gamma_n with h = tau
template <class T>
MetrizedAlgebra<T> simplicial(std::size_t n) {
  if (n < 2) throw std::invalid_argument("simplicial: n < 2");
  Algebra<T> A = talg<T>(n, T(-1) / T(long(n - 1)));
  A.set_name("ealg");
  return killing_metrized(A);
}

// gamma_0 = -(gamma_1 + ... + gamma_n); gamma_i = e_{i-1} otherwise
template <class T>
Vec<T> simplicial_gamma(std::size_t n, std::size_t i) {
  if (i > n) throw std::out_of_range("simplicial_gamma");
  if (i == 0) return Vec<T>(n, T(-1));
  return unit<T>(n, i - 1);
}

// T^{n+1}_{-1/(n-1)} -> E^n,  sum x_i e_i -> sum_{i>=1} (x_i - x_0) gamma_i
template <class T>
Matrix<T> twomodels_map(std::size_t n) {
  Matrix<T> P(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    P(i, 0) = T(-1);
    P(i, i + 1) = T(1);
  }
  return P;
}

// x -> x - <r, x> r with r = gamma_i - gamma_j and <x, y> = 2 tau(x, y) / tau(x, x)
template <class T>
Matrix<T> simplicial_reflection(const MetrizedAlgebra<T>& E, std::size_t i, std::size_t j) {
  const std::size_t n = E.dim();
  if (i >= j || j > n) throw std::out_of_range("simplicial_reflection: need 0 <= i < j <= n");
  Vec<T> r = simplicial_gamma<T>(n, i) - simplicial_gamma<T>(n, j);
  T rr = bilinear(E.h, r, r);
  Matrix<T> F(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec<T> x = unit<T>(n, c);
    T s = T(2) * bilinear(E.h, r, x) / rr;
    F.set_col(c, x - s * r);
  }
  return F;
}

// Order of the permutation group generated by `gens` (BFS over words).
std::size_t permutation_group_order(const std::vector<std::vector<int>>& gens);

// Image of gamma_0..gamma_n under F as a permutation; empty if F does not permute them.
template <class T>
std::vector<int> action_on_gammas(const Matrix<T>& F, std::size_t n) {
  std::vector<int> perm;
  for (std::size_t a = 0; a <= n; ++a) {
    Vec<T> img = F * simplicial_gamma<T>(n, a);
    int hit = -1;
    for (std::size_t b = 0; b <= n; ++b)
      if (is_zero_vec(Vec<T>(img - simplicial_gamma<T>(n, b)))) hit = int(b);
    if (hit < 0) return {};
    perm.push_back(hit);
  }
  return perm;
}

// ---- witnesses in E^2 (x) E^n, basis gamma_i (x) gamma_alpha ----
template <class T>
Vec<T> tw_e(std::size_t n, std::size_t i, std::size_t a) {
  Vec<T> u = simplicial_gamma<T>(2, i), v = simplicial_gamma<T>(n, a);
  Vec<T> out(2 * n);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < n; ++q) out[p * n + q] = u[p] * v[q];
  return out;
}
inline void tw_distinct(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c || a > n || b > n || c > n) throw std::invalid_argument("tensor witness: indices");
}
// ((n-1)/(n+1)) (e_{0a} + e_{1b} + e_{2c})
template <class T>
Vec<T> tw_a(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  tw_distinct(n, a, b, c);
  return (T(long(n - 1)) / T(long(n + 1))) * (tw_e<T>(n, 0, a) + tw_e<T>(n, 1, b) + tw_e<T>(n, 2, c));
}
// b: factor (n-1)/(n-5), n != 5;  z: factor 4/3, n = 5
template <class T>
Vec<T> tw_b(std::size_t n, std::size_t i, std::size_t a, std::size_t b, std::size_t c) {
  tw_distinct(n, a, b, c);
  Vec<T> s = tw_e<T>(n, i, a) + tw_e<T>(n, i, b) + tw_e<T>(n, i, c);
  if (n == 5) return (T(4) / T(3)) * s;
  return (T(long(n) - 1) / T(long(n) - 5)) * s;
}

// ---- Hermitian matrices over R, C, H, O ----
struct JordanInfo {
  int r = 0, N = 0, d = 0;
};
inline JordanInfo jordan_info(int n, int level) { return {n, n + level * n * (n - 1) / 2, level}; }

inline void check_herm_args(int n, int level) {
  if (n < 2) throw std::invalid_argument("herm: n < 2");
  if (level != 1 && level != 2 && level != 4 && level != 8) throw std::invalid_argument("herm: bad level");
  if (level == 8 && n != 3) throw std::invalid_argument("herm: octonionic case needs n = 3");
}

// e_ii first, then for i < j and each unit u: u e_ij + conj(u) e_ji
template <class T>
std::vector<HMat<T>> herm_basis(int n, int level) {
  std::vector<HMat<T>> B;
  for (int i = 0; i < n; ++i) B.push_back(unit_matrix<T>(n, level, i, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int u = 0; u < level; ++u) {
        HMat<T> X(n, level);
        X(i, j)[u] = T(1);
        X(j, i) = hz_conj(X(i, j));
        B.push_back(X);
      }
  return B;
}
template <class T>
Vec<T> herm_coords(const HMat<T>& X) {
  Vec<T> c;
  const int n = X.n(), L = X.level();
  for (int i = 0; i < n; ++i) c.push_back(X(i, i)[0]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int u = 0; u < L; ++u) c.push_back(X(i, j)[u]);
  return c;
}
template <class T>
HMat<T> herm_matrix(int n, int level, const Vec<T>& c) {
  auto B = herm_basis<T>(n, level);
  if (c.size() != B.size()) throw std::invalid_argument("herm_matrix: coordinate count");
  HMat<T> X(n, level);
  for (std::size_t k = 0; k < B.size(); ++k)
    if (!is_zero(c[k], 0.0)) X = X + B[k].scaled(c[k]);
  return X;
}

// x * y = (xy + yx)/2, h(x, y) = (1/n) re tr(xy)
template <class T>
MetrizedAlgebra<T> herm_jordan(int n, int level) {
  check_herm_args(n, level);
  auto B = herm_basis<T>(n, level);
  const std::size_t N = B.size();
  Algebra<T> A(N, Symmetry::commutative, std::string("herm") + level_char(level));
  Matrix<T> h(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      HMat<T> P = B[a] * B[b];
      h(a, b) = h(b, a) = P.re_trace() / T(n);
      A.set_product(a, b, herm_coords((P + B[b] * B[a]).scaled(T(1) / T(2))));
    }
  return MetrizedAlgebra<T>{A, h};
}

// deunitalization of herm(n, F); product x*y - (1/n) tr(x*y) I
template <class T>
Retraction<T> herm0(int n, int level) {
  auto r = deunitalization(herm_jordan<T>(n, level));
  r.ma.alg.set_name(std::string("herm0") + level_char(level));
  return r;
}

template <class T>
Vec<T> herm0_coords(const Retraction<T>& H0, const HMat<T>& X) {
  auto c = coords_in(H0.sub, herm_coords(X));
  if (!c) throw std::invalid_argument("herm0_coords: matrix not traceless");
  return *c;
}

// gamma(i) = (n/(n-2)) (e_ii - I/n), i = 0..n-1, in herm0 coordinates
template <class T>
std::vector<Vec<T>> diagonal_generators(const Retraction<T>& H0, int n, int level) {
  if (n < 3) throw std::invalid_argument("diagonal_generators: n < 3");
  std::vector<Vec<T>> out;
  HMat<T> I = HMat<T>::identity(n, level);
  for (int i = 0; i < n; ++i) {
    HMat<T> X = (unit_matrix<T>(n, level, i, i) - I.scaled(T(1) / T(n))).scaled(T(n) / T(n - 2));
    out.push_back(herm0_coords(H0, X));
  }
  return out;
}

// ---- matrix Lie algebras and su(n) with the circle product ----
// Real coordinates of X against a list of (independent) matrices.
template <class T>
Vec<T> solve_coords(const std::vector<HMat<T>>& basis, const HMat<T>& X) {
  std::vector<Vec<T>> cols;
  for (const auto& B : basis) cols.push_back(B.flat());
  Vec<T> rhs = X.flat();
  auto c = solve(Matrix<T>::from_columns(cols, rhs.size()), rhs);
  if (!c) throw std::invalid_argument("solve_coords: matrix outside span");
  return *c;
}

template <class T>
struct MatrixAlgebra {
  MetrizedAlgebra<T> ma;
  std::vector<HMat<T>> basis;
  Vec<T> coords(const HMat<T>& X) const { return solve_coords(basis, X); }
  HMat<T> matrix(const Vec<T>& c) const {
    HMat<T> X(basis[0].n(), basis[0].level());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!is_zero(c[k], 0.0)) X = X + basis[k].scaled(c[k]);
    return X;
  }
};

// skew-Hermitian traceless: E_ij - E_ji, j(E_ij + E_ji) for i < j, then j(E_kk - E_k+1,k+1)
template <class T>
std::vector<HMat<T>> su_basis(int n) {
  std::vector<HMat<T>> B;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      B.push_back(unit_matrix<T>(n, 2, i, j) - unit_matrix<T>(n, 2, j, i));
      B.push_back(unit_matrix<T>(n, 2, i, j, 1) + unit_matrix<T>(n, 2, j, i, 1));
    }
  for (int k = 0; k + 1 < n; ++k) B.push_back(unit_matrix<T>(n, 2, k, k, 1) - unit_matrix<T>(n, 2, k + 1, k + 1, 1));
  return B;
}

// so(3) uses the cross-product basis [e1, e2] = e3; larger n use E_ij - E_ji, i < j.
template <class T>
std::vector<HMat<T>> so_basis(int n) {
  std::vector<HMat<T>> B;
  auto A = [&](int i, int j) { return unit_matrix<T>(n, 1, i, j) - unit_matrix<T>(n, 1, j, i); };
  if (n == 3) return {A(2, 1), A(0, 2), A(1, 0)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) B.push_back(A(i, j));
  return B;
}

template <class T>
Algebra<T> bracket_algebra(const std::vector<HMat<T>>& B, const std::string& name) {
  Algebra<T> A(B.size(), Symmetry::anticommutative, name);
  for (std::size_t a = 0; a < B.size(); ++a)
    for (std::size_t b = a + 1; b < B.size(); ++b) A.set_product(a, b, solve_coords(B, commutator(B[a], B[b])));
  return A;
}

// Killing form B = -c f with c = n - 2 (so) or 2n (su).
template <class T>
Matrix<T> lie_frobenius_killing(const std::vector<HMat<T>>& B, const T& c) {
  Matrix<T> G(B.size(), B.size());
  for (std::size_t a = 0; a < B.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b) G(a, b) = -c * frobenius(B[a], B[b]);
  return G;
}

// h = Killing form by ad-traces
template <class T>
MatrixAlgebra<T> lie_so(int n) {
  if (n < 3) throw std::invalid_argument("lie_so: n < 3");
  auto B = so_basis<T>(n);
  Algebra<T> A = bracket_algebra(B, "so" + std::to_string(n));
  return {killing_metrized(A), B};
}
template <class T>
MatrixAlgebra<T> lie_su(int n) {
  if (n < 2) throw std::invalid_argument("lie_su: n < 2");
  auto B = su_basis<T>(n);
  Algebra<T> A = bracket_algebra(B, "su" + std::to_string(n));
  return {killing_metrized(A), B};
}

// x o y = (j/2)(xy + yx - (2/n) tr(xy) I), h(x, y) = -(1/n) re tr(xy)
template <class T>
MatrixAlgebra<T> su_circle(int n) {
  if (n < 2) throw std::invalid_argument("su_circle: n < 2");
  auto B = su_basis<T>(n);
  const std::size_t N = B.size();
  Algebra<T> A(N, Symmetry::commutative, "su-circle" + std::to_string(n));
  Matrix<T> h(N, N);
  Hz<T> half_j{T(0), T(1) / T(2)};
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      HMat<T> P = B[a] * B[b] + B[b] * B[a];
      h(a, b) = h(b, a) = -(B[a] * B[b]).re_trace() / T(n);
      HMat<T> Tr = HMat<T>::identity(n, 2).left_scalar(P.trace()).scaled(T(1) / T(n));
      A.set_product(a, b, solve_coords(B, (P - Tr).left_scalar(half_j)));
    }
  return {with_flags(MetrizedAlgebra<T>{A, h}), B};
}

// Psi(x) = j x into herm0(n, C) coordinates
template <class T>
Matrix<T> su_to_herm0(const MatrixAlgebra<T>& S, const Retraction<T>& H0) {
  Hz<T> j{T(0), T(1)};
  Matrix<T> P(H0.ma.dim(), S.basis.size());
  for (std::size_t a = 0; a < S.basis.size(); ++a) P.set_col(a, herm0_coords(H0, S.basis[a].left_scalar(j)));
  return P;
}

// ---- triple and Nahm algebras ----
// x.y = (1/2)(x2 y3 + y2 x3, x3 y1 + y3 x1, x1 y2 + y1 x2); component i at offset i*n
template <class T>
Algebra<T> triple(const Algebra<T>& A) {
  const std::size_t n = A.dim(), N = 3 * n;
  Algebra<T> R(N, Symmetry::commutative, "trip(" + A.name() + ")");
  const T half = T(1) / T(2);
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p; q < N; ++q) {
      std::size_t cp = p / n, cq = q / n, ip = p % n, iq = q % n;
      if (cp == cq) continue;
      // target component is the one missing from {cp, cq}
      std::size_t t = 3 - cp - cq;
      // order inside the product follows the cyclic pattern (t+1, t+2)
      bool forward = cp == (t + 1) % 3;
      for (std::size_t k = 0; k < n; ++k) {
        T c = forward ? A.coef(ip, iq, k) : A.coef(iq, ip, k);
        if (!is_zero(c, 0.0)) R.set(p, q, t * n + k, half * c);
      }
    }
  return R;
}
template <class T>
Algebra<T> nahm(const Algebra<T>& g) {
  if (!g.anti()) throw std::invalid_argument("nahm: Lie (anticommutative) input required");
  Algebra<T> R = triple(g);
  R.set_name("nahm(" + g.name() + ")");
  return R;
}

template <class T>
Vec<T> nu(std::size_t i, const Vec<T>& x) {  // i = 1, 2, 3
  const std::size_t n = x.size();
  Vec<T> v(3 * n, T(0));
  for (std::size_t k = 0; k < n; ++k) v[(i - 1) * n + k] = x[k];
  return v;
}
template <class T>
Vec<T> component(std::size_t i, const Vec<T>& v) {
  const std::size_t n = v.size() / 3;
  return Vec<T>(v.begin() + (i - 1) * n, v.begin() + i * n);
}
template <class T>
Vec<T> diag3(const Vec<T>& x) {
  return nu(1, x) + nu(2, x) + nu(3, x);
}
// Gamma_0 = diag, Gamma_i = 2 nu_i - diag, e.g. Gamma_1(x) = (x, -x, -x)
template <class T>
Vec<T> gamma_map(std::size_t i, const Vec<T>& x) {
  if (i == 0) return diag3(x);
  Vec<T> v = -diag3(x);
  return v + T(2) * nu(i, x);
}
// nabla^{ij} = (Gamma_i - Gamma_j)/2
template <class T>
Vec<T> nabla_pair(std::size_t i, std::size_t j, const Vec<T>& x) {
  return (T(1) / T(2)) * (gamma_map(i, x) - gamma_map(j, x));
}
// nabla_i = diag - 3 nu_i
template <class T>
Vec<T> nabla(std::size_t i, const Vec<T>& x) {
  return diag3(x) - T(3) * nu(i, x);
}

// phi(x) = (1/2)(x1+x2+x3, x1-x2-x3, -x1+x2-x3, -x1-x2+x3) in A^4
template <class T>
Vec<T> s4_phi(const Vec<T>& x) {
  Vec<T> a = component(1, x), b = component(2, x), c = component(3, x);
  const T h = T(1) / T(2);
  std::vector<Vec<T>> parts{h * (a + b + c), h * (a - b - c), h * (b - a - c), h * (c - a - b)};
  Vec<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}
// projection of A^4 onto {z0+z1+z2+z3 = 0} along the diagonal
template <class T>
Vec<T> s4_project(const Vec<T>& z) {
  const std::size_t n = z.size() / 4;
  Vec<T> out(z);
  for (std::size_t k = 0; k < n; ++k) {
    T m = (z[k] + z[n + k] + z[2 * n + k] + z[3 * n + k]) / T(4);
    for (std::size_t c = 0; c < 4; ++c) out[c * n + k] -= m;
  }
  return out;
}
// transposition (a b) of {0,1,2,3} acting on trip(A)
template <class T>
Vec<T> s4_action(int a, int b, const Vec<T>& x) {
  if (a > b) std::swap(a, b);
  Vec<T> x1 = component(1, x), x2 = component(2, x), x3 = component(3, x);
  auto pack = [](const Vec<T>& p, const Vec<T>& q, const Vec<T>& r) { return nu(1, p) + nu(2, q) + nu(3, r); };
  if (a == 0 && b == 1) return pack(x1, -x3, -x2);
  if (a == 0 && b == 2) return pack(-x3, x2, -x1);
  if (a == 0 && b == 3) return pack(-x2, -x1, x3);
  if (a == 1 && b == 2) return pack(x2, x1, x3);
  if (a == 1 && b == 3) return pack(x3, x2, x1);
  if (a == 2 && b == 3) return pack(x1, x3, x2);
  throw std::invalid_argument("s4_action: bad transposition");
}

// ---- conformal extension ----
struct ConfExtConfig {
  double n = 0;
  double b() const { return 1.0 / std::sqrt(n * (n + 1)); }
  double c() const { return 1.0 / std::sqrt((n + 2) * (n - 1)); }
};

// (x, r).(y, s) = b (sqrt((n+2)(n-1)) x.y - s x - r y, n r s - tau(x, y)), b = 1/sqrt(n(n+1));
// metric tau + rs.  Input must be exact with h = tau.
template <class T>
MetrizedAlgebra<T> conformal_extension(const MetrizedAlgebra<T>& M) {
  const std::size_t n = M.dim();
  if (n < 2) throw std::invalid_argument("conformal_extension: dim < 2");
  if (M.alg.anti()) throw std::invalid_argument("conformal_extension: commutative input required");
  if (!is_exact(M.alg)) throw std::invalid_argument("conformal_extension: input not exact");
  if (inertia(M.h).z != 0) throw std::invalid_argument("conformal_extension: degenerate tau");
  const long N = long(n);
  auto rb = Field<T>::sqrt(T(1) / T(N * (N + 1)));
  auto ra = Field<T>::sqrt(T((N + 2) * (N - 1)));
  if (!rb || !ra) throw std::domain_error("conformal_extension: radicand is not a square in this backend");
  const T b = *rb, a = *ra;
  Algebra<T> C(n + 1, Symmetry::commutative, "confext(" + M.alg.name() + ")");
  Matrix<T> h(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) C.set(i, j, k, b * a * M.alg.coef(i, j, k));
      C.set(i, j, n, -b * M.h(i, j));
    }
    C.set(i, n, i, -b);
    for (std::size_t j = 0; j < n; ++j) h(i, j) = M.h(i, j);
  }
  C.set(n, n, n, b * T(N));
  h(n, n) = T(1);
  return MetrizedAlgebra<T>{C, h};
}

// (0, sqrt((n+1)/n))
template <class T>
Vec<T> confext_canonical_idempotent(std::size_t n) {
  auto r = Field<T>::sqrt(T(long(n + 1)) / T(long(n)));
  if (!r) throw std::domain_error("confext_canonical_idempotent: not a square");
  Vec<T> e(n + 1, T(0));
  e[n] = *r;
  return e;
}

struct ConfExtIdem {
  double s_minus = 0, s_plus = 0, phi_minus = 0, phi_plus = 0;
};
// s = (-1 - 4c^2|e|^2 +- sqrt(1 + 4(n+2)c^2|e|^2)) / (4c^2|e|^2), phi(s) = n(n+1)(n+1-2s)/(4s^2)
ConfExtIdem confext_idempotent_data(int n, double e_norm2);
inline double confext_phi(int n, double s) { return n * (n + 1.0) * (n + 1.0 - 2 * s) / (4 * s * s); }
// lift of an idempotent e of the base: s^{-1}((1+s)(c/b) e, 1/(2b)); |lift|^2 = phi(s)
Vec<double> confext_lift(const Vec<double>& e, double s, int n);

// ---- catalogue ----
struct BuildParams {
  int n = 3;
  int m = 2;       // second factor for tensor-ealg
  std::string alpha = "1/2";
  int level = 1;
};

template <class T>
MetrizedAlgebra<T> build_by_name(const std::string& name, const BuildParams& p);

std::vector<std::string> catalogue_names();

}  // namespace nalg
