#pragma once
// Sectional nonassociativity, curvature-type predicates, idempotents and sampled bounds.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "nalg/algebra.hpp"
#include "nalg/constructions.hpp"

namespace nalg {

template <class T>
struct SectValue {
  T value{0};
  Vec<T> x, y;
  T denom{0};  // Gram determinant of the plane
};

// sect(x, y) = (h(xx, yy) - h(xy, yx)) / (|x|^2 |y|^2 - h(x, y)^2)
template <class T>
SectValue<T> sect(const Algebra<T>& A, const Matrix<T>& h, const Vec<T>& x, const Vec<T>& y,
                  double tol = Tol{}.zero) {
  SectValue<T> s;
  s.x = x;
  s.y = y;
  T hxy = bilinear(h, x, y);
  s.denom = bilinear(h, x, x) * bilinear(h, y, y) - hxy * hxy;
  if (is_zero(s.denom, tol)) throw std::domain_error("sect: degenerate plane");
  T num = bilinear(h, multiply(A, x, x), multiply(A, y, y)) - bilinear(h, multiply(A, x, y), multiply(A, y, x));
  s.value = num / s.denom;
  return s;
}
template <class T>
SectValue<T> sect(const MetrizedAlgebra<T>& M, const Vec<T>& x, const Vec<T>& y, double tol = Tol{}.zero) {
  return sect(M.alg, M.h, x, y, tol);
}
// intrinsic version: h = tau
template <class T>
SectValue<T> isect(const Algebra<T>& A, const Vec<T>& x, const Vec<T>& y, double tol = Tol{}.zero) {
  return sect(A, killing_form(A), x, y, tol);
}

// h([x, x, y], y); equals the numerator of sect for invariant h
template <class T>
T norton_form(const MetrizedAlgebra<T>& M, const Vec<T>& x, const Vec<T>& y) {
  return bilinear(M.h, associator(M.alg, x, x, y), y);
}

// ---- conformal nonassociativity tensor ----
template <class T>
struct ConformalTensor {
  std::size_t n = 0;
  std::vector<T> w;  // w[((i n + j) n + k) n + l]
  T scal{0};
  const T& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return w[((i * n + j) * n + k) * n + l];
  }
  double max_abs() const {
    double m = 0;
    for (const auto& v : w) m = std::max(m, std::abs(to_double(v)));
    return m;
  }
};

// mu(x,y,z,w) = h(yz, xw) - h(zx, yw), then subtract the ric and scal parts.
template <class T>
ConformalTensor<T> conformal_tensor(const MetrizedAlgebra<T>& M) {
  const std::size_t n = M.dim();
  if (M.alg.anti()) throw std::invalid_argument("conformal_tensor: commutative algebras only");
  if (n < 3) throw std::invalid_argument("conformal_tensor: dim < 3");
  auto hinv = inverse(M.h);
  if (!hinv) throw std::domain_error("conformal_tensor: degenerate metric");
  Matrix<T> ric = ricci_form(M.alg);
  ConformalTensor<T> W;
  W.n = n;
  W.scal = trace(*hinv * ric);
  std::vector<Vec<T>> P(n * n), HP(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      P[a * n + b] = multiply(M.alg, unit<T>(n, a), unit<T>(n, b));
      HP[a * n + b] = M.h * P[a * n + b];
    }
  const T r1 = T(1) / T(long(n - 2)), r2 = W.scal / T(long((n - 1) * (n - 2)));
  const Matrix<T>& h = M.h;
  W.w.assign(n * n * n * n, T(0));
  const long N = long(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < N; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          T v = dot(HP[j * n + k], P[i * n + l]) - dot(HP[k * n + i], P[j * n + l]);
          v += r1 * (ric(i, k) * h(j, l) - ric(j, k) * h(i, l) - ric(i, l) * h(j, k) + ric(j, l) * h(i, k));
          v += r2 * (h(i, l) * h(j, k) - h(j, l) * h(i, k));
          W.w[((i * n + j) * n + k) * n + l] = v;
        }
  return W;
}

// max violation of the curvature symmetries and of the trace h^{il} w_{ijkl} = 0
template <class T>
double conformal_symmetry_violation(const ConformalTensor<T>& W, const Matrix<T>& h) {
  const std::size_t n = W.n;
  auto hinv = inverse(h);
  if (!hinv) throw std::domain_error("conformal_symmetry_violation: degenerate metric");
  double m = 0;
  auto upd = [&](const T& v) { m = std::max(m, std::abs(to_double(v))); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          upd(W(i, j, k, l) + W(j, i, k, l));
          upd(W(i, j, k, l) + W(i, j, l, k));
          upd(W(i, j, k, l) - W(k, l, i, j));
          upd(W(i, j, k, l) + W(j, k, i, l) + W(k, i, j, l));
        }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      T t(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) t += (*hinv)(i, l) * W(i, j, k, l);
      upd(t);
    }
  return m;
}

struct Verdict {
  bool ok = true;
  double violation = 0;
};

// dim <= 3 counts as conformally associative
template <class T>
Verdict is_conformally_associative(const MetrizedAlgebra<T>& M, double tol = Tol{}.zero) {
  if (M.dim() <= 3) return {};
  double v = conformal_tensor(M).max_abs();
  return {Field<T>::exact ? v == 0 : v < tol, v};
}

// ---- projective associativity: [x,y,z] = c(y,z) x - c(x,y) z with c = -ric/(n-1) ----
template <class T>
struct ProjAssoc {
  bool ok = true;
  Matrix<T> c;
  double violation = 0;
};

template <class T>
ProjAssoc<T> is_projectively_associative(const Algebra<T>& A, double tol = Tol{}.zero) {
  const std::size_t n = A.dim();
  if (n < 2) throw std::invalid_argument("is_projectively_associative: dim < 2");
  ProjAssoc<T> r;
  r.c = T(T(-1) / T(long(n - 1))) * ricci_form(A);
  std::vector<Vec<T>> P(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) P[a * n + b] = multiply(A, unit<T>(n, a), unit<T>(n, b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<T> d = multiply(A, P[i * n + j], unit<T>(n, k)) - multiply(A, unit<T>(n, i), P[j * n + k]);
        d[i] -= r.c(j, k);
        d[k] += r.c(i, j);
        r.violation = std::max(r.violation, max_abs(d));
        if (!is_zero_vec(d, tol)) r.ok = false;
      }
  return r;
}

// sum over cyclic (x,y,z) of [L(x), L(y)] L(z), on basis triples
template <class T>
double cyclic_commutator_violation(const Algebra<T>& A) {
  auto L = left_mult_basis(A);
  const std::size_t n = A.dim();
  double m = 0;
  auto br = [&](std::size_t a, std::size_t b) { return L[a] * L[b] - L[b] * L[a]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m = std::max(m, max_abs(Matrix<T>(br(i, j) * L[k] + br(j, k) * L[i] + br(k, i) * L[j])));
  return m;
}

// kappa with [x,y,z] = kappa (h(x,y) z - h(y,z) x) on all basis triples, if any
template <class T>
std::optional<T> constant_sect_check(const MetrizedAlgebra<T>& M, double tol = Tol{}.zero) {
  const std::size_t n = M.dim();
  if (n < 2) throw std::invalid_argument("constant_sect_check: dim < 2");
  const Algebra<T>& A = M.alg;
  std::vector<Vec<T>> lhs;
  std::optional<T> kappa;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec<T> xy = multiply(A, unit<T>(n, i), unit<T>(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        Vec<T> a = multiply(A, xy, unit<T>(n, k)) - multiply(A, unit<T>(n, i), multiply(A, unit<T>(n, j), unit<T>(n, k)));
        Vec<T> rhs(n, T(0));
        rhs[k] += M.h(i, j);
        rhs[i] -= M.h(j, k);
        if (!kappa) {
          for (std::size_t c = 0; c < n; ++c)
            if (!is_zero(rhs[c], tol)) {
              kappa = a[c] / rhs[c];
              break;
            }
          if (!kappa) {
            if (!is_zero_vec(a, tol)) return std::nullopt;
            continue;
          }
        }
        if (!is_zero_vec(Vec<T>(a - *kappa * rhs), tol)) return std::nullopt;
      }
    }
  return kappa ? kappa : std::optional<T>(T(0));
}

// ---- idempotents ----
enum class IdemKind { idempotent, square_zero_ray };

template <class T>
struct IdempotentRecord {
  Vec<T> point;
  IdemKind kind = IdemKind::idempotent;
  T h_norm2{0};
  std::vector<double> orth_spectrum;
};

// eigenvalues of L(e) on the h-orthogonal complement of e, ascending
std::vector<double> orth_spectrum(const MetrizedAlgebra<double>& M, const Vec<double>& e);

// E^n in gamma coordinates.  Subsets I of {1..n} stand for the pair {I, complement}.
template <class T>
std::vector<IdempotentRecord<T>> simplicial_idempotents(std::size_t n) {
  if (n < 2 || n > 20) throw std::invalid_argument("simplicial_idempotents: need 2 <= n <= 20");
  auto E = simplicial<T>(n);
  std::vector<IdempotentRecord<T>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Vec<T> g(n, T(0));
    long k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        g[i] = T(1);
        ++k;
      }
    IdempotentRecord<T> r;
    long d = long(n) + 1 - 2 * k;
    if (d == 0) {
      r.kind = IdemKind::square_zero_ray;
      r.point = g;
    } else {
      r.point = T(T(long(n) - 1) / T(d)) * g;
    }
    r.h_norm2 = bilinear(E.h, r.point, r.point);
    out.push_back(std::move(r));
  }
  return out;
}

// T^n_alpha: sigma_I = e_I / (1 - 2 alpha + 2 alpha |I|), square-zero when the denominator vanishes
template <class T>
std::vector<IdempotentRecord<T>> talg_idempotents(std::size_t n, const T& alpha) {
  if (is_zero(alpha, 0.0) || is_zero(T(alpha - T(1) / T(2)), 0.0))
    throw std::invalid_argument("talg_idempotents: alpha in {0, 1/2}");
  if (n < 2 || n > 20) throw std::invalid_argument("talg_idempotents: need 2 <= n <= 20");
  Matrix<T> tau = killing_form(talg<T>(n, alpha));
  std::vector<IdempotentRecord<T>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Vec<T> g(n, T(0));
    long k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        g[i] = T(1);
        ++k;
      }
    IdempotentRecord<T> r;
    T d = T(1) - T(2) * alpha + T(2) * alpha * T(k);
    if (is_zero(d, 0.0)) {
      r.kind = IdemKind::square_zero_ray;
      r.point = g;
    } else {
      r.point = T(T(1) / d) * g;
    }
    r.h_norm2 = bilinear(tau, r.point, r.point);
    out.push_back(std::move(r));
  }
  return out;
}

struct IdempotentSearch {
  std::vector<IdempotentRecord<double>> records;
  int trials = 0;
  std::uint64_t seed = 0;
  bool incomplete = false;  // new records still turning up in the last tenth of the trials
  std::size_t count(IdemKind k) const {
    std::size_t c = 0;
    for (const auto& r : records) c += r.kind == k;
    return c;
  }
};

// Newton on x.x - x plus projected descent of |x.x|^2 on the h-sphere, one start of each per trial.
IdempotentSearch newton_idempotents(const MetrizedAlgebra<double>& M, int trials, std::uint64_t seed);
IdempotentSearch newton_idempotents_serial(const MetrizedAlgebra<double>& M, int trials, std::uint64_t seed);

// ---- sampled extremes of sect ----
// Maps a parameter vector to a plane.  The default map is (x, y) in h-orthonormal coordinates.
struct PlaneMap {
  std::size_t params = 0;
  std::function<std::pair<Vec<double>, Vec<double>>(const Vec<double>&)> map;
  std::function<void(Vec<double>&)> normalize;  // optional
};

struct BoundEstimate {
  double min = 0, max = 0;
  std::pair<Vec<double>, Vec<double>> argmin, argmax;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool flagged = false;  // refinement hit its step budget
};

BoundEstimate sect_extremize(const MetrizedAlgebra<double>& M, std::size_t samples, int refine_steps,
                             std::uint64_t seed, const PlaneMap* pm = nullptr);
BoundEstimate sect_extremize_serial(const MetrizedAlgebra<double>& M, std::size_t samples, int refine_steps,
                                    std::uint64_t seed, const PlaneMap* pm = nullptr);

// ---- special planes ----
enum class SpecialKind { square_zero, idempotent };

template <class T>
struct SpecialSect {
  SectValue<T> sect;
  T closed_form{0};
  double residual = 0;
};

// a + ib square-zero or idempotent in the complexification
template <class T>
SpecialSect<T> complexified_special_elements_sect(const MetrizedAlgebra<T>& M, const Vec<T>& a, const Vec<T>& b,
                                                  SpecialKind kind, double tol = Tol{}.zero) {
  const Algebra<T>& A = M.alg;
  Vec<T> aa = multiply(A, a, a), bb = multiply(A, b, b), ab = multiply(A, a, b);
  Vec<T> e1 = aa - bb, e2 = T(2) * ab;
  if (kind == SpecialKind::idempotent) {
    e1 = e1 - a;
    e2 = e2 - b;
  }
  if (!is_zero_vec(e1, tol) || !is_zero_vec(e2, tol))
    throw std::invalid_argument("complexified_special_elements_sect: defining equations fail");
  SpecialSect<T> r;
  r.sect = sect(M, a, b, tol);
  T num = kind == SpecialKind::square_zero ? bilinear(M.h, aa, aa) : bilinear(M.h, bb, bb) + bilinear(M.h, ab, ab);
  r.closed_form = num / r.sect.denom;
  r.residual = std::abs(to_double(T(r.sect.value - r.closed_form)));
  return r;
}

// g(e,e) sect_B(x, y) - (sect_A(x, y) + 1) for x, y orthogonal to the unit of B
template <class T>
T deunit_sect_shift_check(const MetrizedAlgebra<T>& B, const Vec<T>& x, const Vec<T>& y, double tol = Tol{}.zero) {
  auto e = find_unit(B.alg, tol);
  if (!e) throw std::domain_error("deunit_sect_shift_check: no unit");
  if (!is_zero(bilinear(B.h, *e, x), tol) || !is_zero(bilinear(B.h, *e, y), tol))
    throw std::invalid_argument("deunit_sect_shift_check: x, y must be orthogonal to the unit");
  auto D = deunitalization(B);
  auto xa = coords_in(D.sub, x, tol), ya = coords_in(D.sub, y, tol);
  if (!xa || !ya) throw std::invalid_argument("deunit_sect_shift_check: vector outside complement");
  T gee = bilinear(B.h, *e, *e);
  T lhs = gee * sect(B, x, y, tol).value;
  T rhs = sect(D.ma, *xa, *ya, tol).value + T(1);
  return abs_of(T(lhs - rhs));
}

// Residuals of the five sect relations between trip(A) and A; nullopt where a plane is degenerate.
template <class T>
struct TripleSectCheck {
  std::vector<std::optional<double>> residuals;
  bool skipped = false;
  double max_residual() const {
    double m = 0;
    for (const auto& r : residuals)
      if (r) m = std::max(m, *r);
    return m;
  }
};

template <class T>
TripleSectCheck<T> triple_sect_relations_check(const Algebra<T>& A, const Vec<T>& x, const Vec<T>& y,
                                               double tol = Tol{}.zero) {
  if (A.anti()) throw std::invalid_argument("triple_sect_relations_check: commutative input required");
  Algebra<T> R = triple(A);
  Matrix<T> tA = killing_form(A), tR = killing_form(R);
  TripleSectCheck<T> out;
  auto add = [&](auto&& lhs, auto&& rhs) {
    try {
      T l = lhs(), r = rhs();
      out.residuals.push_back(std::abs(to_double(T(l - r))));
    } catch (const std::domain_error&) {
      out.residuals.push_back(std::nullopt);
      out.skipped = true;
    }
  };
  auto sR = [&](const Vec<T>& u, const Vec<T>& v) { return sect(R, tR, u, v, tol).value; };
  auto sA = [&](const Vec<T>& u, const Vec<T>& v) { return sect(A, tA, u, v, tol).value; };
  Vec<T> xy = multiply(A, x, y);
  T xx_yy = bilinear(tA, multiply(A, x, x), multiply(A, y, y)), xy2 = bilinear(tA, xy, xy);
  T nx = bilinear(tA, x, x), ny = bilinear(tA, y, y), hxy = bilinear(tA, x, y);
  auto guard = [&](const T& d) -> T {
    if (is_zero(d, tol)) throw std::domain_error("degenerate");
    return d;
  };
  for (std::size_t i = 0; i <= 3; ++i)
    add([&] { return sR(gamma_map(i, x), gamma_map(i, y)); }, [&] { return T(T(2) / T(3) * sA(x, y)); });
  for (std::size_t i = 1; i <= 3; ++i)
    add([&] { return sR(nabla(i, x), nabla(i, y)); }, [&] { return T(T(1) / T(2) * sA(x, y)); });
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 3; ++j)
      if (i != j)
        add([&] { return sR(gamma_map(i, x), gamma_map(j, y)); },
            [&] { return T(T(-2) * (xx_yy + xy2) / guard(T(9) * nx * ny - hxy * hxy)); });
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      if (i != j)
        add([&] { return sR(nabla(i, x), nabla(j, y)); },
            [&] { return T(T(-3) / T(2) * xy2 / guard(T(4) * nx * ny - hxy * hxy)); });
  for (std::size_t i = 1; i <= 3; ++i)
    add([&] { return sR(diag3(x), nabla(i, y)); },
        [&] { return T(T(-1) / T(6) * (T(2) * xx_yy + xy2) / guard(nx * ny)); });
  return out;
}

// Derivations D (D(xy) = Dx y + x Dy) as n x n matrices, a basis of the solution space.
template <class T>
std::vector<Matrix<T>> derivations(const Algebra<T>& A, double tol = Tol{}.rank) {
  const std::size_t n = A.dim();
  // unknown D(r, c) at index r n + c; equation for (i, j, k)
  Matrix<T> S(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = (i * n + j) * n + k;
        for (std::size_t m = 0; m < n; ++m) {
          T c = A.coef(i, j, m);
          if (!is_zero(c, 0.0)) S(row, k * n + m) += c;
          // - sum_m D(m, i) c_{mj}^k - D(m, j) c_{im}^k
          T a = A.coef(m, j, k), b = A.coef(i, m, k);
          if (!is_zero(a, 0.0)) S(row, m * n + i) -= a;
          if (!is_zero(b, 0.0)) S(row, m * n + j) -= b;
        }
      }
  std::vector<Matrix<T>> out;
  for (const auto& v : nullspace(S, tol)) {
    Matrix<T> D(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) D(r, c) = v[r * n + c];
    out.push_back(std::move(D));
  }
  return out;
}

}  // namespace nalg
