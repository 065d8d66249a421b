#include "nalg/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace nalg {

namespace {

using EM = Eigen::MatrixXd;
using EV = Eigen::VectorXd;

EM to_eigen(const Matrix<double>& A) {
  EM E(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) E(i, j) = A(i, j);
  return E;
}
EV to_eigen(const Vec<double>& v) { return Eigen::Map<const EV>(v.data(), v.size()); }
Vec<double> from_eigen(const EV& v) { return Vec<double>(v.data(), v.data() + v.size()); }

// x = W u makes h the identity (up to signs when h is indefinite)
struct Frame {
  EM W, Winv;
  bool definite = true;
};
Frame h_frame(const Matrix<double>& h) {
  Eigen::SelfAdjointEigenSolver<EM> es(to_eigen(h));
  const EV& lam = es.eigenvalues();
  double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
  Frame f;
  EV s(lam.size()), si(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    double a = std::abs(lam[i]);
    if (a < 1e-12 * scale) throw std::domain_error("degenerate metric");
    if (lam[i] < 0) f.definite = false;
    s[i] = 1 / std::sqrt(a);
    si[i] = std::sqrt(a);
  }
  f.W = es.eigenvectors() * s.asDiagonal();
  f.Winv = si.asDiagonal() * es.eigenvectors().transpose();
  return f;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t t) {
  std::seed_seq ss{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(t), std::uint32_t(t >> 32)};
  return std::mt19937_64(ss);
}

EV gaussian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> N(0, 1);
  EV v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = N(rng);
  return v;
}

struct TrialOut {
  std::optional<Vec<double>> idem, ray;
};

constexpr double kNewtonTol = 1e-12;
constexpr double kSquareZeroTol = 1e-10;

std::optional<Vec<double>> newton_start(const Algebra<double>& A, const Frame& F, std::mt19937_64& rng) {
  const std::size_t n = A.dim();
  std::uniform_real_distribution<double> U(0, 1);
  for (int attempt = 0; attempt < 3; ++attempt) {
    EV u = gaussian(rng, n);
    u *= 3.0 * std::pow(U(rng), 1.0 / double(n)) / u.norm();
    Vec<double> x = from_eigen(F.W * u);
    bool singular = false;
    for (int it = 0; it < 100; ++it) {
      EV Fx = to_eigen(multiply(A, x, x)) - to_eigen(x);
      if (!std::isfinite(Fx.norm())) break;
      if (Fx.norm() < kNewtonTol) {
        if (max_abs(x) > 1e-8) return x;
        break;
      }
      EM J = 2 * to_eigen(left_mult(A, x)) - EM::Identity(n, n);
      Eigen::FullPivLU<EM> lu(J);
      if (!lu.isInvertible()) {
        singular = true;
        break;
      }
      EV d = lu.solve(Fx);
      for (std::size_t i = 0; i < n; ++i) x[i] -= d[i];
    }
    if (!singular) return std::nullopt;
  }
  return std::nullopt;
}

// minimize |x.x|^2 on the unit sphere of the frame, then Gauss-Newton on (x.x = 0, |u| = 1)
std::optional<Vec<double>> square_zero_start(const Algebra<double>& A, const Frame& F, std::mt19937_64& rng) {
  const std::size_t n = A.dim();
  EV u = gaussian(rng, n);
  u.normalize();
  auto sq = [&](const EV& v) -> EV {
    Vec<double> x = from_eigen(F.W * v);
    return F.Winv * to_eigen(multiply(A, x, x));
  };
  double f = sq(u).squaredNorm(), eta = 0.1;
  for (int it = 0; it < 200 && f > 1e-16; ++it) {
    Vec<double> x = from_eigen(F.W * u);
    EV y = sq(u);
    EM Jq = 2 * F.Winv * to_eigen(left_mult(A, x)) * F.W;
    EV g = 2 * Jq.transpose() * y;
    g -= g.dot(u) * u;
    if (g.norm() < 1e-14) break;
    bool moved = false;
    while (eta > 1e-14) {
      EV v = (u - eta * g).normalized();
      double fv = sq(v).squaredNorm();
      if (fv < f) {
        u = v;
        f = fv;
        eta *= 2;
        moved = true;
        break;
      }
      eta /= 2;
    }
    if (!moved) break;
  }
  for (int it = 0; it < 40; ++it) {
    Vec<double> x = from_eigen(F.W * u);
    EV y = sq(u);
    EV r(n + 1);
    r.head(n) = y;
    r[n] = u.squaredNorm() - 1;
    if (r.norm() < 1e-15) break;
    EM J(n + 1, n);
    J.topRows(n) = 2 * F.Winv * to_eigen(left_mult(A, x)) * F.W;
    J.row(n) = 2 * u.transpose();
    u -= J.colPivHouseholderQr().solve(r);
  }
  u.normalize();
  if (!(sq(u).norm() < kSquareZeroTol)) return std::nullopt;
  Vec<double> x = from_eigen(F.W * u);
  for (double c : x)
    if (std::abs(c) > 1e-8) {
      if (c < 0) x = -x;
      break;
    }
  return x;
}

double dist(const Vec<double>& a, const Vec<double>& b) { return max_abs(Vec<double>(a - b)); }

IdempotentSearch newton_impl(const MetrizedAlgebra<double>& M, int trials, std::uint64_t seed, bool parallel) {
  if (trials < 0) throw std::invalid_argument("newton_idempotents: negative trial count");
  Frame F = h_frame(M.h);
  std::vector<TrialOut> outs(trials);
  auto run = [&](int t) {
    auto rng = trial_rng(seed, std::uint64_t(t));
    outs[t].idem = newton_start(M.alg, F, rng);
    outs[t].ray = square_zero_start(M.alg, F, rng);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) run(t);
  } else {
    for (int t = 0; t < trials; ++t) run(t);
  }
  const double eps = Tol{}.dedup;
  IdempotentSearch S;
  S.trials = trials;
  S.seed = seed;
  int last_new = -1;
  auto add = [&](const Vec<double>& p, IdemKind k, int t) {
    for (const auto& r : S.records) {
      if (r.kind != k) continue;
      if (dist(r.point, p) < eps) return;
      if (k == IdemKind::square_zero_ray && dist(r.point, Vec<double>(-p)) < eps) return;
    }
    IdempotentRecord<double> r;
    r.point = p;
    r.kind = k;
    r.h_norm2 = bilinear(M.h, p, p);
    if (std::abs(r.h_norm2) > 1e-9) r.orth_spectrum = orth_spectrum(M, p);
    S.records.push_back(std::move(r));
    last_new = t;
  };
  for (int t = 0; t < trials; ++t) {
    if (outs[t].idem) add(*outs[t].idem, IdemKind::idempotent, t);
    if (outs[t].ray) add(*outs[t].ray, IdemKind::square_zero_ray, t);
  }
  S.incomplete = trials > 0 && last_new >= trials - std::max(1, trials / 10);
  return S;
}

// ---- extremization ----
struct Problem {
  const MetrizedAlgebra<double>* M;
  PlaneMap pm;
  double eval(const Vec<double>& p) const {
    auto [x, y] = pm.map(p);
    double hxy = bilinear(M->h, x, y), hx = bilinear(M->h, x, x), hy = bilinear(M->h, y, y);
    double den = hx * hy - hxy * hxy;
    if (!(std::abs(den) > 1e-12 * std::abs(hx * hy)) || den == 0) return std::nan("");
    return sect(M->alg, M->h, x, y, 0.0).value;
  }
  void normalize(Vec<double>& p) const {
    if (pm.normalize) pm.normalize(p);
  }
};

PlaneMap default_map(const MetrizedAlgebra<double>& M) {
  Frame F = h_frame(M.h);
  if (!F.definite) throw std::domain_error("sect_extremize: h must be positive definite");
  const std::size_t n = M.dim();
  PlaneMap pm;
  pm.params = 2 * n;
  pm.map = [W = F.W, n](const Vec<double>& p) {
    EV x = W * Eigen::Map<const EV>(p.data(), n), y = W * Eigen::Map<const EV>(p.data() + n, n);
    return std::make_pair(from_eigen(x), from_eigen(y));
  };
  pm.normalize = [n](Vec<double>& p) {
    Eigen::Map<EV> u(p.data(), n), v(p.data() + n, n);
    double nu = u.norm();
    if (nu == 0) return;
    u /= nu;
    v -= v.dot(u) * u;
    double nv = v.norm();
    if (nv > 0) v /= nv;
  };
  return pm;
}

struct Refined {
  Vec<double> p;
  double f;
  bool budget_hit;
};

// sign = +1 ascends, -1 descends
Refined refine(const Problem& P, Vec<double> p, double f, int steps, double sign) {
  const std::size_t m = p.size();
  double eta = 0.1;
  for (int it = 0; it < steps; ++it) {
    double hstep = 1e-5 * std::max(1.0, max_abs(p));
    Vec<double> g(m);
    for (std::size_t i = 0; i < m; ++i) {
      Vec<double> a = p, b = p;
      a[i] += hstep;
      b[i] -= hstep;
      P.normalize(a);
      P.normalize(b);
      double fa = P.eval(a), fb = P.eval(b);
      g[i] = std::isfinite(fa) && std::isfinite(fb) ? sign * (fa - fb) / (2 * hstep) : 0.0;
    }
    double gn = std::sqrt(dot(g, g));
    if (gn < 1e-12) return {p, f, false};
    bool moved = false;
    while (eta * gn > 1e-15) {
      Vec<double> q = p;
      axpy(eta, g, q);
      P.normalize(q);
      double fq = P.eval(q);
      if (std::isfinite(fq) && sign * fq > sign * f) {
        p = q;
        f = fq;
        eta *= 2;
        moved = true;
        break;
      }
      eta /= 2;
    }
    if (!moved) return {p, f, false};
  }
  return {p, f, true};
}

BoundEstimate extremize_impl(const MetrizedAlgebra<double>& M, std::size_t samples, int refine_steps,
                             std::uint64_t seed, const PlaneMap* pm, bool parallel) {
  if (samples == 0) throw std::invalid_argument("sect_extremize: no samples");
  Problem P{&M, pm ? *pm : default_map(M)};
  std::vector<Vec<double>> pts(samples);
  std::vector<double> val(samples);
  const long S = long(samples);
  auto sample = [&](long s) {
    auto rng = trial_rng(seed, std::uint64_t(s));
    Vec<double> p = from_eigen(gaussian(rng, P.pm.params));
    P.normalize(p);
    pts[s] = p;
    val[s] = P.eval(p);
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long s = 0; s < S; ++s) sample(s);
  } else {
    for (long s = 0; s < S; ++s) sample(s);
  }
  std::vector<long> idx;
  for (long s = 0; s < S; ++s)
    if (std::isfinite(val[s])) idx.push_back(s);
  if (idx.empty()) throw std::domain_error("sect_extremize: every sampled plane was degenerate");
  const std::size_t K = std::min<std::size_t>(8, idx.size());
  std::vector<long> lo(idx), hi(idx);
  auto cmp_lo = [&](long a, long b) { return val[a] < val[b] || (val[a] == val[b] && a < b); };
  auto cmp_hi = [&](long a, long b) { return val[a] > val[b] || (val[a] == val[b] && a < b); };
  std::partial_sort(lo.begin(), lo.begin() + K, lo.end(), cmp_lo);
  std::partial_sort(hi.begin(), hi.begin() + K, hi.end(), cmp_hi);
  std::vector<std::pair<long, double>> jobs;
  for (std::size_t k = 0; k < K; ++k) {
    jobs.push_back({lo[k], -1.0});
    jobs.push_back({hi[k], 1.0});
  }
  std::vector<Refined> res(jobs.size());
  const long J = long(jobs.size());
  auto job = [&](long j) {
    auto [s, sign] = jobs[j];
    res[j] = refine(P, pts[s], val[s], refine_steps, sign);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < J; ++j) job(j);
  } else {
    for (long j = 0; j < J; ++j) job(j);
  }
  BoundEstimate B;
  B.samples = samples;
  B.seed = seed;
  long jmin = -1, jmax = -1;
  for (long j = 0; j < J; ++j) {
    if (res[j].budget_hit) B.flagged = true;
    if (jobs[j].second < 0 && (jmin < 0 || res[j].f < res[jmin].f)) jmin = j;
    if (jobs[j].second > 0 && (jmax < 0 || res[j].f > res[jmax].f)) jmax = j;
  }
  B.min = res[jmin].f;
  B.max = res[jmax].f;
  B.argmin = P.pm.map(res[jmin].p);
  B.argmax = P.pm.map(res[jmax].p);
  return B;
}

}  // namespace

std::vector<double> orth_spectrum(const MetrizedAlgebra<double>& M, const Vec<double>& e) {
  const std::size_t n = M.dim();
  double he = bilinear(M.h, e, e);
  if (std::abs(he) < 1e-12 * std::max(1.0, max_abs(e) * max_abs(e))) throw std::domain_error("orth_spectrum: isotropic e");
  EM H = to_eigen(M.h), L = to_eigen(left_mult(M.alg, e));
  EV ev = to_eigen(e);
  // complement of e: columns of B
  EM B(n, n - 1);
  {
    EV he_vec = H * ev;
    Eigen::FullPivLU<EM> lu(he_vec.transpose());
    B = lu.kernel();
  }
  if (B.cols() != Eigen::Index(n - 1)) throw std::domain_error("orth_spectrum: bad complement");
  std::vector<double> out;
  Eigen::SelfAdjointEigenSolver<EM> hs(H);
  if (hs.eigenvalues().minCoeff() > 0) {
    // h-orthonormalize B
    EM G = B.transpose() * H * B;
    Eigen::LLT<EM> llt(G);
    EM Bo = B * llt.matrixU().solve(EM::Identity(n - 1, n - 1));
    EM S = Bo.transpose() * H * L * Bo;
    Eigen::SelfAdjointEigenSolver<EM> es(0.5 * (S + S.transpose()));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
  } else {
    EM G = B.transpose() * H * B;
    EM R = G.fullPivLu().solve(B.transpose() * H * L * B);
    Matrix<double> Rm(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) Rm(i, j) = R(i, j);
    auto re = general_real_eigenvalues(Rm);
    out = re.re;
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdempotentSearch newton_idempotents(const MetrizedAlgebra<double>& M, int trials, std::uint64_t seed) {
  return newton_impl(M, trials, seed, true);
}
IdempotentSearch newton_idempotents_serial(const MetrizedAlgebra<double>& M, int trials, std::uint64_t seed) {
  return newton_impl(M, trials, seed, false);
}

BoundEstimate sect_extremize(const MetrizedAlgebra<double>& M, std::size_t samples, int refine_steps,
                             std::uint64_t seed, const PlaneMap* pm) {
  return extremize_impl(M, samples, refine_steps, seed, pm, true);
}
BoundEstimate sect_extremize_serial(const MetrizedAlgebra<double>& M, std::size_t samples, int refine_steps,
                                    std::uint64_t seed, const PlaneMap* pm) {
  return extremize_impl(M, samples, refine_steps, seed, pm, false);
}

}  // namespace nalg
