#include "nalg/algebra.hpp"

#include <functional>

namespace nalg {

namespace {

// Vectors of J that are h-orthogonal to I (I inside J).
template <class T>
Subspace<T> complement_within(const Matrix<T>& h, const Subspace<T>& J, const Subspace<T>& I) {
  Matrix<T> C = transpose(I.basis) * h * J.basis;
  auto ns = nullspace(C);
  std::vector<Vec<T>> vs;
  for (auto& c : ns) vs.push_back(J.basis * c);
  Subspace<T> out = span(vs, J.ambient);
  if (out.dim() + I.dim() != J.dim()) throw std::domain_error("decompose_ideals: degenerate ideal");
  return out;
}

template <class T>
std::optional<Subspace<T>> certify(const Algebra<T>& A, const Subspace<T>& J, const Subspace<double>& cand) {
  if constexpr (Field<T>::exact) {
    std::vector<Vec<T>> vs;
    for (std::size_t k = 0; k < cand.dim(); ++k) {
      Vec<T> v;
      for (double x : cand.vec(k)) v.push_back(rationalize(x, 100000));
      vs.push_back(std::move(v));
    }
    Subspace<T> S = span(vs, J.ambient);
    if (S.dim() != cand.dim() || !is_ideal(A, S)) return std::nullopt;
    for (std::size_t k = 0; k < S.dim(); ++k)
      if (!contains(J, S.vec(k))) return std::nullopt;
    return S;
  } else {
    if (!is_ideal(A, cand, 1e-7)) return std::nullopt;
    return cand;
  }
}

template <class T>
std::optional<Subspace<T>> find_proper_ideal(const Algebra<T>& A, const Algebra<double>& Af, const Subspace<T>& J,
                                             int trials, std::mt19937_64& rng) {
  const std::size_t k = J.dim();
  if (k <= 1) return std::nullopt;
  Subspace<double> Jf{J.ambient, convert_mat<double>(J.basis), J.pivots};
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    Vec<double> c(k);
    for (auto& v : c) v = nd(rng);
    Matrix<double> L = left_mult(Af, Jf.basis * c);
    Matrix<double> MJ(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      Vec<double> w = L * Jf.vec(a);
      for (std::size_t b = 0; b < k; ++b) MJ(b, a) = w[Jf.pivots[b]];
    }
    RealEigen ev = general_real_eigenvalues(MJ);
    for (std::size_t i = 0; i < ev.re.size(); ++i) {
      if (std::abs(ev.im[i]) > 1e-9) continue;
      Matrix<double> S = MJ - ev.re[i] * Matrix<double>::identity(k);
      for (auto& u : nullspace(S, 1e-7)) {
        Subspace<double> cl = ideal_closure(Af, {Jf.basis * u}, 1e-6);
        if (cl.dim() == 0 || cl.dim() >= k) continue;
        if (auto I = certify(A, J, cl)) return I;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

template <class T>
Decomposition<T> decompose_ideals(const MetrizedAlgebra<T>& M, int trials, std::uint64_t seed) {
  if (inertia(M.h).z != 0) throw std::domain_error("decompose_ideals: degenerate metric");
  Algebra<double> Af = convert_algebra<double>(M.alg);
  std::mt19937_64 rng(seed);
  Decomposition<T> out;
  std::function<void(const Subspace<T>&)> rec = [&](const Subspace<T>& J) {
    auto I = find_proper_ideal(M.alg, Af, J, trials, rng);
    if (!I) {
      out.ideals.push_back(J);
      return;
    }
    out.decomposed = true;
    Subspace<T> C = complement_within(M.h, J, *I);
    rec(*I);
    rec(C);
  };
  rec(whole_space<T>(M.dim()));
  return out;
}

template Decomposition<Q> decompose_ideals(const MetrizedAlgebra<Q>&, int, std::uint64_t);
template Decomposition<double> decompose_ideals(const MetrizedAlgebra<double>&, int, std::uint64_t);

Q voa_kappa(const Q& c, const Q& n) {
  Q den = 4 * (5 * c + 22);
  if (sgn(den) == 0) throw std::domain_error("voa_kappa: 5c + 22 = 0");
  Q num = -5 * c * c + 88 * (n - 2) - 2 * c * (n + 20);
  Q r = num / den;
  r.canonicalize();
  return r;
}

}  // namespace nalg
