#include "nalg/inequalities.hpp"

#include <algorithm>
#include <limits>

namespace nalg {

namespace {

BwSweep sweep_impl(int n, int level, std::size_t pairs, std::uint64_t seed, bool parallel) {
  check_herm_args(n, level);
  const bool diag = level == 8;
  const long P = long(pairs);
  std::vector<double> res(pairs);
  std::vector<char> dom(pairs);
  auto one = [&](long k) {
    std::seed_seq ss{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(k), std::uint32_t(n * 16 + level)};
    std::mt19937_64 rng(ss);
    HMat<double> X = random_hermitian<double>(n, level, rng, diag);
    HMat<double> Y = random_hermitian<double>(n, level, rng);
    auto r = bw_residual(X, Y);
    res[k] = r.value;
    dom[k] = r.in_domain;
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long k = 0; k < P; ++k) one(k);
  } else {
    for (long k = 0; k < P; ++k) one(k);
  }
  BwSweep s;
  s.pairs = pairs;
  s.min_residual = std::numeric_limits<double>::infinity();
  for (long k = 0; k < P; ++k) {
    if (!dom[k]) {
      ++s.outside_domain;
      continue;
    }
    s.min_residual = std::min(s.min_residual, res[k]);
  }
  return s;
}

BwEstimate lie_impl(const MetrizedAlgebra<double>& g, std::size_t samples, int steps, std::uint64_t seed,
                    bool parallel) {
  if (!g.alg.anti()) throw std::invalid_argument("bw_lie_estimate: Lie algebra required");
  Inertia in = inertia(g.h);
  if (in.p != 0 || in.z != 0) throw std::domain_error("bw_lie_estimate: Killing form not negative definite");
  // with h = -B the sect numerator is -B([x,y],[x,y]) and the denominator is unchanged
  MetrizedAlgebra<double> m{g.alg, -1.0 * g.h};
  BoundEstimate b = parallel ? sect_extremize(m, samples, steps, seed) : sect_extremize_serial(m, samples, steps, seed);
  return {b.max, b.argmax, samples, seed};
}

}  // namespace

BwSweep bw_sweep(int n, int level, std::size_t pairs, std::uint64_t seed) {
  return sweep_impl(n, level, pairs, seed, true);
}
BwSweep bw_sweep_serial(int n, int level, std::size_t pairs, std::uint64_t seed) {
  return sweep_impl(n, level, pairs, seed, false);
}

BwEstimate bw_lie_estimate(const MetrizedAlgebra<double>& g, std::size_t samples, int steps, std::uint64_t seed) {
  return lie_impl(g, samples, steps, seed, true);
}
BwEstimate bw_lie_estimate_serial(const MetrizedAlgebra<double>& g, std::size_t samples, int steps,
                                  std::uint64_t seed) {
  return lie_impl(g, samples, steps, seed, false);
}

}  // namespace nalg
