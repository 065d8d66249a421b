#include "nalg/constructions.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nalg {

std::size_t permutation_group_order(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) return 1;
  const std::size_t m = gens[0].size();
  std::vector<int> id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = int(i);
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> q{id};
  while (!q.empty()) {
    auto p = q.front();
    q.pop_front();
    for (const auto& g : gens) {
      std::vector<int> r(m);
      for (std::size_t i = 0; i < m; ++i) r[i] = g[p[i]];
      if (seen.insert(r).second) q.push_back(r);
    }
  }
  return seen.size();
}

ConfExtIdem confext_idempotent_data(int n, double e_norm2) {
  if (!(e_norm2 > 0)) throw std::invalid_argument("confext_idempotent_data: |e|^2 must be positive");
  double c2 = 1.0 / ((n + 2.0) * (n - 1.0));
  double q = 4 * c2 * e_norm2;
  double root = std::sqrt(1 + 4 * (n + 2.0) * c2 * e_norm2);
  ConfExtIdem d;
  d.s_minus = (-1 - q - root) / q;
  d.s_plus = (-1 - q + root) / q;
  d.phi_minus = confext_phi(n, d.s_minus);
  d.phi_plus = confext_phi(n, d.s_plus);
  return d;
}

Vec<double> confext_lift(const Vec<double>& e, double s, int n) {
  ConfExtConfig k{double(n)};
  Vec<double> out = ((1 + s) * k.c() / (k.b() * s)) * e;
  out.push_back(1.0 / (2 * k.b() * s));
  return out;
}

std::vector<std::string> catalogue_names() {
  return {"talg",    "ealg",    "herm",        "herm0",        "su-circle",   "lie-so", "lie-su",
          "nahm-so", "nahm-su", "triple-ealg", "triple-field", "tensor-ealg", "confext-ealg"};
}

template <class T>
MetrizedAlgebra<T> build_by_name(const std::string& name, const BuildParams& p) {
  MetrizedAlgebra<T> out;
  if (name == "talg") {
    out = killing_metrized(talg<T>(p.n, convert<T>(parse_rational(p.alpha))));
  } else if (name == "ealg") {
    out = simplicial<T>(p.n);
  } else if (name == "herm") {
    out = with_flags(herm_jordan<T>(p.n, p.level));
  } else if (name == "herm0") {
    out = with_flags(herm0<T>(p.n, p.level).ma);
  } else if (name == "su-circle") {
    out = su_circle<T>(p.n).ma;
  } else if (name == "lie-so") {
    out = lie_so<T>(p.n).ma;
  } else if (name == "lie-su") {
    out = lie_su<T>(p.n).ma;
  } else if (name == "nahm-so") {
    out = killing_metrized(nahm(lie_so<T>(p.n).ma.alg));
  } else if (name == "nahm-su") {
    out = killing_metrized(nahm(lie_su<T>(p.n).ma.alg));
  } else if (name == "triple-ealg") {
    out = killing_metrized(triple(simplicial<T>(p.n).alg));
  } else if (name == "triple-field") {
    Algebra<T> F(1, Symmetry::commutative, "field");
    F.set(0, 0, 0, T(1));
    out = killing_metrized(triple(F));
  } else if (name == "tensor-ealg") {
    out = with_flags(tensor_product(simplicial<T>(p.n), simplicial<T>(p.m)));
  } else if (name == "confext-ealg") {
    out = with_flags(conformal_extension(simplicial<T>(p.n)));
  } else {
    throw std::invalid_argument("unknown catalogue name: " + name);
  }
  out.alg.set_name(name);
  return out;
}

template MetrizedAlgebra<Q> build_by_name<Q>(const std::string&, const BuildParams&);
template MetrizedAlgebra<double> build_by_name<double>(const std::string&, const BuildParams&);

}  // namespace nalg
