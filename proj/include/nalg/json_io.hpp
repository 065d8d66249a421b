#pragma once
// Algebra files and verification reports as JSON.

#include <json.hpp>

#include <string>

#include "nalg/algebra.hpp"

namespace nalg {

using json = nlohmann::json;

template <class T>
json scalar_to_json(const T& x);
template <>
inline json scalar_to_json<Q>(const Q& x) {
  return x.get_str();
}
template <>
inline json scalar_to_json<double>(const double& x) {
  return x;
}

// "p/q", integer or decimal string, or a JSON number
Q scalar_from_json_q(const json& v);
double scalar_from_json_d(const json& v);
template <class T>
T scalar_from_json(const json& v) {
  if constexpr (Field<T>::exact)
    return scalar_from_json_q(v);
  else
    return scalar_from_json_d(v);
}

template <class T>
json algebra_to_json(const MetrizedAlgebra<T>& M, bool with_metric = true) {
  const Algebra<T>& A = M.alg;
  const std::size_t n = A.dim();
  json j;
  j["name"] = A.name();
  j["dim"] = n;
  j["symmetry"] = symmetry_name(A.symmetry());
  j["scalar"] = Field<T>::exact ? "rational" : "float";
  json s = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = A.anti() ? a + 1 : a; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        T c = A.coef(a, b, k);
        if (!is_zero(c, 0.0)) s.push_back({a, b, k, scalar_to_json(c)});
      }
  j["structure"] = s;
  if (with_metric && M.h.rows() == n) {
    json g = json::array();
    for (std::size_t a = 0; a < n; ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < n; ++b) row.push_back(scalar_to_json(M.h(a, b)));
      g.push_back(row);
    }
    j["metric"] = {{"gram", g}};
  }
  return j;
}

// Structure only; the metric is read when present and left empty (0 x 0) otherwise.
template <class T>
MetrizedAlgebra<T> algebra_from_json(const json& j) {
  try {
    const std::size_t n = j.at("dim").get<std::size_t>();
    if (n == 0) throw std::invalid_argument("algebra json: dim must be positive");
    std::string sym = j.at("symmetry").get<std::string>();
    Symmetry s;
    if (sym == "commutative")
      s = Symmetry::commutative;
    else if (sym == "anticommutative")
      s = Symmetry::anticommutative;
    else
      throw std::invalid_argument("algebra json: unknown symmetry " + sym);
    Algebra<T> A(n, s, j.value("name", std::string()));
    for (const auto& e : j.at("structure")) {
      if (!e.is_array() || e.size() != 4) throw std::invalid_argument("algebra json: structure entries are [i,j,k,value]");
      std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>(), k = e[2].get<std::size_t>();
      if (a > b) throw std::invalid_argument("algebra json: only i <= j may be stored");
      A.set(a, b, k, scalar_from_json<T>(e[3]));
    }
    MetrizedAlgebra<T> M{A, Matrix<T>()};
    if (j.contains("metric") && !j["metric"].is_null()) {
      const json& g = j["metric"].at("gram");
      if (g.size() != n) throw std::invalid_argument("algebra json: gram size");
      M.h = Matrix<T>(n, n);
      for (std::size_t a = 0; a < n; ++a) {
        if (g[a].size() != n) throw std::invalid_argument("algebra json: gram size");
        for (std::size_t b = 0; b < n; ++b) M.h(a, b) = scalar_from_json<T>(g[a][b]);
      }
      if (!is_symmetric(M.h)) throw std::invalid_argument("algebra json: gram not symmetric");
    }
    return M;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("algebra json: ") + e.what());
  }
}

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

struct Report {
  std::string predicate;
  json verdict = false;
  double residual = 0;
  json witnesses = json::array();
  std::uint64_t seed = 0;
  json extra = json::object();  // merged into the top level
  bool passed() const { return !(verdict.is_boolean() && !verdict.get<bool>()); }
};
json report_to_json(const Report& r);

}  // namespace nalg
