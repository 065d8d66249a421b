#include "nalg/json_io.hpp"

#include <fstream>

namespace nalg {

Q scalar_from_json_q(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Q(v.get<long>());
  if (v.is_number_float()) return Q(v.get<double>());
  throw std::invalid_argument("scalar: expected string or number");
}

double scalar_from_json_d(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  throw std::invalid_argument("scalar: expected string or number");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

json report_to_json(const Report& r) {
  json j = {{"schema", 1},
            {"predicate", r.predicate},
            {"verdict", r.verdict},
            {"residual", r.residual},
            {"witnesses", r.witnesses},
            {"seed", r.seed}};
  for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
  return j;
}

}  // namespace nalg
