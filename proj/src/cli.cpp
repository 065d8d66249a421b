#include "nalg/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "nalg/analysis.hpp"
#include "nalg/constructions.hpp"
#include "nalg/json_io.hpp"

namespace nalg::cli {

namespace {

struct Opts {
  std::string sub, name, scalar, out, level = "r", alpha = "1/2";
  std::vector<std::string> files, suites;
  int n = 3, m = 2, trials = 2000, decompose_trials = 8, steps = 200;
  std::size_t samples = 2000;
  std::uint64_t seed = 1;
  bool has_seed = false, has_tol = false;
  double tol = 0;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> kSuites = {"exact",     "killing-invariant", "ricci-invariant", "nondegenerate",
                                          "einstein",  "proj-assoc",        "conf-assoc",      "norton",
                                          "const-sect", "ideals",           "simple"};

void emit(const json& j, const Opts& o, std::ostream& out) {
  if (o.out.empty())
    out << j.dump(1) << "\n";
  else
    write_json_file(o.out, j);
}

template <class T>
double tol_for(const Opts& o) {
  if (o.has_tol) return o.tol;
  return Field<T>::exact ? 0.0 : Tol{}.zero;
}

std::string file_scalar(const Opts& o, const std::string& path) {
  if (!o.scalar.empty()) return o.scalar;
  return read_json_file(path).value("scalar", std::string("rational"));
}

template <class T>
MetrizedAlgebra<T> load(const std::string& path) {
  json j = read_json_file(path);
  if (j.value("scalar", std::string("rational")) == "float") return convert_metrized<T>(algebra_from_json<double>(j));
  return convert_metrized<T>(algebra_from_json<Q>(j));
}

// Killing form when the file carries no metric
template <class T>
MetrizedAlgebra<T> ensure_metric(MetrizedAlgebra<T> M) {
  if (M.h.rows() != M.dim()) M.h = killing_form(M.alg);
  return M;
}

template <class T>
json vec_json(const Vec<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

json inertia_json(const Inertia& in) { return {{"p", in.p}, {"m", in.m}, {"z", in.z}}; }

template <class T>
json ideals_json(const Decomposition<T>& D) {
  json w = json::array();
  for (const auto& I : D.ideals) {
    json basis = json::array();
    for (std::size_t k = 0; k < I.dim(); ++k) basis.push_back(vec_json(I.vec(k)));
    w.push_back({{"dim", I.dim()}, {"basis", basis}});
  }
  return w;
}

// ---- subcommands ----
template <class T>
int cmd_build(const Opts& o, std::ostream& out) {
  BuildParams p{o.n, o.m, o.alpha, level_from_char(o.level.at(0))};
  emit(algebra_to_json(build_by_name<T>(o.name, p)), o, out);
  return ok;
}

template <class T>
int cmd_construct(const Opts& o, std::ostream& out) {
  const std::string& op = o.name;
  const bool binary = op == "tensor" || op == "dsum";
  if (o.files.size() != (binary ? 2u : 1u)) throw UsageError(op + ": wrong number of input files");
  MetrizedAlgebra<T> A = load<T>(o.files[0]), R;
  if (op == "triple") {
    R = killing_metrized(triple(A.alg));
  } else if (op == "nahm") {
    R = killing_metrized(nahm(A.alg));
  } else if (op == "tensor") {
    R = tensor_product(ensure_metric(A), ensure_metric(load<T>(o.files[1])));
  } else if (op == "dsum") {
    R = direct_sum(ensure_metric(A), ensure_metric(load<T>(o.files[1])));
  } else if (op == "unitalize") {
    R = unitalization(ensure_metric(A));
  } else if (op == "deunitalize") {
    R = deunitalization(ensure_metric(A)).ma;
  } else if (op == "confext") {
    R = conformal_extension(killing_metrized(A.alg));
  } else if (op == "killing") {
    R = killing_metrized(A.alg);
  } else {
    throw UsageError("unknown construction: " + op);
  }
  emit(algebra_to_json(with_flags(R, tol_for<T>(o))), o, out);
  return ok;
}

template <class T>
int cmd_report(const Opts& o, std::ostream& out) {
  MetrizedAlgebra<T> M = load<T>(o.files.at(0));
  const double tol = tol_for<T>(o);
  const Algebra<T>& A = M.alg;
  Matrix<T> tau = killing_form(A), ric = ricci_form(A, tau);
  json j = {{"schema", 1},          {"predicate", "report"},
            {"name", A.name()},     {"dim", A.dim()},
            {"symmetry", symmetry_name(A.symmetry())},
            {"scalar", Field<T>::exact ? "rational" : "float"},
            {"exact", is_exact(A, tol)},
            {"killing_inertia", inertia_json(inertia(tau))},
            {"ricci_inertia", inertia_json(inertia(ric))},
            {"killing_invariant", is_invariant(A, tau, tol).ok},
            {"ricci_invariant", is_invariant(A, ric, tol).ok},
            {"unit", find_unit(A, std::max(tol, 1e-12)).has_value()},
            {"einstein_kappa", nullptr},
            {"verdict", true},
            {"residual", 0},
            {"witnesses", json::array()},
            {"seed", 0}};
  if (M.h.rows() == M.dim()) {
    j["metric_inertia"] = inertia_json(inertia(M.h));
    j["metric_invariant"] = is_invariant(A, M.h, tol).ok;
    try {
      auto f = einstein_fit(M, tau);
      if (is_zero(f.residual, tol)) j["einstein_kappa"] = scalar_to_json(f.kappa);
      j["residual"] = to_double(f.residual);
    } catch (const std::domain_error&) {
    }
  }
  emit(j, o, out);
  return ok;
}

void need_seed(const Opts& o) {
  if (!o.has_seed) throw UsageError(o.sub + ": --seed is required");
}

int cmd_idempotents(const Opts& o, std::ostream& out) {
  need_seed(o);
  auto M = ensure_metric(load<double>(o.files.at(0)));
  auto S = newton_idempotents(M, o.trials, o.seed);
  Report r;
  r.predicate = "idempotents";
  r.verdict = {{"idempotents", S.count(IdemKind::idempotent)},
               {"square_zero_rays", S.count(IdemKind::square_zero_ray)}};
  r.seed = o.seed;
  for (const auto& rec : S.records)
    r.witnesses.push_back({{"kind", rec.kind == IdemKind::idempotent ? "idempotent" : "square_zero_ray"},
                           {"point", rec.point},
                           {"h_norm2", rec.h_norm2},
                           {"orth_spectrum", rec.orth_spectrum}});
  r.extra = {{"trials", S.trials}, {"incomplete", S.incomplete}};
  emit(report_to_json(r), o, out);
  return ok;
}

int cmd_sect(const Opts& o, std::ostream& out) {
  need_seed(o);
  auto M = ensure_metric(load<double>(o.files.at(0)));
  auto B = sect_extremize(M, o.samples, o.steps, o.seed);
  Report r;
  r.predicate = "sect-bounds";
  r.verdict = {{"min", B.min}, {"max", B.max}};
  r.seed = o.seed;
  r.witnesses.push_back({{"extreme", "min"}, {"x", B.argmin.first}, {"y", B.argmin.second}});
  r.witnesses.push_back({{"extreme", "max"}, {"x", B.argmax.first}, {"y", B.argmax.second}});
  r.extra = {{"samples", B.samples}, {"flagged", B.flagged}};
  emit(report_to_json(r), o, out);
  return ok;
}

template <class T>
Report run_suite(const std::string& s, const MetrizedAlgebra<T>& M, const Matrix<T>& tau, const Opts& o) {
  const double tol = tol_for<T>(o);
  const Algebra<T>& A = M.alg;
  Report r;
  r.predicate = s;
  r.seed = o.seed;
  try {
    if (s == "exact") {
      r.residual = max_abs(trace_linear(A));
      r.verdict = is_exact(A, tol);
    } else if (s == "killing-invariant" || s == "ricci-invariant") {
      Check c = is_invariant(A, s == "killing-invariant" ? tau : ricci_form(A, tau), tol);
      r.verdict = c.ok;
      r.residual = c.violation;
    } else if (s == "nondegenerate") {
      Inertia in = inertia(tau);
      r.verdict = in.z == 0;
      r.extra = {{"inertia", inertia_json(in)}};
    } else if (s == "einstein") {
      auto f = einstein_fit(M, tau);
      r.residual = to_double(f.residual);
      if (is_zero(f.residual, tol))
        r.verdict = scalar_to_json(f.kappa);
      else
        r.verdict = false;
    } else if (s == "proj-assoc") {
      auto p = is_projectively_associative(A, tol);
      r.verdict = p.ok;
      r.residual = p.violation;
    } else if (s == "conf-assoc") {
      auto v = is_conformally_associative(M, tol);
      r.verdict = v.ok;
      r.residual = v.violation;
    } else if (s == "norton") {
      auto B = sect_extremize(convert_metrized<double>(M), o.samples, o.steps, o.seed);
      r.verdict = B.min >= -1e-9;
      r.residual = std::min(0.0, B.min);
      r.witnesses.push_back({{"x", B.argmin.first}, {"y", B.argmin.second}, {"sect", B.min}});
    } else if (s == "const-sect") {
      auto k = constant_sect_check(M, tol);
      if (k)
        r.verdict = scalar_to_json(*k);
      else
        r.verdict = false;
    } else if (s == "ideals" || s == "simple") {
      auto D = decompose_ideals(M, o.decompose_trials, o.seed);
      r.witnesses = ideals_json(D);
      if (s == "ideals")
        r.verdict = D.ideals.size();
      else
        r.verdict = !D.decomposed;
    } else {
      throw UsageError("unknown suite: " + s);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    r.verdict = false;
    r.extra = {{"error", e.what()}};
  }
  return r;
}

template <class T>
int cmd_check(const Opts& o, std::ostream& out) {
  if (o.suites.empty()) throw UsageError("check: --suite is required");
  for (const auto& s : o.suites)
    if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end()) throw UsageError("unknown suite: " + s);
  auto M = ensure_metric(load<T>(o.files.at(0)));
  Matrix<T> tau = killing_form(M.alg);
  json reports = json::array();
  bool all = true;
  for (const auto& s : o.suites) {
    Report r = run_suite(s, M, tau, o);
    all = all && r.passed();
    reports.push_back(report_to_json(r));
  }
  emit({{"schema", 1}, {"algebra", M.alg.name()}, {"verdict", all}, {"seed", o.seed}, {"reports", reports}}, o, out);
  return all ? ok : failed;
}

template <class T>
int cmd_decompose(const Opts& o, std::ostream& out) {
  need_seed(o);
  auto M = ensure_metric(load<T>(o.files.at(0)));
  auto D = decompose_ideals(M, o.decompose_trials, o.seed);
  Report r;
  r.predicate = "decompose";
  r.verdict = D.ideals.size();
  r.witnesses = ideals_json(D);
  r.seed = o.seed;
  r.extra = {{"decomposed", D.decomposed}};
  emit(report_to_json(r), o, out);
  return ok;
}

template <class T>
int dispatch(const Opts& o, std::ostream& out) {
  if (o.sub == "build") return cmd_build<T>(o, out);
  if (o.sub == "construct") return cmd_construct<T>(o, out);
  if (o.sub == "report") return cmd_report<T>(o, out);
  if (o.sub == "check") return cmd_check<T>(o, out);
  if (o.sub == "decompose") return cmd_decompose<T>(o, out);
  if (o.sub == "idempotents") return cmd_idempotents(o, out);
  if (o.sub == "sect") return cmd_sect(o, out);
  throw UsageError("unknown subcommand");
}

}  // namespace

std::vector<std::string> suite_names() { return kSuites; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"nalg: metrized commutative and anticommutative algebras"};
  app.require_subcommand(1, 1);
  CLI::Option* seed_opt = nullptr;
  auto common = [&](CLI::App* s) {
    s->add_option("--scalar", o.scalar, "rational or float")->check(CLI::IsMember({"rational", "float"}));
    s->add_option("-o", o.out, "output file (default stdout)");
    s->add_option("--tol", o.tol, "zero tolerance for float checks");
  };
  auto seeded = [&](CLI::App* s) {
    auto* opt = s->add_option("--seed", o.seed, "random seed");
    opt->each([&](const std::string&) { o.has_seed = true; });
    seed_opt = opt;
  };

  auto* build = app.add_subcommand("build", "build a catalogue algebra");
  build->add_option("name", o.name)->required();
  build->add_option("--n", o.n);
  build->add_option("--m", o.m, "second factor size for tensor-ealg");
  build->add_option("--alpha", o.alpha, "p/q");
  build->add_option("--level", o.level)->check(CLI::IsMember({"r", "c", "h", "o"}));
  common(build);

  auto* cons = app.add_subcommand("construct", "apply a construction to algebra files");
  cons->add_option("op", o.name, "triple, nahm, tensor, dsum, unitalize, deunitalize, confext, killing")->required();
  cons->add_option("files", o.files)->required()->expected(1, 2);
  common(cons);

  auto* rep = app.add_subcommand("report", "summary of trace forms and invariants");
  rep->add_option("file", o.files)->required()->expected(1);
  common(rep);

  auto* idem = app.add_subcommand("idempotents", "Newton search for idempotents and square-zero rays");
  idem->add_option("file", o.files)->required()->expected(1);
  idem->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
  seeded(idem);
  common(idem);

  auto* sc = app.add_subcommand("sect", "sampled extremes of the sectional nonassociativity");
  sc->add_option("file", o.files)->required()->expected(1);
  sc->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  sc->add_option("--steps", o.steps)->check(CLI::NonNegativeNumber);
  seeded(sc);
  common(sc);

  auto* chk = app.add_subcommand("check", "run named verification suites");
  chk->add_option("file", o.files)->required()->expected(1);
  chk->add_option("--suite", o.suites)->delimiter(',')->required();
  chk->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  chk->add_option("--steps", o.steps)->check(CLI::NonNegativeNumber);
  chk->add_option("--trials", o.decompose_trials)->check(CLI::PositiveNumber);
  seeded(chk);
  common(chk);

  auto* dec = app.add_subcommand("decompose", "split into orthogonal ideals");
  dec->add_option("file", o.files)->required()->expected(1);
  dec->add_option("--trials", o.decompose_trials)->check(CLI::PositiveNumber);
  seeded(dec);
  common(dec);
  (void)seed_opt;

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  for (auto* s : app.get_subcommands()) o.sub = s->get_name();
  for (auto* s : app.get_subcommands()) o.has_tol = s->count("--tol") > 0;

  try {
    std::string scalar = o.scalar;
    if (scalar.empty()) scalar = o.files.empty() ? "rational" : file_scalar(o, o.files[0]);
    return scalar == "float" ? dispatch<double>(o, out) : dispatch<Q>(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failed;
  }
}

}  // namespace nalg::cli
