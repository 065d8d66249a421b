#pragma once
// Scalar backends: exact rationals (GMP) and binary64.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nalg {

using Q = mpq_class;

enum class Backend { rational, real };

struct Tol {
  double zero = 1e-9;
  double rank = 1e-8;
  double dedup = 1e-6;
};

template <class T>
struct Field;

template <>
struct Field<Q> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::rational;
  static bool is_zero(const Q& x, double = 0.0) { return sgn(x) == 0; }
  static double to_double(const Q& x) { return x.get_d(); }
  static Q ratio(long p, long q) {
    Q r(p, q);
    r.canonicalize();
    return r;
  }
  static Q abs(const Q& x) { return ::abs(x); }
  static std::string str(const Q& x) { return x.get_str(); }
  static std::optional<Q> sqrt(const Q& x);
};

template <>
struct Field<double> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::real;
  static bool is_zero(double x, double tol) { return tol > 0 ? std::fabs(x) < tol : x == 0.0; }
  static double to_double(double x) { return x; }
  static double ratio(long p, long q) { return double(p) / double(q); }
  static double abs(double x) { return std::fabs(x); }
  static std::string str(double x);
  static std::optional<double> sqrt(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
  }
};

template <class T>
inline bool is_zero(const T& x, double tol = Tol{}.zero) {
  return Field<T>::is_zero(x, tol);
}
template <class T>
inline double to_double(const T& x) {
  return Field<T>::to_double(x);
}
template <class T>
inline T ratio(long p, long q = 1) {
  return Field<T>::ratio(p, q);
}
template <class T>
inline T abs_of(const T& x) {
  return Field<T>::abs(x);
}
template <class T>
inline std::string to_str(const T& x) {
  return Field<T>::str(x);
}

// Conversion between backends.  Q -> double rounds; double -> Q is exact binary value.
template <class U, class T>
U convert(const T& x);
template <>
inline Q convert<Q, Q>(const Q& x) { return x; }
template <>
inline double convert<double, double>(const double& x) { return x; }
template <>
inline double convert<double, Q>(const Q& x) { return x.get_d(); }
template <>
inline Q convert<Q, double>(const double& x) { return Q(x); }

// "p/q", "p", or a decimal literal.
Q parse_rational(const std::string& s);
// Best rational approximation with denominator <= max_den (continued fractions).
Q rationalize(double x, long max_den = 1000000);

}  // namespace nalg
