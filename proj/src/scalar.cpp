#include "nalg/scalar.hpp"

#include <cstdio>

namespace nalg {

std::optional<Q> Field<Q>::sqrt(const Q& x) {
  if (sgn(x) < 0) return std::nullopt;
  mpz_class num = x.get_num(), den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Q r(rn, rd);
  r.canonicalize();
  return r;
}

std::string Field<double>::str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  auto e = s.find_first_of("eE");
  if (dot != std::string::npos || e != std::string::npos) {
    // decimal literal: exact decimal value, not the binary64 rounding
    std::string mant = e == std::string::npos ? s : s.substr(0, e);
    long ex = e == std::string::npos ? 0 : std::stol(s.substr(e + 1));
    std::string digits;
    long frac = 0;
    bool seen = false;
    for (char c : mant) {
      if (c == '.') {
        seen = true;
        continue;
      }
      digits += c;
      if (seen && c >= '0' && c <= '9') ++frac;
    }
    mpz_class num(digits, 10);
    ex -= frac;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(ex < 0 ? -ex : ex));
    Q r = ex < 0 ? Q(num, p10) : Q(num * p10);
    r.canonicalize();
    return r;
  }
  Q r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Q rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite");
  bool neg = x < 0;
  double y = neg ? -x : x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = y;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    mpz_class ai(a);
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
    if (r > 1e15) break;
  }
  if (q1 == 0) return Q(0);
  Q out(p1, q1);
  out.canonicalize();
  return neg ? Q(-out) : out;
}

}  // namespace nalg
