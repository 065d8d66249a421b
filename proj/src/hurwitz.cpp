#include "nalg/hurwitz.hpp"

#include <functional>

namespace nalg {

int level_from_char(char c) {
  switch (c) {
    case 'r': return 1;
    case 'c': return 2;
    case 'h': return 4;
    case 'o': return 8;
  }
  throw std::invalid_argument(std::string("unknown level: ") + c);
}

char level_char(int level) {
  switch (level) {
    case 1: return 'r';
    case 2: return 'c';
    case 4: return 'h';
    case 8: return 'o';
  }
  throw std::invalid_argument("bad level");
}

namespace {

// recursive Cayley-Dickson product on +-1 coordinate vectors
std::vector<int> cd_mul(const std::vector<int>& x, const std::vector<int>& y) {
  const std::size_t m = x.size();
  if (m == 1) return {x[0] * y[0]};
  const std::size_t h = m / 2;
  std::vector<int> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  std::vector<int> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  auto conj = [](std::vector<int> v) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
    return v;
  };
  auto ac = cd_mul(a, c), db = cd_mul(conj(d), b), da = cd_mul(d, a), bc = cd_mul(b, conj(c));
  std::vector<int> out(m);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - db[i];
    out[h + i] = da[i] + bc[i];
  }
  return out;
}

CDTable build(int level) {
  CDTable t;
  t.level = level;
  for (int a = 0; a < level; ++a)
    for (int b = 0; b < level; ++b) {
      std::vector<int> x(level, 0), y(level, 0);
      x[a] = 1;
      y[b] = 1;
      auto z = cd_mul(x, y);
      for (int c = 0; c < level; ++c)
        if (z[c] != 0) {
          t.index[a][b] = c;
          t.sign[a][b] = z[c];
        }
    }
  return t;
}

}  // namespace

const CDTable& cd_table(int level) {
  static const CDTable t1 = build(1), t2 = build(2), t4 = build(4), t8 = build(8);
  switch (level) {
    case 1: return t1;
    case 2: return t2;
    case 4: return t4;
    case 8: return t8;
  }
  throw std::invalid_argument("cd_table: level must be 1, 2, 4 or 8");
}

}  // namespace nalg
