#include "heckerep/recoupling/verlinde.hpp"

#include <stdexcept>

#include "heckerep/errors.hpp"
#include "heckerep/exactnum/cyclotomic.hpp"

namespace heckerep {

Integer verlinde_dim(int r, int g) {
  if (r < 1 || g < 1) throw std::invalid_argument("verlinde_dim needs r >= 1 and g >= 1");
  const int p = r + 2;
  const bool odd = r % 2 != 0;
  // sin^2(pi m / p) = (2 - w^m - w^{-m}) / 4 with w = e^{2 pi i / p}.
  const int step = odd ? 2 : 1;
  const int terms = odd ? (r + 1) / 2 : r + 1;
  CycNumber sum(p);
  for (int j = 1; j <= terms; ++j) {
    const long m = static_cast<long>(step) * j;
    CycNumber s2 = (CycNumber(p, 2L) - CycNumber::zeta(p, m) - CycNumber::zeta(p, -m)) * CycNumber(p, Rational(1, 4));
    sum += s2.pow(-(g - 1));
  }
  Rational pre(p, odd ? 4 : 2);
  Rational scale = 1;
  for (int i = 1; i < g; ++i) scale *= pre;
  sum *= CycNumber(p, scale);
  if (!sum.is_rational()) throw NotInteger("Verlinde sum is not rational");
  Rational v = sum.to_rational();
  v.canonicalize();
  if (v.get_den() != 1) throw NotInteger("Verlinde sum is not an integer: " + v.get_str());
  return v.get_num();
}

}  // namespace heckerep
