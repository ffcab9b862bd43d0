#include "heckerep/sl2_hecke/sl2.hpp"

#include <cctype>
#include <stdexcept>

namespace heckerep {

RealCycNumber::RealCycNumber(CycNumber v) : v_(std::move(v)) {
  if (!v_.is_real()) throw std::invalid_argument("value is not in the real subfield: " + v_.to_string());
}

RealCycNumber RealCycNumber::two_cos_pi_over(int q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  return RealCycNumber(CycNumber::zeta(2 * q, 1) + CycNumber::zeta(2 * q, -1));
}

SL2Matrix SL2Matrix::identity(int order) { return scalar(order, 1); }

SL2Matrix SL2Matrix::scalar(int order, long s) {
  return {RealCycNumber(order, s), RealCycNumber(order, 0), RealCycNumber(order, 0), RealCycNumber(order, s)};
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

SL2Matrix pow(const SL2Matrix& m, long e) {
  SL2Matrix base = e < 0 ? m.inverse() : m;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  SL2Matrix r = SL2Matrix::identity(m.a.order());
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

SL2Matrix upper_translation(const RealCycNumber& x) {
  const int n = x.order();
  return {RealCycNumber(n, 1), x, RealCycNumber(n, 0), RealCycNumber(n, 1)};
}

SL2Matrix lower_translation(const RealCycNumber& x) {
  const int n = x.order();
  return {RealCycNumber(n, 1), RealCycNumber(n, 0), -x, RealCycNumber(n, 1)};
}

HeckeGenerators hecke_generators(int q) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("Hecke generators need an odd q >= 3");
  HeckeGenerators g;
  g.q = q;
  g.lambda = RealCycNumber::two_cos_pi_over(q);
  const int n = g.lambda.order();
  g.A = upper_translation(g.lambda);
  g.B = lower_translation(g.lambda);
  g.J = {RealCycNumber(n, 0), RealCycNumber(n, -1), RealCycNumber(n, 1), RealCycNumber(n, 0)};
  return g;
}

namespace {

struct WordParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*')) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad word '" + s + "' at position " + std::to_string(pos) + ": " + what);
  }
  long exponent() {
    skip();
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    skip();
    bool paren = pos < s.size() && s[pos] == '{';
    if (paren) ++pos;
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1]))) fail("expected an integer exponent");
    long e = std::stol(s.substr(start, pos - start));
    if (paren) {
      if (pos >= s.size() || s[pos] != '}') fail("expected '}'");
      ++pos;
    }
    return e;
  }
  Word sequence(bool nested) {
    Word w;
    for (;;) {
      skip();
      if (pos >= s.size()) {
        if (nested) fail("missing ')'");
        return w;
      }
      const char c = s[pos];
      if (c == ')') {
        if (!nested) fail("unbalanced ')'");
        ++pos;
        return w;
      }
      Word::Factor f;
      if (c == '(') {
        ++pos;
        f.group.push_back(sequence(true));
      } else if (c == 'A' || c == 'B' || c == 'J') {
        ++pos;
        f.symbol = c;
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      f.exponent = exponent();
      w.factors.push_back(std::move(f));
    }
  }
};

SL2Matrix eval_factor(const Word::Factor& f, const HeckeGenerators& g) {
  SL2Matrix base = f.symbol == 'A' ? g.A : f.symbol == 'B' ? g.B : f.symbol == 'J' ? g.J : eval_word(f.group.at(0), g);
  return pow(base, f.exponent);
}

std::optional<Coordinates> difference(const SL2Matrix& x, const SL2Matrix& y) {
  if (x.a != y.a) return Coordinates{0, 0};
  if (x.b != y.b) return Coordinates{0, 1};
  if (x.c != y.c) return Coordinates{1, 0};
  if (x.d != y.d) return Coordinates{1, 1};
  return std::nullopt;
}

}  // namespace

Word parse_word(const std::string& text) {
  WordParser p{text};
  return p.sequence(false);
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& f : w.factors) {
    if (!out.empty()) out += ' ';
    if (f.symbol) {
      out += f.symbol;
    } else {
      out += "(" + to_string(f.group.at(0)) + ")";
    }
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

SL2Matrix eval_word(const Word& w, const HeckeGenerators& g) {
  SL2Matrix r = SL2Matrix::identity(g.lambda.order());
  for (const auto& f : w.factors) r = r * eval_factor(f, g);
  return r;
}

SL2Matrix eval_word(const std::string& text, int q) { return eval_word(parse_word(text), hecke_generators(q)); }

RelationReport verify_presentation(int q) {
  const HeckeGenerators g = hecke_generators(q);
  const int n = g.lambda.order();
  const SL2Matrix id = SL2Matrix::identity(n), minus_id = SL2Matrix::scalar(n, -1);
  const SL2Matrix ab = g.A * g.B;
  RelationReport r;
  const SL2Matrix half = g.A.inverse() * pow(ab, (q + 1) / 2);
  auto up_to_sign = difference(half, g.J);
  if (up_to_sign && !difference(half, -g.J)) up_to_sign.reset();
  r.add("J = A^-1 (AB)^((q+1)/2) in PSL", up_to_sign);
  r.add("J = (AB)^(q(q-1)/2) A^-1 (AB)^((q+1)/2)",
        difference(pow(ab, static_cast<long>(q) * (q - 1) / 2) * half, g.J));
  const SL2Matrix ts = g.A * g.J;
  r.add("s^4 = I", difference(pow(g.J, 4), id));
  r.add("(ts)^(2q) = I", difference(pow(ts, 2L * q), id));
  r.add("s^2 = (ts)^q", difference(g.J * g.J, pow(ts, q)));
  r.add("(AB)^q = -I", difference(pow(ab, q), minus_id));
  r.add("det A = det B = det J = 1",
        g.A.det() == RealCycNumber(n, 1) && g.B.det() == RealCycNumber(n, 1) && g.J.det() == RealCycNumber(n, 1)
            ? std::nullopt
            : std::optional<Coordinates>(Coordinates{0, 0}));
  return r;
}

std::string to_string(Sl2Class c) {
  switch (c) {
    case Sl2Class::Elliptic: return "elliptic";
    case Sl2Class::Parabolic: return "parabolic";
    case Sl2Class::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Sl2Class classify(const SL2Matrix& m) {
  const RealCycNumber t = m.trace();
  const int n = t.order();
  const int above = (t - RealCycNumber(n, 2)).sign();
  const int below = (t + RealCycNumber(n, 2)).sign();
  if (above == 0 || below == 0) return Sl2Class::Parabolic;
  if (above < 0 && below > 0) return Sl2Class::Elliptic;
  return Sl2Class::Hyperbolic;
}

RelationReport hyperelliptic_image_check(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  const int q = 2 * g + 1;
  const RealCycNumber mu = RealCycNumber::two_cos_pi_over(q);
  const SL2Matrix ta = upper_translation(mu), tb = lower_translation(mu);
  RelationReport r;
  r.add("(T_A T_B)^(2g+1) = -I", difference(pow(ta * tb, q), SL2Matrix::scalar(mu.order(), -1)));
  return r;
}

}  // namespace heckerep
