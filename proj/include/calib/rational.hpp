#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace calib {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// throughout: positive denominator, gcd(num, den) = 1.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// mpq_class(num, den) does not reduce; every fraction built from a pair that
// may share a factor must go through here.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p", or "p/q". Denominator must be nonzero.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Scalar of the form rat * sqrt(root), root a positive squarefree integer.
// Arithmetic stays exact: products merge the radicands and re-extract the
// square part, sums are only defined between like radicals.
struct Radical {
  Rational rat;
  long root = 1;  // squarefree, >= 1

  Radical() : rat(0) {}
  Radical(Rational r, long n = 1) : rat(std::move(r)), root(n) { normalize(); }

  void normalize() {
    if (root <= 0) throw std::invalid_argument("radicand must be positive");
    // pull out square factors
    for (long d = 2; d * d <= root; ++d) {
      while (root % (d * d) == 0) {
        root /= d * d;
        rat *= d;
      }
    }
    if (is_zero(rat)) root = 1;
  }

  bool is_rational() const { return root == 1; }

  Radical operator*(const Radical& o) const {
    Radical out;
    out.rat = rat * o.rat;
    out.root = root * o.root;
    out.normalize();
    return out;
  }
  Radical operator*(const Rational& c) const { return Radical(rat * c, root); }
  Radical operator+(const Radical& o) const {
    if (is_zero(rat)) return o;
    if (is_zero(o.rat)) return *this;
    if (root != o.root)
      throw std::domain_error("sum of unlike radicals is not representable");
    return Radical(rat + o.rat, root);
  }
  Radical operator-() const { return Radical(-rat, root); }
  bool operator==(const Radical& o) const {
    return rat == o.rat && (root == o.root || is_zero(rat));
  }

  // squared value, always rational
  Rational squared() const { return rat * rat * root; }

  std::string str() const {
    if (root == 1) return to_string(rat);
    return to_string(rat) + "*sqrt(" + std::to_string(root) + ")";
  }
};

}  // namespace calib
