#include "soscert/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace soscert {

Rational rational_from_string(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_round(double x, const Integer& max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot round a non-finite value");
  if (max_den < 1) throw std::invalid_argument("denominator bound must be >= 1");
  Rational target(x);  // exact binary expansion
  target.canonicalize();
  if (target.get_den() <= max_den) return target;

  bool negative = sgn(target) < 0;
  Rational t = abs(target);
  Integer num = t.get_num(), den = t.get_den();

  // Convergent recurrence h_n = a_n h_{n-1} + h_{n-2}.
  Integer p_m2 = 0, p_m1 = 1;
  Integer q_m2 = 1, q_m1 = 0;
  while (den != 0) {
    Integer a = num / den;
    Integer rem = num % den;
    Integer p = a * p_m1 + p_m2;
    Integer q = a * q_m1 + q_m2;
    if (q > max_den) {
      // q_m1 >= 1 here: the first convergent has q = 1 <= max_den.
      Integer k = (max_den - q_m2) / q_m1;
      Rational conv(p_m1, q_m1);
      conv.canonicalize();
      Rational semi(k * p_m1 + p_m2, k * q_m1 + q_m2);
      semi.canonicalize();
      Rational best = (abs(semi - t) <= abs(conv - t)) ? semi : conv;
      return negative ? Rational(-best) : best;
    }
    p_m2 = p_m1;
    q_m2 = q_m1;
    p_m1 = p;
    q_m1 = q;
    num = den;
    den = rem;
  }
  Rational best(p_m1, q_m1);
  best.canonicalize();
  return negative ? Rational(-best) : best;
}

}  // namespace soscert
