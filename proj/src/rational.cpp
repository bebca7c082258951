#include "hh/rational.hpp"

#include "hh/errors.hpp"

namespace hh {

Rational::Rational(long num, long den) : q_(num, den == 0 ? 1 : den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  mpq_class q;
  std::string str(s);
  if (str.empty() || q.set_str(str, 10) != 0) throw InvalidArgument("bad rational '" + str + "'");
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + str + "'");
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) throw InvalidArgument("not a machine integer: " + str());
  return q_.get_num().get_si();
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

namespace {
thread_local mpq_class scratch;
}

void Rational::submul(const Rational& a, const Rational& b) {
  mpq_mul(scratch.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), scratch.get_mpq_t());
}

void Rational::addmul(const Rational& a, const Rational& b) {
  mpq_mul(scratch.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace hh
