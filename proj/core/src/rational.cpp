#include "sunrise/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "sunrise/errors.hpp"

namespace sunrise {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { throw ParseError("cannot parse rational: '" + std::string(text) + "'"); };

  std::string s(text);
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) bad();

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('.') != std::string::npos ||
        num.find('.') != std::string::npos)
      bad();
    mpq_class q;
    if (q.set_str(s, 10) != 0) bad();
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    q.canonicalize();
    if (q.get_den() < 0) bad();
    return Rational(std::move(q));
  }

  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpz_class n;
    if (n.set_str(s, 10) != 0) bad();
    return Rational(mpq_class(n));
  }

  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0 || digits.empty() || digits == "-" || digits == "+") bad();
  mpz_class n;
  if (n.set_str(digits, 10) != 0) bad();
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_len);
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite double has no rational value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(std::move(q));
}

Rational Rational::abs() const {
  return sign() < 0 ? Rational(mpq_class(-q_)) : *this;
}

double Rational::to_double() const {
  const double d = q_.get_d();  // truncated toward zero
  if (!std::isfinite(d)) return d;
  const Rational lo = from_double(d);
  if (lo == *this) return d;
  const bool above = *this > lo;
  const double e = std::nextafter(d, above ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(e)) return d;
  const Rational mid = (lo + from_double(e)) / Rational(2);
  const bool closer_to_e = above ? (*this > mid) : (*this < mid);
  return closer_to_e ? e : d;
}

std::string Rational::str() const {
  return q_.get_str();
}

std::string Rational::decimal_str() const {
  mpz_class den = q_.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return str();
  const unsigned long k = std::max(twos, fives);
  if (k == 0) return q_.get_num().get_str();
  // scale numerator so the denominator becomes 10^k
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, k - twos);
  mpz_class num = q_.get_num() * scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 5, k - fives);
  num *= scale;
  const bool neg = num < 0;
  mpz_class mag = neg ? mpz_class(-num) : num;
  std::string digits = mag.get_str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return (neg ? "-" : "") + digits;
}

Rational Rational::pow(unsigned long e) const {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(std::move(out));  // powers of canonical forms are canonical
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace sunrise
