#ifndef GEVREYKIT_RATIONAL_HPP
#define GEVREYKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace gevreykit {

// Exact rational in canonical form: gcd(num, den) = 1 and den > 0.
// Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long n, long d) : q_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0)
      throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : q_(n) {}
  // Decimal-string pair, the on-disk representation.
  Rational(const std::string& num, const std::string& den)
      : q_(mpz_class(num), mpz_class(den)) {
    if (q_.get_den() == 0)
      throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  // log|x| without intermediate overflow; -inf for zero.
  double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return ln_mpz(q_.get_num()) - ln_mpz(q_.get_den());
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }

  const mpq_class& raw() const { return q_; }

 private:
  static double ln_mpz(const mpz_class& z) {
    long exp2;
    double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * M_LN2;
  }

  mpq_class q_;
};

inline mpz_class factorial_mpz(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace gevreykit

#endif
