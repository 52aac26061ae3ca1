#ifndef GEVREYKIT_MP_HPP
#define GEVREYKIT_MP_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "gevreykit/rational.hpp"

namespace gevreykit::mp {

// Minimal arbitrary-precision real for the deep-tail Stirling comparisons,
// where the quantities of interest sit 40+ orders of magnitude below the
// function values and double subtraction cannot reach them.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 256) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  static Real of(double v, mpfr_prec_t prec = 256);
  static Real of(long v, mpfr_prec_t prec = 256);
  static Real of(const Rational& q, mpfr_prec_t prec = 256);
  static Real pi(mpfr_prec_t prec = 256);

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  std::string str(std::size_t digits = 30) const;
  int sign() const { return mpfr_sgn(x_); }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_cmp(a.x_, b.x_) < 0;
  }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_cmp(a.x_, b.x_) <= 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

  friend Real abs(const Real& a);
  friend Real exp(const Real& a);
  friend Real expm1(const Real& a);
  friend Real log(const Real& a);
  friend Real sqrt(const Real& a);
  friend Real sinh(const Real& a);
  friend Real cosh(const Real& a);
  friend Real tanh(const Real& a);
  friend Real lngamma(const Real& a);
  friend Real pow_si(const Real& a, long e);

 private:
  mpfr_t x_;
};

// Binet P(z) for real z > 0 by tanh-sinh quadrature of the first Binet
// integral at the requested precision.
Real binet_P_quad(const Real& z, mpfr_prec_t prec = 320);

// sum_{k=1}^{n_pairs} p_{2k-2} / z^{2k-1} with exact Stirling rationals.
Real stirling_partial_sum(const Real& z, int n_pairs, mpfr_prec_t prec = 320);

}  // namespace gevreykit::mp

#endif
