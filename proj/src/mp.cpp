#include "gevreykit/mp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gevreykit/series.hpp"

namespace gevreykit::mp {

Real Real::of(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.x_, q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

std::string Real::str(std::size_t digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), x_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
mpfr_prec_t join(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

#define GK_MP_BINOP(op, fn)                        \
  Real operator op(const Real& a, const Real& b) { \
    Real r(join(a, b));                            \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);      \
    return r;                                      \
  }
GK_MP_BINOP(+, mpfr_add)
GK_MP_BINOP(-, mpfr_sub)
GK_MP_BINOP(*, mpfr_mul)
GK_MP_BINOP(/, mpfr_div)
#undef GK_MP_BINOP

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

#define GK_MP_UNOP(name, fn)   \
  Real name(const Real& a) {   \
    Real r(a.prec());          \
    fn(r.x_, a.x_, MPFR_RNDN); \
    return r;                  \
  }
GK_MP_UNOP(abs, mpfr_abs)
GK_MP_UNOP(exp, mpfr_exp)
GK_MP_UNOP(expm1, mpfr_expm1)
GK_MP_UNOP(log, mpfr_log)
GK_MP_UNOP(sqrt, mpfr_sqrt)
GK_MP_UNOP(sinh, mpfr_sinh)
GK_MP_UNOP(cosh, mpfr_cosh)
GK_MP_UNOP(tanh, mpfr_tanh)
#undef GK_MP_UNOP

Real lngamma(const Real& a) {
  Real r(a.prec());
  mpfr_lngamma(r.x_, a.x_, MPFR_RNDN);
  return r;
}

Real pow_si(const Real& a, long e) {
  Real r(a.prec());
  mpfr_pow_si(r.x_, a.x_, e, MPFR_RNDN);
  return r;
}

namespace {

// Binet F(t) for real t >= 0: exact Taylor rationals below 1/4, the closed
// form with expm1 above.
class BinetF {
 public:
  explicit BinetF(mpfr_prec_t prec) : prec_(prec) {
    // Term ratio at t = 1/4 is (1/(8 pi))^2 ~ 1.6e-3, about 9.3 bits per
    // even term; size the cached series accordingly.
    int pairs = static_cast<int>(prec / 9) + 16;
    const auto seq = binet_taylor_coeffs(2 * pairs);
    for (std::size_t j = 0; j < seq.size(); j += 2)
      even_.push_back(Real::of(seq[j], prec));
  }

  Real operator()(const Real& t) const {
    if (mpfr_cmp_d(t.raw(), 0.25) < 0) {
      Real t2 = t * t;
      Real acc = even_.back();
      for (std::size_t i = even_.size() - 1; i-- > 0;)
        acc = acc * t2 + even_[i];
      return acc;
    }
    Real one = Real::of(1L, prec_);
    return (Real::of(1L, prec_) / Real::of(2L, prec_) - one / t +
            one / expm1(t)) /
           t;
  }

 private:
  mpfr_prec_t prec_;
  std::vector<Real> even_;
};

}  // namespace

Real binet_P_quad(const Real& z, mpfr_prec_t prec) {
  if (!(z.sign() > 0))
    throw std::domain_error("binet_P_quad: need real z > 0");
  const mpfr_prec_t wp = prec + 64;
  BinetF F(wp);
  Real zz(wp);
  mpfr_set(zz.raw(), z.raw(), MPFR_RNDN);

  // Truncate where the integrand tail e^{-zt}/(2t) clears 2^-(prec+16).
  double zd = z.to_double();
  double Rd = ((static_cast<double>(prec) + 16.0) * M_LN2 + 8.0) / zd;
  Real half_R = Real::of(0.5 * Rd, wp);

  const double u_max =
      std::asinh((static_cast<double>(wp) + 32.0) * M_LN2 / M_PI) + 0.25;
  Real pi_half = Real::pi(wp) / Real::of(2L, wp);

  auto node = [&](double u) {
    Real s = pi_half * sinh(Real::of(u, wp));
    Real c = cosh(s);
    Real x = half_R * (Real::of(1L, wp) + tanh(s));
    if (x.sign() <= 0) return Real(wp);
    Real w = half_R * pi_half * cosh(Real::of(u, wp)) / (c * c);
    return F(x) * exp(-(zz * x)) * w;
  };

  // Tanh-sinh with step halving; each level adds only the odd nodes.
  const int base_level = 6;
  double h = std::ldexp(1.0, -base_level);
  Real S(wp);
  for (long j = -static_cast<long>(u_max / h); j <= static_cast<long>(u_max / h);
       ++j)
    S = S + node(j * h);
  Real I = S * Real::of(h, wp);

  for (int level = base_level + 1; level <= 13; ++level) {
    h *= 0.5;
    long jmax = static_cast<long>(u_max / h);
    Real odd(wp);
    for (long j = 1; j <= jmax; j += 2) odd = odd + node(j * h) + node(-j * h);
    S = S + odd;
    Real I_new = S * Real::of(h, wp);
    Real diff = abs(I_new - I);
    Real tol = abs(I_new) * pow_si(Real::of(2L, wp), -static_cast<long>(prec));
    I = I_new;
    if (level > base_level + 1 && diff <= tol) break;
  }

  Real out(prec);
  mpfr_set(out.raw(), I.raw(), MPFR_RNDN);
  return out;
}

Real stirling_partial_sum(const Real& z, int n_pairs, mpfr_prec_t prec) {
  if (n_pairs < 0) throw std::domain_error("stirling_partial_sum: n < 0");
  Real out(prec);
  if (n_pairs == 0) return out;
  const mpfr_prec_t wp = prec + 32;
  auto p = stirling_coeffs(2 * n_pairs - 2).values;
  Real zz(wp);
  mpfr_set(zz.raw(), z.raw(), MPFR_RNDN);
  Real w = Real::of(1L, wp) / zz;
  Real w2 = w * w;
  Real pw = w;  // z^{-(2k-1)}, starting at k = 1
  Real acc(wp);
  for (int k = 1; k <= n_pairs; ++k) {
    acc = acc + Real::of(p[2 * k - 2], wp) * pw;
    pw = pw * w2;
  }
  mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
  return out;
}

}  // namespace gevreykit::mp
