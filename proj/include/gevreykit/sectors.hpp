#ifndef GEVREYKIT_SECTORS_HPP
#define GEVREYKIT_SECTORS_HPP

#include <complex>
#include <limits>
#include <string>

namespace gevreykit {

using Complex = std::complex<double>;

// S(alpha, beta) on the Riemann surface of log z, with an optional radial
// window (r_min carries the sigma exclusion of the estimate families).
// All region predicates in this module are strict; closures where needed are
// separate predicates.
struct Sector {
  double alpha;
  double beta;
  double r_min = 0.0;
  double r_max = std::numeric_limits<double>::infinity();

  Sector(double alpha_, double beta_, double r_min_ = 0.0,
         double r_max_ = std::numeric_limits<double>::infinity());

  // Membership via any 2 pi shift of the principal argument, so openings
  // beyond 2 pi behave sensibly for points given as plain complex numbers.
  bool contains(Complex z) const;
};

double opening(const Sector& s);

enum class Criticality { subcritical, critical, supercritical };
std::string to_string(Criticality c);

// Compares the opening with pi/k at a fixed absolute tolerance of 1e-12
// radians.  Subcritical means uniqueness fails in general.
Criticality criticality(const Sector& s, double k);

// Half-plane Pi_{theta,a} of the t-plane: sigma cos theta - tau sin theta < a
// with t = sigma + i tau.  The boundary line L_{theta,a} is excluded.
struct HalfPlane {
  double theta;
  double a;

  HalfPlane(double theta_, double a_);

  // sigma cos theta - tau sin theta, the quantity compared against a.
  double support(Complex t) const;
  bool contains(Complex t) const { return support(t) < a; }
  bool on_boundary(Complex t) const;
};

inline bool halfplane_contains(const HalfPlane& h, Complex t) {
  return h.contains(t);
}

// The pair of half-planes of the main-lemma geometry for a given (delta, a):
// upper = Pi_{pi/2-delta,a}, lower = Pi_{-pi/2+delta,a}.  Their boundary
// lines cross the positive real axis at the apex a / sin delta.
//   S_1 = intersection (the left sector, where both ray transforms agree),
//   S_2 = union (the maximal region of joint analyticity at this delta),
//   S_r = interior of the complement of S_2 (its closure is the complement).
struct TSectorPair {
  double delta;
  double a;
  double apex;
  HalfPlane upper;
  HalfPlane lower;

  bool in_s1(Complex t) const { return upper.contains(t) && lower.contains(t); }
  bool in_s2(Complex t) const { return upper.contains(t) || lower.contains(t); }
  bool in_left(Complex t) const { return in_s1(t); }
  bool in_right(Complex t) const {
    return upper.support(t) > a && lower.support(t) > a;
  }
};

TSectorPair t_regions(double delta, double a);

}  // namespace gevreykit

#endif
