#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmoduli/piecewise.hpp"
#include "kmoduli/rational.hpp"
#include "kmoduli/unipoly.hpp"

namespace kmoduli {

/// Intersection ring data of a fixed threefold: named divisor classes and the
/// fully symmetric table of triple products (D_i . D_j . D_k).
class IntersectionRing3 {
 public:
  explicit IntersectionRing3(std::vector<std::string> basis);

  int size() const { return static_cast<int>(basis_.size()); }
  const std::string& name(int i) const { return basis_.at(i); }
  int index(const std::string& name) const;  // throws on unknown name

  void set_product(const std::string& a, const std::string& b, const std::string& c,
                   const Rational& value);
  const Rational& product(int i, int j, int k) const;

 private:
  std::vector<std::string> basis_;
  std::map<std::array<int, 3>, Rational> products_;
};

/// Exact trilinear expansion of (sum_i f_i(t) D_i)^3 using the triple-product
/// table; coefficients are univariate polynomials in t.
UniPoly expand_cube(const IntersectionRing3& ring, const std::map<std::string, UniPoly>& cls);

/// A divisorial valuation's data against the pair (X, cD): log discrepancy
/// A(c) = A0 + A1*c, the volume function vol(L - tE) of the c-independent
/// polarization L, and the scale rule -K_X - cD ~ (s0 + s1*c) L.
struct ValuationProfile {
  std::string name;
  Rational A0, A1;
  Rational scale0, scale1;
  PiecewisePoly vol;
  Rational c_lo, c_hi;  // declared c-range

  Rational t_end() const { return vol.domain_hi(); }
  Rational A_at(const Rational& c) const { return A0 + A1 * c; }

  /// Checks vol(0) > 0, vol(T_end) = 0, monotonicity on samples, positive
  /// log discrepancy on the declared c-range. Throws on violation.
  void validate() const;
};

/// S_{(X,cD)}(E) = scale(c) * integral(vol) / vol(0), as a polynomial in c.
UniPoly s_invariant(const ValuationProfile& p);

/// Closed form for the boundary divisor of an almost log Calabi-Yau pair
/// (X, (N/(N+1)) D) in dimension n: S = 1/((n+1)(N+1)).
Rational almost_cy_S(int n, int N);

/// beta(c) = A(c) - S(c).
UniPoly beta_poly(const ValuationProfile& p);
Rational beta(const ValuationProfile& p, const Rational& c);

struct Threshold {
  enum class Kind { wall, no_wall, degenerate, isolated };
  Kind kind;
  Rational value;          // the wall, when kind == wall
  Rational lo, hi;         // isolating interval when kind == isolated
};

/// Smallest root of beta in (0,1). beta identically zero reports the
/// degenerate boundary case; no root reports no_wall; an irrational root is
/// reported as an exact sign-isolating interval.
Threshold kst_threshold(const ValuationProfile& p);

/// One-parameter family beta for the cone construction:
///   t*beta_V + c*t*ord_E_C + (c+1)/3 - ((4c+1)/3) * min{1, t*ord_E_C}.
Rational cone_beta(const Rational& beta_V, const Rational& ord_E_C, const Rational& c,
                   const Rational& t);

/// Local data certifying K-instability at a point: log discrepancy of the
/// exceptional divisor, a lower bound on its vanishing order along the
/// boundary, the local volume, and (-K_X - cS)^3 as a polynomial in (1-c).
struct NormalizedVolCert {
  std::string name;
  Rational A_E;
  Rational ord_E_S;
  Rational local_vol;
  UniPoly pair_vol_in_1mc;

  void validate() const;  // all entries positive
};

struct NormalizedVolVerdict {
  bool unstable_certified;
  Rational lhs;  // (27/64) * pair_vol(c)
  Rational rhs;  // (A_E - c * ord_E_S)^3 * local_vol
};

/// Certifies K-instability when lhs > rhs, with both exact sides reported.
NormalizedVolVerdict normalized_vol_unstable(const NormalizedVolCert& cert, const Rational& c);

/// Alpha invariant of (P^1, sum_i c_i [p_i]) at distinct points:
/// (1 - max c_i) / (2 - sum c_i). Quotient convention; empty list gives 1/2.
/// Throws "not log Fano" when sum >= 2.
Rational alpha_p1(const std::vector<Rational>& coeffs);

}  // namespace kmoduli
