#pragma once

#include <vector>

#include "kmoduli/rational.hpp"

namespace kmoduli {

/// Dense univariate polynomial over the rationals, coefficients stored
/// low degree first with no trailing zeros. The zero polynomial has an
/// empty coefficient list and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& constant);
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(const Rational& coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of x^i (zero beyond the degree).
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly antiderivative() const;  // constant term 0

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly pow(int e) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct RationalRoots {
  std::vector<Rational> roots;  // sorted ascending, no multiplicity
  bool complete;                // true iff numerator splits over Q (all roots found)
};

// All rational roots of p (p != 0), by exact divisor enumeration on the
// integer-cleared polynomial. `complete` is true when deflating by the
// found roots leaves a constant, i.e. there are no irrational roots.
RationalRoots rational_roots(const UniPoly& p);

}  // namespace kmoduli
