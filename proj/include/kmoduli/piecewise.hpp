#pragma once

#include <vector>

#include "kmoduli/rational.hpp"
#include "kmoduli/unipoly.hpp"

namespace kmoduli {

/// Piecewise polynomial on [t_0, t_k]: strictly increasing rational
/// breakpoints t_0 < ... < t_k and k polynomial pieces, piece i valid on
/// [t_{i-1}, t_i]. Adjacent pieces must agree at shared breakpoints.
class PiecewisePoly {
 public:
  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UniPoly> pieces);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<UniPoly>& pieces() const { return pieces_; }
  const Rational& domain_lo() const { return breakpoints_.front(); }
  const Rational& domain_hi() const { return breakpoints_.back(); }

  Rational evaluate(const Rational& t) const;  // throws outside the domain

  /// Splits the piece containing t at t (no-op if t is a breakpoint).
  PiecewisePoly refine_at(const Rational& t) const;

  /// True when evaluate is non-increasing at all breakpoints and rational
  /// midpoints of the pieces (the check volume profiles must pass).
  bool non_increasing_on_samples() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<UniPoly> pieces_;
};

/// Exact definite integral over the full domain.
Rational integrate(const PiecewisePoly& p);

}  // namespace kmoduli
