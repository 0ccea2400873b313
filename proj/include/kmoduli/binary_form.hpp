#pragma once

#include <utility>
#include <vector>

#include "kmoduli/rational.hpp"

namespace kmoduli {

/// Point of P^1 as a coprime integer pair [u:v], normalized so the first
/// nonzero coordinate is positive.
struct P1Point {
  Integer u, v;
  P1Point(Integer u_, Integer v_);
  bool operator==(const P1Point& o) const { return u == o.u && v == o.v; }
  std::string str() const;
};

/// Homogeneous binary form of fixed degree d in (u, v); coefficient i
/// multiplies u^(d-i) v^i. The zero form keeps its declared degree and is
/// flagged by is_zero().
class BinaryForm {
 public:
  explicit BinaryForm(int degree);  // zero form
  BinaryForm(int degree, std::vector<Rational> coeffs);

  // c * u^(d - v_exp) * v^(v_exp)
  static BinaryForm monomial(int degree, int v_exp, const Rational& c);

  int degree() const { return degree_; }
  bool is_zero() const;
  const Rational& coeff(int v_exp) const { return coeffs_.at(v_exp); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Integer& u0, const Integer& v0) const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;  // degrees add
  BinaryForm operator*(const Rational& s) const;
  BinaryForm operator-() const;
  bool operator==(const BinaryForm& o) const;
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  BinaryForm pow(int e) const;
  BinaryForm derivative_u() const;
  BinaryForm derivative_v() const;

  // (u, v) -> (v, u)
  BinaryForm swap_uv() const;
  // (u, v) -> (a*u + b*v, c*u + d*v)
  BinaryForm linear_change(const Rational& a, const Rational& b, const Rational& c,
                           const Rational& d) const;

  std::string str() const;

 private:
  int degree_;
  std::vector<Rational> coeffs_;
};

/// True iff f = ell * g exactly; the zero form is divisible by everything.
/// Throws on a zero or non-linear ell.
bool divides_linear(const BinaryForm& ell, const BinaryForm& f);

/// Multiplicity of the linear form vanishing at p as a factor of f.
/// Throws on the zero form.
int ord_at_point(const BinaryForm& f, const P1Point& p);

/// Exact division by the degree-1 form ell; second component of the result is
/// true when the division is exact (remainder zero), in which case the first
/// component is the quotient.
std::pair<BinaryForm, bool> divide_by_linear(const BinaryForm& f, const BinaryForm& ell);

/// Monic-normalized gcd over Q[u,v] of two nonzero forms (homogeneous Euclid).
BinaryForm gcd_forms(const BinaryForm& a, const BinaryForm& b);

/// Rational points where f acquires multiplicity >= k, certified exactly: the
/// returned form has a root at p (over any field extension) iff ord_p(f) >= k.
BinaryForm multiplicity_locus(const BinaryForm& f, int k);

/// All roots of f in P^1(Q) with multiplicities, by rational root extraction;
/// `split` reports whether f factors completely into rational linear forms.
struct RootList {
  std::vector<std::pair<P1Point, int>> roots;
  bool split;
};
RootList rational_root_list(const BinaryForm& f);

}  // namespace kmoduli
