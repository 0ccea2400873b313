#include "kmoduli/binary_form.hpp"

#include <sstream>
#include <stdexcept>

#include "kmoduli/unipoly.hpp"

namespace kmoduli {

P1Point::P1Point(Integer u_, Integer v_) : u(std::move(u_)), v(std::move(v_)) {
  if (u == 0 && v == 0) throw std::invalid_argument("P1 point needs a nonzero coordinate");
  Integer g = boost::multiprecision::gcd(abs(u), abs(v));
  u /= g;
  v /= g;
  const bool flip = (u != 0) ? (u < 0) : (v < 0);
  if (flip) {
    u = -u;
    v = -v;
  }
}

std::string P1Point::str() const { return "[" + u.str() + ":" + v.str() + "]"; }

BinaryForm::BinaryForm(int degree) : degree_(degree), coeffs_(degree + 1, Rational(0)) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (static_cast<int>(coeffs_.size()) != degree + 1)
    throw std::invalid_argument("coefficient list length must be degree + 1");
}

BinaryForm BinaryForm::monomial(int degree, int v_exp, const Rational& c) {
  BinaryForm f(degree);
  f.coeffs_.at(v_exp) = c;
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Rational BinaryForm::evaluate(const Integer& u0, const Integer& v0) const {
  Rational acc = 0;
  // Horner in v/u is awkward with u0 = 0; just accumulate powers.
  Integer up = 1, vp = 1;
  std::vector<Integer> upow(degree_ + 1), vpow(degree_ + 1);
  for (int i = 0; i <= degree_; ++i) {
    upow[i] = up;
    vpow[i] = vp;
    up *= u0;
    vp *= v0;
  }
  for (int i = 0; i <= degree_; ++i) acc += coeffs_[i] * Rational(upow[degree_ - i] * vpow[i]);
  return acc;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in form addition");
  BinaryForm r(degree_);
  for (int i = 0; i <= degree_; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator-() const {
  BinaryForm r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm r(degree_ + o.degree_);
  for (int i = 0; i <= degree_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j <= o.degree_; ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

BinaryForm BinaryForm::operator*(const Rational& s) const {
  BinaryForm r(*this);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
  return degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

BinaryForm BinaryForm::pow(int e) const {
  BinaryForm acc(0, {Rational(1)});
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

BinaryForm BinaryForm::derivative_u() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm r(degree_ - 1);
  for (int i = 0; i <= degree_ - 1; ++i) r.coeffs_[i] = coeffs_[i] * Rational(degree_ - i);
  return r;
}

BinaryForm BinaryForm::derivative_v() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm r(degree_ - 1);
  for (int i = 0; i <= degree_ - 1; ++i) r.coeffs_[i] = coeffs_[i + 1] * Rational(i + 1);
  return r;
}

BinaryForm BinaryForm::swap_uv() const {
  BinaryForm r(degree_);
  for (int i = 0; i <= degree_; ++i) r.coeffs_[i] = coeffs_[degree_ - i];
  return r;
}

BinaryForm BinaryForm::linear_change(const Rational& a, const Rational& b, const Rational& c,
                                     const Rational& d) const {
  const BinaryForm lu(1, {a, b});
  const BinaryForm lv(1, {c, d});
  BinaryForm r(degree_);
  for (int i = 0; i <= degree_; ++i) {
    if (coeffs_[i] == 0) continue;
    r = r + lu.pow(degree_ - i) * lv.pow(i) * coeffs_[i];
  }
  return r;
}

std::string BinaryForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree_; ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = abs(c);
    const int ue = degree_ - i, ve = i;
    bool printed = false;
    if (a != 1 || (ue == 0 && ve == 0)) {
      os << a.str();
      printed = true;
    }
    if (ue > 0) {
      if (printed) os << "*";
      os << "u";
      if (ue > 1) os << "^" << ue;
      printed = true;
    }
    if (ve > 0) {
      if (printed) os << "*";
      os << "v";
      if (ve > 1) os << "^" << ve;
    }
    first = false;
  }
  return os.str();
}

bool divides_linear(const BinaryForm& ell, const BinaryForm& f) {
  if (ell.degree() != 1 || ell.is_zero())
    throw std::invalid_argument("divisor must be a nonzero linear form");
  if (f.is_zero()) return true;  // zero form divisible by everything
  // ell = alpha*u + beta*v vanishes exactly at [-beta : alpha].
  const Rational& alpha = ell.coeff(0);
  const Rational& beta = ell.coeff(1);
  const Integer lc = boost::multiprecision::lcm(denominator(alpha), denominator(beta));
  const P1Point root(numerator(-beta * Rational(lc)), numerator(alpha * Rational(lc)));
  return f.evaluate(root.u, root.v) == 0;
}

namespace {

// x*a + y*b = gcd(a, b)
void ext_gcd(Integer a, Integer b, Integer& x, Integer& y) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Integer q = a / b;
    Integer t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
}

}  // namespace

int ord_at_point(const BinaryForm& f, const P1Point& p) {
  if (f.is_zero()) throw std::invalid_argument("order undefined for zero form");
  // Complete p to a unimodular basis (p, q) and re-expand; the multiplicity is
  // the lowest exponent of the second coordinate.
  Integer x, y;
  ext_gcd(p.u, p.v, x, y);  // x*u + y*v = 1 since p is coprime
  const Integer qu = -y, qv = x;
  const BinaryForm h =
      f.linear_change(Rational(p.u), Rational(qu), Rational(p.v), Rational(qv));
  for (int k = 0; k <= h.degree(); ++k)
    if (h.coeff(k) != 0) return k;
  return h.degree();  // unreachable for nonzero f
}

std::pair<BinaryForm, bool> divide_by_linear(const BinaryForm& f, const BinaryForm& ell) {
  if (ell.degree() != 1 || ell.is_zero())
    throw std::invalid_argument("divisor must be a nonzero linear form");
  const int d = f.degree();
  if (d == 0) return {BinaryForm(0), f.is_zero()};
  const Rational& alpha = ell.coeff(0);
  const Rational& beta = ell.coeff(1);
  BinaryForm q(d - 1);
  if (alpha != 0) {
    std::vector<Rational> qs(d, Rational(0));
    qs[0] = f.coeff(0) / alpha;
    for (int k = 1; k <= d - 1; ++k) qs[k] = (f.coeff(k) - beta * qs[k - 1]) / alpha;
    const bool exact = (f.coeff(d) == beta * qs[d - 1]);
    return {BinaryForm(d - 1, std::move(qs)), exact};
  }
  // ell = beta * v
  if (f.coeff(0) != 0) return {q, false};
  std::vector<Rational> qs(d, Rational(0));
  for (int k = 0; k <= d - 1; ++k) qs[k] = f.coeff(k + 1) / beta;
  return {BinaryForm(d - 1, std::move(qs)), true};
}

namespace {

// Monic normalization: first nonzero coefficient becomes 1.
BinaryForm normalize(const BinaryForm& f) {
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(i) != 0) return f * (Rational(1) / f.coeff(i));
  return f;
}

UniPoly dehomogenize(const BinaryForm& f) {
  std::vector<Rational> c(f.coeffs());
  return UniPoly(std::move(c));  // x = v/u, coefficient of x^i is coeff(i)
}

BinaryForm rehomogenize(const UniPoly& p) {
  const int d = p.degree();
  std::vector<Rational> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = p.coeff(i);
  return BinaryForm(d, std::move(c));
}

UniPoly unipoly_mod(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const Rational q = r.coeff(r.degree()) / b.coeff(db);
    r = r - UniPoly::monomial(q, r.degree() - db) * b;
  }
  return r;
}

}  // namespace

BinaryForm gcd_forms(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero forms");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  // Pure u-power factors are invisible after dehomogenizing at u.
  auto u_mult = [](const BinaryForm& f) {
    int top = 0;
    for (int i = 0; i <= f.degree(); ++i)
      if (f.coeff(i) != 0) top = i;
    return f.degree() - top;
  };
  const int shared_u = std::min(u_mult(a), u_mult(b));
  UniPoly pa = dehomogenize(a), pb = dehomogenize(b);
  while (!pb.is_zero()) {
    UniPoly r = unipoly_mod(pa, pb);
    pa = pb;
    pb = r;
  }
  BinaryForm g = rehomogenize(pa);
  if (shared_u > 0) g = g * BinaryForm::monomial(shared_u, 0, Rational(1));
  return normalize(g);
}

BinaryForm multiplicity_locus(const BinaryForm& f, int k) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity locus of zero form");
  BinaryForm cur = normalize(f);
  for (int step = 1; step < k; ++step) {
    if (cur.degree() == 0) return cur;
    const BinaryForm du = cur.derivative_u();
    const BinaryForm dv = cur.derivative_v();
    BinaryForm g = du.is_zero() ? dv : (dv.is_zero() ? du : gcd_forms(du, dv));
    cur = g.is_zero() ? cur : gcd_forms(cur, g);
  }
  return cur;
}

RootList rational_root_list(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("root list of zero form");
  RootList out;
  BinaryForm rest = f;
  // Roots at [1:0] and [0:1] first, then affine roots via the dehomogenized
  // polynomial; multiplicities by repeated exact division.
  auto strip = [&rest](const P1Point& p) {
    const BinaryForm ell(1, {Rational(p.v), Rational(-p.u)});  // vanishes at p
    int mult = 0;
    while (rest.degree() >= 1) {
      auto [q, exact] = divide_by_linear(rest, ell);
      if (!exact) break;
      rest = q;
      ++mult;
    }
    return mult;
  };
  for (const P1Point& special : {P1Point(1, 0), P1Point(0, 1)}) {
    const int m = strip(special);
    if (m > 0) out.roots.emplace_back(special, m);
  }
  if (rest.degree() >= 1) {
    const RationalRoots rr = rational_roots(dehomogenize(rest));
    for (const Rational& x : rr.roots) {
      const P1Point p(denominator(x), numerator(x));  // v/u = x
      const int m = strip(p);
      if (m > 0) out.roots.emplace_back(p, m);
    }
  }
  out.split = (rest.degree() == 0);
  return out;
}

}  // namespace kmoduli
