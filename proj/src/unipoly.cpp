#include "kmoduli/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace kmoduli {

namespace {
const Rational kZero = Rational(0);
}

UniPoly::UniPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& coeff, int degree) {
  if (coeff == 0) return UniPoly();
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(i);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::antiderivative() const {
  if (is_zero()) return UniPoly();
  std::vector<Rational> c(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / Rational(i + 1);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(int e) const {
  UniPoly acc{Rational(1)};
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = abs(c);
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  if (n == 0) return out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact synthetic division by (x - r); returns true and the quotient when the
// remainder vanishes.
bool deflate(const UniPoly& p, const Rational& r, UniPoly* quotient) {
  const int d = p.degree();
  std::vector<Rational> q(d, Rational(0));
  Rational carry = 0;
  for (int i = d; i >= 1; --i) {
    carry = p.coeff(i) + carry * r;
    q[i - 1] = carry;
  }
  const Rational rem = p.coeff(0) + carry * r;
  if (rem != 0) return false;
  *quotient = UniPoly(std::move(q));
  return true;
}

}  // namespace

RationalRoots rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  RationalRoots result;
  result.complete = true;

  UniPoly work = p;
  // Strip roots at zero.
  while (work.degree() >= 1 && work.coeff(0) == 0) {
    UniPoly q;
    deflate(work, Rational(0), &q);
    work = q;
    if (result.roots.empty() || result.roots.back() != 0) result.roots.push_back(Rational(0));
  }
  while (work.degree() >= 1) {
    if (work.degree() == 1) {
      result.roots.push_back(-work.coeff(0) / work.coeff(1));
      work = UniPoly(Rational(1));
      break;
    }
    // Clear denominators to an integer polynomial.
    Integer lcm = 1;
    for (int i = 0; i <= work.degree(); ++i)
      lcm = boost::multiprecision::lcm(lcm, denominator(work.coeff(i)));
    std::vector<Integer> ic(work.degree() + 1);
    for (int i = 0; i <= work.degree(); ++i)
      ic[i] = numerator(work.coeff(i) * Rational(lcm));
    const auto ps = divisors(ic.front());
    const auto qs = divisors(ic.back());
    bool found = false;
    for (const auto& pn : ps) {
      for (const auto& qd : qs) {
        for (int s : {1, -1}) {
          Rational cand(pn * s, qd);
          mpq_canonicalize(cand.backend().data());
          if (work.evaluate(cand) == 0) {
            result.roots.push_back(cand);
            UniPoly q;
            deflate(work, cand, &q);
            work = q;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;  // remaining factor has no rational roots
  }
  if (work.degree() >= 1) result.complete = false;
  std::sort(result.roots.begin(), result.roots.end());
  result.roots.erase(std::unique(result.roots.begin(), result.roots.end()), result.roots.end());
  return result;
}

}  // namespace kmoduli
