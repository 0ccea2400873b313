#include "kmoduli/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kmoduli {

VarTable::VarTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (const auto& v : vars_) {
    if (v.weight <= 0)
      throw std::invalid_argument("variable weight must be positive: " + v.name);
    if (v.name.empty()) throw std::invalid_argument("empty variable name");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name)
        throw std::invalid_argument("duplicate variable name: " + vars_[i].name);
}

int VarTable::index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

MultiPoly MultiPoly::monomial(const VarTable& vars, Exponents exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != vars.size())
    throw std::invalid_argument("exponent vector length does not match variable table");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  MultiPoly p(vars);
  p.insert(exps, coeff);
  return p;
}

MultiPoly MultiPoly::variable(const VarTable& vars, int index) {
  Exponents e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(vars, std::move(e), Rational(1));
}

MultiPoly MultiPoly::constant(const VarTable& vars, const Rational& c) {
  return monomial(vars, Exponents(vars.size(), 0), c);
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::insert(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_table(const MultiPoly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("polynomials over different variable tables");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same_table(o);
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.insert(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  if (s == 0) return MultiPoly(vars_);
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_table(o);
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly acc = constant(vars_, Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

MultiPoly MultiPoly::substitute(int index, const MultiPoly& repl) const {
  check_same_table(repl);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const int k = rest.at(index);
    rest[index] = 0;
    MultiPoly term = monomial(vars_, rest, c);
    if (k > 0) term = term * repl.pow(k);
    r = r + term;
  }
  return r;
}

int MultiPoly::weighted_term_degree(const Exponents& e) const {
  int d = 0;
  for (int i = 0; i < vars_.size(); ++i) d += vars_.var(i).weight * e.at(i);
  return d;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : graded_lex_terms(*this)) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << a.str();
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << vars_.var(static_cast<int>(i)).name;
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
    if (!printed) os << a.str();
    first = false;
  }
  return os.str();
}

DegreeInfo weighted_degree(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no degree");
  DegreeInfo info;
  bool firstTerm = true;
  bool allEqual = true;
  for (const auto& [e, c] : f.terms()) {
    const int d = f.weighted_term_degree(e);
    if (firstTerm) {
      info.degree = d;
      firstTerm = false;
    } else {
      if (d != info.degree) allEqual = false;
      info.degree = std::max(info.degree, d);
    }
  }
  info.homogeneous = allEqual;
  return info;
}

std::vector<std::pair<MultiPoly::Exponents, Rational>> graded_lex_terms(const MultiPoly& f) {
  std::vector<std::pair<MultiPoly::Exponents, Rational>> out(f.terms().begin(), f.terms().end());
  std::sort(out.begin(), out.end(), [&f](const auto& a, const auto& b) {
    const int da = f.weighted_term_degree(a.first);
    const int db = f.weighted_term_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

}  // namespace kmoduli
