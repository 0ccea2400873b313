#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmoduli/rational.hpp"

namespace kmoduli {

struct Variable {
  std::string name;
  int weight = 1;
  bool operator==(const Variable& o) const { return name == o.name && weight == o.weight; }
};

/// Ordered list of named coordinates with positive integer weights.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<Variable> vars);

  int size() const { return static_cast<int>(vars_.size()); }
  const Variable& var(int i) const { return vars_.at(i); }
  int index(const std::string& name) const;  // -1 if absent
  bool operator==(const VarTable& o) const { return vars_ == o.vars_; }
  bool operator!=(const VarTable& o) const { return !(*this == o); }

 private:
  std::vector<Variable> vars_;
};

/// Sparse multivariate polynomial over Q with per-variable integer weights.
/// No zero coefficients are stored; exponent vectors always have length
/// equal to the number of variables. Terms are kept in plain lexicographic
/// exponent order internally; serialization sorts graded-lexicographically.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarTable vars) : vars_(std::move(vars)) {}

  static MultiPoly monomial(const VarTable& vars, Exponents exps, const Rational& coeff);
  static MultiPoly variable(const VarTable& vars, int index);
  static MultiPoly constant(const VarTable& vars, const Rational& c);

  const VarTable& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const Rational& s) const;
  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(int e) const;

  /// Replaces variable `index` by `repl` (same variable table) and expands.
  MultiPoly substitute(int index, const MultiPoly& repl) const;

  int weighted_term_degree(const Exponents& e) const;

  std::string str() const;

 private:
  void insert(const Exponents& e, const Rational& c);
  void check_same_table(const MultiPoly& o) const;

  VarTable vars_;
  TermMap terms_;
};

struct DegreeInfo {
  int degree = 0;
  bool homogeneous = false;
};

/// Maximum weighted degree over the terms, plus the all-terms-share-it flag.
/// Throws std::invalid_argument on the zero polynomial.
DegreeInfo weighted_degree(const MultiPoly& f);

/// Graded-lexicographic order on the terms of f (weighted degree, then lex on
/// exponents, both descending). Fixed for reproducible serialization.
std::vector<std::pair<MultiPoly::Exponents, Rational>> graded_lex_terms(const MultiPoly& f);

}  // namespace kmoduli
