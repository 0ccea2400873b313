#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <vector>

#include "kmoduli/rational.hpp"

namespace kmoduli {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

struct Rref {
  MatQ mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row echelon form over Q (exact).
Rref rref(MatQ m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// returns a full-row-rank matrix whose rows are a canonical basis of the
/// row lattice (pivots positive, entries above pivots reduced to [0, pivot)).
MatZ hnf_row_basis(MatZ m);

/// Basis (as rows) of the integer kernel { x : m * x = 0 }.
MatZ integer_kernel(const MatZ& m);

/// True iff v lies in the lattice spanned by the rows of `basis`
/// (basis must have full row rank).
bool lattice_contains(const MatZ& basis, const VecZ& v);

/// True iff the two row lattices are equal (mutual containment).
bool lattice_equal(const MatZ& a, const MatZ& b);

Integer content(const VecZ& v);
VecZ primitive(VecZ v);  // divide by content, direction preserved

}  // namespace kmoduli
