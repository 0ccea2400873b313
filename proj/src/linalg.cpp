#include "kmoduli/linalg.hpp"

#include <stdexcept>

namespace kmoduli {

Rref rref(MatQ m) {
  Rref out;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(r).swap(m.row(pivot));
    m.row(r) /= m(r, c);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      m.row(i) -= m(i, c) * m.row(r);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

MatZ hnf_row_basis(MatZ m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid down the column until one nonzero entry remains at row r.
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (m(i, c) != 0 && (best < 0 || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best < 0) break;
      m.row(r).swap(m.row(best));
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        const Integer q = m(i, c) / m(r, c);
        m.row(i) -= q * m.row(r);
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) m.row(r) = -m.row(r);
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Integer q = m(i, c) / m(r, c);
      if (m(i, c) - q * m(r, c) < 0) q -= 1;
      m.row(i) -= q * m.row(r);
    }
    ++r;
  }
  return m.topRows(r);
}

MatZ integer_kernel(const MatZ& m) {
  // Column-style HNF with a unimodular recorder: transform columns of m; the
  // recorder columns matching zero columns of the image span the kernel.
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  MatZ work = m;
  MatZ rec = MatZ::Identity(cols, cols);
  int c = 0;
  for (int r = 0; r < rows && c < cols; ++r) {
    while (true) {
      int best = -1;
      for (int j = c; j < cols; ++j)
        if (work(r, j) != 0 && (best < 0 || abs(work(r, j)) < abs(work(r, best)))) best = j;
      if (best < 0) break;
      work.col(c).swap(work.col(best));
      rec.col(c).swap(rec.col(best));
      bool clean = true;
      for (int j = c + 1; j < cols; ++j) {
        if (work(r, j) == 0) continue;
        const Integer q = work(r, j) / work(r, c);
        work.col(j) -= q * work.col(c);
        rec.col(j) -= q * rec.col(c);
        if (work(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (work(r, c) != 0) ++c;
  }
  MatZ kernel(cols - c, cols);
  for (int j = c; j < cols; ++j) kernel.row(j - c) = rec.col(j).transpose();
  return kernel;
}

bool lattice_contains(const MatZ& basis, const VecZ& v) {
  // Solve x * basis = v over Q and check integrality.
  const int n = static_cast<int>(basis.rows());
  const int dim = static_cast<int>(basis.cols());
  MatQ aug(dim, n + 1);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = Rational(basis(j, i));
    aug(i, n) = Rational(v(i));
  }
  const Rref rr = rref(std::move(aug));
  // Inconsistent iff a pivot lands in the last column.
  for (int p : rr.pivot_cols)
    if (p == n) return false;
  VecQ x = VecQ::Zero(n);
  for (int k = 0; k < rr.rank; ++k) x(rr.pivot_cols[k]) = rr.mat(k, n);
  // Verify and check integrality.
  for (int i = 0; i < dim; ++i) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += x(j) * Rational(basis(j, i));
    if (acc != Rational(v(i))) return false;
  }
  for (int j = 0; j < n; ++j)
    if (denominator(x(j)) != 1) return false;
  return true;
}

bool lattice_equal(const MatZ& a, const MatZ& b) {
  for (int i = 0; i < a.rows(); ++i)
    if (!lattice_contains(b, a.row(i).transpose())) return false;
  for (int i = 0; i < b.rows(); ++i)
    if (!lattice_contains(a, b.row(i).transpose())) return false;
  return true;
}

Integer content(const VecZ& v) {
  Integer g = 0;
  for (int i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, abs(v(i)));
  return g;
}

VecZ primitive(VecZ v) {
  const Integer g = content(v);
  if (g == 0) throw std::invalid_argument("primitive part of the zero vector");
  for (int i = 0; i < v.size(); ++i) v(i) /= g;
  return v;  // direction preserved
}

}  // namespace kmoduli
