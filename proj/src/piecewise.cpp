#include "kmoduli/piecewise.hpp"

#include <stdexcept>

namespace kmoduli {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UniPoly> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size())
    throw std::invalid_argument("need k+1 breakpoints for k pieces, k >= 1");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (pieces_[i - 1].evaluate(breakpoints_[i]) != pieces_[i].evaluate(breakpoints_[i]))
      throw std::invalid_argument("pieces disagree at a shared breakpoint");
}

Rational PiecewisePoly::evaluate(const Rational& t) const {
  if (t < domain_lo() || t > domain_hi())
    throw std::out_of_range("evaluation outside piecewise domain");
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (t <= breakpoints_[i + 1]) return pieces_[i].evaluate(t);
  return pieces_.back().evaluate(t);
}

PiecewisePoly PiecewisePoly::refine_at(const Rational& t) const {
  if (t <= domain_lo() || t >= domain_hi())
    throw std::out_of_range("refinement point must be interior");
  std::vector<Rational> bp;
  std::vector<UniPoly> ps;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    bp.push_back(breakpoints_[i]);
    ps.push_back(pieces_[i]);
    if (breakpoints_[i] < t && t < breakpoints_[i + 1]) {
      bp.push_back(t);
      ps.push_back(pieces_[i]);
    }
  }
  bp.push_back(breakpoints_.back());
  return PiecewisePoly(std::move(bp), std::move(ps));
}

bool PiecewisePoly::non_increasing_on_samples() const {
  Rational prev = pieces_.front().evaluate(breakpoints_.front());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rational mid = (breakpoints_[i] + breakpoints_[i + 1]) / 2;
    const Rational at_mid = pieces_[i].evaluate(mid);
    const Rational at_hi = pieces_[i].evaluate(breakpoints_[i + 1]);
    if (at_mid > prev || at_hi > at_mid) return false;
    prev = at_hi;
  }
  return true;
}

Rational integrate(const PiecewisePoly& p) {
  Rational total = 0;
  for (std::size_t i = 0; i < p.pieces().size(); ++i) {
    const UniPoly F = p.pieces()[i].antiderivative();
    total += F.evaluate(p.breakpoints()[i + 1]) - F.evaluate(p.breakpoints()[i]);
  }
  return total;
}

}  // namespace kmoduli
