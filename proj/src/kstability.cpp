#include "kmoduli/kstability.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmoduli {

IntersectionRing3::IntersectionRing3(std::vector<std::string> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw std::invalid_argument("intersection ring needs a basis");
}

int IntersectionRing3::index(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown basis element: " + name);
}

void IntersectionRing3::set_product(const std::string& a, const std::string& b,
                                    const std::string& c, const Rational& value) {
  std::array<int, 3> key{index(a), index(b), index(c)};
  std::sort(key.begin(), key.end());
  products_[key] = value;
}

const Rational& IntersectionRing3::product(int i, int j, int k) const {
  static const Rational zero(0);
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  auto it = products_.find(key);
  return it == products_.end() ? zero : it->second;
}

UniPoly expand_cube(const IntersectionRing3& ring, const std::map<std::string, UniPoly>& cls) {
  std::vector<UniPoly> coeffs(ring.size());
  for (const auto& [name, poly] : cls) coeffs.at(ring.index(name)) = poly;
  UniPoly out;
  for (int i = 0; i < ring.size(); ++i)
    for (int j = 0; j < ring.size(); ++j)
      for (int k = 0; k < ring.size(); ++k) {
        const Rational& p = ring.product(i, j, k);
        if (p == 0) continue;
        out = out + coeffs[i] * coeffs[j] * coeffs[k] * p;
      }
  return out;
}

void ValuationProfile::validate() const {
  if (vol.domain_lo() != 0) throw std::invalid_argument(name + ": volume domain must start at 0");
  if (vol.evaluate(Rational(0)) <= 0) throw std::invalid_argument(name + ": vol(0) must be positive");
  if (vol.evaluate(t_end()) != 0) throw std::invalid_argument(name + ": vol(T_end) must vanish");
  if (!vol.non_increasing_on_samples())
    throw std::invalid_argument(name + ": volume must be non-increasing");
  if (!(c_lo < c_hi)) throw std::invalid_argument(name + ": empty c-range");
  if (A_at(c_lo) <= 0 || A_at(c_hi) <= 0)
    throw std::invalid_argument(name + ": log discrepancy must stay positive on the c-range");
}

UniPoly s_invariant(const ValuationProfile& p) {
  const Rational vol0 = p.vol.evaluate(Rational(0));
  if (vol0 == 0) throw std::invalid_argument("vol(0) = 0");
  const Rational mass = integrate(p.vol) / vol0;
  return UniPoly({p.scale0 * mass, p.scale1 * mass});
}

Rational almost_cy_S(int n, int N) {
  if (n < 1 || N < 1) throw std::invalid_argument("almost_cy_S needs n, N >= 1");
  return Rational(1, Integer(n + 1) * Integer(N + 1));
}

UniPoly beta_poly(const ValuationProfile& p) {
  return UniPoly({p.A0, p.A1}) - s_invariant(p);
}

Rational beta(const ValuationProfile& p, const Rational& c) {
  return beta_poly(p).evaluate(c);
}

Threshold kst_threshold(const ValuationProfile& p) {
  const UniPoly b = beta_poly(p);
  Threshold out{Threshold::Kind::no_wall, Rational(0), Rational(0), Rational(0)};
  if (b.is_zero()) {
    out.kind = Threshold::Kind::degenerate;
    return out;
  }
  const RationalRoots roots = rational_roots(b);
  for (const Rational& r : roots.roots) {
    if (r > 0 && r < 1) {
      out.kind = Threshold::Kind::wall;
      out.value = r;
      return out;
    }
  }
  if (roots.complete) return out;  // all roots rational, none in (0,1)
  // Sign isolation on (0,1) after splitting at the known rational roots.
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (const Rational& r : roots.roots)
    if (r > 0 && r < 1) cuts.push_back(r);
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational lo = cuts[i], hi = cuts[i + 1];
    int slo = sign(b.evaluate(lo)), shi = sign(b.evaluate(hi));
    if (slo == 0 || shi == 0 || slo == shi) continue;
    for (int iter = 0; iter < 64; ++iter) {  // exact bisection, fixed effort
      const Rational mid = (lo + hi) / 2;
      const int sm = sign(b.evaluate(mid));
      if (sm == 0) {
        out.kind = Threshold::Kind::wall;
        out.value = mid;
        return out;
      }
      if (sm == slo) lo = mid;
      else hi = mid;
    }
    out.kind = Threshold::Kind::isolated;
    out.lo = lo;
    out.hi = hi;
    return out;
  }
  return out;
}

Rational cone_beta(const Rational& beta_V, const Rational& ord_E_C, const Rational& c,
                   const Rational& t) {
  if (ord_E_C < 0) throw std::invalid_argument("ord_E(C) must be nonnegative");
  if (t <= 0) throw std::invalid_argument("t must be positive");
  if (c < 0 || c >= Rational(1, 2)) throw std::invalid_argument("c must lie in [0, 1/2)");
  const Rational m = std::min(Rational(1), t * ord_E_C);
  return t * beta_V + c * t * ord_E_C + (c + 1) / 3 - (4 * c + 1) / 3 * m;
}

void NormalizedVolCert::validate() const {
  if (A_E <= 0 || ord_E_S <= 0 || local_vol <= 0)
    throw std::invalid_argument(name + ": certificate entries must be positive");
  if (pair_vol_in_1mc.is_zero())
    throw std::invalid_argument(name + ": pair volume must be nonzero");
}

NormalizedVolVerdict normalized_vol_unstable(const NormalizedVolCert& cert, const Rational& c) {
  if (c < 0 || c >= 1) throw std::invalid_argument("c must lie in [0,1)");
  NormalizedVolVerdict v{};
  v.lhs = Rational(27, 64) * cert.pair_vol_in_1mc.evaluate(1 - c);
  const Rational a = cert.A_E - c * cert.ord_E_S;
  v.rhs = a * a * a * cert.local_vol;
  v.unstable_certified = v.lhs > v.rhs;
  return v;
}

Rational alpha_p1(const std::vector<Rational>& coeffs) {
  Rational sum = 0, mx = 0;
  for (const Rational& c : coeffs) {
    if (c < 0 || c >= 1) throw std::invalid_argument("coefficients must lie in [0,1)");
    sum += c;
    mx = std::max(mx, c);
  }
  if (sum >= 2) throw std::invalid_argument("not log Fano");
  return (1 - mx) / (2 - sum);
}

}  // namespace kmoduli
