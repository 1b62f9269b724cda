#include "spincone/character.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "spincone/hilbert.hpp"
#include "spincone/series.hpp"

namespace spincone {

Weight chi_of_set(const std::vector<Vertex>& elements) {
  std::map<int, std::vector<Vertex>> by_rho;
  for (Vertex v : elements) by_rho[rho(v)].push_back(v);
  Weight w;
  for (const auto& [r, vs] : by_rho) {
    if (vs.size() == 1) {
      w += generator_weight(vs[0]);  // complement of Core
    } else {
      for (Vertex v : vs)
        if (in_m(v)) w += generator_weight(v);  // L = M cap Core
    }
  }
  return w;
}

Weight chi(const Interval& iv) {
  if (!iv.closed() || !is_gorenstein(iv))
    throw NotGorenstein("chi requires a closed Gorenstein interval: " +
                        iv.to_string());
  return chi_of_set(iv.elements());
}

int a_invariant(const Interval& iv) { return chi(iv).a; }

Weight det_inverse_weight(const std::vector<Vertex>& elements) {
  Weight w;
  for (Vertex v : elements) w += generator_weight(v);
  return w;
}

ChiCoverReport chi_cover_consistency(Vertex delta, Vertex delta_prime,
                                     Vertex beta) {
  // delta <. delta'; both [delta,beta] and [delta',beta] classifiable
  assert(leq(delta_prime, beta));
  bool cover = false;
  for (Vertex w : covers_of(delta)) cover |= (w == delta_prime);
  assert(cover && "chi_cover_consistency requires a cover pair");

  Interval big(delta, beta);
  Interval small(delta_prime, beta);
  ChiCoverReport rep;
  rep.lhs = chi_of_set(big.elements());

  // semi-open element set (delta, beta]
  std::vector<Vertex> semiopen;
  for (Vertex v : big.elements())
    if (!(v == delta)) semiopen.push_back(v);

  int cl_below_count = m_class(delta, -1);  // |CL^-|, partners above
  if (cl_below_count >= 2) {
    // regular: (delta, beta] = [delta', beta]
    rep.kind = "regular";
    rep.rhs = generator_weight(delta) + chi_of_set(small.elements());
  } else if (semiopen.size() == small.elements().size()) {
    rep.kind = "regular-semiopen";
    rep.rhs = generator_weight(delta) + chi_of_set(semiopen);
  } else {
    // irregular: (delta, beta] = [delta', beta] u {delta''}
    rep.kind = "irregular";
    Vertex dpp{};
    bool found = false;
    for (Vertex v : semiopen) {
      if (small.contains(v)) continue;
      assert(!found && "more than one extra element in the irregular case");
      dpp = v;
      found = true;
    }
    assert(found && rho(dpp) == rho(delta_prime));
    rep.rhs = generator_weight(delta) - generator_weight(dpp) +
              chi_of_set(small.elements());
  }
  rep.holds = (rep.lhs == rep.rhs);

  // det C[delta,beta]^{-1}: exponents must match (|S|, sum u, sum spins)
  Weight det = det_inverse_weight(big.elements());
  Weight expect;
  expect.a = big.size();
  for (Vertex v : big.elements()) {
    expect.u += v.level;
    auto s = spin_weight(v.label);
    for (int i = 0; i < 5; ++i) expect.z[i] += s[i];
  }
  rep.det_identity = (det == expect);
  return rep;
}

namespace {

PalindromyResult palindromy_of_numerator(Poly1 num, int krull_dim) {
  PalindromyResult res;
  res.numerator = num;
  if (num.zero()) return res;
  int lo = num.min_deg();
  int hi = num.max_deg();
  // palindromic (with uniform sign +1) <=> coefficients read the same from
  // both ends; Stanley's criterion for a domain demands the + sign
  bool pal = true;
  for (int d = lo; d <= hi; ++d)
    if (num.coeff(d) != num.coeff(hi + lo - d)) pal = false;
  res.holds = pal;
  if (pal) res.p = krull_dim - hi - lo;
  return res;
}

}  // namespace

PalindromyResult stanley_palindromy(const Interval& iv, int extra_truncation) {
  int d = iv.rank() + 1;
  int t_max = iv.rank() + extra_truncation;
  GradedSeries series = hilbert_dp(iv, t_max, Refine::T);
  // numerator = series * (1-t)^d, truncated
  Poly1 one_minus_t = Poly1(1) - Poly1::monomial(1, 1);
  Poly1 factor = one_minus_t.pow(d);
  Poly1 num;
  for (int k = 0; k <= t_max; ++k) {
    mpq_class acc = 0;
    for (int j = std::max(0, k - t_max); j <= std::min(k, factor.max_deg());
         ++j)
      acc += factor.coeff(j) * series.coeff(k - j, 0);
    if (acc != 0) num.set_coeff(k, acc);
  }
  // the numerator degree is bounded by |interval| - d; everything above must
  // have cancelled or the truncation was insufficient
  int bound = iv.size() - d;
  if (!num.zero() && num.max_deg() > bound)
    throw std::runtime_error(
        "stanley_palindromy: numerator reconstruction did not terminate; "
        "increase truncation");
  return palindromy_of_numerator(num, d);
}

PalindromyResult stanley_palindromy(const Rat1& series, int krull_dim) {
  // series = num / den with den = (1-t)^dim * unit; clear the pole exactly
  Poly1 one_minus_t = Poly1(1) - Poly1::monomial(1, 1);
  Rat1 cleared = series;
  for (int i = 0; i < krull_dim; ++i)
    cleared = cleared * Rat1(one_minus_t, Poly1(1));
  if (!(cleared.den() == Poly1(1)))
    throw std::runtime_error(
        "stanley_palindromy: series has a pole of order > krull_dim at t=1 "
        "or extra poles");
  return palindromy_of_numerator(cleared.num(), krull_dim);
}

}  // namespace spincone
