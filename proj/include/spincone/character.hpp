#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spincone/interval.hpp"
#include "spincone/polynomial.hpp"
#include "spincone/weights.hpp"

namespace spincone {

struct NotGorenstein : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// chi as a monomial character t^a q^u z^r, stored through its exponents.
// For a Gorenstein interval chi = prod of generator weights over
// L cup (complement of Core), L = M cap Core.
Weight chi_of_set(const std::vector<Vertex>& elements);
Weight chi(const Interval& iv);  // throws NotGorenstein

// Positive a-invariant (socle of top local cohomology sits at -a).
int a_invariant(const Interval& iv);

// Product of all generator weights of a set: the det C[...]^{-1} character.
Weight det_inverse_weight(const std::vector<Vertex>& elements);

// Report for the cover-compatibility identities of chi.
struct ChiCoverReport {
  std::string kind;       // "regular", "regular-semiopen" or "irregular"
  bool holds = false;     // the applicable identity verified exactly
  Weight lhs;             // chi[delta, beta]
  Weight rhs;             // predicted from chi[delta', beta] and weights
  bool det_identity = false;  // det C[delta,beta]^{-1} == prod v-hat
};

ChiCoverReport chi_cover_consistency(Vertex delta, Vertex delta_prime,
                                     Vertex beta);

// Stanley palindromy of the t-graded Hilbert series.
struct PalindromyResult {
  bool holds = false;
  int p = 0;          // exponent in R(1/t) = (-1)^d t^p R(t) when holds
  Poly1 numerator;    // reconstructed numerator against (1-t)^{rank+1}
};

// From the multichain series (numerator reconstruction, default slack 12).
PalindromyResult stanley_palindromy(const Interval& iv, int extra_truncation = 12);
// From an explicit univariate rational form.
PalindromyResult stanley_palindromy(const Rat1& series, int krull_dim);

}  // namespace spincone
