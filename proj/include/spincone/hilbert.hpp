#pragma once

#include <map>

#include "spincone/interval.hpp"
#include "spincone/polynomial.hpp"
#include "spincone/series.hpp"
#include "spincone/weights.hpp"

namespace spincone {

enum class Refine { T, TQ, TQZ };

// Multigraded Hilbert series by multichain counting.  Coefficient of t^d is
// the number of weak d-chains, optionally refined by the T-weight q and the
// doubled spin-torus weight.
GradedSeries hilbert_dp(const Interval& iv, int t_max, Refine refine = Refine::TQ);

// Fully refined slice dimensions: weight -> dimension of the degree-d graded
// component (a = d fixed by the caller).
std::map<Weight, mpz_class> hilbert_weights(const Interval& iv, int degree);

// Closed forms of the two base series and the transfer-matrix recursion.
Rat2 hilbert_b01();  // B_0^1 = [(0)^0,(0)^1]
Rat2 hilbert_a00();  // A_0^0 = [(0)^0,(1)^0]

// K(t,q) transfer matrix entries, transcribed once as fixtures.
struct KMatrix {
  Rat2 k11, k12, k21, k22;
};
KMatrix k_matrix(const Rat2& t_arg);  // K evaluated at (t_arg, q)

// A_0^r and B_0^{r+1} through the recursion; then
// A_N^{N'}(t,q) = A_0^{N'-N}(t q^N, q).
Rat2 hilbert_a0r(int r);
Rat2 hilbert_b0r(int r);  // B_0^r for r >= 1
Rat2 hilbert_standard(int n_lo, int n_hi);  // A_{n_lo}^{n_hi}

// FNV-1a hash of the K-matrix fixture (manifest/checksum tests).
unsigned long long k_matrix_fixture_hash();

// Quadratic-dual dimension counts.
// Clutter paths: words (a_1..a_d) with consecutive pairs incomparable.
mpz_class clutter_path_count(const Interval& iv, int degree);
// Full Koszul-dual dimension: normal words where consecutive comparable
// letters must strictly increase in the total order (anticommutation normal
// form); consecutive clutter letters are free.
mpz_class koszul_dual_dim(const Interval& iv, int degree);
// Verifies A(t) * Adual(-t) == 1 modulo t^{t_max+1}.
bool koszul_duality_check(const Interval& iv, int t_max);

// Per-(a,u) clutter-path dimensions for boundedness experiments.
std::map<std::pair<int, int>, mpz_class> clutter_path_weights(
    const Interval& iv, int degree);

// Exterior-algebra character of the interval's spinor variables at z = 1:
// the bivariate polynomial prod(1 + t q^{u(alpha)}).
Poly2 exterior_character(const Interval& iv);

}  // namespace spincone
