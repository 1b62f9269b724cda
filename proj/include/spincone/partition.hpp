#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincone/character.hpp"
#include "spincone/interval.hpp"
#include "spincone/polynomial.hpp"
#include "spincone/series.hpp"

namespace spincone {

struct BadIntervalForIdeal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class IdealKind { Zero, A, APrime, B, F, FPrime, M, P };

std::string to_string(IdealKind k);
std::optional<IdealKind> ideal_from_string(std::string_view s);

// N(kind), s = |N|, s' per the homological shift table, and the chi
// exponents of the generating set.
struct IdealDescriptor {
  IdealKind kind;
  std::vector<Vertex> n_set;
  int s = 0;
  int s_prime = 0;

  Weight chi_exponents() const;  // chi of the n_set (L cup Core-complement)
};

IdealDescriptor ideal_descriptor(const Interval& iv, IdealKind kind);

// --------------------------------------------------------------- standard Z

// Z^bare for [(0)^{n_lo}, (1)^{n_hi}]: (-1)^{|[delta,(1)^{-1}]|} A(t,q).
// Requires n_lo <= -1 <= n_hi.
Rat2 z_bare_standard(int n_lo, int n_hi);

// Renormalized Z_a = A_N^{N'}(t,q) t^{4-4N} q^{-2+4N-2N^2}, N = n_lo < 0
// (the chi[(0)^N,(1)^{-1}] twist).
Rat2 z_renorm_standard(int n_lo, int n_hi);
Weight renorm_twist(int n_lo);  // chi[(0)^{n_lo}, (1)^{-1}]

// The sigma/tau-image interval used by the functional equations, computed
// from the poset symmetries rather than assumed.
Interval star_image(const Interval& iv);   // [tau^{-1}sigma(up), tau^{-1}sigma(lo)]
Interval sigma_image(const Interval& iv);  // [sigma(up), sigma(lo)]

struct EquationCheck {
  bool holds = false;
  bool image_is_self = false;  // the image interval equals the input
  Rat2 lhs, rhs;
  Rat2 defect;  // lhs - rhs
};

// Z_a[(0)^{-N-1},(1)^N](t,q) == -t^{-4} q^2 Z_a[image](q/t, q).
EquationCheck verify_star_duality(int N);
// Z_a[(0)^{-N},(1)^N](t,q) == -t^{-8} Z_a[image](1/t, q).
EquationCheck verify_field_antifield(int N);
// Negative-control variant with an arbitrary monomial twist  sign t^a q^b.
EquationCheck verify_star_duality_twisted(int N, int sign, int t_exp, int q_exp);

// ------------------------------------------------------------------- ZBV

// ZBV^bare = Z^bare * LambdaS_+(-t, q) at z = 1.
Rat2 zbv_bare_standard(int n_lo, int n_hi);

struct BvReport {
  bool holds = false;
  bool ratio_is_monomial = false;
  int sign = 0;      // ZBV(t,q) = sign * t^{t_exp} q^{q_exp} ZBV(1/t, 1/q)
  int t_exp = 0;
  int q_exp = 0;
  int expected_sign = 0;  // from the character bookkeeping
  int expected_t = 0;
  int expected_q = 0;
};

// Duality of ZBV on the self-dual family [(0)^{-N},(1)^N].
BvReport verify_bv_duality(int N);

// --------------------------------------------------------------- expansions

// q-directed slices of the renormalized Z on [(0)^{-N},(1)^N].
std::map<int, Rat1> z_q_slices(int N, int q_min, int q_max);

struct StabilizationReport {
  bool stabilized = false;
  int n_at_stabilization = -1;
  int n_budget = 0;
  // per requested q order: the stable t-window coefficients [t_lo..t_depth]
  std::map<int, std::vector<mpq_class>> slices;
  int t_lo = 0;
};

StabilizationReport stabilization_scan(const std::vector<int>& q_orders,
                                       int t_depth, int n_budget = 6);

// Exchange identity between Z^bare_a and Z^bare_b at z = 1: solves for the
// monomial M with Z^bare_a(t,q) = M(t,q) * Z^bare_b(1/t, 1/q).
struct ExchangeReport {
  bool ratio_is_monomial = false;
  int sign = 0;
  int t_exp = 0;
  int q_exp = 0;
};
ExchangeReport z_bare_exchange(int n_lo, int n_hi);

}  // namespace spincone
