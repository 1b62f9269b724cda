#pragma once

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <vector>

#include "spincone/interval.hpp"
#include "spincone/multmodel.hpp"
#include "spincone/partition.hpp"
#include "spincone/polynomial.hpp"

namespace spincone {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ Koszul / Tor

struct BettiTable {
  // (homological degree i, internal degree j) -> dimension; zeros omitted
  std::map<std::pair<int, int>, long> entries;

  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

// Exact ranks of the Koszul differentials on A_j tensor Lambda^i through
// internal degree j_max, sliced by the full Aut weight.
BettiTable koszul_betti(const Interval& iv, int j_max, int jobs = 1);

// b_{i,j} == b_{d-i, p-j} with (d, p) the table's top corner.
bool duality_check(const BettiTable& bt, bool gorenstein);

// Alternating-sum identity sum_i (-1)^i b_{i,j} t^j == (1-t)^{|iv|} A(t).
bool betti_euler_check(const Interval& iv, const BettiTable& bt, int j_max);

// ------------------------------------------------- top local cohomology

// Graded dual dims of the top local cohomology: degree -> dimension, for
// degrees -a, -a-1, ..., -a-count+1 (a the positive a-invariant).
std::map<int, mpz_class> top_local_cohomology_dims(const Interval& iv,
                                                   int count);

// -------------------------------------------- Koszul-limit local cohomology

struct LocalCohomologyReport {
  // (i, t-degree, u) -> stabilized dimension (zeros omitted)
  std::map<std::tuple<int, int, int>, long> dims;
  // weights (t, u) whose dimensions did not stabilize within n_max
  std::vector<std::tuple<int, int, int>> unstable;
  int n_max = 0;
  int s = 0;  // number of Koszul generators
  // Euler characteristic per (t, u) from the stabilized dims
  std::map<std::pair<int, int>, long> euler;
};

// H^i(K(A, {lambda^n})) per (t, u) weight for the ideal's generating set,
// scanned until two consecutive n agree.  t in [t_lo, t_hi], |u| <= u_max.
LocalCohomologyReport local_cohomology_weights(const Interval& iv,
                                               IdealKind ideal, int u_max,
                                               int n_max, int t_lo, int t_hi);

// -------------------------------------------------------------- bicomplex

using LinearForm = std::vector<std::pair<Vertex, mpq_class>>;

struct BicomplexPage {
  // (i, j, internal degree) -> E^1 dimension
  std::map<std::tuple<int, int, int>, long> first_page;
  // internal degree -> total-complex cohomology dims by total index
  std::map<int, std::vector<long>> total;
};

BicomplexPage bicomplex_split(const Interval& iv,
                              const std::vector<LinearForm>& part1,
                              const std::vector<LinearForm>& part2,
                              int max_internal_degree);

}  // namespace spincone
