#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "spincone/interval.hpp"
#include "spincone/relations.hpp"
#include "spincone/weights.hpp"

namespace spincone {

// A monomial in the interval's generators: element indices sorted by the
// total order.  Standard monomials are exactly the weak chains.
using Chain = std::vector<std::uint8_t>;

std::string chain_to_string(const Interval& iv, const Chain& m);

// Shared straightening-based rewriting into the standard monomial basis.
class Rewriter {
 public:
  explicit Rewriter(const Interval& iv);

  const Interval& interval() const { return interval_; }

  bool is_standard(const Chain& m) const;
  Weight chain_weight(const Chain& m) const;

  // normal form of an arbitrary monomial as a standard-monomial combination
  const std::map<Chain, mpq_class>& normal_form(const Chain& m);

  // product of a generator with a chain (chain need not be standard)
  std::map<Chain, mpq_class> multiply(int gen_index, const Chain& m);

 private:
  Interval interval_;
  StraighteningTable table_;
  // tails indexed by element-index pairs for fast lookup
  std::map<std::pair<int, int>,
           std::vector<std::pair<std::pair<int, int>, mpq_class>>>
      tails_;
  std::vector<std::vector<char>> le_;
  std::unordered_map<std::string, std::map<Chain, mpq_class>> memo_;
};

// Indexed graded components with cached generator-multiplication columns.
class GradedComponentModel {
 public:
  GradedComponentModel(const Interval& iv, int max_degree);

  const Interval& interval() const { return rewriter_.interval(); }
  int max_degree() const { return max_degree_; }

  long dim(int d) const;
  const std::vector<Chain>& basis(int d) const;
  long index_of(int d, const Chain& m) const;
  Weight weight_of(int d, long index) const;

  // column of multiplication by generator g: basis(d)[j] -> basis(d+1)
  using Column = std::vector<std::pair<long, mpq_class>>;
  const Column& multiplication(int gen_index, int d, long j);

  Rewriter& rewriter() { return rewriter_; }

  // multiplication matrices commute as maps d -> d+2 (fixture check)
  bool multiplication_commutes(int d);

 private:
  void ensure_layer(int gen_index, int d);
  Rewriter rewriter_;
  int max_degree_;
  std::vector<std::vector<Chain>> bases_;
  std::vector<std::map<Chain, long>> index_;
  std::vector<std::vector<Weight>> weights_;
  // columns_[g][d][j]
  std::vector<std::vector<std::vector<Column>>> columns_;
  std::vector<std::vector<char>> layer_done_;
};

// Standard monomials with a prescribed full Aut-weight (weight.a = degree).
std::vector<Chain> standard_monomials_with_weight(const Interval& iv,
                                                  const Weight& w);

}  // namespace spincone
