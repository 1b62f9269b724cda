#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spincone/interval.hpp"
#include "spincone/poset.hpp"
#include "spincone/weights.hpp"

namespace spincone {

struct NotClutter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInInterval : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unordered vertex pair, stored sorted by the total order.
struct VertexPair {
  Vertex a;
  Vertex b;

  VertexPair() = default;
  VertexPair(Vertex x, Vertex y) {
    if (TotalLess{}(y, x)) std::swap(x, y);
    a = x;
    b = y;
  }
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend bool operator<(const VertexPair& l, const VertexPair& r) {
    if (auto c = total_cmp(l.a, r.a); c != 0) return c < 0;
    return total_cmp(l.b, r.b) < 0;
  }
};

// A quadric in the lambda variables: sum of coefficient * lambda^a lambda^b.
struct QuadricRelation {
  std::map<VertexPair, mpq_class> terms;
  int s_index = -1;  // 0..4: Pfaffian row for (1)..(5); 5..9: p.w row
  int mode_k = 0;    // loop mode

  bool zero() const { return terms.empty(); }
  void add(VertexPair p, const mpq_class& c);
  Weight weight() const;        // throws if not Aut-homogeneous
  bool is_homogeneous() const;  // all terms share one Aut weight
  // the unique incomparable term, if there is exactly one
  std::optional<VertexPair> unique_clutter() const;
};

// The ten defining quadrics of the cone, on the sixteen level-0 variables.
std::vector<QuadricRelation> cone_relations();

// Loop-mode relations restricted to an interval (coefficient of z^k in
// Gamma^s(lambda(z), lambda(z)) with absent variables killed).
std::vector<QuadricRelation> loop_relations(const Interval& iv);

// Weak chains: the standard monomial basis in one degree.
mpz_class standard_monomial_count(const Interval& iv, int degree);
std::vector<std::vector<Vertex>> standard_monomials(const Interval& iv,
                                                    int degree);

// All unordered clutter pairs inside the interval.
std::vector<VertexPair> clutter_pairs(const Interval& iv);

// Straightening data for one interval: for every clutter pair the unique
// relation  lambda^a lambda^b - sum(standard)  in reduced row echelon form.
class StraighteningTable {
 public:
  explicit StraighteningTable(const Interval& iv);

  const Interval& interval() const { return interval_; }

  // tail of the straightening: lambda^a lambda^b = sum coeff * pair
  const std::vector<std::pair<VertexPair, mpq_class>>& tail(
      const VertexPair& clutter) const;

  // full relation with the clutter monomial at coefficient one
  QuadricRelation relation(const VertexPair& clutter) const;

  const std::vector<VertexPair>& clutters() const { return clutters_; }

 private:
  Interval interval_;
  std::vector<VertexPair> clutters_;
  std::map<VertexPair, std::vector<std::pair<VertexPair, mpq_class>>> tails_;
};

// Hibi contraction: keep the clutter and the meet-join term only.
QuadricRelation hibi_contract(const QuadricRelation& r);

// h-exponent of a term (g, d) of the straightening of clutter (a, b):
// ell(g) + ell(d) - ell(a) - ell(b).
long h_exponent(const VertexPair& term, const VertexPair& clutter);

}  // namespace spincone
