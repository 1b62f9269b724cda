#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincone/poset.hpp"

namespace spincone {

struct NotComparable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoChain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite segment of the poset with optional open endpoints.  Elements are
// cached sorted by (rho, total order).
class Interval {
 public:
  Interval(Vertex lower, Vertex upper, bool open_lower = false,
           bool open_upper = false);

  Vertex lower() const { return lower_; }
  Vertex upper() const { return upper_; }
  bool open_lower() const { return open_lower_; }
  bool open_upper() const { return open_upper_; }

  const std::vector<Vertex>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(Vertex v) const;
  int index_of(Vertex v) const;  // -1 if absent

  // rho(upper) - rho(lower); for closed intervals this is the lattice rank.
  int rank() const { return rho(upper_) - rho(lower_); }

  bool closed() const { return !open_lower_ && !open_upper_; }

  std::string to_string() const;

 private:
  Vertex lower_;
  Vertex upper_;
  bool open_lower_;
  bool open_upper_;
  std::vector<Vertex> elements_;
};

// Parser for "[(0)^-1:(1)^2]" / "((45)^-1:(1)^0]" bracket syntax.
std::optional<Interval> parse_interval(std::string_view s);

// Core = elements sharing their rho level with another element; capacity =
// number of such shared levels.
std::vector<Vertex> core(const Interval& iv);
int capacity(const Interval& iv);

// Combinatorial Gorenstein classifier for closed intervals.
bool is_gorenstein(const Interval& iv);

// Join-irreducible subposet of the interval lattice, with the Birkhoff
// reconstruction check.
struct IrreduciblePoset {
  std::vector<Vertex> vertices;
  // leq_matrix[i*n+j] = vertices[i] <= vertices[j]
  std::vector<bool> leq_matrix;

  bool leq_at(int i, int j) const {
    return leq_matrix[static_cast<std::size_t>(i) * vertices.size() + j];
  }
};

IrreduciblePoset join_irreducibles(const Interval& iv);
bool is_pure(const IrreduciblePoset& p);
long count_order_ideals(const IrreduciblePoset& p);

// Alt = differences across each shared rho level, Reg = level sums; returned
// as index sets into `verts` (which can be any vertex list, e.g. N(c)).
struct RegAlt {
  // one entry per distinct rho value, ascending: the vertices at that level
  std::vector<std::vector<Vertex>> levels;

  int reg_size() const { return static_cast<int>(levels.size()); }
  int alt_size() const;  // number of levels with >= 2 vertices
};

RegAlt reg_alt(const std::vector<Vertex>& verts);

// Cover chain delta = delta_1 <. ... <. delta_n = delta_prime of M_1^+
// elements through Gorenstein intervals with top beta (P:seqint shape).
std::vector<Vertex> gorenstein_chain(Vertex delta, Vertex delta_prime,
                                     Vertex beta);

// All closed intervals with capacity exactly 2 whose lower endpoint level
// lies in [level_min, level_max].
std::vector<Interval> enumerate_cap2(int level_min, int level_max);

}  // namespace spincone
