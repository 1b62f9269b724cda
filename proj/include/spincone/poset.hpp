#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spincone/weights.hpp"

namespace spincone {

// The sixteen spinor labels.  Enum order is the canonical listing used for
// deterministic iteration; it is not the poset order.
enum class Label : std::uint8_t {
  L0 = 0,
  L12,
  L13,
  L14,
  L15,
  L23,
  L24,
  L25,
  L34,
  L35,
  L45,
  L1,
  L2,
  L3,
  L4,
  L5,
};

inline constexpr int kNumLabels = 16;

constexpr int label_index(Label l) { return static_cast<int>(l); }
Label label_from_index(int i);
std::string_view label_name(Label l);  // "(0)", "(12)", ..., "(5)"
std::optional<Label> label_from_name(std::string_view s);

// A vertex of the infinite graded poset: a label decorated with a loop level.
struct Vertex {
  Label label{Label::L0};
  int level = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const {
    return std::hash<int>()(label_index(v.label) * 1000003 + v.level * 31);
  }
};

struct Point {
  long x = 0;
  long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Rank function: rho((0)^r) = 8r, ..., rho((1)^r) = 8r + 10.
int rho(Vertex v);

// Loop level u(beta^r) = r.
int level_u(Vertex v);

// Planar embedding with period vector (0,16); ell = squared norm.
Point f_embed(Vertex v);
long ell(Vertex v);

// Shift beta^r -> beta^{r+k} and the central involution (f-negation).
Vertex tau(Vertex v, int k = 1);
Vertex sigma(Vertex v);

// Cover relations, read off one period of the Hasse diagram.
std::vector<Vertex> covers_of(Vertex v);    // upper covers
std::vector<Vertex> cocovers_of(Vertex v);  // lower covers

// The two vertices with the given rho value, sorted by total_cmp.
std::array<Vertex, 2> vertices_at_rho(int r);

// Order relation and lattice operations (always defined).
bool leq(Vertex a, Vertex b);
Vertex meet(Vertex a, Vertex b);
Vertex join(Vertex a, Vertex b);

bool is_clutter(Vertex a, Vertex b);

// Clutter partners: sign = +1 gives CL^+ (partners with rho <= rho(v)),
// sign = -1 gives CL^- (partners with rho >= rho(v)).  Result is totally
// ordered by the poset order and has size 1, 2 or 3.
std::vector<Vertex> cl_set(Vertex v, int sign);

// |CL^sign(v)|, and membership in M = M_1^+ cap M_1^-.
int m_class(Vertex v, int sign);
bool in_m(Vertex v);

// The total order refining <=: rho first, then level descending, then the
// canonical label listing.
std::strong_ordering total_cmp(Vertex a, Vertex b);

struct TotalLess {
  bool operator()(const Vertex& a, const Vertex& b) const {
    return total_cmp(a, b) == std::strong_ordering::less;
  }
};

// Spin-torus weight of a label, doubled (det^{+-1/2} contributes +-1 per
// coordinate).  Generator weight of lambda^{beta^l} is (1, l, spin).
std::array<int, 5> spin_weight(Label l);
Weight generator_weight(Vertex v);

// Text syntax: "(13)^0", "(0)^-2".  Printer and parser round-trip exactly.
std::string to_string(Vertex v);
std::optional<Vertex> parse_vertex(std::string_view s);

// Raw one-period tables, exposed for fixture hashing and tests.
struct CoverClass {
  Label lower;
  Label upper;
  int upper_level_offset;  // 0 or 1
};
const std::array<CoverClass, 24>& cover_table();
const std::array<Point, 16>& f_table();
const std::array<int, 16>& rho_table();

}  // namespace spincone
