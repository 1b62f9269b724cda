#include "spincone/poset.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <stdexcept>

namespace spincone {

namespace {

constexpr std::array<std::string_view, 16> kLabelNames = {
    "(0)",  "(12)", "(13)", "(14)", "(15)", "(23)", "(24)", "(25)",
    "(34)", "(35)", "(45)", "(1)",  "(2)",  "(3)",  "(4)",  "(5)"};

// rho(beta^0); the full rank function is rho(beta^r) = rho(beta^0) + 8r.
constexpr std::array<int, 16> kRho = {0, 1, 2, 3, 4, 3, 4, 5,
                                      5, 6, 7, 10, 9, 8, 7, 6};

// One period of the Hasse diagram, anchored at level 0 lower vertices.
constexpr std::array<CoverClass, 24> kCovers = {{
    {Label::L0, Label::L12, 0},  {Label::L12, Label::L13, 0},
    {Label::L13, Label::L14, 0}, {Label::L13, Label::L23, 0},
    {Label::L14, Label::L15, 0}, {Label::L14, Label::L24, 0},
    {Label::L23, Label::L24, 0}, {Label::L15, Label::L25, 0},
    {Label::L24, Label::L25, 0}, {Label::L24, Label::L34, 0},
    {Label::L25, Label::L35, 0}, {Label::L34, Label::L35, 0},
    {Label::L34, Label::L5, 0},  {Label::L35, Label::L45, 0},
    {Label::L35, Label::L4, 0},  {Label::L5, Label::L4, 0},
    {Label::L45, Label::L3, 0},  {Label::L45, Label::L0, 1},
    {Label::L4, Label::L3, 0},   {Label::L3, Label::L2, 0},
    {Label::L3, Label::L12, 1},  {Label::L2, Label::L1, 0},
    {Label::L2, Label::L13, 1},  {Label::L1, Label::L23, 1},
}};

// Planar embedding at level 0; tau adds the period vector (0,16).
constexpr std::array<Point, 16> kF = {{
    {-4, -10},  // (0)
    {-2, -8},   // (12)
    {0, -6},    // (13)
    {-2, -4},   // (14)
    {-4, -2},   // (15)
    {2, -4},    // (23)
    {0, -2},    // (24)
    {-2, 0},    // (25)
    {2, 0},     // (34)
    {0, 2},     // (35)
    {-2, 4},    // (45)
    {4, 10},    // (1)
    {2, 8},     // (2)
    {0, 6},     // (3)
    {2, 4},     // (4)
    {4, 2},     // (5)
}};

// Doubled spin-torus weights: (0) = det^{-1/2}, (ij) = det^{-1/2} z_i z_j,
// (k) = det^{1/2} / z_k.
constexpr std::array<std::array<int, 5>, 16> kSpin = {{
    {-1, -1, -1, -1, -1},  // (0)
    {1, 1, -1, -1, -1},    // (12)
    {1, -1, 1, -1, -1},    // (13)
    {1, -1, -1, 1, -1},    // (14)
    {1, -1, -1, -1, 1},    // (15)
    {-1, 1, 1, -1, -1},    // (23)
    {-1, 1, -1, 1, -1},    // (24)
    {-1, 1, -1, -1, 1},    // (25)
    {-1, -1, 1, 1, -1},    // (34)
    {-1, -1, 1, -1, 1},    // (35)
    {-1, -1, -1, 1, 1},    // (45)
    {-1, 1, 1, 1, 1},      // (1)
    {1, -1, 1, 1, 1},      // (2)
    {1, 1, -1, 1, 1},      // (3)
    {1, 1, 1, -1, 1},      // (4)
    {1, 1, 1, 1, -1},      // (5)
}};

struct AdjacencyTables {
  // up[l]: upper covers of l^0; down[l]: lower covers of l^0.
  std::array<std::vector<Vertex>, 16> up;
  std::array<std::vector<Vertex>, 16> down;
  // the two labels (with level offsets) at each rho residue 0..7, sorted by
  // total_cmp within the residue
  std::array<std::array<Vertex, 2>, 8> at_rho;
};

const AdjacencyTables& tables() {
  static const AdjacencyTables t = [] {
    AdjacencyTables t;
    for (const CoverClass& c : kCovers) {
      t.up[label_index(c.lower)].push_back(
          Vertex{c.upper, c.upper_level_offset});
      t.down[label_index(c.upper)].push_back(
          Vertex{c.lower, -c.upper_level_offset});
    }
    for (int res = 0; res < 8; ++res) {
      std::vector<Vertex> vs;
      for (int l = 0; l < 16; ++l) {
        int base = kRho[l];
        // solve rho(label^k) = 8k + base == res (mod anything): collect those
        // with 8k + base == res for some integer k
        if ((res - base) % 8 == 0)
          vs.push_back(Vertex{label_from_index(l), (res - base) / 8});
      }
      assert(vs.size() == 2);
      std::sort(vs.begin(), vs.end(), TotalLess{});
      t.at_rho[res] = {vs[0], vs[1]};
    }
    return t;
  }();
  return t;
}

}  // namespace

Label label_from_index(int i) {
  assert(i >= 0 && i < 16);
  return static_cast<Label>(i);
}

std::string_view label_name(Label l) { return kLabelNames[label_index(l)]; }

std::optional<Label> label_from_name(std::string_view s) {
  for (int i = 0; i < 16; ++i)
    if (kLabelNames[i] == s) return label_from_index(i);
  return std::nullopt;
}

const std::array<CoverClass, 24>& cover_table() { return kCovers; }
const std::array<Point, 16>& f_table() { return kF; }
const std::array<int, 16>& rho_table() { return kRho; }

int rho(Vertex v) { return kRho[label_index(v.label)] + 8 * v.level; }

int level_u(Vertex v) { return v.level; }

Point f_embed(Vertex v) {
  Point p = kF[label_index(v.label)];
  p.y += 16L * v.level;
  return p;
}

long ell(Vertex v) {
  Point p = f_embed(v);
  return p.x * p.x + p.y * p.y;
}

Vertex tau(Vertex v, int k) { return Vertex{v.label, v.level + k}; }

Vertex sigma(Vertex v) {
  Point p = f_embed(v);
  Point neg{-p.x, -p.y};
  for (int l = 0; l < 16; ++l) {
    if (kF[l].x != neg.x) continue;
    long dy = neg.y - kF[l].y;
    if (dy % 16 == 0)
      return Vertex{label_from_index(l), static_cast<int>(dy / 16)};
  }
  throw std::logic_error("sigma: embedding table is not centrally symmetric");
}

std::vector<Vertex> covers_of(Vertex v) {
  std::vector<Vertex> r = tables().up[label_index(v.label)];
  for (Vertex& w : r) w.level += v.level;
  std::sort(r.begin(), r.end(), TotalLess{});
  return r;
}

std::vector<Vertex> cocovers_of(Vertex v) {
  std::vector<Vertex> r = tables().down[label_index(v.label)];
  for (Vertex& w : r) w.level += v.level;
  std::sort(r.begin(), r.end(), TotalLess{});
  return r;
}

std::array<Vertex, 2> vertices_at_rho(int r) {
  int res = ((r % 8) + 8) % 8;
  int shift = (r - res) / 8;
  std::array<Vertex, 2> vs = tables().at_rho[res];
  for (Vertex& v : vs) v.level += shift;
  return vs;
}

namespace {

// Frontier of the down-set (or up-set) of v restricted to one rho level.
// Every rho level of the ambient poset has exactly two vertices, so a
// frontier always has size 1 or 2.
struct Frontier {
  Vertex a;
  Vertex b;  // valid iff two
  bool two = false;

  bool contains(Vertex v) const { return v == a || (two && v == b); }
};

Frontier step_down(const Frontier& f) {
  Frontier r;
  bool have = false;
  auto add = [&r, &have](Vertex w) {
    if (!have) {
      r.a = w;
      have = true;
    } else if (!(w == r.a)) {
      r.b = w;
      r.two = true;
    }
  };
  for (Vertex w : cocovers_of(f.a)) add(w);
  if (f.two)
    for (Vertex w : cocovers_of(f.b)) add(w);
  assert(have);
  return r;
}

Frontier step_up(const Frontier& f) {
  Frontier r;
  bool have = false;
  auto add = [&r, &have](Vertex w) {
    if (!have) {
      r.a = w;
      have = true;
    } else if (!(w == r.a)) {
      r.b = w;
      r.two = true;
    }
  };
  for (Vertex w : covers_of(f.a)) add(w);
  if (f.two)
    for (Vertex w : covers_of(f.b)) add(w);
  assert(have);
  return r;
}

}  // namespace

bool leq(Vertex a, Vertex b) {
  int ra = rho(a), rb = rho(b);
  if (ra > rb) return false;
  if (ra == rb) return a == b;
  Frontier f{b, b, false};
  for (int r = rb; r > ra; --r) f = step_down(f);
  return f.contains(a);
}

Vertex meet(Vertex a, Vertex b) {
  if (leq(a, b)) return a;
  if (leq(b, a)) return b;
  int ra = rho(a), rb = rho(b);
  int r = std::min(ra, rb);
  Frontier fa{a, a, false};
  Frontier fb{b, b, false};
  for (int s = ra; s > r; --s) fa = step_down(fa);
  for (int s = rb; s > r; --s) fb = step_down(fb);
  for (;; --r) {
    bool ia = fb.contains(fa.a);
    bool ib = fa.two && fb.contains(fa.b);
    if (ia || ib) {
      assert(!(ia && ib) && "meet is not unique");
      return ia ? fa.a : fa.b;
    }
    fa = step_down(fa);
    fb = step_down(fb);
  }
}

Vertex join(Vertex a, Vertex b) {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  int ra = rho(a), rb = rho(b);
  int r = std::max(ra, rb);
  Frontier fa{a, a, false};
  Frontier fb{b, b, false};
  for (int s = ra; s < r; ++s) fa = step_up(fa);
  for (int s = rb; s < r; ++s) fb = step_up(fb);
  for (;; ++r) {
    bool ia = fb.contains(fa.a);
    bool ib = fa.two && fb.contains(fa.b);
    if (ia || ib) {
      assert(!(ia && ib) && "join is not unique");
      return ia ? fa.a : fa.b;
    }
    fa = step_up(fa);
    fb = step_up(fb);
  }
}

bool is_clutter(Vertex a, Vertex b) {
  if (a == b) return false;
  return !leq(a, b) && !leq(b, a);
}

std::vector<Vertex> cl_set(Vertex v, int sign) {
  // Clutter partners sit within two rho levels of v (checked exhaustively in
  // the test suite), so a window of width four is safely conservative.
  std::vector<Vertex> out;
  int rv = rho(v);
  int lo = sign > 0 ? rv - 4 : rv;
  int hi = sign > 0 ? rv : rv + 4;
  for (int r = lo; r <= hi; ++r)
    for (Vertex w : vertices_at_rho(r))
      if (is_clutter(v, w)) out.push_back(w);
  std::sort(out.begin(), out.end(), TotalLess{});
  return out;
}

int m_class(Vertex v, int sign) {
  return static_cast<int>(cl_set(v, sign).size());
}

bool in_m(Vertex v) {
  return v.label == Label::L3 || v.label == Label::L13 ||
         v.label == Label::L24 || v.label == Label::L35;
}

std::strong_ordering total_cmp(Vertex a, Vertex b) {
  if (int ra = rho(a), rb = rho(b); ra != rb) return ra <=> rb;
  if (a.level != b.level) return b.level <=> a.level;  // higher level first
  return label_index(a.label) <=> label_index(b.label);
}

std::array<int, 5> spin_weight(Label l) { return kSpin[label_index(l)]; }

Weight generator_weight(Vertex v) {
  Weight w;
  w.a = 1;
  w.u = v.level;
  w.z = spin_weight(v.label);
  return w;
}

std::string to_string(Vertex v) {
  std::string s(label_name(v.label));
  s += '^';
  s += std::to_string(v.level);
  return s;
}

std::optional<Vertex> parse_vertex(std::string_view s) {
  auto caret = s.find('^');
  if (caret == std::string_view::npos) return std::nullopt;
  auto label = label_from_name(s.substr(0, caret));
  if (!label) return std::nullopt;
  std::string_view num = s.substr(caret + 1);
  if (num.empty()) return std::nullopt;
  int level = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), level);
  if (ec != std::errc{} || ptr != num.data() + num.size()) return std::nullopt;
  return Vertex{*label, level};
}

}  // namespace spincone
