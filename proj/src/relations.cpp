#include "spincone/relations.hpp"

#include <algorithm>
#include <cassert>

#include "spincone/linalg.hpp"

namespace spincone {

void QuadricRelation::add(VertexPair p, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Weight QuadricRelation::weight() const {
  assert(!terms.empty());
  const VertexPair& p = terms.begin()->first;
  return generator_weight(p.a) + generator_weight(p.b);
}

bool QuadricRelation::is_homogeneous() const {
  if (terms.empty()) return true;
  Weight w = weight();
  for (const auto& [p, c] : terms)
    if (!(generator_weight(p.a) + generator_weight(p.b) == w)) return false;
  return true;
}

std::optional<VertexPair> QuadricRelation::unique_clutter() const {
  std::optional<VertexPair> found;
  for (const auto& [p, c] : terms) {
    if (!is_clutter(p.a, p.b)) continue;
    if (found) return std::nullopt;
    found = p;
  }
  return found;
}

namespace {

Vertex w_var(int i, int j, int level = 0) {
  // the (ij) label for 1 <= i < j <= 5
  static constexpr Label table[5][5] = {
      {Label::L0, Label::L12, Label::L13, Label::L14, Label::L15},
      {Label::L0, Label::L0, Label::L23, Label::L24, Label::L25},
      {Label::L0, Label::L0, Label::L0, Label::L34, Label::L35},
      {Label::L0, Label::L0, Label::L0, Label::L0, Label::L45},
      {Label::L0, Label::L0, Label::L0, Label::L0, Label::L0}};
  assert(i >= 1 && j <= 5 && i < j);
  return Vertex{table[i - 1][j - 1], level};
}

Vertex p_var(int i, int level = 0) {
  static constexpr Label table[5] = {Label::L1, Label::L2, Label::L3,
                                     Label::L4, Label::L5};
  return Vertex{table[i - 1], level};
}

Vertex lam_var(int level = 0) { return Vertex{Label::L0, level}; }

}  // namespace

std::vector<QuadricRelation> cone_relations() {
  std::vector<QuadricRelation> out;
  // lambda p_i = (-1)^{i+1} Pf_i(w), the Pfaffian-kernel sign convention;
  // validated by the degree <= 4 dimension test
  for (int i = 1; i <= 5; ++i) {
    QuadricRelation r;
    r.s_index = i - 1;
    r.add(VertexPair(lam_var(), p_var(i)), 1);
    int comp[4];
    int n = 0;
    for (int j = 1; j <= 5; ++j)
      if (j != i) comp[n++] = j;
    int sign = (i % 2 == 1) ? 1 : -1;  // (-1)^{i+1}
    // Pf = w_{jk} w_{lm} - w_{jl} w_{km} + w_{jm} w_{kl}
    r.add(VertexPair(w_var(comp[0], comp[1]), w_var(comp[2], comp[3])),
          -sign);
    r.add(VertexPair(w_var(comp[0], comp[2]), w_var(comp[1], comp[3])), sign);
    r.add(VertexPair(w_var(comp[0], comp[3]), w_var(comp[1], comp[2])),
          -sign);
    out.push_back(std::move(r));
  }
  // sum_j p_j w_{ji} = 0 with w_{ji} = -w_{ij} for j > i
  for (int i = 1; i <= 5; ++i) {
    QuadricRelation r;
    r.s_index = 4 + i;
    for (int j = 1; j <= 5; ++j) {
      if (j == i) continue;
      if (j < i)
        r.add(VertexPair(p_var(j), w_var(j, i)), 1);
      else
        r.add(VertexPair(p_var(j), w_var(i, j)), -1);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<QuadricRelation> loop_relations(const Interval& iv) {
  int n_lo = iv.elements().front().level;
  int n_hi = iv.elements().front().level;
  for (Vertex v : iv.elements()) {
    n_lo = std::min(n_lo, v.level);
    n_hi = std::max(n_hi, v.level);
  }
  std::vector<QuadricRelation> base = cone_relations();
  std::vector<QuadricRelation> out;
  for (int k = 2 * n_lo; k <= 2 * n_hi; ++k) {
    for (const QuadricRelation& r0 : base) {
      QuadricRelation r;
      r.s_index = r0.s_index;
      r.mode_k = k;
      for (const auto& [p, c] : r0.terms) {
        for (int l = n_lo; l <= n_hi; ++l) {
          int lp = k - l;
          if (lp < n_lo || lp > n_hi) continue;
          Vertex a{p.a.label, l};
          Vertex b{p.b.label, lp};
          if (!iv.contains(a) || !iv.contains(b)) continue;
          if (p.a.label == p.b.label) {
            // square term: the double sum hits {A^l, A^lp} twice when l != lp
            if (l > lp) continue;
            r.add(VertexPair(a, b), l == lp ? c : 2 * c);
          } else {
            r.add(VertexPair(a, b), c);
          }
        }
      }
      if (!r.zero()) out.push_back(std::move(r));
    }
  }
  return out;
}

mpz_class standard_monomial_count(const Interval& iv, int degree) {
  if (degree == 0) return 1;
  // weak chains: dp over elements in a linear extension
  const auto& el = iv.elements();
  int n = static_cast<int>(el.size());
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) le[i][j] = leq(el[i], el[j]);
  std::vector<mpz_class> cur(n, 1);  // chains of length 1 ending at i
  for (int d = 2; d <= degree; ++d) {
    std::vector<mpz_class> next(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (le[i][j]) next[j] += cur[i];
    cur = std::move(next);
  }
  mpz_class total = 0;
  for (const auto& c : cur) total += c;
  return total;
}

std::vector<std::vector<Vertex>> standard_monomials(const Interval& iv,
                                                    int degree) {
  std::vector<std::vector<Vertex>> out;
  if (degree == 0) {
    out.push_back({});
    return out;
  }
  const auto& el = iv.elements();
  int n = static_cast<int>(el.size());
  std::vector<Vertex> chain;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(chain);
      return;
    }
    for (int i = start; i < n; ++i) {
      if (!chain.empty() && !leq(chain.back(), el[i])) continue;
      chain.push_back(el[i]);
      self(self, i, remaining - 1);
      chain.pop_back();
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<VertexPair> clutter_pairs(const Interval& iv) {
  std::vector<VertexPair> out;
  const auto& el = iv.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (is_clutter(el[i], el[j])) out.emplace_back(el[i], el[j]);
  std::sort(out.begin(), out.end());
  return out;
}

StraighteningTable::StraighteningTable(const Interval& iv) : interval_(iv) {
  clutters_ = clutter_pairs(iv);
  if (clutters_.empty()) return;

  // all degree-2 monomials: clutter pairs first, then standard pairs
  std::vector<VertexPair> columns = clutters_;
  const auto& el = iv.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i; j < el.size(); ++j)
      if (!is_clutter(el[i], el[j])) columns.emplace_back(el[i], el[j]);
  std::map<VertexPair, int> col_index;
  for (std::size_t i = 0; i < columns.size(); ++i)
    col_index[columns[i]] = static_cast<int>(i);

  std::vector<QuadricRelation> rels = loop_relations(iv);
  DenseMatrix m(static_cast<int>(rels.size()), static_cast<int>(columns.size()));
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto& [p, c] : rels[r].terms)
      m.at(static_cast<int>(r), col_index.at(p)) = c;
  std::vector<int> pivots = m.rref();

  int nc = static_cast<int>(clutters_.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    int pc = pivots[r];
    // the standard monomial basis theorem forces all pivots into the
    // clutter block
    assert(pc < nc && "straightening pivot outside the clutter block");
    std::vector<std::pair<VertexPair, mpq_class>> tail;
    for (int c = 0; c < m.cols(); ++c) {
      if (c == pc) continue;
      mpq_class v = m.at(static_cast<int>(r), c);
      if (v != 0) {
        assert(c >= nc && "two clutter monomials in one reduced relation");
        tail.emplace_back(columns[c], -v);
      }
    }
    tails_[columns[pc]] = std::move(tail);
  }
  assert(static_cast<int>(tails_.size()) == nc &&
         "every clutter must acquire a straightening relation");
}

const std::vector<std::pair<VertexPair, mpq_class>>& StraighteningTable::tail(
    const VertexPair& clutter) const {
  auto it = tails_.find(clutter);
  if (it == tails_.end()) {
    if (!interval_.contains(clutter.a) || !interval_.contains(clutter.b))
      throw NotInInterval("straighten: vertex outside the interval");
    throw NotClutter("straighten: pair is not a clutter");
  }
  return it->second;
}

QuadricRelation StraighteningTable::relation(const VertexPair& clutter) const {
  QuadricRelation r;
  r.add(clutter, 1);
  for (const auto& [p, c] : tail(clutter)) r.add(p, -c);
  return r;
}

QuadricRelation hibi_contract(const QuadricRelation& r) {
  auto cl = r.unique_clutter();
  assert(cl && "hibi_contract needs a straightened relation");
  Vertex m = meet(cl->a, cl->b);
  Vertex j = join(cl->a, cl->b);
  QuadricRelation out;
  out.s_index = r.s_index;
  out.mode_k = r.mode_k;
  for (const auto& [p, c] : r.terms)
    if (p == *cl || p == VertexPair(m, j)) out.add(p, c);
  return out;
}

long h_exponent(const VertexPair& term, const VertexPair& clutter) {
  return ell(term.a) + ell(term.b) - ell(clutter.a) - ell(clutter.b);
}

}  // namespace spincone
