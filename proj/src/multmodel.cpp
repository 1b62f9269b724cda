#include "spincone/multmodel.hpp"

#include <algorithm>
#include <cassert>

namespace spincone {

std::string chain_to_string(const Interval& iv, const Chain& m) {
  std::string s;
  for (auto i : m) {
    if (!s.empty()) s += '.';
    s += to_string(iv.elements()[i]);
  }
  return s.empty() ? "1" : s;
}

Rewriter::Rewriter(const Interval& iv) : interval_(iv), table_(iv) {
  const auto& el = iv.elements();
  int n = static_cast<int>(el.size());
  le_.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) le_[i][j] = leq(el[i], el[j]);
  for (const VertexPair& cl : table_.clutters()) {
    int a = iv.index_of(cl.a);
    int b = iv.index_of(cl.b);
    std::vector<std::pair<std::pair<int, int>, mpq_class>> tail;
    for (const auto& [p, c] : table_.tail(cl)) {
      int x = iv.index_of(p.a);
      int y = iv.index_of(p.b);
      // straightening-law shape: every replacement pair starts strictly
      // below the clutter in the total order; rewriting terminates on it
      assert(std::min(x, y) < std::min(a, b));
      tail.push_back({{x, y}, c});
    }
    tails_[{std::min(a, b), std::max(a, b)}] = std::move(tail);
  }
}

bool Rewriter::is_standard(const Chain& m) const {
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (!le_[m[i]][m[i + 1]] && !le_[m[i + 1]][m[i]]) return false;
  return true;
}

Weight Rewriter::chain_weight(const Chain& m) const {
  Weight w;
  for (auto i : m) w += generator_weight(interval_.elements()[i]);
  return w;
}

namespace {

std::string chain_key(const Chain& m) {
  return std::string(reinterpret_cast<const char*>(m.data()), m.size());
}

Chain replace_pair(const Chain& m, std::size_t i, int x, int y) {
  Chain r;
  r.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    if (k != i && k != i + 1) r.push_back(m[k]);
  r.push_back(static_cast<std::uint8_t>(x));
  r.push_back(static_cast<std::uint8_t>(y));
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

const std::map<Chain, mpq_class>& Rewriter::normal_form(const Chain& m) {
  std::string key = chain_key(m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  std::map<Chain, mpq_class> result;
  // find the first adjacent incomparable pair
  std::size_t bad = m.size();
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (!le_[m[i]][m[i + 1]] && !le_[m[i + 1]][m[i]]) {
      bad = i;
      break;
    }
  if (bad == m.size()) {
    result[m] = 1;
  } else {
    int a = m[bad], b = m[bad + 1];
    const auto& tail = tails_.at({std::min(a, b), std::max(a, b)});
    for (const auto& [pair, c] : tail) {
      Chain next = replace_pair(m, bad, pair.first, pair.second);
      const auto& sub = normal_form(next);
      for (const auto& [chain, cc] : sub) {
        auto [jt, inserted] = result.try_emplace(chain, c * cc);
        if (!inserted) {
          jt->second += c * cc;
          if (jt->second == 0) result.erase(jt);
        }
      }
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

std::map<Chain, mpq_class> Rewriter::multiply(int gen_index, const Chain& m) {
  Chain p = m;
  p.push_back(static_cast<std::uint8_t>(gen_index));
  std::sort(p.begin(), p.end());
  return normal_form(p);
}

GradedComponentModel::GradedComponentModel(const Interval& iv, int max_degree)
    : rewriter_(iv), max_degree_(max_degree) {
  int n = iv.size();
  bases_.resize(max_degree + 1);
  index_.resize(max_degree + 1);
  weights_.resize(max_degree + 1);
  bases_[0] = {Chain{}};
  index_[0][Chain{}] = 0;
  weights_[0] = {Weight{}};
  const auto& el = iv.elements();
  for (int d = 1; d <= max_degree; ++d) {
    // extend chains by one element >= the last (in the total order), keeping
    // comparability
    for (const Chain& m : bases_[d - 1]) {
      int start = m.empty() ? 0 : m.back();
      for (int j = start; j < n; ++j) {
        if (!m.empty() && !leq(el[m.back()], el[j])) continue;
        Chain next = m;
        next.push_back(static_cast<std::uint8_t>(j));
        bases_[d].push_back(std::move(next));
      }
    }
    std::sort(bases_[d].begin(), bases_[d].end());
    weights_[d].reserve(bases_[d].size());
    long k = 0;
    for (const Chain& m : bases_[d]) {
      index_[d][m] = k++;
      weights_[d].push_back(rewriter_.chain_weight(m));
    }
  }
  columns_.assign(n, {});
  layer_done_.assign(n, std::vector<char>(max_degree + 1, 0));
  for (int g = 0; g < n; ++g) columns_[g].resize(max_degree + 1);
}

long GradedComponentModel::dim(int d) const {
  return static_cast<long>(bases_[d].size());
}

const std::vector<Chain>& GradedComponentModel::basis(int d) const {
  return bases_[d];
}

long GradedComponentModel::index_of(int d, const Chain& m) const {
  auto it = index_[d].find(m);
  return it == index_[d].end() ? -1 : it->second;
}

Weight GradedComponentModel::weight_of(int d, long index) const {
  return weights_[d][index];
}

void GradedComponentModel::ensure_layer(int g, int d) {
  if (layer_done_[g][d]) return;
  const auto& base = bases_[d];
  auto& cols = columns_[g][d];
  cols.resize(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    auto nf = rewriter_.multiply(g, base[j]);
    Column col;
    col.reserve(nf.size());
    for (const auto& [chain, c] : nf) {
      long idx = index_of(d + 1, chain);
      assert(idx >= 0 && "product left the standard basis");
      col.emplace_back(idx, c);
    }
    cols[j] = std::move(col);
  }
  layer_done_[g][d] = 1;
}

const GradedComponentModel::Column& GradedComponentModel::multiplication(
    int gen_index, int d, long j) {
  assert(d + 1 <= max_degree_);
  ensure_layer(gen_index, d);
  return columns_[gen_index][d][j];
}

bool GradedComponentModel::multiplication_commutes(int d) {
  assert(d + 2 <= max_degree_);
  int n = interval().size();
  for (int g1 = 0; g1 < n; ++g1) {
    for (int g2 = g1 + 1; g2 < n; ++g2) {
      for (long j = 0; j < dim(d); ++j) {
        std::map<long, mpq_class> ab, ba;
        for (const auto& [mid, c] : multiplication(g1, d, j))
          for (const auto& [top, cc] : multiplication(g2, d + 1, mid))
            ab[top] += c * cc;
        for (const auto& [mid, c] : multiplication(g2, d, j))
          for (const auto& [top, cc] : multiplication(g1, d + 1, mid))
            ba[top] += c * cc;
        for (auto it = ab.begin(); it != ab.end();)
          it = it->second == 0 ? ab.erase(it) : std::next(it);
        for (auto it = ba.begin(); it != ba.end();)
          it = it->second == 0 ? ba.erase(it) : std::next(it);
        if (ab != ba) return false;
      }
    }
  }
  return true;
}

std::vector<Chain> standard_monomials_with_weight(const Interval& iv,
                                                  const Weight& w) {
  std::vector<Chain> out;
  const auto& el = iv.elements();
  int n = static_cast<int>(el.size());
  int degree = w.a;
  if (degree < 0) return out;
  if (degree == 0) {
    if (w == Weight{}) out.push_back({});
    return out;
  }
  int max_level = el.front().level, min_level = el.front().level;
  for (Vertex v : el) {
    max_level = std::max(max_level, v.level);
    min_level = std::min(min_level, v.level);
  }
  Chain chain;
  auto feasible = [&](const Weight& rem, int slots) {
    if (rem.a != slots) return false;
    if (rem.u < slots * min_level || rem.u > slots * max_level) return false;
    for (int i = 0; i < 5; ++i)
      if (std::abs(rem.z[i]) > slots) return false;
    return true;
  };
  auto rec = [&](auto&& self, int start, Weight rem) -> void {
    int slots = rem.a;
    if (slots == 0) {
      if (rem == Weight{}) out.push_back(chain);
      return;
    }
    for (int j = start; j < n; ++j) {
      if (!chain.empty() && !leq(el[chain.back()], el[j])) continue;
      Weight next = rem - generator_weight(el[j]);
      if (!feasible(next, slots - 1)) continue;
      chain.push_back(static_cast<std::uint8_t>(j));
      self(self, j, next);
      chain.pop_back();
    }
  };
  if (feasible(w, degree)) rec(rec, 0, w);
  return out;
}

}  // namespace spincone
