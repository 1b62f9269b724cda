#include "spincone/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>
#include <unordered_map>

#include "spincone/character.hpp"
#include "spincone/hilbert.hpp"
#include "spincone/linalg.hpp"
#include "spincone/series.hpp"

namespace spincone {

namespace {

// pack (u, z[5]) into a hashable key; fields stay far from the bounds for
// every computation reachable here
std::uint64_t pack_weight(const Weight& w) {
  std::uint64_t key = static_cast<std::uint64_t>(w.u + 512) & 0x3ff;
  for (int i = 0; i < 5; ++i)
    key = (key << 9) | (static_cast<std::uint64_t>(w.z[i] + 256) & 0x1ff);
  return key;
}

struct SpaceEntry {
  std::uint64_t key;
  std::int32_t mono;
  std::uint32_t mask;
};

void sort_space(std::vector<SpaceEntry>& v) {
  std::sort(v.begin(), v.end(), [](const SpaceEntry& a, const SpaceEntry& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.mask < b.mask;
  });
}

// build the (i, j) Koszul space, sorted by weight key
std::vector<SpaceEntry> build_space(GradedComponentModel& model, int i, int j,
                                    const std::vector<Weight>& mask_weight,
                                    const std::vector<std::uint32_t>& masks_i) {
  std::vector<SpaceEntry> out;
  if (j - i < 0 || j - i > model.max_degree()) return out;
  long dm = model.dim(j - i);
  out.reserve(static_cast<std::size_t>(dm) * masks_i.size());
  for (long m = 0; m < dm; ++m) {
    Weight wm = model.weight_of(j - i, m);
    for (std::uint32_t mask : masks_i) {
      Weight w = wm + mask_weight[mask];
      out.push_back(SpaceEntry{pack_weight(w), static_cast<std::int32_t>(m),
                               mask});
    }
  }
  sort_space(out);
  return out;
}

int rank_of_slice(GradedComponentModel& model, int j, int i,
                  const SpaceEntry* cols, std::size_t ncols,
                  const SpaceEntry* rows, std::size_t nrows) {
  // local row index
  std::unordered_map<std::uint64_t, int> row_index;
  row_index.reserve(nrows * 2);
  auto row_key = [](std::int32_t mono, std::uint32_t mask) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(mono))
            << 20) |
           mask;
  };
  for (std::size_t r = 0; r < nrows; ++r)
    row_index[row_key(rows[r].mono, rows[r].mask)] = static_cast<int>(r);

  SparseMatrix mat(static_cast<int>(nrows), static_cast<int>(ncols));
  for (std::size_t c = 0; c < ncols; ++c) {
    std::uint32_t mask = cols[c].mask;
    int sign = 1;
    for (std::uint32_t rest = mask; rest;) {
      int g = __builtin_ctz(rest);
      rest &= rest - 1;
      std::uint32_t sub = mask & ~(1u << g);
      for (const auto& [target, coef] :
           model.multiplication(g, j - i, cols[c].mono)) {
        auto it = row_index.find(row_key(static_cast<std::int32_t>(target), sub));
        assert(it != row_index.end() && "differential left the weight slice");
        mat.add(it->second, static_cast<int>(c), sign * coef);
      }
      sign = -sign;
    }
  }
  return std::move(mat).rank();
}

long rank_of_differential(GradedComponentModel& model, int j, int i,
                          const std::vector<SpaceEntry>& cols,
                          const std::vector<SpaceEntry>& rows, int jobs) {
  if (cols.empty() || rows.empty()) return 0;
  // slice boundaries
  struct Task {
    std::size_t cb, ce, rb, re;
  };
  std::vector<Task> tasks;
  std::size_t c = 0, r = 0;
  while (c < cols.size()) {
    std::size_t ce = c;
    while (ce < cols.size() && cols[ce].key == cols[c].key) ++ce;
    while (r < rows.size() && rows[r].key < cols[c].key) ++r;
    std::size_t re = r;
    while (re < rows.size() && rows[re].key == cols[c].key) ++re;
    tasks.push_back({c, ce, r, re});
    c = ce;
    r = re;
  }
  std::atomic<long> total{0};
  if (jobs <= 1) {
    long sum = 0;
    for (const Task& t : tasks)
      sum += rank_of_slice(model, j, i, cols.data() + t.cb, t.ce - t.cb,
                           rows.data() + t.rb, t.re - t.rb);
    return sum;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int k = 0; k < jobs; ++k)
    pool.emplace_back([&] {
      long local = 0;
      while (true) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= tasks.size()) break;
        const Task& t = tasks[idx];
        local += rank_of_slice(model, j, i, cols.data() + t.cb, t.ce - t.cb,
                               rows.data() + t.rb, t.re - t.rb);
      }
      total += local;
    });
  for (auto& th : pool) th.join();
  return total.load();
}

}  // namespace

BettiTable koszul_betti(const Interval& iv, int j_max, int jobs) {
  int n = iv.size();
  if (n > 20 || j_max > 12)
    throw BudgetExceeded("koszul_betti guard: interval or degree too large");
  GradedComponentModel model(iv, j_max);
  // multiplication columns are built lazily per layer inside the rank loop;
  // pre-warm them on one thread since Rewriter memoization is not locked
  for (int d = 0; d + 1 <= j_max; ++d)
    for (int g = 0; g < n; ++g)
      if (model.dim(d) > 0) model.multiplication(g, d, 0);

  std::vector<Weight> mask_weight(1u << n);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int g = __builtin_ctz(mask);
    mask_weight[mask] = mask_weight[mask & (mask - 1)] +
                        generator_weight(iv.elements()[g]);
  }
  std::vector<std::vector<std::uint32_t>> masks_by_card(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    masks_by_card[__builtin_popcount(mask)].push_back(mask);

  BettiTable bt;
  for (int j = 0; j <= j_max; ++j) {
    int i_top = std::min(j, n);
    // ranks r[i] = rank of d: (i, j) -> (i-1, j)
    std::vector<long> dims(i_top + 2, 0);
    std::vector<long> ranks(i_top + 2, 0);
    std::vector<SpaceEntry> below = build_space(model, 0, j, mask_weight,
                                                masks_by_card[0]);
    dims[0] = static_cast<long>(below.size());
    for (int i = 1; i <= i_top; ++i) {
      std::vector<SpaceEntry> cur =
          build_space(model, i, j, mask_weight, masks_by_card[i]);
      dims[i] = static_cast<long>(cur.size());
      ranks[i] = rank_of_differential(model, j, i, cur, below, jobs);
      below = std::move(cur);
    }
    for (int i = 0; i <= i_top; ++i) {
      long b = dims[i] - ranks[i] - ranks[i + 1];
      if (b != 0) bt.entries[{i, j}] = b;
    }
  }
  return bt;
}

bool duality_check(const BettiTable& bt, bool gorenstein) {
  int d = 0, p = 0;
  for (const auto& [ij, b] : bt.entries) {
    d = std::max(d, ij.first);
    p = std::max(p, ij.second);
  }
  bool symmetric = true;
  for (const auto& [ij, b] : bt.entries)
    if (bt.at(d - ij.first, p - ij.second) != b) symmetric = false;
  return symmetric == gorenstein;
}

bool betti_euler_check(const Interval& iv, const BettiTable& bt, int j_max) {
  GradedSeries a = hilbert_dp(iv, j_max, Refine::T);
  Poly1 factor = (Poly1(1) - Poly1::monomial(1, 1)).pow(iv.size());
  for (int j = 0; j <= j_max; ++j) {
    mpq_class expect = 0;
    for (int k = 0; k <= std::min(j, factor.max_deg()); ++k)
      expect += factor.coeff(k) * a.coeff(j - k, 0);
    mpq_class got = 0;
    for (const auto& [ij, b] : bt.entries)
      if (ij.second == j) got += (ij.first % 2 == 0 ? b : -b);
    if (expect != got) return false;
  }
  return true;
}

std::map<int, mpz_class> top_local_cohomology_dims(const Interval& iv,
                                                   int count) {
  int a = a_invariant(iv);  // throws NotGorenstein when inapplicable
  GradedSeries series = hilbert_dp(iv, count - 1, Refine::T);
  std::map<int, mpz_class> out;
  for (int jj = 0; jj < count; ++jj) {
    mpq_class c = series.coeff(jj, 0);
    out[-a - jj] = c.get_num();
  }
  return out;
}

// ----------------------------------------------------------------- loc-coh

namespace {

std::vector<Chain> standard_monomials_with_tu(const Interval& iv, int degree,
                                              int u) {
  std::vector<Chain> out;
  const auto& el = iv.elements();
  int n = static_cast<int>(el.size());
  if (degree < 0) return out;
  if (degree == 0) {
    if (u == 0) out.push_back({});
    return out;
  }
  int max_level = el.front().level, min_level = el.front().level;
  for (Vertex v : el) {
    max_level = std::max(max_level, v.level);
    min_level = std::min(min_level, v.level);
  }
  Chain chain;
  auto rec = [&](auto&& self, int start, int slots, int rem_u) -> void {
    if (slots == 0) {
      if (rem_u == 0) out.push_back(chain);
      return;
    }
    for (int j = start; j < n; ++j) {
      if (!chain.empty() && !leq(el[chain.back()], el[j])) continue;
      int nu = rem_u - el[j].level;
      if (nu < (slots - 1) * min_level || nu > (slots - 1) * max_level)
        continue;
      chain.push_back(static_cast<std::uint8_t>(j));
      self(self, j, slots - 1, nu);
      chain.pop_back();
    }
  };
  if (u >= degree * min_level && u <= degree * max_level) rec(rec, 0, degree, u);
  return out;
}

struct FiberCache {
  const Interval& iv;
  std::map<std::pair<int, int>, std::vector<Chain>> fibers;

  const std::vector<Chain>& get(int degree, int u) {
    auto it = fibers.find({degree, u});
    if (it != fibers.end()) return it->second;
    return fibers.emplace(std::make_pair(degree, u),
                          standard_monomials_with_tu(iv, degree, u))
        .first->second;
  }
};

}  // namespace

LocalCohomologyReport local_cohomology_weights(const Interval& iv,
                                               IdealKind ideal, int u_max,
                                               int n_max, int t_lo, int t_hi) {
  if (ideal != IdealKind::A && ideal != IdealKind::M)
    throw BadIntervalForIdeal("local_cohomology_weights supports ideals a, m");
  if (iv.rank() > 8)
    throw BudgetExceeded("local_cohomology_weights guard: rank too large");
  IdealDescriptor desc = ideal_descriptor(iv, ideal);
  const std::vector<Vertex>& gens = desc.n_set;
  int s = desc.s;
  LocalCohomologyReport rep;
  rep.n_max = n_max;
  rep.s = s;

  Rewriter rw(iv);
  FiberCache cache{iv, {}};
  std::vector<int> gen_index(s), gen_level(s);
  for (int g = 0; g < s; ++g) {
    gen_index[g] = iv.index_of(gens[g]);
    gen_level[g] = gens[g].level;
  }

  // power products lambda_g^n * m with memoized chain arithmetic
  auto multiply_power = [&](int g, int n, const Chain& m) {
    std::map<Chain, mpq_class> acc;
    acc[m] = 1;
    for (int k = 0; k < n; ++k) {
      std::map<Chain, mpq_class> next;
      for (const auto& [chain, c] : acc) {
        auto prod = rw.multiply(gen_index[g], chain);
        for (const auto& [pc, cc] : prod) {
          auto [it, inserted] = next.try_emplace(pc, c * cc);
          if (!inserted) {
            it->second += c * cc;
            if (it->second == 0) next.erase(it);
          }
        }
      }
      acc = std::move(next);
    }
    return acc;
  };

  // dims[n] keyed by (i, t, u)
  std::map<int, std::map<std::tuple<int, int, int>, long>> dims_by_n;

  for (int n = 1; n <= n_max; ++n) {
    auto& dims = dims_by_n[n];
    for (int t0 = t_lo; t0 <= t_hi; ++t0) {
      for (int u0 = -u_max; u0 <= u_max; ++u0) {
        // cochains grouped by the full z weight; subsets of generators by
        // cardinality
        struct Entry {
          Chain m;
          std::uint32_t mask;
        };
        std::map<std::array<int, 5>, std::vector<std::vector<Entry>>> slices;
        for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
          int i = __builtin_popcount(mask);
          int deg = t0 + n * i;
          int du = u0;
          Weight wS;
          for (int g = 0; g < s; ++g)
            if (mask & (1u << g)) wS += generator_weight(gens[g]);
          du += n * wS.u;
          if (deg < 0) continue;
          for (const Chain& m : cache.get(deg, du)) {
            Weight wm = rw.chain_weight(m);
            std::array<int, 5> z;
            for (int k = 0; k < 5; ++k) z[k] = wm.z[k] - n * wS.z[k];
            auto& bucket = slices[z];
            if (bucket.empty()) bucket.resize(s + 1);
            bucket[i].push_back(Entry{m, mask});
          }
        }
        for (auto& [z, bucket] : slices) {
          // ranks of d: K^{i} -> K^{i+1}
          std::vector<long> dim(s + 1, 0), rank(s + 2, 0);
          for (int i = 0; i <= s; ++i)
            dim[i] = static_cast<long>(bucket[i].size());
          for (int i = 0; i + 1 <= s; ++i) {
            if (bucket[i].empty() || bucket[i + 1].empty()) continue;
            std::map<std::pair<Chain, std::uint32_t>, int> row_index;
            for (std::size_t r = 0; r < bucket[i + 1].size(); ++r)
              row_index[{bucket[i + 1][r].m, bucket[i + 1][r].mask}] =
                  static_cast<int>(r);
            SparseMatrix mat(static_cast<int>(bucket[i + 1].size()),
                             static_cast<int>(bucket[i].size()));
            for (std::size_t c = 0; c < bucket[i].size(); ++c) {
              const Entry& e = bucket[i][c];
              for (int g = 0; g < s; ++g) {
                if (e.mask & (1u << g)) continue;
                // sign: number of set bits below g
                int below = __builtin_popcount(e.mask & ((1u << g) - 1));
                int sign = below % 2 == 0 ? 1 : -1;
                auto prod = multiply_power(g, n, e.m);
                std::uint32_t up = e.mask | (1u << g);
                for (const auto& [pc, cc] : prod) {
                  auto it = row_index.find({pc, up});
                  if (it == row_index.end()) continue;  // weight bookkeeping
                  mat.add(it->second, static_cast<int>(c), sign * cc);
                }
              }
            }
            rank[i + 1] = std::move(mat).rank();
          }
          for (int i = 0; i <= s; ++i) {
            long h = dim[i] - rank[i] - rank[i + 1];
            if (h != 0) {
              auto key = std::make_tuple(i, t0, u0);
              dims[key] += h;
            }
          }
        }
      }
    }
    if (n >= 2) {
      // stabilized when two consecutive n agree
      if (dims_by_n[n] == dims_by_n[n - 1]) {
        rep.dims = dims_by_n[n];
        for (const auto& [key, h] : rep.dims) {
          auto [i, t0, u0] = key;
          rep.euler[{t0, u0}] += (i % 2 == 0 ? h : -h);
        }
        return rep;
      }
    }
  }
  // not stabilized: report the last level and mark everything unstable that
  // changed between the final two scans
  rep.dims = dims_by_n[n_max];
  if (n_max >= 2) {
    const auto& prev = dims_by_n[n_max - 1];
    for (const auto& [key, h] : rep.dims) {
      auto it = prev.find(key);
      if (it == prev.end() || it->second != h) rep.unstable.push_back(key);
    }
    for (const auto& [key, h] : prev)
      if (!rep.dims.count(key)) rep.unstable.push_back(key);
  }
  for (const auto& [key, h] : rep.dims) {
    auto [i, t0, u0] = key;
    rep.euler[{t0, u0}] += (i % 2 == 0 ? h : -h);
  }
  return rep;
}

// ---------------------------------------------------------------- bicomplex

namespace {

// columns of multiplication by a linear form on the indexed model
GradedComponentModel::Column form_column(GradedComponentModel& model,
                                         const LinearForm& form, int d,
                                         long j) {
  std::map<long, mpq_class> acc;
  for (const auto& [v, coef] : form) {
    int g = model.interval().index_of(v);
    assert(g >= 0);
    for (const auto& [idx, c] : model.multiplication(g, d, j)) acc[idx] += coef * c;
  }
  GradedComponentModel::Column col;
  for (const auto& [idx, c] : acc)
    if (c != 0) col.emplace_back(idx, c);
  return col;
}

}  // namespace

BicomplexPage bicomplex_split(const Interval& iv,
                              const std::vector<LinearForm>& part1,
                              const std::vector<LinearForm>& part2,
                              int max_internal_degree) {
  int k1 = static_cast<int>(part1.size());
  int k2 = static_cast<int>(part2.size());
  int s = k1 + k2;
  GradedComponentModel model(iv, max_internal_degree);
  BicomplexPage page;

  // component (i, j) at internal degree D has monomial degree D - i - j
  auto dim_at = [&](int i, int j, int D) -> long {
    int d = D - i - j;
    if (i < 0 || j < 0 || i > k1 || j > k2 || d < 0 ||
        d > model.max_degree())
      return 0;
    mpz_class bin1, bin2;
    mpz_bin_uiui(bin1.get_mpz_t(), k1, i);
    mpz_bin_uiui(bin2.get_mpz_t(), k2, j);
    return model.dim(d) * bin1.get_si() * bin2.get_si();
  };

  std::vector<std::vector<std::uint32_t>> m1(k1 + 1), m2(k2 + 1);
  for (std::uint32_t m = 0; m < (1u << k1); ++m)
    m1[__builtin_popcount(m)].push_back(m);
  for (std::uint32_t m = 0; m < (1u << k2); ++m)
    m2[__builtin_popcount(m)].push_back(m);

  // d1: (i, j) -> (i-1, j), multiplication by part1 forms
  auto build_d1 = [&](int i, int j, int D) {
    int d = D - i - j;
    long rows = dim_at(i - 1, j, D);
    long cols = dim_at(i, j, D);
    DenseMatrix mat(static_cast<int>(rows), static_cast<int>(cols));
    if (rows == 0 || cols == 0) return mat;
    // index (m, mask1, mask2) lexicographically
    auto col_of = [&](long mono, int p1, int p2, int ci, int cj, int dd) {
      long nm = model.dim(dd);
      (void)nm;
      long per_m = static_cast<long>(m1[ci].size()) * m2[cj].size();
      (void)per_m;
      return (mono * static_cast<long>(m1[ci].size()) + p1) *
                 static_cast<long>(m2[cj].size()) +
             p2;
    };
    for (long mono = 0; mono < model.dim(d); ++mono) {
      for (std::size_t p1 = 0; p1 < m1[i].size(); ++p1) {
        std::uint32_t mask = m1[i][p1];
        for (std::size_t p2 = 0; p2 < m2[j].size(); ++p2) {
          long c = col_of(mono, static_cast<int>(p1), static_cast<int>(p2), i,
                          j, d);
          int sign = 1;
          for (std::uint32_t rest = mask; rest;) {
            int g = __builtin_ctz(rest);
            rest &= rest - 1;
            std::uint32_t sub = mask & ~(1u << g);
            long subpos =
                std::lower_bound(m1[i - 1].begin(), m1[i - 1].end(), sub) -
                m1[i - 1].begin();
            for (const auto& [target, coef] :
                 form_column(model, part1[g], d, mono)) {
              long r = col_of(target, static_cast<int>(subpos),
                              static_cast<int>(p2), i - 1, j, d + 1);
              mat.at(static_cast<int>(r), static_cast<int>(c)) += sign * coef;
            }
            sign = -sign;
          }
        }
      }
    }
    return mat;
  };

  for (int D = 0; D <= max_internal_degree; ++D) {
    for (int j = 0; j <= k2; ++j) {
      for (int i = 0; i <= k1; ++i) {
        long dim = dim_at(i, j, D);
        if (dim == 0) continue;
        long r_in = 0, r_out = 0;
        if (i + 1 <= k1 && dim_at(i + 1, j, D) > 0)
          r_in = build_d1(i + 1, j, D).rank();
        if (i >= 1 && dim_at(i - 1, j, D) > 0) r_out = build_d1(i, j, D).rank();
        long e1 = dim - r_in - r_out;
        if (e1 != 0) page.first_page[{i, j, D}] = e1;
      }
    }
  }

  // total complex: Koszul on all forms together
  std::vector<LinearForm> all = part1;
  all.insert(all.end(), part2.begin(), part2.end());
  for (int D = 0; D <= max_internal_degree; ++D) {
    std::vector<long> dims(s + 1, 0), ranks(s + 2, 0);
    std::vector<std::vector<std::uint32_t>> ma(s + 1);
    for (std::uint32_t m = 0; m < (1u << s); ++m)
      ma[__builtin_popcount(m)].push_back(m);
    for (int i = 0; i <= s; ++i) {
      int d = D - i;
      if (d < 0 || d > model.max_degree()) continue;
      dims[i] = model.dim(d) * static_cast<long>(ma[i].size());
    }
    for (int i = 1; i <= s; ++i) {
      int d = D - i;
      if (d < 0 || dims[i] == 0 || dims[i - 1] == 0) continue;
      DenseMatrix mat(static_cast<int>(dims[i - 1]),
                      static_cast<int>(dims[i]));
      for (long mono = 0; mono < model.dim(d); ++mono) {
        for (std::size_t p = 0; p < ma[i].size(); ++p) {
          std::uint32_t mask = ma[i][p];
          long c = mono * static_cast<long>(ma[i].size()) + p;
          int sign = 1;
          for (std::uint32_t rest = mask; rest;) {
            int g = __builtin_ctz(rest);
            rest &= rest - 1;
            std::uint32_t sub = mask & ~(1u << g);
            long subpos =
                std::lower_bound(ma[i - 1].begin(), ma[i - 1].end(), sub) -
                ma[i - 1].begin();
            for (const auto& [target, coef] : form_column(model, all[g], d, mono)) {
              long r = target * static_cast<long>(ma[i - 1].size()) + subpos;
              mat.at(static_cast<int>(r), static_cast<int>(c)) += sign * coef;
            }
            sign = -sign;
          }
        }
      }
      ranks[i] = mat.rank();
    }
    std::vector<long> h(s + 1, 0);
    bool any = false;
    for (int i = 0; i <= s; ++i) {
      h[i] = dims[i] - ranks[i] - ranks[i + 1];
      if (h[i] != 0) any = true;
    }
    if (any) page.total[D] = h;
  }
  return page;
}

}  // namespace spincone
