#include "spincone/linalg.hpp"

#include <algorithm>
#include <map>

namespace spincone {

std::vector<int> DenseMatrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    mpq_class inv = at(r, c);
    for (int j = c; j < cols_; ++j) at(r, j) /= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      mpq_class f = at(i, c);
      for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int DenseMatrix::rank() const {
  DenseMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

void SparseMatrix::add(int r, int c, const mpq_class& v) {
  if (v == 0) return;
  cols_data_[c].emplace_back(r, v);
}

int SparseMatrix::rank() && {
  // normalize duplicate entries
  for (auto& col : cols_data_) {
    if (col.size() < 2) continue;
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, mpq_class>> merged;
    for (auto& [r, v] : col) {
      if (!merged.empty() && merged.back().first == r)
        merged.back().second += v;
      else
        merged.emplace_back(r, v);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second == 0; }),
                 merged.end());
    col = std::move(merged);
  }

  // row-major working form
  std::vector<std::map<int, mpq_class>> row_of(rows_);
  for (int c = 0; c < cols_; ++c)
    for (auto& [r, v] : cols_data_[c]) row_of[r][c] = v;

  std::vector<char> row_done(rows_, 0);
  int rank = 0;
  while (true) {
    // pick the pivot with the fewest-entries row among nonempty rows
    int best = -1;
    std::size_t best_len = 0;
    for (int r = 0; r < rows_; ++r) {
      if (row_done[r] || row_of[r].empty()) continue;
      if (best < 0 || row_of[r].size() < best_len) {
        best = r;
        best_len = row_of[r].size();
      }
    }
    if (best < 0) break;
    ++rank;
    row_done[best] = 1;
    auto pivot_row = row_of[best];
    int pc = pivot_row.begin()->first;
    mpq_class pv = pivot_row.begin()->second;
    // eliminate pc from all other active rows
    for (int r = 0; r < rows_; ++r) {
      if (row_done[r]) continue;
      auto it = row_of[r].find(pc);
      if (it == row_of[r].end()) continue;
      mpq_class f = it->second / pv;
      for (auto& [c, v] : pivot_row) {
        auto [jt, inserted] = row_of[r].try_emplace(c, 0);
        jt->second -= f * v;
        if (jt->second == 0) row_of[r].erase(jt);
      }
    }
  }
  return rank;
}

}  // namespace spincone
