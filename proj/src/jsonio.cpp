#include "spincone/jsonio.hpp"

#include <sstream>

#include "spincone/hilbert.hpp"

namespace spincone {

json interval_json(const Interval& iv) {
  json j;
  j["lower"] = to_string(iv.lower());
  j["upper"] = to_string(iv.upper());
  j["open_lower"] = iv.open_lower();
  j["open_upper"] = iv.open_upper();
  j["rank"] = iv.rank();
  j["capacity"] = capacity(iv);
  j["core_size"] = static_cast<int>(core(iv).size());
  j["size"] = iv.size();
  if (iv.closed()) j["gorenstein"] = is_gorenstein(iv);
  return j;
}

json series_json(const GradedSeries& s) {
  json rows = json::array();
  for (const auto& [t, slice] : s.slices())
    for (const auto& [q, c] : slice) {
      json row;
      row["t"] = t;
      row["q"] = q;
      row["num"] = c.get_num().get_str();
      row["den"] = c.get_den().get_str();
      rows.push_back(row);
    }
  json j;
  j["t_max"] = s.t_max();
  j["rows"] = rows;
  return j;
}

std::string series_csv(const GradedSeries& s) {
  std::ostringstream os;
  os << "t_deg,q_deg,value\n";
  for (const auto& [t, slice] : s.slices())
    for (const auto& [q, c] : slice)
      os << t << "," << q << "," << c.get_str() << "\n";
  return os.str();
}

json rat2_json(const Rat2& r) {
  auto poly = [](const Poly2& p) {
    json rows = json::array();
    for (const auto& [k, c] : p.terms()) {
      json row;
      row["t"] = k.first;
      row["q"] = k.second;
      row["num"] = c.get_num().get_str();
      row["den"] = c.get_den().get_str();
      rows.push_back(row);
    }
    return rows;
  };
  json j;
  j["numerator"] = poly(r.num());
  j["denominator"] = poly(r.den());
  j["text"] = r.to_string();
  return j;
}

json rat1_json(const Rat1& r) {
  json j;
  j["text"] = r.to_string();
  return j;
}

json relation_json(const QuadricRelation& r) {
  json terms = json::array();
  for (const auto& [p, c] : r.terms) {
    json t;
    t["a"] = to_string(p.a);
    t["b"] = to_string(p.b);
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    terms.push_back(t);
  }
  json j;
  j["terms"] = terms;
  j["s_index"] = r.s_index;
  j["mode_k"] = r.mode_k;
  return j;
}

json betti_json(const BettiTable& bt) {
  json rows = json::array();
  for (const auto& [ij, b] : bt.entries) {
    json row;
    row["i"] = ij.first;
    row["j"] = ij.second;
    row["dim"] = b;
    rows.push_back(row);
  }
  return rows;
}

unsigned long long fixture_hash() {
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&h](long v) {
    h ^= static_cast<unsigned long long>(v);
    h *= 1099511628211ull;
  };
  for (const CoverClass& c : cover_table()) {
    mix(label_index(c.lower));
    mix(label_index(c.upper));
    mix(c.upper_level_offset);
  }
  for (const Point& p : f_table()) {
    mix(p.x);
    mix(p.y);
  }
  for (int r : rho_table()) mix(r);
  for (int l = 0; l < kNumLabels; ++l)
    for (int z : spin_weight(label_from_index(l))) mix(z);
  mix(static_cast<long>(k_matrix_fixture_hash()));
  return h;
}

}  // namespace spincone
