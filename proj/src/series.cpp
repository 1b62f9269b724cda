#include "spincone/series.hpp"

#include <sstream>

namespace spincone {

mpq_class GradedSeries::coeff(int t, int q) const {
  auto it = data_.find(t);
  if (it == data_.end()) return 0;
  auto jt = it->second.find(q);
  return jt == it->second.end() ? mpq_class(0) : jt->second;
}

void GradedSeries::add(int t, int q, const mpq_class& c) {
  if (c == 0 || t > t_max_) return;
  auto& slice = data_[t];
  auto [it, inserted] = slice.try_emplace(q, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) slice.erase(it);
  }
  if (slice.empty()) data_.erase(t);
}

std::map<int, mpq_class> GradedSeries::t_slice(int t) const {
  auto it = data_.find(t);
  return it == data_.end() ? std::map<int, mpq_class>{} : it->second;
}

std::map<int, mpq_class> GradedSeries::q_slice(int q) const {
  std::map<int, mpq_class> out;
  for (const auto& [t, slice] : data_) {
    auto it = slice.find(q);
    if (it != slice.end()) out[t] = it->second;
  }
  return out;
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  if (a.t_max_ != b.t_max_)
    throw TruncationMismatch("series addition with different t_max");
  GradedSeries r = a;
  for (const auto& [t, slice] : b.data_)
    for (const auto& [q, c] : slice) r.add(t, q, c);
  return r;
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
  return a + (-b);
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  if (a.t_max_ != b.t_max_)
    throw TruncationMismatch("series multiplication with different t_max");
  GradedSeries r(a.t_max_);
  for (const auto& [ta, sa] : a.data_) {
    for (const auto& [tb, sb] : b.data_) {
      if (ta + tb > a.t_max_) break;
      for (const auto& [qa, ca] : sa)
        for (const auto& [qb, cb] : sb) r.add(ta + tb, qa + qb, ca * cb);
    }
  }
  return r;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries r(t_max_);
  for (const auto& [t, slice] : data_)
    for (const auto& [q, c] : slice) r.add(t, q, -c);
  return r;
}

GradedSeries GradedSeries::scaled(const mpq_class& c) const {
  GradedSeries r(t_max_);
  for (const auto& [t, slice] : data_)
    for (const auto& [q, cc] : slice) r.add(t, q, cc * c);
  return r;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
  return a.t_max_ == b.t_max_ && a.data_ == b.data_;
}

GradedSeries GradedSeries::truncated(int new_t_max) const {
  GradedSeries r(new_t_max);
  for (const auto& [t, slice] : data_) {
    if (t > new_t_max) break;
    for (const auto& [q, c] : slice) r.add(t, q, c);
  }
  return r;
}

GradedSeries GradedSeries::collapse_q() const {
  GradedSeries r(t_max_);
  for (const auto& [t, slice] : data_)
    for (const auto& [q, c] : slice) r.add(t, 0, c);
  return r;
}

std::string GradedSeries::to_string() const {
  std::ostringstream os;
  for (const auto& [t, slice] : data_) {
    os << "t^" << t << ": ";
    bool first = true;
    for (const auto& [q, c] : slice) {
      if (!first) os << " + ";
      os << c.get_str();
      if (q != 0) os << "*q^" << q;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

GradedSeries expand(const Rat2& f, int t_max) {
  GradedSeries out(t_max);
  if (f.zero()) return out;
  const Poly2& den = f.den();
  // den is a polynomial with min t- and q-degree 0 after Rat2 normalization;
  // split den = c - E with E carrying only positive t powers
  std::map<int, std::map<int, mpq_class>> den_by_t;
  for (const auto& [k, c] : den.terms()) den_by_t[k.first][k.second] = c;
  auto it0 = den_by_t.find(0);
  if (it0 == den_by_t.end())
    throw NonExpandableDirection("denominator vanishes at t = 0");
  if (it0->second.size() != 1 || it0->second.begin()->first != 0)
    throw NonExpandableDirection(
        "denominator has pure q terms; t-direction expansion undefined");
  mpq_class c0 = it0->second.begin()->second;

  std::map<int, std::map<int, mpq_class>> num_by_t;
  for (const auto& [k, c] : f.num().terms()) num_by_t[k.first][k.second] = c;
  int t_lo = f.num().min_t();

  std::map<int, std::map<int, mpq_class>> s;  // computed slices
  for (int d = t_lo; d <= t_max; ++d) {
    std::map<int, mpq_class> acc;
    if (auto it = num_by_t.find(d); it != num_by_t.end()) acc = it->second;
    for (const auto& [j, dj] : den_by_t) {
      if (j == 0 || d - j < t_lo) continue;
      auto sit = s.find(d - j);
      if (sit == s.end()) continue;
      for (const auto& [qd, cd] : dj)
        for (const auto& [qs, cs] : sit->second) {
          auto [it2, ins] = acc.try_emplace(qd + qs, -cd * cs);
          if (!ins) it2->second -= cd * cs;
        }
    }
    auto& slice = s[d];
    for (auto& [q, c] : acc) {
      if (c == 0) continue;
      slice[q] = c / c0;
    }
    for (auto it = slice.begin(); it != slice.end();)
      it = it->second == 0 ? slice.erase(it) : std::next(it);
  }
  for (const auto& [t, slice] : s)
    for (const auto& [q, c] : slice) out.add(t, q, c);
  return out;
}

GradedSeries expand(const Rat1& f, int t_max) {
  return expand(Rat2::from_rat1(f), t_max);
}

std::map<int, Rat1> q_expansion(const Rat2& f, int q_min, int q_max) {
  std::map<int, Rat1> out;
  if (f.zero()) {
    for (int u = q_min; u <= q_max; ++u) out[u] = Rat1(0);
    return out;
  }
  // denominator as polynomial in q with Rat1 coefficients
  std::map<int, Poly1> den_by_q;
  for (const auto& [k, c] : f.den().terms())
    den_by_q[k.second] = den_by_q[k.second] + Poly1::monomial(c, k.first);
  std::map<int, Poly1> num_by_q;
  for (const auto& [k, c] : f.num().terms())
    num_by_q[k.second] = num_by_q[k.second] + Poly1::monomial(c, k.first);

  int d0 = den_by_q.begin()->first;  // lowest q power of the denominator
  Rat1 lead(Poly1(1), den_by_q.begin()->second);
  int n0 = num_by_q.empty() ? 0 : num_by_q.begin()->first;
  int u_lo = n0 - d0;  // lowest possible q power of the expansion

  std::map<int, Rat1> slices;
  for (int u = u_lo; u <= q_max; ++u) {
    Rat1 acc(0);
    if (auto it = num_by_q.find(u + d0); it != num_by_q.end())
      acc = acc + Rat1(it->second, Poly1(1));
    for (const auto& [j, dj] : den_by_q) {
      if (j == d0) continue;
      auto sit = slices.find(u + d0 - j);
      if (sit == slices.end()) continue;
      acc = acc - Rat1(dj, Poly1(1)) * sit->second;
    }
    slices[u] = acc * lead;
  }
  for (int u = q_min; u <= q_max; ++u) {
    auto it = slices.find(u);
    out[u] = it == slices.end() ? Rat1(0) : it->second;
  }
  return out;
}

}  // namespace spincone
