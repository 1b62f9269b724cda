#include "spincone/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace spincone {

// --------------------------------------------------------------------- Poly1

Poly1::Poly1(const mpq_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly1 Poly1::monomial(const mpq_class& c, int deg) {
  Poly1 p;
  if (c != 0) {
    p.min_deg_ = deg;
    p.coeffs_.push_back(c);
  }
  return p;
}

mpq_class Poly1::coeff(int deg) const {
  int i = deg - min_deg_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

void Poly1::set_coeff(int deg, const mpq_class& c) {
  if (coeffs_.empty()) {
    if (c != 0) {
      min_deg_ = deg;
      coeffs_.push_back(c);
    }
    return;
  }
  if (deg < min_deg_) {
    coeffs_.insert(coeffs_.begin(), min_deg_ - deg, mpq_class(0));
    min_deg_ = deg;
  } else if (deg > max_deg()) {
    coeffs_.resize(deg - min_deg_ + 1, mpq_class(0));
  }
  coeffs_[deg - min_deg_] = c;
  trim();
}

void Poly1::trim() {
  std::size_t lead = coeffs_.size();
  while (lead > 0 && coeffs_[lead - 1] == 0) --lead;
  coeffs_.resize(lead);
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + skip);
    min_deg_ += static_cast<int>(skip);
  }
  if (coeffs_.empty()) min_deg_ = 0;
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  Poly1 r;
  r.min_deg_ = std::min(a.min_deg_, b.min_deg_);
  int hi = std::max(a.max_deg(), b.max_deg());
  r.coeffs_.assign(hi - r.min_deg_ + 1, mpq_class(0));
  for (int d = a.min_deg_; d <= a.max_deg(); ++d)
    r.coeffs_[d - r.min_deg_] += a.coeffs_[d - a.min_deg_];
  for (int d = b.min_deg_; d <= b.max_deg(); ++d)
    r.coeffs_[d - r.min_deg_] += b.coeffs_[d - b.min_deg_];
  r.trim();
  return r;
}

Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.zero() || b.zero()) return Poly1();
  Poly1 r;
  r.min_deg_ = a.min_deg_ + b.min_deg_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

bool operator==(const Poly1& a, const Poly1& b) {
  return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
}

Poly1 Poly1::shifted(int by) const {
  Poly1 r = *this;
  if (!r.coeffs_.empty()) r.min_deg_ += by;
  return r;
}

Poly1 Poly1::reversed() const {
  Poly1 r;
  if (zero()) return r;
  r.min_deg_ = -max_deg();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.trim();
  return r;
}

Poly1 Poly1::pow(int n) const {
  assert(n >= 0);
  Poly1 r(1);
  Poly1 base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

mpq_class Poly1::eval(const mpq_class& x) const {
  assert(min_deg_ >= 0 || x != 0);
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  if (min_deg_ > 0)
    for (int i = 0; i < min_deg_; ++i) acc *= x;
  if (min_deg_ < 0)
    for (int i = 0; i < -min_deg_; ++i) acc /= x;
  return acc;
}

std::string Poly1::to_string(const std::string& var) const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = min_deg_; d <= max_deg(); ++d) {
    mpq_class c = coeff(d);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    mpq_class ab = abs(c);
    if (ab != 1 || d == 0) os << ab.get_str();
    if (d != 0) {
      if (ab != 1) os << "*";
      os << var;
      if (d != 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

void Poly1::divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r) {
  if (b.zero()) throw DivisionByZeroPoly("Poly1 division by zero");
  // shift so both are genuine polynomials
  Poly1 aa = a.shifted(a.zero() ? 0 : -a.min_deg());
  Poly1 bb = b.shifted(-b.min_deg());
  q = Poly1();
  r = aa;
  while (!r.zero() && r.max_deg() >= bb.max_deg()) {
    mpq_class f = r.coeff(r.max_deg()) / bb.coeff(bb.max_deg());
    Poly1 m = Poly1::monomial(f, r.max_deg() - bb.max_deg());
    q = q + m;
    r = r - m * bb;
  }
  // undo shifts: a = t^sa * aa, b = t^sb * bb  =>  a = (t^{sa-sb} q) b + t^sa r
  int sa = a.zero() ? 0 : a.min_deg();
  int sb = b.min_deg();
  q = q.shifted(sa - sb);
  r = r.shifted(sa);
}

namespace {

// z-content and primitive part on integer coefficient vectors
mpz_class content_z(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_class a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<mpz_class> to_int_vec(const Poly1& p, int* shift) {
  *shift = p.zero() ? 0 : p.min_deg();
  std::vector<mpz_class> v;
  if (p.zero()) return v;
  mpz_class l = 1;
  for (int d = p.min_deg(); d <= p.max_deg(); ++d) {
    mpq_class c = p.coeff(d);
    mpz_class den = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  for (int d = p.min_deg(); d <= p.max_deg(); ++d) {
    mpq_class c = p.coeff(d) * l;
    v.push_back(c.get_num());
  }
  return v;
}

std::vector<mpz_class> primitive(std::vector<mpz_class> v) {
  mpz_class g = content_z(v);
  if (g > 1)
    for (auto& c : v) c /= g;
  return v;
}

void trim_int(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// primitive PRS gcd on integer polynomial coefficient vectors
std::vector<mpz_class> gcd_int(std::vector<mpz_class> a,
                               std::vector<mpz_class> b) {
  trim_int(a);
  trim_int(b);
  if (a.empty()) return primitive(std::move(b));
  if (b.empty()) return primitive(std::move(a));
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    // pseudo remainder of a by b
    std::vector<mpz_class> r = a;
    mpz_class lb = b.back();
    int k = static_cast<int>(a.size()) - static_cast<int>(b.size());
    for (int i = k; i >= 0; --i) {
      mpz_class top = r[b.size() - 1 + i];
      if (top == 0) continue;
      for (auto& c : r) c *= lb;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] -= top * b[j];
    }
    trim_int(r);
    if (r.empty()) return b;
    r = primitive(std::move(r));
    a = std::move(b);
    b = std::move(r);
    if (a.size() < b.size()) std::swap(a, b);
  }
}

Poly1 from_int_vec(const std::vector<mpz_class>& v, int shift) {
  Poly1 p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      p = p + Poly1::monomial(mpq_class(v[i]), static_cast<int>(i) + shift);
  return p;
}

}  // namespace

Poly1 gcd(const Poly1& a, const Poly1& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  int sa, sb;
  auto va = to_int_vec(a, &sa);
  auto vb = to_int_vec(b, &sb);
  auto g = gcd_int(std::move(va), std::move(vb));
  return from_int_vec(g, 0);
}

// ---------------------------------------------------------------------- Rat1

Rat1::Rat1(Poly1 num, Poly1 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.zero()) throw DivisionByZeroPoly("Rat1 with zero denominator");
  normalize();
}

void Rat1::normalize() {
  if (num_.zero()) {
    den_ = Poly1(1);
    return;
  }
  Poly1 g = gcd(num_, den_);
  if (!(g == Poly1(1))) {
    Poly1 q, r;
    Poly1::divmod(num_, g, q, r);
    assert(r.zero());
    num_ = q;
    Poly1::divmod(den_, g, q, r);
    assert(r.zero());
    den_ = q;
  }
  // shift the denominator's unit monomial into the numerator
  num_ = num_.shifted(-den_.min_deg());
  den_ = den_.shifted(-den_.min_deg());
  // scale so the denominator has integer content 1 and positive lead
  int s;
  auto vd = to_int_vec(den_, &s);
  Poly1 newden = from_int_vec(primitive(vd), 0);
  if (newden.coeff(newden.max_deg()) < 0) newden = -newden;
  // num / den == (num / k) / newden where k = den / newden is a constant
  mpq_class k = den_.coeff(den_.max_deg()) / newden.coeff(newden.max_deg());
  assert(k != 0);
  Poly1 scaled;
  for (int d = num_.zero() ? 0 : num_.min_deg();
       !num_.zero() && d <= num_.max_deg(); ++d) {
    mpq_class cc = num_.coeff(d) / k;
    if (cc != 0) scaled = scaled + Poly1::monomial(cc, d);
  }
  num_ = scaled;
  den_ = newden;
}

Rat1 operator+(const Rat1& a, const Rat1& b) {
  return Rat1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rat1 operator-(const Rat1& a, const Rat1& b) {
  return Rat1(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rat1 operator*(const Rat1& a, const Rat1& b) {
  return Rat1(a.num_ * b.num_, a.den_ * b.den_);
}
Rat1 operator/(const Rat1& a, const Rat1& b) {
  if (b.zero()) throw DivisionByZeroPoly("Rat1 division by zero");
  return Rat1(a.num_ * b.den_, a.den_ * b.num_);
}
Rat1 Rat1::operator-() const { return Rat1(-num_, den_); }

bool operator==(const Rat1& a, const Rat1& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rat1 Rat1::substitute_reciprocal() const {
  return Rat1(num_.reversed(), den_.reversed());
}

std::vector<mpq_class> Rat1::expand(int t_min, int t_max) const {
  std::vector<mpq_class> out;
  if (t_max < t_min) return out;
  if (num_.zero()) {
    out.assign(t_max - t_min + 1, mpq_class(0));
    return out;
  }
  // den_ has min_deg 0 after normalization; require unit constant term
  mpq_class d0 = den_.coeff(0);
  if (d0 == 0)
    throw DivisionByZeroPoly("Rat1::expand: denominator not a unit at t^0");
  int lo = num_.min_deg();
  int hi = t_max;
  // series S with S*den = num, degrees from lo upward
  std::vector<mpq_class> s;
  for (int d = lo; d <= hi; ++d) {
    mpq_class acc = num_.coeff(d);
    for (int j = 1; j <= d - lo && j <= den_.max_deg(); ++j)
      acc -= den_.coeff(j) * s[d - lo - j];
    s.push_back(acc / d0);
  }
  for (int d = t_min; d <= t_max; ++d) {
    if (d < lo)
      out.push_back(0);
    else
      out.push_back(s[d - lo]);
  }
  return out;
}

std::string Rat1::to_string(const std::string& var) const {
  if (den_ == Poly1(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// --------------------------------------------------------------------- Poly2

Poly2::Poly2(const mpq_class& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

Poly2 Poly2::monomial(const mpq_class& c, int td, int qd) {
  Poly2 p;
  if (c != 0) p.terms_[{td, qd}] = c;
  return p;
}

Poly2 Poly2::from_poly1(const Poly1& p) {
  Poly2 r;
  if (p.zero()) return r;
  for (int d = p.min_deg(); d <= p.max_deg(); ++d) {
    mpq_class c = p.coeff(d);
    if (c != 0) r.terms_[{d, 0}] = c;
  }
  return r;
}

mpq_class Poly2::coeff(int td, int qd) const {
  auto it = terms_.find({td, qd});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Poly2::add_term(int td, int qd, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({td, qd}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
  return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
  Poly2 r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

Poly2 Poly2::pow(int n) const {
  assert(n >= 0);
  Poly2 r(1);
  Poly2 base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

int Poly2::min_t() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.first < m) m = k.first;
    first = false;
  }
  return m;
}
int Poly2::max_t() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.first > m) m = k.first;
    first = false;
  }
  return m;
}
int Poly2::min_q() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.second < m) m = k.second;
    first = false;
  }
  return m;
}
int Poly2::max_q() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.second > m) m = k.second;
    first = false;
  }
  return m;
}

Poly2 Poly2::substitute_monomial(int a, int b, int c, int d) const {
  Poly2 r;
  for (const auto& [k, coef] : terms_)
    r.add_term(k.first * a + k.second * c, k.first * b + k.second * d, coef);
  return r;
}

Poly1 Poly2::eval_q(const mpq_class& q) const {
  Poly1 r;
  for (const auto& [k, coef] : terms_) {
    mpq_class f = coef;
    int e = k.second;
    for (int i = 0; i < e; ++i) f *= q;
    for (int i = 0; i > e; --i) f /= q;
    r = r + Poly1::monomial(f, k.first);
  }
  return r;
}

Poly1 Poly2::coeff_of_q(int qd) const {
  Poly1 r;
  for (const auto& [k, coef] : terms_)
    if (k.second == qd) r = r + Poly1::monomial(coef, k.first);
  return r;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    mpq_class ab = abs(c);
    bool wrote = false;
    if (ab != 1 || (k.first == 0 && k.second == 0)) {
      os << ab.get_str();
      wrote = true;
    }
    if (k.first != 0) {
      if (wrote) os << "*";
      os << "t";
      if (k.first != 1) os << "^" << k.first;
      wrote = true;
    }
    if (k.second != 0) {
      if (wrote) os << "*";
      os << "q";
      if (k.second != 1) os << "^" << k.second;
    }
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------- bivariate gcd

namespace {

// dense recursive form: index = q degree, entry = dense t-polynomial (mpz)
using DenseT = std::vector<mpz_class>;
using DenseQT = std::vector<DenseT>;

void trim_t(DenseT& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim_qt(DenseQT& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

DenseT mul_t(const DenseT& a, const DenseT& b) {
  if (a.empty() || b.empty()) return {};
  DenseT r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trim_t(r);
  return r;
}

DenseT sub_t(DenseT a, const DenseT& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_t(a);
  return a;
}

// exact division of integer t-polynomials (remainder must vanish)
DenseT div_exact_t(DenseT a, const DenseT& b) {
  trim_t(a);
  assert(!b.empty());
  if (a.empty()) return {};
  assert(a.size() >= b.size());
  DenseT q(a.size() - b.size() + 1, mpz_class(0));
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    mpz_class top = a[b.size() - 1 + i];
    assert(top % b.back() == 0);
    mpz_class f = top / b.back();
    q[i] = f;
    if (f != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
  }
  trim_t(a);
  assert(a.empty());
  return q;
}

DenseT gcd_t(const DenseT& a, const DenseT& b) {
  std::vector<mpz_class> va = a, vb = b;
  return gcd_int(std::move(va), std::move(vb));
}

DenseT content_q(const DenseQT& p) {
  DenseT g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? primitive(c) : gcd_t(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

DenseQT divide_content(const DenseQT& p, const DenseT& c) {
  DenseQT r;
  for (const auto& e : p)
    r.push_back(e.empty() ? DenseT{} : div_exact_t(e, c));
  return r;
}

DenseQT scale_qt(const DenseQT& p, const DenseT& f) {
  DenseQT r;
  for (const auto& e : p) r.push_back(mul_t(e, f));
  return r;
}

// pseudo remainder of a by b as polynomials in q over Z[t]
DenseQT prem_q(DenseQT a, const DenseQT& b) {
  trim_qt(a);
  int db = static_cast<int>(b.size()) - 1;
  const DenseT& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    DenseT top = a.back();
    a = scale_qt(a, lb);
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = sub_t(a[da - db + j], mul_t(top, b[j]));
    trim_qt(a);
    if (a.empty()) break;
  }
  return a;
}

DenseQT gcd_qt(DenseQT a, DenseQT b) {
  trim_qt(a);
  trim_qt(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  DenseT ca = content_q(a), cb = content_q(b);
  DenseT cg = gcd_t(ca, cb);
  a = divide_content(a, ca);
  b = divide_content(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    DenseQT r = prem_q(a, b);
    if (r.empty()) break;
    DenseT cr = content_q(r);
    r = divide_content(r, cr);
    a = std::move(b);
    b = std::move(r);
    if (a.size() < b.size()) std::swap(a, b);
  }
  DenseT cbb = content_q(b);
  b = divide_content(b, cbb);
  return scale_qt(b, cg);
}

// conversions sparse <-> dense (after clearing rational content and shifting
// exponents to be nonnegative)
DenseQT to_dense(const Poly2& p, int tshift, int qshift) {
  DenseQT r;
  mpz_class l = 1;
  for (const auto& [k, c] : p.terms()) {
    mpz_class den = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  for (const auto& [k, c] : p.terms()) {
    int tq = k.second + qshift;
    int tt = k.first + tshift;
    assert(tq >= 0 && tt >= 0);
    if (static_cast<int>(r.size()) <= tq) r.resize(tq + 1);
    if (static_cast<int>(r[tq].size()) <= tt) r[tq].resize(tt + 1);
    mpq_class scaled = c * l;
    r[tq][tt] = scaled.get_num();
  }
  for (auto& e : r) trim_t(e);
  trim_qt(r);
  return r;
}

Poly2 to_sparse(const DenseQT& p) {
  Poly2 r;
  for (std::size_t qd = 0; qd < p.size(); ++qd)
    for (std::size_t td = 0; td < p[qd].size(); ++td)
      if (p[qd][td] != 0)
        r.add_term(static_cast<int>(td), static_cast<int>(qd),
                   mpq_class(p[qd][td]));
  return r;
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  int ts = -std::min(a.min_t(), b.min_t());
  int qs = -std::min(a.min_q(), b.min_q());
  DenseQT da = to_dense(a, ts, qs);
  DenseQT db = to_dense(b, ts, qs);
  return to_sparse(gcd_qt(std::move(da), std::move(db)));
}

// ---------------------------------------------------------------------- Rat2

Rat2::Rat2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.zero()) throw DivisionByZeroPoly("Rat2 with zero denominator");
  normalize();
}

Rat2 Rat2::from_rat1(const Rat1& r) {
  return Rat2(Poly2::from_poly1(r.num()), Poly2::from_poly1(r.den()));
}

namespace {

// exact division num / g for bivariate polynomials (g must divide num)
Poly2 div_exact(const Poly2& a, const Poly2& g) {
  // polynomial long division in graded-lex order; since divisibility is
  // guaranteed, repeatedly cancel the leading term
  auto lead = [](const Poly2& p) {
    // graded-lex t > q on nonneg exponents
    Poly2::Key best{0, 0};
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
      if (first) {
        best = k;
        first = false;
        continue;
      }
      int da = k.first + k.second, db = best.first + best.second;
      if (da > db || (da == db && k.first > best.first)) best = k;
    }
    return best;
  };
  Poly2 rem = a;
  Poly2 quo;
  Poly2::Key lg = lead(g);
  mpq_class cg = g.coeff(lg.first, lg.second);
  while (!rem.zero()) {
    Poly2::Key lr = lead(rem);
    int dt = lr.first - lg.first, dq = lr.second - lg.second;
    mpq_class f = rem.coeff(lr.first, lr.second) / cg;
    Poly2 m = Poly2::monomial(f, dt, dq);
    quo = quo + m;
    rem = rem - m * g;
  }
  return quo;
}

}  // namespace

void Rat2::normalize() {
  if (num_.zero()) {
    den_ = Poly2(1);
    return;
  }
  // clear unit monomials so gcd operates on true polynomials
  int nt = std::min(num_.min_t(), den_.min_t());
  int nq = std::min(num_.min_q(), den_.min_q());
  Poly2 shift = Poly2::monomial(1, -nt, -nq);
  Poly2 n = num_ * shift;
  Poly2 d = den_ * shift;
  Poly2 g = gcd(n, d);
  if (!(g == Poly2(1))) {
    n = div_exact(n, g);
    d = div_exact(d, g);
  }
  // move the denominator's common monomial factor into the numerator
  if (d.min_t() != 0 || d.min_q() != 0) {
    Poly2 s = Poly2::monomial(1, -d.min_t(), -d.min_q());
    d = d * s;
    n = n * s;
  }
  // scale to integer content one, positive graded-lex leading coefficient
  mpz_class l = 1;
  for (const auto& [k, c] : d.terms()) {
    mpz_class den = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  mpz_class cont = 0;
  for (const auto& [k, c] : d.terms()) {
    mpq_class s = c * l;
    mpz_class a = abs(s.get_num());
    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), a.get_mpz_t());
  }
  mpq_class scale = mpq_class(l) / mpq_class(cont);
  // sign: positive leading coefficient in graded-lex
  Poly2::Key best{0, 0};
  bool first = true;
  for (const auto& [k, c] : d.terms()) {
    if (first) {
      best = k;
      first = false;
      continue;
    }
    int da = k.first + k.second, db = best.first + best.second;
    if (da > db || (da == db && k.first > best.first)) best = k;
  }
  if (d.coeff(best.first, best.second) * scale < 0) scale = -scale;
  Poly2 sc(scale);
  num_ = n * sc;
  den_ = d * sc;
}

Rat2 operator+(const Rat2& a, const Rat2& b) {
  return Rat2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rat2 operator-(const Rat2& a, const Rat2& b) {
  return Rat2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rat2 operator*(const Rat2& a, const Rat2& b) {
  return Rat2(a.num_ * b.num_, a.den_ * b.den_);
}
Rat2 operator/(const Rat2& a, const Rat2& b) {
  if (b.zero()) throw DivisionByZeroPoly("Rat2 division by zero");
  return Rat2(a.num_ * b.den_, a.den_ * b.num_);
}
Rat2 Rat2::operator-() const { return Rat2(-num_, den_); }

bool operator==(const Rat2& a, const Rat2& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rat2 Rat2::substitute_monomial(int a, int b, int c, int d) const {
  return Rat2(num_.substitute_monomial(a, b, c, d),
              den_.substitute_monomial(a, b, c, d));
}

Rat1 Rat2::eval_q(const mpq_class& q) const {
  return Rat1(num_.eval_q(q), den_.eval_q(q));
}

std::string Rat2::to_string() const {
  if (den_ == Poly2(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace spincone
