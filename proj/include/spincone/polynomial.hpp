#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spincone {

struct DivisionByZeroPoly : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Univariate Laurent polynomials over Q (dense, variable "t").

class Poly1 {
 public:
  Poly1() = default;
  Poly1(const mpq_class& c);  // NOLINT: implicit constant
  static Poly1 monomial(const mpq_class& c, int deg);

  bool zero() const { return coeffs_.empty(); }
  int min_deg() const { return min_deg_; }
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  mpq_class coeff(int deg) const;
  void set_coeff(int deg, const mpq_class& c);

  Poly1 operator-() const;
  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend bool operator==(const Poly1& a, const Poly1& b);

  Poly1 shifted(int by) const;     // multiply by t^by
  Poly1 reversed() const;          // t -> 1/t
  Poly1 pow(int n) const;
  mpq_class eval(const mpq_class& x) const;

  std::string to_string(const std::string& var = "t") const;

  // division with remainder by a polynomial with invertible leading coeff
  static void divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r);

 private:
  void trim();
  int min_deg_ = 0;
  std::vector<mpq_class> coeffs_;  // coeffs_[i] is the coefficient of
                                   // t^(min_deg_ + i); front/back nonzero
};

Poly1 gcd(const Poly1& a, const Poly1& b);  // monic-free primitive gcd

// Reduced fraction of univariate polynomials.  Denominator is a true
// polynomial with min degree 0, integer content 1 and positive leading
// coefficient.
class Rat1 {
 public:
  Rat1() : num_(Poly1(0)), den_(Poly1(1)) {}
  Rat1(Poly1 num, Poly1 den);
  Rat1(const mpq_class& c) : Rat1(Poly1(c), Poly1(1)) {}  // NOLINT

  const Poly1& num() const { return num_; }
  const Poly1& den() const { return den_; }
  bool zero() const { return num_.zero(); }

  friend Rat1 operator+(const Rat1& a, const Rat1& b);
  friend Rat1 operator-(const Rat1& a, const Rat1& b);
  friend Rat1 operator*(const Rat1& a, const Rat1& b);
  friend Rat1 operator/(const Rat1& a, const Rat1& b);
  Rat1 operator-() const;
  friend bool operator==(const Rat1& a, const Rat1& b);

  Rat1 substitute_reciprocal() const;  // t -> 1/t

  // ascending t-expansion; requires the denominator to be a unit at its
  // minimal degree (always true after normalization)
  std::vector<mpq_class> expand(int t_min, int t_max) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  Poly1 num_;
  Poly1 den_;
};

// ---------------------------------------------------------------------------
// Bivariate Laurent polynomials over Q in (t, q), sparse.

class Poly2 {
 public:
  using Key = std::pair<int, int>;  // (t exponent, q exponent)
  using Map = std::map<Key, mpq_class>;

  Poly2() = default;
  Poly2(const mpq_class& c);  // NOLINT
  static Poly2 monomial(const mpq_class& c, int td, int qd);
  static Poly2 from_poly1(const Poly1& p);  // in the t variable

  bool zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  mpq_class coeff(int td, int qd) const;
  void add_term(int td, int qd, const mpq_class& c);

  Poly2 operator-() const;
  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b);

  Poly2 pow(int n) const;

  int min_t() const;
  int max_t() const;
  int min_q() const;
  int max_q() const;

  // monomial substitution t -> t^a q^b, q -> t^c q^d
  Poly2 substitute_monomial(int a, int b, int c, int d) const;

  Poly1 eval_q(const mpq_class& q) const;   // specialize q
  Poly1 coeff_of_q(int qd) const;           // t-polynomial at fixed q power

  std::string to_string() const;

 private:
  Map terms_;  // nonzero coefficients only
};

// Reduced fraction of bivariate polynomials in normal form: denominator has
// min t- and q-degree zero, gcd(num, den) = 1, integer content 1 on the
// denominator, positive leading coefficient in graded-lex (t > q).
class Rat2 {
 public:
  Rat2() : num_(Poly2(0)), den_(Poly2(1)) {}
  Rat2(Poly2 num, Poly2 den);
  Rat2(const mpq_class& c) : Rat2(Poly2(c), Poly2(1)) {}  // NOLINT
  static Rat2 from_rat1(const Rat1& r);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool zero() const { return num_.zero(); }

  friend Rat2 operator+(const Rat2& a, const Rat2& b);
  friend Rat2 operator-(const Rat2& a, const Rat2& b);
  friend Rat2 operator*(const Rat2& a, const Rat2& b);
  friend Rat2 operator/(const Rat2& a, const Rat2& b);
  Rat2 operator-() const;
  friend bool operator==(const Rat2& a, const Rat2& b);  // cross-multiplied

  // t -> t^a q^b, q -> t^c q^d
  Rat2 substitute_monomial(int a, int b, int c, int d) const;

  Rat1 eval_q(const mpq_class& q) const;

  std::string to_string() const;

 private:
  void normalize();
  Poly2 num_;
  Poly2 den_;
};

Poly2 gcd(const Poly2& a, const Poly2& b);

}  // namespace spincone
