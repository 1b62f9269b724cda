#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

#include "spincone/polynomial.hpp"

namespace spincone {

struct TruncationMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonExpandableDirection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated formal series with exact rational coefficients, graded primarily
// by t with a finite q-Laurent polynomial at each t degree.
class GradedSeries {
 public:
  explicit GradedSeries(int t_max) : t_max_(t_max) {}

  int t_max() const { return t_max_; }
  bool zero() const { return data_.empty(); }

  mpq_class coeff(int t, int q) const;
  void add(int t, int q, const mpq_class& c);

  // t-slices as q-Laurent polynomials, represented sparsely
  const std::map<int, std::map<int, mpq_class>>& slices() const {
    return data_;
  }
  std::map<int, mpq_class> t_slice(int t) const;
  // q-slice: the series in t sitting at a fixed q degree
  std::map<int, mpq_class> q_slice(int q) const;

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  GradedSeries operator-() const;
  GradedSeries scaled(const mpq_class& c) const;
  friend bool operator==(const GradedSeries& a, const GradedSeries& b);

  GradedSeries truncated(int new_t_max) const;

  // restrict q-degrees via q -> 1 (collapse) for t-only comparisons
  GradedSeries collapse_q() const;

  std::string to_string() const;

 private:
  int t_max_;
  std::map<int, std::map<int, mpq_class>> data_;  // t -> (q -> coeff)
};

// Expand a rational function as a t-ascending series with q-Laurent slice
// coefficients.  Requires that (after removing its corner monomial) every
// non-constant denominator term carries a positive t power.
GradedSeries expand(const Rat2& f, int t_max);
GradedSeries expand(const Rat1& f, int t_max);

// q-directed expansion: the coefficient of q^u as an exact rational function
// of t, for u in [q_min, q_max].  Requires the denominator's lowest q-slice
// to be nonzero.
std::map<int, Rat1> q_expansion(const Rat2& f, int q_min, int q_max);

}  // namespace spincone
