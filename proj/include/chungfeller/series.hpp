#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chungfeller/enumerate.hpp"
#include "chungfeller/rational.hpp"
#include "chungfeller/stepset.hpp"

namespace cf {

// Raised for requests the theory does not cover (Motzkin-type series and
// checks for class 3).
class OutOfScope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Power series in z truncated after z^order. The order is fixed at
// construction; arithmetic between different orders is an error.
class SeriesUni {
 public:
  explicit SeriesUni(int order);
  // Missing high coefficients are zero; more than order + 1 is an error.
  SeriesUni(int order, std::vector<Rational> coeffs);

  static SeriesUni one(int order) { return monomial(order, 1, 0); }
  // c * z^exponent, or zero when exponent > order.
  static SeriesUni monomial(int order, const Rational& c, int exponent);

  int order() const { return order_; }
  const Rational& operator[](int n) const { return coeffs_.at(n); }
  Rational& operator[](int n) { return coeffs_.at(n); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const;
  // Lowest exponent with a nonzero coefficient, order + 1 for the zero series.
  int valuation() const;
  // Same coefficients, lower order. Throws when new_order > order().
  SeriesUni truncate(int new_order) const;

  SeriesUni& operator+=(const SeriesUni& other);
  SeriesUni& operator-=(const SeriesUni& other);
  SeriesUni& operator*=(const Rational& c);

  friend bool operator==(const SeriesUni&, const SeriesUni&) = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

SeriesUni operator+(SeriesUni a, const SeriesUni& b);
SeriesUni operator-(SeriesUni a, const SeriesUni& b);
SeriesUni operator*(const SeriesUni& a, const SeriesUni& b);
SeriesUni operator*(const Rational& c, SeriesUni a);
SeriesUni pow(const SeriesUni& a, unsigned exponent);

// Triangular power series in y and z truncated after z^order: only monomials
// y^m z^n with m <= n <= order exist.
class SeriesBi {
 public:
  explicit SeriesBi(int order);

  static SeriesBi one(int order) { return monomial(order, 1, 0, 0); }
  // c * y^y_exp * z^z_exp (zero when z_exp > order). Throws if y_exp > z_exp.
  static SeriesBi monomial(int order, const Rational& c, int y_exp, int z_exp);

  int order() const { return order_; }
  // Coefficient of y^m z^n.
  const Rational& at(int n, int m) const { return rows_.at(n).at(m); }
  Rational& at(int n, int m) { return rows_.at(n).at(m); }
  std::span<const Rational> row(int n) const { return rows_.at(n); }
  bool is_zero() const;
  // Lowest z-exponent with a nonzero coefficient, order + 1 for zero.
  int z_valuation() const;
  SeriesBi truncate(int new_order) const;

  SeriesBi& operator+=(const SeriesBi& other);
  SeriesBi& operator-=(const SeriesBi& other);
  SeriesBi& operator*=(const Rational& c);

  friend bool operator==(const SeriesBi&, const SeriesBi&) = default;

 private:
  int order_;
  std::vector<std::vector<Rational>> rows_;
};

SeriesBi operator+(SeriesBi a, const SeriesBi& b);
SeriesBi operator-(SeriesBi a, const SeriesBi& b);
// Cauchy product; parallel over z-degree rows.
SeriesBi operator*(const SeriesBi& a, const SeriesBi& b);
SeriesBi operator*(const Rational& c, SeriesBi a);
// Execution::serial is the reference kernel the parallel one is tested against.
SeriesBi mul(const SeriesBi& a, const SeriesBi& b, Execution exec);
SeriesBi pow(const SeriesBi& a, unsigned exponent);

// f(z) viewed as a series in (y, z) with no y-dependence.
SeriesBi lift(const SeriesUni& f);
// f(yz): the coefficient of y^n z^n is f_n.
SeriesBi substitute_yz(const SeriesUni& f);

// 1 / a for a = 1 - X: the geometric sum of X^k for k <= order.
// Throws std::invalid_argument when the constant term is not 1.
SeriesUni invert_unit(const SeriesUni& a);
SeriesBi invert_unit(const SeriesBi& a);

// Right-hand side of the class's equation for the nonnegative-path series:
//   class 1: 1 + B(z) F + sum_A a_i z^i F^2
//   class 2: 1 + B(z) F + sum_A a_i z^(i+1) F^2
//   class 3: 1 + B(z) F + sum_A a_i z^i F^(i+1)
// with B(z) = sum_B b_i z^i.
SeriesUni f_equation_rhs(const StepSetSpec& spec, const SeriesUni& f);
// rhs(F) - F; zero up to the order for the true solution.
SeriesUni f_residual(const StepSetSpec& spec, const SeriesUni& f);
// Fixed-point iteration from F = 1, order + 1 rounds.
SeriesUni solve_F(const StepSetSpec& spec, int order);

// Pointed nonnegative paths by pointed length.
SeriesBi build_P(const StepSetSpec& spec, const SeriesUni& f, int order);
// All (S,0)-paths by non-positive length, as 1 / (1 - X(y, z)).
SeriesBi build_G(const StepSetSpec& spec, const SeriesUni& f, int order);
SeriesBi build_D_product(const SeriesBi& g, const SeriesBi& p);
// (y F(yz) - F(z)) / (y - 1) expanded directly: coefficient of y^m z^n is f_n.
SeriesBi build_D_closed(const SeriesUni& f, int order);
// (S,-k)-nonnegative paths. Classes 1 and 2 only.
SeriesUni build_H(const StepSetSpec& spec, const SeriesUni& f, int k, int order);
// Pointed (S,1)-paths by absolute minimum pointed length, closed form.
SeriesBi build_M(const StepSetSpec& spec, const SeriesUni& f, const SeriesBi& p, int order);
// Same, as the sum over the minimum depth k of H^k(yz) F(z)^k z^k P(y,z).
SeriesBi build_M_sum(const StepSetSpec& spec, const SeriesUni& f, const SeriesBi& p, int order);

}  // namespace cf
