#include "chungfeller/series.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace cf {

namespace {

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
}

void require_same_order(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": order mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

void require_theorem_class(const StepSetSpec& spec, const char* what) {
  if (spec.class_id() == 3) {
    throw OutOfScope(std::string(what) + " is out of scope for class 3: the Motzkin-type results cover classes 1 and 2");
  }
}

// F at exactly `order`, from a solution computed at order >= `order`.
SeriesUni at_order(const SeriesUni& f, int order) {
  require_order(order);
  if (f.order() < order) throw std::invalid_argument("F must be solved to at least the requested order");
  return f.truncate(order);
}

// sum_{j=lo}^{hi} c y^j z^z_exp; empty when lo > hi.
SeriesBi y_range(int order, const Rational& c, int lo, int hi, int z_exp) {
  SeriesBi out(order);
  for (int j = lo; j <= hi; ++j) out += SeriesBi::monomial(order, c, j, z_exp);
  return out;
}

}  // namespace

// ---- SeriesUni -------------------------------------------------------------

SeriesUni::SeriesUni(int order) : order_(order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

SeriesUni::SeriesUni(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  require_order(order);
  if (coeffs_.size() > static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("more coefficients than the truncation order allows");
  }
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

SeriesUni SeriesUni::monomial(int order, const Rational& c, int exponent) {
  SeriesUni s(order);
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent <= order) s.coeffs_[exponent] = c;
  return s;
}

bool SeriesUni::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int SeriesUni::valuation() const {
  for (int n = 0; n <= order_; ++n) {
    if (coeffs_[n] != 0) return n;
  }
  return order_ + 1;
}

SeriesUni SeriesUni::truncate(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
  return SeriesUni(new_order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

SeriesUni& SeriesUni::operator+=(const SeriesUni& other) {
  require_same_order(order_, other.order_, "series add");
  for (int n = 0; n <= order_; ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

SeriesUni& SeriesUni::operator-=(const SeriesUni& other) {
  require_same_order(order_, other.order_, "series subtract");
  for (int n = 0; n <= order_; ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

SeriesUni& SeriesUni::operator*=(const Rational& c) {
  for (Rational& v : coeffs_) v *= c;
  return *this;
}

SeriesUni operator+(SeriesUni a, const SeriesUni& b) { return a += b; }
SeriesUni operator-(SeriesUni a, const SeriesUni& b) { return a -= b; }
SeriesUni operator*(const Rational& c, SeriesUni a) { return a *= c; }

SeriesUni operator*(const SeriesUni& a, const SeriesUni& b) {
  require_same_order(a.order(), b.order(), "series multiply");
  const int order = a.order();
  SeriesUni out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

SeriesUni pow(const SeriesUni& a, unsigned exponent) {
  SeriesUni result = SeriesUni::one(a.order());
  SeriesUni base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

// ---- SeriesBi --------------------------------------------------------------

SeriesBi::SeriesBi(int order) : order_(order) {
  require_order(order);
  rows_.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) rows_[n].assign(static_cast<std::size_t>(n) + 1, Rational(0));
}

SeriesBi SeriesBi::monomial(int order, const Rational& c, int y_exp, int z_exp) {
  if (y_exp < 0 || z_exp < 0) throw std::invalid_argument("negative exponent");
  if (y_exp > z_exp) throw std::invalid_argument("monomial violates triangularity (y-degree > z-degree)");
  SeriesBi s(order);
  if (z_exp <= order) s.rows_[z_exp][y_exp] = c;
  return s;
}

bool SeriesBi::is_zero() const {
  for (const auto& r : rows_) {
    for (const Rational& c : r) {
      if (c != 0) return false;
    }
  }
  return true;
}

int SeriesBi::z_valuation() const {
  for (int n = 0; n <= order_; ++n) {
    for (const Rational& c : rows_[n]) {
      if (c != 0) return n;
    }
  }
  return order_ + 1;
}

SeriesBi SeriesBi::truncate(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
  SeriesBi out(new_order);
  for (int n = 0; n <= new_order; ++n) out.rows_[n] = rows_[n];
  return out;
}

SeriesBi& SeriesBi::operator+=(const SeriesBi& other) {
  require_same_order(order_, other.order_, "series add");
  for (int n = 0; n <= order_; ++n) {
    for (int m = 0; m <= n; ++m) rows_[n][m] += other.rows_[n][m];
  }
  return *this;
}

SeriesBi& SeriesBi::operator-=(const SeriesBi& other) {
  require_same_order(order_, other.order_, "series subtract");
  for (int n = 0; n <= order_; ++n) {
    for (int m = 0; m <= n; ++m) rows_[n][m] -= other.rows_[n][m];
  }
  return *this;
}

SeriesBi& SeriesBi::operator*=(const Rational& c) {
  for (auto& r : rows_) {
    for (Rational& v : r) v *= c;
  }
  return *this;
}

SeriesBi operator+(SeriesBi a, const SeriesBi& b) { return a += b; }
SeriesBi operator-(SeriesBi a, const SeriesBi& b) { return a -= b; }
SeriesBi operator*(const Rational& c, SeriesBi a) { return a *= c; }

SeriesBi mul(const SeriesBi& a, const SeriesBi& b, Execution exec) {
  require_same_order(a.order(), b.order(), "series multiply");
  const int order = a.order();
  SeriesBi out(order);

  // Row n of the product only reads rows n1 of a and n - n1 of b.
  auto product_row = [&](int n) {
    for (int n1 = 0; n1 <= n; ++n1) {
      const int n2 = n - n1;
      for (int m1 = 0; m1 <= n1; ++m1) {
        const Rational& x = a.at(n1, m1);
        if (x == 0) continue;
        for (int m2 = 0; m2 <= n2; ++m2) {
          const Rational& w = b.at(n2, m2);
          if (w == 0) continue;
          out.at(n, m1 + m2) += x * w;
        }
      }
    }
  };

  if (exec == Execution::serial) {
    for (int n = 0; n <= order; ++n) product_row(n);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int n = order; n >= 0; --n) product_row(n);
  }
  return out;
}

SeriesBi operator*(const SeriesBi& a, const SeriesBi& b) { return mul(a, b, Execution::parallel); }

SeriesBi pow(const SeriesBi& a, unsigned exponent) {
  SeriesBi result = SeriesBi::one(a.order());
  for (unsigned k = 0; k < exponent; ++k) result = result * a;
  return result;
}

SeriesBi lift(const SeriesUni& f) {
  SeriesBi out(f.order());
  for (int n = 0; n <= f.order(); ++n) out.at(n, 0) = f[n];
  return out;
}

SeriesBi substitute_yz(const SeriesUni& f) {
  SeriesBi out(f.order());
  for (int n = 0; n <= f.order(); ++n) out.at(n, n) = f[n];
  return out;
}

SeriesUni invert_unit(const SeriesUni& a) {
  if (a[0] != 1) throw std::invalid_argument("invert_unit: constant term must be 1");
  const SeriesUni x = SeriesUni::one(a.order()) - a;
  SeriesUni r = SeriesUni::one(a.order());
  for (int k = 0; k < a.order(); ++k) r = SeriesUni::one(a.order()) + x * r;
  return r;
}

SeriesBi invert_unit(const SeriesBi& a) {
  if (a.at(0, 0) != 1) throw std::invalid_argument("invert_unit: constant term must be 1");
  const SeriesBi x = SeriesBi::one(a.order()) - a;
  SeriesBi r = SeriesBi::one(a.order());
  for (int k = 0; k < a.order(); ++k) r = SeriesBi::one(a.order()) + x * r;
  return r;
}

// ---- generating functions ----------------------------------------------------

SeriesUni f_equation_rhs(const StepSetSpec& spec, const SeriesUni& f) {
  const int order = f.order();
  SeriesUni rhs = SeriesUni::one(order);

  SeriesUni flats(order);
  for (const auto& [i, b] : spec.flat_set().entries()) flats += SeriesUni::monomial(order, b, i);
  rhs += flats * f;

  const SeriesUni f2 = f * f;
  for (const auto& [i, a] : spec.down_set().entries()) {
    switch (spec.class_id()) {
      case 1:
        rhs += SeriesUni::monomial(order, a, i) * f2;
        break;
      case 2:
        rhs += SeriesUni::monomial(order, a, i + 1) * f2;
        break;
      default:
        rhs += SeriesUni::monomial(order, a, i) * pow(f, static_cast<unsigned>(i + 1));
        break;
    }
  }
  return rhs;
}

SeriesUni f_residual(const StepSetSpec& spec, const SeriesUni& f) { return f_equation_rhs(spec, f) - f; }

SeriesUni solve_F(const StepSetSpec& spec, int order) {
  require_order(order);
  // Every term carrying F has a factor z^e with e >= 1, so each round of the
  // iteration fixes at least one more coefficient.
  for (const auto& [i, w] : spec.flat_set().entries()) {
    if (i < 1) throw std::logic_error("solve_F: flat term without a positive power of z");
  }
  for (const auto& [i, w] : spec.down_set().entries()) {
    const int e = spec.class_id() == 2 ? i + 1 : i;
    if (e < 1) throw std::logic_error("solve_F: down term without a positive power of z");
  }

  SeriesUni f = SeriesUni::one(order);
  for (int round = 1; round <= order + 1; ++round) {
    SeriesUni next = f_equation_rhs(spec, f);
    for (int n = 0; n < std::min(round, order + 1); ++n) {
      if (next[n] != f[n]) throw std::logic_error("solve_F: coefficient changed after it should have settled");
    }
    f = std::move(next);
  }
  return f;
}

SeriesBi build_P(const StepSetSpec& spec, const SeriesUni& f_in, int order) {
  const SeriesUni f = at_order(f_in, order);
  const SeriesBi fz = lift(f);
  SeriesBi p = SeriesBi::one(order);

  SeriesBi flat_terms(order);
  for (const auto& [i, b] : spec.flat_set().entries()) flat_terms += y_range(order, b, 0, i - 1, i);
  p += flat_terms * fz;

  if (spec.class_id() != 3) {
    SeriesBi down_terms(order);
    for (const auto& [i, a] : spec.down_set().entries()) {
      if (spec.class_id() == 1) {
        down_terms += y_range(order, a, 0, i - 2, i);
      } else {
        down_terms += y_range(order, a, 0, i - 1, i + 1);
      }
    }
    p += down_terms * fz * fz;
  }
  return p;
}

SeriesBi build_G(const StepSetSpec& spec, const SeriesUni& f_in, int order) {
  const SeriesUni f = at_order(f_in, order);
  const SeriesBi fz = lift(f);
  const SeriesBi fyz = substitute_yz(f);

  SeriesBi x(order);
  for (const auto& [i, b] : spec.flat_set().entries()) x += SeriesBi::monomial(order, b, i, i);

  switch (spec.class_id()) {
    case 1: {
      SeriesBi below(order);
      SeriesBi above(order);
      for (const auto& [i, a] : spec.down_set().entries()) {
        below += SeriesBi::monomial(order, a, i, i);
        above += SeriesBi::monomial(order, a, i - 1, i);
      }
      x += below * fyz + above * fz;
      break;
    }
    case 2: {
      SeriesBi below(order);
      SeriesBi above(order);
      for (const auto& [i, a] : spec.down_set().entries()) {
        below += SeriesBi::monomial(order, a, i + 1, i + 1);
        above += SeriesBi::monomial(order, a, i, i + 1);
      }
      x += below * fyz + above * fz;
      break;
    }
    default: {
      for (const auto& [i, a] : spec.down_set().entries()) {
        for (int j = 0; j <= i; ++j) {
          x += SeriesBi::monomial(order, a, i - j, i) * pow(fyz, static_cast<unsigned>(i - j)) *
               pow(fz, static_cast<unsigned>(j));
        }
      }
      break;
    }
  }

  const SeriesBi denominator = SeriesBi::one(order) - x;
  if (denominator.at(0, 0) != 1) throw std::logic_error("build_G: denominator constant term is not 1");
  return invert_unit(denominator);
}

SeriesBi build_D_product(const SeriesBi& g, const SeriesBi& p) {
  require_same_order(g.order(), p.order(), "build_D_product");
  return g * p;
}

SeriesBi build_D_closed(const SeriesUni& f_in, int order) {
  const SeriesUni f = at_order(f_in, order);
  SeriesBi d(order);
  for (int n = 0; n <= order; ++n) {
    for (int m = 0; m <= n; ++m) d.at(n, m) = f[n];
  }
  return d;
}

SeriesUni build_H(const StepSetSpec& spec, const SeriesUni& f_in, int k, int order) {
  require_theorem_class(spec, "H^k");
  if (k < 0) throw std::invalid_argument("build_H: k must be >= 0");
  const SeriesUni f = at_order(f_in, order);
  SeriesUni drops(order);
  for (const auto& [i, a] : spec.down_set().entries()) {
    drops += SeriesUni::monomial(order, a, spec.class_id() == 1 ? i - 1 : i);
  }
  return pow(f, static_cast<unsigned>(k + 1)) * pow(drops, static_cast<unsigned>(k));
}

SeriesBi build_M(const StepSetSpec& spec, const SeriesUni& f_in, const SeriesBi& p, int order) {
  require_theorem_class(spec, "M");
  require_same_order(p.order(), order, "build_M");
  const SeriesUni f = at_order(f_in, order);
  const SeriesBi fyz = substitute_yz(f);

  SeriesBi drops(order);
  for (const auto& [i, a] : spec.down_set().entries()) {
    if (spec.class_id() == 1) {
      drops += SeriesBi::monomial(order, a, i - 1, i);
    } else {
      drops += SeriesBi::monomial(order, a, i, i + 1);
    }
  }
  const SeriesBi denominator = SeriesBi::one(order) - drops * fyz * lift(f);
  return p * fyz * invert_unit(denominator);
}

SeriesBi build_M_sum(const StepSetSpec& spec, const SeriesUni& f_in, const SeriesBi& p, int order) {
  require_theorem_class(spec, "M");
  require_same_order(p.order(), order, "build_M_sum");
  const SeriesUni f = at_order(f_in, order);
  const SeriesBi fz = lift(f);

  SeriesBi total(order);
  SeriesBi fz_pow = SeriesBi::one(order);
  // H^k(yz) z^k has z-order >= k, so terms beyond k = order vanish.
  for (int k = 0; k <= order; ++k) {
    const SeriesBi shifted = substitute_yz(build_H(spec, f, k, order)) * SeriesBi::monomial(order, 1, 0, k);
    if (shifted.z_valuation() < k) throw std::logic_error("build_M_sum: H^k(yz) z^k has z-order below k");
    total += shifted * fz_pow * p;
    fz_pow = fz_pow * fz;
  }
  return total;
}

}  // namespace cf
