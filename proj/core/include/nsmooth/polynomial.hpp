#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nsmooth/rational.hpp"

namespace nsmooth {

// Exponent pair (m, n) of a monomial t1^m t2^n.
struct ExpPoint {
  long m = 0;
  long n = 0;
  friend auto operator<=>(const ExpPoint&, const ExpPoint&) = default;
};

enum class Var : int { t1 = 1, t2 = 2 };

// Sparse bivariate polynomial with exact rational coefficients.
// Invariant: stored coefficients are nonzero; support() is exactly the
// nonzero-coefficient exponent set.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial monomial(ExpPoint e, Rat coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpPoint, Rat>& terms() const { return terms_; }
  std::vector<ExpPoint> support() const;
  Rat coeff(ExpPoint e) const;

  void add_term(ExpPoint e, const Rat& coeff);

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& rhs) const = default;

  // order-th partial derivative; terms whose exponent drops below zero vanish.
  Polynomial derivative(Var var, int order = 1) const;

  // det of the matrix of second partials: P11*P22 - P12^2.
  Polynomial hessian_det() const;

  Rat evaluate(const Rat& t1, const Rat& t2) const;
  double evaluate(double t1, double t2) const;

  // Exchanges t1 and t2 in every term.
  Polynomial swap_vars() const;

  // Terms whose exponent satisfies pred.
  Polynomial filter(const std::function<bool(ExpPoint)>& pred) const;

  long max_degree() const;  // max over terms of max(m, n); 0 for the zero poly

  // Canonical display, terms in lexicographic (m, n) order.
  std::string to_string() const;

 private:
  std::map<ExpPoint, Rat> terms_;
};

// Dense univariate polynomial, coefficient of s^k at index k.
// Invariant: empty or nonzero leading coefficient.
using UniPoly = std::vector<Rat>;

UniPoly uni_trim(UniPoly p);
bool uni_is_zero(const UniPoly& p);
int uni_degree(const UniPoly& p);  // -1 for the zero polynomial
Rat uni_eval(const UniPoly& p, const Rat& x);
UniPoly uni_derivative(const UniPoly& p);
std::string uni_to_string(const UniPoly& p);

// Restriction of P to the line {fixed = value} (value in {+1, -1}),
// as a univariate polynomial in the other variable.
UniPoly slice(const Polynomial& P, Var fixed, int value);

}  // namespace nsmooth
