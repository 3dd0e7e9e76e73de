#include "nsmooth/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace nsmooth {

Polynomial Polynomial::monomial(ExpPoint e, Rat coeff) {
  Polynomial p;
  p.add_term(e, coeff);
  return p;
}

std::vector<ExpPoint> Polynomial::support() const {
  std::vector<ExpPoint> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Rat Polynomial::coeff(ExpPoint e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(ExpPoint e, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_)
      out.add_term({ea.m + eb.m, ea.n + eb.n}, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::derivative(Var var, int order) const {
  Polynomial cur = *this;
  for (int step = 0; step < order; ++step) {
    Polynomial next;
    for (const auto& [e, c] : cur.terms_) {
      if (var == Var::t1) {
        if (e.m == 0) continue;
        next.add_term({e.m - 1, e.n}, c * e.m);
      } else {
        if (e.n == 0) continue;
        next.add_term({e.m, e.n - 1}, c * e.n);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Polynomial Polynomial::hessian_det() const {
  Polynomial p11 = derivative(Var::t1, 2);
  Polynomial p22 = derivative(Var::t2, 2);
  Polynomial p12 = derivative(Var::t1).derivative(Var::t2);
  return p11 * p22 - p12 * p12;
}

Rat Polynomial::evaluate(const Rat& t1, const Rat& t2) const {
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (long k = 0; k < e.m; ++k) term *= t1;
    for (long k = 0; k < e.n; ++k) term *= t2;
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(double t1, double t2) const {
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (long k = 0; k < e.m; ++k) term *= t1;
    for (long k = 0; k < e.n; ++k) term *= t2;
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::swap_vars() const {
  Polynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(ExpPoint{e.n, e.m}, c);
  return out;
}

Polynomial Polynomial::filter(const std::function<bool(ExpPoint)>& pred) const {
  Polynomial out;
  for (const auto& [e, c] : terms_)
    if (pred(e)) out.terms_.emplace(e, c);
  return out;
}

long Polynomial::max_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max({d, e.m, e.n});
  return d;
}

namespace {

void append_monomial(std::ostringstream& os, ExpPoint e, const Rat& c,
                     bool first) {
  Rat a = c;
  if (first) {
    if (a < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  bool has_vars = e.m != 0 || e.n != 0;
  if (a != 1 || !has_vars) {
    os << to_string(a);
    if (has_vars) os << "*";
  }
  if (e.m != 0) {
    os << "t1";
    if (e.m != 1) os << "^" << e.m;
    if (e.n != 0) os << "*";
  }
  if (e.n != 0) {
    os << "t2";
    if (e.n != 1) os << "^" << e.n;
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_monomial(os, e, c, first);
    first = false;
  }
  return os.str();
}

UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool uni_is_zero(const UniPoly& p) {
  for (const Rat& c : p)
    if (c != 0) return false;
  return true;
}

int uni_degree(const UniPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (p[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

Rat uni_eval(const UniPoly& p, const Rat& x) {
  Rat sum = 0;
  for (std::size_t k = p.size(); k-- > 0;) sum = sum * x + p[k];
  return sum;
}

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly out;
  for (std::size_t k = 1; k < p.size(); ++k)
    out.push_back(p[k] * static_cast<long>(k));
  return uni_trim(std::move(out));
}

std::string uni_to_string(const UniPoly& p) {
  if (uni_is_zero(p)) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    Rat a = p[k];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1 || k == 0) {
      os << to_string(a);
      if (k != 0) os << "*";
    }
    if (k != 0) {
      os << "s";
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

UniPoly slice(const Polynomial& P, Var fixed, int value) {
  UniPoly out;
  for (const auto& [e, c] : P.terms()) {
    long fixed_exp = fixed == Var::t1 ? e.m : e.n;
    long free_exp = fixed == Var::t1 ? e.n : e.m;
    Rat coeff = c;
    if (value < 0 && fixed_exp % 2 != 0) coeff = -coeff;
    if (out.size() <= static_cast<std::size_t>(free_exp))
      out.resize(static_cast<std::size_t>(free_exp) + 1, Rat(0));
    out[static_cast<std::size_t>(free_exp)] += coeff;
  }
  return uni_trim(std::move(out));
}

}  // namespace nsmooth
