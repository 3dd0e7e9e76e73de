#include "nsmooth/sturm.hpp"

#include <stdexcept>

namespace nsmooth {

namespace {

// Remainder of num / den over the rationals; den nonzero.
UniPoly uni_mod(UniPoly num, const UniPoly& den) {
  int dd = uni_degree(den);
  Rat lead = den[static_cast<std::size_t>(dd)];
  while (uni_degree(num) >= dd) {
    int dn = uni_degree(num);
    Rat factor = num[static_cast<std::size_t>(dn)] / lead;
    for (int k = 0; k <= dd; ++k)
      num[static_cast<std::size_t>(dn - dd + k)] -=
          factor * den[static_cast<std::size_t>(k)];
    num = uni_trim(std::move(num));
    if (num.empty()) break;
  }
  return num;
}

UniPoly uni_div_exact(UniPoly num, const UniPoly& den) {
  int dd = uni_degree(den);
  Rat lead = den[static_cast<std::size_t>(dd)];
  UniPoly quot(num.size(), Rat(0));
  while (uni_degree(num) >= dd) {
    int dn = uni_degree(num);
    Rat factor = num[static_cast<std::size_t>(dn)] / lead;
    quot[static_cast<std::size_t>(dn - dd)] = factor;
    for (int k = 0; k <= dd; ++k)
      num[static_cast<std::size_t>(dn - dd + k)] -=
          factor * den[static_cast<std::size_t>(k)];
    num = uni_trim(std::move(num));
    if (num.empty()) break;
  }
  return uni_trim(std::move(quot));
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

std::vector<UniPoly> sturm_chain(const UniPoly& q) {
  std::vector<UniPoly> chain;
  chain.push_back(q);
  UniPoly d = uni_derivative(q);
  if (d.empty()) return chain;
  chain.push_back(std::move(d));
  while (uni_degree(chain.back()) > 0) {
    UniPoly r = uni_mod(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Sign of p at a finite point, or at -inf/+inf via the leading term.
int sign_at(const UniPoly& p, const std::optional<Rat>& x, bool at_pos_inf) {
  if (x) return sign_of(uni_eval(p, *x));
  int d = uni_degree(p);
  if (d < 0) return 0;
  int lead = sign_of(p[static_cast<std::size_t>(d)]);
  if (at_pos_inf) return lead;
  return d % 2 == 0 ? lead : -lead;
}

int variations(const std::vector<UniPoly>& chain, const std::optional<Rat>& x,
               bool at_pos_inf) {
  int count = 0;
  int prev = 0;
  for (const UniPoly& p : chain) {
    int s = sign_at(p, x, at_pos_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Divides out the root at x once; q(x) must be 0.
UniPoly deflate(const UniPoly& q, const Rat& x) {
  UniPoly lin{-x, Rat(1)};
  return uni_div_exact(q, lin);
}

}  // namespace

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly q = uni_trim(p);
  if (uni_degree(q) <= 0) return q;
  UniPoly g = uni_gcd(q, uni_derivative(q));
  if (uni_degree(g) <= 0) return q;
  return uni_div_exact(q, g);
}

Rat cauchy_root_bound(const UniPoly& p) {
  UniPoly q = uni_trim(p);
  int d = uni_degree(q);
  if (d <= 0) return Rat(1);
  Rat lead = abs(q[static_cast<std::size_t>(d)]);
  Rat worst(0);
  for (int k = 0; k < d; ++k)
    worst = max(worst, abs(q[static_cast<std::size_t>(k)]) / lead);
  return worst + 1;
}

int count_real_roots(const UniPoly& p, const RootBound& lo,
                     const RootBound& hi) {
  UniPoly q = squarefree_part(p);
  if (q.empty()) throw std::invalid_argument("root count of zero polynomial");
  if (lo.value && hi.value && !(*lo.value < *hi.value)) return 0;
  if (lo.value)
    while (uni_degree(q) > 0 && uni_eval(q, *lo.value) == 0)
      q = deflate(q, *lo.value);
  if (hi.value)
    while (uni_degree(q) > 0 && uni_eval(q, *hi.value) == 0)
      q = deflate(q, *hi.value);
  if (uni_degree(q) <= 0) return 0;
  auto chain = sturm_chain(q);
  int v_lo = variations(chain, lo.value, false);
  int v_hi = variations(chain, hi.value, true);
  return v_lo - v_hi;
}

namespace {

void isolate_rec(const UniPoly& q, const Rat& a, const Rat& b,
                 std::vector<std::pair<Rat, Rat>>& out) {
  int k = count_real_roots(q, RootBound::at(a), RootBound::at(b));
  if (k == 0) return;
  if (k == 1 && b - a <= 1) {
    out.emplace_back(a, b);
    return;
  }
  Rat mid = (a + b) / 2;
  isolate_rec(q, a, mid, out);
  if (uni_eval(q, mid) == 0) out.emplace_back(mid, mid);
  isolate_rec(q, mid, b, out);
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& p) {
  UniPoly q = squarefree_part(p);
  std::vector<std::pair<Rat, Rat>> out;
  if (uni_degree(q) <= 0) return out;
  Rat bound = cauchy_root_bound(q);
  if (uni_eval(q, -bound) == 0) out.emplace_back(-bound, -bound);
  isolate_rec(q, -bound, bound, out);
  if (uni_eval(q, bound) == 0) out.emplace_back(bound, bound);
  return out;
}

}  // namespace nsmooth
