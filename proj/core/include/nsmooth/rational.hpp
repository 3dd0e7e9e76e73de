#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nsmooth {

// Exact rational scalar. All geometry and profile arithmetic stays in Rat;
// doubles appear only in the numeric oracles.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p" or "p/q" with q > 0 and gcd(p,q) = 1.
std::string to_string(const Rat& r);

// Accepts "p", "p/q", and decimal literals such as "1.5" or "-0.25".
// Returns nullopt on malformed input or zero denominator.
std::optional<Rat> parse_rational(std::string_view text);

inline double to_double(const Rat& r) { return r.get_d(); }

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace nsmooth
