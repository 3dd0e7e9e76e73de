#include "nsmooth/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace nsmooth {

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  if (text.front() == '+' || text.front() == '-') {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  auto dot = text.find('.');
  Rat value;
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) return std::nullopt;
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = Rat(mpz_class(std::string(num), 10), d);
  } else if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    value = Rat(w);
    if (!frac.empty()) {
      mpz_class f(std::string(frac), 10);
      mpz_class scale = 1;
      for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
      value += Rat(f, scale);
    }
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rat(mpz_class(std::string(text), 10));
  }
  value.canonicalize();
  if (neg) value = -value;
  return value;
}

}  // namespace nsmooth
