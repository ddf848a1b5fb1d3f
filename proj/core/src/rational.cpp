#include "lorentzlab/rational.hpp"

#include <cctype>
#include <sstream>

namespace lorentzlab {

namespace {

bool parse_integer(const std::string& s, BigInt* out) {
  if (s.empty()) return false;
  const bool neg = s[0] == '-';
  const size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  *out = BigInt(s.substr(i));
  if (neg) *out = BigInt(-*out);
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return std::nullopt;

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (!parse_integer(s.substr(0, slash), &num)) return std::nullopt;
    if (!parse_integer(s.substr(slash + 1), &den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  }

  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    const bool neg = !whole.empty() && whole[0] == '-';
    if (neg || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    BigInt wi = 0, fi = 0;
    if (!whole.empty() && !parse_integer(whole, &wi)) return std::nullopt;
    if (!frac.empty() && !parse_integer(frac, &fi)) return std::nullopt;
    if (fi < 0) return std::nullopt;
    BigInt den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r = Rational(wi) + Rational(fi, den);
    return neg ? -r : r;
  }

  BigInt num;
  if (!parse_integer(s, &num)) return std::nullopt;
  return Rational(num);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace lorentzlab
