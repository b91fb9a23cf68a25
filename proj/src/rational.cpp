#include "advicepack/rational.hpp"

#include "advicepack/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <sstream>

namespace advicepack {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    return Rat(BigInt(num), d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!is_integer_token(whole)) return std::nullopt;
    if (frac.empty()) return Rat(BigInt(whole));
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt frac_num(frac);
    bool negative = s[0] == '-';
    Rat value = Rat(BigInt(whole)) +
                (negative ? -Rat(frac_num, scale) : Rat(frac_num, scale));
    return value;
  }
  if (!is_integer_token(s)) return std::nullopt;
  return Rat(BigInt(s));
}

Rat parse_rational_or_throw(const std::string& text) {
  auto r = parse_rational(text);
  if (!r) throw BadParams("not a rational: '" + text + "'");
  return *r;
}

std::string to_fraction_string(const Rat& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

int ceil_log2(const BigInt& x) {
  if (x <= 1) return 0;
  BigInt y = x - 1;
  return static_cast<int>(boost::multiprecision::msb(y)) + 1;
}

int ceil_log2_u64(std::uint64_t x) { return ceil_log2(BigInt(x)); }

bool is_item_size(const Rat& r) { return r > 0 && r <= 1; }

}  // namespace advicepack
