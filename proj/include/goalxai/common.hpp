#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace goalxai {

/// Raised for malformed or inconsistent caller input (unknown ids, bad values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orders identifiers so that embedded digit runs compare numerically
/// ("A2" < "A10", "g9" < "g12"). Ties fall back to plain string order.
struct NaturalLess {
  using is_transparent = void;

  bool operator()(std::string_view a, std::string_view b) const {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
      const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
      if (da && db) {
        std::size_t ie = i, je = j;
        while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
        while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
        // strip leading zeros, then compare by length and digits
        std::size_t is = i, js = j;
        while (is + 1 < ie && a[is] == '0') ++is;
        while (js + 1 < je && b[js] == '0') ++js;
        if (ie - is != je - js) return ie - is < je - js;
        const int c = a.substr(is, ie - is).compare(b.substr(js, je - js));
        if (c != 0) return c < 0;
        i = ie;
        j = je;
        continue;
      }
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
    if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
    return a < b;
  }
};

using Id = std::string;
using IdSet = std::set<Id, NaturalLess>;
using IdPair = std::pair<Id, Id>;

struct PairLess {
  bool operator()(const IdPair& a, const IdPair& b) const {
    NaturalLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

using IdPairSet = std::set<IdPair, PairLess>;

/// Lexicographic order over sorted member lists, used for every set-of-sets result.
struct IdSetLess {
  bool operator()(const IdSet& a, const IdSet& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), NaturalLess{});
  }
};

inline std::string join(const IdSet& ids, std::string_view sep = ", ") {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += sep;
    out += id;
  }
  return out;
}

/// Exact preference and utility values.
using Rational = boost::rational<std::int64_t>;

/// Parses "0.8", "1", "-2.25", "4/5" or "1e-1" into an exact fraction.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational { throw InputError("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = 0, den = 0;
    auto n = text.substr(0, slash);
    auto d = text.substr(slash + 1);
    if (std::from_chars(n.data(), n.data() + n.size(), num).ptr != n.data() + n.size() || n.empty()) return fail();
    if (std::from_chars(d.data(), d.data() + d.size(), den).ptr != d.data() + d.size() || d.empty()) return fail();
    if (den == 0) return fail();
    return Rational(num, den);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-' || text[pos] == '+') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t mantissa = 0;
  int scale = 0;  // decimal exponent applied to mantissa
  bool any_digit = false;
  bool seen_point = false;
  constexpr std::int64_t kLimit = (INT64_MAX - 9) / 10;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      if (mantissa > kLimit) throw InputError("too many digits in '" + std::string(text) + "'");
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return fail();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') return fail();
    int exp = 0;
    auto rest = text.substr(pos + 1);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    if (std::from_chars(rest.data(), rest.data() + rest.size(), exp).ptr != rest.data() + rest.size() || rest.empty())
      return fail();
    scale += exp;
  }
  if (scale > 18 || scale < -18) throw InputError("exponent out of range in '" + std::string(text) + "'");
  std::int64_t pow10 = 1;
  for (int k = 0; k < (scale < 0 ? -scale : scale); ++k) pow10 *= 10;
  Rational value = scale < 0 ? Rational(mantissa, pow10) : Rational(mantissa) * pow10;
  return negative ? -value : value;
}

/// Converts a binary double to the exact fraction of its shortest decimal spelling
/// (0.8 -> 4/5). Used for preference values read from JSON numbers.
inline Rational rational_from_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  if (res.ec != std::errc{}) throw InputError("cannot represent number");
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

/// Terminating fractions print as decimals ("2.4"); others as "p/q".
inline std::string to_string(const Rational& value) {
  std::int64_t den = value.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());

  const int digits = std::max(twos, fives);
  std::int64_t scaled = value.numerator();
  std::int64_t mul = value.denominator();
  // numerator * (10^digits / denominator) is exact
  std::int64_t pow10 = 1;
  for (int k = 0; k < digits; ++k) pow10 *= 10;
  scaled *= pow10 / mul;
  const bool negative = scaled < 0;
  std::string mag = std::to_string(negative ? -scaled : scaled);
  if (digits > 0) {
    if (mag.size() <= static_cast<std::size_t>(digits)) mag.insert(0, static_cast<std::size_t>(digits) - mag.size() + 1, '0');
    mag.insert(mag.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + mag : mag;
}

}  // namespace goalxai
