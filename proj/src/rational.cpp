#include "ppc/rational.hpp"

#include <cctype>

namespace ppc {

namespace {

std::int64_t parse_int(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("Rational::parse: bad ") + what + " '" + text + "'");
  }
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("Rational::parse: empty string");

  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::int64_t p = parse_int(t.substr(0, slash), "numerator");
    std::int64_t q = parse_int(t.substr(slash + 1), "denominator");
    return Rational(p, q);
  }

  if (auto dot = t.find('.'); dot != std::string::npos) {
    bool negative = !t.empty() && t[0] == '-';
    std::string head = t.substr(0, dot);
    std::string frac = t.substr(dot + 1);
    if (frac.size() > 18) frac = frac.substr(0, 18);
    if (head.empty() || head == "-" || head == "+") head += "0";
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("Rational::parse: bad decimal '" + text + "'");
    std::int64_t whole = parse_int(head, "integer part");
    int128 den = 1;
    int128 num = 0;
    for (char c : frac) {
      den *= 10;
      num = num * 10 + (c - '0');
    }
    if (negative) num = -num;
    return make(int128(whole) * den + num, den);
  }

  return Rational(parse_int(t, "integer"), 1);
}

}  // namespace ppc
