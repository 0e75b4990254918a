#include "bockstein/decorated.hpp"

#include <cctype>

namespace bockstein {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Decoration sign_product(Decoration a, Decoration b) {
  if (a == Decoration::none) return b;
  if (b == Decoration::none) return a;
  if (a == b) return a;
  return Decoration::minus;  // + * - = -
}

DecoratedValue::DecoratedValue(ExtNat value, Decoration dec)
    : value_(value), dec_(dec) {
  if (value_.is_infinite()) {
    dec_ = Decoration::none;
  } else if (dec_ != Decoration::none && value_.finite() < 1) {
    throw std::invalid_argument("decorated value 0 is not allowed");
  }
}

DecoratedValue box_add(const DecoratedValue& a, const DecoratedValue& b) {
  return DecoratedValue(a.value() + b.value(), sign_product(a.dec(), b.dec()));
}

std::string DecoratedValue::str() const {
  if (value_.is_infinite()) return "inf";
  std::string s = std::to_string(value_.finite());
  if (dec_ == Decoration::plus) s += '+';
  if (dec_ == Decoration::minus) s += '-';
  return s;
}

DecoratedValue DecoratedValue::parse(std::string_view text) {
  if (text == "inf") return DecoratedValue(ExtNat::infinity());
  std::size_t i = 0;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    throw ParseError("expected number or 'inf'", i);
  unsigned long v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    v = v * 10 + static_cast<unsigned long>(text[i] - '0');
    if (v > 1000000) throw ParseError("value out of range", i);
    ++i;
  }
  Decoration dec = Decoration::none;
  if (i < text.size()) {
    if (text[i] == '+')
      dec = Decoration::plus;
    else if (text[i] == '-')
      dec = Decoration::minus;
    else
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    ++i;
  }
  if (i != text.size()) throw ParseError("trailing input", i);
  if (dec != Decoration::none && v == 0)
    throw ParseError("decorated value 0 is not allowed", 0);
  return DecoratedValue(ExtNat(static_cast<unsigned>(v)), dec);
}

}  // namespace bockstein
