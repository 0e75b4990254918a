#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bockstein {

// Syntax error with the offset of the offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

bool is_prime(unsigned n);

// Natural number extended with infinity.  Infinity absorbs addition.
class ExtNat {
 public:
  constexpr ExtNat() : v_(0) {}
  constexpr ExtNat(unsigned v) : v_(v) {}

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.v_ = kInf;
    return e;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }

  unsigned finite() const {
    if (is_infinite()) throw std::logic_error("ExtNat: value is infinite");
    return v_;
  }

  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) = default;

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtNat(a.v_ + b.v_);
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr unsigned kInf = std::numeric_limits<unsigned>::max();
  unsigned v_;
};

enum class Decoration { minus, none, plus };

// Bockstein sign rule: none is the identity, equal signs are idempotent,
// plus * minus = minus.
Decoration sign_product(Decoration a, Decoration b);

constexpr Decoration dual(Decoration d) {
  switch (d) {
    case Decoration::minus: return Decoration::plus;
    case Decoration::plus: return Decoration::minus;
    default: return Decoration::none;
  }
}

constexpr int decoration_offset(Decoration d) {
  switch (d) {
    case Decoration::minus: return -1;
    case Decoration::plus: return 1;
    default: return 0;
  }
}

// Extended natural with a singularity decoration.
//
// Invariants: infinity carries no decoration; a decorated value is >= 1.
// The total order is n^- < n < n^+ < (n+1)^-, with infinity on top; it is
// realized by the encoding 3n + offset(dec), which is also the stable key
// used for serialized comparisons.
class DecoratedValue {
 public:
  constexpr DecoratedValue() : value_(0), dec_(Decoration::none) {}

  DecoratedValue(ExtNat value, Decoration dec = Decoration::none);

  ExtNat value() const { return value_; }
  Decoration dec() const { return dec_; }

  // Order-preserving encoding; infinity maps above every finite value.
  std::int64_t rank() const {
    if (value_.is_infinite()) return std::numeric_limits<std::int64_t>::max();
    return std::int64_t{3} * value_.finite() + decoration_offset(dec_);
  }

  friend std::strong_ordering operator<=>(const DecoratedValue& a,
                                          const DecoratedValue& b) {
    return a.rank() <=> b.rank();
  }
  friend bool operator==(const DecoratedValue& a, const DecoratedValue& b) {
    return a.rank() == b.rank();
  }

  DecoratedValue dualized() const { return DecoratedValue(value_, dual(dec_)); }

  DecoratedValue shifted(unsigned k) const { return DecoratedValue(value_ + k, dec_); }

  std::string str() const;

  static DecoratedValue parse(std::string_view text);

 private:
  ExtNat value_;
  Decoration dec_;
};

// Product-theorem addition: values add, signs multiply.
DecoratedValue box_add(const DecoratedValue& a, const DecoratedValue& b);

}  // namespace bockstein
