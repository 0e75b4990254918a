#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bockstein/decorated.hpp"

namespace bockstein {

// Member of the Bockstein basis sigma = {Q, Z_p, Z_{p^inf}, Z_(p)}.
struct BocksteinGroup {
  enum class Kind { Q, Zp, ZpInfinity, ZLocalized };

  Kind kind = Kind::Q;
  unsigned prime = 0;  // 0 for Q

  static BocksteinGroup q() { return {Kind::Q, 0}; }
  static BocksteinGroup zp(unsigned p) { return make(Kind::Zp, p); }
  static BocksteinGroup zp_infinity(unsigned p) { return make(Kind::ZpInfinity, p); }
  static BocksteinGroup z_localized(unsigned p) { return make(Kind::ZLocalized, p); }

  bool is_field() const { return kind == Kind::Q || kind == Kind::Zp; }

  friend auto operator<=>(const BocksteinGroup&, const BocksteinGroup&) = default;

  std::string str() const;

 private:
  static BocksteinGroup make(Kind k, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("parameter must be prime");
    return {k, p};
  }
};

struct ValidityIssue {
  std::string location;
  std::string rule;
  std::string detail;
};

struct ValidityReport {
  bool formal = true;
  bool realizable = true;
  std::vector<ValidityIssue> violations;
};

enum class Singularity { regular, plus_singular, minus_singular };

// Finite or cofinite set of primes.  Cofinite means "all primes except
// `primes`"; finite means exactly `primes`.
struct PrimeSet {
  bool cofinite = false;
  std::set<unsigned> primes;

  std::string str() const;
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
};

// A dimension type: rational value plus a decorated value at every prime,
// stored as a default with a finite exception map.
//
// Formal invariants (enforced at construction):
//   - exception keys are prime and no exception equals the default;
//   - an undecorated stored value equals the rational value (p-regular
//     forces all four derived values equal).
class DimensionType {
 public:
  // The zero type.
  DimensionType() : q_(0), default_(ExtNat(0)) {}

  static DimensionType make(ExtNat q, DecoratedValue def,
                            std::map<unsigned, DecoratedValue> exceptions = {});
  static DimensionType zero() { return DimensionType(); }

  // Maximal Boltyanskii type B_n: rational n-1, (n-1)^+ at every prime.
  static DimensionType boltyanskii(unsigned n);

  // Formal-rule check on raw components; never throws.
  static ValidityReport check(ExtNat q, const DecoratedValue& def,
                              const std::map<unsigned, DecoratedValue>& exceptions);

  ExtNat rational() const { return q_; }
  const DecoratedValue& default_value() const { return default_; }
  const std::map<unsigned, DecoratedValue>& exceptions() const { return exceptions_; }

  // Stored decorated value at p (default unless excepted).
  DecoratedValue at(unsigned p) const;

  bool is_zero() const { return *this == DimensionType(); }

  ExtNat evaluate(const BocksteinGroup& g) const;

  // sup over the whole basis, computed from default and exceptions.
  ExtNat dim() const;

  DimensionType star() const;
  DimensionType shifted(unsigned k) const;

  Singularity singularity(unsigned p) const;

  std::string str() const;
  static DimensionType parse(std::string_view text);

  friend bool operator==(const DimensionType&, const DimensionType&) = default;

  // Derived Z_(p)-value of the default, with no prime named; used for
  // cofinite suprema.
  ExtNat default_z_localized() const;

 private:
  DimensionType(ExtNat q, DecoratedValue def, std::map<unsigned, DecoratedValue> exc)
      : q_(q), default_(def), exceptions_(std::move(exc)) {}

  ExtNat q_;
  DecoratedValue default_;
  std::map<unsigned, DecoratedValue> exceptions_;
};

// Realizability on top of the formal rules: a nonzero type must have every
// derived value >= 1 (the dimension-zero rule).
ValidityReport validate(const DimensionType& d);

bool leq(const DimensionType& a, const DimensionType& b);

DimensionType boxplus(const DimensionType& a, const DimensionType& b);
DimensionType oplus(const DimensionType& a, const DimensionType& b);

bool is_boltyanskii(const DimensionType& d);
bool is_standard(const DimensionType& d);

// Primes where the Z_(p)-value attains dim(d); requires 1 <= dim(d) < inf.
PrimeSet critical_primes(const DimensionType& d);

}  // namespace bockstein
