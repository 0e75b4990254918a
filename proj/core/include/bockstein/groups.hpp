#pragma once

#include <string>
#include <vector>

#include "bockstein/dimtype.hpp"

namespace bockstein {

// Building block of a group expression: Z, Q, Z/p^k, Z_{p^inf}, Z_(p), Z[1/p].
struct GroupAtom {
  enum class Kind { Z, Q, ZmodPk, ZpInf, ZLoc, ZInvP };

  Kind kind = Kind::Z;
  unsigned prime = 0;  // for ZmodPk, ZpInf, ZLoc, ZInvP
  unsigned power = 0;  // for ZmodPk, >= 1

  bool torsion_free() const {
    return kind == Kind::Z || kind == Kind::Q || kind == Kind::ZLoc ||
           kind == Kind::ZInvP;
  }

  friend auto operator<=>(const GroupAtom&, const GroupAtom&) = default;

  std::string str() const;
};

// Formal finite direct sum of atoms; the empty sum is the zero group.
// Equality is multiset equality (atoms are kept sorted).
class GroupExpr {
 public:
  GroupExpr() = default;
  explicit GroupExpr(std::vector<GroupAtom> atoms);

  static GroupExpr zero() { return GroupExpr(); }
  static GroupExpr parse(std::string_view text);

  bool is_zero() const { return atoms_.empty(); }
  const std::vector<GroupAtom>& atoms() const { return atoms_; }

  std::string str() const;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;

 private:
  std::vector<GroupAtom> atoms_;
};

// sigma(G): finite members plus an optional cofinite Z_(p)-family.
struct SigmaSet {
  bool has_q = false;
  std::set<unsigned> zp;
  std::set<unsigned> zp_inf;
  PrimeSet z_localized;  // finite or cofinite set of localization primes

  bool empty() const {
    return !has_q && zp.empty() && zp_inf.empty() && !z_localized.cofinite &&
           z_localized.primes.empty();
  }

  std::string str() const;

  friend bool operator==(const SigmaSet&, const SigmaSet&) = default;
};

SigmaSet sigma(const GroupExpr& g);

struct DimGResult {
  ExtNat value;
  bool zero_group = false;  // degenerate case: dim_0 is 0 by convention
};

// Bockstein Theorem: sup of the derived values over sigma(G).
DimGResult dim_g(const DimensionType& d, const GroupExpr& g);

}  // namespace bockstein
