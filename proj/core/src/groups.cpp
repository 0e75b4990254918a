#include "bockstein/groups.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bockstein {

std::string GroupAtom::str() const {
  switch (kind) {
    case Kind::Z: return "Z";
    case Kind::Q: return "Q";
    case Kind::ZmodPk:
      if (power == 1) return "Z/" + std::to_string(prime);
      return "Z/" + std::to_string(prime) + "^" + std::to_string(power);
    case Kind::ZpInf: return "Z(" + std::to_string(prime) + "inf)";
    case Kind::ZLoc: return "Z_(" + std::to_string(prime) + ")";
    case Kind::ZInvP: return "Z[1/" + std::to_string(prime) + "]";
  }
  return "?";
}

GroupExpr::GroupExpr(std::vector<GroupAtom> atoms) : atoms_(std::move(atoms)) {
  for (const GroupAtom& a : atoms_) {
    if (a.kind != GroupAtom::Kind::Z && a.kind != GroupAtom::Kind::Q &&
        !is_prime(a.prime))
      throw std::invalid_argument("group atom parameter must be prime");
    if (a.kind == GroupAtom::Kind::ZmodPk && a.power < 1)
      throw std::invalid_argument("Z/p^k requires k >= 1");
  }
  std::sort(atoms_.begin(), atoms_.end());
}

std::string GroupExpr::str() const {
  if (atoms_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out << " + ";
    out << atoms_[i].str();
  }
  return out.str();
}

namespace {

unsigned parse_number(std::string_view text, std::size_t& i, std::size_t base) {
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    throw ParseError("expected number", base + i);
  unsigned long v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    v = v * 10 + static_cast<unsigned long>(text[i] - '0');
    if (v > 1000000) throw ParseError("number out of range", base + i);
    ++i;
  }
  return static_cast<unsigned>(v);
}

unsigned parse_prime(std::string_view text, std::size_t& i, std::size_t base) {
  std::size_t at = i;
  unsigned p = parse_number(text, i, base);
  if (!is_prime(p))
    throw ParseError(std::to_string(p) + " is not prime", base + at);
  return p;
}

GroupAtom parse_atom(std::string_view tok, std::size_t base, bool& is_zero_atom) {
  is_zero_atom = false;
  std::size_t i = 0;
  auto expect = [&](char c) {
    if (i >= tok.size() || tok[i] != c)
      throw ParseError(std::string("expected '") + c + "'", base + i);
    ++i;
  };
  auto done = [&](GroupAtom a) {
    if (i != tok.size()) throw ParseError("trailing input in atom", base + i);
    return a;
  };
  if (tok == "0") {
    is_zero_atom = true;
    return {};
  }
  if (tok == "Q") return {GroupAtom::Kind::Q, 0, 0};
  if (tok == "Z") return {GroupAtom::Kind::Z, 0, 0};
  expect('Z');
  if (i < tok.size() && tok[i] == '/') {
    ++i;
    unsigned p = parse_prime(tok, i, base);
    unsigned k = 1;
    if (i < tok.size() && tok[i] == '^') {
      ++i;
      std::size_t at = i;
      k = parse_number(tok, i, base);
      if (k < 1) throw ParseError("exponent must be >= 1", base + at);
    }
    return done({GroupAtom::Kind::ZmodPk, p, k});
  }
  if (i < tok.size() && tok[i] == '(') {
    ++i;
    unsigned p = parse_prime(tok, i, base);
    expect('i');
    expect('n');
    expect('f');
    expect(')');
    return done({GroupAtom::Kind::ZpInf, p, 0});
  }
  if (i < tok.size() && tok[i] == '_') {
    ++i;
    expect('(');
    unsigned p = parse_prime(tok, i, base);
    expect(')');
    return done({GroupAtom::Kind::ZLoc, p, 0});
  }
  if (i < tok.size() && tok[i] == '[') {
    ++i;
    expect('1');
    expect('/');
    unsigned p = parse_prime(tok, i, base);
    expect(']');
    return done({GroupAtom::Kind::ZInvP, p, 0});
  }
  throw ParseError("unrecognized group atom '" + std::string(tok) + "'", base + i);
}

}  // namespace

GroupExpr GroupExpr::parse(std::string_view text) {
  std::vector<GroupAtom> atoms;
  std::size_t i = 0;
  bool expect_atom = true;
  bool any = false;
  while (i < text.size() || expect_atom) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (expect_atom) {
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '+')
        ++i;
      // '+' inside brackets never occurs in this grammar
      if (i == start) throw ParseError("expected group atom", start);
      bool zero_atom = false;
      GroupAtom a = parse_atom(text.substr(start, i - start), start, zero_atom);
      if (!zero_atom) atoms.push_back(a);
      any = true;
      expect_atom = false;
    } else {
      if (i >= text.size()) break;
      if (text[i] != '+')
        throw ParseError(std::string("expected '+', got '") + text[i] + "'", i);
      ++i;
      expect_atom = true;
    }
  }
  if (!any) throw ParseError("expected group expression", 0);
  return GroupExpr(std::move(atoms));
}

namespace {

// Divisibility of the torsion-free part by p: every torsion-free atom must
// be p-divisible (Z never, Q always, Z_(q) except at q, Z[1/q] only at q).
bool atom_p_divisible(const GroupAtom& a, unsigned p) {
  switch (a.kind) {
    case GroupAtom::Kind::Z: return false;
    case GroupAtom::Kind::Q: return true;
    case GroupAtom::Kind::ZLoc: return a.prime != p;
    case GroupAtom::Kind::ZInvP: return a.prime == p;
    default: throw std::logic_error("torsion atom");
  }
}

}  // namespace

SigmaSet sigma(const GroupExpr& g) {
  SigmaSet s;
  bool free_part = false;
  std::set<unsigned> torsion_primes;
  for (const GroupAtom& a : g.atoms()) {
    if (a.torsion_free())
      free_part = true;
    else
      torsion_primes.insert(a.prime);
  }

  // Z_(p) in sigma(G) iff G/Tor is nonzero and not divisible by p.  The
  // non-divisible primes of each atom form a finite or cofinite set; the
  // union over atoms keeps that shape.
  if (free_part) {
    bool q_member = true;  // Q in sigma(G) iff G/Tor divisible by all p
    for (const GroupAtom& a : g.atoms()) {
      if (!a.torsion_free()) continue;
      switch (a.kind) {
        case GroupAtom::Kind::Z:
          s.z_localized.cofinite = true;
          s.z_localized.primes.clear();
          q_member = false;
          break;
        case GroupAtom::Kind::Q:
          break;  // divisible everywhere, contributes nothing
        case GroupAtom::Kind::ZLoc:
          if (s.z_localized.cofinite)
            s.z_localized.primes.erase(a.prime);
          else
            s.z_localized.primes.insert(a.prime);
          q_member = false;
          break;
        case GroupAtom::Kind::ZInvP:
          // not divisible at every p except a.prime
          if (!s.z_localized.cofinite) {
            std::set<unsigned> excluded = {a.prime};
            for (unsigned p : s.z_localized.primes) excluded.erase(p);
            s.z_localized.cofinite = true;
            s.z_localized.primes = std::move(excluded);
          } else {
            std::set<unsigned> still_excluded;
            for (unsigned p : s.z_localized.primes)
              if (p == a.prime) still_excluded.insert(p);
            s.z_localized.primes = std::move(still_excluded);
          }
          q_member = false;
          break;
        default:
          break;
      }
    }
    s.has_q = q_member;
  }

  // p-torsion: Z/p^k atoms make it non-divisible; only-Z(pinf) makes it a
  // nonzero divisible p-group.
  for (unsigned p : torsion_primes) {
    bool has_finite_cyclic = false;
    for (const GroupAtom& a : g.atoms())
      if (a.kind == GroupAtom::Kind::ZmodPk && a.prime == p) has_finite_cyclic = true;
    if (has_finite_cyclic)
      s.zp.insert(p);
    else
      s.zp_inf.insert(p);
  }
  return s;
}

std::string SigmaSet::str() const {
  std::vector<std::string> parts;
  if (has_q) parts.push_back("Q");
  for (unsigned p : zp) parts.push_back(BocksteinGroup::zp(p).str());
  for (unsigned p : zp_inf) parts.push_back(BocksteinGroup::zp_infinity(p).str());
  if (z_localized.cofinite) {
    std::string family = "Z_(p) for all p";
    if (!z_localized.primes.empty()) {
      family += " not in {";
      bool first = true;
      for (unsigned p : z_localized.primes) {
        if (!first) family += ", ";
        family += std::to_string(p);
        first = false;
      }
      family += "}";
    }
    parts.push_back(std::move(family));
  } else {
    for (unsigned p : z_localized.primes)
      parts.push_back(BocksteinGroup::z_localized(p).str());
  }
  if (parts.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

DimGResult dim_g(const DimensionType& d, const GroupExpr& g) {
  if (g.is_zero()) return {ExtNat(0), true};
  SigmaSet s = sigma(g);
  ExtNat best(0);
  if (s.has_q) best = std::max(best, d.evaluate(BocksteinGroup::q()));
  for (unsigned p : s.zp) best = std::max(best, d.evaluate(BocksteinGroup::zp(p)));
  for (unsigned p : s.zp_inf)
    best = std::max(best, d.evaluate(BocksteinGroup::zp_infinity(p)));
  if (s.z_localized.cofinite) {
    // Cofinite family: the default covers every non-exception prime in the
    // family (the excluded set is finite, so some such prime exists).
    best = std::max(best, d.default_z_localized());
    for (const auto& [p, dv] : d.exceptions())
      if (!s.z_localized.primes.count(p))
        best = std::max(best, d.evaluate(BocksteinGroup::z_localized(p)));
  } else {
    for (unsigned p : s.z_localized.primes)
      best = std::max(best, d.evaluate(BocksteinGroup::z_localized(p)));
  }
  return {best, false};
}

}  // namespace bockstein
