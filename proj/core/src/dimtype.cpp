#include "bockstein/dimtype.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bockstein {

std::string BocksteinGroup::str() const {
  switch (kind) {
    case Kind::Q: return "Q";
    case Kind::Zp: return "Z/" + std::to_string(prime);
    case Kind::ZpInfinity: return "Z(" + std::to_string(prime) + "inf)";
    case Kind::ZLocalized: return "Z_(" + std::to_string(prime) + ")";
  }
  return "?";
}

std::string PrimeSet::str() const {
  std::ostringstream out;
  if (cofinite && primes.empty()) return "all primes";
  if (cofinite) out << "all primes except ";
  out << '{';
  bool first = true;
  for (unsigned p : primes) {
    if (!first) out << ", ";
    out << p;
    first = false;
  }
  out << '}';
  return out.str();
}

namespace {

// Derived values of one stored decorated number, per the Bockstein
// equality/alternative.
ExtNat derived_zp(const DecoratedValue& dv) { return dv.value(); }

ExtNat derived_zp_infinity(const DecoratedValue& dv) {
  if (dv.dec() == Decoration::minus) return ExtNat(dv.value().finite() - 1);
  return dv.value();
}

ExtNat derived_z_localized(ExtNat q, const DecoratedValue& dv) {
  if (dv.dec() == Decoration::none) return q;
  return std::max(q, derived_zp_infinity(dv) + 1);
}

}  // namespace

ValidityReport DimensionType::check(
    ExtNat q, const DecoratedValue& def,
    const std::map<unsigned, DecoratedValue>& exceptions) {
  ValidityReport report;
  auto fail = [&](std::string location, std::string rule, std::string detail) {
    report.formal = false;
    report.violations.push_back({std::move(location), std::move(rule), std::move(detail)});
  };
  if (def.dec() == Decoration::none && def.value() != q)
    fail("default", "regularity-coupling",
         "regular default must equal q (" + def.str() + " vs q=" + q.str() + ")");
  for (const auto& [p, dv] : exceptions) {
    const std::string loc = "p" + std::to_string(p);
    if (!is_prime(p)) fail(loc, "prime-key", std::to_string(p) + " is not prime");
    if (dv == def) fail(loc, "canonical", "exception equals default");
    if (dv.dec() == Decoration::none && dv.value() != q)
      fail(loc, "regularity-coupling",
           "regular value must equal q (" + dv.str() + " vs q=" + q.str() + ")");
  }
  report.realizable = report.formal;  // refined by validate()
  return report;
}

DimensionType DimensionType::make(ExtNat q, DecoratedValue def,
                                  std::map<unsigned, DecoratedValue> exceptions) {
  ValidityReport report = check(q, def, exceptions);
  if (!report.formal) {
    const ValidityIssue& v = report.violations.front();
    throw std::invalid_argument("invalid dimension type at " + v.location + ": " +
                                v.detail + " [" + v.rule + "]");
  }
  return DimensionType(q, def, std::move(exceptions));
}

DimensionType DimensionType::boltyanskii(unsigned n) {
  if (n < 2) throw std::invalid_argument("B_n requires n >= 2");
  return make(ExtNat(n - 1), DecoratedValue(ExtNat(n - 1), Decoration::plus));
}

DecoratedValue DimensionType::at(unsigned p) const {
  auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_ : it->second;
}

ExtNat DimensionType::evaluate(const BocksteinGroup& g) const {
  switch (g.kind) {
    case BocksteinGroup::Kind::Q:
      return q_;
    case BocksteinGroup::Kind::Zp:
      return derived_zp(at(g.prime));
    case BocksteinGroup::Kind::ZpInfinity:
      return derived_zp_infinity(at(g.prime));
    case BocksteinGroup::Kind::ZLocalized:
      return derived_z_localized(q_, at(g.prime));
  }
  throw std::logic_error("unreachable");
}

ExtNat DimensionType::default_z_localized() const {
  return derived_z_localized(q_, default_);
}

ExtNat DimensionType::dim() const {
  ExtNat best = std::max(q_, default_z_localized());
  for (const auto& [p, dv] : exceptions_)
    best = std::max(best, derived_z_localized(q_, dv));
  return best;
}

DimensionType DimensionType::star() const {
  std::map<unsigned, DecoratedValue> exc;
  for (const auto& [p, dv] : exceptions_) exc.emplace(p, dv.dualized());
  return make(q_, default_.dualized(), std::move(exc));
}

DimensionType DimensionType::shifted(unsigned k) const {
  std::map<unsigned, DecoratedValue> exc;
  for (const auto& [p, dv] : exceptions_) exc.emplace(p, dv.shifted(k));
  return make(q_ + k, default_.shifted(k), std::move(exc));
}

Singularity DimensionType::singularity(unsigned p) const {
  switch (at(p).dec()) {
    case Decoration::none: return Singularity::regular;
    case Decoration::plus: return Singularity::plus_singular;
    default: return Singularity::minus_singular;
  }
}

ValidityReport validate(const DimensionType& d) {
  ValidityReport report;  // formal by construction
  if (d.is_zero()) return report;
  auto require_positive = [&](const std::string& location, const BocksteinGroup& g,
                              ExtNat v) {
    if (v == ExtNat(0)) {
      report.realizable = false;
      report.violations.push_back(
          {location, "zero-rule",
           "derived " + g.str() + "-value is 0 while the type is nonzero"});
    }
  };
  // The prime parameter below only selects default vs exception; use 2 as
  // the generic prime for the default.
  auto check_at = [&](const std::string& location, unsigned p) {
    require_positive(location, BocksteinGroup::zp(p), d.evaluate(BocksteinGroup::zp(p)));
    require_positive(location, BocksteinGroup::zp_infinity(p),
                     d.evaluate(BocksteinGroup::zp_infinity(p)));
    require_positive(location, BocksteinGroup::z_localized(p),
                     d.evaluate(BocksteinGroup::z_localized(p)));
  };
  require_positive("q", BocksteinGroup::q(), d.rational());
  unsigned generic = 2;
  while (!is_prime(generic) || d.exceptions().count(generic)) ++generic;
  check_at("default", generic);
  for (const auto& [p, dv] : d.exceptions()) check_at("p" + std::to_string(p), p);
  return report;
}

bool leq(const DimensionType& a, const DimensionType& b) {
  if (a.rational() > b.rational()) return false;
  if (a.default_value() > b.default_value()) return false;
  std::set<unsigned> primes;
  for (const auto& [p, dv] : a.exceptions()) primes.insert(p);
  for (const auto& [p, dv] : b.exceptions()) primes.insert(p);
  for (unsigned p : primes)
    if (a.at(p) > b.at(p)) return false;
  return true;
}

DimensionType boxplus(const DimensionType& a, const DimensionType& b) {
  DecoratedValue def = box_add(a.default_value(), b.default_value());
  std::set<unsigned> primes;
  for (const auto& [p, dv] : a.exceptions()) primes.insert(p);
  for (const auto& [p, dv] : b.exceptions()) primes.insert(p);
  std::map<unsigned, DecoratedValue> exc;
  for (unsigned p : primes) {
    DecoratedValue v = box_add(a.at(p), b.at(p));
    if (v != def) exc.emplace(p, v);
  }
  return DimensionType::make(a.rational() + b.rational(), def, std::move(exc));
}

DimensionType oplus(const DimensionType& a, const DimensionType& b) {
  return boxplus(a.star(), b.star()).star();
}

namespace {

ExtNat finite_dim_for_classification(const DimensionType& d) {
  ExtNat n = d.dim();
  if (n.is_infinite())
    throw std::invalid_argument("classification requires finite dimension");
  return n;
}

}  // namespace

bool is_boltyanskii(const DimensionType& d) {
  ExtNat n = finite_dim_for_classification(d);
  if (n == ExtNat(0)) return false;  // the zero type is standard
  if (d.rational() >= n) return false;
  if (d.default_value().value() >= n) return false;
  for (const auto& [p, dv] : d.exceptions())
    if (dv.value() >= n) return false;
  return true;
}

bool is_standard(const DimensionType& d) { return !is_boltyanskii(d); }

PrimeSet critical_primes(const DimensionType& d) {
  ExtNat n = finite_dim_for_classification(d);
  if (n == ExtNat(0))
    throw std::invalid_argument("critical primes require dimension >= 1");
  PrimeSet result;
  if (d.default_z_localized() == n) {
    result.cofinite = true;
    for (const auto& [p, dv] : d.exceptions())
      if (d.evaluate(BocksteinGroup::z_localized(p)) != n) result.primes.insert(p);
  } else {
    for (const auto& [p, dv] : d.exceptions())
      if (d.evaluate(BocksteinGroup::z_localized(p)) == n) result.primes.insert(p);
  }
  return result;
}

std::string DimensionType::str() const {
  std::ostringstream out;
  out << "q=" << q_.str();
  if (default_.dec() != Decoration::none) out << " all=" << default_.str();
  for (const auto& [p, dv] : exceptions_) out << " p" << p << "=" << dv.str();
  return out.str();
}

DimensionType DimensionType::parse(std::string_view text) {
  struct Token {
    std::string_view body;
    std::size_t pos;
  };
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back({text.substr(start, i - start), start});
  }
  if (tokens.empty()) throw ParseError("expected 'q=<n|inf>'", 0);

  auto value_of = [](const Token& t) -> std::string_view {
    std::size_t eq = t.body.find('=');
    return eq == std::string_view::npos ? std::string_view{} : t.body.substr(eq + 1);
  };

  const Token& qt = tokens.front();
  if (!qt.body.starts_with("q="))
    throw ParseError("expected 'q=<n|inf>', got '" + std::string(qt.body) + "'", qt.pos);
  DecoratedValue qv = [&] {
    try {
      return DecoratedValue::parse(value_of(qt));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), qt.pos + 2 + e.position);
    }
  }();
  if (qv.dec() != Decoration::none)
    throw ParseError("the rational value carries no decoration", qt.pos + 2);
  ExtNat q = qv.value();

  std::size_t next = 1;
  DecoratedValue def(q);  // omitted 'all' means regular default
  if (next < tokens.size() && tokens[next].body.starts_with("all=")) {
    const Token& t = tokens[next];
    try {
      def = DecoratedValue::parse(value_of(t));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), t.pos + 4 + e.position);
    }
    ++next;
  }

  std::map<unsigned, DecoratedValue> exc;
  for (; next < tokens.size(); ++next) {
    const Token& t = tokens[next];
    if (t.body.size() < 2 || t.body[0] != 'p' ||
        !std::isdigit(static_cast<unsigned char>(t.body[1])))
      throw ParseError("expected 'p<prime>=<value>', got '" + std::string(t.body) + "'",
                       t.pos);
    std::size_t eq = t.body.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected '=' in '" + std::string(t.body) + "'", t.pos);
    unsigned long p = 0;
    for (std::size_t j = 1; j < eq; ++j) {
      if (!std::isdigit(static_cast<unsigned char>(t.body[j])))
        throw ParseError("bad prime in '" + std::string(t.body) + "'", t.pos + j);
      p = p * 10 + static_cast<unsigned long>(t.body[j] - '0');
      if (p > 1000000) throw ParseError("prime out of range", t.pos + j);
    }
    if (!is_prime(static_cast<unsigned>(p)))
      throw ParseError(std::to_string(p) + " is not prime", t.pos + 1);
    DecoratedValue dv = [&] {
      try {
        return DecoratedValue::parse(t.body.substr(eq + 1));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), t.pos + eq + 1 + e.position);
      }
    }();
    if (!exc.emplace(static_cast<unsigned>(p), dv).second)
      throw ParseError("duplicate prime " + std::to_string(p), t.pos);
  }

  // Canonical form drops exceptions equal to the default.
  for (auto it = exc.begin(); it != exc.end();)
    it = (it->second == def) ? exc.erase(it) : std::next(it);
  return make(q, def, std::move(exc));
}

}  // namespace bockstein
