#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bockstein/dimtype.hpp"

namespace bockstein {

// One recorded inequality with both sides rendered.
struct Check {
  std::string name;
  std::string left;
  std::string relation;
  std::string right;
  bool pass = false;
};

struct WitnessCertificate {
  enum class Problem { decomposition, map };

  Problem problem = Problem::decomposition;
  unsigned n = 0;
  unsigned m = 0;  // map problem only
  DimensionType d1;
  DimensionType d2;
  std::vector<Check> checks;

  bool valid() const;

  // One check per line: name, left, relation, right, pass.
  std::string str() const;
};

struct SearchBounds {
  unsigned max_value = 5;
  std::vector<unsigned> exception_primes;  // empty: uniform types only
  bool realizable_only = true;
  unsigned workers = 1;
};

// Exotic-decomposition feasibility for dimension n: the Boltyanskii bound
// B_n must fit under oplus + 1 while the boxplus stays at dimension n-2.
WitnessCertificate decomposition_feasible(unsigned n, const DimensionType& d1,
                                          const DimensionType& d2);

// Exotic-map feasibility for an n-dimensional source mapped onto an
// m-dimensional target; the bound type is fixed to q=m-1, (n-1)^+ at all p.
WitnessCertificate map_feasible(unsigned n, unsigned m, const DimensionType& d1,
                                const DimensionType& d2);

// The explicit witness pair D1 = {q=1, 2^- at all p},
// D2 = {q=n-3, (n-4)^+ at all p}; defined for n >= 5.
std::pair<DimensionType, DimensionType> paper_witness_decomposition(unsigned n);

struct MapWitness {
  DimensionType bound;  // the fixed target pattern D
  DimensionType d1;
  DimensionType d2;
};

// D = {q=m-1, (n-1)^+}, D1 = {q=m-1, m^-}, D2 = {q=n-m-1, (n-m-2)^+};
// defined for n >= 5, 2 <= m <= n-3.
MapWitness paper_witness_map(unsigned n, unsigned m);

std::vector<WitnessCertificate> search_decomposition(unsigned n,
                                                     const SearchBounds& bounds);
std::vector<WitnessCertificate> search_map(unsigned n, unsigned m,
                                           const SearchBounds& bounds);

struct LedgerEntry {
  std::string name;
  std::string left;
  std::string relation;
  std::string right;
  bool pass = false;
};

struct LedgerReport {
  std::vector<LedgerEntry> entries;

  bool all_pass() const;
  std::size_t failures() const;
  std::string str() const;
};

// Recompute every dimension-type identity used by the explicit witness
// constructions, plus the algebraic laws they rely on, and report both
// sides of each one.
LedgerReport verify_paper();

// Candidate enumeration behind the searches, exposed for testing: all
// formally valid (and, on request, realizable) types with rational part and
// values bounded by bounds.max_value, exceptions drawn from
// bounds.exception_primes, in canonical order.
std::vector<DimensionType> enumerate_types(const SearchBounds& bounds);

}  // namespace bockstein
