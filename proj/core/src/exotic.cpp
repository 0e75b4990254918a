#include "bockstein/exotic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

namespace bockstein {

bool WitnessCertificate::valid() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string WitnessCertificate::str() const {
  std::ostringstream out;
  if (problem == Problem::decomposition)
    out << "decomposition n=" << n;
  else
    out << "map n=" << n << " m=" << m;
  out << " D1={" << d1.str() << "} D2={" << d2.str() << "} "
      << (valid() ? "VALID" : "INVALID") << '\n';
  for (const Check& c : checks)
    out << "  " << (c.pass ? "pass" : "FAIL") << " " << c.name << ": " << c.left
        << " " << c.relation << " " << c.right << '\n';
  return out.str();
}

namespace {

Check record(std::string name, std::string left, std::string relation,
             std::string right, bool pass) {
  return {std::move(name), std::move(left), std::move(relation), std::move(right),
          pass};
}

}  // namespace

WitnessCertificate decomposition_feasible(unsigned n, const DimensionType& d1,
                                          const DimensionType& d2) {
  if (n < 2) throw std::invalid_argument("decomposition feasibility requires n >= 2");
  WitnessCertificate cert;
  cert.problem = WitnessCertificate::Problem::decomposition;
  cert.n = n;
  cert.d1 = d1;
  cert.d2 = d2;

  DimensionType bn = DimensionType::boltyanskii(n);
  DimensionType upper = oplus(d1, d2).shifted(1);
  cert.checks.push_back(record("B_n <= D1 (+) D2 + 1", bn.str(), "<=", upper.str(),
                               leq(bn, upper)));
  ExtNat product_dim = boxplus(d1, d2).dim();
  cert.checks.push_back(record("dim(D1 [+] D2) <= n-2", product_dim.str(), "<=",
                               std::to_string(n - 2),
                               product_dim <= ExtNat(n - 2)));
  return cert;
}

namespace {

DimensionType map_bound_type(unsigned n, unsigned m) {
  return DimensionType::make(ExtNat(m - 1),
                             DecoratedValue(ExtNat(n - 1), Decoration::plus));
}

}  // namespace

WitnessCertificate map_feasible(unsigned n, unsigned m, const DimensionType& d1,
                                const DimensionType& d2) {
  if (n < 4 || m < 2 || m > n - 2)
    throw std::invalid_argument("map feasibility requires n >= 4, 2 <= m <= n-2");
  WitnessCertificate cert;
  cert.problem = WitnessCertificate::Problem::map;
  cert.n = n;
  cert.m = m;
  cert.d1 = d1;
  cert.d2 = d2;

  DimensionType bound = map_bound_type(n, m);
  DimensionType upper = oplus(d1, d2).shifted(1);
  cert.checks.push_back(record("D <= D1 (+) D2 + 1", bound.str(), "<=", upper.str(),
                               leq(bound, upper)));
  ExtNat target_dim = d1.dim();
  cert.checks.push_back(record("dim(D1) = m", target_dim.str(), "=",
                               std::to_string(m), target_dim == ExtNat(m)));
  ExtNat fiber_dim = boxplus(d1, d2.shifted(1)).dim();
  cert.checks.push_back(record("dim(D1 [+] (D2+1)) <= n-1", fiber_dim.str(), "<=",
                               std::to_string(n - 1), fiber_dim <= ExtNat(n - 1)));
  return cert;
}

std::pair<DimensionType, DimensionType> paper_witness_decomposition(unsigned n) {
  if (n < 5) throw std::invalid_argument("decomposition witness requires n >= 5");
  DimensionType d1 = DimensionType::make(ExtNat(1),
                                         DecoratedValue(ExtNat(2), Decoration::minus));
  DimensionType d2 = DimensionType::make(
      ExtNat(n - 3), DecoratedValue(ExtNat(n - 4), Decoration::plus));
  return {d1, d2};
}

MapWitness paper_witness_map(unsigned n, unsigned m) {
  if (n < 5 || m < 2 || m > n - 3)
    throw std::invalid_argument("map witness requires n >= 5, 2 <= m <= n-3");
  MapWitness w;
  w.bound = map_bound_type(n, m);
  w.d1 = DimensionType::make(ExtNat(m - 1), DecoratedValue(ExtNat(m), Decoration::minus));
  w.d2 = DimensionType::make(ExtNat(n - m - 1),
                             DecoratedValue(ExtNat(n - m - 2), Decoration::plus));
  return w;
}

std::vector<DimensionType> enumerate_types(const SearchBounds& bounds) {
  if (bounds.max_value < 1) throw std::invalid_argument("max_value must be >= 1");
  const unsigned maxv = bounds.max_value;

  // Decorated candidates at one prime, given q: the regular value plus every
  // decorated value up to the bound.
  auto stored_candidates = [&](unsigned q) {
    std::vector<DecoratedValue> out;
    out.push_back(DecoratedValue(ExtNat(q)));
    for (unsigned v = 1; v <= maxv; ++v) {
      out.push_back(DecoratedValue(ExtNat(v), Decoration::minus));
      out.push_back(DecoratedValue(ExtNat(v), Decoration::plus));
    }
    return out;
  };

  std::vector<DimensionType> out;
  for (unsigned q = 0; q <= maxv; ++q) {
    for (const DecoratedValue& def : stored_candidates(q)) {
      std::vector<std::map<unsigned, DecoratedValue>> exception_maps = {{}};
      for (unsigned p : bounds.exception_primes) {
        std::vector<std::map<unsigned, DecoratedValue>> grown;
        for (const auto& base : exception_maps) {
          grown.push_back(base);  // no exception at p
          for (const DecoratedValue& dv : stored_candidates(q)) {
            if (dv == def) continue;
            auto with = base;
            with.emplace(p, dv);
            grown.push_back(std::move(with));
          }
        }
        exception_maps = std::move(grown);
      }
      for (auto& exc : exception_maps) {
        DimensionType d = DimensionType::make(ExtNat(q), def, std::move(exc));
        if (bounds.realizable_only && !validate(d).realizable) continue;
        out.push_back(std::move(d));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DimensionType& a, const DimensionType& b) {
    return a.str() < b.str();
  });
  return out;
}

namespace {

// Pair enumeration partitioned by first index; chunks are merged in order,
// so the output is identical for every worker count.
std::vector<WitnessCertificate> run_search(
    const SearchBounds& bounds,
    const std::function<WitnessCertificate(const DimensionType&, const DimensionType&)>&
        feasible) {
  std::vector<DimensionType> candidates = enumerate_types(bounds);
  unsigned workers = std::max(1u, bounds.workers);
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, candidates.size()));

  std::vector<std::vector<WitnessCertificate>> chunks(workers);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < candidates.size(); i += workers) {
      for (const DimensionType& d2 : candidates) {
        WitnessCertificate cert = feasible(candidates[i], d2);
        if (cert.valid()) chunks[w].push_back(std::move(cert));
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  std::vector<WitnessCertificate> out;
  for (auto& c : chunks)
    for (auto& cert : c) out.push_back(std::move(cert));
  std::stable_sort(out.begin(), out.end(),
                   [](const WitnessCertificate& a, const WitnessCertificate& b) {
                     return std::make_pair(a.d1.str(), a.d2.str()) <
                            std::make_pair(b.d1.str(), b.d2.str());
                   });
  return out;
}

}  // namespace

std::vector<WitnessCertificate> search_decomposition(unsigned n,
                                                     const SearchBounds& bounds) {
  if (n < 2) throw std::invalid_argument("search requires n >= 2");
  return run_search(bounds, [n](const DimensionType& d1, const DimensionType& d2) {
    return decomposition_feasible(n, d1, d2);
  });
}

std::vector<WitnessCertificate> search_map(unsigned n, unsigned m,
                                           const SearchBounds& bounds) {
  if (n < 4 || m < 2 || m > n - 2)
    throw std::invalid_argument("search requires n >= 4, 2 <= m <= n-2");
  return run_search(bounds, [n, m](const DimensionType& d1, const DimensionType& d2) {
    return map_feasible(n, m, d1, d2);
  });
}

bool LedgerReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const LedgerEntry& e) { return e.pass; });
}

std::size_t LedgerReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [](const LedgerEntry& e) { return !e.pass; }));
}

std::string LedgerReport::str() const {
  std::ostringstream out;
  for (const LedgerEntry& e : entries)
    out << (e.pass ? "PASS" : "FAIL") << " " << e.name << ": " << e.left << " "
        << e.relation << " " << e.right << '\n';
  out << entries.size() - failures() << "/" << entries.size() << " checks passed\n";
  return out.str();
}

namespace {

void entry(LedgerReport& report, std::string name, std::string left,
           std::string relation, std::string right, bool pass) {
  report.entries.push_back({std::move(name), std::move(left), std::move(relation),
                            std::move(right), pass});
}

void ledger_bn_facts(LedgerReport& report) {
  for (unsigned n = 2; n <= 12; ++n) {
    DimensionType bn = DimensionType::boltyanskii(n);
    const std::string tag = "B_" + std::to_string(n);
    std::string zloc;
    bool zloc_ok = true;
    for (unsigned p : {2u, 3u, 5u}) {
      ExtNat v = bn.evaluate(BocksteinGroup::z_localized(p));
      if (!zloc.empty()) zloc += ", ";
      zloc += v.str();
      zloc_ok = zloc_ok && v == ExtNat(n);
    }
    entry(report, tag + "(Z_(p)) = n for p in {2,3,5}", zloc, "=", std::to_string(n),
          zloc_ok);
    ExtNat at_q = bn.evaluate(BocksteinGroup::q());
    entry(report, tag + "(Q) = n-1", at_q.str(), "=", std::to_string(n - 1),
          at_q == ExtNat(n - 1));
    ExtNat at_zp = bn.evaluate(BocksteinGroup::zp(2));
    ExtNat at_zpinf = bn.evaluate(BocksteinGroup::zp_infinity(2));
    entry(report, tag + "(G) = n-1 for G in {Z/p, Z(pinf)}",
          at_zp.str() + ", " + at_zpinf.str(), "=", std::to_string(n - 1),
          at_zp == ExtNat(n - 1) && at_zpinf == ExtNat(n - 1));
  }
}

void ledger_decomposition_chain(LedgerReport& report) {
  for (unsigned n = 5; n <= 12; ++n) {
    auto [d1, d2] = paper_witness_decomposition(n);
    const std::string tag = "decomposition n=" + std::to_string(n);

    DecoratedValue lhs = box_add(d1.star().default_value(), d2.star().default_value());
    DecoratedValue minus_step(ExtNat(n - 2), Decoration::minus);
    entry(report, tag + ": (2+ [+] (n-4)-) = (n-2)-", lhs.str(), "=",
          minus_step.str(), lhs == minus_step);
    DecoratedValue dualized = lhs.dualized();
    DecoratedValue plus_step(ExtNat(n - 2), Decoration::plus);
    entry(report, tag + ": ((n-2)-)* = (n-2)+", dualized.str(), "=", plus_step.str(),
          dualized == plus_step);

    DimensionType sum = oplus(d1, d2);
    entry(report, tag + ": (D1 (+) D2)(p) = (n-2)+", sum.at(2).str(), "=",
          plus_step.str(), sum.at(2) == plus_step);
    entry(report, tag + ": (D1 (+) D2)(Q) = n-2", sum.rational().str(), "=",
          std::to_string(n - 2), sum.rational() == ExtNat(n - 2));
    DimensionType bprev = DimensionType::boltyanskii(n - 1);
    entry(report, tag + ": D1 (+) D2 = B_{n-1}", sum.str(), "=", bprev.str(),
          sum == bprev);
    DimensionType bn = DimensionType::boltyanskii(n);
    entry(report, tag + ": B_{n-1} + 1 = B_n", bprev.shifted(1).str(), "=", bn.str(),
          bprev.shifted(1) == bn);

    DimensionType product = boxplus(d1, d2);
    entry(report, tag + ": (D1 [+] D2)(p) = (n-2)-", product.at(2).str(), "=",
          minus_step.str(), product.at(2) == minus_step);
    ExtNat zloc = product.evaluate(BocksteinGroup::z_localized(2));
    entry(report, tag + ": (D1 [+] D2)(Z_(p)) = n-2", zloc.str(), "=",
          std::to_string(n - 2), zloc == ExtNat(n - 2));
    entry(report, tag + ": dim(D1 [+] D2) <= n-2", product.dim().str(), "<=",
          std::to_string(n - 2), product.dim() <= ExtNat(n - 2));
  }
}

void ledger_map_chain(LedgerReport& report) {
  for (unsigned n = 5; n <= 12; ++n) {
    for (unsigned m = 2; m + 3 <= n; ++m) {
      MapWitness w = paper_witness_map(n, m);
      const std::string tag =
          "map n=" + std::to_string(n) + " m=" + std::to_string(m);
      DecoratedValue plus_step(ExtNat(n - 2), Decoration::plus);
      DecoratedValue minus_step(ExtNat(n - 2), Decoration::minus);

      DimensionType sum = oplus(w.d1, w.d2);
      entry(report, tag + ": (D1 (+) D2)(p) = (n-2)+", sum.at(2).str(), "=",
            plus_step.str(), sum.at(2) == plus_step);
      DimensionType product = boxplus(w.d1, w.d2);
      entry(report, tag + ": (D1 [+] D2)(p) = (n-2)-", product.at(2).str(), "=",
            minus_step.str(), product.at(2) == minus_step);
      DimensionType upper = sum.shifted(1);
      entry(report, tag + ": D <= D1 (+) D2 + 1", w.bound.str(), "<=", upper.str(),
            leq(w.bound, upper));
      ExtNat fiber = boxplus(w.d1, w.d2.shifted(1)).dim();
      entry(report, tag + ": dim(D1 [+] (D2+1)) = n-1", fiber.str(), "=",
            std::to_string(n - 1), fiber == ExtNat(n - 1));
    }
  }
}

void ledger_laws(LedgerReport& report) {
  SearchBounds bounds;
  bounds.max_value = 3;
  bounds.realizable_only = false;
  std::vector<DimensionType> range = enumerate_types(bounds);

  std::size_t oplus_violations = 0;
  std::size_t additivity_violations = 0;
  std::size_t monotone_violations = 0;
  const std::vector<BocksteinGroup> fields = {
      BocksteinGroup::q(), BocksteinGroup::zp(2), BocksteinGroup::zp(3)};
  for (const DimensionType& a : range) {
    for (const DimensionType& b : range) {
      DimensionType box = boxplus(a, b);
      DimensionType circ = oplus(a, b);
      if (!leq(box, circ)) ++oplus_violations;
      for (const BocksteinGroup& f : fields) {
        ExtNat expected = a.evaluate(f) + b.evaluate(f);
        if (box.evaluate(f) != expected || circ.evaluate(f) != expected)
          ++additivity_violations;
      }
      if (leq(a, b)) {
        // monotonicity in the first argument against a fixed second one
        for (const DimensionType& c : {range.front(), range.back()}) {
          if (!leq(boxplus(a, c), boxplus(b, c))) ++monotone_violations;
          if (!leq(oplus(a, c), oplus(b, c))) ++monotone_violations;
        }
      }
    }
  }
  entry(report, "Prop oplus: D1 [+] D2 <= (D1* [+] D2*)* (all pairs, q,v <= 3)",
        std::to_string(oplus_violations) + " violations", "=", "0",
        oplus_violations == 0);
  entry(report, "field additivity over {Q, Z/2, Z/3} (all pairs, q,v <= 3)",
        std::to_string(additivity_violations) + " violations", "=", "0",
        additivity_violations == 0);
  entry(report, "monotonicity of [+] and (+) (all comparable pairs, q,v <= 3)",
        std::to_string(monotone_violations) + " violations", "=", "0",
        monotone_violations == 0);
}

}  // namespace

LedgerReport verify_paper() {
  LedgerReport report;
  ledger_bn_facts(report);
  ledger_decomposition_chain(report);
  ledger_map_chain(report);
  ledger_laws(report);
  return report;
}

}  // namespace bockstein
