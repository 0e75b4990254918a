#include "bockstein/cli.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "bockstein/exotic.hpp"
#include "bockstein/groups.hpp"

namespace bockstein::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json_output = false;
  bool include_unrealizable = false;
  bool assert_nonempty = false;
  unsigned max_value = 5;
  unsigned workers = 1;
  std::vector<unsigned> exception_primes;
  std::vector<std::string> positional;
};

unsigned parse_unsigned(const std::string& token, const std::string& what) {
  if (token.empty()) throw UsageError("empty " + what);
  unsigned long v = 0;
  for (char c : token) {
    if (c < '0' || c > '9')
      throw UsageError("bad " + what + " '" + token + "'");
    v = v * 10 + static_cast<unsigned long>(c - '0');
    if (v > 1000000) throw UsageError(what + " out of range: '" + token + "'");
  }
  return static_cast<unsigned>(v);
}

Options parse_options(const std::vector<std::string>& args, std::size_t start) {
  Options opt;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto flag_value = [&](const std::string& flag) -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError("missing value for " + flag);
      return args[++i];
    };
    if (a == "--json") {
      opt.json_output = true;
    } else if (a == "--include-unrealizable") {
      opt.include_unrealizable = true;
    } else if (a == "--assert") {
      opt.assert_nonempty = true;
    } else if (a == "--max-value") {
      opt.max_value = parse_unsigned(flag_value(a), "max value");
    } else if (a == "--workers") {
      opt.workers = parse_unsigned(flag_value(a), "worker count");
    } else if (a == "--allow-exceptions") {
      std::istringstream in(flag_value(a));
      std::string piece;
      while (std::getline(in, piece, ',')) {
        unsigned p = parse_unsigned(piece, "prime");
        if (!is_prime(p)) throw UsageError("'" + piece + "' is not prime");
        opt.exception_primes.push_back(p);
      }
    } else if (a.starts_with("--")) {
      throw UsageError("unknown flag '" + a + "'");
    } else {
      opt.positional.push_back(a);
    }
  }
  return opt;
}

const std::string& positional(const Options& opt, std::size_t i,
                              const std::string& what) {
  if (i >= opt.positional.size()) throw UsageError("missing argument <" + what + ">");
  return opt.positional[i];
}

void no_extra(const Options& opt, std::size_t count) {
  if (opt.positional.size() > count)
    throw UsageError("unexpected argument '" + opt.positional[count] + "'");
}

DimensionType parse_dimtype_arg(const std::string& text) {
  try {
    return DimensionType::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("bad dimension type '" + text + "': " + e.what());
  }
}

GroupExpr parse_group_arg(const std::string& text) {
  try {
    return GroupExpr::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("bad group '" + text + "': " + e.what());
  }
}

BocksteinGroup parse_member_arg(const std::string& text) {
  GroupExpr g = parse_group_arg(text);
  if (g.atoms().size() == 1) {
    const GroupAtom& a = g.atoms().front();
    switch (a.kind) {
      case GroupAtom::Kind::Q: return BocksteinGroup::q();
      case GroupAtom::Kind::ZmodPk:
        if (a.power == 1) return BocksteinGroup::zp(a.prime);
        break;
      case GroupAtom::Kind::ZpInf: return BocksteinGroup::zp_infinity(a.prime);
      case GroupAtom::Kind::ZLoc: return BocksteinGroup::z_localized(a.prime);
      default: break;
    }
  }
  throw UsageError("'" + text + "' is not a Bockstein basis member");
}

json value_json(ExtNat v) {
  if (v.is_infinite()) return "inf";
  return v.finite();
}

json certificate_json(const WitnessCertificate& c) {
  json checks = json::array();
  for (const Check& chk : c.checks)
    checks.push_back({{"name", chk.name},
                      {"left", chk.left},
                      {"relation", chk.relation},
                      {"right", chk.right},
                      {"pass", chk.pass}});
  json out = {
      {"problem",
       c.problem == WitnessCertificate::Problem::decomposition ? "decomposition"
                                                               : "map"},
      {"n", c.n},
      {"d1", c.d1.str()},
      {"d2", c.d2.str()},
      {"valid", c.valid()},
      {"checks", checks}};
  if (c.problem == WitnessCertificate::Problem::map) out["m"] = c.m;
  return out;
}

OutputEnvelope emit(const Options& opt, const std::string& text, const json& record,
                    int exit_code = 0) {
  if (opt.json_output) return {exit_code, record.dump(2) + "\n"};
  return {exit_code, text + "\n"};
}

OutputEnvelope dispatch(const std::string& verb, const Options& opt) {
  if (verb == "eval") {
    DimensionType d = parse_dimtype_arg(positional(opt, 0, "dimension type"));
    BocksteinGroup g = parse_member_arg(positional(opt, 1, "group"));
    no_extra(opt, 2);
    ExtNat v = d.evaluate(g);
    return emit(opt, v.str(), {{"verb", "eval"}, {"value", value_json(v)}});
  }
  if (verb == "dim") {
    DimensionType d = parse_dimtype_arg(positional(opt, 0, "dimension type"));
    no_extra(opt, 1);
    ExtNat v = d.dim();
    return emit(opt, v.str(), {{"verb", "dim"}, {"value", value_json(v)}});
  }
  if (verb == "star" || verb == "add") {
    DimensionType d = parse_dimtype_arg(positional(opt, 0, "dimension type"));
    DimensionType r;
    if (verb == "star") {
      no_extra(opt, 1);
      r = d.star();
    } else {
      unsigned k = parse_unsigned(positional(opt, 1, "k"), "shift");
      no_extra(opt, 2);
      r = d.shifted(k);
    }
    return emit(opt, r.str(), {{"verb", verb}, {"result", r.str()}});
  }
  if (verb == "boxplus" || verb == "oplus") {
    DimensionType a = parse_dimtype_arg(positional(opt, 0, "dimension type"));
    DimensionType b = parse_dimtype_arg(positional(opt, 1, "dimension type"));
    no_extra(opt, 2);
    DimensionType r = verb == "boxplus" ? boxplus(a, b) : oplus(a, b);
    return emit(opt, r.str(), {{"verb", verb}, {"result", r.str()}});
  }
  if (verb == "leq") {
    DimensionType a = parse_dimtype_arg(positional(opt, 0, "dimension type"));
    DimensionType b = parse_dimtype_arg(positional(opt, 1, "dimension type"));
    no_extra(opt, 2);
    bool r = leq(a, b);
    return emit(opt, r ? "true" : "false", {{"verb", "leq"}, {"result", r}});
  }
  if (verb == "classify") {
    DimensionType d = parse_dimtype_arg(positional(opt, 0, "dimension type"));
    no_extra(opt, 1);
    if (d.dim().is_infinite())
      throw UsageError("classification requires finite dimension");
    bool bolt = is_boltyanskii(d);
    ExtNat n = d.dim();
    std::string kind = bolt ? "boltyanskii" : "standard";
    std::string text = kind + " dim=" + n.str();
    json record = {{"verb", "classify"},
                   {"classification", kind},
                   {"dim", value_json(n)},
                   {"realizable", validate(d).realizable}};
    if (n != ExtNat(0)) {
      PrimeSet crit = critical_primes(d);
      text += " critical_primes=" + crit.str();
      record["critical_primes"] = crit.str();
    }
    return emit(opt, text, record);
  }
  if (verb == "sigma") {
    GroupExpr g = parse_group_arg(positional(opt, 0, "group"));
    no_extra(opt, 1);
    SigmaSet s = sigma(g);
    return emit(opt, s.str(), {{"verb", "sigma"}, {"members", s.str()}});
  }
  if (verb == "dimg") {
    DimensionType d = parse_dimtype_arg(positional(opt, 0, "dimension type"));
    GroupExpr g = parse_group_arg(positional(opt, 1, "group"));
    no_extra(opt, 2);
    DimGResult r = dim_g(d, g);
    std::string text = r.value.str();
    if (r.zero_group) text += " (zero group)";
    return emit(opt, text,
                {{"verb", "dimg"},
                 {"value", value_json(r.value)},
                 {"zero_group", r.zero_group}});
  }
  if (verb == "search-decomposition" || verb == "search-map") {
    unsigned n = parse_unsigned(positional(opt, 0, "n"), "n");
    SearchBounds bounds;
    bounds.max_value = opt.max_value;
    bounds.exception_primes = opt.exception_primes;
    bounds.realizable_only = !opt.include_unrealizable;
    bounds.workers = opt.workers;
    std::vector<WitnessCertificate> found;
    try {
      if (verb == "search-decomposition") {
        no_extra(opt, 1);
        found = search_decomposition(n, bounds);
      } else {
        unsigned m = parse_unsigned(positional(opt, 1, "m"), "m");
        no_extra(opt, 2);
        found = search_map(n, m, bounds);
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::ostringstream text;
    for (const WitnessCertificate& c : found) text << c.str();
    text << "found " << found.size() << " certificate(s)";
    json records = json::array();
    for (const WitnessCertificate& c : found) records.push_back(certificate_json(c));
    int code = (opt.assert_nonempty && found.empty()) ? 1 : 0;
    return emit(opt, text.str(),
                {{"verb", verb}, {"count", found.size()}, {"certificates", records}},
                code);
  }
  if (verb == "verify-paper") {
    no_extra(opt, 0);
    LedgerReport report = verify_paper();
    json entries = json::array();
    for (const LedgerEntry& e : report.entries)
      entries.push_back({{"name", e.name},
                         {"left", e.left},
                         {"relation", e.relation},
                         {"right", e.right},
                         {"pass", e.pass}});
    int code = report.all_pass() ? 0 : 1;
    std::string text = report.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return emit(opt, text,
                {{"verb", "verify-paper"},
                 {"all_pass", report.all_pass()},
                 {"entries", entries}},
                code);
  }
  throw UsageError("unknown command '" + verb + "'");
}

}  // namespace

std::string usage() {
  return "usage: bockstein <command> [args] [flags]\n"
         "commands:\n"
         "  eval <dimtype> <member>        value of the type at a basis member\n"
         "  dim <dimtype>                  dimension of the type\n"
         "  star <dimtype>                 the dual type\n"
         "  boxplus <dimtype> <dimtype>    product-type sum\n"
         "  oplus <dimtype> <dimtype>      join-type sum\n"
         "  add <dimtype> <k>              shift by a constant\n"
         "  leq <dimtype> <dimtype>        order comparison\n"
         "  classify <dimtype>             boltyanskii/standard classification\n"
         "  sigma <group>                  Bockstein basis of a group\n"
         "  dimg <dimtype> <group>         dimension with respect to a group\n"
         "  search-decomposition <n>       exotic-decomposition witness search\n"
         "  search-map <n> <m>             exotic-map witness search\n"
         "  verify-paper                   replay all recorded computations\n"
         "flags: --json --max-value <n> --allow-exceptions <p,...>\n"
         "       --include-unrealizable --workers <n> --assert\n";
}

OutputEnvelope run(const std::vector<std::string>& args) {
  if (args.empty()) return {2, usage()};
  try {
    Options opt = parse_options(args, 1);
    return dispatch(args.front(), opt);
  } catch (const UsageError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace bockstein::cli
