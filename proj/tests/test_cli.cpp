#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "bockstein/cli.hpp"
#include "bockstein/dimtype.hpp"

using namespace bockstein;
using bockstein::cli::run;
using nlohmann::json;

TEST_CASE("basic verbs") {
  CHECK(run({"dim", "q=2 all=3+"}).body == "4\n");
  CHECK(run({"eval", "q=4 all=4+", "Z_(3)"}).body == "5\n");
  CHECK(run({"eval", "q=4 all=4+", "Q"}).body == "4\n");
  CHECK(run({"star", "q=1 all=2-"}).body == "q=1 all=2+\n");
  CHECK(run({"boxplus", "q=1 all=2-", "q=2 all=1+"}).body == "q=3 all=3-\n");
  CHECK(run({"oplus", "q=1 all=2-", "q=2 all=1+"}).body == "q=3 all=3+\n");
  CHECK(run({"add", "q=2 all=1+", "1"}).body == "q=3 all=2+\n");
  CHECK(run({"leq", "q=3 all=3+", "q=4 all=4+"}).body == "true\n");
  CHECK(run({"sigma", "Z"}).body == "Z_(p) for all p\n");
  CHECK(run({"dimg", "q=4 all=4+", "Z"}).body == "5\n");
  CHECK(run({"classify", "q=4 all=4+"}).body ==
        "boltyanskii dim=5 critical_primes=all primes\n");
  CHECK(run({"classify", "q=3"}).exit_code == 0);
  CHECK(run({"dimg", "q=1 all=2-", "0"}).body == "0 (zero group)\n");
}

TEST_CASE("search output") {
  auto out = run({"search-decomposition", "5"});
  CHECK(out.exit_code == 0);
  CHECK(out.body.find("q=1 all=2-") != std::string::npos);
  CHECK(out.body.find("q=2 all=1+") != std::string::npos);
  CHECK(out.body.find("found") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"dim", "q=2 all=3+"}).exit_code == 0);
  CHECK(run({"verify-paper"}).exit_code == 0);
  CHECK(run({"dim"}).exit_code == 2);
  CHECK(run({"dim", "nonsense"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"dim", "q=2", "--bogus-flag"}).exit_code == 2);
  CHECK(run({"eval", "q=2", "Z"}).exit_code == 2);  // Z is not a basis member
  CHECK(run({"search-map", "3", "2"}).exit_code == 2);
  CHECK(run({"add", "q=2", "two"}).exit_code == 2);
}

TEST_CASE("assertion exit code") {
  auto empty = run({"search-decomposition", "4", "--assert", "--max-value", "4"});
  CHECK(empty.exit_code == 1);
  auto found = run({"search-decomposition", "5", "--assert"});
  CHECK(found.exit_code == 0);
}

TEST_CASE("usage diagnostics name the offending token") {
  auto out = run({"dim", "q=1 all=7"});
  CHECK(out.exit_code == 2);
  CHECK(out.body.find("q=1 all=7") != std::string::npos);
  auto flag = run({"search-decomposition", "5", "--max-value", "x"});
  CHECK(flag.exit_code == 2);
  CHECK(flag.body.find("'x'") != std::string::npos);
}

TEST_CASE("json and text carry the same numbers") {
  auto text = run({"dim", "q=2 all=3+"});
  auto structured = run({"dim", "q=2 all=3+", "--json"});
  json record = json::parse(structured.body);
  CHECK(record["value"] == 4);
  CHECK(text.body == "4\n");

  auto search = run({"search-decomposition", "5", "--json"});
  json srec = json::parse(search.body);
  CHECK(srec["count"].get<std::size_t>() >= 1);
  for (const auto& cert : srec["certificates"]) {
    CHECK(cert["valid"] == true);
    for (const auto& chk : cert["checks"]) CHECK(chk["pass"] == true);
  }

  auto verify = run({"verify-paper", "--json"});
  json vrec = json::parse(verify.body);
  CHECK(vrec["all_pass"] == true);
}

TEST_CASE("random canonical literals round trip") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<unsigned> qdist(0, 9);
  std::uniform_int_distribution<unsigned> vdist(1, 9);
  std::uniform_int_distribution<int> decdist(0, 1);
  std::uniform_int_distribution<int> shape(0, 3);
  const std::vector<unsigned> primes = {2, 3, 5, 7, 11};
  for (int i = 0; i < 300; ++i) {
    unsigned q = qdist(rng);
    DecoratedValue def =
        shape(rng) == 0
            ? DecoratedValue(ExtNat(q))
            : DecoratedValue(ExtNat(vdist(rng)),
                             decdist(rng) ? Decoration::plus : Decoration::minus);
    std::map<unsigned, DecoratedValue> exc;
    for (unsigned p : primes) {
      if (shape(rng) != 0) continue;
      DecoratedValue dv(ExtNat(vdist(rng)),
                        decdist(rng) ? Decoration::plus : Decoration::minus);
      if (dv == def) continue;
      exc.emplace(p, dv);
    }
    DimensionType d = DimensionType::make(ExtNat(q), def, std::move(exc));
    std::string printed = run({"star", d.star().str()}).body;
    printed.pop_back();
    CHECK(printed == d.str());
    CHECK(DimensionType::parse(printed) == d);
  }
}
