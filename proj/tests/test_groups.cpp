#include <doctest.h>

#include "bockstein/exotic.hpp"
#include "bockstein/groups.hpp"

using namespace bockstein;

namespace {

DimensionType DT(const std::string& literal) { return DimensionType::parse(literal); }
GroupExpr G(const std::string& literal) { return GroupExpr::parse(literal); }

}  // namespace

TEST_CASE("group parsing") {
  CHECK(G("Z").atoms().size() == 1);
  CHECK(G("Z").atoms().front().kind == GroupAtom::Kind::Z);
  GroupExpr g = G("Z/2^2 + Z/3");
  REQUIRE(g.atoms().size() == 2);
  CHECK(g.atoms()[0] == GroupAtom{GroupAtom::Kind::ZmodPk, 2, 2});
  CHECK(g.atoms()[1] == GroupAtom{GroupAtom::Kind::ZmodPk, 3, 1});
  CHECK(G("0").is_zero());
  CHECK(G("Z(2inf)").atoms().front().kind == GroupAtom::Kind::ZpInf);
  CHECK(G("Z_(5)").atoms().front() == GroupAtom{GroupAtom::Kind::ZLoc, 5, 0});
  CHECK(G("Z[1/7]").atoms().front() == GroupAtom{GroupAtom::Kind::ZInvP, 7, 0});
  CHECK_THROWS_AS(G("Z/6^1"), ParseError);
  CHECK_THROWS_AS(G("Z/4"), ParseError);
  CHECK_THROWS_AS(G("Z +"), ParseError);
  CHECK_THROWS_AS(G("W"), ParseError);
  // multiset semantics
  CHECK(G("Z/3 + Q") == G("Q + Z/3"));
  // zero is the identity of the direct sum
  CHECK(G("0 + Z") == G("Z"));
}

TEST_CASE("group printing round trips") {
  for (const char* lit : {"Z", "Q", "0", "Z/2^2 + Z/3", "Z(2inf)", "Z_(3)",
                          "Z[1/5]", "Q + Z(2inf)", "Z + Z/2"}) {
    GroupExpr g = G(lit);
    CHECK(G(g.str()) == g);
  }
}

TEST_CASE("sigma of basis members is the member itself") {
  CHECK(sigma(G("Q")) == SigmaSet{true, {}, {}, {false, {}}});
  CHECK(sigma(G("Z/3")) == SigmaSet{false, {3}, {}, {false, {}}});
  CHECK(sigma(G("Z(2inf)")) == SigmaSet{false, {}, {2}, {false, {}}});
  CHECK(sigma(G("Z_(5)")) == SigmaSet{false, {}, {}, {false, {5}}});
}

TEST_CASE("sigma rules") {
  CHECK(sigma(G("Z")) == SigmaSet{false, {}, {}, {true, {}}});
  CHECK(sigma(G("Z/2^2 + Z/3")) == SigmaSet{false, {2, 3}, {}, {false, {}}});
  CHECK(sigma(G("Q + Z(2inf)")) == SigmaSet{true, {}, {2}, {false, {}}});
  CHECK(sigma(G("Z/2^3")) == SigmaSet{false, {2}, {}, {false, {}}});
  // mixed p-torsion is not divisible
  CHECK(sigma(G("Z/2 + Z(2inf)")) == SigmaSet{false, {2}, {}, {false, {}}});
  // Z[1/p]: localization at all other primes; the printed rule keeps Q out
  CHECK(sigma(G("Z[1/3]")) == SigmaSet{false, {}, {}, {true, {3}}});
  CHECK(sigma(G("Z_(2) + Z_(3)")) == SigmaSet{false, {}, {}, {false, {2, 3}}});
  CHECK(sigma(G("Z[1/2] + Z[1/3]")) == SigmaSet{false, {}, {}, {true, {}}});
  CHECK(sigma(G("0")).empty());
  CHECK(sigma(G("Z/5 + Q + Z")) ==
        SigmaSet{false, {5}, {}, {true, {}}});
}

TEST_CASE("sigma rendering") {
  CHECK(sigma(G("Z")).str() == "Z_(p) for all p");
  CHECK(sigma(G("Z[1/3]")).str() == "Z_(p) for all p not in {3}");
  CHECK(sigma(G("Q + Z/2")).str() == "Q, Z/2");
  CHECK(sigma(G("0")).str() == "(empty)");
}

TEST_CASE("dim_g") {
  CHECK(dim_g(DimensionType::boltyanskii(5), G("Z")).value == ExtNat(5));
  CHECK(dim_g(DT("q=1 all=2-"), G("Z/2^2 + Z/3")).value == ExtNat(2));
  for (unsigned n = 5; n <= 8; ++n)
    CHECK(dim_g(DimensionType::boltyanskii(n), G("Q")).value == ExtNat(n - 1));
  DimGResult zero = dim_g(DT("q=1 all=2-"), G("0"));
  CHECK(zero.value == ExtNat(0));
  CHECK(zero.zero_group);
  // cofinite family meets a prime exception
  CHECK(dim_g(DT("q=2 p3=3+"), G("Z")).value == ExtNat(4));
  CHECK(dim_g(DT("q=2 p3=3+"), G("Z[1/3]")).value == ExtNat(2));
}

TEST_CASE("dim_g is bounded by dim and agrees on basis members") {
  SearchBounds bounds;
  bounds.max_value = 4;
  bounds.exception_primes = {2, 3};
  bounds.realizable_only = false;
  const std::vector<std::string> groups = {"Z",      "Q",        "Z/2",  "Z/3",
                                           "Z(2inf)", "Z(3inf)",  "Z_(2)", "Z_(3)",
                                           "Z[1/2]", "Z/2 + Z/3", "Q + Z(2inf)"};
  for (const auto& d : enumerate_types(bounds)) {
    for (const auto& lit : groups) {
      DimGResult r = dim_g(d, G(lit));
      CHECK(r.value <= d.dim());
    }
    CHECK(dim_g(d, G("Q")).value == d.evaluate(BocksteinGroup::q()));
    CHECK(dim_g(d, G("Z/2")).value == d.evaluate(BocksteinGroup::zp(2)));
    CHECK(dim_g(d, G("Z(3inf)")).value ==
          d.evaluate(BocksteinGroup::zp_infinity(3)));
    CHECK(dim_g(d, G("Z_(2)")).value == d.evaluate(BocksteinGroup::z_localized(2)));
    // Alexandroff consistency: dim over Z is the max of localizations
    if (!d.dim().is_infinite()) CHECK(dim_g(d, G("Z")).value == d.dim());
  }
}
