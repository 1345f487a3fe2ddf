#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlcm/decision.hpp"
#include "qlcm/free_monoid.hpp"
#include "qlcm/self_similar.hpp"

using namespace qlcm;

TEST_CASE("word helpers") {
  CHECK(isPrefix("", "01"));
  CHECK(isPrefix("01", "011"));
  CHECK_FALSE(isPrefix("10", "01"));
  CHECK(comparable("0", "010"));
  CHECK_FALSE(comparable("01", "00"));
  CHECK(wordsOfLength("01", 3).size() == 8);
  CHECK(wordsUpTo("01", 3).size() == 15);
  CHECK(wordsUpTo("abc", 2).size() == 13);
  CHECK(showWord("") == "\xCE\xB5");
  CHECK(showWord("01") == "01");
}

TEST_CASE("three-valued verdicts") {
  auto h = Verdict3::holdsExact("why", "w");
  auto f = Verdict3::failsAt(3, "cx");
  auto u = Verdict3::unknownAt(5, "ran out");
  CHECK(conj(h, f).fails());
  CHECK(conj(f, h).fails());
  CHECK(conj(h, u).unknown());
  CHECK(conj(u, f).fails());
  CHECK(conj(h, h).holds());
  CHECK(conj(h, h).exact);
  CHECK_FALSE(conj(h, Verdict3::holdsAt(2)).exact);
  CHECK(describe(h) == "HOLDS (exact, via why) witness: w");
  CHECK(describe(f) == "FAILS (bound=3) witness: cx");
  CHECK(describe(u) == "UNKNOWN at bound 5 (ran out)");
  CHECK(conjAll({h, h, f, u}).fails());
}

TEST_CASE("free monoid right LCMs") {
  FreeMonoid m("01");
  CHECK(m.mul("01", "10") == "0110");
  CHECK(m.mul(m.identity(), "0") == "0");

  auto lcm = m.rightLcm("01", "0110");
  REQUIRE_FALSE(lcm.disjoint);
  CHECK(lcm.r == "0110");
  CHECK(lcm.pComp == "10");
  CHECK(lcm.qComp == "");
  CHECK(m.mul("01", lcm.pComp) == lcm.r);

  CHECK(m.rightLcm("01", "10").disjoint);
  CHECK_FALSE(m.rightLcm("0", "0").disjoint);

  CHECK(m.unitWitness("01", "01").has_value());
  CHECK_FALSE(m.unitWitness("01", "011").has_value());
  CHECK(m.leftDivide("01", "0110") == Word("10"));
  CHECK_FALSE(m.leftDivide("1", "01").has_value());
  CHECK(m.elementsOfSize(4).size() == 16);
  CHECK_THROWS_AS(FreeMonoid(""), UsageError);
}

TEST_CASE("free abelian monoid right LCMs never vanish") {
  NatMonoid n(2);
  auto lcm = n.rightLcm({2, 1}, {1, 3});
  REQUIRE_FALSE(lcm.disjoint);
  CHECK(lcm.r == NatMonoid::Element{2, 3});
  CHECK(lcm.pComp == NatMonoid::Element{0, 2});
  CHECK(lcm.qComp == NatMonoid::Element{1, 0});
  CHECK(n.elementsOfSize(3).size() == 4);  // weak compositions of 3 into 2 parts
  CHECK(n.mul({1, 2}, {3, 0}) == NatMonoid::Element{4, 2});
  CHECK(n.leftDivide({1, 1}, {1, 3}) == NatMonoid::Element{0, 2});
  CHECK_FALSE(n.leftDivide({2, 0}, {1, 3}).has_value());
  CHECK_THROWS_AS(NatMonoid(0), UsageError);
}

TEST_CASE("core membership") {
  FreeMonoid m("01");
  CHECK(coreContains(m, m.identity(), 4).holds());
  auto v = coreContains(m, Word("0"), 4);
  CHECK(v.fails());
  CHECK(v.exact);
  CHECK(v.evidence == "q=1");

  NatMonoid n(2);
  auto w = coreContains(n, {3, 1}, 4);
  CHECK(w.holds());
  CHECK(w.exact);
}

TEST_CASE("foundation sets") {
  FreeMonoid m("01");
  CHECK_THROWS_AS(isFoundationSet(m, {}, 3), UsageError);
  auto good = isFoundationSet(m, {Word("0"), Word("1")}, 3);
  CHECK(good.holds());
  CHECK(good.exact);
  auto bad = isFoundationSet(m, {Word("0")}, 3);
  CHECK(bad.fails());
  CHECK(bad.exact);
  CHECK(bad.evidence == "p=1");
  auto longer = isFoundationSet(m, {Word("00"), Word("01"), Word("1")}, 3);
  CHECK(longer.holds());

  NatMonoid n(2);
  CHECK(isFoundationSet(n, {NatMonoid::Element{5, 5}}, 3).holds());
}

TEST_CASE("ideal equality is unit-witnessed") {
  FreeMonoid m("01");
  CHECK(idealEq(m, Word("01"), Word("01")).holds());
  auto v = idealEq(m, Word("01"), Word("011"));
  CHECK(v.fails());
  CHECK(v.exact);
}

TEST_CASE("condition (H) shortcuts") {
  FreeMonoid m("01");
  auto v = conditionH(m, 4);
  CHECK(v.holds());
  CHECK(v.exact);
  CHECK(v.reason == "right cancellativity");

  NatMonoid n(2);
  CHECK(conditionH(n, 4).exact);
}

TEST_CASE("axioms probe passes on the stock instances") {
  FreeMonoid m("01");
  CHECK(axiomsProbe(m, 64, 4).holds());
  NatMonoid n(2);
  CHECK(axiomsProbe(n, 64, 4).holds());
  auto zs = buildSelfSimilar(odometerSpec());
  CHECK(axiomsProbe(zs, 64, 3).holds());
  auto mo = buildSelfSimilar(modifiedOdometerSpec());
  CHECK(axiomsProbe(mo, 64, 2).holds());
}

TEST_CASE("axioms probe flags a corrupted instance") {
  // bypass the validating builder: a latin square with identity that is not
  // associative closes letterwise but the product law breaks
  auto broken = std::make_shared<GroupCtx>();
  broken->kind = GroupKind::FiniteTable;
  broken->nLetters = 2;
  broken->genNames = {"a", "b"};
  broken->genAct = {{0, 1}, {0, 1}};
  broken->genRes = {{GElem{0}, GElem{0}}, {GElem{0}, GElem{0}}};
  broken->elemNames = {"e", "a", "b", "c", "d"};
  broken->table = {{0, 1, 2, 3, 4},
                   {1, 0, 3, 4, 2},
                   {2, 3, 4, 0, 1},
                   {3, 4, 1, 2, 0},
                   {4, 2, 0, 1, 3}};
  broken->genIndex = {1, 2};
  broken->idIndex = 0;
  broken->buildTableClosure();
  ZappaSzep bad(broken, "01");
  CHECK(axiomsProbe(bad, 64, 2).fails());
}

TEST_CASE("right cancellativity probe") {
  FreeMonoid m("01");
  CHECK(rightCancellativeProbe(m, 3).holds());
  auto mo = buildSelfSimilar(modifiedOdometerSpec());
  auto v = rightCancellativeProbe(mo, 2);
  CHECK(v.fails());
  CHECK(v.exact);
}
