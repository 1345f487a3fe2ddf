#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlcm/hull.hpp"
#include "qlcm/free_monoid.hpp"

using namespace qlcm;

namespace {

const FreeMonoid& fm() {
  static FreeMonoid m("01");
  return m;
}

Hull<FreeMonoid> fh() { return Hull<FreeMonoid>(fm()); }

}  // namespace

TEST_CASE("hull product follows the right LCM") {
  auto h = fh();
  // [a,b][c,d] with bP ∩ cP = rP, bb' = cc' = r: result [ab', dc']
  auto s = h.pair(Word("0"), Word("10"));
  auto t = h.pair(Word("101"), Word("11"));
  auto st = h.mul(s, t);
  REQUIRE_FALSE(st.zero);
  CHECK(st.p == "01");  // b=10, c=101, r=101, b'=1, c'=ε
  CHECK(st.q == "11");
  CHECK(h.mul(s, h.pair(Word("0"), Word("1"))).zero);  // 10P ∩ 0P = ∅
  CHECK(h.mul(h.zero(), s).zero);
  CHECK(h.eq(h.mul(h.one(), s), s));
  CHECK(h.eq(h.mul(s, h.one()), s));
}

TEST_CASE("star and the natural partial order") {
  auto h = fh();
  auto s = h.pair(Word("0"), Word("10"));
  auto ss = h.star(s);
  CHECK(ss.p == "10");
  CHECK(ss.q == "0");
  CHECK(h.eq(h.star(h.star(s)), s));
  CHECK(h.eq(h.mul(h.mul(s, ss), s), s));  // regularity

  auto big = h.pair(Word("0"), Word("1"));
  auto small = h.pair(Word("00"), Word("10"));  // big restricted to Z(10)
  CHECK(h.leq(small, big));
  CHECK_FALSE(h.leq(big, small));
  CHECK(h.leq(h.pair(Word("00"), Word("00")), h.pair(Word("0"), Word("0"))));
}

TEST_CASE("idempotents are the diagonal pairs") {
  auto h = fh();
  for (const auto& p : wordsUpTo("01", 3))
    for (const auto& q : wordsUpTo("01", 3)) {
      auto s = h.pair(p, q);
      CHECK(h.isIdempotent(s) == (p == q));
    }
  // idempotents commute
  for (const auto& p : wordsUpTo("01", 3))
    for (const auto& q : wordsUpTo("01", 3)) {
      auto e = h.pair(p, p);
      auto f = h.pair(q, q);
      CHECK(h.eq(h.mul(e, f), h.mul(f, e)));
    }
}

TEST_CASE("v_p* v_q rewrites through the right LCM") {
  auto h = fh();
  for (const auto& p : wordsUpTo("01", 4))
    for (const auto& q : wordsUpTo("01", 4)) CHECK_NOTHROW(h.starnotIdentity(p, q));
}

TEST_CASE("unit normalization gives triples") {
  auto zs = buildSelfSimilar(modifiedOdometerSpec());
  Hull<ZappaSzep> h(zs);
  auto s = h.pair(zs.parseElement("(0,z^2)"), zs.parseElement("(1,z)"));
  CHECK(zs.G->isId(s.q.g));
  CHECK(std::get<long long>(s.p.g.v) == 1);  // z² · z⁻¹
  CHECK(h.show(s) == "(0, z, 1)");
  CHECK(h.show(h.zero()) == "0");
  // normalization is invariant under right unit multiplication
  auto u = zs.parseElement("(,z^5)");
  auto t = h.pair(zs.mul(zs.parseElement("(0,z^2)"), u), zs.mul(zs.parseElement("(1,z)"), u));
  CHECK(h.eq(s, t));
}

TEST_CASE("j_set collects the trivially fixed ideals") {
  auto h = fh();
  auto e = h.pair(Word("0"), Word("0"));
  auto j = h.jSet(e, 2);
  CHECK(j.size() == 7);  // 0·{words of length ≤ 2}, all distinct ideals
  auto s = h.pair(Word("0"), Word("1"));
  CHECK(h.jSet(s, 3).empty());
  CHECK_THROWS_AS(h.jSet(h.zero(), 2), UsageError);

  auto zs = buildSelfSimilar(modifiedOdometerSpec());
  Hull<ZappaSzep> hz(zs);
  auto z = hz.pair(zs.parseElement("(,z)"), zs.identity());
  auto jz = hz.jSet(z, 1);
  REQUIRE(jz.size() == 1);
  CHECK(jz.front().w == "B");  // z fixes exactly the B-cylinder
}

TEST_CASE("covers of an idempotent") {
  auto h = fh();
  auto top = h.pair(Word(""), Word(""));
  auto z0 = h.pair(Word("0"), Word("0"));
  auto z1 = h.pair(Word("1"), Word("1"));
  auto both = h.isCover({z0, z1}, top, 3);
  CHECK(both.holds());
  CHECK(both.exact);
  auto half = h.isCover({z0}, top, 3);
  CHECK(half.fails());
  CHECK(half.evidence == "[1, 1]");
  CHECK_THROWS_AS(h.isCover({h.pair(Word("0"), Word("1"))}, top, 3), UsageError);
  CHECK_THROWS_AS(h.isCover({z0}, h.pair(Word("1"), Word("1")), 3), UsageError);
}

TEST_CASE("weakly fixed versus fixed") {
  auto zs = buildSelfSimilar(modifiedOdometerSpec());
  Hull<ZappaSzep> h(zs);
  auto s = h.pair(zs.parseElement("(,z)"), zs.identity());
  auto atB = h.weaklyFixed(zs.parseElement("(B,e)"), s, 3);
  CHECK(atB.fixed);
  CHECK(atB.weaklyFixed.holds());
  auto at0 = h.weaklyFixed(zs.parseElement("(0,e)"), s, 3);
  CHECK_FALSE(at0.fixed);
  CHECK(at0.weaklyFixed.fails());

  auto s2 = h.pair(zs.parseElement("(,z^2)"), zs.identity());
  auto at0B = h.weaklyFixed(zs.parseElement("(0B,e)"), s2, 3);
  CHECK(at0B.fixed);  // 0B is strongly fixed by z²
}

TEST_CASE("condition (EP)") {
  auto zs = buildSelfSimilar(modifiedOdometerSpec());
  Hull<ZappaSzep> h(zs);
  CHECK(h.conditionEP(h.one(), 3).exact);
  auto v = h.conditionEP(h.pair(zs.parseElement("(,z)"), zs.identity()), 3);
  CHECK(v.holds());
  CHECK(v.exact);  // faithful self-similar shortcut

  NatMonoid n(2);
  Hull<NatMonoid> hn(n);
  auto w = hn.conditionEP(hn.pair({1, 0}, {0, 1}), 3);
  CHECK(w.fails());
  CHECK(w.exact);
  CHECK_THROWS_AS(hn.conditionEP(hn.zero(), 3), UsageError);
}

TEST_CASE("two notions of hull core agree") {
  auto h = fh();
  auto inCore = h.hullCoreContains(h.one(), 3);
  CHECK(inCore.lcmCore.holds());
  CHECK(inCore.appendixCore.holds());
  CHECK(inCore.agree);
  auto off = h.hullCoreContains(h.pair(Word("0"), Word("0")), 3);
  CHECK(off.lcmCore.fails());
  CHECK(off.appendixCore.fails());
  CHECK(off.agree);

  auto zs = buildSelfSimilar(modifiedOdometerSpec());
  Hull<ZappaSzep> hz(zs);
  auto unitish = hz.hullCoreContains(hz.pair(zs.parseElement("(,z^3)"), zs.identity()), 2);
  CHECK(unitish.lcmCore.holds());
  CHECK(unitish.appendixCore.holds());
  CHECK(unitish.agree);
}

TEST_CASE("E*-unitarity tracks cancellativity") {
  auto h = fh();
  auto free = h.eStarUnitaryProbe(2);
  CHECK(free.holds());
  CHECK(free.exact);

  auto zs = buildSelfSimilar(modifiedOdometerSpec());
  Hull<ZappaSzep> hz(zs);
  auto v = hz.eStarUnitaryProbe(2);
  CHECK(v.fails());
  CHECK(v.exact);
  CHECK(v.evidence.find("(B, e, B)") != std::string::npos);
}

TEST_CASE("locally contracting witness") {
  auto h = fh();
  auto w = h.locallyContractingWitness(Word("1"), Word("0"), Word("10"));
  CHECK(w.f1 == "10");
  CHECK(w.f0 == "10110");
  CHECK(w.productIsZero);
  CHECK(w.chainOk);
  CHECK_THROWS_AS(h.locallyContractingWitness(Word(""), Word("0"), Word("01")), UsageError);
}
