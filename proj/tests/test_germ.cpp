#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlcm/germ.hpp"
#include "qlcm/free_monoid.hpp"

using namespace qlcm;

namespace {

/// Z/2 acting trivially on letters with a nontrivial restriction cocycle:
/// a valid self-similar structure whose action is not faithful.
ZappaSzep nonFaithful() {
  SelfSimilarSpec s;
  s.alphabet = "01";
  s.kind = GroupKind::FiniteTable;
  s.generators = {"g"};
  s.elemNames = {"e", "g"};
  s.tableEntries = {{"e", "e", "e"}, {"e", "g", "g"}, {"g", "e", "g"}, {"g", "g", "e"}};
  s.rules = {{"g", '0', '0', "g"}, {"g", '1', '1', "g"}};
  s.name = "lazy-involution";
  return buildSelfSimilar(s);
}

}  // namespace

TEST_CASE("germ construction validates the domain") {
  FreeMonoid m("01");
  Hull<FreeMonoid> h(m);
  auto x = BoundaryPoint::make("", "0");
  CHECK_NOTHROW(makeGerm(m, h, h.pair(Word("1"), Word("00")), x));
  CHECK_THROWS_AS(makeGerm(m, h, h.pair(Word("1"), Word("01")), x), UsageError);
  CHECK_THROWS_AS(makeGerm(m, h, h.zero(), x), UsageError);
}

TEST_CASE("germs merge through idempotents") {
  FreeMonoid m("01");
  Hull<FreeMonoid> h(m);
  auto x = BoundaryPoint::make("", "0");
  // [0, 00] and [ε, 0] act identically on all of Z(0)
  auto a = makeGerm(m, h, h.pair(Word("0"), Word("00")), x);
  auto b = makeGerm(m, h, h.pair(Word(""), Word("0")), x);
  auto v = germEq(m, h, a, b, 6);
  CHECK(v.holds());
  CHECK(v.exact);

  // [0, ε] shifts while the unit does not: distinct germ at 0^∞
  auto c = makeGerm(m, h, h.pair(Word("0"), Word("")), x);
  auto unit = Germ<FreeMonoid>{h.one(), x};
  auto w = germEq(m, h, c, unit, 6);
  CHECK(w.fails());
  CHECK(w.exact);

  // same word lengths, different letters
  auto d = makeGerm(m, h, h.pair(Word("1"), Word("0")), x);
  auto e = makeGerm(m, h, h.pair(Word("0"), Word("0")), x);
  auto u = germEq(m, h, d, e, 6);
  CHECK(u.fails());
  CHECK(u.exact);

  auto elsewhere = Germ<FreeMonoid>{h.one(), BoundaryPoint::make("", "1")};
  CHECK(germEq(m, h, unit, elsewhere, 6).fails());
}

TEST_CASE("germs of group elements at periodic points") {
  auto zs = buildSelfSimilar(modifiedOdometerSpec());
  Hull<ZappaSzep> h(zs);
  auto xB = BoundaryPoint::make("", "B");
  // z acts as the identity near B^∞, so its germ there is the unit germ
  auto gz = makeGerm(zs, h, h.pair(zs.parseElement("(,z)"), zs.identity()), xB);
  auto unitB = Germ<ZappaSzep>{h.one(), xB};
  auto v = germEq(zs, h, gz, unitB, 6);
  CHECK(v.holds());
  CHECK(v.exact);

  // at 0B^∞ the restriction of z never dies: z·0B^∞ = 1B^∞ moves the point,
  // but compare z^2 (which fixes 0B^∞) against the unit
  auto x0B = BoundaryPoint::make("0", "B");
  auto gz2 = makeGerm(zs, h, h.pair(zs.parseElement("(,z^2)"), zs.identity()), x0B);
  auto unit0B = Germ<ZappaSzep>{h.one(), x0B};
  CHECK(germEq(zs, h, gz2, unit0B, 6).holds());

  // in the plain odometer no nonzero power has a trivial germ anywhere
  auto od = buildSelfSimilar(odometerSpec());
  Hull<ZappaSzep> ho(od);
  auto y = BoundaryPoint::make("", "0");
  auto gz3 = makeGerm(od, ho, ho.pair(od.parseElement("(,z^2)"), od.identity()), y);
  auto w = germEq(od, ho, gz3, Germ<ZappaSzep>{ho.one(), y}, 6);
  CHECK(w.fails());
  CHECK(w.exact);
}

TEST_CASE("composition and inversion") {
  FreeMonoid m("01");
  Hull<FreeMonoid> h(m);
  auto x = BoundaryPoint::make("", "0");
  auto t = makeGerm(m, h, h.pair(Word("1"), Word("0")), x);  // x ↦ 1·0^∞
  auto a = makeGerm(m, h, h.pair(Word("01"), Word("10")), BoundaryPoint::make("1", "0"));
  auto comp = composeGerms(m, h, a, t);
  CHECK(comp.x == x);
  CHECK(comp.s.p == "01");
  CHECK(comp.s.q == "00");
  CHECK_THROWS_AS(composeGerms(m, h, t, t), UsageError);

  auto inv = inverseGerm(m, h, t);
  CHECK(inv.x == BoundaryPoint::make("1", "0"));
  auto round = composeGerms(m, h, inv, t);
  CHECK(germEq(m, h, round, Germ<FreeMonoid>{h.one(), x}, 6).holds());
}

TEST_CASE("isotropy at a periodic word") {
  FreeMonoid m("01");
  Hull<FreeMonoid> h(m);
  auto x = BoundaryPoint::make("", "0");
  auto iso = isotropyProbe(m, h, x, 2, 6);
  CHECK(iso.fixingCount > 0);
  REQUIRE_FALSE(iso.nontrivial.empty());
  bool sawShift = false;
  for (const auto& s : iso.nontrivial)
    if (s.p == "0" && s.q.empty()) sawShift = true;
  CHECK(sawShift);
  CHECK(iso.undecided.empty());

  // an aperiodic-direction point in the ball has trivial isotropy only
  auto y = BoundaryPoint::make("", "01");
  auto iso2 = isotropyProbe(m, h, y, 1, 6);
  CHECK(iso2.nontrivial.empty());
  CHECK(iso2.fixingCount == 2);  // only the idempotents [ε,ε] and [0,0]
}

TEST_CASE("topological freeness") {
  FreeMonoid m("01");
  Hull<FreeMonoid> h(m);
  std::vector<HullElem<FreeMonoid>> carriers;
  for (const auto& p : wordsUpTo("01", 2))
    for (const auto& q : wordsUpTo("01", 2)) carriers.push_back(h.pair(p, q));
  CHECK(topologicalFreenessProbe(m, h, carriers, 3).holds());

  auto od = buildSelfSimilar(odometerSpec());
  Hull<ZappaSzep> ho(od);
  std::vector<HullElem<ZappaSzep>> oc;
  for (const auto& g : od.G->ball(4)) oc.push_back(ho.pair({Word{}, g}, od.identity()));
  CHECK(topologicalFreenessProbe(od, ho, oc, 3).holds());

  auto mo = buildSelfSimilar(modifiedOdometerSpec());
  Hull<ZappaSzep> hm(mo);
  std::vector<HullElem<ZappaSzep>> mc;
  for (const auto& g : mo.G->ball(4)) mc.push_back(hm.pair({Word{}, g}, mo.identity()));
  CHECK(topologicalFreenessProbe(mo, hm, mc, 3).holds());

  auto nf = nonFaithful();
  Hull<ZappaSzep> hn(nf);
  auto bad = hn.pair({Word{}, nf.G->gen(0)}, nf.identity());
  auto v = topologicalFreenessProbe(nf, hn, {bad}, 3);
  CHECK(v.fails());
  CHECK(v.evidence.find("Z(\xCE\xB5)") != std::string::npos);
  // and the carrier's fixed set is everything while nothing is trivially fixed
  auto fs = fixedSets(nf, hn, bad, 2);
  CHECK(fs.trivialStems.empty());
  CHECK_FALSE(fs.fixedStems.empty());
}
