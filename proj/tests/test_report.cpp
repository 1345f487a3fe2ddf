#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlcm/report.hpp"

using namespace qlcm;

TEST_CASE("free monoid report") {
  auto rep = analyzeInstance(parseInstance("free:X01"), {4, 3});
  CHECK(rep.instance == "free:01");
  CHECK(rep.axioms.holds());
  CHECK(rep.tree.holds());
  CHECK(rep.condH.holds());
  CHECK(rep.condH.exact);
  CHECK(rep.eStarUnitary.holds());
  CHECK(rep.locallyContracting.holds());
  CHECK(rep.locallyContracting.exact);
  CHECK(rep.minimality.holds());
  CHECK(rep.epOnCore.holds());
  CHECK(rep.topologicalFreeness.holds());
  CHECK(rep.simplicity.holds());
  CHECK(rep.pureInfiniteness.holds());
  CHECK(rep.coreSamples == std::vector<std::string>{"\xCE\xB5"});
  CHECK_FALSE(rep.selfSimilar);
}

TEST_CASE("odometer report") {
  auto rep = analyzeInstance(parseInstance("odometer"), {4, 3});
  CHECK(rep.simplicity.holds());
  CHECK(rep.pureInfiniteness.holds());
  CHECK(rep.eStarUnitary.holds());
  CHECK(rep.selfSimilar);
  CHECK(rep.faithful.holds());
  CHECK(rep.pseudoFree.holds());
  for (const auto& row : rep.msf) {
    CHECK(row.words.empty());
    CHECK(row.finiteness.holds());
  }
}

TEST_CASE("modified odometer report") {
  auto rep = analyzeInstance(parseInstance("modified-odometer"), {6, 4});
  CHECK(rep.condH.holds());
  CHECK(rep.condH.exact);
  CHECK(rep.condH.reason == "MSF finiteness");
  CHECK(rep.eStarUnitary.fails());
  CHECK(rep.pseudoFree.fails());
  CHECK(rep.faithful.holds());
  CHECK(rep.simplicity.holds());
  CHECK(rep.pureInfiniteness.holds());
  bool sawZ = false;
  for (const auto& row : rep.msf)
    if (row.element == "z") {
      sawZ = true;
      CHECK(row.words == std::vector<Word>{"B"});
    }
  CHECK(sawZ);
}

TEST_CASE("free abelian report") {
  auto rep = analyzeInstance(parseInstance("nat:2"), {4, 2});
  CHECK(rep.tree.fails());
  CHECK(rep.locallyContracting.fails());
  CHECK(rep.locallyContracting.exact);
  CHECK(rep.epOnCore.fails());
  CHECK(rep.simplicity.fails());
  CHECK(rep.pureInfiniteness.fails());
  CHECK(rep.topologicalFreeness.unknown());
}

TEST_CASE("text rendering is byte-stable") {
  AnalyzeOptions opts{4, 3};
  auto a = renderText(analyzeInstance(parseInstance("modified-odometer"), opts));
  auto b = renderText(analyzeInstance(parseInstance("modified-odometer"), opts));
  CHECK(a == b);
  CHECK(a.find("instance: modified-odometer\n") == 0);
  CHECK(a.find("simple boundary quotient (modulo C* = C*_r): HOLDS") != std::string::npos);
}

TEST_CASE("machine rendering carries the same verdicts") {
  auto rep = analyzeInstance(parseInstance("odometer"), {4, 3});
  auto j = renderJson(rep);
  CHECK(j["format_version"] == 1);
  CHECK(j["instance"] == "odometer");
  CHECK(j["simplicity_modulo_reduced"]["truth"] == "holds");
  CHECK(j["condition_h"]["exact"] == true);
  CHECK(j["msf"].size() == rep.msf.size());
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("verdict serialization") {
  auto j = verdictJson(Verdict3::failsAt(3, "cx", "why"));
  CHECK(j["truth"] == "fails");
  CHECK(j["exact"] == false);
  CHECK(j["bound"] == 3);
  CHECK(j["evidence"] == "cx");
  CHECK(j["reason"] == "why");
}
