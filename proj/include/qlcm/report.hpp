#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "germ.hpp"
#include "parse.hpp"

namespace qlcm {

struct AnalyzeOptions {
  int depth = 6;
  int epCap = 4;
};

struct MsfRow {
  std::string element;
  std::vector<Word> words;
  Verdict3 finiteness;
};

struct AnalysisReport {
  std::string instance;
  AnalyzeOptions opts;
  Verdict3 axioms, tree, condH, eStarUnitary, locallyContracting, minimality, epOnCore,
      topologicalFreeness, simplicity, pureInfiniteness;
  std::vector<std::string> coreSamples;
  bool selfSimilar = false;
  Verdict3 pseudoFree, faithful;
  std::vector<MsfRow> msf;
  std::vector<std::string> notes;
};

namespace detail {

template <class I>
std::vector<HullElem<I>> freenessCarriers(const I& inst, const Hull<I>& hull, int epCap) {
  std::vector<HullElem<I>> carriers;
  std::set<std::string> dedup;
  auto add = [&](HullElem<I> s) {
    if (dedup.insert(hull.show(s)).second) carriers.push_back(std::move(s));
  };
  for (const auto& u : wordsUpTo(inst.alphabet(), 2))
    for (const auto& v : wordsUpTo(inst.alphabet(), 2)) add(hull.pair(inst.fromWord(u), inst.fromWord(v)));
  if constexpr (SelfSimilarInstance<I>) {
    for (const auto& g : inst.G->ball(epCap))
      add(hull.pair({Word{}, g}, inst.identity()));
  }
  return carriers;
}

}  // namespace detail

template <class I>
AnalysisReport analyze(const I& inst, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  rep.instance = inst.name();
  rep.opts = opts;
  Hull<I> hull(inst);
  const int depth = opts.depth;
  const int smallBound = std::min(depth, 3);

  rep.axioms = axiomsProbe(inst, 32, depth);
  rep.tree = treeProbe(inst, std::min(depth, 4));
  rep.condH = conditionH(inst, depth);

  // core membership over a small ball, a few representatives for the report
  int coreCount = 0;
  for (const auto& e : ball(inst, std::min(depth, 2))) {
    if (!coreContains(inst, e, depth).holds()) continue;
    ++coreCount;
    if (rep.coreSamples.size() < 8) rep.coreSamples.push_back(inst.show(e));
  }
  if (coreCount > static_cast<int>(rep.coreSamples.size()))
    rep.notes.push_back("core elements shown: " + std::to_string(rep.coreSamples.size()) + " of " +
                        std::to_string(coreCount) + " found in the ball");

  rep.eStarUnitary = hull.eStarUnitaryProbe(std::min(depth, 2));

  // locally contracting iff some ideal pair is disjoint (P ≠ P₀)
  rep.locallyContracting = Verdict3::unknownAt(smallBound, "no disjoint ideal pair found");
  if constexpr (HasMeetAll<I>) {
    if (inst.allIdealsMeet())
      rep.locallyContracting =
          Verdict3::failsExact("P = P\xE2\x82\x80", "every pair of ideals meets");
  }
  if (rep.locallyContracting.unknown()) {
    auto elems = ball(inst, std::min(depth, 2));
    for (size_t i = 0; i < elems.size() && rep.locallyContracting.unknown(); ++i)
      for (size_t j = 0; j < elems.size(); ++j) {
        if (!inst.rightLcm(elems[i], elems[j]).disjoint) continue;
        auto w = hull.locallyContractingWitness(inst.identity(), elems[i], elems[j]);
        if (w.productIsZero && w.chainOk) {
          rep.locallyContracting = Verdict3::holdsExact(
              "P \xE2\x89\xA0 P\xE2\x82\x80",
              "a=f\xE2\x82\x81=" + inst.show(w.f1) + ", f\xE2\x82\x80=" + inst.show(w.f0) +
                  ", [f\xE2\x82\x80,f\xE2\x82\x80][a,1][f\xE2\x82\x81,f\xE2\x82\x81] = 0");
          break;
        }
      }
  }

  rep.minimality = Verdict3::holdsExact("the boundary is the minimal closed invariant subspace");
  if constexpr (PrefixTree<I>) {
    rep.minimality.reason = "for any point x and stem y, \xCE\xB8_[y,1] moves x into Z(y)";
    auto x = BoundaryPoint::make(Word{}, Word(1, inst.alphabet().front()));
    Word stem(1, inst.alphabet().back());
    auto mw = minimalityWitness(inst, hull, x, {stem});
    rep.minimality.evidence = "\xCE\xB8_" + hull.show(mw.s) + " maps " + x.show() + " to " +
                              mw.image.show() + " \xE2\x88\x88 Z(" + stem + ")";
  }

  // condition (EP) on the core of the hull
  {
    std::vector<Verdict3> parts;
    if constexpr (SelfSimilarInstance<I>) {
      for (const auto& g : inst.G->ball(opts.epCap)) {
        if (inst.G->isId(g)) continue;
        parts.push_back(hull.conditionEP(hull.pair({Word{}, g}, inst.identity()), std::min(depth, 4)));
      }
      if (parts.empty()) parts.push_back(Verdict3::holdsExact("trivial group: core is {[1,1]}"));
    } else if constexpr (PrefixTree<I>) {
      // the core of X* is the trivial unit group, so 𝒮₀ = {[ε,ε], 0}
      parts.push_back(hull.conditionEP(hull.one(), std::min(depth, 4)));
    } else {
      auto elems = ball(inst, std::min(opts.epCap, 2));
      for (const auto& p : elems) {
        for (const auto& q : elems) {
          auto s = hull.pair(p, q);
          parts.push_back(hull.conditionEP(s, std::min(depth, 4)));
          if (parts.back().fails()) break;
        }
        if (parts.back().fails()) break;
      }
    }
    rep.epOnCore = conjAll(parts);
  }

  if constexpr (PrefixTree<I>) {
    rep.topologicalFreeness = topologicalFreenessProbe(
        inst, hull, detail::freenessCarriers(inst, hull, opts.epCap), std::min(depth, 3));
  } else {
    rep.topologicalFreeness =
        Verdict3::unknownAt(0, "not computed: the ideal lattice is not a tree");
    rep.notes.push_back("boundary-space probes need a tree-shaped ideal lattice");
  }

  rep.simplicity = conj(rep.condH, rep.epOnCore);
  rep.simplicity.reason = "condition (H) and (EP) on the core; modulo C* = C*_r";
  rep.pureInfiniteness = conj(rep.simplicity, rep.locallyContracting);
  rep.pureInfiniteness.reason = "simplicity plus a locally contracting witness; modulo C* = C*_r";

  if constexpr (SelfSimilarInstance<I>) {
    rep.selfSimilar = true;
    auto pf = pseudoFreeFaithfulProbe(inst, std::min(depth, 4));
    rep.pseudoFree = pf.pseudoFree;
    rep.faithful = pf.faithful;
    for (const auto& g : inst.G->ball(2)) {
      if (inst.G->isId(g)) continue;
      auto r = msfEnumerate(inst, g, 8);
      rep.msf.push_back({inst.G->show(g), r.words, r.finiteness});
    }
  }
  return rep;
}

inline std::string renderText(const AnalysisReport& r) {
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + ": " + v + "\n"; };
  line("instance", r.instance);
  line("depth", std::to_string(r.opts.depth) + "  ep-cap: " + std::to_string(r.opts.epCap));
  line("axioms", describe(r.axioms));
  line("ideal lattice is a tree", describe(r.tree));
  line("condition (H)", describe(r.condH));
  std::string core;
  for (size_t i = 0; i < r.coreSamples.size(); ++i) core += (i ? ", " : "") + r.coreSamples[i];
  line("core sample", core.empty() ? "(none found)" : core);
  line("E*-unitary", describe(r.eStarUnitary));
  line("locally contracting", describe(r.locallyContracting));
  line("minimal boundary action", describe(r.minimality));
  line("condition (EP) on the core", describe(r.epOnCore));
  line("topologically free", describe(r.topologicalFreeness));
  line("simple boundary quotient (modulo C* = C*_r)", describe(r.simplicity));
  line("purely infinite simple (modulo C* = C*_r)", describe(r.pureInfiniteness));
  if (r.selfSimilar) {
    line("faithful", describe(r.faithful));
    line("pseudo-free", describe(r.pseudoFree));
    for (const auto& row : r.msf) {
      std::string ws = "{";
      for (size_t i = 0; i < row.words.size(); ++i) ws += (i ? "," : "") + row.words[i];
      ws += "}";
      line("msf[" + row.element + "]", ws + " finite: " + describe(row.finiteness));
    }
  }
  for (const auto& n : r.notes) line("note", n);
  return out;
}

inline nlohmann::json verdictJson(const Verdict3& v) {
  nlohmann::json j;
  j["truth"] = v.holds() ? "holds" : v.fails() ? "fails" : "unknown";
  j["exact"] = v.exact;
  if (v.bound >= 0) j["bound"] = v.bound;
  if (!v.evidence.empty()) j["evidence"] = v.evidence;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

inline nlohmann::json renderJson(const AnalysisReport& r) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["instance"] = r.instance;
  j["depth"] = r.opts.depth;
  j["ep_cap"] = r.opts.epCap;
  j["axioms"] = verdictJson(r.axioms);
  j["tree"] = verdictJson(r.tree);
  j["condition_h"] = verdictJson(r.condH);
  j["core_sample"] = r.coreSamples;
  j["e_star_unitary"] = verdictJson(r.eStarUnitary);
  j["locally_contracting"] = verdictJson(r.locallyContracting);
  j["minimality"] = verdictJson(r.minimality);
  j["ep_on_core"] = verdictJson(r.epOnCore);
  j["topological_freeness"] = verdictJson(r.topologicalFreeness);
  j["simplicity_modulo_reduced"] = verdictJson(r.simplicity);
  j["pure_infiniteness_modulo_reduced"] = verdictJson(r.pureInfiniteness);
  if (r.selfSimilar) {
    j["faithful"] = verdictJson(r.faithful);
    j["pseudo_free"] = verdictJson(r.pseudoFree);
    auto rows = nlohmann::json::array();
    for (const auto& row : r.msf) {
      nlohmann::json e;
      e["element"] = row.element;
      e["words"] = row.words;
      e["finite"] = verdictJson(row.finiteness);
      rows.push_back(e);
    }
    j["msf"] = rows;
  }
  j["notes"] = r.notes;
  return j;
}

/// Runs the full analysis for any built-in or file instance.
inline AnalysisReport analyzeInstance(const Instance& inst, const AnalyzeOptions& opts) {
  return std::visit([&](const auto& i) { return analyze(i, opts); }, inst);
}

}  // namespace qlcm
