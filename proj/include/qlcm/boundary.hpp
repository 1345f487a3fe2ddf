#pragma once

#include <map>
#include <string>
#include <vector>

#include "hull.hpp"

namespace qlcm {

/// An eventually periodic point u·w^∞ of the boundary ∂Ω (the tree case:
/// infinite words over X, basic open sets = cylinders Z(γ)).  Stored in
/// canonical form: primitive period, preperiod not absorbable into it.
struct BoundaryPoint {
  Word pre;
  Word per;

  static BoundaryPoint make(Word u, Word w) {
    if (w.empty()) throw UsageError("boundary point needs a nonempty period");
    // primitive period
    for (size_t d = 1; d <= w.size() / 2; ++d) {
      if (w.size() % d) continue;
      bool ok = true;
      for (size_t i = d; i < w.size(); ++i)
        if (w[i] != w[i - d]) ok = false;
      if (ok) {
        w = w.substr(0, d);
        break;
      }
    }
    // absorb a preperiod tail that matches the period's tail
    while (!u.empty() && u.back() == w.back()) {
      u.pop_back();
      w = w.back() + w.substr(0, w.size() - 1);
    }
    return {std::move(u), std::move(w)};
  }

  bool operator==(const BoundaryPoint& o) const = default;

  char letterAt(size_t i) const {
    if (i < pre.size()) return pre[i];
    return per[(i - pre.size()) % per.size()];
  }

  Word prefix(size_t n) const {
    Word out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out += letterAt(i);
    return out;
  }

  /// Drop the first n letters.
  BoundaryPoint shifted(size_t n) const {
    if (n <= pre.size()) return make(pre.substr(n), per);
    size_t k = (n - pre.size()) % per.size();
    return make(Word{}, per.substr(k) + per.substr(0, k));
  }

  std::string show() const { return showWord(pre) + "(" + per + ")^\xE2\x88\x9E"; }
};

/// Parses "u(w)" or "(w)"; the period must be explicit.
inline BoundaryPoint parseBoundaryPoint(const std::string& s, const std::string& alphabet) {
  auto open = s.find('(');
  auto close = s.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw UsageError("boundary point must look like u(w), e.g. 01(10)");
  Word u = s.substr(0, open);
  Word w = s.substr(open + 1, close - open - 1);
  if (u == "\xCE\xB5" || u == "e") u.clear();
  for (char c : u + w)
    if (alphabet.find(c) == std::string::npos)
      throw UsageError("letter '" + std::string(1, c) + "' not in alphabet " + alphabet);
  return BoundaryPoint::make(u, w);
}

inline bool inCylinder(const BoundaryPoint& x, const Word& stem) {
  return x.prefix(stem.size()) == stem;
}

template <class I>
struct ThetaResult {
  bool defined = false;    // x must lie in the domain cylinder Z(β)
  bool exact = false;      // false when the group oracle cannot close the orbit
  BoundaryPoint y{"", "?"};
  std::string note;
};

/// θ_{[p,q]}: Z(β) → Z(α), x = β·ξ ↦ p·ξ.  For X*⋈G the group part acts on
/// the infinite tail; the eventually periodic image is recovered by cycle
/// detection on the restriction states along period chunks.
template <class I>
ThetaResult<I> thetaApply(const I& inst, const HullElem<I>& s, const BoundaryPoint& x) {
  ThetaResult<I> out;
  if (s.zero) throw UsageError("theta of the zero element is nowhere defined");
  Word beta = inst.wordPart(s.q);
  if (!inCylinder(x, beta)) {
    out.note = "point outside the domain cylinder Z(" + showWord(beta) + ")";
    return out;
  }
  out.defined = true;
  BoundaryPoint tail = x.shifted(beta.size());
  Word alpha = inst.wordPart(s.p);
  if constexpr (SelfSimilarInstance<I>) {
    const auto& G = *inst.G;
    GElem g = s.p.g;  // q's group part is normalized to the identity
    Word actedPre = inst.act(g, tail.pre);
    GElem h = inst.restrict(g, tail.pre);
    std::vector<Word> chunks;
    std::map<std::string, size_t> seen;
    size_t cycleStart = 0;
    bool closed = false;
    const size_t maxChunks = G.certain() ? 4096 : 64;
    for (size_t i = 0; i < maxChunks; ++i) {
      auto [it, fresh] = seen.emplace(G.key(h), i);
      if (!fresh) {
        cycleStart = it->second;
        closed = true;
        break;
      }
      chunks.push_back(inst.act(h, tail.per));
      h = inst.restrict(h, tail.per);
    }
    if (!closed) {
      out.exact = false;
      Word approx;
      for (const auto& c : chunks) approx += c;
      out.y = BoundaryPoint{alpha + actedPre + approx, "?"};
      out.note = "group oracle could not close the orbit of the period";
      return out;
    }
    Word u = alpha + actedPre, w;
    for (size_t i = 0; i < cycleStart; ++i) u += chunks[i];
    for (size_t i = cycleStart; i < chunks.size(); ++i) w += chunks[i];
    out.y = BoundaryPoint::make(u, w);
    out.exact = G.certain();
    if (!out.exact) out.note = "cycle detected syntactically; equality depth-bounded";
    return out;
  } else {
    out.y = BoundaryPoint::make(alpha + tail.pre, tail.per);
    out.exact = true;
    return out;
  }
}

template <class I>
struct FixedSets {
  std::vector<Word> trivialStems;  // TF_s: cylinders from J_s representatives
  std::vector<Word> fixedStems;    // cylinders of depth-length contained in F_s
  Verdict3 tfInsideF;              // TF_s ⊆ F_s on the examined stems
};

namespace detail {

/// Sample eventually periodic points in Z(γ) and test whether θ_s fixes all
/// of them exactly.
template <class I>
bool cylinderPointwiseFixed(const I& inst, [[maybe_unused]] const Hull<I>& hull, const HullElem<I>& s,
                            const Word& gamma, const std::string& alphabet) {
  std::vector<BoundaryPoint> pts;
  for (char c : alphabet) pts.push_back(BoundaryPoint::make(gamma, Word(1, c)));
  if (alphabet.size() >= 2)
    for (char c : alphabet)
      for (char d : alphabet)
        if (c != d) pts.push_back(BoundaryPoint::make(gamma, Word{c, d}));
  for (const auto& x : pts) {
    auto r = thetaApply(inst, s, x);
    if (!r.defined || !r.exact || !(r.y == x)) return false;
  }
  return true;
}

}  // namespace detail

/// Trivially fixed and sampled-fixed cylinders for θ_s, plus the containment
/// TF_s ⊆ F_s on the stems found within the depth.
template <class I>
FixedSets<I> fixedSets(const I& inst, const Hull<I>& hull, const HullElem<I>& s, int depth) {
  static_assert(PrefixTree<I>);
  FixedSets<I> out;
  for (const auto& r : hull.jSet(s, depth)) out.trivialStems.push_back(inst.wordPart(r));
  Word beta = inst.wordPart(s.q);
  for (const auto& ext : wordsUpTo(inst.alphabet(), depth)) {
    Word gamma = beta + ext;
    if (static_cast<int>(gamma.size()) > depth) continue;
    if (detail::cylinderPointwiseFixed(inst, hull, s, gamma, inst.alphabet()))
      out.fixedStems.push_back(gamma);
  }
  out.tfInsideF = Verdict3::holdsAt(depth);
  for (const auto& t : out.trivialStems) {
    if (static_cast<int>(t.size()) > depth) continue;  // beyond the sampled horizon
    if (!detail::cylinderPointwiseFixed(inst, hull, s, t, inst.alphabet()))
      out.tfInsideF = Verdict3::failsExact("Z(" + showWord(t) + ")",
                                           "trivially fixed cylinder not pointwise fixed");
  }
  return out;
}

template <class I>
struct MinimalityWitness {
  HullElem<I> s;
  BoundaryPoint image{"", "?"};
};

/// Minimality recipe: for any point x and any nonempty open U = ∪ Z(y),
/// θ_{[y,1]} moves x into U (or x is already there).  Producing the witness
/// for arbitrary inputs is what makes every orbit dense.
template <class I>
MinimalityWitness<I> minimalityWitness(const I& inst, const Hull<I>& hull,
                                       const BoundaryPoint& x, const std::vector<Word>& stems) {
  static_assert(PrefixTree<I>);
  if (stems.empty()) throw UsageError("minimality witness needs a nonempty open set");
  MinimalityWitness<I> out;
  for (const auto& y : stems)
    if (inCylinder(x, y)) {
      out.s = hull.one();
      out.image = x;
      return out;
    }
  out.s = hull.pair(inst.fromWord(stems.front()), inst.identity());
  auto r = thetaApply(inst, out.s, x);
  if (!r.defined || !inCylinder(r.y, stems.front()))
    throw std::logic_error("minimality witness failed to land in the target cylinder");
  out.image = r.y;
  return out;
}

/// Is the ideal semilattice a tree (every meet equals one of the sides)?
template <class I>
Verdict3 treeProbe(const I& inst, int bound) {
  if constexpr (PrefixTree<I>)
    return Verdict3::holdsExact("word cylinders are nested or disjoint");
  else {
    for (const auto& p : ball(inst, bound))
      for (const auto& q : ball(inst, bound)) {
        auto lcm = inst.rightLcm(p, q);
        if (lcm.disjoint) continue;
        if (!idealEq(inst, lcm.r, p).holds() && !idealEq(inst, lcm.r, q).holds())
          return Verdict3::failsExact("p=" + inst.show(p) + ", q=" + inst.show(q),
                                      "proper meet of incomparable ideals");
      }
    return Verdict3::unknownAt(bound, "no incomparable meeting pair found at bound");
  }
}

}  // namespace qlcm
