#pragma once

#include <set>
#include <string>
#include <vector>

#include "boundary.hpp"

namespace qlcm {

/// A germ [s, x]: the class of s at the point x of the boundary, where two
/// elements give the same germ iff they agree with some idempotent restriction
/// around x (se = te for an idempotent e whose cylinder contains x).
template <class I>
struct Germ {
  HullElem<I> s;
  BoundaryPoint x{"", "?"};
};

template <class I>
Germ<I> makeGerm(const I& inst, [[maybe_unused]] const Hull<I>& hull, const HullElem<I>& s, const BoundaryPoint& x) {
  if (s.zero) throw UsageError("no germ of the zero element");
  if (!inCylinder(x, inst.wordPart(s.q)))
    throw UsageError("point " + x.show() + " outside the domain cylinder Z(" +
                     showWord(inst.wordPart(s.q)) + ")");
  return {s, x};
}

/// [s,x] = [t,x] iff se = te for some idempotent e = [γ,γ] with γ a prefix
/// of x.  Extending γ by one letter appends one letter to each range word, so
/// a length offset or a letter mismatch can never heal: those are exact
/// failures.  With an exact group oracle the restriction states along the
/// period cycle, so a fruitless cycle is an exact failure too.
template <class I>
Verdict3 germEq(const I& inst, const Hull<I>& hull, const Germ<I>& a, const Germ<I>& b, int bound) {
  static_assert(PrefixTree<I>);
  if (!(a.x == b.x))
    return Verdict3::failsExact(a.x.show() + " vs " + b.x.show(), "base points differ");
  size_t n0 = std::max(inst.wordPart(a.s.q).size(), inst.wordPart(b.s.q).size());
  std::set<std::string> seen;
  const size_t hardCap = 10000;
  for (size_t step = 0; step < hardCap; ++step) {
    size_t n = n0 + step;
    Word gamma = a.x.prefix(n);
    auto ge = inst.fromWord(gamma);
    auto e = hull.pair(ge, ge);
    auto A = hull.mul(a.s, e);
    auto B = hull.mul(b.s, e);
    if (hull.eq(A, B)) {
      std::string w = "e=[" + showWord(gamma) + ", " + showWord(gamma) + "]";
      return inst.eqExact() ? Verdict3::holdsExact("idempotent merge", w)
                            : Verdict3::holdsAt(static_cast<int>(n), w, "oracle-depth equality");
    }
    Word wa = inst.wordPart(A.p), wb = inst.wordPart(B.p);
    if (wa.size() != wb.size())
      return Verdict3::failsExact("range word lengths differ by " +
                                      std::to_string(static_cast<long long>(wa.size()) -
                                                     static_cast<long long>(wb.size())),
                                  "offset persists under restriction");
    if (wa != wb)
      return Verdict3::failsExact("range words " + showWord(wa) + " vs " + showWord(wb) +
                                      " at \xCE\xB3=" + showWord(gamma),
                                  "letter mismatch persists under restriction");
    if constexpr (SelfSimilarInstance<I>) {
      if (inst.G->certain() && n >= a.x.pre.size()) {
        std::string key = inst.G->key(A.p.g) + "|" + inst.G->key(B.p.g) + "|" +
                          std::to_string((n - a.x.pre.size()) % a.x.per.size());
        if (!seen.insert(key).second)
          return Verdict3::failsExact("restriction states recur without merging",
                                      "no idempotent can identify the germs");
      }
      if (!inst.G->certain() && step >= static_cast<size_t>(std::max(bound, 1)))
        return Verdict3::unknownAt(bound, "group parts undecided at oracle depth");
    } else {
      if (step >= static_cast<size_t>(std::max(bound, 1)))
        return Verdict3::unknownAt(bound);
    }
  }
  return Verdict3::unknownAt(static_cast<int>(hardCap), "state space too large to close");
}

/// [s, θ_t(x)]·[t, x] = [st, x]; the source of the left germ must be the
/// range point of the right one.
template <class I>
Germ<I> composeGerms(const I& inst, const Hull<I>& hull, const Germ<I>& a, const Germ<I>& b) {
  auto th = thetaApply(inst, b.s, b.x);
  if (!th.defined || !th.exact || !(th.y == a.x))
    throw UsageError("germs not composable: range of the right factor is " +
                     (th.defined ? th.y.show() : std::string("undefined")) + ", left base is " +
                     a.x.show());
  auto prod = hull.mul(a.s, b.s);
  if (prod.zero) throw UsageError("product of the carriers is zero");
  return makeGerm(inst, hull, prod, b.x);
}

template <class I>
Germ<I> inverseGerm(const I& inst, const Hull<I>& hull, const Germ<I>& g) {
  auto th = thetaApply(inst, g.s, g.x);
  if (!th.defined || !th.exact)
    throw UsageError("cannot invert: image point not exactly computable");
  return makeGerm(inst, hull, hull.star(g.s), th.y);
}

template <class I>
struct IsotropyReport {
  std::vector<HullElem<I>> nontrivial;  // fix x, germ-distinct from the unit
  std::vector<HullElem<I>> undecided;
  int fixingCount = 0;
};

/// Scans hull elements built from the ball for those fixing x, then sorts
/// them against the unit germ at x.
template <class I>
IsotropyReport<I> isotropyProbe(const I& inst, const Hull<I>& hull, const BoundaryPoint& x,
                                int elemBound, int germBound) {
  static_assert(PrefixTree<I>);
  IsotropyReport<I> out;
  Germ<I> unit{hull.one(), x};
  auto elems = ball(inst, elemBound);
  std::set<std::string> dedup;
  for (const auto& p : elems)
    for (const auto& q : elems) {
      auto s = hull.pair(p, q);
      if (!dedup.insert(hull.show(s)).second) continue;
      if (!inCylinder(x, inst.wordPart(s.q))) continue;
      auto th = thetaApply(inst, s, x);
      if (!th.defined) continue;
      if (!(th.y == x)) continue;
      if (!th.exact) {
        out.undecided.push_back(s);
        continue;
      }
      ++out.fixingCount;
      auto v = germEq(inst, hull, Germ<I>{s, x}, unit, germBound);
      if (v.fails()) out.nontrivial.push_back(s);
      else if (v.unknown()) out.undecided.push_back(s);
    }
  return out;
}

/// Topological freeness on the given carriers: the interior of each fixed
/// set must lie in the trivially fixed set.  A sampled-fixed cylinder not
/// covered by any J_s representative, confirmed one level deeper, is a
/// counterexample.
template <class I>
Verdict3 topologicalFreenessProbe(const I& inst, const Hull<I>& hull,
                                  const std::vector<HullElem<I>>& carriers, int depth) {
  static_assert(PrefixTree<I>);
  for (const auto& s : carriers) {
    if (s.zero || hull.isIdempotent(s)) continue;
    auto fs = fixedSets(inst, hull, s, depth);
    for (const auto& gamma : fs.fixedStems) {
      bool covered = false;
      for (const auto& t : fs.trivialStems)
        if (isPrefix(t, gamma)) covered = true;
      if (covered) continue;
      bool confirmed = true;
      for (char c : inst.alphabet())
        if (!detail::cylinderPointwiseFixed(inst, hull, s, gamma + c, inst.alphabet()))
          confirmed = false;
      if (confirmed)
        return Verdict3::failsExact("s=" + hull.show(s) + ", Z(" + showWord(gamma) + ")",
                                    "fixed cylinder outside the trivially fixed set");
    }
  }
  return Verdict3::holdsAt(depth, {}, "interiors of fixed sets covered by trivially fixed cylinders");
}

}  // namespace qlcm
