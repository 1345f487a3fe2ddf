#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decision.hpp"

namespace qlcm {

template <class I>
concept HasNormalizingUnit = requires(const I& i, typename I::Element e) {
  { i.normalizingUnit(e) } -> std::convertible_to<typename I::Element>;
};

/// An element of 𝒮 = {[p,q]} ∪ {0}: zero, or a pair stored in
/// unit-normalized form (for X*⋈G the group part of q is normalized to the
/// identity, which realizes the triple form (α, g, β)).
template <class I>
struct HullElem {
  bool zero = true;
  typename I::Element p{}, q{};
};

/// The inverse hull of a right LCM semigroup: [a,b][c,d] = [ab', dc'] when
/// cP ∩ bP = rP with cc' = bb' = r, and 0 when the ideals are disjoint.
template <class I>
class Hull {
 public:
  using El = typename I::Element;
  using H = HullElem<I>;

  explicit Hull(const I& inst) : inst_(&inst) {}
  const I& instance() const { return *inst_; }

  H zero() const { return {}; }
  H one() const { return pair(inst_->identity(), inst_->identity()); }

  H pair(const El& p, const El& q) const {
    H h;
    h.zero = false;
    if constexpr (HasNormalizingUnit<I>) {
      auto u = inst_->normalizingUnit(q);
      h.p = inst_->mul(p, u);
      h.q = inst_->mul(q, u);
    } else {
      h.p = p;
      h.q = q;
    }
    return h;
  }

  bool eq(const H& s, const H& t) const {
    if (s.zero || t.zero) return s.zero == t.zero;
    return inst_->eq(s.p, t.p) && inst_->eq(s.q, t.q);
  }

  H mul(const H& s, const H& t) const {
    if (s.zero || t.zero) return zero();
    // [a,b][c,d]: r = bP ∩ cP, b·b' = c·c' = r, result [ab', dc']
    auto lcm = inst_->rightLcm(s.q, t.p);
    if (lcm.disjoint) return zero();
    return pair(inst_->mul(s.p, lcm.pComp), inst_->mul(t.q, lcm.qComp));
  }

  H star(const H& s) const {
    if (s.zero) return zero();
    return pair(s.q, s.p);
  }

  /// s ⩽ t iff s = t·s*·s.
  bool leq(const H& s, const H& t) const { return eq(s, mul(t, mul(star(s), s))); }

  bool isIdempotent(const H& s) const { return !s.zero && eq(mul(s, s), s); }

  std::string show(const H& s) const {
    if (s.zero) return "0";
    if constexpr (SelfSimilarInstance<I>)
      return "(" + showWord(inst_->wordPart(s.p)) + ", " + inst_->G->show(s.p.g) + ", " +
             showWord(inst_->wordPart(s.q)) + ")";
    else
      return "[" + inst_->show(s.p) + ", " + inst_->show(s.q) + "]";
  }

  /// v_p* v_q = v_{p'} v_{q'}* (or 0): evaluates [1,p][q,1] and checks it
  /// against the right LCM prediction.
  H starnotIdentity(const El& p, const El& q) const {
    H product = mul(pair(inst_->identity(), p), pair(q, inst_->identity()));
    auto lcm = inst_->rightLcm(p, q);
    H predicted = lcm.disjoint ? zero() : pair(lcm.pComp, lcm.qComp);
    if (!eq(product, predicted))
      throw std::logic_error("hull product disagrees with right LCM prediction at (" +
                             inst_->show(p) + ", " + inst_->show(q) + ")");
    return product;
  }

  /// J_{[p,q]} = {rP | [r,r] ⩽ [p,q]}: representatives r = p·k = q·k with
  /// |k| up to the bound, deduplicated by ideal equality.
  std::vector<El> jSet(const H& s, int bound) const {
    if (s.zero) throw UsageError("j_set of 0 is undefined");
    std::vector<El> reps;
    for (const auto& k : ball(*inst_, bound)) {
      auto pk = inst_->mul(s.p, k);
      if (!inst_->eq(pk, inst_->mul(s.q, k))) continue;
      bool fresh = true;
      for (const auto& r : reps)
        if (inst_->unitWitness(r, pk)) fresh = false;
      if (fresh) reps.push_back(pk);
    }
    return reps;
  }

  /// F covers the idempotent x: every nonzero idempotent ⩽ x meets some f.
  Verdict3 isCover(const std::vector<H>& F, const H& x, int bound) const {
    if (!isIdempotent(x)) throw UsageError("cover target must be a nonzero idempotent");
    for (const auto& f : F) {
      if (!isIdempotent(f)) throw UsageError("cover members must be nonzero idempotents");
      if (!leq(f, x)) throw UsageError("cover member not below the target");
    }
    if constexpr (PrefixTree<I>) {
      Word stem = inst_->wordPart(x.p);
      size_t L = stem.size();
      for (const auto& f : F) L = std::max(L, inst_->wordPart(f.p).size());
      for (const auto& ext : wordsOfLength(inst_->alphabet(), static_cast<int>(L - stem.size()))) {
        Word w = stem + ext;
        bool met = false;
        for (const auto& f : F)
          if (comparable(inst_->wordPart(f.p), w)) met = true;
        if (!met) {
          auto e = inst_->fromWord(w);
          return Verdict3::failsExact(show(pair(e, e)), "orthogonal idempotent below the target");
        }
      }
      return Verdict3::holdsExact("prefix-tree cover check at depth " + std::to_string(L));
    } else {
      for (const auto& t : ball(*inst_, bound)) {
        auto r = inst_->mul(x.p, t);
        H e = pair(r, r);
        bool met = false;
        for (const auto& f : F)
          if (!mul(f, e).zero) met = true;
        if (!met) return Verdict3::failsAt(bound, show(e), "orthogonal idempotent below the target");
      }
      return Verdict3::holdsAt(bound);
    }
  }

  struct FixedResult {
    bool fixed = false;
    Verdict3 weaklyFixed;
  };

  /// [qk,qk] fixed by [p,q] iff pk = qk; weakly fixed iff qkaP ∩ pkaP ≠ ∅
  /// for all a (quantified up to the bound).
  FixedResult weaklyFixed(const El& k, const H& s, int bound) const {
    if (s.zero) throw UsageError("weakly_fixed needs a nonzero hull element");
    FixedResult out;
    auto qk = inst_->mul(s.q, k);
    auto pk = inst_->mul(s.p, k);
    out.fixed = inst_->eq(pk, qk);
    if (out.fixed) {
      out.weaklyFixed = Verdict3::holdsExact("fixed implies weakly fixed");
      return out;
    }
    if constexpr (HasMeetAll<I>) {
      if (inst_->allIdealsMeet()) {
        out.weaklyFixed = Verdict3::holdsExact("every pair of ideals meets");
        return out;
      }
    }
    for (const auto& a : ball(*inst_, bound)) {
      if (inst_->rightLcm(inst_->mul(qk, a), inst_->mul(pk, a)).disjoint) {
        out.weaklyFixed = Verdict3::failsExact("a=" + inst_->show(a), "qkaP and pkaP disjoint");
        return out;
      }
    }
    out.weaklyFixed = Verdict3::holdsAt(bound);
    return out;
  }

  /// Condition (EP) for s: every weakly fixed [qk,qk] admits a foundation
  /// set F with qkf = pkf for all f ∈ F.
  Verdict3 conditionEP(const H& s, int bound, int poolWordLen = 2) const {
    if (s.zero) throw UsageError("condition (EP) needs a nonzero hull element");
    if (isIdempotent(s))
      return Verdict3::holdsExact("idempotent: foundation set {1_P}");
    if constexpr (SelfSimilarInstance<I>) {
      // Faithful self-similar shortcut for (ε, g, ε): verify the
      // weakly-fixed ⇔ strongly-fixed equivalence at the bound first.
      if (inst_->faithful_ == true && inst_->wordPart(s.p).empty() && inst_->wordPart(s.q).empty()) {
        GElem g = inst_->G->mul(s.p.g, inst_->G->inv(s.q.g));
        bool equivalenceOk = true;
        for (const auto& alpha : wordsUpTo(inst_->alphabet(), bound)) {
          auto wf = weaklyFixed(inst_->fromWord(alpha), s, bound);
          bool strongly = inst_->act(g, alpha) == alpha && inst_->G->isId(inst_->restrict(g, alpha));
          if (wf.weaklyFixed.holds() != strongly && !wf.weaklyFixed.unknown()) equivalenceOk = false;
        }
        if (equivalenceOk)
          return Verdict3::holdsExact("faithful self-similar group element satisfies (EP)");
      }
    }
    if constexpr (HasCancellativeCert<I>) {
      // Right cancellativity turns qkf = pkf into qk = pk, so a weakly fixed
      // idempotent that is not fixed rules out every foundation set.
      if (inst_->cancellative() == true) {
        bool inconclusive = false;
        for (const auto& k : ball(*inst_, bound)) {
          auto wf = weaklyFixed(k, s, bound);
          if (wf.fixed || wf.weaklyFixed.fails()) continue;
          auto qk = inst_->mul(s.q, k);
          if (wf.weaklyFixed.holds() && wf.weaklyFixed.exact)
            return Verdict3::failsExact("[" + inst_->show(qk) + ", " + inst_->show(qk) + "]",
                                        "weakly fixed but not fixed; cancellativity blocks "
                                        "every foundation set");
          inconclusive = true;
        }
        if (inconclusive) return Verdict3::unknownAt(bound, "weak fixedness undecided at bound");
        return Verdict3::holdsAt(bound, {}, "all weakly fixed idempotents are fixed at bound");
      }
    }
    std::vector<El> pool;
    if constexpr (PrefixTree<I>) {
      for (const auto& w : wordsUpTo(inst_->alphabet(), poolWordLen)) pool.push_back(inst_->fromWord(w));
    } else {
      pool = ball(*inst_, poolWordLen);
    }
    for (const auto& k : ball(*inst_, bound)) {
      auto wf = weaklyFixed(k, s, bound);
      if (wf.weaklyFixed.fails()) continue;
      auto qk = inst_->mul(s.q, k);
      auto pk = inst_->mul(s.p, k);
      if (inst_->eq(pk, qk)) continue;  // F = {1_P} works
      std::vector<El> agreeing;
      for (const auto& f : pool)
        if (inst_->eq(inst_->mul(qk, f), inst_->mul(pk, f))) agreeing.push_back(f);
      if (agreeing.empty() || !isFoundationSet(*inst_, agreeing, bound).holds())
        return Verdict3::unknownAt(bound, "no foundation set found for weakly fixed [" +
                                              inst_->show(qk) + ", " + inst_->show(qk) + "]");
    }
    return Verdict3::holdsAt(bound);
  }

  struct CoreResult {
    Verdict3 lcmCore;      // both coordinates in P₀
    Verdict3 appendixCore; // s*s·e ≠ 0 and s·s*·e ≠ 0 for all idempotents e
    bool agree = false;
  };

  CoreResult hullCoreContains(const H& s, int bound) const {
    if (s.zero) throw UsageError("core membership of 0 is undefined");
    CoreResult out;
    out.lcmCore = conj(coreContains(*inst_, s.p, bound), coreContains(*inst_, s.q, bound));
    H ss = mul(star(s), s);
    H sS = mul(s, star(s));
    out.appendixCore = Verdict3::holdsAt(bound);
    for (const auto& r : ball(*inst_, bound)) {
      H e = pair(r, r);
      if (mul(ss, e).zero)
        out.appendixCore = Verdict3::failsExact("e=" + show(e), "orthogonal to s*s");
      else if (mul(sS, e).zero)
        out.appendixCore = Verdict3::failsExact("e=" + show(e), "orthogonal to ss*");
      if (out.appendixCore.fails()) break;
    }
    out.agree = out.lcmCore.truth == out.appendixCore.truth ||
                out.lcmCore.unknown() || out.appendixCore.unknown();
    return out;
  }

  /// E*-unitary: a nonzero idempotent below s forces s idempotent.
  Verdict3 eStarUnitaryProbe(int bound) const {
    if constexpr (HasCancellativeCert<I>) {
      if (inst_->cancellative() == true)
        return Verdict3::holdsExact("P cancellative iff \xF0\x9D\x92\xAE E*-unitary");
    }
    auto elems = ball(*inst_, bound);
    for (const auto& p : elems)
      for (const auto& q : elems) {
        H s = pair(p, q);
        if (isIdempotent(s)) continue;
        for (const auto& r : elems) {
          H e = pair(r, r);
          if (leq(e, s))
            return Verdict3::failsExact(show(e) + " \xE2\xA9\xBD " + show(s),
                                        "non-idempotent dominates an idempotent");
        }
      }
    return Verdict3::unknownAt(bound, "no witness found at bound");
  }

  struct ContractionWitness {
    El f0, f1, a;
    bool productIsZero = false;
    bool chainOk = false;
  };

  /// The locally-contracting witness from a disjoint pair: a = f₁ = rp,
  /// f₀ = rprq, and [f₀,f₀][a,1][f₁,f₁] must vanish.
  ContractionWitness locallyContractingWitness(const El& r, const El& p, const El& q) const {
    if (!inst_->rightLcm(p, q).disjoint) throw UsageError("witness requires pP \xE2\x88\xA9 qP = \xE2\x88\x85");
    ContractionWitness w;
    w.f1 = inst_->mul(r, p);
    w.a = w.f1;
    w.f0 = inst_->mul(w.f1, inst_->mul(r, q));
    H triple = mul(mul(pair(w.f0, w.f0), pair(w.a, inst_->identity())), pair(w.f1, w.f1));
    w.productIsZero = triple.zero;
    w.chainOk = inst_->leftDivide(w.f1, w.f0).has_value() && inst_->leftDivide(r, w.f1).has_value() &&
                inst_->leftDivide(w.f1, inst_->mul(w.a, w.f1)).has_value();
    return w;
  }

 private:
  const I* inst_;
};

}  // namespace qlcm
