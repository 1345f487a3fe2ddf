#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verdict.hpp"
#include "word.hpp"

namespace qlcm {

/// Outcome of pP ∩ qP: either empty, or a principal ideal rP with the
/// factorizations p·pComp = q·qComp = r.
template <class El>
struct RightLcmOutcome {
  bool disjoint = true;
  El r{}, pComp{}, qComp{};

  static RightLcmOutcome makeDisjoint() { return {}; }
  static RightLcmOutcome meet(El r, El pc, El qc) {
    RightLcmOutcome o;
    o.disjoint = false;
    o.r = std::move(r);
    o.pComp = std::move(pc);
    o.qComp = std::move(qc);
    return o;
  }
};

// Optional instance capabilities, probed with `requires`.
template <class I>
concept HasCoreShortcut = requires(const I& i, typename I::Element e) {
  { i.coreShortcut(e) } -> std::convertible_to<std::optional<Verdict3>>;
};

template <class I>
concept HasCancellativeCert = requires(const I& i) {
  { i.cancellative() } -> std::convertible_to<std::optional<bool>>;
};

template <class I>
concept HasMeetAll = requires(const I& i) {
  { i.allIdealsMeet() } -> std::convertible_to<bool>;
};

template <class I>
concept PrefixTree = I::kPrefixTree;

template <class I>
concept SelfSimilarInstance = I::kSelfSimilar;

}  // namespace qlcm
