#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlcm {

enum class Truth { Holds, Fails, Unknown };

/// Result of a bounded or exact decision procedure.  Every procedure that
/// quantifies over an infinite semigroup returns one of these instead of a
/// bool.  `exact` is only set when the instance supplied a proof shortcut
/// or the search space was provably exhausted.
struct Verdict3 {
  Truth truth = Truth::Unknown;
  bool exact = false;
  int bound = -1;              // search depth used (or exhausted at)
  std::string evidence;        // witness / counterexample, printable
  std::string reason;          // e.g. "right cancellative"

  static Verdict3 holdsExact(std::string reason = {}, std::string evidence = {}) {
    return {Truth::Holds, true, -1, std::move(evidence), std::move(reason)};
  }
  static Verdict3 holdsAt(int bound, std::string evidence = {}, std::string reason = {}) {
    return {Truth::Holds, false, bound, std::move(evidence), std::move(reason)};
  }
  static Verdict3 failsExact(std::string counterexample, std::string reason = {}) {
    return {Truth::Fails, true, -1, std::move(counterexample), std::move(reason)};
  }
  static Verdict3 failsAt(int bound, std::string counterexample, std::string reason = {}) {
    return {Truth::Fails, false, bound, std::move(counterexample), std::move(reason)};
  }
  static Verdict3 unknownAt(int bound, std::string reason = {}) {
    return {Truth::Unknown, false, bound, {}, std::move(reason)};
  }

  bool holds() const { return truth == Truth::Holds; }
  bool fails() const { return truth == Truth::Fails; }
  bool unknown() const { return truth == Truth::Unknown; }
};

/// Three-valued conjunction: Fails dominates, then Unknown, then Holds.
inline Verdict3 conj(const Verdict3& a, const Verdict3& b) {
  if (a.fails()) return a;
  if (b.fails()) return b;
  if (a.unknown()) return a;
  if (b.unknown()) return b;
  Verdict3 r = Verdict3::holdsExact();
  r.exact = a.exact && b.exact;
  r.bound = std::max(a.bound, b.bound);
  return r;
}

inline Verdict3 conjAll(const std::vector<Verdict3>& vs) {
  Verdict3 r = Verdict3::holdsExact();
  for (const auto& v : vs) r = conj(r, v);
  return r;
}

inline std::string truthWord(Truth t) {
  switch (t) {
    case Truth::Holds: return "HOLDS";
    case Truth::Fails: return "FAILS";
    default: return "UNKNOWN";
  }
}

/// Stable one-line rendering used by the text report and golden tests.
inline std::string describe(const Verdict3& v) {
  std::string s = truthWord(v.truth);
  if (v.unknown()) {
    s += " at bound " + std::to_string(v.bound);
    if (!v.reason.empty()) s += " (" + v.reason + ")";
    return s;
  }
  std::string inner;
  if (v.exact) inner = "exact";
  else inner = "bound=" + std::to_string(v.bound);
  if (!v.reason.empty()) inner += ", via " + v.reason;
  s += " (" + inner + ")";
  if (!v.evidence.empty()) s += " witness: " + v.evidence;
  return s;
}

struct UsageError : std::exception {
  std::string msg;
  explicit UsageError(std::string m) : msg(std::move(m)) {}
  const char* what() const noexcept override { return msg.c_str(); }
};

struct ConstructionError : std::exception {
  std::string msg;
  explicit ConstructionError(std::string m) : msg(std::move(m)) {}
  const char* what() const noexcept override { return msg.c_str(); }
};

}  // namespace qlcm
