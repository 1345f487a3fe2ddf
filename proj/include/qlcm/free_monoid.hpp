#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core.hpp"

namespace qlcm {

/// The free monoid X* under concatenation.  Principal right ideals are the
/// cylinders αX*, nested or disjoint by prefix comparison, so the right LCM
/// of two words is simply the longer one when they are comparable.
class FreeMonoid {
 public:
  using Element = Word;
  static constexpr bool kPrefixTree = true;
  static constexpr bool kSelfSimilar = false;

  explicit FreeMonoid(std::string alphabet) : alphabet_(std::move(alphabet)) {
    if (alphabet_.empty()) throw UsageError("free monoid needs a nonempty alphabet");
  }

  const std::string& alphabet() const { return alphabet_; }
  std::string name() const { return "free:" + alphabet_; }

  Element identity() const { return {}; }
  Element mul(const Element& p, const Element& q) const { return p + q; }
  bool eq(const Element& p, const Element& q) const { return p == q; }
  bool eqExact() const { return true; }
  bool isUnit(const Element& e) const { return e.empty(); }
  int sizeOf(const Element& e) const { return static_cast<int>(e.size()); }
  std::string show(const Element& e) const { return showWord(e); }
  Word wordPart(const Element& e) const { return e; }
  Element fromWord(const Word& w) const { return w; }

  RightLcmOutcome<Element> rightLcm(const Element& p, const Element& q) const {
    if (isPrefix(p, q)) return RightLcmOutcome<Element>::meet(q, q.substr(p.size()), Word{});
    if (isPrefix(q, p)) return RightLcmOutcome<Element>::meet(p, Word{}, p.substr(q.size()));
    return RightLcmOutcome<Element>::makeDisjoint();
  }

  /// Unit u with p·u = q, if any.  The only unit is ε.
  std::optional<Element> unitWitness(const Element& p, const Element& q) const {
    if (p == q) return Element{};
    return std::nullopt;
  }

  /// x with p·x = m, if any.
  std::optional<Element> leftDivide(const Element& p, const Element& m) const {
    if (isPrefix(p, m)) return m.substr(p.size());
    return std::nullopt;
  }

  std::vector<Element> elementsOfSize(int n) const { return wordsOfLength(alphabet_, n); }
  std::vector<Element> sampleUnits(int) const { return {Element{}}; }

  Element randomElement(std::mt19937_64& rng, int maxSize) const {
    std::uniform_int_distribution<int> len(0, maxSize);
    std::uniform_int_distribution<size_t> pick(0, alphabet_.size() - 1);
    Element e;
    int n = len(rng);
    for (int i = 0; i < n; ++i) e += alphabet_[pick(rng)];
    return e;
  }

  std::optional<bool> cancellative() const { return true; }

  /// X*_0 = U(X*) = {ε}; a nonempty word is disjoint from any word that
  /// starts with a different letter.
  std::optional<Verdict3> coreShortcut(const Element& p) const {
    if (p.empty()) return Verdict3::holdsExact("core of X* is {\xCE\xB5}");
    if (alphabet_.size() == 1) return Verdict3::holdsExact("unary alphabet: ideals totally ordered");
    char other = alphabet_[0] == p[0] ? alphabet_[1] : alphabet_[0];
    return Verdict3::failsExact(std::string("q=") + other, "disjoint cylinder");
  }

  Element parseElement(const std::string& s) const {
    if (s == "1" || s == "e" || s == "\xCE\xB5") return {};
    for (char c : s)
      if (alphabet_.find(c) == std::string::npos)
        throw UsageError("letter '" + std::string(1, c) + "' not in alphabet " + alphabet_);
    return s;
  }

 private:
  std::string alphabet_;
};

/// The free abelian monoid ℕ^k.  Any two ideals meet (componentwise max), so
/// the whole semigroup is its own core; its ideal semilattice is not a tree.
class NatMonoid {
 public:
  using Element = std::vector<unsigned>;
  static constexpr bool kPrefixTree = false;
  static constexpr bool kSelfSimilar = false;

  explicit NatMonoid(int k) : k_(k) {
    if (k < 1) throw UsageError("nat:k needs k >= 1");
  }

  int rank() const { return k_; }
  std::string name() const { return "nat:" + std::to_string(k_); }

  Element identity() const { return Element(k_, 0); }
  Element mul(const Element& p, const Element& q) const {
    Element r(k_);
    for (int i = 0; i < k_; ++i) r[i] = p[i] + q[i];
    return r;
  }
  bool eq(const Element& p, const Element& q) const { return p == q; }
  bool eqExact() const { return true; }
  bool isUnit(const Element& e) const { return e == identity(); }
  int sizeOf(const Element& e) const {
    int s = 0;
    for (unsigned v : e) s += static_cast<int>(v);
    return s;
  }
  std::string show(const Element& e) const {
    std::string s = "(";
    for (int i = 0; i < k_; ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
  }

  RightLcmOutcome<Element> rightLcm(const Element& p, const Element& q) const {
    Element r(k_), pc(k_), qc(k_);
    for (int i = 0; i < k_; ++i) {
      r[i] = std::max(p[i], q[i]);
      pc[i] = r[i] - p[i];
      qc[i] = r[i] - q[i];
    }
    return RightLcmOutcome<Element>::meet(r, pc, qc);
  }

  std::optional<Element> unitWitness(const Element& p, const Element& q) const {
    if (p == q) return identity();
    return std::nullopt;
  }

  std::optional<Element> leftDivide(const Element& p, const Element& m) const {
    Element x(k_);
    for (int i = 0; i < k_; ++i) {
      if (p[i] > m[i]) return std::nullopt;
      x[i] = m[i] - p[i];
    }
    return x;
  }

  std::vector<Element> elementsOfSize(int n) const {
    std::vector<Element> out;
    Element cur(k_, 0);
    fill(out, cur, 0, n);
    return out;
  }
  std::vector<Element> sampleUnits(int) const { return {identity()}; }

  Element randomElement(std::mt19937_64& rng, int maxSize) const {
    std::uniform_int_distribution<unsigned> d(0, static_cast<unsigned>(maxSize));
    Element e(k_);
    for (int i = 0; i < k_; ++i) e[i] = d(rng);
    return e;
  }

  std::optional<bool> cancellative() const { return true; }
  bool allIdealsMeet() const { return true; }

  std::optional<Verdict3> coreShortcut(const Element&) const {
    return Verdict3::holdsExact("componentwise max: every pair of ideals meets");
  }

  Element parseElement(const std::string& s) const {
    Element e;
    std::string t;
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
    for (char c : body + ",") {
      if (c == ',') {
        e.push_back(static_cast<unsigned>(std::stoul(t)));
        t.clear();
      } else {
        t += c;
      }
    }
    if (static_cast<int>(e.size()) != k_) throw UsageError("expected " + std::to_string(k_) + " coordinates");
    return e;
  }

 private:
  void fill(std::vector<Element>& out, Element& cur, int idx, int rest) const {
    if (idx == k_ - 1) {
      cur[idx] = static_cast<unsigned>(rest);
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[idx] = static_cast<unsigned>(v);
      fill(out, cur, idx + 1, rest - v);
    }
  }
  int k_;
};

}  // namespace qlcm
