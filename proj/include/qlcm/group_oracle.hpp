#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "verdict.hpp"
#include "word.hpp"

namespace qlcm {

enum class GroupKind { IntegerPower, FiniteTable, BoundedPortrait };

/// A group element in the oracle's normal form: an exponent of the single
/// generator, an index into a finite multiplication table, or a reduced
/// word of signed generator indices (+i / -i for generator i-1 / its inverse).
struct GElem {
  std::variant<long long, int, std::vector<int>> v;
  bool operator==(const GElem& o) const = default;  // syntactic only
};

inline std::vector<int> freeReduce(std::vector<int> w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

/// Word-problem oracle for the group G of a self-similar specification.
/// Carries the generator rules g·x and g|_x and extends action/restriction to
/// arbitrary elements via ZS2/ZS8 (and g⁻¹·x = σ_g⁻¹(x), g⁻¹|_x = (g|_{g⁻¹·x})⁻¹).
class GroupCtx {
 public:
  GroupKind kind;
  int nLetters = 0;
  std::vector<std::string> genNames;
  // Per generator: letter permutation and letter restrictions.
  std::vector<std::vector<int>> genAct;     // [gen][letter] -> letter
  std::vector<std::vector<GElem>> genRes;   // [gen][letter] -> element
  int portraitDepth = 3;                    // BoundedPortrait equality depth

  // FiniteTable data.
  std::vector<std::string> elemNames;
  std::vector<std::vector<int>> table;      // table[i][j] = i*j
  std::vector<int> genIndex;                // generator -> element index
  int idIndex = 0;
  // Derived: per-element action/restriction tables (BFS closure over ZS8).
  std::vector<std::vector<int>> elemAct;
  std::vector<std::vector<int>> elemRes;    // stores element indices

  GElem id() const {
    switch (kind) {
      case GroupKind::IntegerPower: return {0LL};
      case GroupKind::FiniteTable: return {idIndex};
      default: return {std::vector<int>{}};
    }
  }

  GElem gen(int i, int sign = 1) const {
    switch (kind) {
      case GroupKind::IntegerPower: return {static_cast<long long>(sign)};
      case GroupKind::FiniteTable:
        return {sign > 0 ? genIndex[i] : invIndex(genIndex[i])};
      default: return {std::vector<int>{sign > 0 ? i + 1 : -(i + 1)}};
    }
  }

  GElem mul(const GElem& a, const GElem& b) const {
    switch (kind) {
      case GroupKind::IntegerPower:
        return {std::get<long long>(a.v) + std::get<long long>(b.v)};
      case GroupKind::FiniteTable:
        return {table[std::get<int>(a.v)][std::get<int>(b.v)]};
      default: {
        std::vector<int> w = std::get<std::vector<int>>(a.v);
        const auto& u = std::get<std::vector<int>>(b.v);
        w.insert(w.end(), u.begin(), u.end());
        return {freeReduce(std::move(w))};
      }
    }
  }

  GElem inv(const GElem& a) const {
    switch (kind) {
      case GroupKind::IntegerPower: return {-std::get<long long>(a.v)};
      case GroupKind::FiniteTable: return {invIndex(std::get<int>(a.v))};
      default: {
        const auto& w = std::get<std::vector<int>>(a.v);
        std::vector<int> r(w.rbegin(), w.rend());
        for (int& x : r) x = -x;
        return {std::move(r)};
      }
    }
  }

  /// Exact for IntegerPower / FiniteTable; portrait equality is only an
  /// agreement of actions and restrictions to `portraitDepth`.
  bool certain() const { return kind != GroupKind::BoundedPortrait; }

  bool eq(const GElem& a, const GElem& b) const {
    if (kind != GroupKind::BoundedPortrait) return a == b;
    if (a == b) return true;
    return portraitEq(a, b, portraitDepth);
  }
  bool isId(const GElem& g) const { return eq(g, id()); }

  int actLetter(const GElem& g, int x) const {
    switch (kind) {
      case GroupKind::IntegerPower: {
        long long m = std::get<long long>(g.v);
        // orbit of x under the generator permutation
        std::vector<int> orbit{x};
        for (int y = genAct[0][x]; y != x; y = genAct[0][y]) orbit.push_back(y);
        long long k = m % static_cast<long long>(orbit.size());
        if (k < 0) k += static_cast<long long>(orbit.size());
        return orbit[static_cast<size_t>(k)];
      }
      case GroupKind::FiniteTable:
        return elemAct[std::get<int>(g.v)][x];
      default: {
        const auto& w = std::get<std::vector<int>>(g.v);
        int y = x;
        for (auto it = w.rbegin(); it != w.rend(); ++it) y = letterActOfGen(*it, y);
        return y;
      }
    }
  }

  GElem resLetter(const GElem& g, int x) const {
    switch (kind) {
      case GroupKind::IntegerPower: {
        long long m = std::get<long long>(g.v);
        long long acc = 0;
        int y = x;
        if (m >= 0) {
          for (long long i = 0; i < m; ++i) {  // z^m|_x = Σ z|_{z^i·x}
            acc += std::get<long long>(genRes[0][y].v);
            y = genAct[0][y];
          }
        } else {
          for (long long i = 0; i < -m; ++i) {  // z⁻¹|_x = -(z|_{z⁻¹·x})
            y = invLetterAct(0, y);
            acc -= std::get<long long>(genRes[0][y].v);
          }
        }
        return {acc};
      }
      case GroupKind::FiniteTable:
        return {elemRes[std::get<int>(g.v)][x]};
      default: {
        // (g1 g2 ... gk)|_x = g1|_{(g2..gk)·x} · (g2..gk)|_x   (ZS8)
        const auto& w = std::get<std::vector<int>>(g.v);
        std::vector<int> res;
        int y = x;
        std::vector<std::vector<int>> parts;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          parts.push_back(letterResOfGen(*it, y));
          y = letterActOfGen(*it, y);
        }
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
          res.insert(res.end(), it->begin(), it->end());
        return {freeReduce(std::move(res))};
      }
    }
  }

  int sizeOf(const GElem& g) const {
    switch (kind) {
      case GroupKind::IntegerPower:
        return static_cast<int>(std::llabs(std::get<long long>(g.v)));
      case GroupKind::FiniteTable:
        return std::get<int>(g.v) == idIndex ? 0 : 1;
      default:
        return static_cast<int>(std::get<std::vector<int>>(g.v).size());
    }
  }

  std::vector<GElem> ball(int n) const {
    std::vector<GElem> out;
    switch (kind) {
      case GroupKind::IntegerPower:
        out.push_back({0LL});
        for (long long m = 1; m <= n; ++m) {
          out.push_back({m});
          out.push_back({-m});
        }
        break;
      case GroupKind::FiniteTable:
        for (int i = 0; i < static_cast<int>(elemNames.size()); ++i) out.push_back({i});
        break;
      default: {
        std::vector<std::vector<int>> cur{{}};
        out.push_back({std::vector<int>{}});
        for (int len = 1; len <= n; ++len) {
          std::vector<std::vector<int>> next;
          for (const auto& w : cur)
            for (int i = 0; i < static_cast<int>(genNames.size()); ++i)
              for (int s : {1, -1}) {
                if (!w.empty() && w.back() == -s * (i + 1)) continue;
                auto v = w;
                v.push_back(s * (i + 1));
                next.push_back(v);
                out.push_back({v});
              }
          cur = std::move(next);
        }
      }
    }
    return out;
  }

  std::string show(const GElem& g) const {
    switch (kind) {
      case GroupKind::IntegerPower: {
        long long m = std::get<long long>(g.v);
        if (m == 0) return "e";
        if (m == 1) return genNames[0];
        return genNames[0] + "^" + std::to_string(m);
      }
      case GroupKind::FiniteTable:
        return elemNames[std::get<int>(g.v)];
      default: {
        const auto& w = std::get<std::vector<int>>(g.v);
        if (w.empty()) return "e";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
          if (i) s += "*";
          int x = w[i];
          s += genNames[std::abs(x) - 1];
          if (x < 0) s += "^-1";
        }
        return s;
      }
    }
  }

  /// Hashable key for cycle detection; only meaningful when certain().
  std::string key(const GElem& g) const { return show(g); }

  /// Build the per-element action/restriction closure for FiniteTable.
  /// Throws if the rules are inconsistent with the multiplication table.
  void buildTableClosure() {
    int n = static_cast<int>(elemNames.size());
    elemAct.assign(n, {});
    elemRes.assign(n, {});
    std::vector<bool> done(n, false);
    elemAct[idIndex].resize(nLetters);
    elemRes[idIndex].assign(nLetters, idIndex);
    std::iota(elemAct[idIndex].begin(), elemAct[idIndex].end(), 0);
    done[idIndex] = true;
    std::deque<int> q{idIndex};
    while (!q.empty()) {
      int h = q.front();
      q.pop_front();
      for (size_t gi = 0; gi < genIndex.size(); ++gi) {
        int g = genIndex[gi];
        int gh = table[g][h];
        std::vector<int> act(nLetters), res(nLetters);
        for (int x = 0; x < nLetters; ++x) {
          int hx = elemAct[h][x];
          act[x] = genAct[gi][hx];
          res[x] = table[std::get<int>(genRes[gi][hx].v)][elemRes[h][x]];
        }
        if (!done[gh]) {
          elemAct[gh] = act;
          elemRes[gh] = res;
          done[gh] = true;
          q.push_back(gh);
        } else if (elemAct[gh] != act || elemRes[gh] != res) {
          throw ConstructionError("finite-table rules inconsistent at element " + elemNames[gh]);
        }
      }
    }
    for (int i = 0; i < n; ++i)
      if (!done[i]) throw ConstructionError("element " + elemNames[i] + " not generated by the listed generators");
  }

 private:
  int invIndex(int i) const {
    for (int j = 0; j < static_cast<int>(table.size()); ++j)
      if (table[i][j] == idIndex) return j;
    throw ConstructionError("element " + elemNames[i] + " has no inverse in the table");
  }

  int invLetterAct(int gi, int y) const {
    for (int x = 0; x < nLetters; ++x)
      if (genAct[gi][x] == y) return x;
    throw ConstructionError("generator action is not a bijection");
  }

  int letterActOfGen(int signedGen, int x) const {
    int gi = std::abs(signedGen) - 1;
    return signedGen > 0 ? genAct[gi][x] : invLetterAct(gi, x);
  }

  std::vector<int> letterResOfGen(int signedGen, int x) const {
    int gi = std::abs(signedGen) - 1;
    if (signedGen > 0) return std::get<std::vector<int>>(genRes[gi][x].v);
    // g⁻¹|_x = (g|_{g⁻¹·x})⁻¹
    int y = invLetterAct(gi, x);
    auto w = std::get<std::vector<int>>(genRes[gi][y].v);
    std::vector<int> r(w.rbegin(), w.rend());
    for (int& v : r) v = -v;
    return r;
  }

  bool portraitEq(const GElem& a, const GElem& b, int depth) const {
    struct Frame { GElem a, b; int rem; };
    std::deque<Frame> q{{a, b, depth}};
    while (!q.empty()) {
      auto [ga, gb, rem] = q.front();
      q.pop_front();
      if (rem == 0) {
        if (std::get<std::vector<int>>(ga.v) != std::get<std::vector<int>>(gb.v)) return false;
        continue;
      }
      for (int x = 0; x < nLetters; ++x) {
        if (actLetter(ga, x) != actLetter(gb, x)) return false;
        q.push_back({resLetter(ga, x), resLetter(gb, x), rem - 1});
      }
    }
    return true;
  }
};

}  // namespace qlcm
