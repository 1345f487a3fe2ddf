#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "group_oracle.hpp"

namespace qlcm {

/// One rule line: g·x = y and g|_x = res.
struct SelfSimilarRule {
  std::string gen;
  char letter;
  char image;
  std::string res;  // group word, "e" for identity
};

struct SelfSimilarSpec {
  std::string alphabet;
  GroupKind kind = GroupKind::IntegerPower;
  std::vector<std::string> generators;
  std::vector<SelfSimilarRule> rules;
  // FiniteTable only:
  std::vector<std::string> elemNames;
  std::vector<std::tuple<std::string, std::string, std::string>> tableEntries;  // a*b=c
  std::string identityName = "e";
  int portraitDepth = 3;
  std::string name = "self-similar";
};

inline GElem parseGroupWord(const GroupCtx& G, const std::string& text);

/// The Zappa-Szép product X*⋈G of the free monoid on X with a self-similar
/// group G.  Elements are pairs (word, group element); the product is
/// (u,a)(v,b) = (u(a·v), a|_v b).  Ideals are determined by the word part.
class ZappaSzep {
 public:
  struct Element {
    Word w;
    GElem g;
    bool operator==(const Element& o) const = default;
  };
  static constexpr bool kPrefixTree = true;
  static constexpr bool kSelfSimilar = true;

  std::shared_ptr<const GroupCtx> G;
  std::string alphabet_;
  std::string name_ = "zappa-szep";

  // Instance-supplied certificates (set by the builder when proven).
  std::optional<bool> cancellative_;
  std::optional<bool> faithful_;
  std::optional<bool> pseudoFree_;
  std::string pseudoFreeWitness_;
  bool msfFiniteCert_ = false;

  ZappaSzep(std::shared_ptr<const GroupCtx> ctx, std::string alphabet)
      : G(std::move(ctx)), alphabet_(std::move(alphabet)) {}

  const std::string& alphabet() const { return alphabet_; }
  std::string name() const { return name_; }

  int letterIndex(char c) const {
    auto pos = alphabet_.find(c);
    if (pos == std::string::npos)
      throw UsageError("letter '" + std::string(1, c) + "' not in alphabet " + alphabet_);
    return static_cast<int>(pos);
  }

  Word act(const GElem& g, const Word& w) const {
    Word out;
    GElem h = g;
    for (char c : w) {
      int x = letterIndex(c);
      out += alphabet_[G->actLetter(h, x)];
      h = G->resLetter(h, x);
    }
    return out;
  }

  GElem restrict(const GElem& g, const Word& w) const {
    GElem h = g;
    for (char c : w) h = G->resLetter(h, letterIndex(c));
    return h;
  }

  Element identity() const { return {Word{}, G->id()}; }

  Element mul(const Element& p, const Element& q) const {
    return {p.w + act(p.g, q.w), G->mul(restrict(p.g, q.w), q.g)};
  }

  bool eq(const Element& p, const Element& q) const { return p.w == q.w && G->eq(p.g, q.g); }
  bool eqExact() const { return G->certain(); }
  bool isUnit(const Element& e) const { return e.w.empty(); }
  int sizeOf(const Element& e) const { return static_cast<int>(e.w.size()) + G->sizeOf(e.g); }
  std::string show(const Element& e) const { return "(" + showWord(e.w) + ", " + G->show(e.g) + ")"; }
  Word wordPart(const Element& e) const { return e.w; }
  Element fromWord(const Word& w) const { return {w, G->id()}; }

  /// (u,a)P ∩ (v,b)P is governed by the word parts; the canonical right LCM
  /// has the longer word and identity group part, with qComp carrying the
  /// residual unit.
  RightLcmOutcome<Element> rightLcm(const Element& p, const Element& q) const {
    if (!comparable(p.w, q.w)) return RightLcmOutcome<Element>::makeDisjoint();
    const Word& longer = p.w.size() >= q.w.size() ? p.w : q.w;
    Element r{longer, G->id()};
    auto pc = leftDivide(p, r);
    auto qc = leftDivide(q, r);
    return RightLcmOutcome<Element>::meet(r, *pc, *qc);
  }

  std::optional<Element> unitWitness(const Element& p, const Element& q) const {
    if (p.w != q.w) return std::nullopt;
    return Element{Word{}, G->mul(G->inv(p.g), q.g)};
  }

  std::optional<Element> leftDivide(const Element& p, const Element& m) const {
    if (!isPrefix(p.w, m.w)) return std::nullopt;
    Word rest = m.w.substr(p.w.size());
    Word v = act(G->inv(p.g), rest);
    GElem k = G->mul(G->inv(restrict(p.g, v)), m.g);
    return Element{v, k};
  }

  std::vector<Element> elementsOfSize(int n) const {
    std::vector<Element> out;
    auto gball = G->ball(n);
    for (int i = 0; i <= n; ++i) {
      auto words = wordsOfLength(alphabet_, i);
      for (const auto& g : gball) {
        if (G->sizeOf(g) != n - i) continue;
        for (const auto& w : words) out.push_back({w, g});
      }
    }
    return out;
  }

  std::vector<Element> sampleUnits(int bound) const {
    std::vector<Element> out;
    for (const auto& g : G->ball(bound)) out.push_back({Word{}, g});
    return out;
  }

  Element randomElement(std::mt19937_64& rng, int maxSize) const {
    std::uniform_int_distribution<int> len(0, maxSize);
    std::uniform_int_distribution<size_t> pick(0, alphabet_.size() - 1);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w += alphabet_[pick(rng)];
    auto gb = G->ball(maxSize);
    std::uniform_int_distribution<size_t> gpick(0, gb.size() - 1);
    return {w, gb[gpick(rng)]};
  }

  std::optional<bool> cancellative() const { return cancellative_; }

  /// (U⋈A)_0 = {(u,a) | u ∈ U_0} and the core of X* is {ε}.
  std::optional<Verdict3> coreShortcut(const Element& p) const {
    if (p.w.empty()) return Verdict3::holdsExact("core of X*\xE2\x8B\x88G is {(\xCE\xB5, g)}");
    if (alphabet_.size() == 1) return Verdict3::holdsExact("unary alphabet: ideals totally ordered");
    char other = alphabet_[0] == p.w[0] ? alphabet_[1] : alphabet_[0];
    return Verdict3::failsExact("q=(" + std::string(1, other) + ", e)", "disjoint word cylinders");
  }

  /// Unit normalizing the group coordinate to the identity: q·u = (β, e).
  Element normalizingUnit(const Element& q) const { return {Word{}, G->inv(q.g)}; }

  Element parseElement(const std::string& s) const {
    // "1" and "e" are identity shorthands only when they are not letters
    auto isUnitToken = [this](const std::string& t) {
      return t == "\xCE\xB5" ||
             (t.size() == 1 && (t == "1" || t == "e") && alphabet_.find(t[0]) == std::string::npos);
    };
    if (isUnitToken(s)) return identity();
    std::string body = s;
    if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    auto comma = body.find(',');
    std::string wtxt = comma == std::string::npos ? body : body.substr(0, comma);
    std::string gtxt = comma == std::string::npos ? "e" : body.substr(comma + 1);
    while (!gtxt.empty() && gtxt.front() == ' ') gtxt.erase(gtxt.begin());
    if (isUnitToken(wtxt)) wtxt.clear();
    for (char c : wtxt) letterIndex(c);
    return {wtxt, parseGroupWord(*G, gtxt)};
  }
};

inline GElem parseGroupWord(const GroupCtx& G, const std::string& text) {
  GElem acc = G.id();
  std::string t = text;
  for (char& c : t)
    if (c == '*') c = ' ';
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::string base = tok;
    long long pow = 1;
    if (auto h = tok.find('^'); h != std::string::npos) {
      base = tok.substr(0, h);
      pow = std::stoll(tok.substr(h + 1));
    }
    tok.clear();
    if (base == "e" || base == "1") return;
    int gi = -1;
    for (size_t i = 0; i < G.genNames.size(); ++i)
      if (G.genNames[i] == base) gi = static_cast<int>(i);
    GElem g;
    if (gi >= 0) {
      g = G.gen(gi, pow >= 0 ? 1 : -1);
    } else if (G.kind == GroupKind::FiniteTable) {
      int ei = -1;
      for (size_t i = 0; i < G.elemNames.size(); ++i)
        if (G.elemNames[i] == base) ei = static_cast<int>(i);
      if (ei < 0) throw UsageError("unknown group element '" + base + "'");
      g = pow >= 0 ? GElem{ei} : G.inv(GElem{ei});
    } else {
      throw UsageError("unknown group generator '" + base + "'");
    }
    for (long long i = 0; i < std::llabs(pow); ++i) acc = G.mul(acc, g);
  };
  for (char c : t) {
    if (c == ' ') flush();
    else tok += c;
  }
  flush();
  return acc;
}

namespace detail {

inline void checkZsAxioms(const ZappaSzep& zs, int depth) {
  const auto& G = *zs.G;
  // letter-level bijectivity first (§5.3 condition (iv))
  for (size_t gi = 0; gi < G.genNames.size(); ++gi) {
    std::set<int> img;
    for (int x = 0; x < G.nLetters; ++x) img.insert(G.genAct[gi][x]);
    if (static_cast<int>(img.size()) != G.nLetters)
      throw ConstructionError("generator " + G.genNames[gi] + " does not act bijectively on the alphabet");
  }
  auto gball = G.ball(2);
  auto words = wordsUpTo(zs.alphabet(), depth);
  for (const auto& a : gball) {
    if (zs.act(G.id(), Word{}) != Word{}) throw ConstructionError("ZS3 fails");
    if (!G.eq(zs.restrict(a, Word{}), a)) throw ConstructionError("ZS5 fails at a=" + G.show(a));
    for (const auto& u : words) {
      if (zs.act(G.id(), u) != u) throw ConstructionError("ZS1 fails at u=" + u);
      if (!G.isId(zs.restrict(G.id(), u))) throw ConstructionError("ZS7 fails at u=" + u);
      if (zs.act(a, u).size() != u.size())
        throw ConstructionError("action is not length-preserving at a=" + G.show(a) + ", u=" + u);
      for (const auto& b : gball) {
        if (zs.act(G.mul(a, b), u) != zs.act(a, zs.act(b, u)))
          throw ConstructionError("ZS2 fails at a=" + G.show(a) + ", b=" + G.show(b) + ", u=" + u);
        if (!G.eq(zs.restrict(G.mul(a, b), u),
                  G.mul(zs.restrict(a, zs.act(b, u)), zs.restrict(b, u))))
          throw ConstructionError("ZS8 fails at a=" + G.show(a) + ", b=" + G.show(b) + ", u=" + u);
      }
      for (const auto& v : words) {
        if (u.size() + v.size() > static_cast<size_t>(depth)) continue;
        if (zs.act(a, u + v) != zs.act(a, u) + zs.act(zs.restrict(a, u), v))
          throw ConstructionError("ZS4 fails at a=" + G.show(a) + ", u=" + u + ", v=" + v);
        if (!G.eq(zs.restrict(a, u + v), zs.restrict(zs.restrict(a, u), v)))
          throw ConstructionError("ZS6 fails at a=" + G.show(a) + ", u=" + u + ", v=" + v);
      }
    }
  }
}

/// Detects the ℤ-odometer family: one generator z acting as binary add-one
/// on a two-letter cycle, all remaining letters fixed with trivial
/// restriction.  For this family the divisibility bound k·2^|β| = m makes
/// every MSF_{z^m} finite.
struct OdometerShape {
  bool matches = false;
  int extraLetters = 0;
};

inline OdometerShape odometerShape(const GroupCtx& G) {
  OdometerShape s;
  if (G.kind != GroupKind::IntegerPower || G.nLetters < 2) return s;
  // find the swapped pair
  int a = -1, b = -1;
  for (int x = 0; x < G.nLetters; ++x)
    if (G.genAct[0][x] != x) {
      a = x;
      b = G.genAct[0][x];
      break;
    }
  if (a < 0 || G.genAct[0][b] != a) return s;
  long long ra = std::get<long long>(G.genRes[0][a].v);
  long long rb = std::get<long long>(G.genRes[0][b].v);
  if (!((ra == 0 && rb == 1) || (ra == 1 && rb == 0))) return s;
  for (int x = 0; x < G.nLetters; ++x) {
    if (x == a || x == b) continue;
    if (G.genAct[0][x] != x || std::get<long long>(G.genRes[0][x].v) != 0) return s;
    ++s.extraLetters;
  }
  s.matches = true;
  return s;
}

}  // namespace detail

/// Builds X*⋈G from a validated spec.  Rejects specs violating bijectivity
/// or any of ZS1-ZS8 (checked on all generator pairs and words up to depth 3)
/// with the failing axiom and inputs.
inline ZappaSzep buildSelfSimilar(const SelfSimilarSpec& spec, int checkDepth = 3) {
  if (spec.alphabet.empty()) throw ConstructionError("empty alphabet");
  auto ctx = std::make_shared<GroupCtx>();
  ctx->kind = spec.kind;
  ctx->nLetters = static_cast<int>(spec.alphabet.size());
  ctx->genNames = spec.generators;
  ctx->portraitDepth = spec.portraitDepth;
  if (spec.kind == GroupKind::IntegerPower && spec.generators.size() != 1)
    throw ConstructionError("integer-power oracle needs exactly one generator");

  if (spec.kind == GroupKind::FiniteTable) {
    ctx->elemNames = spec.elemNames;
    int n = static_cast<int>(spec.elemNames.size());
    auto idx = [&](const std::string& nm) {
      for (int i = 0; i < n; ++i)
        if (spec.elemNames[i] == nm) return i;
      throw ConstructionError("unknown table element '" + nm + "'");
    };
    ctx->idIndex = idx(spec.identityName);
    ctx->table.assign(n, std::vector<int>(n, -1));
    for (const auto& [a, b, c] : spec.tableEntries) ctx->table[idx(a)][idx(b)] = idx(c);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (ctx->table[i][j] < 0)
          throw ConstructionError("multiplication table entry missing for " + spec.elemNames[i] + "*" + spec.elemNames[j]);
    for (const auto& g : spec.generators) ctx->genIndex.push_back(idx(g));
  }

  // generator rules
  int ng = static_cast<int>(spec.generators.size());
  ctx->genAct.assign(ng, std::vector<int>(ctx->nLetters, -1));
  ctx->genRes.assign(ng, std::vector<GElem>(ctx->nLetters));
  for (const auto& rule : spec.rules) {
    int gi = -1;
    for (int i = 0; i < ng; ++i)
      if (spec.generators[i] == rule.gen) gi = i;
    if (gi < 0) throw ConstructionError("rule for unknown generator '" + rule.gen + "'");
    auto li = spec.alphabet.find(rule.letter);
    auto im = spec.alphabet.find(rule.image);
    if (li == std::string::npos || im == std::string::npos)
      throw ConstructionError("rule uses a letter outside the alphabet");
    ctx->genAct[gi][li] = static_cast<int>(im);
    ctx->genRes[gi][li] = parseGroupWord(*ctx, rule.res);
  }
  for (int gi = 0; gi < ng; ++gi)
    for (int x = 0; x < ctx->nLetters; ++x)
      if (ctx->genAct[gi][x] < 0)
        throw ConstructionError("missing rule for " + spec.generators[gi] + " . " + std::string(1, spec.alphabet[x]));

  if (spec.kind == GroupKind::FiniteTable) ctx->buildTableClosure();

  ZappaSzep zs(ctx, spec.alphabet);
  zs.name_ = spec.name;
  detail::checkZsAxioms(zs, checkDepth);

  auto shape = detail::odometerShape(*ctx);
  if (shape.matches) {
    zs.msfFiniteCert_ = true;
    zs.faithful_ = true;
    if (shape.extraLetters == 0) {
      zs.pseudoFree_ = true;
      zs.cancellative_ = true;  // cancellative iff pseudo-free
    } else {
      zs.pseudoFree_ = false;
      zs.cancellative_ = false;
      char fixedLetter = 0;
      for (int x = 0; x < ctx->nLetters; ++x)
        if (ctx->genAct[0][x] == x && std::get<long long>(ctx->genRes[0][x].v) == 0)
          fixedLetter = spec.alphabet[x];
      zs.pseudoFreeWitness_ = "(" + ctx->genNames[0] + ", " + std::string(1, fixedLetter) + ")";
    }
  }
  return zs;
}

inline SelfSimilarSpec odometerSpec() {
  SelfSimilarSpec s;
  s.alphabet = "01";
  s.kind = GroupKind::IntegerPower;
  s.generators = {"z"};
  s.rules = {{"z", '0', '1', "e"}, {"z", '1', '0', "z"}};
  s.name = "odometer";
  return s;
}

inline SelfSimilarSpec modifiedOdometerSpec() {
  SelfSimilarSpec s = odometerSpec();
  s.alphabet = "01B";
  s.rules.push_back({"z", 'B', 'B', "e"});
  s.name = "modified-odometer";
  return s;
}

struct MsfResult {
  std::vector<Word> words;
  Verdict3 finiteness;
};

/// All minimal strongly fixed words of g up to maxLen: α with g·α = α and
/// g|_α = 1_G, no proper prefix strongly fixed.
template <class I>
MsfResult msfEnumerate(const I& inst, const GElem& g, int maxLen = 8) {
  static_assert(I::kSelfSimilar);
  const auto& G = *inst.G;
  if (G.isId(g)) throw UsageError("MSF is undefined for the identity: \xCE\xB5 is strongly fixed");
  MsfResult out;
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= maxLen && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (char c : inst.alphabet()) {
        Word a = w + c;
        if (inst.act(g, a) != a) continue;  // no extension can be fixed either
        if (G.isId(inst.restrict(g, a))) out.words.push_back(a);
        else next.push_back(a);
      }
    frontier = std::move(next);
  }
  if (inst.msfFiniteCert_)
    out.finiteness = Verdict3::holdsExact("divisibility bound for the odometer family");
  else if (inst.pseudoFree_ == true && out.words.empty())
    out.finiteness = Verdict3::holdsExact("pseudo-free: SF_g is empty");
  else
    out.finiteness = Verdict3::unknownAt(maxLen);
  return out;
}

struct PseudoFreeFaithful {
  Verdict3 pseudoFree;
  Verdict3 faithful;
};

template <class I>
PseudoFreeFaithful pseudoFreeFaithfulProbe(const I& inst, int bound) {
  static_assert(I::kSelfSimilar);
  const auto& G = *inst.G;
  PseudoFreeFaithful out;
  out.pseudoFree = Verdict3::holdsAt(bound);
  out.faithful = Verdict3::holdsAt(bound);
  auto words = wordsUpTo(inst.alphabet(), bound);
  for (const auto& g : G.ball(bound)) {
    if (G.isId(g)) continue;
    bool moved = false;
    for (const auto& a : words) {
      if (a.empty()) continue;
      Word img = inst.act(g, a);
      if (img != a) moved = true;
      else if (G.isId(inst.restrict(g, a)) && out.pseudoFree.holds())
        out.pseudoFree = Verdict3::failsExact("(" + G.show(g) + ", " + a + ")", "strongly fixed word");
    }
    if (!moved) {
      // g fixes every word up to the bound; if the restriction closure of g
      // also acts trivially on letters, g acts trivially everywhere.
      bool triviallyActing = true;
      std::set<std::string> seen;
      std::vector<GElem> todo{g};
      while (!todo.empty() && seen.size() < 64) {
        GElem h = todo.back();
        todo.pop_back();
        if (!seen.insert(G.key(h)).second) continue;
        for (int x = 0; x < G.nLetters; ++x) {
          if (G.actLetter(h, x) != x) triviallyActing = false;
          todo.push_back(G.resLetter(h, x));
        }
      }
      if (triviallyActing && G.certain())
        out.faithful = Verdict3::failsExact(G.show(g), "acts trivially on every word");
      else if (out.faithful.holds())
        out.faithful = Verdict3::unknownAt(bound, G.show(g) + " moved no word at bound");
    }
  }
  if (out.pseudoFree.holds() && inst.pseudoFree_ == true)
    out.pseudoFree = Verdict3::holdsExact("pseudo-free certificate");
  if (out.pseudoFree.holds() && inst.pseudoFree_ == false && !inst.pseudoFreeWitness_.empty())
    out.pseudoFree = Verdict3::failsExact(inst.pseudoFreeWitness_, "strongly fixed word");
  if (out.faithful.holds() && inst.faithful_ == true)
    out.faithful = Verdict3::holdsExact("faithfulness certificate");
  return out;
}

}  // namespace qlcm
