#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "free_monoid.hpp"
#include "self_similar.hpp"

namespace qlcm {

using Instance = std::variant<FreeMonoid, NatMonoid, ZappaSzep>;

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> splitWs(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace detail

/// Self-similar instance description, line oriented.  '#' starts a comment.
///
///   name: my-group            (optional)
///   alphabet: 01B
///   group: integer-power | finite-table | bounded-portrait(depth=N)
///   generators: z              (optional; inferred from rules otherwise)
///   z . 0 = 1 | e              (action g.x = y, restriction g|_x after '|')
///   elements: e g              (finite-table only)
///   identity: e                (finite-table, defaults to "e")
///   table: g*g = e             (finite-table, one product per line)
inline SelfSimilarSpec parseSelfSimilarText(std::istream& in, const std::string& name) {
  SelfSimilarSpec spec;
  spec.name = name;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw UsageError("line " + std::to_string(lineNo) + ": " + why);
    };
    auto colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : detail::trim(line.substr(0, colon));
    std::string val = colon == std::string::npos ? "" : detail::trim(line.substr(colon + 1));
    if (key == "name") {
      spec.name = val;
    } else if (key == "alphabet") {
      spec.alphabet = val;
    } else if (key == "group") {
      if (val == "integer-power") spec.kind = GroupKind::IntegerPower;
      else if (val == "finite-table") spec.kind = GroupKind::FiniteTable;
      else if (val.rfind("bounded-portrait", 0) == 0) {
        spec.kind = GroupKind::BoundedPortrait;
        if (auto d = val.find("depth="); d != std::string::npos)
          spec.portraitDepth = std::stoi(val.substr(d + 6));
      } else
        fail("unknown group oracle '" + val + "'");
    } else if (key == "generators") {
      spec.generators = detail::splitWs(val);
    } else if (key == "elements") {
      spec.elemNames = detail::splitWs(val);
    } else if (key == "identity") {
      spec.identityName = val;
    } else if (key == "table") {
      auto star = val.find('*');
      auto eqp = val.find('=');
      if (star == std::string::npos || eqp == std::string::npos || eqp < star)
        fail("table entries look like a*b = c");
      spec.tableEntries.emplace_back(detail::trim(val.substr(0, star)),
                                     detail::trim(val.substr(star + 1, eqp - star - 1)),
                                     detail::trim(val.substr(eqp + 1)));
    } else {
      // rule line: g . x = y | res
      auto dot = line.find('.');
      auto eqp = line.find('=');
      auto bar = line.find('|');
      if (dot == std::string::npos || eqp == std::string::npos || bar == std::string::npos ||
          !(dot < eqp && eqp < bar))
        fail("expected 'g . x = y | res' or a 'key: value' header");
      std::string gen = detail::trim(line.substr(0, dot));
      std::string x = detail::trim(line.substr(dot + 1, eqp - dot - 1));
      std::string y = detail::trim(line.substr(eqp + 1, bar - eqp - 1));
      std::string res = detail::trim(line.substr(bar + 1));
      if (gen.empty() || x.size() != 1 || y.size() != 1 || res.empty())
        fail("malformed rule");
      bool known = false;
      for (const auto& g : spec.generators) known = known || g == gen;
      if (!known) spec.generators.push_back(gen);
      spec.rules.push_back({gen, x[0], y[0], res});
    }
  }
  if (spec.alphabet.empty()) throw UsageError("instance file is missing an alphabet");
  if (spec.rules.empty()) throw UsageError("instance file has no rules");
  return spec;
}

inline SelfSimilarSpec parseSelfSimilarFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file " + path);
  std::string base = path;
  if (auto sl = base.find_last_of('/'); sl != std::string::npos) base = base.substr(sl + 1);
  if (auto dot = base.find_last_of('.'); dot != std::string::npos) base = base.substr(0, dot);
  return parseSelfSimilarText(in, base);
}

/// Built-in names: free:<letters>, nat:<k>, odometer, modified-odometer.
/// Anything else is read as a self-similar instance file.
inline Instance parseInstance(const std::string& text) {
  if (text.rfind("free:", 0) == 0) {
    std::string letters = text.substr(5);
    // accept the conventional X prefix for "words over {...}"
    if (letters.size() > 1 && letters[0] == 'X') letters = letters.substr(1);
    return FreeMonoid(letters);
  }
  if (text.rfind("nat:", 0) == 0) return NatMonoid(std::stoi(text.substr(4)));
  if (text == "odometer") return buildSelfSimilar(odometerSpec());
  if (text == "modified-odometer") return buildSelfSimilar(modifiedOdometerSpec());
  return buildSelfSimilar(parseSelfSimilarFile(text));
}

}  // namespace qlcm
