#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qlcm/report.hpp"

namespace {

using namespace qlcm;

template <class I>
int runGerm(const I& inst, const std::string& sText, const std::string& tText,
            const std::string& pointText, int depth) {
  if constexpr (!PrefixTree<I>) {
    (void)sText; (void)tText; (void)pointText; (void)depth;
    std::cerr << "error: germ inspection needs a tree-shaped ideal lattice\n";
    return 2;
  } else {
    Hull<I> hull(inst);
    auto parsePair = [&](const std::string& text) {
      auto bar = text.find('|');
      if (bar == std::string::npos)
        throw UsageError("hull element must look like p|q, got '" + text + "'");
      return hull.pair(inst.parseElement(text.substr(0, bar)),
                       inst.parseElement(text.substr(bar + 1)));
    };
    auto s = parsePair(sText);
    auto x = parseBoundaryPoint(pointText, inst.alphabet());
    auto g = makeGerm(inst, hull, s, x);
    std::cout << "element: " << hull.show(s) << "\n";
    std::cout << "point: " << x.show() << "\n";
    auto th = thetaApply(inst, s, x);
    std::cout << "theta image: " << (th.exact ? th.y.show() : th.y.show() + " (approximate)")
              << (th.note.empty() ? "" : "  [" + th.note + "]") << "\n";
    if (!tText.empty()) {
      auto t = parsePair(tText);
      auto h = makeGerm(inst, hull, t, x);
      std::cout << "germ of " << hull.show(t) << " at the same point: "
                << describe(germEq(inst, hull, g, h, depth)) << "\n";
      return 0;
    }
    std::cout << "germ equals the unit germ: "
              << describe(germEq(inst, hull, g, Germ<I>{hull.one(), x}, depth)) << "\n";
    if (th.exact && th.y == x) {
      auto iso = isotropyProbe(inst, hull, x, std::min(depth, 3), depth);
      std::cout << "isotropy at the point: " << iso.fixingCount << " fixing elements, "
                << iso.nontrivial.size() << " with nontrivial germ";
      for (const auto& n : iso.nontrivial) std::cout << " " << hull.show(n);
      if (!iso.undecided.empty()) std::cout << " (" << iso.undecided.size() << " undecided)";
      std::cout << "\n";
    }
    return 0;
  }
}

template <class I>
int runMsf(const I& inst, const std::string& elementText, int maxLen) {
  if constexpr (!SelfSimilarInstance<I>) {
    (void)elementText; (void)maxLen;
    std::cerr << "error: msf needs a self-similar instance\n";
    return 2;
  } else {
    GElem g = parseGroupWord(*inst.G, elementText);
    auto r = msfEnumerate(inst, g, maxLen);
    std::cout << "element: " << inst.G->show(g) << "\n";
    std::cout << "minimal strongly fixed words (up to length " << maxLen << "):";
    for (const auto& w : r.words) std::cout << " " << w;
    if (r.words.empty()) std::cout << " (none)";
    std::cout << "\n";
    std::cout << "finite: " << describe(r.finiteness) << "\n";
    return 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure reports for right LCM semigroups and their boundary actions"};
  app.require_subcommand(1);

  std::string instanceText, format = "text", element, sText, tText, pointText;
  int depth = 6, epCap = 4, maxLen = 8;

  auto* analyze = app.add_subcommand("analyze", "run the full structure report");
  analyze->add_option("instance", instanceText,
                      "free:<letters>, nat:<k>, odometer, modified-odometer, or a file")
      ->required();
  analyze->add_option("--depth", depth, "search depth for bounded probes");
  analyze->add_option("--ep-cap", epCap, "group-ball radius for core probes");
  analyze->add_option("--format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  auto* msf = app.add_subcommand("msf", "minimal strongly fixed words of a group element");
  msf->add_option("instance", instanceText, "self-similar instance")->required();
  msf->add_option("--element", element, "group word, e.g. z^3")->required();
  msf->add_option("--max-len", maxLen, "maximum word length to enumerate");

  auto* germ = app.add_subcommand("germ", "inspect a germ of the boundary groupoid");
  germ->add_option("instance", instanceText, "tree-type instance")->required();
  germ->add_option("--s", sText, "hull element as p|q")->required();
  germ->add_option("--t", tText, "optional second hull element to compare against");
  germ->add_option("--point", pointText, "eventually periodic point u(w)")->required();
  germ->add_option("--depth", depth, "bound for germ comparisons");

  try {
    app.parse(argc, argv);
    qlcm::Instance inst = qlcm::parseInstance(instanceText);
    if (analyze->parsed()) {
      qlcm::AnalyzeOptions opts{depth, epCap};
      auto rep = qlcm::analyzeInstance(inst, opts);
      if (format == "machine")
        std::cout << qlcm::renderJson(rep).dump(2) << "\n";
      else
        std::cout << qlcm::renderText(rep);
      return 0;
    }
    if (msf->parsed())
      return std::visit([&](const auto& i) { return runMsf(i, element, maxLen); }, inst);
    return std::visit(
        [&](const auto& i) { return runGerm(i, sText, tText, pointText, depth); }, inst);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qlcm::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qlcm::ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
