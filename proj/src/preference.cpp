#include <algorithm>

#include "lesac/argument.hpp"

namespace lesac {

const char* to_string(Link l) { return l == Link::Last ? "last" : "weakest"; }
const char* to_string(SetMode m) { return m == SetMode::Elitist ? "eli" : "dem"; }

bool set_compare(const std::vector<std::string>& g, const std::vector<std::string>& g2, SetMode mode,
                 const PrincipleOrder& order) {
  if (g.empty()) return false;
  if (g2.empty()) return true;
  auto below_all = [&](const std::string& x) {
    return std::all_of(g2.begin(), g2.end(), [&](const std::string& y) { return order.less(x, y); });
  };
  auto below_some = [&](const std::string& x) {
    return std::any_of(g2.begin(), g2.end(), [&](const std::string& y) { return order.less(x, y); });
  };
  if (mode == SetMode::Elitist) return std::any_of(g.begin(), g.end(), below_all);
  return std::all_of(g.begin(), g.end(), below_some);
}

bool arg_prec(const ArgumentSet& set, int a, int b, Link link, SetMode mode, const KnowledgeBase& kb) {
  if (link == Link::Last) return set_compare(set.last_prin(a, kb), set.last_prin(b, kb), mode, kb.principle_order);
  return set_compare(set.prin(a, kb), set.prin(b, kb), mode, kb.principle_order);
}

std::vector<PrefGuardViolation> check_pref_guard(const ArgumentSet& set, Link link, SetMode mode,
                                                 const KnowledgeBase& kb) {
  std::vector<PrefGuardViolation> out;
  for (const auto& [hi, lo] : kb.action_prefs) {
    if (!inconsistent_pair(Formula::obligation(hi), Formula::obligation(lo), kb.incompatibilities)) continue;
    const Formula pref = Formula::pref(hi, lo);
    auto usable = [&](int x) {
      const auto& p = set[x].premises;
      return !std::binary_search(p.begin(), p.end(), pref);
    };
    for (int b : set.arguments_for(Formula::obligation(hi))) {
      if (!usable(b)) continue;
      for (int a : set.arguments_for(Formula::obligation(lo)))
        if (usable(a) && arg_prec(set, b, a, link, mode, kb)) out.push_back({pref, b, a});
    }
  }
  return out;
}

}  // namespace lesac
