#include "lesac/explanation.hpp"

#include <algorithm>
#include <tuple>

#include "lesac/error.hpp"

namespace lesac {

Explanation explain(const Formula& target, const Extension& ext, const ArgumentSet& set, const DefeatGraph& g,
                    const KnowledgeBase& kb, bool verbose) {
  // Fewest norms, then the lexicographically smallest norm ids, then id.
  auto key = [&](int a) {
    std::vector<std::string> ids;
    for (int r : set[a].norms) ids.push_back(set.rule(r).id);
    std::sort(ids.begin(), ids.end());
    return std::tuple{ids.size(), ids, a};
  };
  int chosen = -1;
  for (int a : ext.members) {
    if (set[a].conclusion != target) continue;
    if (chosen < 0 || key(a) < key(chosen)) chosen = a;
  }
  if (chosen < 0) throw Error(ErrorCode::NotAccepted, target.str() + " is not concluded by any accepted argument");

  Explanation ex;
  ex.target = target;
  ex.argument = chosen;
  // One defender per attacker (attacks on subarguments included, failed
  // attacks too): A itself if it answers, else one of its subarguments, else
  // the member with fewest norms.
  std::vector<int> attackers;
  for (const auto& at : g.attacks)
    if (at.target == chosen) attackers.push_back(at.attacker);
  std::sort(attackers.begin(), attackers.end());
  attackers.erase(std::unique(attackers.begin(), attackers.end()), attackers.end());
  const auto& own = set[chosen].all_subs;
  auto rank = [&](int b) {
    const int tier = b == chosen ? 0 : std::binary_search(own.begin(), own.end(), b) ? 1 : 2;
    return std::tuple{tier, set[b].norms.size(), b};
  };
  for (int x : attackers) {
    int best = -1;
    for (int b : g.defeaters[static_cast<std::size_t>(x)])
      if (ext.contains(b) && (best < 0 || rank(b) < rank(best))) best = b;
    if (best >= 0) ex.defenders.push_back(best);
  }
  std::sort(ex.defenders.begin(), ex.defenders.end());
  ex.defenders.erase(std::unique(ex.defenders.begin(), ex.defenders.end()), ex.defenders.end());

  std::vector<int> involved = ex.defenders;
  involved.push_back(chosen);
  for (int a : involved) {
    const Argument& arg = set[a];
    ex.norms.insert(ex.norms.end(), arg.norms.begin(), arg.norms.end());
    for (auto& p : set.last_prin(a, kb)) ex.last_principles.push_back(p);
    if (verbose)
      for (auto& p : set.prin(a, kb)) ex.all_principles.push_back(p);
  }
  auto tidy = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(ex.norms);
  tidy(ex.last_principles);
  tidy(ex.all_principles);

  for (const auto& p : ex.last_principles)
    for (const auto& q : ex.last_principles)
      if (kb.principle_order.less(p, q)) ex.ordering.push_back({p, q});
  return ex;
}

}  // namespace lesac
