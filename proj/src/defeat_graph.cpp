#include <algorithm>
#include <set>
#include <sstream>

#include "lesac/argument.hpp"

namespace lesac {

namespace {

void index_defeaters(DefeatGraph& g) {
  std::sort(g.defeats.begin(), g.defeats.end());
  g.defeats.erase(std::unique(g.defeats.begin(), g.defeats.end()), g.defeats.end());
  g.defeaters.assign(g.n, {});
  for (const auto& [a, b] : g.defeats) g.defeaters[static_cast<std::size_t>(b)].push_back(a);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

bool DefeatGraph::defeats_edge(int a, int b) const {
  return std::binary_search(defeats.begin(), defeats.end(), std::pair{a, b});
}

DefeatGraph build_defeat_graph(const ArgumentSet& set, const std::vector<Attack>& attacks, Link link,
                               SetMode mode, const KnowledgeBase& kb, DefeatTarget target) {
  DefeatGraph g;
  g.n = set.size();
  g.attacks = attacks;
  for (const auto& at : attacks) {
    const int against = target == DefeatTarget::Subargument ? at.on : at.target;
    if (!arg_prec(set, at.attacker, against, link, mode, kb)) g.defeats.push_back({at.attacker, at.target});
  }
  index_defeaters(g);
  return g;
}

DefeatGraph make_graph(std::size_t n, std::vector<std::pair<int, int>> defeats) {
  DefeatGraph g;
  g.n = n;
  g.defeats = std::move(defeats);
  index_defeaters(g);
  return g;
}

std::string to_dot(const ArgumentSet& set, const DefeatGraph& g) {
  std::ostringstream out;
  out << "digraph defeats {\n  node [shape=box];\n";
  for (const auto& a : set.args)
    out << "  " << a.name() << " [label=\"" << a.name() << ": " << escape(a.conclusion.str()) << "\"];\n";
  std::set<std::pair<int, int>> failed;
  for (const auto& at : g.attacks)
    if (!g.defeats_edge(at.attacker, at.target)) failed.insert({at.attacker, at.target});
  for (const auto& [a, b] : g.defeats) out << "  A" << a << " -> A" << b << ";\n";
  for (const auto& [a, b] : failed) out << "  A" << a << " -> A" << b << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace lesac
