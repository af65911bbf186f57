#include "lesac/render.hpp"

#include <sstream>

#include "json.hpp"

namespace lesac {

namespace {

using json = nlohmann::ordered_json;

json strings(const std::vector<Formula>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

json names(const ArgumentSet& set, const std::vector<int>& ids) {
  json out = json::array();
  for (int i : ids) out.push_back(set[i].name());
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string principle_line(const KnowledgeBase& kb, const std::string& id) {
  const Principle* p = kb.find_principle(id);
  return p && !p->text.empty() ? id + ": " + p->text : id;
}

json witness(const Witness& w) {
  json j;
  j["pass"] = w.pass;
  if (!w.pass) j["witness"] = w.detail;
  return j;
}

}  // namespace

std::string render_validation_text(const ValidationReport& rep) {
  if (rep.well_defined) return "well-defined\n";
  std::ostringstream out;
  out << "not well-defined (" << rep.violations.size() << " violation" << (rep.violations.size() == 1 ? "" : "s")
      << ")\n";
  for (const auto& v : rep.violations) {
    out << "  " << v.code << ": " << v.message;
    for (std::size_t i = 0; i < v.items.size(); ++i) out << (i ? ", " : " [") << v.items[i];
    out << (v.items.empty() ? "" : "]") << "\n";
  }
  return out.str();
}

std::string render_validation_json(const ValidationReport& rep) {
  json j;
  j["well_defined"] = rep.well_defined;
  j["violations"] = json::array();
  for (const auto& v : rep.violations) {
    json x;
    x["code"] = v.code;
    x["message"] = v.message;
    x["items"] = v.items;
    j["violations"].push_back(x);
  }
  return dump(j);
}

std::string render_conclusions_text(const Analysis&, const std::vector<Extension>& exts, Stance stance) {
  std::ostringstream out;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    out << "extension " << i << " (" << to_string(exts[i].semantics) << ", " << exts[i].members.size()
        << " arguments)\n";
  }
  out << to_string(stance) << " conclusions:\n";
  for (const auto& f : justified_conclusions(exts, stance)) out << "  " << f.str() << "\n";
  return out.str();
}

std::string render_conclusions_json(const Analysis& an, const std::vector<Extension>& exts, Stance stance) {
  json j;
  j["semantics"] = exts.empty() ? "complete" : to_string(exts.front().semantics);
  j["stance"] = to_string(stance);
  j["extensions"] = json::array();
  for (const auto& e : exts) {
    json x;
    x["arguments"] = names(an.args, e.members);
    x["conclusions"] = strings(e.conclusions);
    j["extensions"].push_back(x);
  }
  j["conclusions"] = strings(justified_conclusions(exts, stance));
  return dump(j);
}

std::string render_explanation_text(const Analysis& an, const Explanation& ex) {
  std::ostringstream out;
  out << "Exp(" << ex.target.str() << ") = {\n";
  for (int r : ex.norms) out << "  " << to_string(an.args.rule(r)) << "\n";
  for (const auto& p : ex.last_principles) out << "  " << principle_line(an.kb, p) << "\n";
  for (const auto& [lo, hi] : ex.ordering) out << "  " << lo << " < " << hi << "\n";
  out << "}\n";
  out << ex.target.str() << " is concluded by " << an.args[ex.argument].name();
  if (ex.defenders.empty()) {
    out << ", which no accepted argument needs to defend.\n";
  } else {
    out << ", defended by";
    for (int d : ex.defenders) out << " " << an.args[d].name();
    out << ".\n";
  }
  if (!ex.all_principles.empty()) {
    out << "all principles involved:\n";
    for (const auto& p : ex.all_principles) out << "  " << principle_line(an.kb, p) << "\n";
  }
  return out.str();
}

std::string render_explanation_json(const Analysis& an, const Explanation& ex) {
  json j;
  j["target"] = ex.target.str();
  j["norms"] = json::array();
  for (int r : ex.norms) {
    const Rule& rule = an.args.rule(r);
    json x;
    x["id"] = rule.id;
    x["antecedents"] = strings(rule.antecedents);
    x["consequent"] = rule.consequent.str();
    x["principle"] = rule.principle.value_or("");
    j["norms"].push_back(x);
  }
  auto principles = [&](const std::vector<std::string>& ids) {
    json arr = json::array();
    for (const auto& id : ids) {
      json x;
      x["id"] = id;
      const Principle* p = an.kb.find_principle(id);
      x["text"] = p ? p->text : "";
      arr.push_back(x);
    }
    return arr;
  };
  j["principles"] = principles(ex.last_principles);
  j["ordering"] = json::array();
  for (const auto& [lo, hi] : ex.ordering) j["ordering"].push_back(lo + " < " + hi);
  j["argument"] = an.args[ex.argument].name();
  j["defenders"] = names(an.args, ex.defenders);
  if (!ex.all_principles.empty()) j["all_principles"] = principles(ex.all_principles);
  return dump(j);
}

std::string render_graph_text(const Analysis& an) {
  std::ostringstream out;
  out << an.args.size() << " arguments, " << an.attacks.size() << " attacks, " << an.graph.defeats.size()
      << " defeats\n";
  for (const auto& a : an.args.args) {
    out << "  " << a.name() << ": " << a.conclusion.str();
    if (a.top_rule >= 0) out << "  [" << an.args.rule(a.top_rule).id << "]";
    out << "\n";
  }
  for (const auto& [a, b] : an.graph.defeats) out << "  A" << a << " defeats A" << b << "\n";
  return out.str();
}

std::string render_graph_json(const Analysis& an) {
  json j;
  j["arguments"] = json::array();
  for (const auto& a : an.args.args) {
    json x;
    x["id"] = a.name();
    x["conclusion"] = a.conclusion.str();
    x["rule"] = a.top_rule >= 0 ? an.args.rule(a.top_rule).id : "";
    x["subarguments"] = names(an.args, a.subs);
    x["premises"] = strings(a.premises);
    j["arguments"].push_back(x);
  }
  j["attacks"] = json::array();
  for (const auto& at : an.attacks) {
    json x;
    x["attacker"] = an.args[at.attacker].name();
    x["target"] = an.args[at.target].name();
    x["on"] = an.args[at.on].name();
    x["kind"] = to_string(at.kind);
    x["defeat"] = an.graph.defeats_edge(at.attacker, at.target);
    j["attacks"].push_back(x);
  }
  return dump(j);
}

bool CheckSummary::ok() const {
  for (const auto& p : postulates)
    if (!p.all_pass()) return false;
  return ordering.empty();
}

std::string render_check_text(const CheckSummary& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.postulates.size(); ++i) {
    const auto& p = c.postulates[i];
    out << "extension " << i << ": " << (p.all_pass() ? "all postulates hold" : "postulate failure") << "\n";
    const std::pair<const char*, const Witness*> rows[] = {{"sub-argument closure", &p.subargument_closure},
                                                           {"closure under strict rules", &p.strict_rule_closure},
                                                           {"direct consistency", &p.direct_consistency},
                                                           {"indirect consistency", &p.indirect_consistency}};
    for (const auto& [name, w] : rows)
      if (!w->pass) out << "  " << name << ": " << w->detail << "\n";
  }
  if (c.ordering.empty()) {
    out << "argument ordering is reasonable\n";
  } else {
    for (const auto& v : c.ordering) out << "ordering violation " << v.condition << ": " << v.detail << "\n";
  }
  return out.str();
}

std::string render_check_json(const CheckSummary& c) {
  json j;
  j["ok"] = c.ok();
  j["extensions"] = json::array();
  for (const auto& p : c.postulates) {
    json x;
    x["subargument_closure"] = witness(p.subargument_closure);
    x["strict_rule_closure"] = witness(p.strict_rule_closure);
    x["direct_consistency"] = witness(p.direct_consistency);
    x["indirect_consistency"] = witness(p.indirect_consistency);
    j["extensions"].push_back(x);
  }
  j["ordering_violations"] = json::array();
  for (const auto& v : c.ordering) j["ordering_violations"].push_back({{"condition", v.condition}, {"detail", v.detail}});
  return dump(j);
}

}  // namespace lesac
