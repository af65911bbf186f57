#include "lesac/knowledge_base.hpp"

#include <algorithm>

#include "lesac/error.hpp"

namespace lesac {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownPrinciple: return "UnknownPrinciple";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::NoConstants: return "NoConstants";
    case ErrorCode::InconsistentPreference: return "InconsistentPreference";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::NotAccepted: return "NotAccepted";
    case ErrorCode::EmptyInput: return "EmptyInput";
  }
  return "Error";
}

std::string Rule::shape() const {
  std::vector<std::string> ants;
  ants.reserve(antecedents.size());
  for (const auto& a : antecedents) ants.push_back(a.str());
  std::sort(ants.begin(), ants.end());
  std::string out;
  for (const auto& a : ants) out += a + " ; ";
  out += is_norm() ? "=> " : "-> ";
  out += consequent.str();
  return out;
}

std::string to_string(const Rule& r) {
  std::string out = r.id + ": ";
  for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
    if (i) out += ", ";
    out += r.antecedents[i].str();
  }
  out += r.is_norm() ? " => " : " -> ";
  out += r.consequent.str();
  return out;
}

void PrincipleOrder::add_principle(const std::string& id) {
  elements_.insert(id);
  leq_.insert({id, id});
}

void PrincipleOrder::add_leq(const std::string& lower, const std::string& upper) {
  add_principle(lower);
  add_principle(upper);
  leq_.insert({lower, upper});
}

void PrincipleOrder::close() {
  for (const auto& e : elements_) leq_.insert({e, e});
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::string, std::string>> add;
    for (const auto& [a, b] : leq_) {
      auto it = leq_.lower_bound({b, std::string()});
      for (; it != leq_.end() && it->first == b; ++it)
        if (!leq_.count({a, it->second})) add.push_back({a, it->second});
    }
    for (auto& p : add) changed |= leq_.insert(std::move(p)).second;
  }
}

bool PrincipleOrder::leq(const std::string& a, const std::string& b) const { return a == b || leq_.count({a, b}); }

bool PrincipleOrder::less(const std::string& a, const std::string& b) const { return leq(a, b) && !leq(b, a); }

bool PrincipleOrder::is_preorder() const {
  for (const auto& e : elements_)
    if (!leq_.count({e, e})) return false;
  for (const auto& [a, b] : leq_) {
    auto it = leq_.lower_bound({b, std::string()});
    for (; it != leq_.end() && it->first == b; ++it)
      if (!leq_.count({a, it->second})) return false;
  }
  return true;
}

bool KnowledgeBase::has_principle(const std::string& id) const { return find_principle(id) != nullptr; }

const Principle* KnowledgeBase::find_principle(const std::string& id) const {
  for (const auto& p : principles)
    if (p.id == id) return &p;
  return nullptr;
}

const Rule* KnowledgeBase::find_rule(const std::string& id) const {
  for (const auto& r : norms)
    if (r.id == id) return &r;
  for (const auto& r : strict_rules)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace lesac
