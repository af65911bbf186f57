#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lesac/semantics.hpp"

namespace lesac {

struct Explanation {
  Formula target;
  int argument = 0;
  std::vector<int> defenders;
  std::vector<int> norms;  // rule indices into the ArgumentSet, sorted
  std::vector<std::string> last_principles;
  std::vector<std::pair<std::string, std::string>> ordering;  // (lower, higher)
  std::vector<std::string> all_principles;                    // verbose only
};

/// Picks the argument for `target` in `ext` with the fewest norms (ties by
/// norm ids, then argument id). Every argument attacking it gets one
/// defender from `ext`: the argument itself when it answers the attack, else
/// one of its subarguments, else the member with fewest norms. Collects norms
/// and last principles of all of these plus the strict principle pairs among
/// the last principles. Throws NotAccepted.
Explanation explain(const Formula& target, const Extension& ext, const ArgumentSet& set, const DefeatGraph& g,
                    const KnowledgeBase& kb, bool verbose = false);

struct Witness {
  bool pass = true;
  std::string detail;
};

struct PostulateReport {
  Witness subargument_closure;
  Witness strict_rule_closure;
  Witness direct_consistency;
  Witness indirect_consistency;

  bool all_pass() const {
    return subargument_closure.pass && strict_rule_closure.pass && direct_consistency.pass &&
           indirect_consistency.pass;
  }
};

PostulateReport check_postulates(const Extension& ext, const ArgumentSet& set, const KnowledgeBase& kb);

struct OrderingViolation {
  std::string condition;  // "1a", "1b", "1c", "2", "irreflexive", "transitive"
  std::string detail;
};

/// Exhaustive over argument pairs and strict continuations present in `set`;
/// condition 2 over subsets of up to `max_subset` arguments drawn from the
/// normative ones, capped at `max_checks` subsets.
std::vector<OrderingViolation> check_reasonable_ordering(const ArgumentSet& set, Link link, SetMode mode,
                                                         const KnowledgeBase& kb, std::size_t max_subset = 4,
                                                         std::size_t max_checks = 20000);

}  // namespace lesac
