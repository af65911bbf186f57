#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lesac/knowledge_base.hpp"

namespace lesac {

constexpr std::size_t kDefaultArgumentCap = 100000;
constexpr std::size_t kDefaultAttackCap = 8000000;

/// One node of an argument tree. Everything that refers to other arguments or
/// rules uses indices into the owning ArgumentSet, kept sorted.
struct Argument {
  int id = 0;
  std::optional<Formula> fact;  // set for premise arguments
  int top_rule = -1;            // index into ArgumentSet::rules, -1 for facts
  std::vector<int> subs;        // immediate subarguments, in antecedent order
  Formula conclusion;

  std::vector<Formula> premises;
  std::vector<int> all_subs;  // Sub(A), includes the argument itself
  std::vector<int> norms;     // defeasible rules anywhere in the tree
  std::vector<int> strict;    // strict rules anywhere in the tree
  std::vector<int> last_norms;

  bool is_fact() const { return fact.has_value(); }
  bool is_strict() const { return norms.empty(); }
  std::string name() const { return "A" + std::to_string(id); }
};

struct ArgumentSet {
  std::vector<Rule> rules;  // norms first, then strict rules
  std::vector<Argument> args;

  const Rule& rule(int i) const { return rules[static_cast<std::size_t>(i)]; }
  const Argument& operator[](int i) const { return args[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return args.size(); }
  bool top_defeasible(int a) const;

  std::vector<std::string> principles(const std::vector<int>& rule_ids, const KnowledgeBase& kb) const;
  /// Principles of the last norms / of all norms.
  std::vector<std::string> last_prin(int a, const KnowledgeBase& kb) const;
  std::vector<std::string> prin(int a, const KnowledgeBase& kb) const;
  std::vector<int> arguments_for(const Formula& f) const;
};

/// Forward chaining from the facts of a grounded, synthesized KB. A rule is
/// never applied on top of a subtree that already uses it, and an argument is
/// dropped when one of its own subarguments has the same conclusion, norms and
/// last norms (it can only matter as a detour). Throws ExplosionGuard past
/// `cap` arguments.
ArgumentSet construct_arguments(const KnowledgeBase& kb, std::size_t cap = kDefaultArgumentCap);

/// Cap taken from LESAC_ARG_CAP when set and numeric, else the default.
std::size_t argument_cap_from_env();

enum class AttackKind { Negation, BottomPair, DeonticConflict };
const char* to_string(AttackKind k);

struct Attack {
  int attacker = 0;
  int target = 0;
  int on = 0;  // the attacked subargument of target
  AttackKind kind = AttackKind::Negation;

  auto operator<=>(const Attack&) const = default;
};

/// Every (A, B, B') with B' a defeasible-topped subargument of B whose
/// conclusion clashes with conc(A). Sorted. Lifting to every super-argument
/// is quadratic, hence ExplosionGuard past `cap` attacks.
std::vector<Attack> compute_attacks(const ArgumentSet& set, const KnowledgeBase& kb,
                                    std::size_t cap = kDefaultAttackCap);

enum class Link { Last, Weakest };
enum class SetMode { Elitist, Democratic };

const char* to_string(Link l);
const char* to_string(SetMode m);

/// Set comparison over principle ids: true iff G is strictly below G'.
bool set_compare(const std::vector<std::string>& g, const std::vector<std::string>& g2, SetMode mode,
                 const PrincipleOrder& order);

/// A strictly less preferred than B.
bool arg_prec(const ArgumentSet& set, int a, int b, Link link, SetMode mode, const KnowledgeBase& kb);

/// Which argument the attacker's strength is measured against.
enum class DefeatTarget { Subargument, Whole };

struct DefeatGraph {
  std::size_t n = 0;
  std::vector<std::pair<int, int>> defeats;  // (attacker, target), sorted, unique
  std::vector<Attack> attacks;
  std::vector<std::vector<int>> defeaters;  // defeaters[b] = all a with (a, b)

  bool defeats_edge(int a, int b) const;
};

DefeatGraph build_defeat_graph(const ArgumentSet& set, const std::vector<Attack>& attacks, Link link,
                               SetMode mode, const KnowledgeBase& kb,
                               DefeatTarget target = DefeatTarget::Subargument);

/// Graph from a bare edge list, for tests and abstract frameworks.
DefeatGraph make_graph(std::size_t n, std::vector<std::pair<int, int>> defeats);

std::string to_dot(const ArgumentSet& set, const DefeatGraph& g);

/// Arguments that violate the side condition on Pref facts: Pref(b, a) with
/// an argument for O(b) strictly below one for O(a). Arguments that use the
/// Pref fact itself are not considered.
struct PrefGuardViolation {
  Formula pref;
  int preferred_arg = 0;
  int other_arg = 0;
};
std::vector<PrefGuardViolation> check_pref_guard(const ArgumentSet& set, Link link, SetMode mode,
                                                 const KnowledgeBase& kb);

/// Pairs of strict arguments whose conclusions clash while one of them is an
/// obligation: nothing defeasible is left to cancel either of them.
struct CancellationViolation {
  int a = 0;
  int b = 0;
};
std::vector<CancellationViolation> check_obligation_cancellable(const ArgumentSet& set, const KnowledgeBase& kb);

}  // namespace lesac
