#pragma once

#include <vector>

#include "lesac/argument.hpp"

namespace lesac {

enum class SemanticsKind { Grounded, Complete };
enum class Stance { Skeptical, Credulous };

const char* to_string(SemanticsKind s);
const char* to_string(Stance s);

struct Extension {
  std::vector<int> members;  // sorted argument ids
  SemanticsKind semantics = SemanticsKind::Complete;
  std::vector<Formula> conclusions;  // sorted, unique

  bool contains(int a) const;
};

Extension grounded_extension(const DefeatGraph& g);

/// All complete extensions, sorted by member list.
std::vector<Extension> complete_extensions(const DefeatGraph& g);

/// Fills in conclusions from the argument set.
void attach_conclusions(Extension& e, const ArgumentSet& set);

/// Throws EmptyInput on an empty list.
std::vector<Formula> justified_conclusions(const std::vector<Extension>& exts, Stance stance);

/// Independent check of the three complete conditions.
bool is_complete(const DefeatGraph& g, const std::vector<int>& members);

}  // namespace lesac
