#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "lesac/error.hpp"
#include "lesac/explanation.hpp"
#include "lesac/formula_parser.hpp"
#include "lesac/kb_frontend.hpp"
#include "lesac/pipeline.hpp"

namespace testing {

std::string fixture(const std::string& name);  // path under data/
lesac::Analysis analyze_fixture(const std::string& name, lesac::Link link = lesac::Link::Last,
                                lesac::SetMode mode = lesac::SetMode::Elitist);
lesac::Analysis analyze_source(const std::string& src, lesac::Link link = lesac::Link::Last,
                               lesac::SetMode mode = lesac::SetMode::Elitist);

lesac::Formula F(const std::string& text);

bool has(const std::vector<lesac::Formula>& v, const std::string& text);
std::set<std::string> norm_ids(const lesac::Analysis& an, const lesac::Explanation& ex);

// Small random KB in .lsc syntax: <= 8 norms, <= 6 strict rules, <= 5 constants.
std::string random_kb_source(std::mt19937& rng);

// Rejection-samples until `count` well-defined KBs are found. Deterministic in seed.
struct Corpus {
  std::vector<std::string> sources;
  std::size_t rejected = 0;  // not well-defined
  std::size_t guarded = 0;   // hit the argument or attack cap
};
Corpus well_defined_corpus(std::size_t count, unsigned seed);

// Every complete extension by trying all 3^n labellings.
std::vector<std::vector<int>> brute_force_complete(const lesac::DefeatGraph& g);

lesac::DefeatGraph random_graph(std::mt19937& rng, int max_n);

// Conclusions reachable from the facts by naive iteration over all rules.
std::set<lesac::Formula> forward_chain(const lesac::KnowledgeBase& kb);

}  // namespace testing
