#include "support.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#ifndef LESAC_DATA_DIR
#define LESAC_DATA_DIR "data"
#endif

namespace testing {

using namespace lesac;

std::string fixture(const std::string& name) { return std::string(LESAC_DATA_DIR) + "/" + name; }

Analysis analyze_fixture(const std::string& name, Link link, SetMode mode) {
  AnalysisOptions opt;
  opt.link = link;
  opt.mode = mode;
  return analyze(load_kb_file(fixture(name)), opt);
}

Analysis analyze_source(const std::string& src, Link link, SetMode mode) {
  AnalysisOptions opt;
  opt.link = link;
  opt.mode = mode;
  return analyze(parse_kb(src), opt);
}

Formula F(const std::string& text) { return parse_formula(text); }

bool has(const std::vector<Formula>& v, const std::string& text) {
  return std::find(v.begin(), v.end(), F(text)) != v.end();
}

std::set<std::string> norm_ids(const Analysis& an, const Explanation& ex) {
  std::set<std::string> out;
  for (int r : ex.norms) out.insert(an.args.rule(r).id);
  for (const auto& p : ex.last_principles) out.insert(p);
  return out;
}

std::string random_kb_source(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  const char* names[] = {"a", "b", "c", "d", "e"};
  const int nconst = pick(1, 5);
  std::vector<std::string> atoms;
  const int natoms = pick(2, 5);
  for (int i = 0; i < natoms; ++i)
    atoms.push_back("Q" + std::to_string(pick(0, 3)) + "(" + names[pick(0, nconst - 1)] + ")");
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  auto atom = [&] { return atoms[static_cast<std::size_t>(pick(0, static_cast<int>(atoms.size()) - 1))]; };
  auto literal = [&] { return (coin(0.4) ? "~" : "") + atom(); };
  auto deontic = [&] { return std::string(coin(0.7) ? "O(" : "P(") + literal() + ")"; };
  // Bodies mostly reuse what facts and earlier heads provide, so norms fire.
  std::vector<std::string> derivable;
  auto body_item = [&] {
    if (!derivable.empty() && coin(0.7))
      return derivable[static_cast<std::size_t>(pick(0, static_cast<int>(derivable.size()) - 1))];
    return coin(0.3) ? deontic() : literal();
  };

  std::ostringstream out;
  out << "const";
  for (int i = 0; i < nconst; ++i) out << (i ? ", " : " ") << names[i];
  out << ".\n";

  const int nprin = pick(2, 4);
  for (int i = 1; i <= nprin; ++i) out << "principle p" << i << ".\n";
  std::vector<int> perm(static_cast<std::size_t>(nprin));
  for (int i = 0; i < nprin; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  const int chain = pick(1, nprin);
  if (chain > 1) {
    out << "order p" << perm[0];
    for (int i = 1; i < chain; ++i) out << (coin(0.2) ? " ~ p" : " < p") << perm[static_cast<std::size_t>(i)];
    out << ".\n";
  }

  std::set<std::string> fact_atoms;
  const int nfacts = pick(1, 3);
  for (int i = 0; i < nfacts; ++i) {
    const std::string a = atom();
    if (!fact_atoms.insert(a).second) continue;
    const std::string f = (coin(0.2) ? "~" : "") + a;
    derivable.push_back(f);
    out << "fact " << f << ".\n";
  }

  const int nnorms = pick(1, 8);
  for (int i = 1; i <= nnorms; ++i) {
    out << "norm n" << i << " [p" << pick(1, nprin) << "]: " << body_item();
    if (coin(0.3)) out << ", " << body_item();
    const std::string head = coin(0.6) ? deontic() : literal();
    derivable.push_back(head);
    out << " => " << head << ".\n";
  }
  const int nstrict = pick(0, 6);
  for (int i = 1; i <= nstrict; ++i) {
    out << "strict s" << i << ": " << literal();
    if (coin(0.3)) out << ", " << literal();
    out << " -> " << literal() << ".\n";
  }
  if (coin(0.2)) out << "rule t1 forall x: Q0(x) ~> O(Q1(x)) [p1].\n";
  if (atoms.size() >= 2 && coin(0.35)) {
    out << "incompatible " << atoms[0] << ", " << atoms[1] << ".\n";
    if (coin(0.5)) out << "pref " << atoms[0] << " > " << atoms[1] << ".\n";
  }
  return out.str();
}

Corpus well_defined_corpus(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  Corpus c;
  while (c.sources.size() < count) {
    std::string src = random_kb_source(rng);
    Analysis an;
    try {
      an = analyze_source(src);
    } catch (const Error& e) {
      ++(e.code() == ErrorCode::ExplosionGuard ? c.guarded : c.rejected);
      continue;
    }
    if (!an.report.well_defined) {
      ++c.rejected;
      continue;
    }
    c.sources.push_back(std::move(src));
  }
  return c;
}

std::vector<std::vector<int>> brute_force_complete(const DefeatGraph& g) {
  const int n = static_cast<int>(g.n);
  std::vector<std::vector<int>> out;
  std::vector<int> lab(static_cast<std::size_t>(n), 0);  // 0 out, 1 in, 2 undec
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int a = 0; a < n; ++a) {
        bool all_out = true, some_in = false;
        for (int x : g.defeaters[static_cast<std::size_t>(a)]) {
          if (lab[static_cast<std::size_t>(x)] != 0) all_out = false;
          if (lab[static_cast<std::size_t>(x)] == 1) some_in = true;
        }
        const int l = lab[static_cast<std::size_t>(a)];
        if ((l == 1) != all_out || (l == 0) != some_in) return;
      }
      std::vector<int> ext;
      for (int a = 0; a < n; ++a)
        if (lab[static_cast<std::size_t>(a)] == 1) ext.push_back(a);
      out.push_back(ext);
      return;
    }
    for (int l = 0; l < 3; ++l) {
      lab[static_cast<std::size_t>(i)] = l;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

DefeatGraph random_graph(std::mt19937& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(0, max_n)(rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> defeats;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (edge(rng)) defeats.push_back({a, b});
  return make_graph(static_cast<std::size_t>(n), std::move(defeats));
}

std::set<Formula> forward_chain(const KnowledgeBase& kb) {
  std::set<Formula> known(kb.facts.begin(), kb.facts.end());
  std::vector<const Rule*> rules;
  for (const auto& r : kb.strict_rules) rules.push_back(&r);
  for (const auto& r : kb.norms) rules.push_back(&r);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule* r : rules) {
      if (known.count(r->consequent)) continue;
      if (std::all_of(r->antecedents.begin(), r->antecedents.end(), [&](const Formula& f) { return known.count(f); })) {
        known.insert(r->consequent);
        changed = true;
      }
    }
  }
  return known;
}

}  // namespace testing
