#include "lesac/semantics.hpp"

#include <algorithm>
#include <map>

#include "lesac/error.hpp"

namespace lesac {

namespace {

// Label domains as bitmasks.
constexpr unsigned char kIn = 1, kOut = 2, kUndec = 4, kAny = 7;

bool single(unsigned char d) { return d == kIn || d == kOut || d == kUndec; }

/// Least fixpoint of the characteristic function, as (in, out) flags.
/// Counts the defeaters of each argument not yet out; zero means in.
std::pair<std::vector<char>, std::vector<char>> grounded_labelling(const DefeatGraph& g,
                                                                   const std::vector<std::vector<int>>& targets) {
  std::vector<char> in(g.n, 0), out(g.n, 0);
  std::vector<std::size_t> live(g.n);
  std::vector<int> ready;
  for (std::size_t b = 0; b < g.n; ++b) {
    live[b] = g.defeaters[b].size();
    if (live[b] == 0) ready.push_back(static_cast<int>(b));
  }
  while (!ready.empty()) {
    const auto b = static_cast<std::size_t>(ready.back());
    ready.pop_back();
    in[b] = 1;
    for (int c : targets[b]) {
      const auto cc = static_cast<std::size_t>(c);
      if (out[cc]) continue;
      out[cc] = 1;
      for (int d : targets[cc])
        if (--live[static_cast<std::size_t>(d)] == 0) ready.push_back(d);
    }
  }
  return {in, out};
}

/// Labelling search. Each argument carries the set of labels still open for
/// it; the complete-labelling condition (in iff every defeater out, out iff
/// some defeater in, undec otherwise) is propagated both ways to a fixpoint
/// before branching on an open argument.
class LabelSearch {
 public:
  explicit LabelSearch(const DefeatGraph& g) : g_(g), targets_(g.n) {
    for (const auto& [a, b] : g.defeats) targets_[static_cast<std::size_t>(a)].push_back(b);
  }

  // Every complete labelling extends the grounded one, so start from it.
  std::vector<std::vector<int>> run() {
    std::vector<unsigned char> dom(g_.n, kAny);
    const auto [in, out] = grounded_labelling(g_, targets_);
    std::vector<int> open;
    for (std::size_t i = 0; i < g_.n; ++i) {
      if (in[i])
        dom[i] = kIn;
      else if (out[i])
        dom[i] = kOut;
      else
        open.push_back(static_cast<int>(i));
    }
    search(dom, open);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  using Domains = std::vector<unsigned char>;

  void enqueue(int x, std::vector<int>& queue) {
    if (queued_[static_cast<std::size_t>(x)]) return;
    queued_[static_cast<std::size_t>(x)] = 1;
    queue.push_back(x);
  }

  // Restricts dom[x] to `keep`; queues every constraint x takes part in.
  bool restrict(Domains& dom, int x, unsigned char keep, std::vector<int>& queue) {
    auto& d = dom[static_cast<std::size_t>(x)];
    const unsigned char nd = d & keep;
    if (nd == d) return true;
    if (nd == 0) return false;
    d = nd;
    enqueue(x, queue);
    for (int c : targets_[static_cast<std::size_t>(x)]) enqueue(c, queue);
    return true;
  }

  bool propagate(Domains& dom, std::vector<int> seed) {
    std::vector<int> queue;
    queued_.assign(g_.n, 0);
    for (int x : seed) enqueue(x, queue);
    while (!queue.empty()) {
      const int b = queue.back();
      queue.pop_back();
      queued_[static_cast<std::size_t>(b)] = 0;
      const auto& ds = g_.defeaters[static_cast<std::size_t>(b)];
      bool all_can_out = true, some_can_in = false, all_can_not_in = true, some_can_undec = false;
      for (int a : ds) {
        const auto d = dom[static_cast<std::size_t>(a)];
        all_can_out = all_can_out && (d & kOut);
        some_can_in = some_can_in || (d & kIn);
        all_can_not_in = all_can_not_in && (d & (kOut | kUndec));
        some_can_undec = some_can_undec || (d & kUndec);
      }
      const unsigned char possible = (all_can_out ? kIn : 0) | (some_can_in ? kOut : 0) |
                                     (all_can_not_in && some_can_undec ? kUndec : 0);
      if (!restrict(dom, b, possible, queue)) return false;

      // Backwards onto the defeaters.
      const auto db = dom[static_cast<std::size_t>(b)];
      if (!(db & kOut))  // nobody may be in
        for (int a : ds)
          if (!restrict(dom, a, kOut | kUndec, queue)) return false;
      if (db == kIn)
        for (int a : ds)
          if (!restrict(dom, a, kOut, queue)) return false;
      // Exactly one defeater can still supply what b needs.
      auto only = [&](unsigned char need) {
        int who = -1;
        for (int a : ds) {
          if (!(dom[static_cast<std::size_t>(a)] & need)) continue;
          if (who >= 0) return -1;
          who = a;
        }
        return who;
      };
      if (!(db & kIn)) {  // some defeater is not out
        const int a = only(kIn | kUndec);
        if (a >= 0 && !restrict(dom, a, kIn | kUndec, queue)) return false;
      }
      if (db == kOut) {
        const int a = only(kIn);
        if (a >= 0 && !restrict(dom, a, kIn, queue)) return false;
      }
      if (db == kUndec) {
        const int a = only(kUndec);
        if (a >= 0 && !restrict(dom, a, kUndec, queue)) return false;
      }
    }
    return true;
  }

  void search(Domains dom, std::vector<int> queue) {
    if (!propagate(dom, std::move(queue))) return;
    // Branch on the open argument with the most defeaters and targets.
    int pick = -1;
    std::size_t best = 0;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (single(dom[i])) continue;
      const std::size_t deg = g_.defeaters[i].size() + targets_[i].size();
      if (pick < 0 || deg > best) {
        pick = static_cast<int>(i);
        best = deg;
      }
    }
    if (pick < 0) {
      std::vector<int> in;
      for (std::size_t i = 0; i < dom.size(); ++i)
        if (dom[i] == kIn) in.push_back(static_cast<int>(i));
      found_.push_back(std::move(in));
      return;
    }
    for (unsigned char l : {kIn, kOut, kUndec}) {
      if (!(dom[static_cast<std::size_t>(pick)] & l)) continue;
      Domains next = dom;
      next[static_cast<std::size_t>(pick)] = l;
      std::vector<int> queue{pick};
      for (int c : targets_[static_cast<std::size_t>(pick)]) queue.push_back(c);
      search(std::move(next), std::move(queue));
    }
  }

  const DefeatGraph& g_;
  std::vector<std::vector<int>> targets_;
  std::vector<std::vector<int>> found_;
  std::vector<char> queued_;
};

/// Arguments with the same defeaters get the same label in every complete
/// labelling (the label is a function of the defeaters' labels), so they can
/// be searched as one node. Merging is repeated on the quotient until stable.
/// Returns the class of every argument and the quotient graph.
std::pair<std::vector<int>, DefeatGraph> merge_twins(const DefeatGraph& g) {
  std::vector<int> cls(g.n);
  for (std::size_t i = 0; i < g.n; ++i) cls[i] = static_cast<int>(i);
  std::size_t count = g.n;
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      std::vector<int> key;
      key.reserve(g.defeaters[i].size());
      for (int d : g.defeaters[i]) key.push_back(cls[static_cast<std::size_t>(d)]);
      std::sort(key.begin(), key.end());
      key.erase(std::unique(key.begin(), key.end()), key.end());
      next[i] = ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
    const bool stable = ids.size() == count;
    cls = std::move(next);
    count = ids.size();
    if (stable) break;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.defeats.size());
  for (const auto& [a, b] : g.defeats)
    edges.push_back({cls[static_cast<std::size_t>(a)], cls[static_cast<std::size_t>(b)]});
  return {std::move(cls), make_graph(count, std::move(edges))};
}

}  // namespace

const char* to_string(SemanticsKind s) { return s == SemanticsKind::Grounded ? "grounded" : "complete"; }
const char* to_string(Stance s) { return s == Stance::Skeptical ? "skeptical" : "credulous"; }

bool Extension::contains(int a) const { return std::binary_search(members.begin(), members.end(), a); }

Extension grounded_extension(const DefeatGraph& g) {
  std::vector<std::vector<int>> targets(g.n);
  for (const auto& [a, b] : g.defeats) targets[static_cast<std::size_t>(a)].push_back(b);
  const auto in = grounded_labelling(g, targets).first;
  Extension e;
  e.semantics = SemanticsKind::Grounded;
  for (std::size_t i = 0; i < g.n; ++i)
    if (in[i]) e.members.push_back(static_cast<int>(i));
  return e;
}

std::vector<Extension> complete_extensions(const DefeatGraph& g) {
  const auto [cls, quotient] = merge_twins(g);
  std::vector<Extension> out;
  for (const auto& m : LabelSearch(quotient).run()) {
    std::vector<char> in(quotient.n, 0);
    for (int c : m) in[static_cast<std::size_t>(c)] = 1;
    Extension e;
    for (std::size_t i = 0; i < g.n; ++i)
      if (in[static_cast<std::size_t>(cls[i])]) e.members.push_back(static_cast<int>(i));
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) { return a.members < b.members; });
  return out;
}

void attach_conclusions(Extension& e, const ArgumentSet& set) {
  e.conclusions.clear();
  for (int a : e.members) e.conclusions.push_back(set[a].conclusion);
  std::sort(e.conclusions.begin(), e.conclusions.end());
  e.conclusions.erase(std::unique(e.conclusions.begin(), e.conclusions.end()), e.conclusions.end());
}

std::vector<Formula> justified_conclusions(const std::vector<Extension>& exts, Stance stance) {
  if (exts.empty()) throw Error(ErrorCode::EmptyInput, "no extensions to draw conclusions from");
  std::vector<Formula> acc = exts.front().conclusions;
  for (std::size_t i = 1; i < exts.size(); ++i) {
    std::vector<Formula> next;
    const auto& c = exts[i].conclusions;
    if (stance == Stance::Skeptical)
      std::set_intersection(acc.begin(), acc.end(), c.begin(), c.end(), std::back_inserter(next));
    else
      std::set_union(acc.begin(), acc.end(), c.begin(), c.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

bool is_complete(const DefeatGraph& g, const std::vector<int>& members) {
  std::vector<char> in(g.n, 0);
  for (int m : members) in[static_cast<std::size_t>(m)] = 1;
  // attacked by the set
  std::vector<char> hit(g.n, 0);
  for (const auto& [a, b] : g.defeats)
    if (in[static_cast<std::size_t>(a)]) hit[static_cast<std::size_t>(b)] = 1;
  for (std::size_t b = 0; b < g.n; ++b) {
    if (in[b] && hit[b]) return false;  // conflict
    const auto& ds = g.defeaters[b];
    const bool defended = std::all_of(ds.begin(), ds.end(), [&](int a) { return hit[static_cast<std::size_t>(a)]; });
    if (in[b] != defended) return false;  // admissible and closed
  }
  return true;
}

}  // namespace lesac
