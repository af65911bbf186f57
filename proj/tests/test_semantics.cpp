#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace lesac;
using testing::has;

namespace {

std::vector<std::vector<int>> members(const std::vector<Extension>& exts) {
  std::vector<std::vector<int>> out;
  for (const auto& e : exts) out.push_back(e.members);
  return out;
}

}  // namespace

TEST_CASE("no defeats: one complete extension with everything") {
  const auto g = make_graph(4, {});
  const auto exts = complete_extensions(g);
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].members == std::vector<int>{0, 1, 2, 3});
  CHECK(grounded_extension(g).members == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("symmetric pair plus a bystander") {
  const auto g = make_graph(3, {{0, 1}, {1, 0}});
  CHECK(members(complete_extensions(g)) == std::vector<std::vector<int>>{{0, 2}, {1, 2}, {2}});
  CHECK(grounded_extension(g).members == std::vector<int>{2});
}

TEST_CASE("odd cycle and chains") {
  CHECK(members(complete_extensions(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}))) == std::vector<std::vector<int>>{{}});
  const auto chain = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(grounded_extension(chain).members == std::vector<int>{0, 2});
  CHECK(complete_extensions(chain).size() == 1);
  // self-attacker is never in
  CHECK(grounded_extension(make_graph(2, {{0, 0}, {0, 1}})).members.empty());
}

TEST_CASE("empty graph") {
  const auto g = make_graph(0, {});
  const auto exts = complete_extensions(g);
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].members.empty());
}

TEST_CASE("is_complete") {
  const auto g = make_graph(3, {{0, 1}, {1, 0}});
  CHECK(is_complete(g, {0, 2}));
  CHECK(is_complete(g, {2}));
  CHECK_FALSE(is_complete(g, {0}));     // misses the unattacked 2
  CHECK_FALSE(is_complete(g, {0, 1, 2}));  // not conflict-free
}

TEST_CASE("justified conclusions") {
  Extension a, b;
  a.conclusions = {testing::F("p"), testing::F("q")};
  b.conclusions = {testing::F("q"), testing::F("r")};
  CHECK(justified_conclusions({a, b}, Stance::Skeptical) == std::vector<Formula>{testing::F("q")});
  CHECK(justified_conclusions({a, b}, Stance::Credulous).size() == 3);
  CHECK(justified_conclusions({Extension{}}, Stance::Skeptical).empty());
  CHECK_THROWS_AS(justified_conclusions({}, Stance::Skeptical), Error);
}

TEST_CASE("car example conclusions") {
  const auto an = testing::analyze_fixture("ex3.lsc");
  const auto concl = an.conclusions(SemanticsKind::Grounded, Stance::Skeptical);
  CHECK(has(concl, "O(Sober(Roger))"));
  CHECK(has(concl, "O(Protect(Roger))"));
  CHECK(has(concl, "~O(Protect(Pongo))"));
  CHECK_FALSE(has(concl, "P(~Sober(Roger))"));
  CHECK_FALSE(has(concl, "O(Protect(Pongo))"));
  CHECK_FALSE(has(concl, "O(~Protect(Pongo))"));
  // every complete extension keeps the sober obligation
  for (const auto& e : an.extensions(SemanticsKind::Complete)) CHECK(has(e.conclusions, "O(Sober(Roger))"));
}

TEST_CASE("swerve example conclusions") {
  const auto an = testing::analyze_fixture("ex5.lsc");
  for (SemanticsKind s : {SemanticsKind::Grounded, SemanticsKind::Complete}) {
    const auto concl = an.conclusions(s, Stance::Skeptical);
    CHECK(has(concl, "O(~HardBrake(AV))"));
    CHECK(has(concl, "O(HitTree(AV) & ~Damage(Lamp))"));
    CHECK_FALSE(has(concl, "O(HardBrake(AV))"));
    CHECK_FALSE(has(concl, "O(HitLamp(AV) & ~Damage(AV))"));
  }
}

TEST_CASE("property: labelling search matches brute force") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_graph(rng, 9);
    const auto got = members(complete_extensions(g));
    CHECK(got == testing::brute_force_complete(g));
    for (const auto& m : got) CHECK(is_complete(g, m));
    // grounded is the least complete extension
    const auto gr = grounded_extension(g).members;
    CHECK(std::find(got.begin(), got.end(), gr) != got.end());
    for (const auto& m : got) CHECK(std::includes(m.begin(), m.end(), gr.begin(), gr.end()));
  }
}

TEST_CASE("property: grounded skeptical is within credulous complete") {
  const auto corpus = testing::well_defined_corpus(40, 707);
  for (const auto& src : corpus.sources) {
    const auto an = testing::analyze_source(src);
    const auto small = an.conclusions(SemanticsKind::Grounded, Stance::Skeptical);
    const auto big = an.conclusions(SemanticsKind::Complete, Stance::Credulous);
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}
