#include <doctest.h>

#include <random>

#include "ratioopt/bass_serre.hpp"
#include "ratioopt/oracles.hpp"

using namespace ratioopt;
namespace oracle = ratioopt::oracle;

namespace {
TreeVertex va() { return TreeVertex(Word(), VertexType::A); }
TreeVertex vb() { return TreeVertex(Word(), VertexType::B); }
}  // namespace

TEST_CASE("vertices are cosets") {
  CHECK(TreeVertex(Word::parse("b a^3"), VertexType::A) == TreeVertex(Word::parse("b"), VertexType::A));
  CHECK(TreeVertex(Word::parse("a^2"), VertexType::A) == va());
  CHECK(TreeVertex(Word::parse("a b^5"), VertexType::B).to_string() == "(a, B)");
  CHECK_FALSE(va() == vb());
}

TEST_CASE("distances near the base edge") {
  CHECK(tree_distance(va(), va()) == 0);
  CHECK(tree_distance(va(), vb()) == 1);
  CHECK(tree_distance(va(), TreeVertex(Word::parse("b"), VertexType::A)) == 2);
  CHECK(tree_distance(vb(), TreeVertex(Word::parse("a"), VertexType::B)) == 2);
  CHECK(tree_distance(va(), TreeVertex(Word::parse("a b"), VertexType::A)) == 2);
  CHECK(tree_distance(vb(), TreeVertex(Word::parse("b a b"), VertexType::A)) == 3);
}

TEST_CASE("translation is an isometry") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Word g = oracle::random_word(rng, 1 + trial % 5, 3);
    const TreeVertex x(oracle::random_word(rng, trial % 4, 2), trial % 2 ? VertexType::A : VertexType::B);
    const TreeVertex y(oracle::random_word(rng, trial % 5, 2), trial % 3 ? VertexType::A : VertexType::B);
    CHECK(tree_distance(x.translate(g), y.translate(g)) == tree_distance(x, y));
    CHECK(tree_distance(x, y) == tree_distance(y, x));
  }
}

TEST_CASE("ellipticity and translation length") {
  CHECK(is_elliptic(Word::parse("a^5")));
  CHECK(is_elliptic(Word::parse("b a^2 B")));
  CHECK_FALSE(is_elliptic(Word::parse("ab")));
  CHECK(translation_length_tree(Word::parse("a^3")) == 0);
  CHECK(translation_length_tree(Word::parse("ab")) == 2);
  CHECK(translation_length_tree(Word::parse("b ab aB B")) == 4);
  CHECK(translation_length_tree(Word::parse("a^2 b^-1 a b^3")) == 4);
}

TEST_CASE("brute-force translation on a few words") {
  for (const char* s : {"ab", "aB", "a^2 b a b^-2", "b a b^-1 a^-1 b^2"}) {
    const Word w = Word::parse(s);
    const auto brute = brute_force_translation(w, static_cast<int>(w.syllable_length()) + 2);
    CHECK(brute.conclusive);
    CHECK(brute.value == translation_length_tree(w));
  }
  CHECK_FALSE(brute_force_translation(Word::parse("abab"), 2).conclusive);
}

TEST_CASE("ball oracle suites") {
  CHECK(oracle::run_tree_distance_suite(3, 2).ok());
  CHECK(oracle::run_translation_suite(50, 5, 3, 99).ok());
}

TEST_CASE("curve graph intervals") {
  // (bab, B) is the coset (ba, B), three edges from v_a
  const TreeVertex x(Word::parse("b a b"), VertexType::B);
  CHECK(tree_distance(va(), x) == 3);
  const auto d = curve_distance_interval(va(), x);
  CHECK(d.lower == 0);
  CHECK(d.upper == 9);
  const auto far = curve_distance_interval(va(), TreeVertex(Word::parse("babababab"), VertexType::A));
  CHECK(far.lower == tree_distance(va(), TreeVertex(Word::parse("babababab"), VertexType::A)) - 7.0);
  const auto t = curve_translation_interval(Word::parse("abAB"));
  CHECK(t.lower == 4);
  CHECK(t.upper == 12);
  const auto e = curve_translation_interval(Word::parse("b^2"));
  CHECK(e.lower == 0);
  CHECK(e.upper == 0);
}
