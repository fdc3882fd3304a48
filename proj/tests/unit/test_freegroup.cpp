#include <doctest.h>

#include <random>
#include <set>

#include "ratioopt/freegroup.hpp"
#include "ratioopt/oracles.hpp"

using namespace ratioopt;
namespace oracle = ratioopt::oracle;

TEST_CASE("parse accepts letters, exponents and identity") {
  CHECK(Word::parse("abAB").to_string() == "abAB");
  CHECK(Word::parse("a^3 b^-2").to_string() == "aaaBB");
  CHECK(Word::parse("a^3 b^-2").syllable_length() == 2);
  CHECK(Word::parse("a^3 b^-2").letter_length() == 5);
  CHECK(Word::parse("1").is_identity());
  CHECK(Word::parse("").is_identity());
  CHECK(Word::parse("aA").is_identity());
  CHECK(Word::parse("1").to_string() == "1");
  CHECK_THROWS_AS(Word::parse("abc"), std::invalid_argument);
}

TEST_CASE("reduction matches the stack oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> len(0, 30);
  const char letters[] = {'a', 'A', 'b', 'B'};
  for (int trial = 0; trial < 2000; ++trial) {
    std::string raw;
    for (int i = len(rng); i > 0; --i) {
      raw += letters[pick(rng)];
    }
    const std::string expected = oracle::naive_reduce(raw);
    const Word w = Word::parse(raw);
    CHECK(w.to_string() == (expected.empty() ? "1" : expected));
    CHECK(w.letter_length() == expected.size());
  }
}

TEST_CASE("group operations") {
  const Word u = Word::parse("a^2 b a^-1");
  const Word v = Word::parse("b^-3 a");
  CHECK(concat(u, invert(u)).is_identity());
  CHECK(concat(invert(v), v).is_identity());
  CHECK(invert(concat(u, v)) == concat(invert(v), invert(u)));
  CHECK(power(u, 3) == concat(u, concat(u, u)));
  CHECK(power(u, -2) == power(invert(u), 2));
  CHECK(power(u, 0).is_identity());
  CHECK(commutator(u, v) == concat(concat(u, v), concat(invert(u), invert(v))));
  CHECK(commutator(Word::parse("a"), Word::parse("b")).to_string() == "abAB");
}

TEST_CASE("common prefix counts letters") {
  CHECK(common_prefix_length(Word::parse("a^3 b"), Word::parse("a^2 B")) == 2);
  CHECK(common_prefix_length(Word::parse("ab"), Word::parse("abab")) == 2);
  CHECK(common_prefix_length(Word::parse("a"), Word::parse("A")) == 0);
}

TEST_CASE("cyclic reduction recovers the word by conjugation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Word core = oracle::random_word(rng, 1 + trial % 6, 3);
    const Word c = oracle::random_word(rng, trial % 4, 3);
    const Word w = concat(concat(c, core), invert(c));
    const auto cr = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(cr.cyclic.representative()));
    CHECK(concat(concat(cr.conjugator, cr.cyclic.representative()), invert(cr.conjugator)) == w);
    CHECK(is_conjugate(w, core));
  }
}

TEST_CASE("cyclic canonical form is rotation invariant") {
  const Word w = Word::parse("a b^2 A b");
  CHECK(is_conjugate(w, Word::parse("b^2 A b a")));
  CHECK(is_conjugate(w, Word::parse("A b a b^2")));
  CHECK_FALSE(is_conjugate(w, invert(w)));
  CHECK_FALSE(is_conjugate(Word::parse("ab"), Word::parse("aB")));
  CHECK(cyclic_reduce(Word::parse("b a^4 B")).cyclic.is_generator_power());
}

TEST_CASE("primitive roots") {
  const auto r = primitive_root(Word::parse("abababab"));
  CHECK(r.k == 4);
  CHECK(r.root.to_string() == "ab");
  CHECK(primitive_root(Word::parse("a^6")).k == 6);
  CHECK(primitive_root(Word::parse("aab")).k == 1);
  CHECK(is_primitive(Word::parse("abaB")));
  CHECK_FALSE(is_primitive(Word::parse("abAB abAB")));
  CHECK_THROWS(primitive_root(Word()));
}

TEST_CASE("maximal cyclic subgroups") {
  CHECK(same_maximal_cyclic(Word::parse("ab"), Word::parse("BA")));
  CHECK(same_maximal_cyclic(Word::parse("abab"), Word::parse("ba")));
  CHECK(same_maximal_cyclic(Word::parse("a^2"), Word::parse("b a^-3 B")));
  CHECK_FALSE(same_maximal_cyclic(Word::parse("ab"), Word::parse("aB")));
  CHECK_THROWS(same_maximal_cyclic(Word(), Word::parse("a")));
}

TEST_CASE("small oracle suites") {
  CHECK(oracle::run_conjugacy_suite(3).ok());
  CHECK(oracle::run_maximal_cyclic_suite(3).ok());
}

TEST_CASE("optimizer word stream") {
  const auto words = enumerate_optimizer_words(20, false);
  REQUIRE(words.size() == 20);
  CHECK(words[0].to_string() == "ab");
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(words[i].all_unit_exponents());
    CHECK(is_cyclically_reduced(words[i]));
    CHECK(is_primitive(words[i]));
    for (std::size_t j = 0; j < i; ++j) {
      CHECK_FALSE(same_maximal_cyclic(words[i], words[j]));
    }
  }
  const auto chain = enumerate_optimizer_words(12, true);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    CHECK(common_prefix_length(chain[i - 1], chain[i]) == chain[i - 1].letter_length());
  }
}
