#pragma once

// Brute-force oracles. Everything here works on plain letter strings over
// {a, A, b, B} or explicit finite graphs and shares no code path with the
// syllable-based implementations it is used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ratioopt/freegroup.hpp"
#include "ratioopt/thurston.hpp"

namespace ratioopt::oracle {

// Stack-based free reduction of a letter string.
std::string naive_reduce(std::string_view letters);
std::string inverse_letters(std::string_view letters);
std::string naive_power(std::string_view letters, int k);

// All freely reduced letter strings of length <= max_len, shortlex order.
std::vector<std::string> reduced_words(std::size_t max_len);

// Product of explicit generator matrices, one letter at a time.
IntMatrix2 naive_evaluate(std::string_view letters, long n);

/// Conjugacy by exhaustive search over a fixed word set: u ~ v when
/// c u c^-1 == d v d^-1 for some c, d of length <= conjugator_len. For words
/// of length <= 6 a bound of 4 on each side is complete.
class ConjugacyTable {
 public:
  ConjugacyTable(std::vector<std::string> words, std::size_t conjugator_len);

  [[nodiscard]] const std::vector<std::string>& words() const { return words_; }
  [[nodiscard]] std::optional<std::size_t> index(const std::string& w) const;
  [[nodiscard]] bool conjugate(std::size_t i, std::size_t j) const {
    return related_[i * words_.size() + j] != 0;
  }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<char> related_;
};

struct BruteRoot {
  std::string root;
  int k = 1;
};

// Shortest x (shortlex) with x^k == u, searching `candidates` in order.
BruteRoot brute_root(const std::string& u, const std::vector<std::string>& candidates);

struct BallVertex {
  std::string coset;  // canonical: no trailing letters of the stabilizing generator
  char type = 'A';
  int depth = 0;
};

/// Explicit ball of radius `radius` about v_a in the Bass-Serre tree, using
/// edge labels |k| <= max_label.
class TreeBall {
 public:
  TreeBall(int radius, int max_label);

  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  [[nodiscard]] const BallVertex& vertex(std::size_t i) const { return vertices_[i]; }
  [[nodiscard]] std::vector<int> distances_from(std::size_t source) const;

 private:
  std::vector<BallVertex> vertices_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Random freely reduced word with the given number of syllables and
// exponents in [-max_exponent, max_exponent] \ {0}.
Word random_word(std::mt19937_64& rng, std::size_t syllables, std::int64_t max_exponent);

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  [[nodiscard]] bool ok() const { return passed == total; }
  // `describe` is only called for failures.
  template <class Describe>
  void record(bool pass, Describe&& describe) {
    ++total;
    if (pass) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = describe();
    }
  }
};

// tree_distance vs BFS on every vertex pair of the ball.
SuiteResult run_tree_distance_suite(int radius, int max_label);
// translation_length_tree vs brute_force_translation on random words.
SuiteResult run_translation_suite(std::size_t count, std::size_t max_syllables,
                                  std::int64_t max_exponent, std::uint64_t seed);
// is_conjugate vs brute-force conjugacy on all pairs of reduced words.
SuiteResult run_conjugacy_suite(std::size_t max_len);
// same_maximal_cyclic vs brute-force roots plus conjugacy on all pairs.
SuiteResult run_maximal_cyclic_suite(std::size_t max_len);
// |trace| <= (2n)^|w| on every alternating +-1 pair word with <= max_pairs pairs.
SuiteResult run_trace_bound_suite(int max_pairs, const std::vector<long>& ns);

}  // namespace ratioopt::oracle
