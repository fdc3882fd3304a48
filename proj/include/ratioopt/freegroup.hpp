#pragma once

// Word combinatorics in the free group F(a, b).
//
// Words are kept in syllable normal form: a sequence of maximal blocks a^k or
// b^k with nonzero exponents and alternating generators. The empty sequence is
// the identity.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ratioopt {

enum class Generator : std::uint8_t { a = 0, b = 1 };

constexpr Generator other(Generator g) {
  return g == Generator::a ? Generator::b : Generator::a;
}

struct Letter {
  Generator gen = Generator::a;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Syllable {
  Generator gen = Generator::a;
  std::int64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// a < a^-1 < b < b^-1; ties broken by |exponent|.
std::strong_ordering compare_syllables(const Syllable& x, const Syllable& y);

class Word {
 public:
  Word() = default;

  static Word generator(Generator g, std::int64_t exponent = 1);
  // Freely reduces the given syllables (zero exponents are dropped).
  static Word from_syllables(std::span<const Syllable> syllables);

  // Accepts letters {a, A, b, B} (capital = inverse) with optional caret
  // exponents, e.g. "abAB", "a^3 b^-2", "A^2b". "1" and "" denote the identity.
  // Throws std::invalid_argument on malformed input.
  static Word parse(std::string_view text);

  [[nodiscard]] const std::vector<Syllable>& syllables() const { return syllables_; }
  [[nodiscard]] bool is_identity() const { return syllables_.empty(); }
  [[nodiscard]] std::uint64_t letter_length() const;
  [[nodiscard]] std::size_t syllable_length() const { return syllables_.size(); }
  [[nodiscard]] bool all_unit_exponents() const;
  [[nodiscard]] std::int64_t max_abs_exponent() const;

  // Expanded letter form over {a, A, b, B}; identity prints as "1".
  [[nodiscard]] std::string to_string() const;
  // Compact caret form, e.g. "a^3 b^-2"; identity prints as "1".
  [[nodiscard]] std::string to_exponent_string() const;

  // Appends one syllable, cancelling and merging at the junction.
  void push_back(const Syllable& s);

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex on syllable sequences using compare_syllables.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  std::vector<Syllable> syllables_;
};

Word reduce(std::span<const Letter> raw);
Word concat(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, std::int64_t n);
Word commutator(const Word& u, const Word& v);

inline std::uint64_t letter_length(const Word& w) { return w.letter_length(); }
inline std::size_t syllable_length(const Word& w) { return w.syllable_length(); }

// Number of leading letters shared by u and v.
std::uint64_t common_prefix_length(const Word& u, const Word& v);

struct CyclicReduction;

/// Conjugacy-class representative: cyclically reduced, rotated to the
/// lexicographically least syllable sequence.
class CyclicWord {
 public:
  [[nodiscard]] const Word& representative() const { return rep_; }
  [[nodiscard]] std::size_t syllable_length() const { return rep_.syllable_length(); }
  // Single generator power (or identity): fixes a vertex of the tree.
  [[nodiscard]] bool is_generator_power() const { return rep_.syllable_length() <= 1; }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  friend CyclicReduction cyclic_reduce(const Word& w);
  explicit CyclicWord(Word rep) : rep_(std::move(rep)) {}
  Word rep_;
};

struct CyclicReduction {
  CyclicWord cyclic;
  // w == conjugator * representative * conjugator^-1
  Word conjugator;
};

CyclicReduction cyclic_reduce(const Word& w);

// First and last syllables use different generators (or at most one syllable).
inline bool is_cyclically_reduced(const Word& w) {
  const auto& s = w.syllables();
  return s.size() <= 1 || s.front().gen != s.back().gen;
}

bool is_conjugate(const Word& u, const Word& v);

struct PrimitiveRoot {
  Word root;
  std::uint64_t k = 1;
};

// w == root^k with k maximal. Throws std::invalid_argument for the identity.
PrimitiveRoot primitive_root(const Word& w);

inline bool is_primitive(const Word& w) { return primitive_root(w).k == 1; }

// Maximal cyclic subgroups containing u and v are conjugate.
// Throws std::invalid_argument if either argument is the identity.
bool same_maximal_cyclic(const Word& u, const Word& v);

/// Stream of cyclically reduced, primitive words with all exponents +-1 and
/// pairwise distinct maximal cyclic subgroups up to conjugacy.
///
/// Default order is by syllable length, then sign pattern (+ before -), keeping
/// only canonical rotations. In prefix-stable mode each word extends the
/// previous one by two syllables, so consecutive words share ever longer
/// prefixes.
class OptimizerWordStream {
 public:
  explicit OptimizerWordStream(bool prefix_stable = false) : prefix_stable_(prefix_stable) {}

  Word next();

 private:
  bool accept(const Word& w);
  Word next_length_lex();
  Word next_prefix_stable();

  bool prefix_stable_;
  std::size_t length_ = 2;
  std::uint64_t mask_ = 0;
  std::optional<Word> previous_;
  std::set<Word> seen_;  // canonical representatives of emitted words
};

std::vector<Word> enumerate_optimizer_words(std::size_t count, bool prefix_stable);

}  // namespace ratioopt
