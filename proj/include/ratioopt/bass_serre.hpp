#pragma once

// The Bass-Serre tree of the splitting <a> * <b>.
//
// Vertices are cosets w<a> (type A, orbit of v_a) and w<b> (type B, orbit of
// v_b); v_a and v_b span the fundamental edge. Distances come from syllable
// normal forms, and curve-graph quantities are bracketed through the (3, 7)
// quasi-isometric orbit map.

#include <cstdint>
#include <string>

#include "ratioopt/freegroup.hpp"
#include "ratioopt/interval.hpp"

namespace ratioopt {

enum class VertexType : std::uint8_t { A, B };

constexpr Generator stabilizer_generator(VertexType t) {
  return t == VertexType::A ? Generator::a : Generator::b;
}

class TreeVertex {
 public:
  TreeVertex() = default;
  // Canonicalizes: a trailing syllable in the stabilizing generator is dropped.
  TreeVertex(Word coset_word, VertexType type);

  static TreeVertex base(VertexType type) { return {Word{}, type}; }

  [[nodiscard]] const Word& coset_word() const { return word_; }
  [[nodiscard]] VertexType type() const { return type_; }

  // g . x
  [[nodiscard]] TreeVertex translate(const Word& g) const;

  // "(ab, A)"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;

 private:
  Word word_;
  VertexType type_ = VertexType::A;
};

std::int64_t tree_distance(const TreeVertex& x, const TreeVertex& y);

// Conjugate of a generator power (or the identity): fixes a vertex.
bool is_elliptic(const Word& w);

// 0 for elliptic words, otherwise the cyclic syllable length.
std::int64_t translation_length_tree(const Word& w);

struct BruteForceTranslation {
  std::int64_t value = 0;
  // false when radius < |w|_s + 2; value is then only an upper bound on the ball
  bool conclusive = false;
  std::size_t vertices_examined = 0;
};

/// Minimum displacement d(v, w.v) over vertices within `radius` of v_a.
///
/// The ball is explored from v_a with edge labels |k| <= max|exponent of w| + 1.
/// Distances are taken in the rooted tree (depth and lowest common ancestor
/// along parent links), not through tree_distance. Displacement is convex on a
/// tree, so a branch is abandoned once a step away from v_a increases it.
BruteForceTranslation brute_force_translation(const Word& w, int radius);

// [max(0, d_T - 7), 3 d_T]
DistanceInterval curve_distance_interval(const TreeVertex& x, const TreeVertex& y);

// [l, 3l] with l the cyclic syllable length; [0, 0] for elliptic words.
DistanceInterval curve_translation_interval(const Word& w);

inline constexpr std::int64_t kQuasiIsometryMultiplicative = 3;
inline constexpr std::int64_t kQuasiIsometryAdditive = 7;

}  // namespace ratioopt
