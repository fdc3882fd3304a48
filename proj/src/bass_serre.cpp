#include "ratioopt/bass_serre.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ratioopt {

namespace {

Word strip_last(const Word& w) {
  const auto& s = w.syllables();
  return Word::from_syllables(std::span(s).first(s.size() - 1));
}

// Parent of x in the tree rooted at v_a; x must not be v_a.
TreeVertex parent(const TreeVertex& x) {
  if (x.coset_word().is_identity()) {
    return TreeVertex::base(VertexType::A);  // x == v_b
  }
  // w v_A with w = w' b^k is adjacent to w' b^k v_B = w' v_B; symmetrically for B.
  const VertexType flipped = x.type() == VertexType::A ? VertexType::B : VertexType::A;
  return {strip_last(x.coset_word()), flipped};
}

std::vector<TreeVertex> root_path(TreeVertex x) {
  const TreeVertex root = TreeVertex::base(VertexType::A);
  std::vector<TreeVertex> path{x};
  while (!(x == root)) {
    x = parent(x);
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::int64_t rooted_distance(const TreeVertex& x, const TreeVertex& y) {
  const auto px = root_path(x);
  const auto py = root_path(y);
  std::size_t common = 0;
  while (common < px.size() && common < py.size() && px[common] == py[common]) {
    ++common;
  }
  return static_cast<std::int64_t>(px.size() + py.size() - 2 * common);
}

}  // namespace

TreeVertex::TreeVertex(Word coset_word, VertexType type) : word_(std::move(coset_word)), type_(type) {
  const auto& s = word_.syllables();
  if (!s.empty() && s.back().gen == stabilizer_generator(type_)) {
    word_ = strip_last(word_);
  }
}

TreeVertex TreeVertex::translate(const Word& g) const { return {concat(g, word_), type_}; }

std::string TreeVertex::to_string() const {
  return "(" + word_.to_string() + ", " + (type_ == VertexType::A ? "A" : "B") + ")";
}

std::int64_t tree_distance(const TreeVertex& x, const TreeVertex& y) {
  // Translate x to its base vertex: y becomes w . v_{type(y)} with w = x^-1 y.
  const Word w = concat(invert(x.coset_word()), y.coset_word());
  auto s = w.syllables();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  if (hi > lo && s[lo].gen == stabilizer_generator(x.type())) {
    ++lo;
  }
  if (hi > lo && s[hi - 1].gen == stabilizer_generator(y.type())) {
    --hi;
  }
  const auto inner = static_cast<std::int64_t>(hi - lo);
  if (x.type() == y.type()) {
    return inner == 0 ? 0 : inner + 1;
  }
  return inner + 1;
}

bool is_elliptic(const Word& w) { return cyclic_reduce(w).cyclic.is_generator_power(); }

std::int64_t translation_length_tree(const Word& w) {
  const auto cr = cyclic_reduce(w);
  if (cr.cyclic.is_generator_power()) {
    return 0;
  }
  return static_cast<std::int64_t>(cr.cyclic.syllable_length());
}

BruteForceTranslation brute_force_translation(const Word& w, int radius) {
  if (radius < 0) {
    throw std::invalid_argument("brute_force_translation: negative radius");
  }
  BruteForceTranslation result;
  result.conclusive = radius >= static_cast<int>(w.syllable_length()) + 2;
  const std::int64_t max_label = w.max_abs_exponent() + 1;

  struct Entry {
    TreeVertex vertex;
    int depth;
    std::int64_t displacement;
  };
  const TreeVertex root = TreeVertex::base(VertexType::A);
  auto displacement = [&](const TreeVertex& v) { return rooted_distance(v, v.translate(w)); };

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::deque<Entry> queue;
  queue.push_back({root, 0, displacement(root)});
  while (!queue.empty()) {
    Entry e = std::move(queue.front());
    queue.pop_front();
    ++result.vertices_examined;
    best = std::min(best, e.displacement);
    if (e.depth == radius) {
      continue;
    }
    const bool at_root = e.vertex == root;
    const TreeVertex up = at_root ? root : parent(e.vertex);
    const VertexType child_type = e.vertex.type() == VertexType::A ? VertexType::B : VertexType::A;
    for (std::int64_t k = -max_label; k <= max_label; ++k) {
      Word cw = e.vertex.coset_word();
      cw.push_back({stabilizer_generator(e.vertex.type()), k});
      TreeVertex child(std::move(cw), child_type);
      if (!at_root && child == up) {
        continue;
      }
      const std::int64_t d = displacement(child);
      if (d > e.displacement) {
        ++result.vertices_examined;  // moving away from the min set; whole branch dominated
        continue;
      }
      queue.push_back({std::move(child), e.depth + 1, d});
    }
  }
  result.value = best;
  return result;
}

DistanceInterval curve_distance_interval(const TreeVertex& x, const TreeVertex& y) {
  const std::int64_t d = tree_distance(x, y);
  return {static_cast<double>(std::max<std::int64_t>(0, d - kQuasiIsometryAdditive)),
          static_cast<double>(kQuasiIsometryMultiplicative * d)};
}

DistanceInterval curve_translation_interval(const Word& w) {
  const auto l = static_cast<double>(translation_length_tree(w));
  return {l, static_cast<double>(kQuasiIsometryMultiplicative) * l};
}

}  // namespace ratioopt
