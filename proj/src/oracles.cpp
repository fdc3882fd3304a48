#include "ratioopt/oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "ratioopt/bass_serre.hpp"

namespace ratioopt::oracle {

namespace {

char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  throw std::invalid_argument(std::string("oracle: bad letter ") + c);
}

bool is_a_letter(char c) { return c == 'a' || c == 'A'; }

std::string strip_stabilizer(std::string s, char type) {
  while (!s.empty() && is_a_letter(s.back()) == (type == 'A')) {
    s.pop_back();
  }
  return s;
}

std::string label_power(char type, int k) {
  const char c = type == 'A' ? (k > 0 ? 'a' : 'A') : (k > 0 ? 'b' : 'B');
  return std::string(static_cast<std::size_t>(k < 0 ? -k : k), c);
}

}  // namespace

std::string naive_reduce(std::string_view letters) {
  std::string stack;
  for (char c : letters) {
    if (!stack.empty() && stack.back() == inverse_letter(c)) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return stack;
}

std::string inverse_letters(std::string_view letters) {
  std::string out(letters.rbegin(), letters.rend());
  for (char& c : out) {
    c = inverse_letter(c);
  }
  return out;
}

std::string naive_power(std::string_view letters, int k) {
  if (k < 0) {
    return naive_power(inverse_letters(letters), -k);
  }
  std::string raw;
  for (int i = 0; i < k; ++i) {
    raw += letters;
  }
  return naive_reduce(raw);
}

std::vector<std::string> reduced_words(std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : {'a', 'A', 'b', 'B'}) {
        if (!out[i].empty() && out[i].back() == inverse_letter(c)) {
          continue;
        }
        out.push_back(out[i] + c);
      }
    }
    begin = end;
  }
  return out;
}

IntMatrix2 naive_evaluate(std::string_view letters, long n) {
  const mpz_class v(n);
  const IntMatrix2 a{1, v, 0, 1};
  const IntMatrix2 a_inv{1, -v, 0, 1};
  const IntMatrix2 b{1, 0, -v, 1};
  const IntMatrix2 b_inv{1, 0, v, 1};
  IntMatrix2 m;
  for (char c : letters) {
    switch (c) {
      case 'a': m = m * a; break;
      case 'A': m = m * a_inv; break;
      case 'b': m = m * b; break;
      case 'B': m = m * b_inv; break;
      default: throw std::invalid_argument("naive_evaluate: bad letter");
    }
  }
  return m;
}

ConjugacyTable::ConjugacyTable(std::vector<std::string> words, std::size_t conjugator_len)
    : words_(std::move(words)), related_(words_.size() * words_.size(), 0) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    index_.emplace(words_[i], i);
  }
  const auto conjugators = reduced_words(conjugator_len);
  std::unordered_map<std::string, std::vector<std::size_t>> holders;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (const auto& c : conjugators) {
      auto& list = holders[naive_reduce(c + words_[i] + inverse_letters(c))];
      if (list.empty() || list.back() != i) {
        list.push_back(i);
      }
    }
  }
  const std::size_t n = words_.size();
  for (const auto& [conjugate, list] : holders) {
    for (std::size_t x : list) {
      for (std::size_t y : list) {
        related_[x * n + y] = 1;
      }
    }
  }
}

std::optional<std::size_t> ConjugacyTable::index(const std::string& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

BruteRoot brute_root(const std::string& u, const std::vector<std::string>& candidates) {
  for (const auto& x : candidates) {
    if (x.empty()) {
      continue;
    }
    for (int k = 1;; ++k) {
      const std::string p = naive_power(x, k);
      if (p == u) {
        return {x, k};
      }
      if (p.size() > u.size()) {
        break;
      }
    }
  }
  throw std::logic_error("brute_root: no root among candidates for " + u);
}

TreeBall::TreeBall(int radius, int max_label) {
  std::unordered_map<std::string, std::size_t> ids;
  auto key = [](const std::string& coset, char type) { return std::string(1, type) + ":" + coset; };
  vertices_.push_back({"", 'A', 0});
  adjacency_.emplace_back();
  ids.emplace(key("", 'A'), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const BallVertex v = vertices_[id];
    const char child_type = v.type == 'A' ? 'B' : 'A';
    for (int k = -max_label; k <= max_label; ++k) {
      const std::string coset =
          strip_stabilizer(naive_reduce(v.coset + label_power(v.type, k)), child_type);
      const std::string kk = key(coset, child_type);
      auto it = ids.find(kk);
      std::size_t other = 0;
      if (it != ids.end()) {
        other = it->second;
      } else {
        if (v.depth == radius) {
          continue;
        }
        other = vertices_.size();
        vertices_.push_back({coset, child_type, v.depth + 1});
        adjacency_.emplace_back();
        ids.emplace(kk, other);
        queue.push_back(other);
      }
      auto& adj = adjacency_[id];
      if (std::find(adj.begin(), adj.end(), other) == adj.end()) {
        adj.push_back(other);
        adjacency_[other].push_back(id);
      }
    }
  }
}

std::vector<int> TreeBall::distances_from(std::size_t source) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adjacency_[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Word random_word(std::mt19937_64& rng, std::size_t syllables, std::int64_t max_exponent) {
  std::uniform_int_distribution<std::int64_t> magnitude(1, max_exponent);
  std::bernoulli_distribution coin(0.5);
  Generator g = coin(rng) ? Generator::a : Generator::b;
  std::vector<Syllable> s;
  for (std::size_t i = 0; i < syllables; ++i) {
    s.push_back({g, coin(rng) ? magnitude(rng) : -magnitude(rng)});
    g = other(g);
  }
  return Word::from_syllables(s);
}

SuiteResult run_tree_distance_suite(int radius, int max_label) {
  SuiteResult r{"tree_distance vs ball BFS", 0, 0, {}};
  const TreeBall ball(radius, max_label);
  std::vector<TreeVertex> vertices;
  vertices.reserve(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto& v = ball.vertex(i);
    vertices.emplace_back(Word::parse(v.coset), v.type == 'A' ? VertexType::A : VertexType::B);
  }
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto dist = ball.distances_from(i);
    for (std::size_t j = 0; j < ball.size(); ++j) {
      const auto d = tree_distance(vertices[i], vertices[j]);
      r.record(d == dist[j], [&] {
        return vertices[i].to_string() + " " + vertices[j].to_string() + ": " + std::to_string(d) +
               " vs BFS " + std::to_string(dist[j]);
      });
    }
  }
  return r;
}

SuiteResult run_translation_suite(std::size_t count, std::size_t max_syllables,
                                  std::int64_t max_exponent, std::uint64_t seed) {
  SuiteResult r{"translation_length_tree vs ball search", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, max_syllables);
  for (std::size_t i = 0; i < count; ++i) {
    const Word w = random_word(rng, length(rng), max_exponent);
    const int radius = static_cast<int>(w.syllable_length()) + 2;
    const auto brute = brute_force_translation(w, radius);
    const auto fast = translation_length_tree(w);
    r.record(brute.conclusive && brute.value == fast, [&] {
      return w.to_exponent_string() + ": " + std::to_string(fast) + " vs " + std::to_string(brute.value);
    });
  }
  return r;
}

SuiteResult run_conjugacy_suite(std::size_t max_len) {
  SuiteResult r{"is_conjugate vs brute force", 0, 0, {}};
  const ConjugacyTable table(reduced_words(max_len), 4);
  const auto& words = table.words();
  std::vector<Word> parsed;
  parsed.reserve(words.size());
  for (const auto& w : words) {
    parsed.push_back(Word::parse(w));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      r.record(is_conjugate(parsed[i], parsed[j]) == table.conjugate(i, j),
               [&] { return "(" + words[i] + ", " + words[j] + ")"; });
    }
  }
  return r;
}

SuiteResult run_maximal_cyclic_suite(std::size_t max_len) {
  SuiteResult r{"same_maximal_cyclic vs brute force", 0, 0, {}};
  const auto all = reduced_words(max_len);
  const ConjugacyTable table(all, 4);
  const std::size_t n = all.size();
  // Roots and their inverses are no longer than the word, so they index into the table.
  std::vector<std::size_t> root(n);
  std::vector<std::size_t> root_inv(n);
  std::vector<Word> parsed(n);
  for (std::size_t i = 1; i < n; ++i) {
    const auto br = brute_root(all[i], all);
    root[i] = *table.index(br.root);
    root_inv[i] = *table.index(inverse_letters(br.root));
    parsed[i] = Word::parse(all[i]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const bool brute = table.conjugate(root[i], root[j]) || table.conjugate(root[i], root_inv[j]);
      r.record(same_maximal_cyclic(parsed[i], parsed[j]) == brute,
               [&] { return "(" + all[i] + ", " + all[j] + ")"; });
    }
  }
  return r;
}

SuiteResult run_trace_bound_suite(int max_pairs, const std::vector<long>& ns) {
  SuiteResult r{"trace bound (2n)^|w|", 0, 0, {}};
  for (long n : ns) {
    for (int k = 1; k <= max_pairs; ++k) {
      const std::uint64_t patterns = std::uint64_t{1} << (2 * k);
      for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        std::string letters;
        for (int i = 0; i < 2 * k; ++i) {
          const bool neg = (mask >> i) & 1U;
          letters += i % 2 == 0 ? (neg ? 'A' : 'a') : (neg ? 'B' : 'b');
        }
        const auto check = trace_bound_check(Word::parse(letters), n);
        r.record(check.holds, [&] { return letters + " n=" + std::to_string(n); });
      }
    }
  }
  return r;
}

}  // namespace ratioopt::oracle
