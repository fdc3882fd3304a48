#include "ratioopt/freegroup.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace ratioopt {

namespace {

int syllable_rank(const Syllable& s) {
  return 2 * static_cast<int>(s.gen) + (s.exponent < 0 ? 1 : 0);
}

// Least rotation of a cyclic sequence (two-pointer scan, linear time).
std::size_t least_rotation(const std::vector<Syllable>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const auto c = compare_syllables(s[(i + k) % n], s[(j + k) % n]);
    if (c == 0) {
      ++k;
      continue;
    }
    if (c > 0) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) {
      ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

Word word_of(std::span<const Syllable> s) { return Word::from_syllables(s); }

}  // namespace

std::strong_ordering compare_syllables(const Syllable& x, const Syllable& y) {
  if (auto c = syllable_rank(x) <=> syllable_rank(y); c != 0) {
    return c;
  }
  return std::llabs(x.exponent) <=> std::llabs(y.exponent);
}

Word Word::generator(Generator g, std::int64_t exponent) {
  Word w;
  w.push_back({g, exponent});
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) {
    w.push_back(s);
  }
  return w;
}

void Word::push_back(const Syllable& s) {
  if (s.exponent == 0) {
    return;
  }
  if (!syllables_.empty() && syllables_.back().gen == s.gen) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) {
      syllables_.pop_back();
    }
    return;
  }
  syllables_.push_back(s);
}

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("invalid word \"" + std::string(text) + "\": " + what +
                                " at position " + std::to_string(pos));
  };
  const bool identity = text == "1";
  while (!identity && pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '\t' || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    Syllable s;
    switch (c) {
      case 'a': s = {Generator::a, 1}; break;
      case 'A': s = {Generator::a, -1}; break;
      case 'b': s = {Generator::b, 1}; break;
      case 'B': s = {Generator::b, -1}; break;
      default: fail(std::string("unexpected character '") + c + "'");
    }
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
      }
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        ++pos;
      }
      std::string_view digits = text.substr(start, pos - start);
      if (!digits.empty() && digits.front() == '+') {
        digits.remove_prefix(1);
      }
      std::int64_t e = 0;
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
        fail("malformed exponent");
      }
      s.exponent *= e;
    }
    w.push_back(s);
  }
  return w;
}

std::uint64_t Word::letter_length() const {
  std::uint64_t n = 0;
  for (const auto& s : syllables_) {
    n += static_cast<std::uint64_t>(std::llabs(s.exponent));
  }
  return n;
}

bool Word::all_unit_exponents() const {
  return std::all_of(syllables_.begin(), syllables_.end(),
                     [](const Syllable& s) { return s.exponent == 1 || s.exponent == -1; });
}

std::int64_t Word::max_abs_exponent() const {
  std::int64_t m = 0;
  for (const auto& s : syllables_) {
    m = std::max<std::int64_t>(m, std::llabs(s.exponent));
  }
  return m;
}

std::string Word::to_string() const {
  if (syllables_.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& s : syllables_) {
    const char c = s.gen == Generator::a ? (s.exponent > 0 ? 'a' : 'A')
                                         : (s.exponent > 0 ? 'b' : 'B');
    out.append(static_cast<std::size_t>(std::llabs(s.exponent)), c);
  }
  return out;
}

std::string Word::to_exponent_string() const {
  if (syllables_.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += s.gen == Generator::a ? 'a' : 'b';
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  if (auto c = x.syllables_.size() <=> y.syllables_.size(); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < x.syllables_.size(); ++i) {
    if (auto c = compare_syllables(x.syllables_[i], y.syllables_[i]); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

Word reduce(std::span<const Letter> raw) {
  Word w;
  for (const auto& l : raw) {
    w.push_back({l.gen, l.inverse ? -1 : 1});
  }
  return w;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  for (const auto& s : v.syllables()) {
    w.push_back(s);
  }
  return w;
}

Word invert(const Word& u) {
  const auto& s = u.syllables();
  std::vector<Syllable> out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    out.push_back({it->gen, -it->exponent});
  }
  return word_of(out);
}

Word power(const Word& u, std::int64_t n) {
  if (n == 0 || u.is_identity()) {
    return {};
  }
  if (n < 0) {
    return power(invert(u), -n);
  }
  const auto cr = cyclic_reduce(u);
  const auto& r = cr.cyclic.representative().syllables();
  Word body;
  if (r.size() == 1) {
    body = Word::generator(r.front().gen, r.front().exponent * n);
  } else {
    std::vector<Syllable> rep;
    rep.reserve(r.size() * static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      rep.insert(rep.end(), r.begin(), r.end());
    }
    body = word_of(rep);
  }
  return concat(concat(cr.conjugator, body), invert(cr.conjugator));
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

std::uint64_t common_prefix_length(const Word& u, const Word& v) {
  const auto& x = u.syllables();
  const auto& y = v.syllables();
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] == y[i]) {
      n += static_cast<std::uint64_t>(std::llabs(x[i].exponent));
      continue;
    }
    if (x[i].gen == y[i].gen && (x[i].exponent > 0) == (y[i].exponent > 0)) {
      n += static_cast<std::uint64_t>(std::min(std::llabs(x[i].exponent), std::llabs(y[i].exponent)));
    }
    break;
  }
  return n;
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  Word conjugator;
  // w = s1 w' sm with s1, sm in the same generator: w = sm^-1 (sm s1 w') sm.
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    const Syllable last = s.back();
    s.pop_back();
    conjugator.push_back({last.gen, -last.exponent});
    s.front().exponent += last.exponent;
    if (s.front().exponent == 0) {
      s.erase(s.begin());
    }
  }
  if (s.size() >= 2) {
    const std::size_t r = least_rotation(s);
    if (r != 0) {
      conjugator = concat(conjugator, word_of(std::span(s).first(r)));
      std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r), s.end());
    }
  }
  return {CyclicWord(word_of(s)), std::move(conjugator)};
}

bool is_conjugate(const Word& u, const Word& v) {
  return cyclic_reduce(u).cyclic == cyclic_reduce(v).cyclic;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.is_identity()) {
    throw std::invalid_argument("primitive_root: identity has no root");
  }
  const auto cr = cyclic_reduce(w);
  const auto& s = cr.cyclic.representative().syllables();
  const std::size_t m = s.size();
  Word core;
  std::uint64_t k = 1;
  if (m == 1) {
    core = Word::generator(s.front().gen, s.front().exponent > 0 ? 1 : -1);
    k = static_cast<std::uint64_t>(std::llabs(s.front().exponent));
  } else {
    std::size_t period = m;
    for (std::size_t d = 1; d < m; ++d) {
      if (m % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < m && periodic; ++i) {
        periodic = s[i] == s[i - d];
      }
      if (periodic) {
        period = d;
        break;
      }
    }
    core = word_of(std::span(s).first(period));
    k = m / period;
  }
  return {concat(concat(cr.conjugator, core), invert(cr.conjugator)), k};
}

bool same_maximal_cyclic(const Word& u, const Word& v) {
  if (u.is_identity() || v.is_identity()) {
    throw std::invalid_argument("same_maximal_cyclic: identity generates no maximal cyclic subgroup");
  }
  const Word ru = primitive_root(u).root;
  const Word rv = primitive_root(v).root;
  return is_conjugate(ru, rv) || is_conjugate(ru, invert(rv));
}

bool OptimizerWordStream::accept(const Word& w) {
  if (syllable_length(w) < 2 || !w.all_unit_exponents() || !is_cyclically_reduced(w) ||
      !is_primitive(w)) {
    return false;
  }
  Word key = cyclic_reduce(w).cyclic.representative();
  if (seen_.contains(key) || seen_.contains(cyclic_reduce(invert(w)).cyclic.representative())) {
    return false;
  }
  seen_.insert(std::move(key));
  return true;
}

Word OptimizerWordStream::next_length_lex() {
  for (;;) {
    if (mask_ >> length_ != 0) {
      length_ += 2;
      mask_ = 0;
      if (length_ > 62) {
        throw std::length_error("optimizer word enumeration exhausted");
      }
    }
    std::vector<Syllable> s(length_);
    for (std::size_t i = 0; i < length_; ++i) {
      const bool negative = (mask_ >> (length_ - 1 - i)) & 1U;
      s[i] = {i % 2 == 0 ? Generator::a : Generator::b, negative ? -1 : 1};
    }
    ++mask_;
    Word w = word_of(s);
    if (cyclic_reduce(w).cyclic.representative() == w && accept(w)) {
      return w;
    }
  }
}

Word OptimizerWordStream::next_prefix_stable() {
  if (!previous_) {
    previous_ = next_length_lex();
    return *previous_;
  }
  for (std::int64_t ea : {1, -1}) {
    for (std::int64_t eb : {1, -1}) {
      Word candidate = *previous_;
      candidate.push_back({Generator::a, ea});
      candidate.push_back({Generator::b, eb});
      if (accept(candidate)) {
        previous_ = candidate;
        return candidate;
      }
    }
  }
  throw std::logic_error("no primitive two-syllable extension of " + previous_->to_string());
}

Word OptimizerWordStream::next() {
  return prefix_stable_ ? next_prefix_stable() : next_length_lex();
}

std::vector<Word> enumerate_optimizer_words(std::size_t count, bool prefix_stable) {
  OptimizerWordStream stream(prefix_stable);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(stream.next());
  }
  return out;
}

}  // namespace ratioopt
