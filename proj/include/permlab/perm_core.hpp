#pragma once

// Words, permutations and cycle forms on [n], plus the small group toolkit
// the encodings and scanners are built on. Every public index is 1-based.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad word letter, rank out of range, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A request exceeds a configured exhaustion or enumeration cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Largest n whose factorial fits in 64 bits.
inline constexpr std::size_t kMaxFactorialN = 20;

inline std::uint64_t factorial(std::size_t n) {
  if (n > kMaxFactorialN) {
    throw CapacityError("factorial(" + std::to_string(n) + ") overflows 64 bits");
  }
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// ---------------------------------------------------------------------------
// Word: letters w[1..n] with 1 <= w[i] <= i.

class Word {
 public:
  // Validating constructor. Rejects empty input and names the first bad index.
  static Word from_letters(std::vector<int> letters) {
    if (letters.empty()) throw InvalidInput("word must have at least one letter");
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const int bound = static_cast<int>(i + 1);
      if (letters[i] < 1 || letters[i] > bound) {
        throw InvalidInput("word letter at index " + std::to_string(i + 1) + " is " +
                           std::to_string(letters[i]) + ", must lie in [1, " +
                           std::to_string(bound) + "]");
      }
    }
    return Word(std::move(letters));
  }

  // Caller guarantees the staircase bound already holds.
  static Word unchecked(std::vector<int> letters) { return Word(std::move(letters)); }

  static Word ones(std::size_t n) {
    if (n == 0) throw InvalidInput("word length must be at least 1");
    return Word(std::vector<int>(n, 1));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i - 1]; }
  std::span<const int> letters() const noexcept { return letters_; }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  std::vector<int> letters_;
};

// ---------------------------------------------------------------------------
// Permutation in one-line notation: images[p] is the value at position p.

class Permutation {
 public:
  static Permutation from_images(std::vector<int> images) {
    const std::size_t n = images.size();
    if (n == 0) throw InvalidInput("permutation must have at least one entry");
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
      const int v = images[i];
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw InvalidInput("permutation value " + std::to_string(v) + " at position " +
                           std::to_string(i + 1) + " is outside [1, " + std::to_string(n) +
                           "]");
      }
      if (seen[v]) {
        throw InvalidInput("permutation value " + std::to_string(v) + " repeats at position " +
                           std::to_string(i + 1));
      }
      seen[v] = true;
    }
    return Permutation(std::move(images));
  }

  static Permutation unchecked(std::vector<int> images) {
    return Permutation(std::move(images));
  }

  static Permutation identity(std::size_t n) {
    if (n == 0) throw InvalidInput("permutation size must be at least 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  // The order-reversing permutation n, n-1, ..., 1.
  static Permutation longest(std::size_t n) {
    if (n == 0) throw InvalidInput("permutation size must be at least 1");
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
    return Permutation(std::move(v));
  }

  std::size_t size() const noexcept { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i - 1]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

// ---------------------------------------------------------------------------
// CycleForm: canonical cycle decomposition. Each cycle lists an orbit
// (x, p(x), p(p(x)), ...) starting at its minimum; cycles are ordered by
// ascending minimum. Fixed points appear as 1-cycles.

class CycleForm {
 public:
  using Cycle = std::vector<int>;

  // Accepts any disjoint cycles partitioning [n] and canonicalizes them.
  static CycleForm from_cycles(std::vector<Cycle> cycles) {
    const std::size_t n = check_partition(cycles);
    for (auto& c : cycles) {
      std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
    return CycleForm(std::move(cycles), n);
  }

  // For constructions that produce canonical output by design; a violation
  // is a logic error in the producer, not bad user input.
  static CycleForm from_canonical(std::vector<Cycle> cycles) {
    const std::size_t n = check_partition(cycles);
    if (!is_canonical(cycles)) throw std::logic_error("cycle list is not in canonical order");
    return CycleForm(std::move(cycles), n);
  }

  static bool is_canonical(const std::vector<Cycle>& cycles) {
    int previous_min = 0;
    for (const auto& c : cycles) {
      if (c.empty()) return false;
      if (*std::min_element(c.begin(), c.end()) != c.front()) return false;
      if (c.front() <= previous_min) return false;
      previous_min = c.front();
    }
    return true;
  }

  std::size_t size() const noexcept { return n_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  std::size_t cycle_count() const noexcept { return cycles_.size(); }

  friend bool operator==(const CycleForm&, const CycleForm&) = default;

 private:
  CycleForm(std::vector<Cycle> cycles, std::size_t n) : cycles_(std::move(cycles)), n_(n) {}

  static std::size_t check_partition(const std::vector<Cycle>& cycles) {
    std::size_t n = 0;
    for (const auto& c : cycles) {
      if (c.empty()) throw InvalidInput("cycle form contains an empty cycle");
      n += c.size();
    }
    if (n == 0) throw InvalidInput("cycle form must cover at least one element");
    std::vector<bool> seen(n + 1, false);
    for (const auto& c : cycles) {
      for (int x : c) {
        if (x < 1 || static_cast<std::size_t>(x) > n) {
          throw InvalidInput("cycle entry " + std::to_string(x) + " is outside [1, " +
                             std::to_string(n) + "]");
        }
        if (seen[x]) throw InvalidInput("cycle entry " + std::to_string(x) + " repeats");
        seen[x] = true;
      }
    }
    return n;
  }

  std::vector<Cycle> cycles_;
  std::size_t n_;
};

// ---------------------------------------------------------------------------
// CycleType: counts[j-1] = number of j-cycles, sum of j * a_j = n.

struct CycleType {
  std::vector<std::uint32_t> counts;

  std::size_t size() const noexcept { return counts.size(); }
  std::uint32_t operator[](std::size_t j) const { return counts[j - 1]; }

  bool valid() const noexcept {
    std::size_t total = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) total += (j + 1) * counts[j];
    return !counts.empty() && total == counts.size();
  }

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

// ---------------------------------------------------------------------------
// Group operations.

// (p o q)[i] = p[q[i]]
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw InvalidInput("cannot compose permutations of sizes " + std::to_string(p.size()) +
                       " and " + std::to_string(q.size()));
  }
  std::vector<int> out(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i) out[i - 1] = p[static_cast<std::size_t>(q[i])];
  return Permutation::unchecked(std::move(out));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i) out[p[i] - 1] = static_cast<int>(i);
  return Permutation::unchecked(std::move(out));
}

inline Permutation reverse(const Permutation& p) {
  auto v = std::vector<int>(p.images().rbegin(), p.images().rend());
  return Permutation::unchecked(std::move(v));
}

inline Permutation complement(const Permutation& p) {
  const int top = static_cast<int>(p.size()) + 1;
  std::vector<int> v(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i) v[i - 1] = top - p[i];
  return Permutation::unchecked(std::move(v));
}

inline bool is_involution(const Permutation& p) {
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (p[static_cast<std::size_t>(p[i])] != static_cast<int>(i)) return false;
  }
  return true;
}

// I(n) = I(n-1) + (n-1) I(n-2), I(0) = I(1) = 1.
inline std::uint64_t involution_count(std::size_t n) {
  if (n == 0) throw InvalidInput("involution_count requires n >= 1");
  std::uint64_t prev = 1, cur = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    const std::uint64_t next = cur + (k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline CycleForm to_cycle_form(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<CycleForm::Cycle> cycles;
  for (std::size_t start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    CycleForm::Cycle c;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      c.push_back(static_cast<int>(x));
    }
    cycles.push_back(std::move(c));
  }
  return CycleForm::from_canonical(std::move(cycles));
}

// Cycle (a b c) reads a -> b -> c -> a.
inline Permutation from_cycle_form(const CycleForm& c) {
  std::vector<int> images(c.size());
  for (const auto& cycle : c.cycles()) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation::unchecked(std::move(images));
}

inline CycleType cycle_type(const Permutation& p) {
  CycleType t{std::vector<std::uint32_t>(p.size(), 0)};
  std::vector<bool> seen(p.size() + 1, false);
  for (std::size_t start = 1; start <= p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    ++t.counts[len - 1];
  }
  return t;
}

inline std::size_t cycle_count(const Permutation& p) {
  const auto t = cycle_type(p);
  return std::accumulate(t.counts.begin(), t.counts.end(), std::size_t{0});
}

// ---------------------------------------------------------------------------
// Word ranking. Ranks are 1-based in [1, n!].
//
// Lex order compares w[1] first, so w[n] is the fastest-moving digit:
//   k - 1 = sum_i (w[i] - 1) * (n! / i!)
// Right-to-left lex compares w[n] first, so w[1] moves fastest:
//   k - 1 = sum_i (w[i] - 1) * (i - 1)!

namespace detail {

inline void check_rank(std::uint64_t k, std::size_t n) {
  if (n == 0) throw InvalidInput("word length must be at least 1");
  const std::uint64_t total = factorial(n);
  if (k < 1 || k > total) {
    throw InvalidInput("rank " + std::to_string(k) + " is outside [1, " + std::to_string(total) +
                       "]");
  }
}

}  // namespace detail

inline std::uint64_t rank_lex(const Word& w) {
  std::uint64_t r = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    r = r * i + static_cast<std::uint64_t>(w[i] - 1);
  }
  return r + 1;
}

inline Word unrank_lex(std::uint64_t k, std::size_t n) {
  detail::check_rank(k, n);
  std::uint64_t r = k - 1;
  std::vector<int> letters(n);
  for (std::size_t i = n; i >= 1; --i) {
    letters[i - 1] = static_cast<int>(r % i) + 1;
    r /= i;
  }
  return Word::unchecked(std::move(letters));
}

inline std::uint64_t rank_revlex(const Word& w) {
  std::uint64_t r = 0;
  for (std::size_t i = w.size(); i >= 1; --i) {
    r = r * i + static_cast<std::uint64_t>(w[i] - 1);
  }
  return r + 1;
}

inline Word unrank_revlex(std::uint64_t k, std::size_t n) {
  detail::check_rank(k, n);
  std::uint64_t r = k - 1;
  std::vector<int> letters(n);
  for (std::size_t i = 1; i <= n; ++i) {
    letters[i - 1] = static_cast<int>(r % i) + 1;
    r /= i;
  }
  return Word::unchecked(std::move(letters));
}

// Advances w to its lex successor in place; returns false after the last word.
inline bool next_word_lex(std::vector<int>& letters) {
  for (std::size_t i = letters.size(); i >= 1; --i) {
    if (letters[i - 1] < static_cast<int>(i)) {
      ++letters[i - 1];
      return true;
    }
    letters[i - 1] = 1;
  }
  return false;
}

// 0-based lex rank of a permutation among all of S_n (Lehmer code).
inline std::uint64_t permutation_index(std::span<const int> images) {
  const std::size_t n = images.size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (images[j] < images[i]) ++smaller;
    }
    r = r * (n - i) + smaller;
  }
  return r;
}

inline std::uint64_t permutation_index(const Permutation& p) {
  return permutation_index(p.images());
}

inline Permutation permutation_at_index(std::uint64_t index, std::size_t n) {
  if (index >= factorial(n)) throw InvalidInput("permutation index out of range");
  std::vector<std::uint64_t> digits(n);
  for (std::size_t i = n; i >= 1; --i) {
    digits[i - 1] = index % (n - i + 1);
    index /= (n - i + 1);
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return Permutation::unchecked(std::move(out));
}

// ---------------------------------------------------------------------------
// Text forms: "3,1,2" for permutations and words, "(1 3)(2)" for cycles.

namespace detail {

inline std::string join_csv(std::span<const int> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

inline std::vector<int> parse_csv_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const std::string& why) {
    throw InvalidInput("cannot parse " + std::string(what) + " at character " +
                       std::to_string(at + 1) + ": " + why);
  };
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::size_t start = pos;
    long long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > std::numeric_limits<int>::max()) fail(start, "value too large");
      ++pos;
    }
    if (pos == start) fail(pos, "expected a positive integer");
    out.push_back(static_cast<int>(v));
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') fail(pos, "expected ','");
    ++pos;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const Permutation& p) { return detail::join_csv(p.images()); }
inline std::string to_string(const Word& w) { return detail::join_csv(w.letters()); }

inline std::string to_string(const CycleForm& c) {
  std::string s;
  for (const auto& cycle : c.cycles()) {
    s += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(cycle[k]);
    }
    s += ')';
  }
  return s;
}

inline std::string to_string(const CycleType& t) {
  std::string s = "[";
  for (std::size_t j = 0; j < t.counts.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(t.counts[j]);
  }
  return s + "]";
}

inline Permutation parse_permutation(std::string_view text) {
  return Permutation::from_images(detail::parse_csv_ints(text, "permutation"));
}

inline Word parse_word(std::string_view text) {
  return Word::from_letters(detail::parse_csv_ints(text, "word"));
}

inline CycleForm parse_cycle_form(std::string_view text) {
  std::vector<CycleForm::Cycle> cycles;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidInput("cannot parse cycle form at character " + std::to_string(pos + 1) +
                       ": " + why);
  };
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    CycleForm::Cycle c;
    while (true) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      long long v = 0;
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > std::numeric_limits<int>::max()) fail("value too large");
        ++pos;
      }
      if (pos == start) fail("expected a positive integer");
      c.push_back(static_cast<int>(v));
    }
    if (c.empty()) fail("empty cycle");
    cycles.push_back(std::move(c));
  }
  return CycleForm::from_cycles(std::move(cycles));
}

}  // namespace permlab
