#pragma once

// The eight staircase-word encodings of S_n and their exact inverses.
//
//   f1  insert i at position w[i] counted from the right
//   g1  insert i at position w[i] counted from the left
//   f2  for i = n..1 append the w[i]-th smallest unused value on the right
//   g2  for i = n..1 prepend the w[i]-th smallest unused value on the left
//   f3  cycle notation, reading w backwards; letter 1 closes the open cycle
//   f4  cycle notation, inserting i after w[i]-1; letter 1 opens cycle (i)
//   h1  g1 over words numbered in lex order (ranks in [1, n!])
//   h2  g2 over words numbered right-to-left lex order

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/perm_core.hpp"

namespace permlab {

enum class Encoding { F1, F2, F3, F4, G1, G2, H1, H2 };

inline constexpr std::array<Encoding, 8> kAllEncodings = {
    Encoding::F1, Encoding::F2, Encoding::F3, Encoding::F4,
    Encoding::G1, Encoding::G2, Encoding::H1, Encoding::H2};

// H1/H2 take integer ranks; all others take words.
inline constexpr bool is_rank_encoding(Encoding e) noexcept {
  return e == Encoding::H1 || e == Encoding::H2;
}

inline std::string_view encoding_name(Encoding e) noexcept {
  switch (e) {
    case Encoding::F1: return "f1";
    case Encoding::F2: return "f2";
    case Encoding::F3: return "f3";
    case Encoding::F4: return "f4";
    case Encoding::G1: return "g1";
    case Encoding::G2: return "g2";
    case Encoding::H1: return "h1";
    case Encoding::H2: return "h2";
  }
  return "?";
}

inline Encoding parse_encoding(std::string_view name) {
  for (Encoding e : kAllEncodings) {
    if (encoding_name(e) == name) return e;
  }
  throw InvalidInput("unknown encoding '" + std::string(name) +
                     "' (expected one of f1 f2 f3 f4 g1 g2 h1 h2)");
}

// ---------------------------------------------------------------------------
// Insertion codes.

inline Permutation f1(const Word& w) {
  std::vector<int> seq{1};
  seq.reserve(w.size());
  for (std::size_t i = 2; i <= w.size(); ++i) {
    // position w[i] from the right of a length-i sequence is index i - w[i]
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(i - static_cast<std::size_t>(w[i])),
               static_cast<int>(i));
  }
  return Permutation::unchecked(std::move(seq));
}

inline Word f1_inv(const Permutation& p) {
  std::vector<int> seq(p.images().begin(), p.images().end());
  std::vector<int> letters(p.size(), 1);
  for (std::size_t i = p.size(); i >= 2; --i) {
    const auto it = std::find(seq.begin(), seq.end(), static_cast<int>(i));
    const auto from_left = static_cast<std::size_t>(it - seq.begin());
    letters[i - 1] = static_cast<int>(i - from_left);
    seq.erase(it);
  }
  return Word::unchecked(std::move(letters));
}

inline Permutation g1(const Word& w) {
  std::vector<int> seq{1};
  seq.reserve(w.size());
  for (std::size_t i = 2; i <= w.size(); ++i) {
    seq.insert(seq.begin() + (w[i] - 1), static_cast<int>(i));
  }
  return Permutation::unchecked(std::move(seq));
}

inline Word g1_inv(const Permutation& p) {
  std::vector<int> seq(p.images().begin(), p.images().end());
  std::vector<int> letters(p.size(), 1);
  for (std::size_t i = p.size(); i >= 2; --i) {
    const auto it = std::find(seq.begin(), seq.end(), static_cast<int>(i));
    letters[i - 1] = static_cast<int>(it - seq.begin()) + 1;
    seq.erase(it);
  }
  return Word::unchecked(std::move(letters));
}

// ---------------------------------------------------------------------------
// Selection codes. f2 places the step-i choice at position n+1-i, g2 at i.

inline Permutation f2(const Word& w) {
  const std::size_t n = w.size();
  std::vector<int> unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> seq;
  seq.reserve(n);
  for (std::size_t i = n; i >= 1; --i) {
    const auto at = unused.begin() + (w[i] - 1);
    seq.push_back(*at);
    unused.erase(at);
  }
  return Permutation::unchecked(std::move(seq));
}

inline Word f2_inv(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<int> letters(n);
  for (std::size_t q = 1; q <= n; ++q) {
    int smaller_after = 0;
    for (std::size_t r = q + 1; r <= n; ++r) {
      if (p[r] < p[q]) ++smaller_after;
    }
    letters[n - q] = 1 + smaller_after;
  }
  return Word::unchecked(std::move(letters));
}

inline Permutation g2(const Word& w) {
  const std::size_t n = w.size();
  std::vector<int> unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> seq(n);
  for (std::size_t i = n; i >= 1; --i) {
    const auto at = unused.begin() + (w[i] - 1);
    seq[i - 1] = *at;
    unused.erase(at);
  }
  return Permutation::unchecked(std::move(seq));
}

inline Word g2_inv(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<int> letters(n);
  for (std::size_t i = 1; i <= n; ++i) {
    int smaller_before = 0;
    for (std::size_t r = 1; r < i; ++r) {
      if (p[r] < p[i]) ++smaller_before;
    }
    letters[i - 1] = 1 + smaller_before;
  }
  return Word::unchecked(std::move(letters));
}

// ---------------------------------------------------------------------------
// Cycle codes.

inline CycleForm f3(const Word& w) {
  const std::size_t n = w.size();
  std::vector<int> unused;
  unused.reserve(n);
  for (std::size_t v = 2; v <= n; ++v) unused.push_back(static_cast<int>(v));
  std::vector<CycleForm::Cycle> cycles{{1}};
  for (std::size_t i = n; i >= 2; --i) {
    // exactly i-1 values remain unused here, so w[i]-1 <= i-1 is always available
    if (unused.size() != i - 1) throw std::logic_error("f3: unused pool out of step");
    if (w[i] > 1) {
      const auto at = unused.begin() + (w[i] - 2);
      cycles.back().push_back(*at);
      unused.erase(at);
    } else {
      cycles.push_back({unused.front()});
      unused.erase(unused.begin());
    }
  }
  return CycleForm::from_canonical(std::move(cycles));
}

inline Word f3_inv(const Permutation& p) {
  const std::size_t n = p.size();
  const CycleForm form = to_cycle_form(p);
  std::vector<int> letters(n, 1);
  std::vector<bool> used(n + 1, false);
  used[1] = true;
  std::size_t position = n;
  auto unused_rank = [&](int x) {
    int r = 0;
    for (int v = 1; v <= x; ++v) {
      if (!used[v]) ++r;
    }
    return r;
  };
  const auto& cycles = form.cycles();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t k = 0; k < cycles[c].size(); ++k) {
      if (c == 0 && k == 0) continue;
      const int x = cycles[c][k];
      letters[position - 1] = (k == 0) ? 1 : 1 + unused_rank(x);
      used[x] = true;
      --position;
    }
  }
  return Word::unchecked(std::move(letters));
}

inline CycleForm f4(const Word& w) {
  const std::size_t n = w.size();
  // successor links; cycle order is recovered by walking from each opener
  std::vector<int> next(n + 1, 0);
  std::vector<int> openers{1};
  next[1] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    const int v = static_cast<int>(i);
    if (w[i] == 1) {
      next[i] = v;
      openers.push_back(v);
    } else {
      const int after = w[i] - 1;
      next[i] = next[after];
      next[after] = v;
    }
  }
  std::vector<CycleForm::Cycle> cycles;
  cycles.reserve(openers.size());
  for (int start : openers) {
    CycleForm::Cycle c{start};
    for (int x = next[start]; x != start; x = next[x]) c.push_back(x);
    cycles.push_back(std::move(c));
  }
  return CycleForm::from_canonical(std::move(cycles));
}

inline Word f4_inv(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<int> next(n + 1), prev(n + 1);
  for (std::size_t x = 1; x <= n; ++x) {
    next[x] = p[x];
    prev[p[x]] = static_cast<int>(x);
  }
  std::vector<int> letters(n, 1);
  // every value above i is already spliced out, so i is the largest survivor
  // and opened its own cycle exactly when it is now a singleton
  for (std::size_t i = n; i >= 2; --i) {
    const int before = prev[i];
    if (before == static_cast<int>(i)) continue;
    letters[i - 1] = before + 1;
    const int after = next[i];
    next[before] = after;
    prev[after] = before;
  }
  return Word::unchecked(std::move(letters));
}

// ---------------------------------------------------------------------------
// Rank-indexed siblings.

inline Permutation h1(std::uint64_t k, std::size_t n) { return g1(unrank_lex(k, n)); }
inline Permutation h2(std::uint64_t k, std::size_t n) { return g2(unrank_revlex(k, n)); }
inline std::uint64_t h1_inv(const Permutation& p) { return rank_lex(g1_inv(p)); }
inline std::uint64_t h2_inv(const Permutation& p) { return rank_revlex(g2_inv(p)); }

// ---------------------------------------------------------------------------
// Uniform dispatch. Word encodings only; H1/H2 go through encode_rank.

inline Permutation encode(Encoding e, const Word& w) {
  switch (e) {
    case Encoding::F1: return f1(w);
    case Encoding::F2: return f2(w);
    case Encoding::F3: return from_cycle_form(f3(w));
    case Encoding::F4: return from_cycle_form(f4(w));
    case Encoding::G1: return g1(w);
    case Encoding::G2: return g2(w);
    case Encoding::H1:
    case Encoding::H2: break;
  }
  throw InvalidInput(std::string(encoding_name(e)) + " takes a rank, not a word");
}

inline Word decode(Encoding e, const Permutation& p) {
  switch (e) {
    case Encoding::F1: return f1_inv(p);
    case Encoding::F2: return f2_inv(p);
    case Encoding::F3: return f3_inv(p);
    case Encoding::F4: return f4_inv(p);
    case Encoding::G1: return g1_inv(p);
    case Encoding::G2: return g2_inv(p);
    case Encoding::H1:
    case Encoding::H2: break;
  }
  throw InvalidInput(std::string(encoding_name(e)) + " decodes to a rank, not a word");
}

inline Permutation encode_rank(Encoding e, std::uint64_t k, std::size_t n) {
  switch (e) {
    case Encoding::H1: return h1(k, n);
    case Encoding::H2: return h2(k, n);
    default: break;
  }
  throw InvalidInput(std::string(encoding_name(e)) + " takes a word, not a rank");
}

inline std::uint64_t decode_rank(Encoding e, const Permutation& p) {
  switch (e) {
    case Encoding::H1: return h1_inv(p);
    case Encoding::H2: return h2_inv(p);
    default: break;
  }
  throw InvalidInput(std::string(encoding_name(e)) + " decodes to a word, not a rank");
}

// The k-th input of an encoding in its natural enumeration: words in lex
// order for word encodings, the rank itself for H1/H2.
inline Permutation encode_at(Encoding e, std::uint64_t k, std::size_t n) {
  if (is_rank_encoding(e)) return encode_rank(e, k, n);
  return encode(e, unrank_lex(k, n));
}

}  // namespace permlab
