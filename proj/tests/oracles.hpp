#pragma once

// Brute-force references used only by tests. Nothing here calls the
// library's ranking, encoding or scanning code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

// All of S_n in lex order via std::next_permutation.
inline std::vector<Seq> all_permutations(int n) {
  Seq p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Seq> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// All staircase words by nested enumeration, in lex order.
inline std::vector<Seq> all_words(int n) {
  std::vector<Seq> out{{1}};
  for (int i = 2; i <= n; ++i) {
    std::vector<Seq> grown;
    for (const auto& w : out) {
      for (int letter = 1; letter <= i; ++letter) {
        auto x = w;
        x.push_back(letter);
        grown.push_back(std::move(x));
      }
    }
    out = std::move(grown);
  }
  return out;
}

inline std::vector<Seq> all_words_revlex(int n) {
  auto w = all_words(n);
  std::sort(w.begin(), w.end(), [](const Seq& a, const Seq& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return w;
}

// Direct list-manipulation versions of the four insertion rules.
inline Seq naive_insert(const Seq& w, bool from_right) {
  Seq out{1};
  for (int i = 2; i <= static_cast<int>(w.size()); ++i) {
    const int at = from_right ? i - w[i - 1] : w[i - 1] - 1;
    out.insert(out.begin() + at, i);
  }
  return out;
}

inline Seq naive_pick(const Seq& w, bool prepend) {
  const int n = static_cast<int>(w.size());
  Seq unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  Seq out;
  for (int i = n; i >= 1; --i) {
    const int v = unused[w[i - 1] - 1];
    unused.erase(unused.begin() + (w[i - 1] - 1));
    if (prepend) {
      out.insert(out.begin(), v);
    } else {
      out.push_back(v);
    }
  }
  return out;
}

inline bool is_involution(const Seq& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[p[i] - 1] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

inline std::uint64_t count_involutions(int n) {
  std::uint64_t c = 0;
  for (const auto& p : all_permutations(n)) c += is_involution(p);
  return c;
}

// Cycle type a_1..a_n by direct orbit walking.
inline std::vector<std::uint32_t> cycle_type(const Seq& p) {
  std::vector<std::uint32_t> a(p.size(), 0);
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x] - 1)) {
      seen[x] = true;
      ++len;
    }
    ++a[len - 1];
  }
  return a;
}

// Element counts per cycle length of a bijection given as an explicit map.
inline std::map<std::uint64_t, std::uint64_t> spectrum_of(const std::map<Seq, Seq>& f) {
  std::map<Seq, bool> seen;
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [start, _] : f) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Seq x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = f.at(x);
      ++len;
    }
    out[len] += len;
  }
  return out;
}

// Coincidences of the two rank maps with both value tables materialized:
// rank k names the k-th word in lex order for the first map and the k-th in
// right-to-left lex order for the second.
inline std::uint64_t h_coincidences(int n) {
  const auto lex = all_words(n);
  const auto rev = all_words_revlex(n);
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < lex.size(); ++k) {
    c += naive_insert(lex[k], false) == naive_pick(rev[k], true);
  }
  return c;
}

}  // namespace oracle
