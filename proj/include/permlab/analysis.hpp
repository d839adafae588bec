#pragma once

// Compositions outer o inner^{-1} : S_n -> S_n, their fixed points and
// cycle spectra, and exhaustive checkers for the structural claims about them.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "permlab/bijections.hpp"
#include "permlab/perm_core.hpp"

namespace permlab {

struct ScanOptions {
  std::size_t max_scan_n = 9;       // S_n exhaustive scans
  std::size_t max_sequence_n = 12;  // h-sequence counts
  unsigned jobs = 1;
};

namespace detail {

// Splits [0, total) into at most `jobs` contiguous chunks and runs
// fn(begin, end, chunk) for each. Chunk results must be merged by index.
template <typename Fn>
void for_each_chunk(std::uint64_t total, unsigned jobs, Fn&& fn) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs == 0 ? 1 : jobs, total));
  if (workers == 1) {
    fn(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::uint64_t c = 0; c < workers; ++c) {
    const std::uint64_t begin = total * c / workers;
    const std::uint64_t end = total * (c + 1) / workers;
    threads.emplace_back([&fn, begin, end, c] { fn(begin, end, static_cast<unsigned>(c)); });
  }
}

inline std::size_t chunk_count(std::uint64_t total, unsigned jobs) {
  return static_cast<std::size_t>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs == 0 ? 1 : jobs, total)));
}

inline void check_scan_cap(std::size_t n, std::size_t cap, std::string_view what) {
  if (n == 0) throw InvalidInput("n must be at least 1");
  if (n > cap) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the exhaustion cap " + std::to_string(cap));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CompositionSpec

struct CompositionSpec {
  Encoding outer;
  Encoding inner;
  std::size_t n;
};

inline CompositionSpec make_composition(Encoding outer, Encoding inner, std::size_t n) {
  if (n == 0) throw InvalidInput("composition size must be at least 1");
  if (outer == inner) throw InvalidInput("outer and inner encodings must differ");
  if (is_rank_encoding(outer) != is_rank_encoding(inner)) {
    throw InvalidInput("h1/h2 compose only with each other");
  }
  return CompositionSpec{outer, inner, n};
}

inline std::string describe(const CompositionSpec& s) {
  return std::string(encoding_name(s.outer)) + "∘" + std::string(encoding_name(s.inner)) + "⁻¹";
}

// outer(inner^{-1}(p))
inline Permutation apply(const CompositionSpec& spec, const Permutation& p) {
  if (p.size() != spec.n) {
    throw InvalidInput("permutation has size " + std::to_string(p.size()) + ", composition has n = " +
                       std::to_string(spec.n));
  }
  if (is_rank_encoding(spec.inner)) {
    return encode_rank(spec.outer, decode_rank(spec.inner, p), spec.n);
  }
  return encode(spec.outer, decode(spec.inner, p));
}

// Every permutation is inner(x) for exactly one input x; since the composite
// sends inner(x) to outer(x), walking the inputs enumerates the whole map.
// Returns next[index(inner(x))] = index(outer(x)) over lex indices of S_n.
inline std::vector<std::uint32_t> composition_table(const CompositionSpec& spec,
                                                    const ScanOptions& opts = {}) {
  detail::check_scan_cap(spec.n, opts.max_scan_n, "composition_table");
  const std::uint64_t total = factorial(spec.n);
  if (total > 0xFFFFFFFFull) throw CapacityError("composition table exceeds 32-bit indices");
  std::vector<std::uint32_t> next(total);
  detail::for_each_chunk(total, opts.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const auto src = encode_at(spec.inner, k + 1, spec.n);
      const auto dst = encode_at(spec.outer, k + 1, spec.n);
      next[permutation_index(src)] = static_cast<std::uint32_t>(permutation_index(dst));
    }
  });
  return next;
}

inline std::vector<Permutation> fixed_points(const CompositionSpec& spec,
                                             const ScanOptions& opts = {}) {
  detail::check_scan_cap(spec.n, opts.max_scan_n, "fixed_points");
  const std::uint64_t total = factorial(spec.n);
  std::vector<std::vector<Permutation>> found(detail::chunk_count(total, opts.jobs));
  detail::for_each_chunk(total, opts.jobs,
                         [&](std::uint64_t begin, std::uint64_t end, unsigned chunk) {
                           for (std::uint64_t k = begin; k < end; ++k) {
                             auto src = encode_at(spec.inner, k + 1, spec.n);
                             if (encode_at(spec.outer, k + 1, spec.n) == src) {
                               found[chunk].push_back(std::move(src));
                             }
                           }
                         });
  std::vector<Permutation> out;
  for (auto& part : found) {
    for (auto& p : part) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// CycleSpectrum: for each cycle length k, the number of ELEMENTS of S_n that
// lie on k-cycles of the map. Every entry is positive, divisible by k, and
// the entries sum to n!.

class CycleSpectrum {
 public:
  static CycleSpectrum from_entries(std::size_t n, std::map<std::uint64_t, std::uint64_t> entries) {
    const std::uint64_t total = factorial(n);
    std::uint64_t sum = 0;
    for (auto it = entries.begin(); it != entries.end();) {
      const auto [k, count] = *it;
      if (count == 0) {
        it = entries.erase(it);
        continue;
      }
      if (k == 0 || k > total) {
        throw InvalidInput("cycle length " + std::to_string(k) + " is outside [1, " +
                           std::to_string(total) + "]");
      }
      if (count % k != 0) {
        throw InvalidInput("entry " + std::to_string(count) + " at cycle length " +
                           std::to_string(k) + " is not a multiple of " + std::to_string(k));
      }
      sum += count;
      ++it;
    }
    if (sum != total) {
      throw InvalidInput("spectrum entries sum to " + std::to_string(sum) + ", expected " +
                         std::to_string(n) + "! = " + std::to_string(total));
    }
    return CycleSpectrum(n, std::move(entries));
  }

  std::size_t n() const noexcept { return n_; }
  const std::map<std::uint64_t, std::uint64_t>& entries() const noexcept { return entries_; }

  std::uint64_t at(std::uint64_t k) const {
    const auto it = entries_.find(k);
    return it == entries_.end() ? 0 : it->second;
  }
  std::uint64_t longest_cycle() const { return entries_.rbegin()->first; }

  friend bool operator==(const CycleSpectrum&, const CycleSpectrum&) = default;

 private:
  CycleSpectrum(std::size_t n, std::map<std::uint64_t, std::uint64_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t n_;
  std::map<std::uint64_t, std::uint64_t> entries_;
};

struct SpectrumDetail {
  CycleSpectrum spectrum;
  // smallest lex index lying on a cycle of each length
  std::map<std::uint64_t, std::uint64_t> representative;
};

inline SpectrumDetail cycle_spectrum_detail(const CompositionSpec& spec,
                                            const ScanOptions& opts = {}) {
  const auto next = composition_table(spec, opts);
  std::vector<bool> visited(next.size(), false);
  std::map<std::uint64_t, std::uint64_t> entries, representative;
  for (std::uint64_t start = 0; start < next.size(); ++start) {
    if (visited[start]) continue;
    std::uint64_t length = 0;
    for (std::uint64_t x = start; !visited[x]; x = next[x]) {
      visited[x] = true;
      ++length;
    }
    entries[length] += length;
    representative.try_emplace(length, start);
  }
  return {CycleSpectrum::from_entries(spec.n, std::move(entries)), std::move(representative)};
}

inline CycleSpectrum cycle_spectrum(const CompositionSpec& spec, const ScanOptions& opts = {}) {
  return cycle_spectrum_detail(spec, opts).spectrum;
}

// Row text: entries for k = 1 .. longest, a single zero as "0" and a run of
// m >= 2 zeros as "0: m". Example: "[1, 2, 0: 7, 20]".
inline std::string spectrum_to_paper_text(const CycleSpectrum& s) {
  std::string out = "[";
  bool first = true;
  auto emit = [&](const std::string& item) {
    if (!first) out += ", ";
    out += item;
    first = false;
  };
  std::uint64_t k = 1;
  for (const auto& [length, count] : s.entries()) {
    const std::uint64_t zeros = length - k;
    if (zeros == 1) emit("0");
    if (zeros >= 2) emit("0: " + std::to_string(zeros));
    emit(std::to_string(count));
    k = length + 1;
  }
  return out + "]";
}

inline CycleSpectrum spectrum_from_paper_text(std::string_view text, std::size_t n) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("spectrum text error at character " + std::to_string(pos + 1) + ": " +
                       why);
  };
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_number = [&]() -> std::uint64_t {
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (v > (~std::uint64_t{0} - 9) / 10) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    if (pos == start) fail("expected a number");
    return v;
  };

  skip_spaces();
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  std::map<std::uint64_t, std::uint64_t> entries;
  std::uint64_t k = 1;
  bool last_was_zero = false;
  while (true) {
    skip_spaces();
    const std::uint64_t v = read_number();
    skip_spaces();
    if (pos < text.size() && text[pos] == ':') {
      if (v != 0) fail("only zero runs may use the ':' form");
      ++pos;
      skip_spaces();
      const std::uint64_t run = read_number();
      if (run == 0) fail("zero run length must be positive");
      k += run;
      last_was_zero = true;
    } else {
      if (v != 0) entries[k] = v;
      last_was_zero = (v == 0);
      ++k;
    }
    skip_spaces();
    if (pos >= text.size()) fail("expected ',' or ']'");
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    if (text[pos] != ',') fail("expected ',' or ']'");
    ++pos;
  }
  skip_spaces();
  if (pos != text.size()) fail("unexpected trailing text");
  if (last_was_zero) fail("row must end with a nonzero entry");
  return CycleSpectrum::from_entries(n, std::move(entries));
}

// ---------------------------------------------------------------------------
// Verification reports.

struct NResult {
  std::size_t n = 0;
  bool pass = false;
  std::uint64_t count = 0;               // claim-specific tally (usually fixed points)
  std::optional<Permutation> witness;    // always present on failure
  std::string detail;
};

struct VerificationReport {
  std::string claim;
  std::size_t first_n = 0;
  std::size_t last_n = 0;
  std::vector<NResult> results;

  bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const NResult& r) { return r.pass; });
  }

  const NResult* first_failure() const {
    for (const auto& r : results) {
      if (!r.pass) return &r;
    }
    return nullptr;
  }
};

// Which composition a claim printed as "f_a o f_b^{-1}" is checked on.
// The appendix tables and the fixed-point theorems are only consistent with
// the f1/f2 definitions when f1 and f2 trade places; Reconciled applies that
// swap, AsPrinted takes the labels literally.
enum class Labels { AsPrinted, Reconciled };

inline Encoding resolve_label(Encoding printed, Labels labels) {
  if (labels == Labels::AsPrinted) return printed;
  if (printed == Encoding::F1) return Encoding::F2;
  if (printed == Encoding::F2) return Encoding::F1;
  return printed;
}

namespace detail {

inline std::optional<Permutation> first_difference(const std::vector<Permutation>& got,
                                                   const std::vector<Permutation>& want) {
  std::vector<Permutation> diff;
  std::set_symmetric_difference(got.begin(), got.end(), want.begin(), want.end(),
                                std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

// Compares a fixed-point set against an expected set and count.
inline NResult compare_sets(std::size_t n, std::vector<Permutation> got,
                            std::vector<Permutation> want, std::uint64_t expected_count) {
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  NResult r;
  r.n = n;
  r.count = got.size();
  r.witness = first_difference(got, want);
  r.pass = !r.witness && got.size() == expected_count;
  if (!r.pass && !r.witness) r.witness = got.empty() ? Permutation::identity(n) : got.front();
  r.detail = "count " + std::to_string(got.size()) + ", expected " + std::to_string(expected_count);
  if (got.size() <= 4) {
    r.detail += "; fixed:";
    for (const auto& p : got) r.detail += " " + to_string(p);
  }
  return r;
}

template <typename Check>
VerificationReport run_range(std::string claim, std::size_t first_n, std::size_t last_n,
                             Check&& check) {
  VerificationReport report{std::move(claim), first_n, last_n, {}};
  for (std::size_t n = first_n; n <= last_n; ++n) report.results.push_back(check(n));
  return report;
}

// Checks map(p) == expected(p) for every p in S_n.
template <typename Map, typename Expected>
NResult check_pointwise(std::size_t n, const ScanOptions& opts, Map&& map, Expected&& expected) {
  const std::uint64_t total = factorial(n);
  std::vector<std::optional<std::uint64_t>> first_bad(detail::chunk_count(total, opts.jobs));
  for_each_chunk(total, opts.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned chunk) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const auto p = permutation_at_index(k, n);
      if (map(p) != expected(p)) {
        first_bad[chunk] = k;
        return;
      }
    }
  });
  NResult r;
  r.n = n;
  r.count = total;
  r.pass = true;
  for (const auto& bad : first_bad) {
    if (bad) {
      r.pass = false;
      r.witness = permutation_at_index(*bad, n);
      r.detail = "mismatch at " + to_string(*r.witness);
      break;
    }
  }
  if (r.pass) r.detail = std::to_string(total) + " permutations checked";
  return r;
}

inline std::vector<Permutation> all_words_image(std::size_t n, Encoding e,
                                                bool (*keep)(const Word&)) {
  std::vector<Permutation> out;
  std::vector<int> letters(n, 1);
  do {
    const auto w = Word::unchecked(letters);
    if (keep(w)) out.push_back(encode(e, w));
  } while (next_word_lex(letters));
  return out;
}

}  // namespace detail

// Fixed points of f1 o f2^{-1} are exactly the reversals of involutions.
inline VerificationReport verify_f12_fixed_points(std::size_t first_n, std::size_t last_n,
                                                  const ScanOptions& opts = {}) {
  detail::check_scan_cap(last_n, opts.max_scan_n, "verify_f12_fixed_points");
  return detail::run_range(
      "fixed points of f1∘f2⁻¹ = reversed involutions, count I(n)", first_n, last_n,
      [&](std::size_t n) {
        std::vector<Permutation> want;
        const std::uint64_t total = factorial(n);
        for (std::uint64_t k = 0; k < total; ++k) {
          const auto t = permutation_at_index(k, n);
          if (is_involution(t)) want.push_back(reverse(t));
        }
        return detail::compare_sets(
            n, fixed_points(make_composition(Encoding::F1, Encoding::F2, n), opts),
            std::move(want), involution_count(n));
      });
}

// (f1 o f2^{-1})^2 is the identity.
inline VerificationReport verify_f12_order_two(std::size_t first_n, std::size_t last_n,
                                               const ScanOptions& opts = {}) {
  detail::check_scan_cap(last_n, opts.max_scan_n, "verify_f12_order_two");
  return detail::run_range("(f1∘f2⁻¹)² = identity", first_n, last_n, [&](std::size_t n) {
    const auto spec = make_composition(Encoding::F1, Encoding::F2, n);
    return detail::check_pointwise(
        n, opts, [&](const Permutation& p) { return apply(spec, apply(spec, p)); },
        [](const Permutation& p) { return p; });
  });
}

// f1 o f2^{-1} is conjugation of the inverse by the order-reversing permutation.
inline VerificationReport verify_f12_closed_form(std::size_t first_n, std::size_t last_n,
                                                 const ScanOptions& opts = {}) {
  detail::check_scan_cap(last_n, opts.max_scan_n, "verify_f12_closed_form");
  return detail::run_range(
      "f1∘f2⁻¹(σ) = reverse(complement(σ⁻¹))", first_n, last_n, [&](std::size_t n) {
        const auto spec = make_composition(Encoding::F1, Encoding::F2, n);
        return detail::check_pointwise(
            n, opts, [&](const Permutation& p) { return apply(spec, p); },
            [](const Permutation& p) { return reverse(complement(inverse(p))); });
      });
}

// Fixed points of X o f3^{-1} are {X(w) : w over {1,2}}, 2^{n-1} of them.
// Printed with X = f1.
inline VerificationReport verify_f13_fixed_points(std::size_t first_n, std::size_t last_n,
                                                  Labels labels, const ScanOptions& opts = {}) {
  detail::check_scan_cap(last_n, opts.max_scan_n, "verify_f13_fixed_points");
  const Encoding x = resolve_label(Encoding::F1, labels);
  return detail::run_range(
      "fixed points of " + std::string(encoding_name(x)) + "∘f3⁻¹ = {" +
          std::string(encoding_name(x)) + "(w) : w ∈ {1,2}ⁿ}, count 2^(n-1)",
      first_n, last_n, [&](std::size_t n) {
        auto want = detail::all_words_image(n, x, [](const Word& w) {
          return std::all_of(w.letters().begin(), w.letters().end(),
                             [](int l) { return l <= 2; });
        });
        return detail::compare_sets(n, fixed_points(make_composition(x, Encoding::F3, n), opts),
                                    std::move(want), std::uint64_t{1} << (n - 1));
      });
}

// Fixed points of X o f4^{-1} are {identity, 2134...n} for n >= 2.
// Printed with X = f2.
inline VerificationReport verify_f24_fixed_points(std::size_t first_n, std::size_t last_n,
                                                  Labels labels, const ScanOptions& opts = {}) {
  detail::check_scan_cap(last_n, opts.max_scan_n, "verify_f24_fixed_points");
  if (first_n < 2) throw InvalidInput("the f24 claim starts at n = 2");
  const Encoding x = resolve_label(Encoding::F2, labels);
  return detail::run_range(
      "fixed points of " + std::string(encoding_name(x)) + "∘f4⁻¹ = {12…n, 2134…n}", first_n,
      last_n, [&](std::size_t n) {
        std::vector<int> swapped(n);
        std::iota(swapped.begin(), swapped.end(), 1);
        std::swap(swapped[0], swapped[1]);
        std::vector<Permutation> want{Permutation::identity(n),
                                      Permutation::unchecked(std::move(swapped))};
        return detail::compare_sets(n, fixed_points(make_composition(x, Encoding::F4, n), opts),
                                    std::move(want), 2);
      });
}

// g1 o g2^{-1} is inversion; hence its fixed points are the involutions.
inline VerificationReport verify_g12(std::size_t first_n, std::size_t last_n,
                                     const ScanOptions& opts = {}) {
  detail::check_scan_cap(last_n, opts.max_scan_n, "verify_g12");
  return detail::run_range(
      "g1∘g2⁻¹(σ) = σ⁻¹ and fixed points = involutions", first_n, last_n, [&](std::size_t n) {
        const auto spec = make_composition(Encoding::G1, Encoding::G2, n);
        auto r = detail::check_pointwise(
            n, opts, [&](const Permutation& p) { return apply(spec, p); },
            [](const Permutation& p) { return inverse(p); });
        if (!r.pass) return r;
        std::vector<Permutation> want;
        const std::uint64_t total = factorial(n);
        for (std::uint64_t k = 0; k < total; ++k) {
          auto t = permutation_at_index(k, n);
          if (is_involution(t)) want.push_back(std::move(t));
        }
        return detail::compare_sets(n, fixed_points(spec, opts), std::move(want),
                                    involution_count(n));
      });
}

// Counts fixed points of f4 o X^{-1}; the conjecture says only the identity.
// Printed with X = f1.
inline VerificationReport conjecture_f41_scan(std::size_t first_n, std::size_t last_n,
                                              Labels labels, const ScanOptions& opts = {}) {
  detail::check_scan_cap(last_n, opts.max_scan_n, "conjecture_f41_scan");
  const Encoding x = resolve_label(Encoding::F1, labels);
  return detail::run_range(
      "fixed points of f4∘" + std::string(encoding_name(x)) + "⁻¹ = {identity}", first_n, last_n,
      [&](std::size_t n) {
        return detail::compare_sets(n, fixed_points(make_composition(Encoding::F4, x, n), opts),
                                    {Permutation::identity(n)}, 1);
      });
}

// ---------------------------------------------------------------------------
// h-sequence: number of ranks k with h1(k) = h2(k).

namespace detail {

// Counts k in [begin, end) (0-based) where the map built from the lex-ordered
// word and the map built from the second word order agree. Uses fixed arrays;
// this is the hot loop for n up to 12.
template <bool SecondIsRevlex>
std::uint64_t count_h_coincidences(std::size_t n, std::uint64_t begin, std::uint64_t end) {
  std::array<int, kMaxFactorialN + 1> lex{}, second{};
  auto fill = [n](std::array<int, kMaxFactorialN + 1>& digits, std::uint64_t r, bool revlex) {
    if (revlex) {
      for (std::size_t i = 1; i <= n; ++i) {
        digits[i] = static_cast<int>(r % i) + 1;
        r /= i;
      }
    } else {
      for (std::size_t i = n; i >= 1; --i) {
        digits[i] = static_cast<int>(r % i) + 1;
        r /= i;
      }
    }
  };
  fill(lex, begin, false);
  fill(second, begin, SecondIsRevlex);

  std::uint64_t hits = 0;
  std::array<int, kMaxFactorialN + 1> a{}, b{}, pool{};
  for (std::uint64_t k = begin; k < end; ++k) {
    // g1 on the lex word
    a[0] = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      const std::size_t at = static_cast<std::size_t>(lex[i] - 1);
      for (std::size_t j = i - 1; j > at; --j) a[j] = a[j - 1];
      a[at] = static_cast<int>(i);
    }
    // g2 on the second word
    for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<int>(v + 1);
    std::size_t remaining = n;
    bool equal = true;
    for (std::size_t i = n; i >= 1; --i) {
      const std::size_t at = static_cast<std::size_t>(second[i] - 1);
      b[i - 1] = pool[at];
      for (std::size_t j = at; j + 1 < remaining; ++j) pool[j] = pool[j + 1];
      --remaining;
      if (b[i - 1] != a[i - 1]) {
        equal = false;
        break;
      }
    }
    if (equal) ++hits;

    // advance lex odometer (w[n] fastest)
    for (std::size_t i = n; i >= 1; --i) {
      if (lex[i] < static_cast<int>(i)) {
        ++lex[i];
        break;
      }
      lex[i] = 1;
    }
    // advance the second odometer
    if constexpr (SecondIsRevlex) {
      for (std::size_t i = 1; i <= n; ++i) {
        if (second[i] < static_cast<int>(i)) {
          ++second[i];
          break;
        }
        second[i] = 1;
      }
    } else {
      second = lex;
    }
  }
  return hits;
}

template <bool SecondIsRevlex>
std::uint64_t h_count_impl(std::size_t n, const ScanOptions& opts) {
  if (n < 2) throw InvalidInput("h-sequence starts at n = 2");
  if (n > opts.max_sequence_n) {
    throw CapacityError("h-sequence: n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(opts.max_sequence_n));
  }
  const std::uint64_t total = factorial(n);
  std::vector<std::uint64_t> partial(chunk_count(total, opts.jobs), 0);
  for_each_chunk(total, opts.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned chunk) {
    partial[chunk] = count_h_coincidences<SecondIsRevlex>(n, begin, end);
  });
  std::uint64_t sum = 0;
  for (auto p : partial) sum += p;
  return sum;
}

}  // namespace detail

// Leaf numbering: h1 over lex-ordered words, h2 over right-to-left lex.
inline std::uint64_t h_fixed_count(std::size_t n, const ScanOptions& opts = {}) {
  return detail::h_count_impl<true>(n, opts);
}

// Alternative reading matching the printed n = 3 value tables: both maps
// number words in plain lex order. Equals the number of involutions.
inline std::uint64_t h_fixed_count_lex_lex(std::size_t n, const ScanOptions& opts = {}) {
  return detail::h_count_impl<false>(n, opts);
}

struct HSequenceRow {
  std::size_t n;
  std::uint64_t leaf_order;
  std::optional<std::uint64_t> lex_lex;  // only computed for n <= dual_max_n
};

inline std::vector<HSequenceRow> h_sequence(std::size_t max_n, const ScanOptions& opts = {},
                                            std::size_t dual_max_n = 8) {
  if (max_n > opts.max_sequence_n) {
    throw CapacityError("h-sequence: n = " + std::to_string(max_n) + " exceeds the cap " +
                        std::to_string(opts.max_sequence_n));
  }
  std::vector<HSequenceRow> rows;
  for (std::size_t n = 2; n <= max_n; ++n) {
    HSequenceRow row{n, h_fixed_count(n, opts), std::nullopt};
    if (n <= dual_max_n) row.lex_lex = h_fixed_count_lex_lex(n, opts);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace permlab
