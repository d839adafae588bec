#pragma once

// Published n = 3 value tables, cycle-spectrum rows for n = 1..7, and the
// h-sequence, embedded verbatim so checks never need network access.

#include <array>
#include <cstdint>
#include <string_view>

#include "permlab/analysis.hpp"
#include "permlab/bijections.hpp"

namespace permlab::reference {

// word | f2 | f1
struct ValueRow {
  std::string_view word;
  std::string_view first;
  std::string_view second;
};

inline constexpr std::array<ValueRow, 6> kTable1 = {{
    {"1,1,1", "1,2,3", "1,2,3"},
    {"1,1,2", "2,1,3", "1,3,2"},
    {"1,1,3", "3,1,2", "3,1,2"},
    {"1,2,1", "1,3,2", "2,1,3"},
    {"1,2,2", "2,3,1", "2,3,1"},
    {"1,2,3", "3,2,1", "3,2,1"},
}};

// word | g2 | g1
inline constexpr std::array<ValueRow, 6> kTable2 = {{
    {"1,1,1", "3,2,1", "3,2,1"},
    {"1,1,2", "3,1,2", "2,3,1"},
    {"1,1,3", "2,1,3", "2,1,3"},
    {"1,2,1", "2,3,1", "3,1,2"},
    {"1,2,2", "1,3,2", "1,3,2"},
    {"1,2,3", "1,2,3", "1,2,3"},
}};

struct CycleLeaf {
  std::string_view word;
  std::string_view cycles;
};

// Leaves of the n = 3 trees for f3 and f4, written as canonical cycle text.
inline constexpr std::array<CycleLeaf, 6> kFigureF3 = {{
    {"1,1,1", "(1)(2)(3)"},
    {"1,2,1", "(1)(2 3)"},
    {"1,1,2", "(1 2)(3)"},
    {"1,2,2", "(1 2 3)"},
    {"1,1,3", "(1 3)(2)"},
    {"1,2,3", "(1 3 2)"},
}};

inline constexpr std::array<CycleLeaf, 6> kFigureF4 = {{
    {"1,1,1", "(1)(2)(3)"},
    {"1,1,2", "(1 3)(2)"},
    {"1,1,3", "(1)(2 3)"},
    {"1,2,1", "(1 2)(3)"},
    {"1,2,2", "(1 3 2)"},
    {"1,2,3", "(1 2 3)"},
}};

// The printed n = 3 rank tables. Under leaf numbering h1 and h2 do not
// reproduce these; they are g2 and g1 respectively, both in lex word order.
inline constexpr std::array<std::string_view, 6> kPrintedTable3 = {
    "3,2,1", "3,1,2", "2,1,3", "2,3,1", "1,3,2", "1,2,3"};
inline constexpr std::array<std::string_view, 6> kPrintedTable4 = {
    "3,2,1", "2,3,1", "2,1,3", "3,1,2", "1,3,2", "1,2,3"};

struct SpectrumTable {
  int number;
  // composition named in the caption
  Encoding printed_outer;
  Encoding printed_inner;
  std::array<std::string_view, 7> rows;  // n = 1..7
};

inline constexpr std::array<SpectrumTable, 5> kSpectrumTables = {{
    {5,
     Encoding::F1,
     Encoding::F3,
     {"[1]", "[2]", "[4, 2]", "[8, 6, 0, 4, 0, 6]",
      "[16, 16, 12, 28, 0, 18, 0, 8, 0, 10, 0, 12]",
      "[32, 44, 36, 84, 0, 48, 0, 24, 18, 30, 0, 36, 0, 14, 0: 28, 86, 88, 0: 3, 96, 0: 35, 84]",
      "[64, 120, 102, 244, 0, 156, 14, 64, 54, 100, 0, 96, 26, 56, 0, 16, 0: 5, 22, 0: 3, 52, "
      "54, 56, 0: 7, 72, 0: 6, 258, 264, 0: 3, 288, 0: 11, 60, 0: 5, 132, 0: 9, 76, 0: 3, 160, "
      "0: 3, 420, 0: 6, 182, 92, 0: 75, 168, 0: 57, 226, 0: 11, 476, 0: 5, 488, 0: 137, 382]"}},
    {6,
     Encoding::F1,
     Encoding::F4,
     {"[1]", "[2]", "[1, 0: 3, 5]", "[1, 2, 0, 4, 0: 12, 17]",
      "[1, 2, 0: 7, 20, 0: 7, 18, 0: 60, 79]", "[1, 0: 2, 4, 5, 0: 704, 710]",
      "[1, 2, 0: 13, 16, 0: 191, 208, 0: 276, 485, 0: 66, 552, 0: 1297, 1850, 0: 75, 1926]"}},
    {7,
     Encoding::F2,
     Encoding::F3,
     {"[1]", "[2]", "[2, 4]", "[5, 8, 6, 0, 5]",
      "[4, 24, 3, 0: 2, 18, 0: 2, 9, 10, 0: 10, 21, 0: 9, 31]",
      "[12, 54, 9, 0, 5, 54, 0: 3, 20, 0: 3, 14, 0: 3, 18, 0: 20, 39, 0: 2, 42, 0: 4, 47, 0: "
      "10, 58, 0: 3, 62, 0: 223, 286]",
      "[11, 140, 3, 0, 5, 174, 7, 0, 9, 80, 0: 2, 13, 28, 0: 3, 36, 0: 2, 21, 0: 9, 31, 0: 10, "
      "84, 0: 15, 116, 0: 3, 124, 0: 15, 78, 0: 15, 94, 0: 148, 243, 0: 42, 572, 0: 183, 470, "
      "0: 2230, 2701]"}},
    {8,
     Encoding::F2,
     Encoding::F4,
     {"[1]", "[2]", "[2, 0: 2, 4]", "[2, 0, 6, 4, 0, 12]", "[2, 0, 6, 4, 0, 12, 0: 17, 96]",
      "[2, 0, 6, 4, 20, 12, 0: 3, 40, 0: 9, 60, 0: 3, 96, 0: 5, 180, 0: 29, 120, 0: 29, 180]",
      "[2, 0, 6, 4, 20, 12, 0: 3, 40, 0, 48, 0: 7, 60, 0: 3, 192, 0: 5, 180, 0: 5, 216, 0: 11, "
      "624, 0: 11, 120, 0: 11, 720, 0: 17, 180, 0: 5, 672, 0: 11, 648, 0: 35, 864, 0: 71, "
      "432]"}},
    {9,
     Encoding::F3,
     Encoding::F4,
     {"[1]", "[2]", "[1, 2, 3]", "[2, 2, 9, 0: 7, 11]",
      "[3, 2, 9, 0: 2, 12, 14, 0: 2, 10, 0, 12, 0: 10, 23, 0: 11, 35]",
      "[4, 4, 27, 0, 10, 24, 7, 0, 9, 0: 7, 17, 0: 9, 27, 0: 13, 41, 0: 4, 46, 0: 28, 75, 0, "
      "77, 0: 7, 85, 0: 4, 90, 0: 86, 177]",
      "[7, 6, 36, 0, 10, 96, 0: 2, 9, 0: 9, 19, 40, 0: 3, 24, 25, 26, 0: 15, 42, 0: 18, 61, 0: "
      "23, 85, 0: 24, 110, 0, 112, 0: 10, 123, 124, 0: 87, 212, 0: 3, 216, 0: 43, 260, 0: 16, "
      "277, 0: 27, 305, 0: 85, 391, 0: 415, 807, 0: 809, 1617]"}},
}};

// Coincidence counts of h1 and h2 for n = 2, 3, ..., 13.
inline constexpr std::size_t kHSequenceOffset = 2;
inline constexpr std::array<std::uint64_t, 12> kHSequence = {2, 3, 3, 3, 10, 5, 4, 5, 13, 3, 6, 5};

// Compares computed spectra against every printed row up to max_n (at most 7).
// Each table's composition is taken from its caption through `labels`.
inline VerificationReport verify_spectrum_table(const SpectrumTable& table, std::size_t max_n,
                                                Labels labels, const ScanOptions& opts = {}) {
  const Encoding outer = resolve_label(table.printed_outer, labels);
  const Encoding inner = resolve_label(table.printed_inner, labels);
  const std::size_t last = std::min<std::size_t>(max_n, table.rows.size());
  VerificationReport report{"Table " + std::to_string(table.number) + " rows = spectrum of " +
                                std::string(encoding_name(outer)) + "∘" +
                                std::string(encoding_name(inner)) + "⁻¹",
                            1, last, {}};
  for (std::size_t n = 1; n <= last; ++n) {
    const auto detail = cycle_spectrum_detail(make_composition(outer, inner, n), opts);
    const std::string got = spectrum_to_paper_text(detail.spectrum);
    const std::string_view want = table.rows[n - 1];
    NResult r;
    r.n = n;
    r.pass = got == want;
    r.count = detail.spectrum.at(1);
    if (!r.pass) {
      const auto printed = spectrum_from_paper_text(want, n);
      // first length whose computed count differs and has a computed cycle
      for (const auto& [k, count] : detail.spectrum.entries()) {
        if (printed.at(k) != count) {
          r.witness = permutation_at_index(detail.representative.at(k), n);
          break;
        }
      }
      if (!r.witness) r.witness = permutation_at_index(0, n);
      r.detail = "computed " + got + " vs printed " + std::string(want);
    } else {
      r.detail = got;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace permlab::reference
