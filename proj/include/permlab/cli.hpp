#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 capacity exceeded.

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permlab/analysis.hpp"
#include "permlab/bijections.hpp"
#include "permlab/perm_core.hpp"
#include "permlab/reference_tables.hpp"
#include "permlab/stochastic.hpp"

namespace permlab::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

enum class Format { PaperText, Json, Csv };

using Json = nlohmann::ordered_json;

namespace detail {

inline Json artifact(std::string_view kind, std::size_t n, std::string_view outer,
                     std::string_view inner, Json data) {
  return Json{{"kind", kind},
              {"n", n},
              {"spec", {{"outer", outer}, {"inner", inner}}},
              {"data", std::move(data)}};
}

inline Json report_json(const VerificationReport& r) {
  Json results = Json::array();
  for (const auto& x : r.results) {
    Json row{{"n", x.n}, {"pass", x.pass}, {"count", x.count}, {"detail", x.detail}};
    if (x.witness) row["witness"] = to_string(*x.witness);
    results.push_back(std::move(row));
  }
  return Json{{"claim", r.claim},
              {"first_n", r.first_n},
              {"last_n", r.last_n},
              {"pass", r.passed()},
              {"results", std::move(results)}};
}

inline void print_report(std::ostream& out, const VerificationReport& r) {
  out << (r.passed() ? "PASS" : "FAIL") << "  " << r.claim << "  (n = " << r.first_n << ".."
      << r.last_n << ")\n";
  for (const auto& x : r.results) {
    out << "    n=" << x.n << (x.pass ? " ok   " : " FAIL ") << x.detail;
    if (!x.pass && x.witness) out << "  witness " << to_string(*x.witness);
    out << '\n';
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permlab: staircase-word encodings of S_n, their compositions, and Ewens sampling"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::PaperText;
  const std::map<std::string, Format> formats{
      {"paper-text", Format::PaperText}, {"json", Format::Json}, {"csv", Format::Csv}};
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_cap;
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs", jobs, "Worker threads for scans and sampling")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", seed, "Master seed for sampling");
  app.add_option("--max-cap", max_cap, "Raise the exhaustion cap for S_n scans and sequences");

  auto scan_options = [&] {
    ScanOptions o;
    o.jobs = jobs;
    if (max_cap) {
      o.max_scan_n = *max_cap;
      o.max_sequence_n = *max_cap;
    }
    return o;
  };

  // map ----------------------------------------------------------------------
  auto* map_cmd = app.add_subcommand("map", "Apply an encoding to a word or rank");
  std::string map_family, map_word;
  std::optional<std::uint64_t> map_rank;
  std::optional<std::size_t> map_n;
  map_cmd->add_option("--family", map_family, "f1 f2 f3 f4 g1 g2 h1 h2")->required();
  auto* word_opt = map_cmd->add_option("--word", map_word, "Word, e.g. 1,1,3");
  auto* rank_opt = map_cmd->add_option("--rank", map_rank, "Rank in [1, n!] (h1, h2)");
  map_cmd->add_option("--n", map_n, "Size for --rank");
  word_opt->excludes(rank_opt);

  // unmap --------------------------------------------------------------------
  auto* unmap_cmd = app.add_subcommand("unmap", "Invert an encoding on a permutation");
  std::string unmap_family, unmap_perm, unmap_cycles;
  unmap_cmd->add_option("--family", unmap_family, "f1 f2 f3 f4 g1 g2 h1 h2")->required();
  auto* perm_opt = unmap_cmd->add_option("--perm", unmap_perm, "One-line permutation, e.g. 3,1,2");
  auto* cyc_opt = unmap_cmd->add_option("--cycles", unmap_cycles, "Cycle form, e.g. (1 3)(2)");
  perm_opt->excludes(cyc_opt);

  // spectrum / fixed-points --------------------------------------------------
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Cycle spectrum of outer∘inner⁻¹");
  auto* fixed_cmd = app.add_subcommand("fixed-points", "Fixed points of outer∘inner⁻¹");
  std::string outer_name, inner_name;
  std::size_t comp_n = 0;
  for (auto* cmd : {spectrum_cmd, fixed_cmd}) {
    cmd->add_option("--outer", outer_name)->required();
    cmd->add_option("--inner", inner_name)->required();
    cmd->add_option("--n", comp_n)->required()->check(CLI::PositiveNumber);
  }

  // verify -------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check the structural claims");
  std::string suite = "all";
  std::size_t verify_max_n = 7;
  bool as_printed = false;
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"f12", "f13", "f24", "g12", "conjecture-f41", "tables", "all"}));
  verify_cmd->add_option("--max-n", verify_max_n)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--as-printed", as_printed,
                       "Check f1/f2-labelled claims with the labels exactly as printed");

  // sequence -----------------------------------------------------------------
  auto* seq_cmd = app.add_subcommand("sequence", "Integer sequences (h-fixed)");
  std::string seq_name = "h-fixed";
  std::size_t seq_max_n = 8;
  bool bfile = false, dual = false;
  seq_cmd->add_option("--name", seq_name)->check(CLI::IsMember({"h-fixed"}));
  seq_cmd->add_option("--max-n", seq_max_n)->check(CLI::Range(2u, 20u));
  seq_cmd->add_flag("--bfile", bfile, "Emit OEIS b-file lines 'n a(n)'");
  seq_cmd->add_flag("--dual", dual, "Also report the lex/lex numbering counts");

  // sample -------------------------------------------------------------------
  auto* sample_cmd = app.add_subcommand("sample", "Simulate CRP or Feller words and test vs Ewens");
  std::string process_str = "crp";
  double theta = 1.0;
  std::size_t sample_n = 1;
  std::uint64_t trials = 1;
  bool single_stream = false;
  sample_cmd->add_option("--process", process_str)->check(CLI::IsMember({"crp", "feller"}));
  sample_cmd->add_option("--theta", theta)->required();
  sample_cmd->add_option("--n", sample_n)->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  sample_cmd->add_flag("--single-stream", single_stream, "One sequential generator");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (map_cmd->parsed()) {
      const Encoding e = parse_encoding(map_family);
      Permutation p = Permutation::identity(1);
      if (is_rank_encoding(e)) {
        if (!map_rank || !map_n) throw InvalidInput(map_family + " needs --rank and --n");
        p = encode_rank(e, *map_rank, *map_n);
      } else {
        if (map_word.empty()) throw InvalidInput(map_family + " needs --word");
        p = encode(e, parse_word(map_word));
      }
      const std::string cycles = to_string(to_cycle_form(p));
      switch (format) {
        case Format::PaperText: out << to_string(p) << '\n' << cycles << '\n'; break;
        case Format::Csv: out << "one_line,cycles\n\"" << to_string(p) << "\"," << cycles << '\n'; break;
        case Format::Json:
          out << detail::artifact("map", p.size(), map_family, "",
                                  {{"one_line", to_string(p)}, {"cycles", cycles}})
                     .dump()
              << '\n';
          break;
      }
      return kOk;
    }

    if (unmap_cmd->parsed()) {
      const Encoding e = parse_encoding(unmap_family);
      if (unmap_perm.empty() && unmap_cycles.empty()) {
        throw InvalidInput("unmap needs --perm or --cycles");
      }
      const Permutation p = unmap_perm.empty() ? from_cycle_form(parse_cycle_form(unmap_cycles))
                                               : parse_permutation(unmap_perm);
      const std::string text = is_rank_encoding(e) ? std::to_string(decode_rank(e, p))
                                                   : to_string(decode(e, p));
      if (format == Format::Json) {
        out << detail::artifact("unmap", p.size(), unmap_family, "",
                                {{is_rank_encoding(e) ? "rank" : "word", text}})
                   .dump()
            << '\n';
      } else {
        out << text << '\n';
      }
      return kOk;
    }

    if (spectrum_cmd->parsed() || fixed_cmd->parsed()) {
      const auto spec =
          make_composition(parse_encoding(outer_name), parse_encoding(inner_name), comp_n);
      const auto opts = scan_options();
      if (spectrum_cmd->parsed()) {
        const auto s = cycle_spectrum(spec, opts);
        const std::string text = spectrum_to_paper_text(s);
        // golden path: the printed row must parse back to the same spectrum
        if (spectrum_from_paper_text(text, spec.n) != s) {
          throw std::logic_error("spectrum text does not round-trip");
        }
        switch (format) {
          case Format::PaperText: out << text << '\n'; break;
          case Format::Csv:
            out << "k,count\n";
            for (const auto& [k, c] : s.entries()) out << k << ',' << c << '\n';
            break;
          case Format::Json: {
            Json entries = Json::array();
            for (const auto& [k, c] : s.entries()) entries.push_back({k, c});
            out << detail::artifact("spectrum", spec.n, outer_name, inner_name,
                                    {{"paper_text", text}, {"entries", std::move(entries)}})
                       .dump()
                << '\n';
            break;
          }
        }
      } else {
        const auto fixed = fixed_points(spec, opts);
        switch (format) {
          case Format::PaperText:
            out << fixed.size() << " fixed point(s)\n";
            for (const auto& p : fixed) out << to_string(p) << '\n';
            break;
          case Format::Csv:
            out << "permutation\n";
            for (const auto& p : fixed) out << '"' << to_string(p) << "\"\n";
            break;
          case Format::Json: {
            Json list = Json::array();
            for (const auto& p : fixed) list.push_back(to_string(p));
            out << detail::artifact("fixed-points", spec.n, outer_name, inner_name,
                                    {{"count", fixed.size()}, {"fixed_points", std::move(list)}})
                       .dump()
                << '\n';
            break;
          }
        }
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const auto opts = scan_options();
      if (verify_max_n > opts.max_scan_n) {
        throw CapacityError("--max-n " + std::to_string(verify_max_n) +
                            " exceeds the exhaustion cap " + std::to_string(opts.max_scan_n));
      }
      const Labels labels = as_printed ? Labels::AsPrinted : Labels::Reconciled;
      const std::size_t m = verify_max_n;
      std::vector<VerificationReport> reports;
      auto want = [&](std::string_view name) { return suite == "all" || suite == name; };
      if (want("f12")) {
        reports.push_back(verify_f12_fixed_points(1, m, opts));
        reports.push_back(verify_f12_order_two(1, m, opts));
        reports.push_back(verify_f12_closed_form(1, m, opts));
      }
      if (want("f13")) reports.push_back(verify_f13_fixed_points(1, m, labels, opts));
      if (want("f24") && m >= 2) reports.push_back(verify_f24_fixed_points(2, m, labels, opts));
      if (want("g12")) reports.push_back(verify_g12(1, m, opts));
      // S_2 is fixed pointwise by every composition, so the reconciled scan
      // starts at 3; --as-printed keeps n = 2.
      const std::size_t conjecture_from = labels == Labels::AsPrinted ? 2 : 3;
      if (want("conjecture-f41") && m >= conjecture_from) {
        reports.push_back(conjecture_f41_scan(conjecture_from, m, labels, opts));
      }
      if (want("tables")) {
        for (const auto& t : reference::kSpectrumTables) {
          reports.push_back(reference::verify_spectrum_table(t, m, labels, opts));
        }
      }
      bool ok = true;
      Json all = Json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        if (format == Format::Json) {
          all.push_back(detail::report_json(r));
        } else {
          detail::print_report(out, r);
        }
      }
      if (format == Format::Json) {
        out << detail::artifact("verify", m, suite, labels == Labels::AsPrinted ? "as-printed" : "reconciled",
                                {{"pass", ok}, {"reports", std::move(all)}})
                   .dump()
            << '\n';
      } else {
        out << (ok ? "all claims pass" : "verification FAILED") << '\n';
      }
      if (!ok) {
        for (const auto& r : reports) {
          if (const auto* f = r.first_failure()) {
            err << "first failure: " << r.claim << " at n=" << f->n << ", witness "
                << to_string(*f->witness) << '\n';
            break;
          }
        }
      }
      return ok ? kOk : kVerifyFailed;
    }

    if (seq_cmd->parsed()) {
      const auto opts = scan_options();
      const std::size_t dual_max = dual ? seq_max_n : 0;
      const auto rows = h_sequence(seq_max_n, opts, dual_max);
      bool diverged = false;
      for (const auto& r : rows) {
        const std::size_t idx = r.n - reference::kHSequenceOffset;
        if (idx < reference::kHSequence.size() && reference::kHSequence[idx] != r.leaf_order) {
          diverged = true;
        }
      }
      if (format == Format::Json) {
        Json values = Json::array();
        for (const auto& r : rows) {
          Json row{{"n", r.n}, {"count", r.leaf_order}};
          if (r.lex_lex) row["lex_lex"] = *r.lex_lex;
          values.push_back(std::move(row));
        }
        out << detail::artifact("sequence", seq_max_n, seq_name, "",
                                {{"offset", reference::kHSequenceOffset}, {"values", std::move(values)}})
                   .dump()
            << '\n';
      } else if (format == Format::Csv || bfile) {
        if (format == Format::Csv) out << "n,count\n";
        for (const auto& r : rows) out << r.n << (format == Format::Csv ? "," : " ") << r.leaf_order << '\n';
      } else {
        for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? ", " : "") << rows[i].leaf_order;
        out << '\n';
        if (dual) {
          out << "n leaf_order lex_lex\n";
          for (const auto& r : rows) out << r.n << ' ' << r.leaf_order << ' ' << *r.lex_lex << '\n';
        }
      }
      if (diverged) {
        // divergence from the published values: always report both readings
        err << "warning: leaf-order counts diverge from the published sequence\n"
            << "n leaf_order lex_lex published\n";
        for (const auto& r : rows) {
          const std::size_t idx = r.n - reference::kHSequenceOffset;
          err << r.n << ' ' << r.leaf_order << ' '
              << (r.lex_lex ? std::to_string(*r.lex_lex) : std::to_string(h_fixed_count_lex_lex(r.n, opts)))
              << ' '
              << (idx < reference::kHSequence.size() ? std::to_string(reference::kHSequence[idx]) : "-")
              << '\n';
        }
      }
      return kOk;
    }

    if (sample_cmd->parsed()) {
      const auto params = EwensParams::make(theta, sample_n);
      const Process process = parse_process(process_str);
      SimulationOptions sopts;
      sopts.jobs = jobs;
      sopts.mode = single_stream ? StreamMode::Single : StreamMode::Blocked;
      const auto report = simulate(process, params, trials, seed, sopts);
      const std::string_view encoder = process == Process::Crp ? "f4" : "f3";
      switch (format) {
        case Format::Json:
          out << detail::artifact("sample", sample_n, encoder, process_name(process), to_json(report))
                     .dump()
              << '\n';
          break;
        case Format::Csv:
          out << "cycle_type,count,expected_probability\n";
          for (const auto& [t, p] : report.expected) {
            const auto it = report.histogram.find(t);
            out << '"' << to_string(t) << "\"," << (it == report.histogram.end() ? 0 : it->second)
                << ',' << p << '\n';
          }
          break;
        case Format::PaperText:
          out << "process " << process_name(process) << " -> " << encoder << ", theta " << theta
              << ", n " << sample_n << ", trials " << trials << ", seed " << seed << '\n';
          out << "cycle type        observed   expected\n";
          for (const auto& [t, p] : report.expected) {
            const auto it = report.histogram.find(t);
            const std::uint64_t o = it == report.histogram.end() ? 0 : it->second;
            std::ostringstream line;
            line << to_string(t);
            std::string label = line.str();
            if (label.size() < 16) label.resize(16, ' ');
            out << label << "  " << o << "   " << p * static_cast<double>(trials) << '\n';
          }
          out << "chi_square " << report.fit.statistic << ", dof " << report.fit.dof
              << ", p_value " << report.fit.p_value << '\n';
          break;
      }
      return kOk;
    }
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace permlab::cli
