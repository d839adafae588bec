#pragma once

// Chinese Restaurant and Feller-coupling word samplers, the Ewens sampling
// formula, and a chi-square harness comparing simulated cycle types to it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <nlohmann/json.hpp>

#include "permlab/bijections.hpp"
#include "permlab/perm_core.hpp"

namespace permlab {

struct EwensParams {
  double theta;
  std::size_t n;

  static EwensParams make(double theta, std::size_t n) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
      throw InvalidInput("theta must be a positive finite number");
    }
    if (n == 0) throw InvalidInput("n must be at least 1");
    return {theta, n};
  }
};

enum class Process { Crp, Feller };

inline std::string_view process_name(Process p) noexcept {
  return p == Process::Crp ? "crp" : "feller";
}

inline Process parse_process(std::string_view name) {
  if (name == "crp") return Process::Crp;
  if (name == "feller") return Process::Feller;
  throw InvalidInput("unknown process '" + std::string(name) + "' (expected crp or feller)");
}

// Seedable 64-bit source. Streams are split by seeding std::seed_seq with the
// master seed's two halves and the stream number's two halves.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// P(position i opens a new cycle) = theta / (theta + i - 1).
inline double new_cycle_probability(double theta, std::size_t i) {
  return theta / (theta + static_cast<double>(i) - 1.0);
}

// Exact per-letter law of crp_word: letter 1 with the new-cycle probability,
// letter j+1 (join after j) with 1/(theta+i-1) for each j in [1, i-1].
inline double crp_letter_probability(double theta, std::size_t i, int letter) {
  if (letter < 1 || static_cast<std::size_t>(letter) > i) return 0.0;
  if (i == 1) return 1.0;
  if (letter == 1) return new_cycle_probability(theta, i);
  return 1.0 / (theta + static_cast<double>(i) - 1.0);
}

// Law of feller_word: a success (letter 1) with the new-cycle probability,
// otherwise uniform over {2, ..., i}.
inline double feller_letter_probability(double theta, std::size_t i, int letter) {
  if (letter < 1 || static_cast<std::size_t>(letter) > i) return 0.0;
  if (i == 1) return 1.0;
  const double success = new_cycle_probability(theta, i);
  if (letter == 1) return success;
  return (1.0 - success) / static_cast<double>(i - 1);
}

namespace detail {

// Inverse-CDF draw over {new cycle, 1, ..., i-1} with weights theta, 1, ..., 1.
// Returns 0 for "new cycle", else j in [1, i-1]; the last bucket absorbs
// floating-point remainder.
inline std::size_t draw_seat(double theta, std::size_t i, Rng& rng) {
  const double x = rng.uniform01() * (theta + static_cast<double>(i) - 1.0);
  if (x < theta) return 0;
  const auto j = static_cast<std::size_t>(x - theta) + 1;
  return std::min(j, i - 1);
}

}  // namespace detail

// Letter 1 opens a new cycle; letter j+1 places i right after j. Feeds f4.
inline Word crp_word(const EwensParams& params, Rng& rng) {
  std::vector<int> letters(params.n, 1);
  for (std::size_t i = 2; i <= params.n; ++i) {
    const std::size_t j = detail::draw_seat(params.theta, i, rng);
    letters[i - 1] = j == 0 ? 1 : static_cast<int>(j) + 1;
  }
  return Word::unchecked(std::move(letters));
}

// Letter 1 is a Bernoulli success (close the open cycle); otherwise the
// letter picks uniformly among the i-1 unused values. Feeds f3.
inline Word feller_word(const EwensParams& params, Rng& rng) {
  std::vector<int> letters(params.n, 1);
  for (std::size_t i = 2; i <= params.n; ++i) {
    const double u = rng.uniform01();
    const double success = new_cycle_probability(params.theta, i);
    if (u < success) continue;
    const double rest = (u - success) / (1.0 - success);
    const auto pick = std::min(static_cast<std::size_t>(rest * static_cast<double>(i - 1)), i - 2);
    letters[i - 1] = static_cast<int>(pick) + 2;
  }
  return Word::unchecked(std::move(letters));
}

// ---------------------------------------------------------------------------
// Ewens sampling formula
//
//   P(a; theta) = n! / (theta (theta+1) ... (theta+n-1)) * prod_j theta^{a_j} / (j^{a_j} a_j!)
//
// evaluated in log space.

inline double ewens_log_pmf(const CycleType& t, double theta) {
  if (!t.valid()) throw InvalidInput("invalid cycle type " + to_string(t));
  if (!(theta > 0.0)) throw InvalidInput("theta must be positive");
  const std::size_t n = t.size();
  double log_p = std::lgamma(static_cast<double>(n) + 1.0);
  // rising factorial theta^(n) = Gamma(theta + n) / Gamma(theta)
  log_p -= std::lgamma(theta + static_cast<double>(n)) - std::lgamma(theta);
  for (std::size_t j = 1; j <= n; ++j) {
    const double a = t[j];
    if (a == 0) continue;
    log_p += a * std::log(theta) - a * std::log(static_cast<double>(j)) - std::lgamma(a + 1.0);
  }
  return log_p;
}

inline double ewens_pmf(const CycleType& t, double theta) { return std::exp(ewens_log_pmf(t, theta)); }

inline constexpr std::size_t kMaxPartitionN = 20;

// All cycle types of size n, largest part first in generation order.
inline std::vector<CycleType> partitions(std::size_t n) {
  if (n == 0) throw InvalidInput("n must be at least 1");
  if (n > kMaxPartitionN) {
    throw CapacityError("partition enumeration is capped at n = " + std::to_string(kMaxPartitionN));
  }
  std::vector<CycleType> out;
  CycleType current{std::vector<std::uint32_t>(n, 0)};
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      ++current.counts[part - 1];
      self(self, remaining - part, part);
      --current.counts[part - 1];
    }
  };
  recurse(recurse, n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Simulation

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
  std::size_t bins = 0;
};

// Pearson test. Categories whose expected count is below 5 are pooled into
// one bin; if that bin is still below 5 the smallest remaining categories are
// folded in until it is not (or nothing is left).
inline ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                       const std::vector<double>& probabilities,
                                       std::uint64_t trials) {
  const std::size_t m = observed.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  const auto n_trials = static_cast<double>(trials);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return probabilities[a] < probabilities[b];
  });
  double pooled_e = 0.0, pooled_o = 0.0;
  bool have_pool = false;
  std::size_t next = 0;
  while (next < m && (n_trials * probabilities[order[next]] < 5.0 || (have_pool && pooled_e < 5.0))) {
    pooled_e += n_trials * probabilities[order[next]];
    pooled_o += static_cast<double>(observed[order[next]]);
    have_pool = true;
    ++next;
  }
  ChiSquareResult r;
  auto add = [&](double o, double e) {
    ++r.bins;
    if (e > 0.0) r.statistic += (o - e) * (o - e) / e;
  };
  if (have_pool) add(pooled_o, pooled_e);
  for (; next < m; ++next) {
    add(static_cast<double>(observed[order[next]]), n_trials * probabilities[order[next]]);
  }
  if (r.bins < 2) {
    r.statistic = 0.0;
    r.dof = 0;
    r.p_value = 1.0;
    return r;
  }
  r.dof = r.bins - 1;
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

enum class StreamMode {
  Blocked,  // fixed-size blocks, one stream per block; identical for any job count
  Single,   // one generator, strictly sequential
};

inline constexpr std::uint64_t kTrialsPerBlock = 4096;

struct SimulationOptions {
  unsigned jobs = 1;
  StreamMode mode = StreamMode::Blocked;
};

struct SampleReport {
  Process process;
  double theta;
  std::size_t n;
  std::uint64_t trials;
  std::uint64_t seed;
  std::map<CycleType, std::uint64_t> histogram;
  std::map<CycleType, double> expected;
  ChiSquareResult fit;
};

namespace detail {

inline void sample_into(Process process, const EwensParams& params, std::uint64_t count, Rng& rng,
                        std::map<CycleType, std::uint64_t>& histogram) {
  for (std::uint64_t t = 0; t < count; ++t) {
    const Word w = process == Process::Crp ? crp_word(params, rng) : feller_word(params, rng);
    const Permutation p = process == Process::Crp ? from_cycle_form(f4(w))
                                                  : from_cycle_form(f3(w));
    const auto ones = static_cast<std::size_t>(
        std::count(w.letters().begin(), w.letters().end(), 1));
    // each letter 1 opens exactly one cycle
    if (cycle_count(p) != ones) throw std::logic_error("sampled cycle count disagrees with word");
    ++histogram[cycle_type(p)];
  }
}

}  // namespace detail

inline SampleReport simulate(Process process, const EwensParams& params, std::uint64_t trials,
                             std::uint64_t seed, const SimulationOptions& opts = {}) {
  if (trials == 0) throw InvalidInput("trials must be at least 1");
  const auto types = partitions(params.n);

  std::map<CycleType, std::uint64_t> histogram;
  if (opts.mode == StreamMode::Single) {
    Rng rng(seed);
    detail::sample_into(process, params, trials, rng, histogram);
  } else {
    const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
    const unsigned workers =
        static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.jobs, blocks)));
    std::vector<std::map<CycleType, std::uint64_t>> partial(workers);
    auto run = [&](unsigned w) {
      for (std::uint64_t b = w; b < blocks; b += workers) {
        Rng rng(seed, b);
        const std::uint64_t count = std::min(kTrialsPerBlock, trials - b * kTrialsPerBlock);
        detail::sample_into(process, params, count, rng, partial[w]);
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    }
    for (const auto& part : partial) {
      for (const auto& [type, count] : part) histogram[type] += count;
    }
  }

  SampleReport report{process, params.theta, params.n, trials, seed, {}, {}, {}};
  std::vector<std::uint64_t> observed;
  std::vector<double> probabilities;
  for (const auto& t : types) {
    const auto it = histogram.find(t);
    const std::uint64_t o = it == histogram.end() ? 0 : it->second;
    const double p = ewens_pmf(t, params.theta);
    report.expected[t] = p;
    if (o > 0) report.histogram[t] = o;
    observed.push_back(o);
    probabilities.push_back(p);
  }
  report.fit = chi_square_test(observed, probabilities, trials);
  return report;
}

inline nlohmann::ordered_json to_json(const SampleReport& r) {
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto& [t, count] : r.histogram) histogram[to_string(t)] = count;
  nlohmann::ordered_json expected = nlohmann::ordered_json::object();
  for (const auto& [t, p] : r.expected) expected[to_string(t)] = p;
  return {
      {"process", process_name(r.process)},
      {"theta", r.theta},
      {"n", r.n},
      {"trials", r.trials},
      {"seed", r.seed},
      {"histogram", std::move(histogram)},
      {"expected", std::move(expected)},
      {"chi_square", r.fit.statistic},
      {"dof", r.fit.dof},
      {"p_value", r.fit.p_value},
  };
}

}  // namespace permlab
