#include "weyldiag/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "weyldiag/errors.hpp"
#include "weyldiag/grassmann.hpp"

namespace weyldiag {

int sweep_cap_from_env() {
  const char* raw = std::getenv(kSweepCapEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultSweepCap;
  const std::vector<int> value = parse_int_list(raw);
  if (value.size() != 1 || value.front() < 0 || value.front() > 62) {
    throw ParseError(std::string(kSweepCapEnv) + " must be an integer in 0..62");
  }
  return value.front();
}

void check_sweep(const Word& word, int cap) {
  if (word.size() > cap) throw SizeCapError(word.size(), cap);
}

std::vector<std::uint64_t> sweep_masks(int t, const SweepOptions& options,
                                       const std::function<bool(std::uint64_t)>& keep) {
  const std::uint64_t total = std::uint64_t{1} << t;
  unsigned workers = options.workers ? options.workers : std::max(1U, std::thread::hardware_concurrency());
  // Small sweeps are not worth a thread.
  if (total < (std::uint64_t{1} << 12)) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::vector<std::uint64_t>> chunks(workers);
  auto run = [&](unsigned k) {
    const std::uint64_t lo = total * k / workers;
    const std::uint64_t hi = total * (k + 1) / workers;
    for (std::uint64_t mask = lo; mask < hi; ++mask)
      if (keep(mask)) chunks[k].push_back(mask);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) threads.emplace_back(run, k);
  }
  std::vector<std::uint64_t> merged;
  for (auto& chunk : chunks) merged.insert(merged.end(), chunk.begin(), chunk.end());
  return merged;
}

std::vector<Diagram> enumerate_positive(const Word& word, const SweepOptions& options) {
  require_reduced(word);
  check_sweep(word, options.cap);
  const std::vector<std::uint64_t> masks =
      sweep_masks(word.size(), options, [&](std::uint64_t mask) { return is_positive(Diagram::from_mask(word, mask)); });
  std::vector<Diagram> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) out.push_back(Diagram::from_mask(word, mask));
  return out;
}

std::vector<WeylElement> bruhat_interval(const Word& word, const SweepOptions& options) {
  std::vector<WeylElement> images;
  for (const Diagram& d : enumerate_positive(word, options)) images.push_back(zeta(d));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
#ifndef NDEBUG
  const auto products = subword_products(word);
  const bool same = products.size() == images.size() &&
                    std::all_of(images.begin(), images.end(), [&](const WeylElement& u) { return products.contains(u); });
  if (!same) throw std::logic_error("zeta image and subword products disagree for (" + word.to_string() + ")");
#endif
  return images;
}

bool VerificationReport::all_ok() const {
  return bijection_ok && roundtrip_ok && dual_test_ok && subexpression_ok && prefix_ok && reduced_expression_ok &&
         obstruction_ok && oracle_ok.value_or(true) && le_equivalence_ok.value_or(true);
}

namespace {

// Checks every (j, m, Delta cap [j+1, m-1]) configuration once, then makes
// sure no positive diagram contains a violated configuration.
bool check_obstructions(const Word& word, const std::vector<std::uint64_t>& positive_masks, std::size_t& certificates) {
  const int t = word.size();
  // Key: (j, m, mask of Delta restricted to [j+1, m-1], shifted to bit 0).
  std::map<std::tuple<int, int, std::uint64_t>, bool> violated;
  bool ok = true;
  for (int j = 1; j < t; ++j) {
    for (int m = j + 1; m <= t; ++m) {
      const int gap = m - j - 1;
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << gap); ++sub) {
        const std::uint64_t mask = (sub << j) | (std::uint64_t{1} << (m - 1));
        const ObstructionResult r = positivity_obstruction(Diagram::from_mask(word, mask), j, m);
        if (!r.applicable) continue;
        ok = ok && gamma_trace_consistent(word, *r.trace);
        if (r.violated) {
          violated.emplace(std::make_tuple(j, m, sub), true);
          ++certificates;
        }
      }
    }
  }
  for (std::uint64_t mask : positive_masks) {
    for (int m = 2; m <= t; ++m) {
      if (!(mask >> (m - 1) & 1U)) continue;
      for (int j = 1; j < m; ++j) {
        const int gap = m - j - 1;
        const std::uint64_t sub = (mask >> j) & ((std::uint64_t{1} << gap) - 1);
        if (violated.contains(std::make_tuple(j, m, sub))) ok = false;
      }
    }
  }
  return ok;
}

bool reduced_expressions_hold(const Diagram& d) {
  const Word& word = d.word();
  const RootSystem& sys = word.system();
  const auto pos = d.positions();
  if (zeta(d).length() != d.size()) return false;
  for (int i = 1; i <= word.size(); ++i) {
    std::vector<int> letters{word.at(i)};
    for (int p : pos)
      if (p > i) letters.push_back(word.at(p));
    if (sys.element_of_word(std::span<const int>(letters)).length() != static_cast<int>(letters.size())) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_word(const Word& word, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_reduced(word);
  check_sweep(word, options.sweep.cap);
  const RootSystem& sys = word.system();
  const int t = word.size();

  VerificationReport report;
  report.type = sys.type().name();
  report.word.assign(word.letters().begin(), word.letters().end());
  report.length = t;
  report.total_diagrams = std::uint64_t{1} << t;
  if (sys.is_degenerate_alias()) report.warnings.push_back("D3 is accepted as an alias of A3");

  // Per-diagram checks: both positivity forms, trace recovery.
  std::vector<char> positive(report.total_diagrams, 0);
  std::vector<char> dual_mismatch(report.total_diagrams, 0);
  std::vector<char> trace_mismatch(report.total_diagrams, 0);
  const std::vector<std::uint64_t> positive_masks = sweep_masks(t, options.sweep, [&](std::uint64_t mask) {
    const Diagram d = Diagram::from_mask(word, mask);
    const bool by_length = is_positive_by_length(d);
    const bool by_trace = is_positive_by_subexpression(d);
    dual_mismatch[mask] = by_length != by_trace;
    trace_mismatch[mask] = !(diagram_of_trace(word, subexpression(d)) == d);
    positive[mask] = by_length;
    return by_length;
  });
  report.positive_count = positive_masks.size();
  report.dual_test_ok = std::none_of(dual_mismatch.begin(), dual_mismatch.end(), [](char c) { return c != 0; });
  report.subexpression_ok = std::none_of(trace_mismatch.begin(), trace_mismatch.end(), [](char c) { return c != 0; });

  // Bijection onto the subword-product interval.
  const auto interval = subword_products(word);
  report.interval_count = interval.size();
  std::unordered_map<WeylElement, std::uint64_t, WeylElementHash> image;
  bool injective = true;
  report.reduced_expression_ok = true;
  report.roundtrip_ok = true;
  for (std::uint64_t mask : positive_masks) {
    const Diagram d = Diagram::from_mask(word, mask);
    const WeylElement u = zeta(d);
    injective = image.emplace(u, mask).second && injective;
    report.reduced_expression_ok = report.reduced_expression_ok && reduced_expressions_hold(d);
    const auto back = diagram_for(word, u);
    report.roundtrip_ok = report.roundtrip_ok && back && *back == d && subexpression(d).vs.back() == zeta_prime(d);
  }
  report.bijection_ok = injective && image.size() == interval.size() &&
                        std::all_of(interval.begin(), interval.end(), [&](const WeylElement& u) { return image.contains(u); });
  for (const WeylElement& u : interval) {
    const auto d = diagram_for(word, u);
    report.roundtrip_ok = report.roundtrip_ok && d && zeta(*d) == u;
  }

  const std::vector<WeylElement> group = sys.enumerate_group(options.group_limit);
  if (group.size() <= options.group_limit) {
    report.oracle_ok = std::all_of(group.begin(), group.end(), [&](const WeylElement& u) {
      return diagram_for(word, u).has_value() == interval.contains(u);
    });
  }

  report.prefix_ok = true;
  for (int p = 1; p < t && report.prefix_ok; ++p) {
    const Word prefix = word.prefix(p);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      if (is_positive(Diagram::from_mask(prefix, mask)) != (positive[mask] != 0)) {
        report.prefix_ok = false;
        break;
      }
    }
  }

  report.obstruction_ok = check_obstructions(word, positive_masks, report.obstruction_certificates);

  if (const auto shape = quantum_matrices_shape_of(word)) {
    bool agree = true;
    for (std::uint64_t mask = 0; mask < report.total_diagrams && agree; ++mask) {
      const GridDiagram grid = GridDiagram::from_diagram(*shape, Diagram::from_mask(word, mask));
      agree = is_le_diagram(grid) == (positive[mask] != 0);
    }
    report.le_equivalence_ok = agree;
    if (shape->degenerate()) report.warnings.push_back("grid shape with p = 1 or m = 1 is outside 1 < p < n");
  }

  if (options.order_experiment) {
    OrderExperiment stats;
    std::vector<std::pair<std::uint64_t, Word>> reduced_images;
    for (std::uint64_t mask : positive_masks) {
      std::vector<int> letters;
      for (int k = 0; k < t; ++k)
        if (mask >> k & 1U) letters.push_back(word.at(k + 1));
      reduced_images.emplace_back(mask, Word(word.system_ptr(), std::move(letters)));
    }
    for (const auto& [small, small_word] : reduced_images) {
      for (const auto& [big, big_word] : reduced_images) {
        if (small == big || (small & big) != small) continue;
        ++stats.inclusion_pairs;
        if (diagram_for(big_word, small_word.element())) ++stats.bruhat_preserved;
      }
    }
    report.order_experiment = stats;
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::string to_json(const VerificationReport& report, bool include_elapsed) {
  nlohmann::ordered_json j;
  j["type"] = report.type;
  j["word"] = report.word;
  j["length"] = report.length;
  j["total_diagrams"] = report.total_diagrams;
  j["positive_count"] = report.positive_count;
  j["interval_count"] = report.interval_count;
  j["bijection_ok"] = report.bijection_ok;
  j["roundtrip_ok"] = report.roundtrip_ok;
  j["dual_test_ok"] = report.dual_test_ok;
  j["subexpression_ok"] = report.subexpression_ok;
  j["prefix_ok"] = report.prefix_ok;
  j["reduced_expression_ok"] = report.reduced_expression_ok;
  j["obstruction_ok"] = report.obstruction_ok;
  j["obstruction_certificates"] = report.obstruction_certificates;
  if (report.oracle_ok) j["oracle_ok"] = *report.oracle_ok;
  if (report.le_equivalence_ok) j["le_equivalence_ok"] = *report.le_equivalence_ok;
  if (report.order_experiment) {
    j["order_experiment"] = {{"inclusion_pairs", report.order_experiment->inclusion_pairs},
                             {"bruhat_preserved", report.order_experiment->bruhat_preserved}};
  }
  j["warnings"] = report.warnings;
  j["all_ok"] = report.all_ok();
  if (include_elapsed) j["elapsed_ms"] = report.elapsed.count();
  return j.dump(2);
}

CensusResult longest_word_census(CartanType type, const SweepOptions& options) {
  auto system = RootSystem::build(type);
  CensusResult result;
  result.type = type;
  result.positive_roots = system->positive_count();
  if (result.positive_roots > options.cap) throw SizeCapError(result.positive_roots, options.cap);
  const Word w0 = extend_to_w0(Word(system, {}));
  result.word.assign(w0.letters().begin(), w0.letters().end());
  result.positive_count = enumerate_positive(w0, options).size();
  result.group_order = system->group_order();
  return result;
}

std::string to_json(const CensusResult& census) {
  nlohmann::ordered_json j;
  j["type"] = census.type.name();
  j["word"] = census.word;
  j["positive_roots"] = census.positive_roots;
  j["positive_count"] = census.positive_count;
  j["group_order"] = census.group_order;
  j["ok"] = census.ok();
  return j.dump(2);
}

}  // namespace weyldiag
