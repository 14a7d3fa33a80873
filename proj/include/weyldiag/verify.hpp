#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weyldiag/diagrams.hpp"
#include "weyldiag/root_system.hpp"
#include "weyldiag/words.hpp"

namespace weyldiag {

/// Largest word length an exhaustive sweep accepts by default (2^24 diagrams).
inline constexpr int kDefaultSweepCap = 24;
/// Environment variable overriding the sweep cap.
inline constexpr const char* kSweepCapEnv = "WEYLDIAG_SWEEP_CAP";

/// kDefaultSweepCap unless the environment overrides it. Throws ParseError
/// on a malformed value.
int sweep_cap_from_env();

struct SweepOptions {
  int cap = kDefaultSweepCap;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Throws SizeCapError when t exceeds the cap.
void check_sweep(const Word& word, int cap);

/// Masks in [0, 2^t) accepted by `keep`, ascending. `keep` must be safe to
/// call concurrently; ranges are split across workers and merged in order.
std::vector<std::uint64_t> sweep_masks(int t, const SweepOptions& options,
                                       const std::function<bool(std::uint64_t)>& keep);

/// All positive diagrams, ascending by bitmask.
std::vector<Diagram> enumerate_positive(const Word& word, const SweepOptions& options = {});

/// {u : u <= w}, sorted by (length, matrix). Computed as the zeta-image of
/// the positive diagrams; debug builds also compare it with the set of
/// subword products and throw std::logic_error on mismatch.
std::vector<WeylElement> bruhat_interval(const Word& word, const SweepOptions& options = {});

/// Statistics for the open order-preservation question: over pairs of
/// positive diagrams D1 strictly inside D2, how often zeta(D1) <= zeta(D2).
/// Reported, never asserted.
struct OrderExperiment {
  std::size_t inclusion_pairs = 0;
  std::size_t bruhat_preserved = 0;
};

struct VerificationReport {
  std::string type;
  std::vector<int> word;
  int length = 0;
  std::uint64_t total_diagrams = 0;
  std::size_t positive_count = 0;
  std::size_t interval_count = 0;
  /// zeta is injective on positive diagrams and its image is the interval.
  bool bijection_ok = false;
  /// diagram_for inverts zeta both ways; zeta' agrees with the trace.
  bool roundtrip_ok = false;
  /// Subexpression and length forms of positivity agree on all 2^t diagrams.
  bool dual_test_ok = false;
  /// Traces determine their diagrams.
  bool subexpression_ok = false;
  /// Positivity over a prefix word matches positivity over the full word.
  bool prefix_ok = false;
  /// s_{alpha_i} s_{alpha_{j_c}} ... s_{alpha_{j_s}} is reduced for positive
  /// diagrams and every i.
  bool reduced_expression_ok = false;
  /// Certificates only occur on non-positive diagrams; gamma traces satisfy
  /// both identities.
  bool obstruction_ok = false;
  std::size_t obstruction_certificates = 0;
  /// diagram_for presence matches the subword oracle on all of W. Absent
  /// when W is larger than the enumeration limit.
  std::optional<bool> oracle_ok;
  /// Present only for quantum-matrices words.
  std::optional<bool> le_equivalence_ok;
  std::optional<OrderExperiment> order_experiment;
  std::vector<std::string> warnings;
  std::chrono::milliseconds elapsed{0};

  /// Every boolean that is present is true.
  bool all_ok() const;
};

struct VerifyOptions {
  SweepOptions sweep;
  bool order_experiment = false;
  /// Skip the all-of-W oracle check above this many elements.
  std::size_t group_limit = 100000;
};

VerificationReport verify_word(const Word& word, const VerifyOptions& options = {});

/// JSON with keys in a fixed order; `elapsed_ms` only when requested.
std::string to_json(const VerificationReport& report, bool include_elapsed = false);

struct CensusResult {
  CartanType type;
  std::vector<int> word;
  int positive_roots = 0;
  std::size_t positive_count = 0;
  std::size_t group_order = 0;

  bool ok() const { return positive_count == group_order; }
};

/// Positive diagrams over a reduced word of w0 (extended from the empty
/// word) against |W| from breadth-first search.
CensusResult longest_word_census(CartanType type, const SweepOptions& options = {});

std::string to_json(const CensusResult& census);

}  // namespace weyldiag
