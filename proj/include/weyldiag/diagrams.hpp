#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "weyldiag/root_system.hpp"
#include "weyldiag/words.hpp"

namespace weyldiag {

/// A subset of the positions 1..t of a word.
///
/// Admissible (Cauchon) diagrams are identified with the positive diagrams
/// throughout this library: the two notions coincide, so "admissible" is
/// always computed through the positivity tests below.
class Diagram {
 public:
  /// Positions are 1-based; they are sorted on construction. Throws
  /// DomainError for an out-of-range or repeated position.
  Diagram(Word word, std::vector<int> positions);

  /// Bit k of the mask selects position k + 1. Requires t <= 63.
  static Diagram from_mask(Word word, std::uint64_t mask);
  static Diagram full(Word word);

  const Word& word() const noexcept { return word_; }
  std::span<const int> positions() const noexcept { return positions_; }
  int size() const noexcept { return static_cast<int>(positions_.size()); }
  bool contains(int position) const noexcept;
  std::uint64_t mask() const;
  /// Positions of 1..t not in the diagram, increasing.
  std::vector<int> complement() const;

  /// "2,3"; the empty diagram formats as "".
  std::string to_string() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.positions_ == b.positions_ && a.word_ == b.word_;
  }

 private:
  Word word_;
  std::vector<int> positions_;
  std::vector<bool> member_;
};

Diagram parse_diagram(const Word& word, std::string_view text);

/// (v_0, ..., v_t) with v_0 = Id and v_i = v_{i-1} s^Delta_{alpha_{t-i+1}}.
struct SubexpressionTrace {
  std::vector<WeylElement> vs;
};

SubexpressionTrace subexpression(const Diagram& diagram);

/// Recovers the unique diagram whose trace is `trace`. Throws DomainError if
/// the sequence is not a subexpression of the reversed word.
Diagram diagram_of_trace(const Word& word, const SubexpressionTrace& trace);

/// zeta(Delta) = s_{alpha_{j_1}} ... s_{alpha_{j_s}} (left to right).
WeylElement zeta(const Diagram& diagram);
/// zeta'(Delta) = zeta(Delta)^{-1} = s_{alpha_{j_s}} ... s_{alpha_{j_1}}.
WeylElement zeta_prime(const Diagram& diagram);

/// Marsh-Rietsch form: every step of the subexpression trace is an ascent,
/// l(v_{i-1} s_{alpha_{t-i+1}}) = l(v_{i-1}) + 1.
bool is_positive_by_subexpression(const Diagram& diagram);

/// Length form: for every j in 1..t, with Delta cap [j+1, t] = {j_1 < ... < j_s},
/// l(s_{alpha_j} s_{alpha_{j_1}} ... s_{alpha_{j_s}}) = 1 + s.
bool is_positive_by_length(const Diagram& diagram);

/// Positivity (equivalently admissibility). Debug builds evaluate both forms
/// and throw std::logic_error if they disagree.
bool is_positive(const Diagram& diagram);

/// Left-to-right descent recursion: position i+1 is taken iff
/// u_i^{-1}(alpha_{i+1}) is negative, then u_{i+1} = s_{alpha_{i+1}} u_i.
/// Returns nullopt when the residual element is not the identity (u is not
/// below the word's element in Bruhat order).
std::optional<Diagram> diagram_for(const Word& word, const WeylElement& u);

/// All products of subwords of `word`, computed right to left by closing
/// {Id} under left multiplication by each letter.
std::unordered_set<WeylElement, WeylElementHash> subword_products(const Word& word);

/// True iff some subword of `word` multiplies to u. Independent of
/// diagram_for.
bool bruhat_leq_oracle(const Word& word, const WeylElement& u);

/// u <= v in Bruhat order, via diagram_for over a reduced word of v.
bool bruhat_leq(const RootSystem& system, const WeylElement& u, const WeylElement& v);

/// Root recursion over the complement positions between j and m.
struct GammaTrace {
  int j = 0;
  int m = 0;
  /// l_1 < ... < l_p: positions of [j+1, m-1] not in the diagram.
  std::vector<int> ls;
  /// gamma_1, ..., gamma_{p+1}; gamma_{p+1} = beta_m.
  std::vector<Root> gammas;
  /// a_i = (beta_{l_i}^vee, gamma_{i+1}).
  std::vector<int> as;
};

struct ObstructionResult {
  bool applicable = false;
  /// beta_j + beta_m == sum a_i beta_{l_i}; certifies non-positivity.
  bool violated = false;
  std::optional<GammaTrace> trace;
};

/// Requires j < m and m in the diagram (DomainError otherwise). Applicable
/// iff the complement meets [j+1, m-1].
ObstructionResult positivity_obstruction(const Diagram& diagram, int j, int m);

/// Checks the two identities a GammaTrace must satisfy:
///   gamma_1 = beta_m - a_p beta_{l_p} - ... - a_1 beta_{l_1}, and
///   gamma_i = w'_i(alpha_m), where w'_i is the product of the first m-1
///   letters with the letters at l_i, ..., l_p removed.
bool gamma_trace_consistent(const Word& word, const GammaTrace& trace);

}  // namespace weyldiag
