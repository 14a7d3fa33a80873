#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weyldiag/root_system.hpp"

namespace weyldiag {

/// A word in the simple reflections: 1-based letters over a root system.
/// The empty word is legal and denotes the identity.
class Word {
 public:
  /// Throws DomainError if a letter is outside 1..rank.
  Word(std::shared_ptr<const RootSystem> system, std::vector<int> letters);

  const RootSystem& system() const noexcept { return *system_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const noexcept { return system_; }
  std::span<const int> letters() const noexcept { return letters_; }
  /// t, the number of letters.
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  /// Letter at 1-based position.
  int at(int position) const { return letters_.at(static_cast<std::size_t>(position - 1)); }

  /// Product of the letters, rightmost acting first (cached).
  const WeylElement& element() const noexcept { return element_; }
  /// True iff the cached product has length t.
  bool reduced() const noexcept { return element_.length() == size(); }

  /// The word made of the first `count` letters.
  Word prefix(int count) const;

  /// "1,2,1"; the empty word formats as "".
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.system_->type() == b.system_->type() && a.letters_ == b.letters_;
  }

 private:
  std::shared_ptr<const RootSystem> system_;
  std::vector<int> letters_;
  WeylElement element_;
};

/// Parses comma-separated integers, whitespace tolerated, "" -> empty.
/// Throws ParseError on a malformed token. Range is not checked here.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const int> values);

/// Parses a word and validates it against the system.
Word parse_word(std::shared_ptr<const RootSystem> system, std::string_view text);

/// The roots (beta_1, ..., beta_t) attached to the positions of a word.
struct RootSequence {
  std::vector<Root> betas;
};

/// True iff the length of the product equals the number of letters.
bool is_reduced(const Word& word);

/// beta_i = s_{alpha_1} ... s_{alpha_{i-1}}(alpha_i). Throws DomainError on
/// non-reduced input, naming the first position whose root is not positive.
RootSequence root_sequence(const Word& word);

/// Greedy left-descent word of w (smallest descent letter first).
Word reduced_word(const RootSystem& system, const WeylElement& w);

/// Reduced word of the longest element whose first t letters are `word`.
/// Throws DomainError if `word` is not reduced.
Word extend_to_w0(const Word& word);

/// Throws DomainError unless the word is reduced.
void require_reduced(const Word& word);

}  // namespace weyldiag
