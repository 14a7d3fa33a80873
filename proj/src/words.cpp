#include "weyldiag/words.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "weyldiag/errors.hpp"

namespace weyldiag {

Word::Word(std::shared_ptr<const RootSystem> system, std::vector<int> letters)
    : system_(std::move(system)), letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const int l = letters_[i];
    if (l < 1 || l > system_->rank()) {
      throw DomainError("letter " + std::to_string(l) + " at position " + std::to_string(i + 1) +
                        " out of range 1.." + std::to_string(system_->rank()) + " for " + system_->type().name());
    }
  }
  element_ = system_->element_of_word(std::span<const int>(letters_));
}

Word Word::prefix(int count) const {
  assert(count >= 0 && count <= size());
  return Word(system_, std::vector<int>(letters_.begin(), letters_.begin() + count));
}

std::string Word::to_string() const { return format_int_list(letters_); }

std::vector<int> parse_int_list(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::vector<int> out;
  bool blank = true;
  for (char c : text) blank = blank && is_space(c);
  if (blank) return out;

  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("malformed integer token '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_int_list(std::span<const int> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

Word parse_word(std::shared_ptr<const RootSystem> system, std::string_view text) {
  return Word(std::move(system), parse_int_list(text));
}

bool is_reduced(const Word& word) { return word.reduced(); }

void require_reduced(const Word& word) {
  if (!word.reduced()) {
    throw DomainError("word (" + word.to_string() + ") is not reduced in " + word.system().type().name());
  }
}

RootSequence root_sequence(const Word& word) {
  const RootSystem& sys = word.system();
  RootSequence seq;
  seq.betas.reserve(static_cast<std::size_t>(word.size()));
  std::unordered_set<Root, RootHash> seen;
  WeylElement prefix = sys.identity();
  for (int i = 1; i <= word.size(); ++i) {
    Root beta = prefix.apply(sys.simple_root(word.at(i)));
    if (!beta.is_positive() || seen.contains(beta)) {
      throw DomainError("word (" + word.to_string() + ") is not reduced: root " + beta.to_string() +
                        " at position " + std::to_string(i) + " is " +
                        (beta.is_positive() ? "repeated" : "negative"));
    }
    seen.insert(beta);
    seq.betas.push_back(std::move(beta));
    prefix = sys.compose(prefix, sys.simple_reflection(word.at(i)));
  }
  return seq;
}

Word reduced_word(const RootSystem& system, const WeylElement& w) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(w.length()));
  WeylElement rest = w;
  while (!rest.is_identity()) {
    const WeylElement rest_inv = invert(rest);
    int descent = 0;
    for (int i = 1; i <= system.rank(); ++i) {
      if (rest_inv.apply(system.simple_root(i)).is_negative()) {
        descent = i;
        break;
      }
    }
    assert(descent != 0);
    letters.push_back(descent);
    rest = system.compose(system.simple_reflection(descent), rest);
  }
  assert(static_cast<int>(letters.size()) == w.length());
  return Word(system.shared_from_this(), std::move(letters));
}

Word extend_to_w0(const Word& word) {
  require_reduced(word);
  const RootSystem& sys = word.system();
  const WeylElement w = sys.element_of_word(word);
  const Word suffix = reduced_word(sys, sys.compose(invert(w), sys.longest_element()));
  std::vector<int> letters(word.letters().begin(), word.letters().end());
  letters.insert(letters.end(), suffix.letters().begin(), suffix.letters().end());
  Word result(word.system_ptr(), std::move(letters));
  if (result.size() != sys.positive_count() || !is_reduced(result)) {
    throw std::logic_error("extension of (" + word.to_string() + ") is not a reduced word of w0");
  }
  return result;
}

}  // namespace weyldiag
