#include "weyldiag/diagrams.hpp"

#include <algorithm>
#include <stdexcept>

#include "weyldiag/errors.hpp"

namespace weyldiag {

// ---------------------------------------------------------------------------
// Diagram

Diagram::Diagram(Word word, std::vector<int> positions)
    : word_(std::move(word)), positions_(std::move(positions)), member_(static_cast<std::size_t>(word_.size()), false) {
  std::sort(positions_.begin(), positions_.end());
  for (int p : positions_) {
    if (p < 1 || p > word_.size()) {
      throw DomainError("position " + std::to_string(p) + " out of range 1.." + std::to_string(word_.size()));
    }
    if (member_[static_cast<std::size_t>(p - 1)]) throw DomainError("position " + std::to_string(p) + " repeated");
    member_[static_cast<std::size_t>(p - 1)] = true;
  }
}

Diagram Diagram::from_mask(Word word, std::uint64_t mask) {
  if (word.size() > 63) throw DomainError("bitmask diagrams require t <= 63");
  std::vector<int> positions;
  for (int k = 0; k < word.size(); ++k)
    if (mask >> k & 1U) positions.push_back(k + 1);
  if (word.size() < 64 && (mask >> word.size()) != 0) throw DomainError("mask has bits beyond the word length");
  return Diagram(std::move(word), std::move(positions));
}

Diagram Diagram::full(Word word) {
  std::vector<int> positions(static_cast<std::size_t>(word.size()));
  for (int k = 0; k < word.size(); ++k) positions[static_cast<std::size_t>(k)] = k + 1;
  return Diagram(std::move(word), std::move(positions));
}

bool Diagram::contains(int position) const noexcept {
  return position >= 1 && position <= word_.size() && member_[static_cast<std::size_t>(position - 1)];
}

std::uint64_t Diagram::mask() const {
  if (word_.size() > 63) throw DomainError("bitmask diagrams require t <= 63");
  std::uint64_t m = 0;
  for (int p : positions_) m |= std::uint64_t{1} << (p - 1);
  return m;
}

std::vector<int> Diagram::complement() const {
  std::vector<int> out;
  for (int p = 1; p <= word_.size(); ++p)
    if (!contains(p)) out.push_back(p);
  return out;
}

std::string Diagram::to_string() const { return format_int_list(positions_); }

Diagram parse_diagram(const Word& word, std::string_view text) { return Diagram(word, parse_int_list(text)); }

// ---------------------------------------------------------------------------
// Subexpressions and zeta

SubexpressionTrace subexpression(const Diagram& diagram) {
  const Word& word = diagram.word();
  require_reduced(word);
  const RootSystem& sys = word.system();
  const int t = word.size();
  SubexpressionTrace trace;
  trace.vs.reserve(static_cast<std::size_t>(t + 1));
  trace.vs.push_back(sys.identity());
  for (int i = 1; i <= t; ++i) {
    const int pos = t - i + 1;
    const WeylElement& prev = trace.vs.back();
    trace.vs.push_back(diagram.contains(pos) ? sys.compose(prev, sys.simple_reflection(word.at(pos))) : prev);
  }
  return trace;
}

Diagram diagram_of_trace(const Word& word, const SubexpressionTrace& trace) {
  const RootSystem& sys = word.system();
  const int t = word.size();
  if (static_cast<int>(trace.vs.size()) != t + 1 || !trace.vs.front().is_identity()) {
    throw DomainError("trace is not a subexpression: wrong size or v_0 != Id");
  }
  std::vector<int> positions;
  for (int i = 1; i <= t; ++i) {
    const int pos = t - i + 1;
    const WeylElement step = sys.compose(invert(trace.vs[static_cast<std::size_t>(i - 1)]),
                                         trace.vs[static_cast<std::size_t>(i)]);
    if (step == sys.simple_reflection(word.at(pos))) {
      positions.push_back(pos);
    } else if (!step.is_identity()) {
      throw DomainError("trace is not a subexpression at step " + std::to_string(i));
    }
  }
  return Diagram(word, std::move(positions));
}

WeylElement zeta(const Diagram& diagram) {
  const Word& word = diagram.word();
  require_reduced(word);
  const RootSystem& sys = word.system();
  WeylElement u = sys.identity();
  for (int p : diagram.positions()) u = sys.compose(u, sys.simple_reflection(word.at(p)));
  return u;
}

WeylElement zeta_prime(const Diagram& diagram) { return invert(zeta(diagram)); }

// ---------------------------------------------------------------------------
// Positivity

bool is_positive_by_subexpression(const Diagram& diagram) {
  const Word& word = diagram.word();
  const RootSystem& sys = word.system();
  const SubexpressionTrace trace = subexpression(diagram);
  const int t = word.size();
  for (int i = 1; i <= t; ++i) {
    const WeylElement& prev = trace.vs[static_cast<std::size_t>(i - 1)];
    const WeylElement up = sys.compose(prev, sys.simple_reflection(word.at(t - i + 1)));
    if (up.length() != prev.length() + 1) return false;
  }
  return true;
}

bool is_positive_by_length(const Diagram& diagram) {
  const Word& word = diagram.word();
  require_reduced(word);
  const RootSystem& sys = word.system();
  // tail = s_{alpha_{j_1}} ... s_{alpha_{j_s}} for Delta cap [j+1, t].
  WeylElement tail = sys.identity();
  int s = 0;
  for (int j = word.size(); j >= 1; --j) {
    const WeylElement& sj = sys.simple_reflection(word.at(j));
    WeylElement extended = sys.compose(sj, tail);
    if (extended.length() != 1 + s) return false;
    if (diagram.contains(j)) {
      tail = std::move(extended);
      ++s;
    }
  }
  return true;
}

bool is_positive(const Diagram& diagram) {
  const bool by_length = is_positive_by_length(diagram);
#ifndef NDEBUG
  if (by_length != is_positive_by_subexpression(diagram)) {
    throw std::logic_error("positivity tests disagree on diagram {" + diagram.to_string() + "} of word (" +
                           diagram.word().to_string() + ")");
  }
#endif
  return by_length;
}

// ---------------------------------------------------------------------------
// Bruhat order

std::optional<Diagram> diagram_for(const Word& word, const WeylElement& u) {
  require_reduced(word);
  const RootSystem& sys = word.system();
  if (u.rank() != sys.rank()) throw DomainError("element rank does not match the word's system");
  WeylElement residual = u;
  std::vector<int> positions;
  for (int pos = 1; pos <= word.size(); ++pos) {
    const int letter = word.at(pos);
    if (invert(residual).apply(sys.simple_root(letter)).is_negative()) {
      positions.push_back(pos);
      residual = sys.compose(sys.simple_reflection(letter), residual);
    }
  }
  if (!residual.is_identity()) return std::nullopt;
  return Diagram(word, std::move(positions));
}

std::unordered_set<WeylElement, WeylElementHash> subword_products(const Word& word) {
  const RootSystem& sys = word.system();
  std::unordered_set<WeylElement, WeylElementHash> reachable{sys.identity()};
  for (int pos = word.size(); pos >= 1; --pos) {
    const WeylElement& s = sys.simple_reflection(word.at(pos));
    std::vector<WeylElement> fresh;
    for (const WeylElement& x : reachable) {
      WeylElement y = sys.compose(s, x);
      if (!reachable.contains(y)) fresh.push_back(std::move(y));
    }
    reachable.insert(std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));
  }
  return reachable;
}

bool bruhat_leq_oracle(const Word& word, const WeylElement& u) {
  require_reduced(word);
  if (u.length() > word.size()) return false;
  return subword_products(word).contains(u);
}

bool bruhat_leq(const RootSystem& system, const WeylElement& u, const WeylElement& v) {
  return diagram_for(reduced_word(system, v), u).has_value();
}

// ---------------------------------------------------------------------------
// Gamma-sequence obstruction

ObstructionResult positivity_obstruction(const Diagram& diagram, int j, int m) {
  const Word& word = diagram.word();
  require_reduced(word);
  const int t = word.size();
  if (j < 1 || m > t || j >= m) {
    throw DomainError("obstruction requires 1 <= j < m <= t (got j=" + std::to_string(j) + ", m=" + std::to_string(m) +
                      ")");
  }
  if (!diagram.contains(m)) throw DomainError("obstruction requires m=" + std::to_string(m) + " in the diagram");

  ObstructionResult result;
  GammaTrace trace;
  trace.j = j;
  trace.m = m;
  for (int l = j + 1; l < m; ++l)
    if (!diagram.contains(l)) trace.ls.push_back(l);
  if (trace.ls.empty()) return result;

  const RootSystem& sys = word.system();
  const RootSequence seq = root_sequence(word);
  auto beta = [&](int pos) -> const Root& { return seq.betas[static_cast<std::size_t>(pos - 1)]; };

  const std::size_t p = trace.ls.size();
  trace.gammas.assign(p + 1, Root{});
  trace.as.assign(p, 0);
  trace.gammas[p] = beta(m);
  for (std::size_t i = p; i-- > 0;) {
    const Root& b = beta(trace.ls[i]);
    const Root& next = trace.gammas[i + 1];
    const int num = 2 * sys.inner(b, next);
    const int den = sys.inner(b, b);
    if (num % den != 0) throw std::logic_error("non-integral coroot pairing in gamma recursion");
    trace.as[i] = num / den;
    trace.gammas[i] = sys.reflect(b, next);
  }

  Root weighted = Root::zero(sys.rank());
  for (std::size_t i = 0; i < p; ++i) weighted += trace.as[i] * beta(trace.ls[i]);

  result.applicable = true;
  result.violated = (beta(j) + beta(m)) == weighted;
#ifndef NDEBUG
  if (!gamma_trace_consistent(word, trace)) {
    throw std::logic_error("gamma trace inconsistent with truncated products for j=" + std::to_string(j) +
                           ", m=" + std::to_string(m));
  }
#endif
  result.trace = std::move(trace);
  return result;
}

bool gamma_trace_consistent(const Word& word, const GammaTrace& trace) {
  const RootSystem& sys = word.system();
  const RootSequence seq = root_sequence(word);
  auto beta = [&](int pos) -> const Root& { return seq.betas[static_cast<std::size_t>(pos - 1)]; };
  const std::size_t p = trace.ls.size();
  if (trace.gammas.size() != p + 1 || trace.as.size() != p) return false;
  if (trace.gammas[p] != beta(trace.m)) return false;

  Root expected = beta(trace.m);
  for (std::size_t i = 0; i < p; ++i) expected -= trace.as[i] * beta(trace.ls[i]);
  if (trace.gammas.front() != expected) return false;

  const Root alpha_m = sys.simple_root(word.at(trace.m));
  for (std::size_t i = 0; i < p; ++i) {
    // Letters 1..m-1 with l_{i+1}, ..., l_p (1-based) removed.
    std::vector<int> kept;
    for (int pos = 1; pos < trace.m; ++pos) {
      if (std::find(trace.ls.begin() + static_cast<std::ptrdiff_t>(i), trace.ls.end(), pos) == trace.ls.end()) {
        kept.push_back(word.at(pos));
      }
    }
    if (sys.element_of_word(std::span<const int>(kept)).apply(alpha_m) != trace.gammas[i]) return false;
  }
  return true;
}

}  // namespace weyldiag
