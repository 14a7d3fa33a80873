#include "weyldiag/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "weyldiag/errors.hpp"
#include "weyldiag/words.hpp"

namespace weyldiag {

namespace {

std::size_t hash_ints(std::span<const int> values) {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : values) {
    h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Symmetrized form in Bourbaki numbering, short roots of squared norm 2.
std::vector<int> bourbaki_form(const CartanType& type) {
  const int n = type.rank;
  std::vector<int> f(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return f[static_cast<std::size_t>(i * n + j)]; };
  auto link = [&](int i, int j, int value) {
    at(i, j) = value;
    at(j, i) = value;
  };

  for (int i = 0; i < n; ++i) at(i, i) = 2;

  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      // alpha_1..alpha_{n-1} long, alpha_n short.
      for (int i = 0; i + 1 < n; ++i) at(i, i) = 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      // alpha_1..alpha_{n-1} short, alpha_n long.
      at(n - 1, n - 1) = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      // 1-3-4-5-...-n with 2 attached to 4.
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      at(0, 0) = 4;
      at(1, 1) = 4;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      at(1, 1) = 6;
      link(0, 1, -3);
      break;
  }
  return f;
}

// Fraction-free determinant of the leading k x k block.
std::int64_t leading_minor(const std::vector<int>& m, int n, int k) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i * k + j)] = m[static_cast<std::size_t>(i * n + j)];
  auto el = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i * k + j)]; };
  std::int64_t prev = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (el(p, p) == 0) {
      int swap = -1;
      for (int r = p + 1; r < k; ++r) {
        if (el(r, p) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int c = 0; c < k; ++c) std::swap(el(p, c), el(swap, c));
      sign = -sign;
    }
    for (int r = p + 1; r < k; ++r) {
      for (int c = p + 1; c < k; ++c) {
        el(r, c) = (el(r, c) * el(p, p) - el(r, p) * el(p, c)) / prev;
      }
    }
    prev = el(p, p);
  }
  return sign * el(k - 1, k - 1);
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return g > 1 ? Fraction{n / g, d / g} : Fraction{n, d};
  }
  Fraction operator-(const Fraction& o) const { return make(num * o.den - o.num * den, den * o.den); }
  Fraction operator*(const Fraction& o) const { return make(num * o.num, den * o.den); }
  Fraction operator/(const Fraction& o) const { return make(num * o.den, den * o.num); }
};

}  // namespace

// ---------------------------------------------------------------------------
// CartanType

std::string allowed_ranks(Family family) {
  switch (family) {
    case Family::A:
      return "n >= 1";
    case Family::B:
    case Family::C:
      return "n >= 2";
    case Family::D:
      return "n >= 3";
    case Family::E:
      return "n in {6, 7, 8}";
    case Family::F:
      return "n = 4";
    case Family::G:
      return "n = 2";
  }
  return "";
}

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A:
      ok = rank >= 1;
      break;
    case Family::B:
    case Family::C:
      ok = rank >= 2;
      break;
    case Family::D:
      ok = rank >= 3;
      break;
    case Family::E:
      ok = rank >= 6 && rank <= 8;
      break;
    case Family::F:
      ok = rank == 4;
      break;
    case Family::G:
      ok = rank == 2;
      break;
  }
  if (!ok) {
    throw DomainError("invalid rank " + std::to_string(rank) + " for family " +
                      std::string(1, static_cast<char>(family)) + " (allowed: " +
                      allowed_ranks(family) + ")");
  }
}

std::string CartanType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

Family CartanType::parse_family(std::string_view text) {
  if (text.size() != 1) throw ParseError("unknown Cartan family '" + std::string(text) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw ParseError("unknown Cartan family '" + std::string(text) + "'");
  return static_cast<Family>(c);
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw ParseError("malformed Cartan type '" + std::string(text) + "'");
  CartanType t;
  t.family = parse_family(text.substr(0, 1));
  t.rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9' || t.rank > 1000) throw ParseError("malformed Cartan type '" + std::string(text) + "'");
    t.rank = t.rank * 10 + (c - '0');
  }
  return t;
}

// ---------------------------------------------------------------------------
// Root

Root Root::simple(int n, int index) {
  Root r = zero(n);
  r.coeffs_[static_cast<std::size_t>(index)] = 1;
  return r;
}

int Root::height() const noexcept { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const noexcept {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const noexcept {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c <= 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs_) c = -c;
  return r;
}

Root& Root::operator+=(const Root& other) {
  assert(rank() == other.rank());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Root& Root::operator-=(const Root& other) {
  assert(rank() == other.rank());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Root operator*(int k, Root a) {
  for (int& c : a.coeffs_) c *= k;
  return a;
}

std::string Root::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i];
  }
  out << ']';
  return out.str();
}

std::size_t RootHash::operator()(const Root& r) const noexcept { return hash_ints(r.coeffs()); }

// ---------------------------------------------------------------------------
// WeylElement

Root WeylElement::apply(const Root& x) const {
  assert(x.rank() == rank_);
  std::vector<int> out(static_cast<std::size_t>(rank_), 0);
  for (int r = 0; r < rank_; ++r) {
    int sum = 0;
    for (int c = 0; c < rank_; ++c) sum += at(r, c) * x[c];
    out[static_cast<std::size_t>(r)] = sum;
  }
  return Root(std::move(out));
}

bool WeylElement::is_identity() const noexcept {
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool operator<(const WeylElement& a, const WeylElement& b) {
  if (a.length_ != b.length_) return a.length_ < b.length_;
  return a.matrix_ < b.matrix_;
}

std::string WeylElement::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int r = 0; r < rank_; ++r) {
    if (r) out << ',';
    out << '[';
    for (int c = 0; c < rank_; ++c) {
      if (c) out << ',';
      out << at(r, c);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept { return hash_ints(w.matrix()); }

WeylElement invert(const WeylElement& w) {
  const int n = w.rank();
  std::vector<Fraction> a(static_cast<std::size_t>(n * 2 * n));
  auto el = [&](int r, int c) -> Fraction& { return a[static_cast<std::size_t>(r * 2 * n + c)]; };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) el(r, c) = Fraction{w.at(r, c), 1};
    el(r, n + r) = Fraction{1, 1};
  }
  for (int p = 0; p < n; ++p) {
    int pivot = p;
    while (pivot < n && el(pivot, p).num == 0) ++pivot;
    if (pivot == n) throw DomainError("singular matrix cannot be a Weyl group element");
    if (pivot != p)
      for (int c = 0; c < 2 * n; ++c) std::swap(el(p, c), el(pivot, c));
    const Fraction lead = el(p, p);
    for (int c = 0; c < 2 * n; ++c) el(p, c) = el(p, c) / lead;
    for (int r = 0; r < n; ++r) {
      if (r == p || el(r, p).num == 0) continue;
      const Fraction factor = el(r, p);
      for (int c = 0; c < 2 * n; ++c) el(r, c) = el(r, c) - factor * el(p, c);
    }
  }
  std::vector<int> inv(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Fraction& f = el(r, n + c);
      if (f.den != 1) throw DomainError("inverse is not integral; not a Weyl group element");
      inv[static_cast<std::size_t>(r * n + c)] = static_cast<int>(f.num);
    }
  }
  return WeylElement(n, std::move(inv), w.length());
}

// ---------------------------------------------------------------------------
// RootSystem

std::shared_ptr<const RootSystem> RootSystem::build(CartanType type) {
  type.validate();
  return std::shared_ptr<const RootSystem>(new RootSystem(type));
}

RootSystem::RootSystem(CartanType type) : type_(type) {
  const int n = type.rank;
  form_ = bourbaki_form(type);
  cartan_.resize(form_.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int num = 2 * form(i, j);
      assert(num % form(i, i) == 0);
      cartan_[static_cast<std::size_t>(i * n + j)] = num / form(i, i);
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (leading_minor(form_, n, k) <= 0) throw DomainError("form of " + type.name() + " is not positive definite");
  }

  // Orbit of the simple roots under the simple reflections is all of Phi.
  std::unordered_set<Root, RootHash> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root a = Root::simple(n, i);
    seen.insert(a);
    queue.push_back(std::move(a));
  }
  while (!queue.empty()) {
    Root x = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += cartan(i, j) * x[j];
      Root y = x - pairing * Root::simple(n, i);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  for (const Root& r : seen) {
    assert(r.is_positive() || r.is_negative());
    if (r.is_positive()) positive_roots_.push_back(r);
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return b < a;
  });
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) positive_lookup_.emplace(positive_roots_[k], static_cast<int>(k));

  simple_reflections_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(j * n + j)] = 1;
      m[static_cast<std::size_t>(i * n + j)] -= cartan(i, j);
    }
    simple_reflections_.push_back(make_element(std::move(m)));
  }

  WeylElement w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 1; i <= n; ++i) {
      WeylElement next = compose(w, simple_reflection(i));
      if (next.length() > w.length()) {
        w = std::move(next);
        grew = true;
        break;
      }
    }
  }
  longest_ = std::move(w);
  assert(longest_.length() == positive_count());
}

WeylElement RootSystem::make_element(std::vector<int> matrix) const {
  WeylElement w(rank(), std::move(matrix), 0);
  w.length_ = length(w);
  return w;
}

void RootSystem::check_letter(int letter) const {
  if (letter < 1 || letter > rank()) {
    throw DomainError("letter " + std::to_string(letter) + " out of range 1.." + std::to_string(rank()) + " for " +
                      type_.name());
  }
}

Root RootSystem::simple_root(int letter) const {
  check_letter(letter);
  return Root::simple(rank(), letter - 1);
}

int RootSystem::inner(const Root& x, const Root& y) const {
  const int n = rank();
  int sum = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) sum += x[i] * form(i, j) * y[j];
  }
  return sum;
}

bool RootSystem::is_root(const Root& x) const {
  if (x.rank() != rank()) return false;
  return positive_lookup_.contains(x) || positive_lookup_.contains(-x);
}

int RootSystem::positive_index(const Root& x) const {
  auto it = positive_lookup_.find(x);
  return it == positive_lookup_.end() ? -1 : it->second;
}

Root RootSystem::reflect(const Root& beta, const Root& x) const {
  if (beta.rank() != rank() || x.rank() != rank()) throw DomainError("rank mismatch in reflection");
  if (beta.is_zero() || !is_root(beta)) throw DomainError("cannot reflect in " + beta.to_string() + ": not a root");
  const int num = 2 * inner(beta, x);
  const int den = inner(beta, beta);
  if (num % den != 0) throw DomainError("non-integral coroot pairing for " + x.to_string());
  return x - (num / den) * beta;
}

WeylElement RootSystem::identity() const {
  const int n = rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return WeylElement(n, std::move(m), 0);
}

const WeylElement& RootSystem::simple_reflection(int letter) const {
  check_letter(letter);
  return simple_reflections_[static_cast<std::size_t>(letter - 1)];
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const {
  const int n = rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const int ark = a.at(r, k);
      if (ark == 0) continue;
      for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r * n + c)] += ark * b.at(k, c);
    }
  }
  return make_element(std::move(m));
}

WeylElement RootSystem::element_of_word(std::span<const int> letters) const {
  for (int l : letters) check_letter(l);
  WeylElement w = identity();
  for (int l : letters) w = compose(w, simple_reflection(l));
  return w;
}

WeylElement RootSystem::element_of_word(const Word& word) const { return word.element(); }

int RootSystem::length(const WeylElement& w) const {
  const int n = rank();
  // Heights of w(alpha_c); w(alpha) is negative iff its height is.
  std::vector<int> col_heights(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) col_heights[static_cast<std::size_t>(c)] += w.at(r, c);
  int count = 0;
  for (const Root& a : positive_roots_) {
    int h = 0;
    for (int c = 0; c < n; ++c) h += col_heights[static_cast<std::size_t>(c)] * a[c];
    if (h < 0) ++count;
  }
  return count;
}

std::vector<WeylElement> RootSystem::enumerate_group(std::size_t limit) const {
  std::vector<WeylElement> elements{identity()};
  std::unordered_set<WeylElement, WeylElementHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size() && elements.size() <= limit; ++head) {
    for (int i = 1; i <= rank(); ++i) {
      WeylElement next = compose(elements[head], simple_reflection(i));
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace weyldiag
