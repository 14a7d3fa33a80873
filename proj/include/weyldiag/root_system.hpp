#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace weyldiag {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan-Killing type of a finite irreducible root system.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Throws DomainError naming the family and its allowed ranks.
  void validate() const;

  /// "A2", "G2", ...
  std::string name() const;

  /// Parses a family letter (case-insensitive).
  static Family parse_family(std::string_view text);

  /// Parses "A2", "d4", ...
  static CartanType parse(std::string_view text);

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Allowed ranks of a family, as human-readable text ("n >= 2", "6, 7, 8").
std::string allowed_ranks(Family family);

/// Element of the root lattice, written in the simple-root basis.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  /// The i-th simple root (0-based index) of a rank-n lattice.
  static Root simple(int n, int index);
  static Root zero(int n) { return Root(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int rank() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const int> coeffs() const noexcept { return coeffs_; }
  int operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  int height() const noexcept;
  bool is_zero() const noexcept;
  /// Nonzero with all coefficients >= 0.
  bool is_positive() const noexcept;
  /// Nonzero with all coefficients <= 0.
  bool is_negative() const noexcept;

  Root operator-() const;
  Root& operator+=(const Root& other);
  Root& operator-=(const Root& other);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator*(int k, Root a);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  /// "[1,0,1]"
  std::string to_string() const;

 private:
  std::vector<int> coeffs_;
};

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

/// Element of the Weyl group, stored as its action on the root lattice.
///
/// Column c of the matrix holds the image of the simple root alpha_{c+1}.
/// Two elements are equal iff their matrices are equal; the length is cached
/// at construction by the owning RootSystem.
class WeylElement {
 public:
  WeylElement() = default;

  int rank() const noexcept { return rank_; }
  int length() const noexcept { return length_; }
  /// Row-major n x n action matrix.
  std::span<const int> matrix() const noexcept { return matrix_; }
  int at(int row, int col) const { return matrix_[static_cast<std::size_t>(row * rank_ + col)]; }

  Root apply(const Root& x) const;
  bool is_identity() const noexcept;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank_ == b.rank_ && a.matrix_ == b.matrix_;
  }
  /// Total order: by length, then lexicographically by matrix.
  friend bool operator<(const WeylElement& a, const WeylElement& b);

  std::string to_string() const;

 private:
  friend class RootSystem;
  friend WeylElement invert(const WeylElement& w);
  WeylElement(int rank, std::vector<int> matrix, int length)
      : rank_(rank), length_(length), matrix_(std::move(matrix)) {}

  int rank_ = 0;
  int length_ = 0;
  std::vector<int> matrix_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// Inverse of a Weyl group element (exact integer matrix inverse).
WeylElement invert(const WeylElement& w);

class Word;

/// A finite irreducible root system with its Weyl group arithmetic.
///
/// Immutable after construction; always held through shared_ptr so that words
/// can keep their system alive.
class RootSystem : public std::enable_shared_from_this<RootSystem> {
 public:
  static std::shared_ptr<const RootSystem> build(CartanType type);

  const CartanType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  /// N = number of positive roots.
  int positive_count() const noexcept { return static_cast<int>(positive_roots_.size()); }

  /// a_ij = <alpha_i^vee, alpha_j>, row-major, 0-based.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank() + j)]; }
  /// (alpha_i, alpha_j) with short roots of squared norm 2.
  int form(int i, int j) const { return form_[static_cast<std::size_t>(i * rank() + j)]; }

  /// Sorted by height, then by decreasing coefficient vector, so that the
  /// height-one block lists alpha_1, ..., alpha_n in order.
  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
  Root simple_root(int letter) const;

  /// (x, y) under the symmetrized form.
  int inner(const Root& x, const Root& y) const;
  bool is_root(const Root& x) const;
  /// Index of a positive root in positive_roots(), or -1.
  int positive_index(const Root& x) const;

  /// s_beta(x) = x - (beta^vee, x) beta. beta must be a root.
  Root reflect(const Root& beta, const Root& x) const;

  WeylElement identity() const;
  /// s_{alpha_letter}, 1-based letter.
  const WeylElement& simple_reflection(int letter) const;
  /// a o b (b acts first).
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;
  /// Product of simple reflections, rightmost letter acting first.
  WeylElement element_of_word(std::span<const int> letters) const;
  WeylElement element_of_word(const Word& word) const;
  /// Number of positive roots sent to negative roots.
  int length(const WeylElement& w) const;
  /// Unique element of maximal length, found by greedy ascent.
  const WeylElement& longest_element() const noexcept { return longest_; }

  /// Every element of W, found by breadth-first search over the simple
  /// reflections. Ordered by discovery (hence by length). Stops once more
  /// than `limit` elements are found.
  std::vector<WeylElement> enumerate_group(std::size_t limit = static_cast<std::size_t>(-1)) const;
  /// |W| by breadth-first search.
  std::size_t group_order() const { return enumerate_group().size(); }

  /// True for D3, which is accepted as an alias of A3.
  bool is_degenerate_alias() const noexcept { return type_.family == Family::D && type_.rank == 3; }

 private:
  explicit RootSystem(CartanType type);
  WeylElement make_element(std::vector<int> matrix) const;
  void check_letter(int letter) const;

  CartanType type_;
  std::vector<int> cartan_;
  std::vector<int> form_;
  std::vector<Root> positive_roots_;
  std::unordered_map<Root, int, RootHash> positive_lookup_;
  std::vector<WeylElement> simple_reflections_;
  WeylElement longest_;
};

}  // namespace weyldiag

template <>
struct std::hash<weyldiag::WeylElement> : weyldiag::WeylElementHash {};
template <>
struct std::hash<weyldiag::Root> : weyldiag::RootHash {};
