#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weyldiag/diagrams.hpp"
#include "weyldiag/words.hpp"

namespace weyldiag {

/// A p x m rectangle of boxes; the ambient system is A_n with n = p + m - 1.
struct GridShape {
  int p = 1;
  int m = 1;

  int rank() const noexcept { return p + m - 1; }
  int box_count() const noexcept { return p * m; }
  /// p = 1 or m = 1: the word formula still gives a reduced word, but these
  /// shapes sit outside 1 < p < n.
  bool degenerate() const noexcept { return p == 1 || m == 1; }
  void validate() const;

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// Column-major label of box (row, col): (col - 1) p + row. Rows count from
/// the top, columns from the left, both 1-based.
int grid_position(const GridShape& shape, int row, int col);
std::pair<int, int> grid_box(const GridShape& shape, int position);

/// A filling of the p x m grid.
class GridDiagram {
 public:
  explicit GridDiagram(GridShape shape);
  /// Throws DomainError for a box outside the grid.
  GridDiagram(GridShape shape, const std::vector<std::pair<int, int>>& boxes);

  /// Linearizes through the column-major label map.
  static GridDiagram from_diagram(const GridShape& shape, const Diagram& diagram);
  static GridDiagram full(GridShape shape);

  const GridShape& shape() const noexcept { return shape_; }
  bool filled(int row, int col) const;
  void set(int row, int col, bool value = true);
  /// Filled boxes in label order.
  std::vector<std::pair<int, int>> boxes() const;
  std::vector<int> positions() const;

  /// "r,c r,c ..." in label order.
  std::string to_string() const;

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

 private:
  GridShape shape_;
  std::vector<bool> cells_;
};

/// Parses space-separated "r,c" pairs; "" is the empty grid.
GridDiagram parse_grid(const GridShape& shape, std::string_view text);

/// m descending runs; run c is (p+c-1, p+c-2, ..., c). Reduced, of length pm.
Word quantum_matrices_word(const GridShape& shape);

/// If `word` is the quantum-matrices word of some p x m shape over A_n,
/// returns that shape.
std::optional<GridShape> quantum_matrices_shape_of(const Word& word);

/// The grid as a diagram over quantum_matrices_word(shape).
Diagram to_diagram(const GridDiagram& grid);

/// Every filled (u, v) satisfies: for all i < u and j < v, (i, v) or (u, j)
/// is filled.
bool is_le_diagram(const GridDiagram& grid);

/// One-line notation [w(1), ..., w(n+1)] of a type-A element, with s_i the
/// transposition (i, i+1). Throws DomainError for other families.
std::vector<int> to_permutation(const RootSystem& system, const WeylElement& w);

/// v^Delta = zeta'(Delta) of the linearized grid, in one-line notation.
std::vector<int> pipe_dream_permutation(const GridDiagram& grid);

/// ASCII wiring diagram. Each box is a 5 x 3 tile: filled boxes are
/// crossings, empty boxes a pair of elbows (west-south and north-east).
/// Wire labels: sources 1..p up the left edge then p+1..n+1 along the top;
/// sinks 1..m along the bottom then m+1..n+1 up the right edge. The wire
/// entering at source k leaves at sink v^Delta(k).
std::string render_wiring(const GridDiagram& grid);

}  // namespace weyldiag
