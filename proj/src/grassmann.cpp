#include "weyldiag/grassmann.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "weyldiag/errors.hpp"

namespace weyldiag {

namespace {

constexpr int kTileWidth = 5;
constexpr int kTileHeight = 3;

constexpr const char* kCrossingTile[kTileHeight] = {"  |  ", "--+--", "  |  "};
constexpr const char* kElbowTile[kTileHeight] = {"  .. ", "-. .-", " ..  "};

std::string rstrip(std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

std::string pad_left(const std::string& text, int width) {
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(text.size()))), ' ') + text;
}

}  // namespace

void GridShape::validate() const {
  if (p < 1 || m < 1) {
    throw DomainError("grid shape must have p >= 1 and m >= 1 (got p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                      ")");
  }
}

int grid_position(const GridShape& shape, int row, int col) {
  if (row < 1 || row > shape.p || col < 1 || col > shape.m) {
    throw DomainError("box (" + std::to_string(row) + "," + std::to_string(col) + ") outside the " +
                      std::to_string(shape.p) + "x" + std::to_string(shape.m) + " grid");
  }
  return (col - 1) * shape.p + row;
}

std::pair<int, int> grid_box(const GridShape& shape, int position) {
  if (position < 1 || position > shape.box_count()) {
    throw DomainError("grid position " + std::to_string(position) + " out of range");
  }
  return {(position - 1) % shape.p + 1, (position - 1) / shape.p + 1};
}

// ---------------------------------------------------------------------------
// GridDiagram

GridDiagram::GridDiagram(GridShape shape) : shape_(shape) {
  shape_.validate();
  cells_.assign(static_cast<std::size_t>(shape_.box_count()), false);
}

GridDiagram::GridDiagram(GridShape shape, const std::vector<std::pair<int, int>>& boxes) : GridDiagram(shape) {
  for (const auto& [r, c] : boxes) set(r, c);
}

GridDiagram GridDiagram::from_diagram(const GridShape& shape, const Diagram& diagram) {
  if (diagram.word().size() != shape.box_count()) throw DomainError("diagram length does not match the grid");
  GridDiagram grid(shape);
  for (int pos : diagram.positions()) {
    const auto [r, c] = grid_box(shape, pos);
    grid.set(r, c);
  }
  return grid;
}

GridDiagram GridDiagram::full(GridShape shape) {
  GridDiagram grid(shape);
  grid.cells_.assign(grid.cells_.size(), true);
  return grid;
}

bool GridDiagram::filled(int row, int col) const {
  return cells_[static_cast<std::size_t>(grid_position(shape_, row, col) - 1)];
}

void GridDiagram::set(int row, int col, bool value) {
  cells_[static_cast<std::size_t>(grid_position(shape_, row, col) - 1)] = value;
}

std::vector<std::pair<int, int>> GridDiagram::boxes() const {
  std::vector<std::pair<int, int>> out;
  for (int pos = 1; pos <= shape_.box_count(); ++pos)
    if (cells_[static_cast<std::size_t>(pos - 1)]) out.push_back(grid_box(shape_, pos));
  return out;
}

std::vector<int> GridDiagram::positions() const {
  std::vector<int> out;
  for (int pos = 1; pos <= shape_.box_count(); ++pos)
    if (cells_[static_cast<std::size_t>(pos - 1)]) out.push_back(pos);
  return out;
}

std::string GridDiagram::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, c] : boxes()) {
    if (!first) out << ' ';
    out << r << ',' << c;
    first = false;
  }
  return out.str();
}

GridDiagram parse_grid(const GridShape& shape, std::string_view text) {
  GridDiagram grid(shape);
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const std::vector<int> pair = parse_int_list(token);
    if (pair.size() != 2) throw ParseError("malformed grid box '" + token + "' (expected r,c)");
    if (grid.filled(pair[0], pair[1])) throw DomainError("grid box '" + token + "' repeated");
    grid.set(pair[0], pair[1]);
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Quantum-matrices word

Word quantum_matrices_word(const GridShape& shape) {
  shape.validate();
  auto system = RootSystem::build({Family::A, shape.rank()});
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(shape.box_count()));
  for (int c = 1; c <= shape.m; ++c)
    for (int letter = shape.p + c - 1; letter >= c; --letter) letters.push_back(letter);
  Word word(std::move(system), std::move(letters));
  if (!word.reduced()) throw std::logic_error("quantum-matrices word is not reduced");
  return word;
}

std::optional<GridShape> quantum_matrices_shape_of(const Word& word) {
  const RootSystem& sys = word.system();
  if (sys.type().family != Family::A) return std::nullopt;
  const int n = sys.rank();
  for (int p = 1; p <= n; ++p) {
    const GridShape shape{p, n - p + 1};
    if (shape.box_count() != word.size()) continue;
    bool match = true;
    int pos = 1;
    for (int c = 1; c <= shape.m && match; ++c)
      for (int letter = p + c - 1; letter >= c && match; --letter) match = word.at(pos++) == letter;
    if (match) return shape;
  }
  return std::nullopt;
}

Diagram to_diagram(const GridDiagram& grid) { return Diagram(quantum_matrices_word(grid.shape()), grid.positions()); }

// ---------------------------------------------------------------------------
// Le condition, pipe dreams

bool is_le_diagram(const GridDiagram& grid) {
  const GridShape& s = grid.shape();
  for (int u = 1; u <= s.p; ++u) {
    for (int v = 1; v <= s.m; ++v) {
      if (!grid.filled(u, v)) continue;
      for (int i = 1; i < u; ++i)
        for (int j = 1; j < v; ++j)
          if (!grid.filled(i, v) && !grid.filled(u, j)) return false;
    }
  }
  return true;
}

std::vector<int> to_permutation(const RootSystem& system, const WeylElement& w) {
  if (system.type().family != Family::A) throw DomainError("permutations are only defined for type A");
  const int n = system.rank();
  // e-coordinates of x = sum c_k alpha_k are c_k - c_{k-1}.
  auto to_e = [n](const Root& x) {
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    for (int k = 0; k <= n; ++k) e[static_cast<std::size_t>(k)] = (k < n ? x[k] : 0) - (k > 0 ? x[k - 1] : 0);
    return e;
  };
  std::vector<int> perm(static_cast<std::size_t>(n + 1), 0);
  for (int i = 0; i < n; ++i) {
    // e_{i+1} - e_{n+1} = alpha_{i+1} + ... + alpha_n.
    std::vector<int> coeffs(static_cast<std::size_t>(n), 0);
    for (int k = i; k < n; ++k) coeffs[static_cast<std::size_t>(k)] = 1;
    const std::vector<int> e = to_e(w.apply(Root(std::move(coeffs))));
    for (int k = 0; k <= n; ++k) {
      if (e[static_cast<std::size_t>(k)] == 1) perm[static_cast<std::size_t>(i)] = k + 1;
      if (e[static_cast<std::size_t>(k)] == -1) perm[static_cast<std::size_t>(n)] = k + 1;
    }
  }
  return perm;
}

std::vector<int> pipe_dream_permutation(const GridDiagram& grid) {
  const Diagram diagram = to_diagram(grid);
  return to_permutation(diagram.word().system(), zeta_prime(diagram));
}

std::string render_wiring(const GridDiagram& grid) {
  const GridShape& s = grid.shape();
  const int n = s.rank();
  const int label_width = static_cast<int>(std::to_string(n + 1).size());
  const std::string margin(static_cast<std::size_t>(label_width + 1), ' ');

  auto label_row = [&](auto label_of_col) {
    std::string line = margin;
    for (int c = 1; c <= s.m; ++c) line += pad_left(std::to_string(label_of_col(c)), 3) + "  ";
    return rstrip(line);
  };

  std::ostringstream out;
  out << label_row([&](int c) { return s.p + c; }) << '\n';
  for (int r = 1; r <= s.p; ++r) {
    for (int k = 0; k < kTileHeight; ++k) {
      std::string line = k == 1 ? pad_left(std::to_string(s.p + 1 - r), label_width) + " " : margin;
      for (int c = 1; c <= s.m; ++c) line += (grid.filled(r, c) ? kCrossingTile : kElbowTile)[k];
      if (k == 1) line += " " + std::to_string(n + 2 - r);
      out << rstrip(line) << '\n';
    }
  }
  out << label_row([](int c) { return c; }) << '\n';
  return out.str();
}

}  // namespace weyldiag
