#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "printers.hpp"
#include "weyldiag/errors.hpp"
#include "weyldiag/grassmann.hpp"

using namespace weyldiag;

namespace {

GridDiagram grid_of_mask(const GridShape& shape, std::uint64_t mask) {
  GridDiagram g(shape);
  for (int pos = 1; pos <= shape.box_count(); ++pos)
    if (mask >> (pos - 1) & 1) {
      const auto [r, c] = grid_box(shape, pos);
      g.set(r, c);
    }
  return g;
}

// Le condition straight from the definition, over box coordinates.
bool le_oracle(const std::set<std::pair<int, int>>& boxes) {
  for (const auto& [u, v] : boxes)
    for (int i = 1; i < u; ++i)
      for (int j = 1; j < v; ++j)
        if (!boxes.count({i, v}) && !boxes.count({u, j})) return false;
  return true;
}

}  // namespace

TEST(Grassmann, QuantumMatricesWordExamples) {
  EXPECT_EQ(quantum_matrices_word({2, 2}).to_string(), "2,1,3,2");
  EXPECT_EQ(quantum_matrices_word({2, 3}).to_string(), "2,1,3,2,4,3");
  EXPECT_EQ(quantum_matrices_word({3, 2}).to_string(), "3,2,1,4,3,2");
  EXPECT_EQ(quantum_matrices_word({1, 1}).to_string(), "1");
  EXPECT_EQ(quantum_matrices_word({1, 3}).to_string(), "1,2,3");
  EXPECT_THROW(quantum_matrices_word({0, 2}), DomainError);
}

TEST(Grassmann, QuantumMatricesWordsAreReducedAndRecognised) {
  for (int p = 1; p <= 4; ++p)
    for (int m = 1; m <= 4; ++m) {
      const Word w = quantum_matrices_word({p, m});
      EXPECT_TRUE(w.reduced());
      EXPECT_EQ(w.size(), p * m);
      const auto shape = quantum_matrices_shape_of(w);
      ASSERT_TRUE(shape);
      EXPECT_EQ(*shape, (GridShape{p, m}));
    }
  EXPECT_FALSE(quantum_matrices_shape_of(Word(RootSystem::build({Family::A, 3}), {1, 2, 1})));
}

TEST(Grassmann, BoxLabels) {
  const GridShape s{2, 3};
  const Word w = quantum_matrices_word(s);
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 3; ++c) {
      const int pos = grid_position(s, r, c);
      EXPECT_EQ(grid_box(s, pos), std::make_pair(r, c));
      EXPECT_EQ(w.at(pos), s.p + c - r);
    }
  EXPECT_THROW(grid_position(s, 3, 1), DomainError);
}

TEST(Grassmann, LeExamples) {
  const GridShape s{2, 2};
  EXPECT_FALSE(is_le_diagram(parse_grid(s, "2,2")));
  EXPECT_TRUE(is_le_diagram(parse_grid(s, "2,2 1,2")));
  EXPECT_TRUE(is_le_diagram(GridDiagram(s)));
  EXPECT_TRUE(is_le_diagram(GridDiagram::full(s)));
}

TEST(Grassmann, ParseGrid) {
  const GridShape s{2, 2};
  EXPECT_EQ(parse_grid(s, " 1,2   2,1 ").to_string(), "2,1 1,2");
  EXPECT_THROW(parse_grid(s, "1"), ParseError);
  EXPECT_THROW(parse_grid(s, "1,a"), ParseError);
  EXPECT_THROW(parse_grid(s, "3,1"), DomainError);
  EXPECT_THROW(parse_grid(s, "1,1 1,1"), DomainError);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const GridDiagram g = grid_of_mask(s, mask);
    EXPECT_EQ(parse_grid(s, g.to_string()), g);
  }
}

TEST(Grassmann, LeEquivalentToPositive) {
  const std::vector<std::pair<std::pair<int, int>, std::size_t>> shapes = {
      {{2, 2}, 14}, {{2, 3}, 0}, {{3, 2}, 0}, {{1, 3}, 0}, {{3, 1}, 0}};
  for (const auto& [pm, expected] : shapes) {
    const GridShape s{pm.first, pm.second};
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.box_count()); ++mask) {
      const GridDiagram g = grid_of_mask(s, mask);
      const auto b = g.boxes();
      const bool le = le_oracle({b.begin(), b.end()});
      EXPECT_EQ(is_le_diagram(g), le);
      EXPECT_EQ(is_positive(to_diagram(g)), le) << g.to_string();
      count += le;
    }
    if (expected) EXPECT_EQ(count, expected);
  }
}

TEST(Grassmann, PipeDreamExamples) {
  const GridShape s{2, 2};
  EXPECT_EQ(pipe_dream_permutation(GridDiagram(s)), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(pipe_dream_permutation(GridDiagram::full(s)), (std::vector<int>{3, 4, 1, 2}));
  EXPECT_EQ(pipe_dream_permutation(parse_grid(s, "2,1")), (std::vector<int>{2, 1, 3, 4}));
}

TEST(Grassmann, PipeDreamIsInverseOfSubwordProduct) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const GridShape s{p, m};
    const Word w = quantum_matrices_word(s);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.box_count()); ++mask) {
      const GridDiagram g = grid_of_mask(s, mask);
      std::vector<int> sub;
      for (int pos : g.positions()) sub.push_back(w.at(pos));
      EXPECT_EQ(pipe_dream_permutation(g), oracle::perm_inverse(oracle::perm_of_word(s.rank(), sub)));
    }
  }
}

TEST(Grassmann, ToPermutationMatchesOracle) {
  auto a3 = RootSystem::build({Family::A, 3});
  EXPECT_EQ(to_permutation(*a3, a3->element_of_word(std::vector<int>{1, 2})), (std::vector<int>{2, 3, 1, 4}));
  for (const WeylElement& w : a3->enumerate_group()) {
    const Word r = reduced_word(*a3, w);
    EXPECT_EQ(to_permutation(*a3, w), oracle::perm_of_word(3, std::vector<int>(r.letters().begin(), r.letters().end())));
  }
  auto b2 = RootSystem::build({Family::B, 2});
  EXPECT_THROW(to_permutation(*b2, b2->identity()), DomainError);
}

TEST(Grassmann, RenderGoldens) {
  EXPECT_EQ(render_wiring(GridDiagram({1, 1})), "    2\n    ..\n1 -. .- 2\n   ..\n    1\n");
  EXPECT_EQ(render_wiring(GridDiagram::full({1, 1})), "    2\n    |\n1 --+-- 2\n    |\n    1\n");
  EXPECT_EQ(render_wiring(GridDiagram::full({2, 2})),
            "    3    4\n"
            "    |    |\n"
            "2 --+----+-- 4\n"
            "    |    |\n"
            "    |    |\n"
            "1 --+----+-- 3\n"
            "    |    |\n"
            "    1    2\n");
}

TEST(Grassmann, RenderTracesToPermutation) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 2}, {1, 3}, {3, 3}}) {
    const GridShape s{p, m};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.box_count()); ++mask) {
      const GridDiagram g = grid_of_mask(s, mask);
      const std::string text = render_wiring(g);
      EXPECT_EQ(oracle::trace_wiring(text, p, m), pipe_dream_permutation(g)) << text;
      EXPECT_EQ(text, render_wiring(g));
    }
  }
}

TEST(Grassmann, RenderWideLabels) {
  // n + 1 = 10 needs two-digit labels.
  const GridShape s{5, 5};
  const GridDiagram g = parse_grid(s, "1,1 2,3 5,5 4,2");
  EXPECT_EQ(oracle::trace_wiring(render_wiring(g), 5, 5), pipe_dream_permutation(g));
}
