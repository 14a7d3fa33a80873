#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library; all Weyl group arithmetic is redone from hard-coded
// Cartan matrices, and type A is redone with plain permutations.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
// Row-major n x n integer matrix acting on simple-root coordinates.
using Mat = std::vector<int>;

struct System {
  char family;
  int rank;
  std::vector<Vec> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
};

inline System make_system(char family, int n) {
  System s{family, n, std::vector<Vec>(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0))};
  auto& a = s.cartan;
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
  };
  switch (family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
      link(n - 1, n, -1, -2);
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
      link(n - 1, n, -2, -1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n, -1, -1);
      break;
    case 'E':
      link(1, 3, -1, -1);
      link(2, 4, -1, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'F':
      link(1, 2, -1, -1);
      link(2, 3, -1, -2);
      link(3, 4, -1, -1);
      break;
    case 'G':
      link(1, 2, -3, -1);
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
  return s;
}

// s_i(x) = x - <alpha_i^vee, x> alpha_i, i 0-based.
inline Vec simple_reflect(const System& s, int i, Vec x) {
  int pairing = 0;
  for (int j = 0; j < s.rank; ++j) pairing += s.cartan[i][j] * x[j];
  x[i] -= pairing;
  return x;
}

inline bool is_positive(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](int c) { return c >= 0; }) &&
         std::any_of(x.begin(), x.end(), [](int c) { return c > 0; });
}

// Positive roots by closing the simple roots under simple reflections.
inline std::vector<Vec> positive_roots(const System& s) {
  std::set<Vec> all;
  std::vector<Vec> frontier;
  for (int i = 0; i < s.rank; ++i) {
    Vec e(static_cast<std::size_t>(s.rank), 0);
    e[i] = 1;
    frontier.push_back(e);
    all.insert(e);
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& x : frontier)
      for (int i = 0; i < s.rank; ++i) {
        Vec y = simple_reflect(s, i, x);
        if (all.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<Vec> out;
  for (const Vec& x : all)
    if (is_positive(x)) out.push_back(x);
  return out;
}

inline Mat identity(int n) {
  Mat m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

inline Mat multiply(int n, const Mat& a, const Mat& b) {
  Mat c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

inline Mat simple_matrix(const System& s, int letter) {
  const int n = s.rank;
  Mat m(static_cast<std::size_t>(n * n), 0);
  for (int j = 0; j < n; ++j) {
    Vec e(static_cast<std::size_t>(n), 0);
    e[j] = 1;
    const Vec img = simple_reflect(s, letter - 1, e);
    for (int r = 0; r < n; ++r) m[r * n + j] = img[r];
  }
  return m;
}

inline Mat word_matrix(const System& s, const std::vector<int>& letters) {
  Mat m = identity(s.rank);
  for (int letter : letters) m = multiply(s.rank, m, simple_matrix(s, letter));
  return m;
}

inline Vec apply(int n, const Mat& m, const Vec& x) {
  Vec y(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) y[r] += m[r * n + c] * x[c];
  return y;
}

inline int length(const System& s, const std::vector<Vec>& positives, const Mat& m) {
  int count = 0;
  for (const Vec& a : positives)
    if (!is_positive(apply(s.rank, m, a))) ++count;
  return count;
}

// All elements of W as matrices, by breadth-first search.
inline std::set<Mat> group(const System& s) {
  std::set<Mat> seen{identity(s.rank)};
  std::vector<Mat> frontier{identity(s.rank)};
  std::vector<Mat> gens;
  for (int i = 1; i <= s.rank; ++i) gens.push_back(simple_matrix(s, i));
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& w : frontier)
      for (const Mat& g : gens) {
        Mat x = multiply(s.rank, w, g);
        if (seen.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Products of every subword, by exhaustive subset search.
inline std::set<Mat> subword_products(const System& s, const std::vector<int>& letters) {
  std::set<Mat> out;
  const std::size_t t = letters.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < t; ++k)
      if (mask >> k & 1) sub.push_back(letters[k]);
    out.insert(word_matrix(s, sub));
  }
  return out;
}

// Uniform-ish random reduced word: each step appends a letter that raises
// the length, stopping at the target length or at w0.
inline std::vector<int> random_reduced_word(const System& s, const std::vector<Vec>& positives, std::mt19937& rng,
                                            int max_len) {
  std::uniform_int_distribution<int> len_dist(0, std::min<int>(max_len, static_cast<int>(positives.size())));
  const int target = len_dist(rng);
  std::vector<int> word;
  Mat w = identity(s.rank);
  while (static_cast<int>(word.size()) < target) {
    std::vector<int> ascents;
    for (int i = 1; i <= s.rank; ++i)
      if (length(s, positives, multiply(s.rank, w, simple_matrix(s, i))) == static_cast<int>(word.size()) + 1)
        ascents.push_back(i);
    if (ascents.empty()) break;
    const int letter = ascents[std::uniform_int_distribution<std::size_t>(0, ascents.size() - 1)(rng)];
    word.push_back(letter);
    w = multiply(s.rank, w, simple_matrix(s, letter));
  }
  return word;
}

// ---------------------------------------------------------------------------
// Type A through permutations of {1, ..., n+1}, one-line notation.

using Perm = std::vector<int>;

inline Perm perm_identity(int size) {
  Perm p(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) p[i] = i + 1;
  return p;
}

// (u o s_k) in one-line form: swap entries k and k+1.
inline Perm times_simple(Perm u, int k) {
  std::swap(u[k - 1], u[k]);
  return u;
}

// s_{a_1} o ... o s_{a_t} in one-line form.
inline Perm perm_of_word(int rank, const std::vector<int>& letters) {
  Perm p = perm_identity(rank + 1);
  for (int a : letters) p = times_simple(p, a);
  return p;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

inline int inversions(const Perm& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

// Tableau criterion for the Bruhat order on permutations.
inline bool bruhat_leq(const Perm& u, const Perm& w) {
  for (std::size_t k = 1; k <= u.size(); ++k) {
    std::vector<int> a(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<int> b(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

// Positivity through the subexpression ascent test, positions 1-based.
inline bool positive_by_perms(int rank, const std::vector<int>& letters, const std::set<int>& diagram) {
  const int t = static_cast<int>(letters.size());
  Perm v = perm_identity(rank + 1);
  for (int i = 1; i <= t; ++i) {
    const int pos = t - i + 1;
    const int a = letters[pos - 1];
    if (v[a - 1] > v[a]) return false;  // v s_a would be shorter
    if (diagram.count(pos)) v = times_simple(v, a);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Character-level tracer for rendered wiring diagrams.
//
// Finds each source label on the left edge and the top edge, follows the wire
// glyph by glyph and reads the label where it leaves the drawing. Returns
// sink[source - 1] for sources 1..n+1.

struct Canvas {
  std::vector<std::string> lines;
  char at(int r, int c) const {
    if (r < 0 || r >= static_cast<int>(lines.size())) return ' ';
    if (c < 0 || c >= static_cast<int>(lines[r].size())) return ' ';
    return lines[r][c];
  }
};

inline bool is_wire(char ch) { return ch == '-' || ch == '|' || ch == '+' || ch == '.'; }

inline int read_number_at(const std::string& line, int col) {
  int lo = col;
  int hi = col;
  while (lo > 0 && std::isdigit(static_cast<unsigned char>(line[lo - 1]))) --lo;
  while (hi + 1 < static_cast<int>(line.size()) && std::isdigit(static_cast<unsigned char>(line[hi + 1]))) ++hi;
  return std::stoi(line.substr(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo + 1)));
}

// Walks from (r, c) heading (dr, dc) until the first digit; returns it.
// Straight glyphs and blanks keep the heading; a corner dot turns toward its
// unique 4-neighbour that continues the wire.
inline int follow(const Canvas& cv, int r, int c, int dr, int dc) {
  for (int steps = 0; steps < 100000; ++steps) {
    const char ch = cv.at(r, c);
    if (std::isdigit(static_cast<unsigned char>(ch))) return read_number_at(cv.lines[r], c);
    if (ch == '.') {
      const int dirs[4][2] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
      int found = 0, ndr = 0, ndc = 0;
      for (const auto& d : dirs) {
        if (d[0] == -dr && d[1] == -dc) continue;
        const char nb = cv.at(r + d[0], c + d[1]);
        if (is_wire(nb) || std::isdigit(static_cast<unsigned char>(nb))) {
          ++found;
          ndr = d[0];
          ndc = d[1];
        }
      }
      if (found != 1) throw std::runtime_error("ambiguous corner in wiring");
      dr = ndr;
      dc = ndc;
    }
    r += dr;
    c += dc;
  }
  throw std::runtime_error("wire does not terminate");
}

inline std::vector<int> trace_wiring(const std::string& text, int p, int m) {
  Canvas cv;
  std::string line;
  for (char ch : text) {
    if (ch == '\n') {
      cv.lines.push_back(line);
      line.clear();
    } else {
      line += ch;
    }
  }
  const int n1 = p + m;
  std::vector<int> sink(static_cast<std::size_t>(n1), 0);
  // Left sources sit on the middle line of each tile row.
  for (int r = 1; r <= p; ++r) {
    const int row = 1 + 3 * (r - 1) + 1;
    const std::string& l = cv.lines[row];
    const std::size_t first_digit = l.find_first_not_of(' ');
    const int label = read_number_at(l, static_cast<int>(first_digit));
    const std::size_t after = l.find_first_not_of("0123456789", first_digit);
    const int start = static_cast<int>(l.find_first_not_of(' ', after));
    sink[label - 1] = follow(cv, row, start, 0, 1);
  }
  // Top sources: each label on line 0, wire directly below.
  const std::string& top = cv.lines[0];
  for (int c = 0; c < static_cast<int>(top.size()); ++c) {
    if (!std::isdigit(static_cast<unsigned char>(top[c]))) continue;
    if (c + 1 < static_cast<int>(top.size()) && std::isdigit(static_cast<unsigned char>(top[c + 1]))) continue;
    const int label = read_number_at(top, c);
    sink[label - 1] = follow(cv, 1, c, 1, 0);
  }
  return sink;
}

}  // namespace oracle
