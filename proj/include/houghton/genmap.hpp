#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "houghton/houghton_map.hpp"
#include "houghton/lattice.hpp"

namespace houghton {

// Column (x,i) below x0 goes to column (x', i') = (x, quadrant), heights move by shift:
// ((x,y),i) -> ((x', y + shift), i') for y >= y0.
struct ColEntry {
  Int x = 1;
  int quadrant = 1;
  Int shift = 0;
  bool operator==(const ColEntry&) const = default;
};

// Row (y,i) below y0: ((x,y),i) -> ((x + shift, y'), i') for x >= x0.
struct RowEntry {
  Int y = 1;
  int quadrant = 1;
  Int shift = 0;
  bool operator==(const RowEntry&) const = default;
};

// Eventually translational injection of S in normal form. On x >= x0, y >= y0
// quadrant i moves by m[i-1]; colmap/rowmap cover the strips below one
// threshold, rect the corner below both. After canonical() the thresholds are
// the smallest possible, so structural equality is equality of functions.
struct GenMap {
  int n = 1;
  Int x0 = 1;
  Int y0 = 1;
  std::vector<std::pair<Int, Int>> m;
  std::vector<std::vector<ColEntry>> colmap;  // [i-1][x-1]
  std::vector<std::vector<RowEntry>> rowmap;  // [i-1][y-1]
  std::vector<std::vector<Point>> rect;       // [i-1][(x-1)*(y0-1) + (y-1)]

  bool operator==(const GenMap&) const = default;

  const ColEntry& col(Int x, int i) const { return colmap[i - 1][x - 1]; }
  const RowEntry& row(Int y, int i) const { return rowmap[i - 1][y - 1]; }
  const Point& corner(Int x, Int y, int i) const { return rect[i - 1][(x - 1) * (y0 - 1) + (y - 1)]; }

  Point apply(const Point& p) const;
  // Throws PreconditionFailed when table sizes or quadrant indices are off.
  void check_shape() const;
};

struct MapClass {
  bool is_bijective = false;
  bool in_Gtilde = false;  // bijective
  bool in_Gn = false;      // bijective, diagonal shifts
  bool in_M = false;       // injective, diagonal shifts
  bool in_T = false;       // translation by (m_i, m_i), m_i >= 0
};

class InjectivityError : public Error {
 public:
  InjectivityError(const Point& a, const Point& b, const Point& image);
  Point first, second, image;
};

GenMap identity_map(int n);
// t_1^e_1 ... t_n^e_n
GenMap translation_map(const std::vector<Int>& exponents);
// the generator t_i
GenMap t_generator(int n, int i);

// Builds the map agreeing with f, given thresholds X0, Y0 beyond which f is
// already in asymptotic / column / row form with shifts m. Result is canonical.
GenMap tabulate(int n, const std::vector<std::pair<Int, Int>>& m, Int X0, Int Y0,
                const std::function<Point(const Point&)>& f);
GenMap canonical(const GenMap& g);

// Image bookkeeping: builds the pieces of g(S), reports collisions with a
// witness (InjectivityError) and answers preimage queries.
class ImageIndex {
 public:
  explicit ImageIndex(const GenMap& g);
  std::optional<Point> preimage(const Point& w) const;
  // is column (x, q) the carrier of some image column
  bool column_hit(Int x, int q) const;
  bool row_hit(Int y, int q) const;

 private:
  static long long key(Int a, int q) { return (static_cast<long long>(a) << 8) | q; }
  const GenMap& g_;
  std::unordered_map<long long, std::pair<Int, int>> vcols_;  // image column -> source column (x,i)
  std::unordered_map<long long, std::pair<Int, int>> hrows_;
  std::unordered_map<Point, Point, PointHash> points_;
};

// Throws InvalidImage / NotInjective (InjectivityError).
MapClass validate(const GenMap& g);

// Width of the window beyond which every column/row is in its asymptotic
// or column/row form (the box that decides surjectivity).
std::pair<Int, Int> image_box(const GenMap& g);

// compose(g, h) applies g first, then h.
GenMap compose(const GenMap& g, const GenMap& h);
GenMap invert(const GenMap& g);
bool equals(const GenMap& g, const GenMap& h);

HoughtonMap project_pi(const GenMap& g);
HoughtonMap project_sigma(const GenMap& g);
std::vector<Int> phi(const GenMap& g);

bool diagonal(const GenMap& g);

std::string to_string(const GenMap& g);

}  // namespace houghton
