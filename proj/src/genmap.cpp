#include "houghton/genmap.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace houghton {

namespace {

std::size_t sz(Int v) { return static_cast<std::size_t>(v); }

}  // namespace

InjectivityError::InjectivityError(const Point& a, const Point& b, const Point& w)
    : Error(ErrorCode::NotInjective, to_string(a) + " and " + to_string(b) + " both map to " + to_string(w)),
      first(a),
      second(b),
      image(w) {}

Point GenMap::apply(const Point& p) const {
  const bool right = p.x >= x0, up = p.y >= y0;
  if (right && up) {
    const auto& s = m[p.quadrant - 1];
    return {add(p.x, s.first), add(p.y, s.second), p.quadrant};
  }
  if (up) {
    const ColEntry& c = col(p.x, p.quadrant);
    return {c.x, add(p.y, c.shift), c.quadrant};
  }
  if (right) {
    const RowEntry& r = row(p.y, p.quadrant);
    return {add(p.x, r.shift), r.y, r.quadrant};
  }
  return corner(p.x, p.y, p.quadrant);
}

void GenMap::check_shape() const {
  auto bad = [](const std::string& what) { fail(ErrorCode::PreconditionFailed, what); };
  if (n < 1 || n > 255) bad("quadrant count out of range");
  if (x0 < 1 || y0 < 1) bad("thresholds must be >= 1");
  if (m.size() != sz(n) || colmap.size() != sz(n) || rowmap.size() != sz(n) || rect.size() != sz(n))
    bad("per-quadrant tables must have n entries");
  for (int i = 0; i < n; ++i) {
    if (colmap[i].size() != sz(x0 - 1)) bad("colmap is not total below x0");
    if (rowmap[i].size() != sz(y0 - 1)) bad("rowmap is not total below y0");
    if (rect[i].size() != sz(mul(x0 - 1, y0 - 1))) bad("rect is not total below p0");
    for (const auto& c : colmap[i])
      if (c.quadrant < 1 || c.quadrant > n) bad("colmap quadrant out of range");
    for (const auto& r : rowmap[i])
      if (r.quadrant < 1 || r.quadrant > n) bad("rowmap quadrant out of range");
    for (const auto& p : rect[i])
      if (p.quadrant < 1 || p.quadrant > n) bad("rect quadrant out of range");
  }
}

GenMap identity_map(int n) {
  GenMap g;
  g.n = n;
  g.m.assign(n, {0, 0});
  g.colmap.assign(n, {});
  g.rowmap.assign(n, {});
  g.rect.assign(n, {});
  return g;
}

GenMap translation_map(const std::vector<Int>& exponents) {
  GenMap g = identity_map(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) fail(ErrorCode::PreconditionFailed, "translation exponents must be >= 0");
    g.m[i] = {exponents[i], exponents[i]};
  }
  return g;
}

GenMap t_generator(int n, int i) {
  std::vector<Int> e(n, 0);
  e[i - 1] = 1;
  return translation_map(e);
}

namespace {

GenMap tabulate_raw(int n, const std::vector<std::pair<Int, Int>>& m, Int X0, Int Y0,
                    const std::function<Point(const Point&)>& f) {
  GenMap g;
  g.n = n;
  g.x0 = std::max<Int>(X0, 1);
  g.y0 = std::max<Int>(Y0, 1);
  g.m = m;
  g.colmap.assign(n, {});
  g.rowmap.assign(n, {});
  g.rect.assign(n, {});
  for (int i = 1; i <= n; ++i) {
    for (Int x = 1; x < g.x0; ++x) {
      Point w = f({x, g.y0, i});
      g.colmap[i - 1].push_back({w.x, w.quadrant, sub(w.y, g.y0)});
    }
    for (Int y = 1; y < g.y0; ++y) {
      Point w = f({g.x0, y, i});
      g.rowmap[i - 1].push_back({w.y, w.quadrant, sub(w.x, g.x0)});
    }
    for (Int x = 1; x < g.x0; ++x)
      for (Int y = 1; y < g.y0; ++y) g.rect[i - 1].push_back(f({x, y, i}));
  }
  return g;
}

// Can the column threshold drop from g.x0 to X = g.x0 - 1 keeping y0?
bool column_droppable(const GenMap& g, Int X) {
  for (int i = 1; i <= g.n; ++i) {
    const auto& s = g.m[i - 1];
    if (g.col(X, i) != ColEntry{X + s.first, i, s.second}) return false;
    for (Int y = 1; y < g.y0; ++y) {
      const RowEntry& r = g.row(y, i);
      if (g.corner(X, y, i) != Point{X + r.shift, r.y, r.quadrant}) return false;
    }
  }
  return true;
}

bool row_droppable(const GenMap& g, Int X, Int Y) {
  for (int i = 1; i <= g.n; ++i) {
    const auto& s = g.m[i - 1];
    if (g.row(Y, i) != RowEntry{Y + s.second, i, s.first}) return false;
    for (Int x = 1; x < X; ++x) {
      const ColEntry& c = g.col(x, i);
      if (g.corner(x, Y, i) != Point{c.x, Y + c.shift, c.quadrant}) return false;
    }
  }
  return true;
}

}  // namespace

GenMap tabulate(int n, const std::vector<std::pair<Int, Int>>& m, Int X0, Int Y0,
                const std::function<Point(const Point&)>& f) {
  return canonical(tabulate_raw(n, m, X0, Y0, f));
}

// The admissible thresholds form an up-set closed under componentwise
// minimum, so lowering x0 greedily and then y0 reaches the least pair.
GenMap canonical(const GenMap& g) {
  g.check_shape();
  Int X = g.x0;
  while (X > 1 && column_droppable(g, X - 1)) --X;
  Int Y = g.y0;
  while (Y > 1 && row_droppable(g, X, Y - 1)) --Y;
  if (X == g.x0 && Y == g.y0) return g;
  return tabulate_raw(g.n, g.m, X, Y, [&](const Point& p) { return g.apply(p); });
}

namespace {

void check_point(const Point& w, const Point& src, int n) {
  if (w.x < 1 || w.y < 1 || w.quadrant < 1 || w.quadrant > n)
    fail(ErrorCode::InvalidImage, "image " + to_string(w) + " of " + to_string(src) + " is off the lattice");
}

}  // namespace

ImageIndex::ImageIndex(const GenMap& g) : g_(g) {
  g.check_shape();
  const int n = g.n;
  // image validity
  for (int i = 1; i <= n; ++i) {
    const auto& s = g.m[i - 1];
    check_point({add(g.x0, s.first), add(g.y0, s.second), i}, {g.x0, g.y0, i}, n);
    for (Int x = 1; x < g.x0; ++x) {
      const ColEntry& c = g.col(x, i);
      check_point({c.x, add(g.y0, c.shift), c.quadrant}, {x, g.y0, i}, n);
    }
    for (Int y = 1; y < g.y0; ++y) {
      const RowEntry& r = g.row(y, i);
      check_point({add(g.x0, r.shift), r.y, r.quadrant}, {g.x0, y, i}, n);
    }
    for (Int x = 1; x < g.x0; ++x)
      for (Int y = 1; y < g.y0; ++y) check_point(g.corner(x, y, i), {x, y, i}, n);
  }

  // Orthant corners: quadrant q's translated orthant starts at (X_q, Y_q).
  auto in_orthant = [&](const Point& w) {
    const auto& s = g.m[w.quadrant - 1];
    return w.x >= g.x0 + s.first && w.y >= g.y0 + s.second;
  };
  auto orthant_source = [&](const Point& w) {
    const auto& s = g.m[w.quadrant - 1];
    return Point{w.x - s.first, w.y - s.second, w.quadrant};
  };

  std::vector<VRay> vr;
  std::vector<std::pair<Int, int>> vsrc;
  std::vector<HRay> hr;
  std::vector<std::pair<Int, int>> hsrc;
  for (int i = 1; i <= n; ++i) {
    for (Int x = 1; x < g.x0; ++x) {
      const ColEntry& c = g.col(x, i);
      VRay v{c.x, c.quadrant, g.y0 + c.shift};
      auto [it, fresh] = vcols_.emplace(key(c.x, c.quadrant), std::pair<Int, int>{x, i});
      if (!fresh) {
        const ColEntry& o = g.col(it->second.first, it->second.second);
        Int y = std::max(v.start_y, g.y0 + o.shift);
        throw InjectivityError({it->second.first, y - o.shift, it->second.second}, {x, y - c.shift, i},
                               {c.x, y, c.quadrant});
      }
      Point corner{c.x, std::max(v.start_y, g.y0 + g.m[c.quadrant - 1].second), c.quadrant};
      if (in_orthant(corner)) throw InjectivityError(orthant_source(corner), {x, corner.y - c.shift, i}, corner);
      vr.push_back(v);
      vsrc.push_back({x, i});
    }
    for (Int y = 1; y < g.y0; ++y) {
      const RowEntry& r = g.row(y, i);
      HRay h{r.y, r.quadrant, g.x0 + r.shift};
      auto [it, fresh] = hrows_.emplace(key(r.y, r.quadrant), std::pair<Int, int>{y, i});
      if (!fresh) {
        const RowEntry& o = g.row(it->second.first, it->second.second);
        Int x = std::max(h.start_x, g.x0 + o.shift);
        throw InjectivityError({x - o.shift, it->second.first, it->second.second}, {x - r.shift, y, i},
                               {x, r.y, r.quadrant});
      }
      Point corner{std::max(h.start_x, g.x0 + g.m[r.quadrant - 1].first), r.y, r.quadrant};
      if (in_orthant(corner)) throw InjectivityError(orthant_source(corner), {corner.x - r.shift, y, i}, corner);
      hr.push_back(h);
      hsrc.push_back({y, i});
    }
  }
  for (std::size_t a = 0; a < vr.size(); ++a)
    for (std::size_t b = 0; b < hr.size(); ++b)
      if (auto w = ray_intersection(vr[a], hr[b])) {
        const ColEntry& c = g.col(vsrc[a].first, vsrc[a].second);
        const RowEntry& r = g.row(hsrc[b].first, hsrc[b].second);
        throw InjectivityError({vsrc[a].first, w->y - c.shift, vsrc[a].second},
                               {w->x - r.shift, hsrc[b].first, hsrc[b].second}, *w);
      }
  for (int i = 1; i <= n; ++i)
    for (Int x = 1; x < g.x0; ++x)
      for (Int y = 1; y < g.y0; ++y) {
        Point w = g.corner(x, y, i);
        Point src{x, y, i};
        if (auto other = preimage(w)) throw InjectivityError(*other, src, w);
        points_.emplace(w, src);
      }
}

std::optional<Point> ImageIndex::preimage(const Point& w) const {
  const GenMap& g = g_;
  if (w.quadrant < 1 || w.quadrant > g.n || w.x < 1 || w.y < 1) return std::nullopt;
  const auto& s = g.m[w.quadrant - 1];
  if (w.x >= g.x0 + s.first && w.y >= g.y0 + s.second) return Point{w.x - s.first, w.y - s.second, w.quadrant};
  if (auto it = vcols_.find(key(w.x, w.quadrant)); it != vcols_.end()) {
    const ColEntry& c = g.col(it->second.first, it->second.second);
    if (w.y >= g.y0 + c.shift) return Point{it->second.first, w.y - c.shift, it->second.second};
  }
  if (auto it = hrows_.find(key(w.y, w.quadrant)); it != hrows_.end()) {
    const RowEntry& r = g.row(it->second.first, it->second.second);
    if (w.x >= g.x0 + r.shift) return Point{w.x - r.shift, it->second.first, it->second.second};
  }
  if (auto it = points_.find(w); it != points_.end()) return it->second;
  return std::nullopt;
}

bool ImageIndex::column_hit(Int x, int q) const {
  return x >= g_.x0 + g_.m[q - 1].first || vcols_.count(key(x, q));
}

bool ImageIndex::row_hit(Int y, int q) const {
  return y >= g_.y0 + g_.m[q - 1].second || hrows_.count(key(y, q));
}

std::pair<Int, Int> image_box(const GenMap& g) {
  Int bx = 1, by = 1;
  for (int i = 1; i <= g.n; ++i) {
    bx = std::max(bx, add(g.x0, g.m[i - 1].first));
    by = std::max(by, add(g.y0, g.m[i - 1].second));
    for (const auto& c : g.colmap[i - 1]) by = std::max(by, add(g.y0, c.shift));
    for (const auto& r : g.rowmap[i - 1]) bx = std::max(bx, add(g.x0, r.shift));
  }
  return {bx, by};
}

bool diagonal(const GenMap& g) {
  for (const auto& s : g.m)
    if (s.first != s.second) return false;
  return true;
}

MapClass validate(const GenMap& g) {
  ImageIndex index(g);
  MapClass c;
  auto [bx, by] = image_box(g);
  // Onto iff every column and row is a carrier and the box [1,bx) x [1,by) is
  // covered: outside the box a point lies on a covered column tail or row tail.
  bool onto = true;
  for (int q = 1; q <= g.n && onto; ++q) {
    for (Int x = 1; x < bx && onto; ++x) onto = index.column_hit(x, q);
    for (Int y = 1; y < by && onto; ++y) onto = index.row_hit(y, q);
    for (Int x = 1; x < bx && onto; ++x)
      for (Int y = 1; y < by && onto; ++y) onto = index.preimage({x, y, q}).has_value();
  }
  const bool diag = diagonal(g);
  c.is_bijective = onto;
  c.in_Gtilde = onto;
  c.in_Gn = onto && diag;
  c.in_M = diag;
  if (diag) {
    GenMap k = canonical(g);
    bool nonneg = true;
    for (const auto& s : k.m) nonneg = nonneg && s.first >= 0;
    c.in_T = k.x0 == 1 && k.y0 == 1 && nonneg;
  }
  return c;
}

GenMap compose(const GenMap& g, const GenMap& h) {
  if (g.n != h.n) fail(ErrorCode::PreconditionFailed, "quadrant counts differ");
  Int min_dx = 0, min_dy = 0;
  std::vector<std::pair<Int, Int>> m(g.n);
  for (int i = 0; i < g.n; ++i) {
    min_dx = std::min(min_dx, g.m[i].first);
    min_dy = std::min(min_dy, g.m[i].second);
    for (const auto& c : g.colmap[i]) min_dy = std::min(min_dy, c.shift);
    for (const auto& r : g.rowmap[i]) min_dx = std::min(min_dx, r.shift);
    m[i] = {add(g.m[i].first, h.m[i].first), add(g.m[i].second, h.m[i].second)};
  }
  Int X = std::max({Int{1}, g.x0, sub(h.x0, min_dx)});
  Int Y = std::max({Int{1}, g.y0, sub(h.y0, min_dy)});
  return tabulate(g.n, m, X, Y, [&](const Point& p) { return h.apply(g.apply(p)); });
}

GenMap invert(const GenMap& g) {
  MapClass c = validate(g);
  if (!c.is_bijective) fail(ErrorCode::NotBijective, "map is not onto");
  ImageIndex index(g);
  auto [bx, by] = image_box(g);
  std::vector<std::pair<Int, Int>> m(g.n);
  for (int i = 0; i < g.n; ++i) m[i] = {-g.m[i].first, -g.m[i].second};
  return tabulate(g.n, m, bx, by, [&](const Point& w) { return *index.preimage(w); });
}

bool equals(const GenMap& g, const GenMap& h) { return canonical(g) == canonical(h); }

HoughtonMap project_pi(const GenMap& g) {
  HoughtonMap h;
  h.n = g.n;
  h.x0 = g.x0;
  for (int i = 1; i <= g.n; ++i) {
    h.m.push_back(g.m[i - 1].first);
    h.exceptional.emplace_back();
    for (Int x = 1; x < g.x0; ++x) h.exceptional.back().push_back({g.col(x, i).x, g.col(x, i).quadrant});
  }
  return houghton_canonical(h);
}

HoughtonMap project_sigma(const GenMap& g) {
  HoughtonMap h;
  h.n = g.n;
  h.x0 = g.y0;
  for (int i = 1; i <= g.n; ++i) {
    h.m.push_back(g.m[i - 1].second);
    h.exceptional.emplace_back();
    for (Int y = 1; y < g.y0; ++y) h.exceptional.back().push_back({g.row(y, i).y, g.row(y, i).quadrant});
  }
  return houghton_canonical(h);
}

std::vector<Int> phi(const GenMap& g) {
  std::vector<Int> v;
  for (const auto& s : g.m) v.push_back(sub(s.first, s.second));
  return v;
}

std::string to_string(const GenMap& g) {
  std::ostringstream os;
  os << "G(n=" << g.n << ", p0=(" << g.x0 << "," << g.y0 << "), m=[";
  for (int i = 0; i < g.n; ++i) os << (i ? "," : "") << "(" << g.m[i].first << "," << g.m[i].second << ")";
  os << "])";
  return os.str();
}

}  // namespace houghton
