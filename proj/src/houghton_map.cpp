#include "houghton/houghton_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace houghton {

namespace {

std::string rp(const RayPoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.ray) + ")";
}

void check_shape(const HoughtonMap& h) {
  if (h.n < 1 || h.x0 < 1 || h.m.size() != static_cast<std::size_t>(h.n) ||
      h.exceptional.size() != static_cast<std::size_t>(h.n))
    fail(ErrorCode::PreconditionFailed, "malformed Houghton map");
  for (const auto& col : h.exceptional)
    if (col.size() != static_cast<std::size_t>(h.x0 - 1))
      fail(ErrorCode::PreconditionFailed, "exceptional table does not match threshold");
}

}  // namespace

RayPoint HoughtonMap::apply(const RayPoint& p) const {
  if (p.x >= x0) return {add(p.x, m[p.ray - 1]), p.ray};
  return exceptional[p.ray - 1][p.x - 1];
}

HoughtonMap houghton_identity(int n) {
  HoughtonMap h;
  h.n = n;
  h.m.assign(n, 0);
  h.exceptional.assign(n, {});
  return h;
}

HoughtonMap houghton_tabulate(int n, const std::vector<Int>& m, Int x0,
                              const std::function<RayPoint(const RayPoint&)>& f) {
  HoughtonMap h;
  h.n = n;
  h.x0 = std::max<Int>(x0, 1);
  h.m = m;
  h.exceptional.assign(n, {});
  for (int i = 1; i <= n; ++i)
    for (Int x = 1; x < h.x0; ++x) h.exceptional[i - 1].push_back(f({x, i}));
  return houghton_canonical(h);
}

HoughtonMap houghton_canonical(const HoughtonMap& h) {
  check_shape(h);
  HoughtonMap c = h;
  while (c.x0 > 1) {
    Int x = c.x0 - 1;
    bool asymptotic = true;
    for (int i = 1; i <= c.n && asymptotic; ++i)
      asymptotic = c.exceptional[i - 1][x - 1] == RayPoint{x + c.m[i - 1], i};
    if (!asymptotic) break;
    for (auto& col : c.exceptional) col.pop_back();
    c.x0 = x;
  }
  return c;
}

bool houghton_validate(const HoughtonMap& h) {
  check_shape(h);
  std::map<RayPoint, RayPoint> image;  // image point -> source
  for (int i = 1; i <= h.n; ++i) {
    if (add(h.x0, h.m[i - 1]) < 1)
      fail(ErrorCode::InvalidImage, "ray " + std::to_string(i) + " is shifted off the lattice");
    for (Int x = 1; x < h.x0; ++x) {
      RayPoint w = h.exceptional[i - 1][x - 1];
      if (w.x < 1 || w.ray < 1 || w.ray > h.n)
        fail(ErrorCode::InvalidImage, "image " + rp(w) + " of " + rp({x, i}) + " is off the lattice");
      auto [it, fresh] = image.emplace(w, RayPoint{x, i});
      if (!fresh)
        fail(ErrorCode::NotInjective, rp(it->second) + " and " + rp({x, i}) + " both map to " + rp(w));
      if (w.x >= h.x0 + h.m[w.ray - 1])
        fail(ErrorCode::NotInjective, rp({x, i}) + " and " + rp({w.x - h.m[w.ray - 1], w.ray}) +
                                          " both map to " + rp(w));
    }
  }
  // Everything at or beyond max(x0 + m_i) is hit by the translated tails.
  Int bound = 1;
  for (Int s : h.m) bound = std::max(bound, h.x0 + s);
  for (int i = 1; i <= h.n; ++i)
    for (Int x = 1; x < bound; ++x) {
      RayPoint w{x, i};
      if (x >= h.x0 + h.m[i - 1]) continue;
      if (!image.count(w)) return false;
    }
  return true;
}

HoughtonMap houghton_compose(const HoughtonMap& a, const HoughtonMap& b) {
  if (a.n != b.n) fail(ErrorCode::PreconditionFailed, "ray counts differ");
  Int min_shift = *std::min_element(a.m.begin(), a.m.end());
  Int x0 = std::max({Int{1}, a.x0, sub(b.x0, min_shift)});
  std::vector<Int> m(a.n);
  for (int i = 0; i < a.n; ++i) m[i] = add(a.m[i], b.m[i]);
  return houghton_tabulate(a.n, m, x0, [&](const RayPoint& p) { return b.apply(a.apply(p)); });
}

HoughtonMap houghton_invert(const HoughtonMap& h) {
  if (!houghton_validate(h)) fail(ErrorCode::NotBijective, "map is not onto: " + to_string(h));
  std::map<RayPoint, RayPoint> pre;
  for (int i = 1; i <= h.n; ++i)
    for (Int x = 1; x < h.x0; ++x) pre[h.exceptional[i - 1][x - 1]] = {x, i};
  Int x0 = 1;
  std::vector<Int> m(h.n);
  for (int i = 0; i < h.n; ++i) {
    x0 = std::max(x0, add(h.x0, h.m[i]));
    m[i] = -h.m[i];
  }
  return houghton_tabulate(h.n, m, x0, [&](const RayPoint& w) {
    if (w.x >= h.x0 + h.m[w.ray - 1]) return RayPoint{w.x - h.m[w.ray - 1], w.ray};
    return pre.at(w);
  });
}

bool houghton_equals(const HoughtonMap& a, const HoughtonMap& b) {
  return houghton_canonical(a) == houghton_canonical(b);
}

std::string to_string(const HoughtonMap& h) {
  std::ostringstream os;
  os << "H(n=" << h.n << ", x0=" << h.x0 << ", m=[";
  for (int i = 0; i < h.n; ++i) os << (i ? "," : "") << h.m[i];
  os << "]";
  for (int i = 1; i <= h.n; ++i)
    for (Int x = 1; x < h.x0; ++x) {
      RayPoint w = h.exceptional[i - 1][x - 1];
      if (w != RayPoint{x, i}) os << " " << rp({x, i}) << "->" << rp(w);
    }
  os << ")";
  return os.str();
}

}  // namespace houghton
