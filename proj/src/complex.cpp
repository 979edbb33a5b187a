#include "houghton/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace houghton {

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::vector<Simplex>> faces_by_dimension(const SimplicialComplex& k, std::size_t cap) {
  std::vector<std::set<Simplex>> sets;
  std::size_t total = 0;
  for (Simplex f : k.facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || static_cast<std::size_t>(v) >= k.vertex_count())
        fail(ErrorCode::PreconditionFailed, "facet uses an unknown vertex");
    if (f.size() > 24) fail(ErrorCode::SizeCapExceeded, "facet with more than 24 vertices");
    if (sets.size() < f.size()) sets.resize(f.size());
    const std::uint32_t full = (1u << f.size());
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Simplex s;
      for (std::size_t b = 0; b < f.size(); ++b)
        if (mask & (1u << b)) s.push_back(f[b]);
      if (sets[s.size() - 1].insert(std::move(s)).second && ++total > cap)
        fail(ErrorCode::SizeCapExceeded, "complex has more than " + std::to_string(cap) + " faces");
    }
  }
  if (total == 0) fail(ErrorCode::EmptyComplex, "complex has no faces");
  std::vector<std::vector<Simplex>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

SimplicialComplex normalize(SimplicialComplex k) {
  for (auto& f : k.facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(k.facets.begin(), k.facets.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  k.facets.erase(std::unique(k.facets.begin(), k.facets.end()), k.facets.end());
  std::vector<Simplex> kept;
  for (const auto& f : k.facets) {
    if (f.empty()) continue;
    bool covered = false;
    for (const auto& g : kept)
      if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  k.facets = std::move(kept);
  return k;
}

void ColoredGraph::check() const {
  for (int c : color)
    if (c < 1 || c > n_colors) fail(ErrorCode::PreconditionFailed, "vertex color out of range");
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= color.size() || static_cast<std::size_t>(b) >= color.size())
      fail(ErrorCode::PreconditionFailed, "edge uses an unknown vertex");
    if (color[a] == color[b]) fail(ErrorCode::PreconditionFailed, "edge inside a color class");
  }
}

SimplicialComplex sigma_nk(int n, int k) {
  if (n < 1 || k < 1) fail(ErrorCode::PreconditionFailed, "need n, k >= 1");
  SimplicialComplex c;
  for (int i = 1; i <= n; ++i)
    for (int w = 1; w <= k; ++w) c.labels.push_back("(" + std::to_string(i) + "," + std::to_string(w) + ")");
  const int size = std::min(n, k);
  std::vector<bool> used(k + 1, false);
  Simplex cur;
  // colors in increasing order, each takes an unused w or is skipped
  std::function<void(int)> rec = [&](int i) {
    if (static_cast<int>(cur.size()) == size) {
      c.facets.push_back(cur);
      return;
    }
    if (i > n || static_cast<int>(cur.size()) + (n - i + 1) < size) return;
    for (int w = 1; w <= k; ++w) {
      if (used[w]) continue;
      used[w] = true;
      cur.push_back((i - 1) * k + (w - 1));
      rec(i + 1);
      cur.pop_back();
      used[w] = false;
    }
    rec(i + 1);
  };
  rec(1);
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

namespace {

std::vector<std::vector<bool>> adjacency(const ColoredGraph& g) {
  std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = true;
  return adj;
}

std::vector<std::string> graph_labels(const ColoredGraph& g) {
  if (g.labels.size() == g.vertex_count()) return g.labels;
  std::vector<std::string> l;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) l.push_back("v" + std::to_string(v));
  return l;
}

}  // namespace

SimplicialComplex clique_complex(const ColoredGraph& g) {
  g.check();
  auto adj = adjacency(g);
  const int nv = static_cast<int>(g.vertex_count());
  SimplicialComplex c;
  c.labels = graph_labels(g);
  // Bron-Kerbosch with pivot
  std::function<void(Simplex&, std::vector<int>, std::vector<int>)> bk = [&](Simplex& r, std::vector<int> p,
                                                                               std::vector<int> x) {
    if (p.empty() && x.empty()) {
      Simplex s = r;
      std::sort(s.begin(), s.end());
      c.facets.push_back(s);
      return;
    }
    int pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
      for (int u : *set) {
        std::size_t cnt = 0;
        for (int v : p) cnt += adj[u][v];
        if (cnt > best) {
          best = cnt;
          pivot = u;
        }
      }
    std::vector<int> candidates;
    for (int v : p)
      if (!adj[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> np, nx;
      for (int u : p)
        if (adj[v][u]) np.push_back(u);
      for (int u : x)
        if (adj[v][u]) nx.push_back(u);
      r.push_back(v);
      bk(r, np, nx);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<int> all(nv);
  for (int v = 0; v < nv; ++v) all[v] = v;
  Simplex r;
  bk(r, all, {});
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

GammaReport check_gamma_conditions(const ColoredGraph& g) {
  g.check();
  auto adj = adjacency(g);
  const int n = g.n_colors;
  GammaReport rep;
  for (int i = 1; i <= n; ++i) {
    int size = static_cast<int>(std::count(g.color.begin(), g.color.end(), i));
    if (size < 2) {
      rep.ok = false;
      rep.color = i;
      rep.message = "color class " + std::to_string(i) + " has " + std::to_string(size) + " vertices";
      return rep;
    }
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<int> inside, outside;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) (g.color[v] == i ? inside : outside).push_back(static_cast<int>(v));
    const std::size_t s = std::min<std::size_t>(2 * (n - 1), outside.size());
    std::vector<int> pick;
    bool failed = false;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (failed) return;
      if (pick.size() == s) {
        int common = 0;
        for (int u : inside) {
          bool all = true;
          for (int w : pick) all = all && adj[u][w];
          common += all;
        }
        if (common < 2) {
          failed = true;
          rep.ok = false;
          rep.color = i;
          rep.witness = pick;
          rep.message = "only " + std::to_string(common) + " vertices of color " + std::to_string(i) +
                        " are adjacent to the whole witness";
        }
        return;
      }
      for (std::size_t k = from; k < outside.size(); ++k) {
        pick.push_back(outside[k]);
        rec(k + 1);
        pick.pop_back();
        if (failed) return;
      }
    };
    rec(0);
    if (failed) return rep;
  }
  return rep;
}

SimplicialComplex order_complex(const FinitePoset& p) {
  const std::size_t n = p.labels.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) le[a][a] = true;
  for (auto [a, b] : p.relations) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      fail(ErrorCode::NotAPartialOrder, "relation uses an unknown element");
    le[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (le[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (le[k][b]) le[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (le[a][b] && le[b][a])
        fail(ErrorCode::NotAPartialOrder, p.labels[a] + " and " + p.labels[b] + " are distinct but equivalent");
  // covers
  std::vector<std::vector<int>> up(n);
  std::vector<bool> minimal(n, true);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !le[a][b]) continue;
      minimal[b] = false;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && le[a][c] && le[c][b]) cover = false;
      if (cover) up[a].push_back(static_cast<int>(b));
    }
  SimplicialComplex c;
  c.labels = p.labels;
  Simplex chain;
  std::function<void(int)> walk = [&](int a) {
    chain.push_back(a);
    if (up[a].empty()) {
      Simplex s = chain;
      std::sort(s.begin(), s.end());
      c.facets.push_back(s);
      if (c.facets.size() > kFaceCap) fail(ErrorCode::SizeCapExceeded, "too many maximal chains");
    }
    for (int b : up[a]) walk(b);
    chain.pop_back();
  };
  for (std::size_t a = 0; a < n; ++a)
    if (minimal[a]) walk(static_cast<int>(a));
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

SimplicialComplex nerve(const std::vector<SimplicialComplex>& cover) {
  if (cover.empty()) fail(ErrorCode::NotACover, "empty cover");
  std::size_t nv = 0;
  for (const auto& m : cover) nv = std::max(nv, m.vertex_count());
  std::vector<Simplex> members_at(nv);
  for (std::size_t k = 0; k < cover.size(); ++k) {
    std::set<int> vs;
    for (const auto& f : cover[k].facets) vs.insert(f.begin(), f.end());
    for (int v : vs) members_at[v].push_back(static_cast<int>(k));
  }
  SimplicialComplex c;
  for (std::size_t k = 0; k < cover.size(); ++k) c.labels.push_back("U" + std::to_string(k));
  for (auto& s : members_at)
    if (!s.empty()) c.facets.push_back(s);
  return normalize(c);
}

SimplicialComplex nerve(const std::vector<SimplicialComplex>& cover, const SimplicialComplex& target) {
  std::set<Simplex> unioned;
  for (const auto& m : cover) {
    if (m.vertex_count() != target.vertex_count())
      fail(ErrorCode::NotACover, "member does not share the target's vertex set");
    for (const auto& dim : faces_by_dimension(m)) unioned.insert(dim.begin(), dim.end());
  }
  std::set<Simplex> wanted;
  for (const auto& dim : faces_by_dimension(target)) wanted.insert(dim.begin(), dim.end());
  if (unioned != wanted) fail(ErrorCode::NotACover, "members do not cover the target exactly");
  return nerve(cover);
}

ColoredGraph one_skeleton(const SimplicialComplex& k, const std::vector<int>& color, int n_colors) {
  ColoredGraph g;
  g.n_colors = n_colors;
  g.color = color;
  g.labels = k.labels;
  std::set<std::pair<int, int>> edges;
  for (const auto& f : k.facets)
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) edges.insert({std::min(f[a], f[b]), std::max(f[a], f[b])});
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

RegionDecomposition candidate_image(const RegionDecomposition& region, const CandidateMap& c) {
  if (c.vray_index >= region.vrays.size() || c.hray_index >= region.hrays.size())
    fail(ErrorCode::ImageNotInRegion, "candidate names a ray the region does not have");
  if (c.v_offset < 0 || c.h_offset < 0) fail(ErrorCode::ImageNotInRegion, "negative ray offset");
  VRay v = region.vrays[c.vray_index];
  v.start_y = add(v.start_y, c.v_offset);
  HRay h = region.hrays[c.hray_index];
  h.start_x = add(h.start_x, c.h_offset);
  for (const auto& p : c.extra_points) {
    if (!contains(region, p)) fail(ErrorCode::ImageNotInRegion, to_string(p) + " is outside the region");
    if (v.contains(p) || h.contains(p)) fail(ErrorCode::ImageNotInRegion, to_string(p) + " repeats a ray point");
  }
  return canonicalize({{v}, {h}, c.extra_points});
}

SimplicialComplex finite_sigma_alpha(int n, const RegionDecomposition& region,
                                     const std::vector<CandidateMap>& candidates) {
  if (region.vrays.size() != region.hrays.size() || region.vrays.size() < static_cast<std::size_t>(2 * n))
    fail(ErrorCode::PreconditionFailed, "region needs equally many vertical and horizontal rays, at least 2n");
  ColoredGraph g;
  g.n_colors = n;
  std::vector<RegionDecomposition> images;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const auto& c = candidates[k];
    if (c.quadrant < 1 || c.quadrant > n) fail(ErrorCode::PreconditionFailed, "candidate quadrant out of range");
    images.push_back(candidate_image(region, c));
    g.color.push_back(c.quadrant);
    g.labels.push_back("a" + std::to_string(k) + "@" + std::to_string(c.quadrant));
  }
  for (std::size_t a = 0; a < candidates.size(); ++a)
    for (std::size_t b = a + 1; b < candidates.size(); ++b)
      if (candidates[a].quadrant != candidates[b].quadrant && !intersects(images[a], images[b]))
        g.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  return clique_complex(g);
}

ColoredGraph random_colored_graph(int n, const std::vector<int>& parts, double drop, std::mt19937_64& rng) {
  ColoredGraph g;
  g.n_colors = n;
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < parts[i - 1]; ++k) {
      g.color.push_back(i);
      g.labels.push_back("c" + std::to_string(i) + "." + std::to_string(k + 1));
    }
  std::bernoulli_distribution keep(1.0 - drop);
  for (std::size_t a = 0; a < g.color.size(); ++a)
    for (std::size_t b = a + 1; b < g.color.size(); ++b)
      if (g.color[a] != g.color[b] && keep(rng)) g.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  return g;
}

}  // namespace houghton
