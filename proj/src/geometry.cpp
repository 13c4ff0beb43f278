#include "phiehr/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "simplex_lp.hpp"

namespace phiehr {

namespace {

using detail::LpStatus;

// Convex-combination LP: minimize cost over { mu >= 0 : sum mu_i pts[i] = target,
// sum mu_i = 1 }. Returns nullopt when infeasible.
std::optional<Rational> combination_lp(const std::vector<Point>& pts, const Point& target,
                                       const RatVec& cost) {
  if (pts.empty()) return std::nullopt;
  const std::size_t d = target.size();
  std::vector<RatVec> a(d + 1, RatVec(pts.size()));
  RatVec b(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) a[i][j] = pts[j][i];
    b[i] = target[i];
  }
  for (std::size_t j = 0; j < pts.size(); ++j) a[d][j] = 1;
  b[d] = 1;
  detail::LpResult r = detail::solve_lp(std::move(a), std::move(b), cost);
  if (r.status != LpStatus::optimal) return std::nullopt;
  return r.objective;
}

bool in_convex_hull(const std::vector<Point>& pts, const Point& target) {
  return combination_lp(pts, target, RatVec(pts.size(), Rational(0))).has_value();
}

Point midpoint(const Point& a, const Point& b) {
  Point m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = (a[i] + b[i]) / 2;
  return m;
}

// Small prime sequence for deterministic generic perturbations.
const std::vector<long>& perturbation_primes() {
  static const std::vector<long> primes = [] {
    std::vector<long> ps;
    long candidate = 10007;
    while (ps.size() < 512) {
      bool prime = true;
      for (long f = 3; f * f <= candidate; f += 2)
        if (candidate % f == 0) {
          prime = false;
          break;
        }
      if (prime) ps.push_back(candidate);
      candidate += 2;
    }
    return ps;
  }();
  return primes;
}

}  // namespace

std::size_t affine_rank(const std::vector<Point>& pts) {
  if (pts.empty()) return 0;
  std::vector<RatVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec r(pts[i].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  return rational_rank(std::move(rows));
}

Polytope::Polytope(std::size_t dim_ambient, std::vector<Point> points) : dim_(dim_ambient) {
  for (const Point& p : points)
    if (p.size() != dim_) throw std::invalid_argument("point dimension mismatch");
  // dedupe exact duplicates, preserving first occurrences
  std::vector<Point> unique;
  for (Point& p : points) {
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
  }
  if (unique.empty()) throw std::invalid_argument("polytope needs at least one point");
  if (unique.size() == 1) {
    vertices_ = std::move(unique);
    return;
  }
  // keep extreme points only
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<Point> others;
    others.reserve(unique.size() - 1);
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (!in_convex_hull(others, unique[i])) vertices_.push_back(unique[i]);
  }
}

std::size_t Polytope::dim_intrinsic() const { return affine_rank(vertices_); }

bool Polytope::is_lattice() const {
  for (const Point& v : vertices_)
    for (const Rational& c : v)
      if (!is_integral(c)) return false;
  return true;
}

std::vector<Point> Polytope::dilated_vertices(const Integer& n) const {
  std::vector<Point> out;
  out.reserve(vertices_.size());
  for (const Point& v : vertices_) {
    Point w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * Rational(n);
    out.push_back(std::move(w));
  }
  return out;
}

bool HalfOpenSimplex::is_lattice() const {
  for (const Point& v : vertices)
    for (const Rational& c : v)
      if (!is_integral(c)) return false;
  return true;
}

HalfOpenSimplex HalfOpenSimplex::complement() const {
  HalfOpenSimplex c = *this;
  for (std::size_t i = 0; i < c.removed.size(); ++i) c.removed[i] = !c.removed[i];
  return c;
}

std::optional<RatVec> HalfOpenSimplex::barycentric(const Point& x) const {
  const std::size_t d = x.size();
  std::vector<RatVec> rows(d + 1, RatVec(vertices.size()));
  RatVec rhs(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) rows[i][j] = vertices[j][i];
    rhs[i] = x[i];
  }
  for (std::size_t j = 0; j < vertices.size(); ++j) rows[d][j] = 1;
  rhs[d] = 1;
  return solve_linear(rows, rhs);
}

bool HalfOpenSimplex::contains(const Point& x) const {
  auto lambda = barycentric(x);
  if (!lambda) return false;
  for (std::size_t i = 0; i < lambda->size(); ++i) {
    if (removed[i] ? (*lambda)[i] <= 0 : (*lambda)[i] < 0) return false;
  }
  return true;
}

bool HalfOpenSimplex::contains_dilated(const Point& x, const Integer& n) const {
  if (n == 0) {
    // 0 * simplex is the origin (a closed point) only when no facet is removed
    // in a way that empties it; by convention the dilate by 0 of any half-open
    // simplex with at least one kept facet... we use: 0*S = {0} if S nonempty
    // and all-removed interior still dilates to {0} for n=0 only when S = closed.
    // The series modules never call this with n = 0.
    for (const Rational& c : x)
      if (c != 0) return false;
    return true;
  }
  Point scaled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = x[i] / Rational(n);
  return contains(scaled);
}

void validate_half_open_simplex(const HalfOpenSimplex& s, std::size_t dim_ambient) {
  if (s.vertices.empty()) throw std::invalid_argument("simplex needs vertices");
  for (const Point& v : s.vertices)
    if (v.size() != dim_ambient) throw std::invalid_argument("vertex dimension mismatch");
  if (s.removed.size() != s.vertices.size())
    throw std::invalid_argument("one removed flag per facet required");
  if (affine_rank(s.vertices) != s.vertices.size() - 1)
    throw std::invalid_argument("simplex vertices must be affinely independent");
}

namespace {

// ---- placing triangulation with stellar insertion for interior points ----

struct TriBuilder {
  const std::vector<Point>& pts;     // in embedded coordinates (rank-dim)
  std::vector<std::vector<std::size_t>> simplices;

  // boundary facets: sorted vertex-index tuple -> (count, one simplex it bounds)
  std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> facet_use() const {
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> use;
    for (std::size_t s = 0; s < simplices.size(); ++s) {
      for (std::size_t drop = 0; drop < simplices[s].size(); ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t j = 0; j < simplices[s].size(); ++j)
          if (j != drop) f.push_back(simplices[s][j]);
        std::sort(f.begin(), f.end());
        auto [it, inserted] = use.emplace(std::move(f), std::make_pair(1, s));
        if (!inserted) it->second.first += 1;
      }
    }
    return use;
  }

  // hyperplane through the facet points: returns (normal a, offset b) with
  // a . x = b on the facet; nullopt if degenerate (cannot happen for facets
  // of nondegenerate simplices).
  static std::optional<std::pair<RatVec, Rational>> hyperplane(const std::vector<Point>& fpts) {
    const std::size_t d = fpts[0].size();
    // kernel vector of rows (p_i - p_0)
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < fpts.size(); ++i) {
      RatVec r(d);
      for (std::size_t j = 0; j < d; ++j) r[j] = fpts[i][j] - fpts[0][j];
      rows.push_back(std::move(r));
    }
    // Gaussian elimination; then pick a free column and back-substitute
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < rows.size(); ++col) {
      std::size_t p = row;
      while (p < rows.size() && rows[p][col] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[row]);
      Rational inv = rows[row][col];
      for (std::size_t j = 0; j < d; ++j) rows[row][j] /= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == row || rows[i][col] == 0) continue;
        Rational f = rows[i][col];
        for (std::size_t j = 0; j < d; ++j) rows[i][j] -= f * rows[row][j];
      }
      pivot_cols.push_back(col);
      ++row;
    }
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::size_t free_col = d;
    for (std::size_t c = 0; c < d; ++c)
      if (!is_pivot[c]) {
        free_col = c;
        break;
      }
    if (free_col == d) return std::nullopt;
    RatVec a(d, Rational(0));
    a[free_col] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) a[pivot_cols[k]] = -rows[k][free_col];
    Rational b = 0;
    for (std::size_t j = 0; j < d; ++j) b += a[j] * fpts[0][j];
    return std::make_pair(std::move(a), std::move(b));
  }

  void insert(std::size_t pidx) {
    const Point& p = pts[pidx];
    auto use = facet_use();
    std::vector<std::vector<std::size_t>> additions;
    bool beyond_any = false;
    for (const auto& [facet, cnt] : use) {
      if (cnt.first != 1) continue;  // interior facet
      std::vector<Point> fpts;
      for (std::size_t v : facet) fpts.push_back(pts[v]);
      auto hp = hyperplane(fpts);
      if (!hp) throw std::logic_error("degenerate facet in triangulation");
      const auto& [a, b] = *hp;
      // orient: opposite vertex of the owning simplex is on the <= side
      std::size_t owner = cnt.second;
      std::size_t opp = simplices[owner][0];
      for (std::size_t v : simplices[owner])
        if (std::find(facet.begin(), facet.end(), v) == facet.end()) opp = v;
      Rational side_opp = -b, side_p = -b;
      for (std::size_t j = 0; j < a.size(); ++j) {
        side_opp += a[j] * pts[opp][j];
        side_p += a[j] * p[j];
      }
      if (side_opp == 0) throw std::logic_error("flat simplex in triangulation");
      // p strictly beyond the facet: opposite sign from the owning simplex
      if ((side_opp < 0 && side_p > 0) || (side_opp > 0 && side_p < 0)) {
        beyond_any = true;
        std::vector<std::size_t> s(facet.begin(), facet.end());
        s.push_back(pidx);
        additions.push_back(std::move(s));
      }
    }
    if (beyond_any) {
      for (auto& s : additions) simplices.push_back(std::move(s));
      return;
    }
    // p lies in the current hull: stellar-subdivide every simplex whose
    // closure contains it
    std::vector<std::vector<std::size_t>> next;
    bool found = false;
    for (const auto& s : simplices) {
      HalfOpenSimplex closed;
      for (std::size_t v : s) closed.vertices.push_back(pts[v]);
      closed.removed.assign(s.size(), false);
      auto lambda = closed.barycentric(p);
      bool inside = lambda.has_value();
      if (inside)
        for (const Rational& l : *lambda) inside = inside && l >= 0;
      if (!inside) {
        next.push_back(s);
        continue;
      }
      found = true;
      // replace s by cones from p over the facets not containing p
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        if ((*lambda)[drop] == 0) continue;  // p lies on that facet's hyperplane
        std::vector<std::size_t> piece;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) piece.push_back(s[j]);
        piece.push_back(pidx);
        next.push_back(std::move(piece));
      }
    }
    if (!found) throw std::logic_error("point neither beyond nor inside; inconsistent hull state");
    simplices = std::move(next);
  }
};

// Embed points into coordinates of their affine hull (exact).
struct Embedding {
  std::vector<Point> coords;       // rank-dimensional coordinates
  std::size_t rank;
};

Embedding embed_affine(const std::vector<Point>& pts) {
  const std::size_t rank = affine_rank(pts);
  // choose affine basis greedily
  std::vector<std::size_t> basis;  // indices; basis[0] is the origin
  basis.push_back(0);
  std::vector<Point> dirs;
  for (std::size_t i = 1; i < pts.size() && dirs.size() < rank; ++i) {
    RatVec d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    std::vector<RatVec> test = dirs;
    test.push_back(d);
    if (rational_rank(test) > dirs.size()) {
      dirs.push_back(std::move(d));
      basis.push_back(i);
    }
  }
  if (dirs.size() != rank) throw std::logic_error("affine basis extraction failed");
  Embedding e;
  e.rank = rank;
  // coordinates: solve dirs^T xi = (p - p0)
  std::vector<RatVec> rows(pts[0].size(), RatVec(rank));
  for (std::size_t i = 0; i < pts[0].size(); ++i)
    for (std::size_t k = 0; k < rank; ++k) rows[i][k] = dirs[k][i];
  for (const Point& p : pts) {
    RatVec rhs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) rhs[i] = p[i] - pts[0][i];
    auto xi = solve_linear(rows, rhs);
    if (!xi) throw std::invalid_argument("points do not lie in a common affine subspace");
    e.coords.push_back(std::move(*xi));
  }
  return e;
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate_point_config(const std::vector<Point>& pts) {
  if (pts.empty()) return {};
  Embedding emb = embed_affine(pts);
  if (emb.rank == 0) return {{0}};

  // greedy initial simplex over the full set (so no rank growth happens later)
  std::vector<std::size_t> init;
  init.push_back(0);
  {
    std::vector<RatVec> dirs;
    for (std::size_t i = 1; i < pts.size() && dirs.size() < emb.rank; ++i) {
      RatVec d(emb.rank);
      for (std::size_t j = 0; j < emb.rank; ++j) d[j] = emb.coords[i][j] - emb.coords[0][j];
      std::vector<RatVec> test = dirs;
      test.push_back(d);
      if (rational_rank(test) > dirs.size()) {
        dirs.push_back(std::move(d));
        init.push_back(i);
      }
    }
  }

  TriBuilder builder{emb.coords, {init}};
  std::set<std::size_t> used(init.begin(), init.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (used.count(i)) continue;
    builder.insert(i);
    used.insert(i);
  }
  return builder.simplices;
}

namespace {

std::vector<HalfOpenSimplex> assign_flags(const std::vector<Point>& verts,
                                          const std::vector<std::vector<std::size_t>>& tri) {
  // generic reference point: perturbed centroid of the first simplex
  const auto& primes = perturbation_primes();
  const std::size_t d = verts[0].size();
  for (std::size_t attempt = 0; attempt * d + d <= primes.size(); ++attempt) {
    Point ref(d, Rational(0));
    for (std::size_t v : tri[0])
      for (std::size_t j = 0; j < d; ++j) ref[j] += verts[v][j];
    for (std::size_t j = 0; j < d; ++j) {
      ref[j] /= Rational(tri[0].size());
      Rational eps(1, primes[attempt * d + j]);
      eps /= Rational(Integer(1) << attempt);
      ref[j] += eps;
    }
    // genericity: no zero barycentric coordinate anywhere, and the reference
    // point stays interior to the first simplex
    bool ok = true;
    std::vector<RatVec> lambdas;
    for (const auto& s : tri) {
      HalfOpenSimplex hos;
      for (std::size_t v : s) hos.vertices.push_back(verts[v]);
      hos.removed.assign(s.size(), false);
      auto lambda = hos.barycentric(ref);
      if (!lambda) {
        ok = false;
        break;
      }
      for (const Rational& l : *lambda)
        if (l == 0) {
          ok = false;
          break;
        }
      if (!ok) break;
      lambdas.push_back(std::move(*lambda));
    }
    if (ok)
      for (const Rational& l : lambdas[0])
        if (l < 0) ok = false;
    if (!ok) continue;

    std::vector<HalfOpenSimplex> out;
    for (std::size_t s = 0; s < tri.size(); ++s) {
      HalfOpenSimplex hos;
      for (std::size_t v : tri[s]) hos.vertices.push_back(verts[v]);
      hos.removed.resize(tri[s].size());
      for (std::size_t i = 0; i < tri[s].size(); ++i) hos.removed[i] = lambdas[s][i] < 0;
      out.push_back(std::move(hos));
    }
    return out;
  }
  throw std::logic_error("could not find a generic reference point");
}

}  // namespace

std::vector<HalfOpenSimplex> half_open_decomposition(const Polytope& p,
                                                     const std::vector<std::size_t>& order) {
  if (!p.is_full_dimensional())
    throw std::invalid_argument("half-open decomposition requires a full-dimensional polytope");
  std::vector<Point> verts;
  verts.reserve(order.size());
  for (std::size_t i : order) verts.push_back(p.vertices().at(i));
  auto tri = triangulate_point_config(verts);
  return assign_flags(verts, tri);
}

std::vector<HalfOpenSimplex> half_open_decomposition(const Polytope& p) {
  std::vector<std::size_t> order(p.vertices().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return half_open_decomposition(p, order);
}

namespace {

void bounding_box(const std::vector<Point>& verts, IntVec& lo, IntVec& hi) {
  const std::size_t d = verts[0].size();
  lo.assign(d, 0);
  hi.assign(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    Rational mn = verts[0][j], mx = verts[0][j];
    for (const Point& v : verts) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = ceil_of(mn);
    hi[j] = floor_of(mx);
  }
}

template <typename Fn>
void for_each_box_point(const IntVec& lo, const IntVec& hi, Fn&& fn) {
  const std::size_t d = lo.size();
  for (std::size_t j = 0; j < d; ++j)
    if (lo[j] > hi[j]) return;
  IntVec x = lo;
  for (;;) {
    fn(x);
    std::size_t j = 0;
    for (; j < d; ++j) {
      x[j] += 1;
      if (x[j] <= hi[j]) break;
      x[j] = lo[j];
    }
    if (j == d) break;
  }
}

}  // namespace

bool validate_decomposition(const Polytope& p, const std::vector<HalfOpenSimplex>& pieces,
                            const Integer& max_dilate) {
  // n = 0: the 0-dilate of a half-open simplex contains a lattice point (the
  // origin) exactly when no facet is removed, so a partition needs exactly
  // one fully closed piece.
  {
    int closed_pieces = 0;
    for (const HalfOpenSimplex& s : pieces) {
      bool closed = true;
      for (bool r : s.removed) closed = closed && !r;
      if (closed) ++closed_pieces;
    }
    if (closed_pieces != 1) return false;
  }
  for (Integer n = 1; n <= max_dilate; ++n) {
    std::vector<Point> dverts = p.dilated_vertices(n);
    IntVec lo, hi;
    bounding_box(dverts, lo, hi);
    bool ok = true;
    for_each_box_point(lo, hi, [&](const IntVec& x) {
      if (!ok) return;
      Point q(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) q[i] = Rational(x[i]);
      int open_count = 0;
      for (const HalfOpenSimplex& s : pieces)
        if (s.contains_dilated(q, n)) open_count += 1;
      bool in_p = in_convex_hull(dverts, q);
      if (open_count != (in_p ? 1 : 0)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<VertexCone> vertex_cones(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::invalid_argument("degenerate polytope");
  const auto& verts = p.vertices();
  std::vector<VertexCone> cones;
  if (verts.size() == 1) return {VertexCone{verts[0], {}}};
  for (std::size_t i = 0; i < verts.size(); ++i) {
    VertexCone cone;
    cone.apex = verts[i];
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j == i) continue;
      // [v_i, v_j] is an edge iff no other vertex takes positive weight in a
      // representation of the midpoint.
      Point m = midpoint(verts[i], verts[j]);
      RatVec cost(verts.size(), Rational(-1));
      cost[i] = 0;
      cost[j] = 0;
      auto opt = combination_lp(verts, m, cost);
      if (!opt) throw std::logic_error("midpoint of two vertices must be in the hull");
      if (*opt == 0) {
        RatVec dir(verts[j].size());
        for (std::size_t k = 0; k < dir.size(); ++k) dir[k] = verts[j][k] - verts[i][k];
        cone.generators.push_back(primitive_direction(dir));
      }
    }
    std::sort(cone.generators.begin(), cone.generators.end(),
              [](const IntVec& a, const IntVec& b) { return lex_compare(a, b) < 0; });
    cones.push_back(std::move(cone));
  }
  return cones;
}

namespace {

RatVec cone_coordinates(const std::vector<IntVec>& gens, const RatVec& x) {
  IntegerMatrix u = IntegerMatrix::from_columns(gens);
  auto lambda = solve_rational(u, x);
  if (!lambda) throw std::invalid_argument("point outside the cone span");
  return *lambda;
}

}  // namespace

std::vector<HalfOpenCone> cone_simplicial_split(const VertexCone& k) {
  const auto& gens = k.generators;
  if (gens.empty()) return {HalfOpenCone{{}, {}}};
  const std::size_t d = gens[0].size();
  IntegerMatrix u = IntegerMatrix::from_columns(gens);
  const std::size_t rank = integer_rank(u);
  if (gens.size() == rank) {
    return {HalfOpenCone{gens, std::vector<bool>(gens.size(), false)}};
  }

  // pointedness and a cross-section functional: h with h . g_i >= 1.
  // Variables h = hp - hm (free split), slack s_i: g_i.hp - g_i.hm - s_i = 1.
  {
    std::vector<RatVec> a(gens.size(), RatVec(2 * d + gens.size(), Rational(0)));
    RatVec b(gens.size(), Rational(1));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        a[i][j] = Rational(gens[i][j]);
        a[i][d + j] = Rational(-gens[i][j]);
      }
      a[i][2 * d + i] = -1;
    }
    detail::LpResult r = detail::solve_lp(std::move(a), std::move(b),
                                          RatVec(2 * d + gens.size(), Rational(0)));
    if (r.status != LpStatus::optimal) throw std::invalid_argument("cone is not pointed");
    RatVec h(d);
    for (std::size_t j = 0; j < d; ++j) h[j] = r.x[j] - r.x[d + j];
    // cross-section points g_i / (h . g_i)
    std::vector<Point> section;
    for (const IntVec& g : gens) {
      Rational hg = 0;
      for (std::size_t j = 0; j < d; ++j) hg += h[j] * Rational(g[j]);
      Point q(d);
      for (std::size_t j = 0; j < d; ++j) q[j] = Rational(g[j]) / hg;
      section.push_back(std::move(q));
    }
    auto tri = triangulate_point_config(section);

    // half-open flags from a generic interior ray, in conic coordinates
    const auto& primes = perturbation_primes();
    for (std::size_t attempt = 0; attempt * gens.size() + gens.size() <= primes.size();
         ++attempt) {
      RatVec ref(d, Rational(0));
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Rational w = 1 + Rational(1, primes[attempt * gens.size() + i]);
        for (std::size_t j = 0; j < d; ++j) ref[j] += w * Rational(gens[i][j]);
      }
      bool ok = true;
      std::vector<RatVec> lambdas;
      for (const auto& s : tri) {
        std::vector<IntVec> piece;
        for (std::size_t v : s) piece.push_back(gens[v]);
        RatVec lambda = cone_coordinates(piece, ref);
        for (const Rational& l : lambda)
          if (l == 0) ok = false;
        if (!ok) break;
        lambdas.push_back(std::move(lambda));
      }
      if (!ok) continue;
      std::vector<HalfOpenCone> out;
      for (std::size_t s = 0; s < tri.size(); ++s) {
        HalfOpenCone c;
        for (std::size_t v : tri[s]) c.generators.push_back(gens[v]);
        c.open_flags.resize(tri[s].size());
        for (std::size_t i = 0; i < tri[s].size(); ++i) c.open_flags[i] = lambdas[s][i] < 0;
        out.push_back(std::move(c));
      }
      return out;
    }
    throw std::logic_error("could not find a generic interior ray");
  }
}

bool cone_contains(const HalfOpenCone& c, const Point& apex, const Point& x) {
  RatVec delta(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) delta[i] = x[i] - apex[i];
  if (c.generators.empty()) {
    for (const Rational& v : delta)
      if (v != 0) return false;
    return true;
  }
  IntegerMatrix u = IntegerMatrix::from_columns(c.generators);
  auto lambda = solve_rational(u, delta);
  if (!lambda) return false;
  for (std::size_t i = 0; i < lambda->size(); ++i) {
    if (c.open_flags[i] ? (*lambda)[i] <= 0 : (*lambda)[i] < 0) return false;
  }
  return true;
}

}  // namespace phiehr
