#include "absurf/polygon.hpp"

#include <algorithm>

namespace absurf {

Rat LatticePolygon::eval_at(const Rat& x) const {
  if (x < 0 || x > span) throw std::invalid_argument("eval_at: outside span");
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    Rat x0(vertices[i].first), x1(vertices[i + 1].first);
    if (x > x1) continue;
    const Rat& y0 = vertices[i].second;
    const Rat& y1 = vertices[i + 1].second;
    Rat t = (x - x0) / (x1 - x0);
    return y0 + t * (y1 - y0);
  }
  return vertices.back().second;
}

bool LatticePolygon::convex() const {
  for (size_t i = 0; i + 2 < vertices.size(); ++i) {
    Rat dx1(vertices[i + 1].first - vertices[i].first);
    Rat dx2(vertices[i + 2].first - vertices[i + 1].first);
    Rat dy1 = vertices[i + 1].second - vertices[i].second;
    Rat dy2 = vertices[i + 2].second - vertices[i + 1].second;
    if (dy1 * dx2 > dy2 * dx1) return false;  // slope decreased
  }
  return true;
}

std::array<Int, 5> shifted_coefficients(const WeilSurfacePolynomial& w) {
  const Int& q = w.q.q;
  Int q0 = w.point_count();
  if (q0 == 0)
    throw inapplicable_error("shifted_coefficients: f(1) = 0, polynomial degenerate");
  return {q0, -(4 + 3 * w.a1 + 2 * w.a2 + w.a1 * q), 6 + 3 * w.a1 + w.a2, -(4 + w.a1),
          Int(1)};
}

LatticePolygon newton_polygon(std::span<const Int> coeffs, const Int& ell) {
  if (coeffs.empty() || coeffs.front() == 0)
    throw std::invalid_argument("newton_polygon: constant term must be nonzero");
  if (coeffs.back() == 0)
    throw std::invalid_argument("newton_polygon: leading coefficient must be nonzero");
  struct Pt {
    long x, y;
  };
  std::vector<Pt> pts;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;  // valuation +infinity: no hull point
    pts.push_back({long(i), long(nu(ell, coeffs[i]).value())});
  }
  // Andrew lower hull over points with strictly increasing x
  std::vector<Pt> hull;
  for (const Pt& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull[hull.size() - 1];
      if ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  LatticePolygon out;
  out.span = int(coeffs.size()) - 1;
  for (const Pt& p : hull) out.vertices.emplace_back(int(p.x), Rat(p.y));
  return out;
}

LatticePolygon hodge_polygon(const EllGroupProfile& g) {
  for (size_t i = 0; i + 1 < 4; ++i)
    if (g.exponents[i] > g.exponents[i + 1])
      throw std::invalid_argument("hodge_polygon: exponents must ascend");
  LatticePolygon out;
  out.span = 4;
  for (int i = 0; i < 4; ++i) {
    unsigned long h = 0;
    for (int j = 0; j < 4 - i; ++j) h += g.exponents[j];
    out.vertices.emplace_back(i, Rat(long(h)));
  }
  out.vertices.emplace_back(4, Rat(0));
  return out;
}

bool lies_on_or_above(const LatticePolygon& np, const LatticePolygon& hp) {
  if (np.span != hp.span)
    throw std::invalid_argument("lies_on_or_above: span mismatch");
  // vertices sit at integer abscissae, so both sides are linear between
  // consecutive integers and integer evaluation decides the comparison
  for (int x = 0; x <= np.span; ++x)
    if (np.eval_at(Rat(x)) < hp.eval_at(Rat(x))) return false;
  return true;
}

bool rybakov_accepts(const WeilSurfacePolynomial& w, const GroupShape& shape) {
  if (!ruck_classify(w.q, w.a1, w.a2).field_simple())
    throw inapplicable_error("rybakov_accepts: needs a FieldSimple class");
  Int N = shape.order();
  if (N != w.point_count())
    throw inapplicable_error("rybakov_accepts: group order differs from f(1)");
  auto qs = shifted_coefficients(w);
  for (const Int& ell : shape.prime_support()) {
    EllGroupProfile prof{ell, shape.ell_exponents(ell)};
    if (!lies_on_or_above(newton_polygon(qs, ell), hodge_polygon(prof))) return false;
  }
  return true;
}

}  // namespace absurf
