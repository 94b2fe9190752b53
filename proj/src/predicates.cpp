#include <cmath>
#include <cstddef>
#include <vector>

#include "vismesh/geom.hpp"

// Exact sign computation for the geometric predicates. The fast path is a
// standard floating-point filter; when the magnitude of the result is below
// the filter's error bound, the determinant is re-evaluated with error-free
// expansion arithmetic (non-overlapping sums of doubles), whose sign is exact.

namespace vismesh {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
const double kOrientErrBound = (3.0 + 16.0 * kEps) * kEps;
const double kIncircleErrBound = (10.0 + 96.0 * kEps) * kEps;

inline void two_sum(double a, double b, double& s, double& err) {
  s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  err = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& s, double& err) {
  s = a - b;
  const double bv = a - s;
  const double av = s + bv;
  err = (a - av) + (bv - b);
}

inline void two_prod(double a, double b, double& p, double& err) {
  p = a * b;
  err = std::fma(a, b, -p);
}

// An expansion is a sum of doubles stored least-significant first, with
// non-overlapping components. All operations eliminate zeros.
using Expansion = std::vector<double>;

Expansion from_diff(double a, double b) {
  double s, err;
  two_diff(a, b, s, err);
  Expansion e;
  if (err != 0.0) e.push_back(err);
  if (s != 0.0) e.push_back(s);
  return e;
}

// Merge-based sum of two expansions (Shewchuk's fast-expansion-sum).
Expansion expansion_sum(const Expansion& e, const Expansion& f) {
  if (e.empty()) return f;
  if (f.empty()) return e;
  Expansion g;
  g.reserve(e.size() + f.size());
  std::size_t ei = 0, fi = 0;
  auto next = [&]() {
    if (ei < e.size() && (fi >= f.size() || std::abs(e[ei]) < std::abs(f[fi])))
      return e[ei++];
    return f[fi++];
  };
  double q = next();
  while (ei < e.size() || fi < f.size()) {
    double s, err;
    two_sum(q, next(), s, err);
    if (err != 0.0) g.push_back(err);
    q = s;
  }
  if (q != 0.0) g.push_back(q);
  return g;
}

Expansion expansion_scale(const Expansion& e, double b) {
  Expansion g;
  if (e.empty() || b == 0.0) return g;
  g.reserve(e.size() * 2);
  double q, err;
  two_prod(e[0], b, q, err);
  if (err != 0.0) g.push_back(err);
  for (std::size_t i = 1; i < e.size(); ++i) {
    double p, perr;
    two_prod(e[i], b, p, perr);
    double s, serr;
    two_sum(q, perr, s, serr);
    if (serr != 0.0) g.push_back(serr);
    two_sum(p, s, q, err);
    if (err != 0.0) g.push_back(err);
  }
  if (q != 0.0) g.push_back(q);
  return g;
}

Expansion expansion_mul(const Expansion& e, const Expansion& f) {
  Expansion g;
  for (double c : e) g = expansion_sum(g, expansion_scale(f, c));
  return g;
}

Expansion expansion_neg(Expansion e) {
  for (double& c : e) c = -c;
  return e;
}

int expansion_sign(const Expansion& e) {
  if (e.empty()) return 0;
  const double top = e.back();  // most significant component dominates
  return top > 0.0 ? 1 : -1;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Exact sign of (ax-cx)*(by-cy) - (ay-cy)*(bx-cx).
int det2_exact(double ax, double ay, double bx, double by, double cx,
               double cy) {
  const Expansion left =
      expansion_mul(from_diff(ax, cx), from_diff(by, cy));
  const Expansion right =
      expansion_mul(from_diff(ay, cy), from_diff(bx, cx));
  return expansion_sign(expansion_sum(left, expansion_neg(right)));
}

}  // namespace

Orientation orient2d(Point a, Point b, Point c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return static_cast<Orientation>(sign_of(det));
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return static_cast<Orientation>(sign_of(det));
    detsum = -detleft - detright;
  } else {
    return static_cast<Orientation>(sign_of(-detright));
  }
  if (std::abs(det) >= kOrientErrBound * detsum)
    return static_cast<Orientation>(sign_of(det));
  return static_cast<Orientation>(det2_exact(a.x, a.y, b.x, b.y, c.x, c.y));
}

int cross4_sign(Point p, Point q, Point r, Point s) {
  // Same determinant shape as orient2d, so the same error bound applies.
  const double detleft = (q.x - p.x) * (s.y - r.y);
  const double detright = (q.y - p.y) * (s.x - r.x);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sign_of(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign_of(det);
    detsum = -detleft - detright;
  } else {
    return sign_of(-detright);
  }
  if (std::abs(det) >= kOrientErrBound * detsum) return sign_of(det);

  const Expansion left = expansion_mul(from_diff(q.x, p.x), from_diff(s.y, r.y));
  const Expansion right =
      expansion_mul(from_diff(q.y, p.y), from_diff(s.x, r.x));
  return expansion_sign(expansion_sum(left, expansion_neg(right)));
}

int incircle_sign(Point pa, Point pb, Point pc, Point pd) {
  const double adx = pa.x - pd.x, ady = pa.y - pd.y;
  const double bdx = pb.x - pd.x, bdy = pb.y - pd.y;
  const double cdx = pc.x - pd.x, cdy = pc.y - pd.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  if (std::abs(det) > kIncircleErrBound * permanent) return sign_of(det);

  // Exact evaluation on the translated points; translation differences are
  // kept as expansions, so no rounding occurs anywhere.
  const Expansion eadx = from_diff(pa.x, pd.x), eady = from_diff(pa.y, pd.y);
  const Expansion ebdx = from_diff(pb.x, pd.x), ebdy = from_diff(pb.y, pd.y);
  const Expansion ecdx = from_diff(pc.x, pd.x), ecdy = from_diff(pc.y, pd.y);

  auto lift = [](const Expansion& x, const Expansion& y) {
    return expansion_sum(expansion_mul(x, x), expansion_mul(y, y));
  };
  auto minor2 = [](const Expansion& x0, const Expansion& y1,
                   const Expansion& x1, const Expansion& y0) {
    return expansion_sum(expansion_mul(x0, y1),
                         expansion_neg(expansion_mul(x1, y0)));
  };

  Expansion total = expansion_mul(lift(eadx, eady), minor2(ebdx, ecdy, ecdx, ebdy));
  total = expansion_sum(
      total, expansion_mul(lift(ebdx, ebdy), minor2(ecdx, eady, eadx, ecdy)));
  total = expansion_sum(
      total, expansion_mul(lift(ecdx, ecdy), minor2(eadx, ebdy, ebdx, eady)));
  return expansion_sign(total);
}

}  // namespace vismesh
