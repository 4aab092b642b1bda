#pragma once
// newton.hpp - Lower convex hulls, certified ghost Newton polygons, and the
// arithmetic-family (global) polygon surgery.
//
// All hulls are exact: slopes are Rat, comparisons cross-multiplied.  A
// "certified" polygon comes with a truncation point N at which convexity
// plus the growth of deg g_n guarantee no point beyond N can change the
// first `count` slopes.

#include "ghost/weight.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ghost {

// thrown when no truncation certificate closes before the hard cap
struct stability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NewtonPolygon {
    // hull vertices, x strictly increasing, slopes strictly increasing
    std::vector<std::pair<long long, Rat>> vertices;

    long long length() const; // x-extent = number of slopes with multiplicity
    std::vector<Rat> slopes() const;                 // ascending multiset
    std::vector<Rat> first_slopes(long long count) const;
    Rat slope_at(long long i) const; // i-th slope, 1-based
    Rat value_at(long long x) const; // hull height at integer x
};

// lower hull of (x, y); x strictly increasing, points with y = inf skipped
NewtonPolygon lower_hull(const std::vector<std::pair<long long, Rat>>& pts);

// polygon with the given ascending slope multiset, based at (0, 0)
NewtonPolygon polygon_from_slopes(const std::vector<Rat>& slopes);

// scale both coordinates by m >= 1 (each slope repeated m times)
NewtonPolygon stretch(const NewtonPolygon& np, long long m);

// polygon whose slope multiset is the merged union of the arguments'
NewtonPolygon merge(const NewtonPolygon& a, const NewtonPolygon& b);

struct CertifiedNp {
    NewtonPolygon np;    // hull of (n, v_p(g_n(w*))), n in [0, N]
    long long count = 0; // slopes certified final
    long long N = 0;     // truncation that closed the certificate
};

// first `count` slopes of NP(G(w*, -)), rigorously.  Certificate: the hull
// over [0, N] spans past x = count, and for the vertex (x_v, y_v) closing
// the segment of the count-th slope, with mu0 = min(r, 1),
//   mu0 * (deg g_{N+2} - deg g_{N+1}) >= slope_count   and
//   mu0 * deg g_{N+1} > y_v + slope_count * (N+1 - x_v);
// since v_p(g_n(w*)) >= mu0 * deg g_n and the degree increments are strictly
// increasing, every point beyond N stays strictly above the supporting line,
// so the hull through x_v is final.  Throws stability_error past n = 2^14.
CertifiedNp ghost_np(const GhostContext& ctx, const WeightPoint& w, long long count);

// First `count` slopes of the global polygon attached to a residual
// multiplicity pattern (m, m'').  The local polygon is stretched by m; when
// the boundary character splits the ordinary part, the slope-0 segment is
// resized: s_eps = 0 drops m'' zeros, s_eps = p-2-a gains m''.  Nonsplit
// characters require m'' = 0.
NewtonPolygon global_np(const GhostContext& ctx, const WeightPoint& w, long long count,
                        long long m, long long m_dprime);

// Same polygon, stated through the full decomposition m = m' + m''.  split
// data must satisfy m = m' + m''; nonsplit data must carry the trivial
// decomposition (m' = m, m'' = 0).  For split data whose boundary character
// is not one of the two exceptional ones the decomposition is inert and the
// polygon is the plain stretch by m.
NewtonPolygon global_np(const GhostContext& ctx, const WeightPoint& w, long long m,
                        long long m_prime, long long m_dprime, bool split,
                        long long count);

}  // namespace ghost
