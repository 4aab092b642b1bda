#include "ghost/newton.hpp"

#include <algorithm>

namespace ghost {

long long NewtonPolygon::length() const {
    if (vertices.size() < 2) return 0;
    return vertices.back().first - vertices.front().first;
}

std::vector<Rat> NewtonPolygon::slopes() const {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        long long run = vertices[i].first - vertices[i - 1].first;
        Rat s = (vertices[i].second - vertices[i - 1].second) / Rat(run);
        for (long long j = 0; j < run; ++j) out.push_back(s);
    }
    return out;
}

std::vector<Rat> NewtonPolygon::first_slopes(long long count) const {
    if (count < 0 || count > length())
        throw std::out_of_range("NewtonPolygon::first_slopes");
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::size_t i = 1; i < vertices.size() && static_cast<long long>(out.size()) < count; ++i) {
        long long run = vertices[i].first - vertices[i - 1].first;
        Rat s = (vertices[i].second - vertices[i - 1].second) / Rat(run);
        for (long long j = 0; j < run && static_cast<long long>(out.size()) < count; ++j)
            out.push_back(s);
    }
    return out;
}

Rat NewtonPolygon::slope_at(long long i) const {
    if (i < 1 || i > length()) throw std::out_of_range("NewtonPolygon::slope_at");
    long long x0 = vertices.front().first;
    for (std::size_t j = 1; j < vertices.size(); ++j) {
        if (vertices[j].first - x0 >= i)
            return (vertices[j].second - vertices[j - 1].second) /
                   Rat(vertices[j].first - vertices[j - 1].first);
    }
    throw std::logic_error("NewtonPolygon::slope_at: unreachable");
}

Rat NewtonPolygon::value_at(long long x) const {
    if (vertices.empty() || x < vertices.front().first || x > vertices.back().first)
        throw std::out_of_range("NewtonPolygon::value_at");
    for (std::size_t j = 1; j < vertices.size(); ++j) {
        if (vertices[j].first >= x) {
            const auto& [x1, y1] = vertices[j - 1];
            const auto& [x2, y2] = vertices[j];
            return y1 + (y2 - y1) * Rat(x - x1) / Rat(x2 - x1);
        }
    }
    return vertices.front().second; // x == front (single vertex)
}

NewtonPolygon lower_hull(const std::vector<std::pair<long long, Rat>>& pts) {
    NewtonPolygon np;
    auto& h = np.vertices;
    for (const auto& pt : pts) {
        if (pt.second.is_inf()) continue;
        if (!h.empty() && pt.first <= h.back().first)
            throw std::invalid_argument("lower_hull: x not strictly increasing");
        while (h.size() >= 2) {
            const auto& [x1, y1] = h[h.size() - 2];
            const auto& [x2, y2] = h[h.size() - 1];
            // pop the middle vertex unless the turn is strictly convex
            if ((y2 - y1) * Rat(pt.first - x2) >= (pt.second - y2) * Rat(x2 - x1))
                h.pop_back();
            else
                break;
        }
        h.push_back(pt);
    }
    return np;
}

NewtonPolygon polygon_from_slopes(const std::vector<Rat>& slopes) {
    NewtonPolygon np;
    np.vertices.emplace_back(0, Rat(0));
    long long x = 0;
    Rat y(0);
    for (std::size_t i = 0; i < slopes.size();) {
        if (i > 0 && slopes[i] < slopes[i - 1])
            throw std::invalid_argument("polygon_from_slopes: slopes not ascending");
        std::size_t j = i;
        while (j < slopes.size() && slopes[j] == slopes[i]) ++j;
        long long run = static_cast<long long>(j - i);
        x += run;
        y += slopes[i] * Rat(run);
        np.vertices.emplace_back(x, y);
        i = j;
    }
    return np;
}

NewtonPolygon stretch(const NewtonPolygon& np, long long m) {
    if (m < 1) throw std::invalid_argument("stretch: m >= 1");
    NewtonPolygon out;
    out.vertices.reserve(np.vertices.size());
    for (const auto& [x, y] : np.vertices)
        out.vertices.emplace_back(m * x, y * Rat(m));
    return out;
}

NewtonPolygon merge(const NewtonPolygon& a, const NewtonPolygon& b) {
    std::vector<Rat> sa = a.slopes(), sb = b.slopes(), all;
    all.reserve(sa.size() + sb.size());
    std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
    return polygon_from_slopes(all);
}

CertifiedNp ghost_np(const GhostContext& ctx, const WeightPoint& w, long long count) {
    if (count < 1) throw std::invalid_argument("ghost_np: count >= 1");
    const long long cap = 1LL << 14;
    Rat mu0 = min(w.r, Rat(1));
    long long N = std::max<long long>(16, 2 * count);
    for (;; N *= 2) {
        if (N > cap)
            throw stability_error("ghost_np: no truncation certificate up to n = 2^14");
        VpTable t = vp_ghost_table(ctx, w, N);
        std::vector<std::pair<long long, Rat>> pts;
        pts.reserve(static_cast<std::size_t>(N) + 1);
        for (long long n = 0; n <= N; ++n) {
            Rat v = t.vp(n);
            if (!v.is_inf()) pts.emplace_back(n, v);
        }
        NewtonPolygon np = lower_hull(pts);
        if (np.length() <= count) continue;
        Rat s_count = np.slope_at(count);
        // vertex closing the segment that carries the count-th slope
        std::pair<long long, Rat> v_end = np.vertices.back();
        for (const auto& v : np.vertices)
            if (v.first >= count) {
                v_end = v;
                break;
            }
        Rat degN1 = Rat(ghost_degree(ctx, N + 1));
        Rat degN2 = Rat(ghost_degree(ctx, N + 2));
        if (!(mu0 * (degN2 - degN1) >= s_count)) continue;
        if (!(mu0 * degN1 > v_end.second + s_count * Rat(N + 1 - v_end.first))) continue;
        return CertifiedNp{std::move(np), count, N};
    }
}

NewtonPolygon global_np(const GhostContext& ctx, const WeightPoint& w, long long count,
                        long long m, long long m_dprime) {
    if (count < 1) throw std::invalid_argument("global_np: count >= 1");
    if (m < 1) throw std::invalid_argument("global_np: m >= 1");
    if (m_dprime < 0 || m_dprime > m)
        throw std::invalid_argument("global_np: need 0 <= m'' <= m");
    CompanionRelation rel = companion_relation(ctx);
    if (rel == CompanionRelation::equal && m_dprime != 0)
        throw std::invalid_argument("global_np: m'' > 0 only for a split boundary character");

    long long need = (count + m_dprime + m - 1) / m;
    if (need < 1) need = 1;
    CertifiedNp local = ghost_np(ctx, w, need);
    std::vector<Rat> ls = local.np.first_slopes(need);

    std::vector<Rat> gs;
    gs.reserve(static_cast<std::size_t>(need * m + m_dprime));
    if (rel == CompanionRelation::shift_down)
        for (long long i = 0; i < m_dprime; ++i) gs.emplace_back(0);
    for (const Rat& s : ls)
        for (long long i = 0; i < m; ++i) gs.push_back(s);
    if (rel == CompanionRelation::shift_up) {
        for (long long i = 0; i < m_dprime; ++i)
            if (!gs[static_cast<std::size_t>(i)].is_zero())
                throw std::logic_error("global_np: ordinary segment shorter than m''");
        gs.erase(gs.begin(), gs.begin() + static_cast<std::ptrdiff_t>(m_dprime));
    }
    gs.resize(static_cast<std::size_t>(count));
    return polygon_from_slopes(gs);
}

NewtonPolygon global_np(const GhostContext& ctx, const WeightPoint& w, long long m,
                        long long m_prime, long long m_dprime, bool split,
                        long long count) {
    if (m_prime < 0 || m_dprime < 0)
        throw std::invalid_argument("global_np: multiplicities must be nonnegative");
    if (split) {
        if (m != m_prime + m_dprime)
            throw std::invalid_argument("global_np: split data need m = m' + m''");
    } else if (m_prime != m || m_dprime != 0) {
        throw std::invalid_argument("global_np: nonsplit data need m' = m, m'' = 0");
    }
    bool exceptional = companion_relation(ctx) != CompanionRelation::equal;
    return global_np(ctx, w, count, m, (split && exceptional) ? m_dprime : 0);
}

}  // namespace ghost
