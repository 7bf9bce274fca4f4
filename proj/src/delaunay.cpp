#include "mink/delaunay.hpp"

#include "mink/error.hpp"
#include "mink/predicates.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace mink {

bool strictly_convex(std::span<const Vec2d> polygon)
{
    const std::size_t n = polygon.size();
    if (n < 3) return false;
    int sign = 0;
    double turning = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2d& a = polygon[i];
        const Vec2d& b = polygon[(i + 1) % n];
        const Vec2d& c = polygon[(i + 2) % n];
        const int o = orient2d(a, b, c);
        if (o == 0 || (sign != 0 && o != sign)) return false;
        sign = o;
        const Vec2d d1 = b - a;
        const Vec2d d2 = c - b;
        turning += std::atan2(d1.x() * d2.y() - d1.y() * d2.x(), d1.dot(d2));
    }
    return std::abs(std::abs(turning) - 2 * std::numbers::pi) < 1.0;
}

ConvexDelaunay::ConvexDelaunay(std::span<const Vec2d> polygon)
    : points_(polygon.begin(), polygon.end())
    , hull_size_(polygon.size())
{
    if (!strictly_convex(polygon)) throw Error(ErrorCode::NonConvexProjection, "boundary polygon is not strictly convex");
    const bool ccw = orient2d(points_[0], points_[1], points_[2]) > 0;
    const int n = static_cast<int>(points_.size());
    for (int i = 1; i + 1 < n; ++i) {
        Tri t;
        t.v = ccw ? std::array<int, 3>{0, i, i + 1} : std::array<int, 3>{0, i + 1, i};
        t.nbr = {-1, -1, -1};
        tris_.push_back(t);
    }
    lawson_flips();
    link_all();
}

void ConvexDelaunay::link_all()
{
    std::map<std::pair<int, int>, std::pair<int, int>> edges;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        tris_[t].nbr = {-1, -1, -1};
        for (int i = 0; i < 3; ++i) {
            const int a = tris_[t].v[(i + 1) % 3];
            const int b = tris_[t].v[(i + 2) % 3];
            edges[{a, b}] = {t, i};
        }
    }
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        for (int i = 0; i < 3; ++i) {
            const int a = tris_[t].v[(i + 1) % 3];
            const int b = tris_[t].v[(i + 2) % 3];
            const auto it = edges.find({b, a});
            if (it != edges.end()) tris_[t].nbr[i] = it->second.first;
        }
    }
}

void ConvexDelaunay::lawson_flips()
{
    for (bool changed = true; changed;) {
        changed = false;
        std::map<std::pair<int, int>, std::pair<int, int>> edges;
        for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
            for (int i = 0; i < 3; ++i) edges[{tris_[t].v[(i + 1) % 3], tris_[t].v[(i + 2) % 3]}] = {t, i};
        }
        std::vector<bool> touched(tris_.size(), false);
        for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
            for (int i = 0; i < 3 && !touched[t]; ++i) {
                const int p = tris_[t].v[i];
                const int q = tris_[t].v[(i + 1) % 3];
                const int r = tris_[t].v[(i + 2) % 3];
                const auto it = edges.find({r, q});
                if (it == edges.end()) continue;
                const int u = it->second.first;
                if (touched[u]) continue;
                const int s = tris_[u].v[it->second.second];
                if (incircle(points_[p], points_[q], points_[r], points_[s]) <= 0) continue;
                tris_[t].v = {p, q, s};
                tris_[u].v = {p, s, r};
                touched[t] = touched[u] = true;
                changed = true;
            }
        }
    }
}

int ConvexDelaunay::locate(const Vec2d& p) const
{
    int t = last_ < static_cast<int>(tris_.size()) ? last_ : 0;
    for (std::size_t steps = 0; steps < 4 * tris_.size() + 16; ++steps) {
        const Tri& tri = tris_[t];
        int next = -2;
        for (int i = 0; i < 3; ++i) {
            const int k = (i + static_cast<int>(steps)) % 3;
            if (orient2d(points_[tri.v[(k + 1) % 3]], points_[tri.v[(k + 2) % 3]], p) < 0) {
                next = tri.nbr[k];
                break;
            }
        }
        if (next == -2) return t;
        if (next == -1) return -1;
        t = next;
    }
    for (int u = 0; u < static_cast<int>(tris_.size()); ++u) {
        const Tri& tri = tris_[u];
        if (orient2d(points_[tri.v[0]], points_[tri.v[1]], p) >= 0 && orient2d(points_[tri.v[1]], points_[tri.v[2]], p) >= 0
            && orient2d(points_[tri.v[2]], points_[tri.v[0]], p) >= 0) {
            return u;
        }
    }
    return -1;
}

int ConvexDelaunay::insert(const Vec2d& p)
{
    for (std::size_t i = 0; i < hull_size_; ++i) {
        const int o = orient2d(points_[i], points_[(i + 1) % hull_size_], p);
        const int inward = orient2d(points_[0], points_[1], points_[2]);
        if (o != inward) throw Error(ErrorCode::InvalidArgument, "inserted point is not strictly inside the hull");
    }
    const int start = locate(p);
    if (start < 0) throw Error(ErrorCode::InvalidArgument, "point location failed");

    const int id = static_cast<int>(points_.size());
    points_.push_back(p);

    std::vector<int> cavity{start};
    std::vector<char> in_cavity(tris_.size(), 0);
    in_cavity[start] = 1;
    for (std::size_t k = 0; k < cavity.size(); ++k) {
        for (int nb : tris_[cavity[k]].nbr) {
            if (nb < 0 || in_cavity[nb]) continue;
            const Tri& t = tris_[nb];
            if (incircle(points_[t.v[0]], points_[t.v[1]], points_[t.v[2]], p) > 0) {
                in_cavity[nb] = 1;
                cavity.push_back(nb);
            }
        }
    }

    struct Rim {
        int a, b, outside, slot;
    };
    std::vector<Rim> rim;
    for (int c : cavity) {
        for (int i = 0; i < 3; ++i) {
            const int nb = tris_[c].nbr[i];
            if (nb >= 0 && in_cavity[nb]) continue;
            Rim r{tris_[c].v[(i + 1) % 3], tris_[c].v[(i + 2) % 3], nb, -1};
            if (nb >= 0) {
                for (int k = 0; k < 3; ++k) {
                    if (tris_[nb].nbr[k] == c) r.slot = k;
                }
            }
            if (orient2d(points_[r.a], points_[r.b], p) <= 0) {
                throw Error(ErrorCode::InvalidArgument, "cavity is not star-shaped; point too close to an edge");
            }
            rim.push_back(r);
        }
    }

    std::vector<int> ids(cavity.begin(), cavity.end());
    while (ids.size() < rim.size()) {
        ids.push_back(static_cast<int>(tris_.size()));
        tris_.push_back(Tri{});
    }
    std::map<int, int> starting_at;
    std::map<int, int> ending_at;
    for (std::size_t k = 0; k < rim.size(); ++k) {
        starting_at[rim[k].a] = ids[k];
        ending_at[rim[k].b] = ids[k];
    }
    for (std::size_t k = 0; k < rim.size(); ++k) {
        const Rim& r = rim[k];
        Tri& t = tris_[ids[k]];
        t.v = {r.a, r.b, id};
        t.nbr = {starting_at.at(r.b), ending_at.at(r.a), r.outside};
        if (r.outside >= 0) tris_[r.outside].nbr[r.slot] = ids[k];
    }
    last_ = ids.front();
    return id;
}

std::vector<std::array<int, 3>> ConvexDelaunay::triangles() const
{
    std::vector<std::array<int, 3>> out;
    out.reserve(tris_.size());
    for (const Tri& t : tris_) out.push_back(t.v);
    return out;
}

Vec2d ConvexDelaunay::circumcenter(std::size_t i) const
{
    const Vec2d& a = points_[tris_[i].v[0]];
    const Vec2d b = points_[tris_[i].v[1]] - a;
    const Vec2d c = points_[tris_[i].v[2]] - a;
    const double d = 2 * (b.x() * c.y() - b.y() * c.x());
    const double b2 = b.squaredNorm();
    const double c2 = c.squaredNorm();
    return a + Vec2d((c.y() * b2 - b.y() * c2) / d, (b.x() * c2 - c.x() * b2) / d);
}

double ConvexDelaunay::circumradius(std::size_t i) const
{
    return (circumcenter(i) - points_[tris_[i].v[0]]).norm();
}

bool ConvexDelaunay::is_delaunay() const
{
    for (const Tri& t : tris_) {
        for (int i = 0; i < 3; ++i) {
            if (t.nbr[i] < 0) continue;
            for (int w : tris_[t.nbr[i]].v) {
                if (w == t.v[0] || w == t.v[1] || w == t.v[2]) continue;
                if (incircle(points_[t.v[0]], points_[t.v[1]], points_[t.v[2]], points_[w]) > 0) return false;
            }
        }
    }
    return true;
}

} // namespace mink
