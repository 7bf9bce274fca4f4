#pragma once

// Incremental Delaunay triangulation inside a fixed strictly convex polygon.

#include "mink/lorentz.hpp"

#include <array>
#include <span>
#include <vector>

namespace mink {

/// The polygon vertices are the hull and are never split; inserted points
/// must lie strictly inside. Vertex ids: polygon first, in order, then
/// inserted points in insertion order.
class ConvexDelaunay {
public:
    /// Throws NonConvexProjection unless the polygon (either orientation) is strictly convex.
    explicit ConvexDelaunay(std::span<const Vec2d> polygon);

    /// Returns the new vertex id. Throws InvalidArgument if p is not strictly inside.
    int insert(const Vec2d& p);

    const std::vector<Vec2d>& points() const { return points_; }
    /// Counterclockwise triangles.
    std::vector<std::array<int, 3>> triangles() const;
    std::size_t triangle_count() const { return tris_.size(); }
    /// Circumcenter and circumradius of triangle i (index into triangles()).
    Vec2d circumcenter(std::size_t i) const;
    double circumradius(std::size_t i) const;

    /// Empty-circumcircle check across every interior edge.
    bool is_delaunay() const;

private:
    struct Tri {
        std::array<int, 3> v;
        /// neighbor across the edge opposite v[i], -1 on the hull
        std::array<int, 3> nbr;
    };

    int locate(const Vec2d& p) const;
    void link_all();
    void lawson_flips();

    std::vector<Vec2d> points_;
    std::vector<Tri> tris_;
    std::size_t hull_size_ = 0;
    mutable int last_ = 0;
};

bool strictly_convex(std::span<const Vec2d> polygon);

} // namespace mink
