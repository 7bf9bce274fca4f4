#include "mink/predicates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace mink {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;

struct TwoTerm {
    double hi;
    double lo;
};

TwoTerm two_product(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

TwoTerm two_sum(double a, double b)
{
    const double x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    return {x, (a - av) + (b - bv)};
}

// Adds b to a nonoverlapping expansion e (components increasing in magnitude).
template <std::size_t N>
void grow_expansion(std::array<double, N>& e, std::size_t& len, double b)
{
    double q = b;
    std::size_t out = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const TwoTerm s = two_sum(q, e[i]);
        q = s.hi;
        if (s.lo != 0) e[out++] = s.lo;
    }
    if (q != 0) e[out++] = q;
    len = out;
}

int orient2d_exact(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c)
{
    const std::array<TwoTerm, 6> terms = {
        two_product(a.x(), b.y()),
        two_product(-a.x(), c.y()),
        two_product(-c.x(), b.y()),
        two_product(-a.y(), b.x()),
        two_product(a.y(), c.x()),
        two_product(c.y(), b.x()),
    };
    std::array<double, 24> e{};
    std::size_t len = 0;
    for (const TwoTerm& t : terms) {
        grow_expansion(e, len, t.lo);
        grow_expansion(e, len, t.hi);
    }
    if (len == 0) return 0;
    const double top = e[len - 1];
    return top > 0 ? 1 : (top < 0 ? -1 : 0);
}

bool on_segment_collinear(const Eigen::Vector2d& p, const Eigen::Vector2d& q, const Eigen::Vector2d& r)
{
    return std::min(p.x(), q.x()) <= r.x() && r.x() <= std::max(p.x(), q.x())
        && std::min(p.y(), q.y()) <= r.y() && r.y() <= std::max(p.y(), q.y());
}

} // namespace

int orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c)
{
    const double left = (a.x() - c.x()) * (b.y() - c.y());
    const double right = (a.y() - c.y()) * (b.x() - c.x());
    const double det = left - right;
    const double bound = (3.0 * kEps + 16.0 * kEps * kEps) * (std::abs(left) + std::abs(right));
    if (det > bound) return 1;
    if (-det > bound) return -1;
    return orient2d_exact(a, b, c);
}

bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
    const Eigen::Vector2d& q1, const Eigen::Vector2d& q2)
{
    const int o1 = orient2d(p1, p2, q1);
    const int o2 = orient2d(p1, p2, q2);
    const int o3 = orient2d(q1, q2, p1);
    const int o4 = orient2d(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment_collinear(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment_collinear(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment_collinear(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment_collinear(q1, q2, p2)) return true;
    return false;
}

int incircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c, const Eigen::Vector2d& d)
{
    const double adx = a.x() - d.x(), ady = a.y() - d.y();
    const double bdx = b.x() - d.x(), bdy = b.y() - d.y();
    const double cdx = c.x() - d.x(), cdy = c.y() - d.y();
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;
    const double det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) + clift * (adx * bdy - bdx * ady);
    const double permanent = alift * (std::abs(bdx * cdy) + std::abs(cdx * bdy))
        + blift * (std::abs(cdx * ady) + std::abs(adx * cdy)) + clift * (std::abs(adx * bdy) + std::abs(bdx * ady));
    const double bound = (10.0 * kEps + 96.0 * kEps * kEps) * permanent;
    if (det > bound) return 1;
    if (-det > bound) return -1;

    using L = long double;
    const L ax = L(a.x()) - L(d.x()), ay = L(a.y()) - L(d.y());
    const L bx = L(b.x()) - L(d.x()), by = L(b.y()) - L(d.y());
    const L cx = L(c.x()) - L(d.x()), cy = L(c.y()) - L(d.y());
    const L ldet = (ax * ax + ay * ay) * (bx * cy - cx * by) + (bx * bx + by * by) * (cx * ay - ax * cy)
        + (cx * cx + cy * cy) * (ax * by - bx * ay);
    return ldet > 0 ? 1 : (ldet < 0 ? -1 : 0);
}

} // namespace mink
