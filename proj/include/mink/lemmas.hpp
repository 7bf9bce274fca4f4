#pragma once

// Projection and section properties of strong spacelike index-1 curves as
// executable predicates.

#include "mink/curve.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace mink {

enum class PlaneKind { Spacelike, Lightlike };

/// A spacelike plane is given by its unit timelike normal (<n,n> = -1); a
/// lightlike plane by its lightlike normal n, which lies in the plane, and a
/// lightlike transversal n* with <n, n*> = 1.
struct ProjectionPlane {
    PlaneKind kind = PlaneKind::Spacelike;
    MinkVec3d normal = MinkVec3d(0, 0, 1);
    MinkVec3d transversal = MinkVec3d::Zero();

    /// Normalizes a timelike n. Throws DegeneratePlane otherwise.
    static ProjectionPlane spacelike(const MinkVec3d& n);
    /// Throws DegeneratePlane unless <n,n> = <n*,n*> = 0 and <n,n*> = 1 within 1e-12.
    static ProjectionPlane lightlike(const MinkVec3d& n, const MinkVec3d& n_star);
    /// Lightlike plane with the transversal (n1, n2, -n3) / (2 n3^2).
    static ProjectionPlane lightlike(const MinkVec3d& n);
};

/// Throws DegeneratePlane if the plane violates its invariants.
void validate(const ProjectionPlane& plane);

/// v + <v,n> n for spacelike planes, v - <v,n> n* for lightlike planes.
MinkVec3d project(const MinkVec3d& v, const ProjectionPlane& plane);

/// Affine 2D coordinates on the plane of an already projected vector.
Vec2d plane_coordinates(const MinkVec3d& projected, const ProjectionPlane& plane);

struct ProjectionReport {
    bool convex = false;
    bool injective = false;
    /// min_i |det(sigma(T_i), sigma(kN_i))| in plane coordinates
    double min_turn_rate = 0;
};

ProjectionReport check_projection_lemma(const ClosedCurve& c, const ProjectionPlane& plane);

/// Exact test that the closed polygon has no self-intersections.
bool is_simple_polygon(const std::vector<Vec2d>& polygon);

struct SectionReport {
    bool chords_ok = true;
    bool triples_ok = true;
    bool chord_tangent_ok = true;
    /// smallest normalized margin: <d,d>/|d|^2 for chords, -<m,m>/|m|^2 for cross products
    double worst_margin = 0;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;

    bool all_ok() const { return chords_ok && triples_ok && chord_tangent_ok; }
};

enum class PairSampling { Random, Exhaustive };

/// Random pairs and triples of distinct samples (`trials` of each); with
/// PairSampling::Exhaustive every ordered pair is checked instead of random pairs.
SectionReport check_section_lemma(const ClosedCurve& c, std::size_t trials, std::uint64_t seed,
    PairSampling pairs = PairSampling::Random);

/// Spacelike plane with normal (sinh r cos a, sinh r sin a, cosh r), r in [0, 2].
ProjectionPlane random_spacelike_plane(std::mt19937_64& rng);
/// Lightlike plane with normal lambda (cos a, sin a, 1), lambda in [0.5, 2].
ProjectionPlane random_lightlike_plane(std::mt19937_64& rng);

} // namespace mink
