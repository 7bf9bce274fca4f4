#pragma once

// Maximal spacelike graphs over the projected convex domain: P1 finite
// elements for the spacelike area functional, maximized by damped Newton.

#include "mink/curve.hpp"
#include "mink/ruled_surface.hpp"

#include <Eigen/Core>

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace mink {

struct ConvexDomainMesh {
    /// Projection of the curve samples onto the x1x2-plane, in curve order.
    std::vector<Vec2d> boundary_polygon;
    /// x3 of the curve samples, same order as boundary_polygon.
    std::vector<double> boundary_heights;
    /// Boundary vertices first (vertex i is boundary_polygon[i]), then interior vertices.
    std::vector<Vec2d> vertices;
    /// Counterclockwise triangles.
    std::vector<std::array<int, 3>> triangles;
    std::vector<bool> boundary_flags;
    double target_h = 0;

    std::size_t boundary_count() const { return boundary_polygon.size(); }
};

/// Curve resampled so that consecutive projected boundary vertices are about h apart.
ClosedCurve boundary_sampling(const ClosedCurve& c, double h);

/// Projects c onto the x1x2-plane and triangulates the enclosed region: a
/// hexagonal lattice of spacing h kept at least 0.55 h away from the boundary,
/// Delaunay triangulated, then refined at circumcenters of triangles with
/// circumradius above 0.8 h. Throws NonConvexProjection, InvalidArgument for h <= 0.
ConvexDomainMesh build_domain(const ClosedCurve& c, double h);

/// Mesh from explicit data (boundary vertices first, in polygon order). Throws
/// InvalidArgument unless every triangle is counterclockwise and edges conform.
ConvexDomainMesh make_domain_mesh(std::vector<Vec2d> vertices, std::vector<std::array<int, 3>> triangles,
    std::size_t boundary_count, std::vector<double> boundary_heights);

/// Heights of the boundary vertices. Throws CorrespondenceMismatch unless the
/// mesh boundary is exactly the projection of c's samples.
std::vector<double> dirichlet_data(const ClosedCurve& c, const ConvexDomainMesh& mesh);

struct GraphSurface {
    std::shared_ptr<const ConvexDomainMesh> mesh;
    Eigen::VectorXd u;
    double grad_bound = 0;
};

/// Piecewise linear gradient of u on every triangle.
std::vector<Vec2d> triangle_gradients(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u);
double gradient_bound(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u);

/// Graph with the mesh's boundary heights and u = 0 inside.
GraphSurface zero_extension(std::shared_ptr<const ConvexDomainMesh> mesh);

/// Heights of the ruled surface above every interior vertex (boundary vertices
/// take the mesh's boundary heights). Throws LookupMiss for a vertex outside the
/// surface's footprint by more than 1e-9.
GraphSurface initial_guess(const RuledSurface& rs, std::shared_ptr<const ConvexDomainMesh> mesh);

/// A(u) = sum over triangles of area * sqrt(1 - |Du|^2), compensated sum.
/// Returns NaN when some |Du| >= 1.
double spacelike_area(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u);

/// dA/du at every vertex (entries at boundary vertices are set to 0).
Eigen::VectorXd area_gradient(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u);

/// Lumped divergence of the flux Du / sqrt(1 - |Du|^2): triangle fluxes are
/// averaged to vertices, the divergence of the recovered P1 flux is averaged
/// back to vertices. Entries at boundary vertices are 0.
Eigen::VectorXd mean_curvature_residual(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u);

/// Discrete H^-1 norm of the residual r: sqrt(b^T K^-1 b) with b_i = m_i r_i,
/// m_i the lumped vertex area and K the P1 Dirichlet Laplacian on interior vertices.
double residual_norm(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u);

struct NewtonStep {
    double area = 0;
    double gradient_norm = 0;
    double grad_bound = 0;
    /// accepted damping factor leading to the next iterate (0 for the last)
    double damping = 0;
};

struct SolveResult {
    GraphSurface surface;
    /// number of iterates examined, including the starting point
    int iterations = 0;
    bool converged = false;
    double gradient_norm = 0;
    double residual_norm = 0;
    std::vector<NewtonStep> history;
};

constexpr double kGradientSafety = 1e-6;

/// Damped Newton ascent on A with boundary values fixed. Stops when the
/// Euclidean norm of dA/du over interior vertices drops below tol.
/// Throws NoConvergence after max_iter Newton steps, GradientBlowup when
/// backtracking cannot keep |Du| <= 1 - 1e-6.
SolveResult solve_maximal(const GraphSurface& g0, double tol, int max_iter);

struct MaximalReport {
    double grad_bound = 0;
    double residual_norm = 0;
    double area_value = 0;
};

MaximalReport verify_maximal(const GraphSurface& g);

struct SecondStartReport {
    /// "zero-extension" or "rotated-ruled"
    std::string start;
    double sup_difference = 0;
    bool flagged = false;
};

/// Solves again from a second initial guess and compares in sup norm; the
/// difference is flagged above 1e-6 but never acted upon.
SecondStartReport compare_second_start(const ClosedCurve& c, const GraphSurface& solved, double tol, int max_iter);

/// OBJ of the graph (x1, x2, u) over the mesh.
void export_graph(const GraphSurface& g, const std::string& path);

} // namespace mink
