#include "mink/error.hpp"
#include "mink/generators.hpp"
#include "mink/io.hpp"
#include "mink/ruled_surface.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

using namespace mink;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

ClosedCurve random_curve(std::uint64_t seed, std::size_t samples = 1024)
{
    GeneratorSpec spec;
    spec.kind = GeneratorKind::RandomFourier;
    spec.seed = seed;
    spec.samples = samples;
    return generate(spec);
}

ClosedCurve tilted(double c)
{
    GeneratorSpec spec;
    spec.kind = GeneratorKind::TiltedEllipse;
    spec.a = 1.2;
    spec.tilt = c;
    spec.samples = 1024;
    return generate(spec);
}

ClosedCurve circle()
{
    GeneratorSpec spec;
    spec.samples = 1024;
    return generate(spec);
}

} // namespace

TEST(GaussCurvature, SignConventionOnKnownSurfaces)
{
    // Graph u = xy: spacelike where x^2 + y^2 < 1, K = 1 / (1 - x^2 - y^2)^2.
    const double x = 0.3, y = -0.2;
    const double k = gauss_curvature(MinkVec3d(1, 0, y), MinkVec3d(0, 1, x), MinkVec3d::Zero(), MinkVec3d(0, 0, 1),
        MinkVec3d::Zero());
    EXPECT_NEAR(k, 1 / std::pow(1 - x * x - y * y, 2), 1e-14);

    // Hyperboloid <X,X> = -1 via X = (sinh a cos b, sinh a sin b, cosh a): K = -1.
    const double a = 0.7, b = 0.4;
    const MinkVec3d xa(std::cosh(a) * std::cos(b), std::cosh(a) * std::sin(b), std::sinh(a));
    const MinkVec3d xb(-std::sinh(a) * std::sin(b), std::sinh(a) * std::cos(b), 0);
    const MinkVec3d xaa(std::sinh(a) * std::cos(b), std::sinh(a) * std::sin(b), std::cosh(a));
    const MinkVec3d xab(-std::cosh(a) * std::sin(b), std::cosh(a) * std::cos(b), 0);
    const MinkVec3d xbb(-std::sinh(a) * std::cos(b), -std::sinh(a) * std::sin(b), 0);
    EXPECT_NEAR(gauss_curvature(xa, xb, xaa, xab, xbb), -1.0, 1e-13);

    EXPECT_EQ(gauss_curvature(MinkVec3d(1, 0, 0), MinkVec3d(0, 1, 0), MinkVec3d::Zero(), MinkVec3d::Zero(), MinkVec3d::Zero()), 0.0);
}

TEST(BuildRuled, Preconditions)
{
    EXPECT_THROW(build_ruled(circle(), 2, 64), Error);
    const auto loop = mink::testing::saddle_loop(0.3);
    EXPECT_THROW(build_ruled(resample_arclength(loop, 512), 64, 16), Error);
}

TEST(BuildRuled, EndpointsCloseUp)
{
    const RuledSurface rs = build_ruled(random_curve(42), 512, 64);
    EXPECT_LT(rs.ruling(0).norm(), 1e-10);
    EXPECT_LT(rs.ruling(rs.arc_length()).norm(), 1e-10);
    EXPECT_NEAR(rs.arc_length(), rs.curve().length() / 2, 1e-15);
    EXPECT_EQ(rs.p(), rs.grid_gamma1().front().position);
    EXPECT_EQ(rs.q(), rs.grid_gamma1().back().position);
}

TEST(BuildRuled, PlanarCurvesGivePlanarSurfaces)
{
    const RuledSurface flat = build_ruled(circle(), 64, 8);
    const RuledSurface tilt = build_ruled(tilted(0.5), 64, 8);
    for (std::size_t j = 0; j < 64; ++j) {
        for (double t : {0.0, 0.3, 0.5, 1.0}) {
            const double s = flat.node_s(j);
            EXPECT_NEAR(flat.position(s, t)(2), 0.0, 1e-14);
            const MinkVec3d x = tilt.position(tilt.node_s(j), t);
            EXPECT_NEAR(x(2), 0.5 * x(0), 1e-12);
        }
    }
    const double s = flat.node_s(20);
    EXPECT_TRUE(flat.position(s, 0.5).isApprox(0.5 * (flat.gamma0(s).position + flat.gamma1(s).position)));
}

TEST(Frames, FlatDisk)
{
    const RuledSurface rs = build_ruled(circle(), 128, 16);
    for (double s : {0.3, 1.0, 2.5}) {
        for (double t : {0.1, 0.5, 0.9}) {
            const SurfaceSampleFrame f = frame_at(rs, s, t);
            EXPECT_TRUE(lorentz_normalized(f.normal).isApprox(MinkVec3d(0, 0, 1), 1e-12));
            EXPECT_NEAR(f.gauss_k, 0.0, 1e-9);
        }
    }
}

TEST(Frames, BoundaryRowIsTheArc)
{
    const RuledSurface rs = build_ruled(random_curve(3), 256, 32);
    for (double s : {0.2, 1.1, 2.0}) {
        const SurfaceSampleFrame f = frame_at(rs, s, 0.0);
        const CurvePoint g = rs.gamma0(s);
        EXPECT_EQ(f.position, g.position);
        EXPECT_EQ(f.xs, g.tangent);
    }
}

TEST(Frames, AffineInT)
{
    const RuledSurface rs = build_ruled(random_curve(7), 64, 16);
    for (std::size_t j = 0; j < rs.grid_s(); ++j) {
        const double s = rs.node_s(j);
        const MinkVec3d x0 = rs.position(s, 0), x1 = rs.position(s, 1);
        for (std::size_t k = 0; k < rs.grid_t(); ++k) {
            const double t = rs.node_t(k);
            EXPECT_EQ(rs.position(s, t), (1 - t) * x0 + t * x1);
        }
    }
}

TEST(Frames, NormalIsConvexCombination)
{
    const RuledSurface rs = build_ruled(random_curve(11), 256, 32);
    for (double s : {0.05, 0.8, 1.6, 2.9}) {
        const CurvePoint g0 = rs.gamma0(s), g1 = rs.gamma1(s);
        const MinkVec3d v = g1.position - g0.position;
        for (double t : {0.0, 0.25, 0.6, 1.0}) {
            const SurfaceSampleFrame f = frame_at(rs, s, t);
            const MinkVec3d rhs = (1 - t) * cross(g0.tangent, v) + t * cross(g1.tangent, v);
            EXPECT_LT((cross(f.xs, f.xt) - rhs).norm(), 1e-10);
        }
    }
}

TEST(Frames, EndpointPlaneIsOsculating)
{
    // Angle between the frame one lattice step from p and span{T(p), N(p)} shrinks at least like O(h).
    const ClosedCurve c = random_curve(5);
    const CurvePoint p = c.at(0);
    const MinkVec3d osculating = lorentz_normalized(cross(p.tangent, p.curvature));
    for (double t : {0.25, 0.5}) {
        std::vector<double> angles;
        for (std::size_t ns : {257u, 513u, 1025u}) {
            const RuledSurface rs = build_ruled(c, ns, 16);
            const MinkVec3d n = lorentz_normalized(frame_at(rs, rs.step_s(), t).normal);
            angles.push_back(std::acosh(std::max(1.0, std::abs(inner(n, osculating)))));
        }
        EXPECT_GT(angles[0], 0.0);
        EXPECT_GE(angles[0] / angles[1], 1.9) << t;
        EXPECT_GE(angles[1] / angles[2], 1.9) << t;
    }

    const RuledSurface rs = build_ruled(c, 512, 64);
    const SurfaceSampleFrame end = frame_at(rs, 0, 0.5);
    EXPECT_TRUE(std::isnan(end.gauss_k));
    EXPECT_LT(std::abs(std::abs(inner(lorentz_normalized(end.normal), osculating)) - 1), 1e-12);
}

TEST(Spacelike, FlatDiskMargin)
{
    const SpacelikeReport r = verify_spacelike(build_ruled(circle(), 128, 16));
    EXPECT_TRUE(r.ok);
    EXPECT_NEAR(r.worst_margin, -1.0, 1e-9);
}

TEST(Spacelike, NearlyLightlikePlane)
{
    const double c = 0.99;
    const SpacelikeReport r = verify_spacelike(build_ruled(tilted(c), 128, 16));
    EXPECT_TRUE(r.ok);
    // normal of x3 = c x1 is (c, 0, 1)
    EXPECT_NEAR(r.worst_margin, (c * c - 1) / (c * c + 1), 1e-8);
}

TEST(Spacelike, RandomCurveAtTwoResolutions)
{
    const ClosedCurve c = random_curve(42);
    const SpacelikeReport coarse = verify_spacelike(build_ruled(c, 256, 32));
    const SpacelikeReport fine = verify_spacelike(build_ruled(c, 512, 64));
    EXPECT_TRUE(coarse.ok);
    EXPECT_TRUE(fine.ok);
    EXPECT_NEAR(coarse.worst_margin, fine.worst_margin, 1e-3);
    EXPECT_GE(fine.min_gauss_k, -1e-6);
}

TEST(BoundaryCurvature, PlanarCurvesHaveNoTilt)
{
    for (const ClosedCurve& c : {circle(), tilted(0.5)}) {
        for (const BoundarySample& b : boundary_geodesic_curvature(build_ruled(c, 256, 16))) {
            EXPECT_NEAR(b.hyperbolic_angle, 0.0, 1e-6);
            EXPECT_NEAR(b.kappa_g, b.kappa, 1e-9);
        }
    }
    for (const BoundarySample& b : boundary_geodesic_curvature(build_ruled(circle(), 256, 16))) {
        EXPECT_NEAR(b.kappa_g, 1.0, 1e-9);
    }
}

TEST(BoundaryCurvature, RandomCurveRoutesAgree)
{
    const RuledSurface rs = build_ruled(random_curve(42), 512, 64);
    const auto samples = boundary_geodesic_curvature(rs);
    EXPECT_EQ(samples.size(), 2 * rs.grid_s() - 2);
    for (const BoundarySample& b : samples) {
        EXPECT_GE(b.kappa_g, b.kappa - 1e-6);
        EXPECT_NEAR(b.kappa_g_intrinsic, b.kappa_g, 1e-3 * b.kappa_g);
    }
}

TEST(GaussBonnet, FlatDisk)
{
    const GaussBonnetReport r = gauss_bonnet_check(build_ruled(circle(), 128, 16));
    EXPECT_NEAR(r.area_integral_k, 0.0, 1e-9);
    EXPECT_NEAR(r.boundary_integral_kg, kTwoPi, 1e-9);
    EXPECT_NEAR(r.residual, 0.0, 1e-9);
}

TEST(GaussBonnet, TiltedEllipseIsExact)
{
    const ClosedCurve c = tilted(0.5);
    for (std::size_t ns : {65u, 129u, 512u}) {
        const GaussBonnetReport r = gauss_bonnet_check(build_ruled(c, ns, 17));
        EXPECT_LT(std::abs(r.residual), 1e-12);
        EXPECT_LT(std::abs(r.area_integral_k), 1e-12);
    }
}

TEST(GaussBonnet, SecondOrderOnRandomCurve)
{
    const ClosedCurve c = random_curve(42);
    const double r1 = std::abs(gauss_bonnet_check(build_ruled(c, 513, 65)).residual);
    const double r2 = std::abs(gauss_bonnet_check(build_ruled(c, 1025, 129)).residual);
    EXPECT_NEAR(std::log2(r1 / r2), 2.0, 0.05);
}

TEST(GaussBonnet, RandomCurveInequalityChain)
{
    const ClosedCurve c = random_curve(42);
    const GaussBonnetReport r = gauss_bonnet_check(build_ruled(c, 512, 64));
    EXPECT_LT(std::abs(r.residual), 1e-3);
    EXPECT_GE(r.area_integral_k, 0.0);
    EXPECT_LE(r.boundary_integral_kg, kTwoPi + 1e-3);
    EXPECT_LE(total_curvature(c), r.boundary_integral_kg + 1e-3);
    EXPECT_LE(r.boundary_integral_kg, kTwoPi - r.area_integral_k + 1e-3);
}

TEST(GaussBonnet, SplitInvariance)
{
    const ClosedCurve c = random_curve(17);
    for (double start : {0.7, 2.1, 4.4}) {
        const GaussBonnetReport r = gauss_bonnet_check(build_ruled(c, 512, 64, start));
        EXPECT_LT(std::abs(r.residual), 1e-3);
        EXPECT_GE(r.area_integral_k, 0.0);
        EXPECT_LE(r.boundary_integral_kg, kTwoPi + 1e-3);
        EXPECT_TRUE(verify_spacelike(build_ruled(c, 128, 16, start)).ok);
    }
}

TEST(Simpson, WeightsIntegrateCubicsExactly)
{
    for (std::size_t n : {3u, 4u, 5u, 8u, 9u, 64u}) {
        const double h = 2.0 / static_cast<double>(n - 1);
        const auto w = simpson_weights(n, h);
        double sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = h * static_cast<double>(i);
            sum += w[i] * (x * x * x - 2 * x + 1);
        }
        EXPECT_NEAR(sum, 4.0 - 4.0 + 2.0, 1e-13) << n;
    }
}

TEST(ExportMesh, CountsAndRoundTrip)
{
    const auto dir = std::filesystem::temp_directory_path();
    const std::string path = (dir / "mink_ruled_test.obj").string();
    export_mesh(build_ruled(circle(), 8, 4), path);
    const ObjMesh m = read_obj(path);
    EXPECT_EQ(m.vertices.size(), 32u);
    EXPECT_EQ(m.faces.size(), 42u);

    const RuledSurface rs = build_ruled(random_curve(2), 16, 8);
    export_mesh(rs, path);
    const ObjMesh r = read_obj(path);
    for (std::size_t j = 0; j < 16; ++j) {
        EXPECT_EQ(r.vertices[j * 8], rs.grid_gamma0()[j].position);
        EXPECT_EQ(r.vertices[j * 8 + 7], rs.grid_gamma1()[j].position);
    }
    std::filesystem::remove(path);
    EXPECT_THROW(export_mesh(rs, ""), Error);
}
