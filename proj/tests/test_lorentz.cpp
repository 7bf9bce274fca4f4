#include "mink/lorentz.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mink;

TEST(Inner, BasisVectors)
{
    EXPECT_EQ(inner(MinkVec3d(1, 0, 0), MinkVec3d(1, 0, 0)), 1.0);
    EXPECT_EQ(inner(MinkVec3d(0, 0, 1), MinkVec3d(0, 0, 1)), -1.0);
    EXPECT_EQ(inner(MinkVec3d(1, 1, 1), MinkVec3d(1, -1, 0)), 0.0);
}

TEST(Inner, WorksOnFloatVectors)
{
    const MinkVec3<float> x(1.f, 2.f, 3.f);
    EXPECT_FLOAT_EQ(inner(x, x), 1.f + 4.f - 9.f);
}

TEST(Cross, ExplicitValues)
{
    EXPECT_EQ(cross(MinkVec3d(1, 0, 0), MinkVec3d(0, 1, 0)), MinkVec3d(0, 0, 1));
    EXPECT_EQ(cross(MinkVec3d(0, 1, 0), MinkVec3d(0, 0, 1)), MinkVec3d(-1, 0, 0));
    const MinkVec3d x(0.3, -1.7, 2.2);
    EXPECT_EQ(cross(x, x), MinkVec3d::Zero());
}

TEST(Classify, Examples)
{
    EXPECT_EQ(classify(MinkVec3d(0, 0, 1)), (CausalClass{CausalTag::Timelike, TimeOrientation::Future}));
    EXPECT_EQ(classify(MinkVec3d(1, 0, 1)), (CausalClass{CausalTag::Lightlike, TimeOrientation::Future}));
    EXPECT_EQ(classify(MinkVec3d(1, 0, 0)), (CausalClass{CausalTag::Spacelike, TimeOrientation::None}));
    EXPECT_EQ(classify(MinkVec3d(0.2, 0.1, -3)), (CausalClass{CausalTag::Timelike, TimeOrientation::Past}));
    EXPECT_TRUE(is_future_timelike(MinkVec3d(0.1, 0, 1)));
    EXPECT_FALSE(is_future_timelike(MinkVec3d(1, 0, 1)));
}

TEST(Classify, ToleranceScalesWithLength)
{
    // A gap of order 1e-5 is noise at |x|^2 ~ 2e12 but real at unit scale.
    EXPECT_EQ(classify(MinkVec3d(1e6, 5e-3, 1e6)).tag, CausalTag::Lightlike);
    EXPECT_EQ(classify(MinkVec3d(1, 1e-2, 1)).tag, CausalTag::Spacelike);
}

TEST(LorentzProperties, RandomVectors)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    auto draw = [&] { return MinkVec3d(u(rng), u(rng), u(rng)); };
    for (int i = 0; i < 2000; ++i) {
        const MinkVec3d x = draw(), y = draw(), z = draw();
        const double a = u(rng), b = u(rng);
        const double scale = x.squaredNorm() * y.squaredNorm();
        EXPECT_NEAR(inner(cross(x, y), x), 0.0, 1e-14 * scale);
        EXPECT_NEAR(inner(cross(x, y), y), 0.0, 1e-14 * scale);
        EXPECT_DOUBLE_EQ(inner(x, y), inner(y, x));
        EXPECT_NEAR(inner(MinkVec3d(a * x + b * z), y), a * inner(x, y) + b * inner(z, y), 1e-12 * (1 + scale));
        const double lambda = std::exp(u(rng));
        EXPECT_EQ(classify(MinkVec3d(lambda * x)).tag, classify(x).tag);
    }
}

TEST(LorentzNormalized, UnitLength)
{
    const MinkVec3d n = lorentz_normalized(MinkVec3d(0.3, 0.4, 2.0));
    EXPECT_NEAR(inner(n, n), -1.0, 1e-15);
    const MinkVec3d s = lorentz_normalized(MinkVec3d(3, 0, 1));
    EXPECT_NEAR(inner(s, s), 1.0, 1e-15);
}
