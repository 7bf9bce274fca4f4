#pragma once

// Lorentz linear algebra on R^3_1 with signature (+,+,-).

#include <Eigen/Core>

#include <algorithm>
#include <cmath>

namespace mink {

template <typename Scalar>
using MinkVec3 = Eigen::Matrix<Scalar, 3, 1>;

using MinkVec3d = MinkVec3<double>;
using Vec2d = Eigen::Vector2d;

/// Lorentz inner product x1*y1 + x2*y2 - x3*y3.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar inner(const Eigen::MatrixBase<DerivedA>& x, const Eigen::MatrixBase<DerivedB>& y)
{
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 3);
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 3);
    return x(0) * y(0) + x(1) * y(1) - x(2) * y(2);
}

/// Lorentz squared norm <x,x>; its sign is the causal character of x.
template <typename Derived>
typename Derived::Scalar squared_norm(const Eigen::MatrixBase<Derived>& x)
{
    return inner(x, x);
}

/// Lorentz cross product. The result is Lorentz-orthogonal to both arguments,
/// and for two vectors spanning a spacelike plane it is a timelike normal.
template <typename DerivedA, typename DerivedB>
MinkVec3<typename DerivedA::Scalar> cross(const Eigen::MatrixBase<DerivedA>& x, const Eigen::MatrixBase<DerivedB>& y)
{
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 3);
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 3);
    return MinkVec3<typename DerivedA::Scalar>(
        -x(1) * y(2) + x(2) * y(1),
        -x(2) * y(0) + x(0) * y(2),
        x(0) * y(1) - x(1) * y(0));
}

/// <x,x> / |x|^2_E, a scale-free causal margin in [-1, 1].
template <typename Derived>
typename Derived::Scalar normalized_causal_margin(const Eigen::MatrixBase<Derived>& x)
{
    const auto e = x.squaredNorm();
    return e > 0 ? inner(x, x) / e : typename Derived::Scalar(0);
}

/// Divides a spacelike or timelike vector by sqrt(|<x,x>|).
template <typename Derived>
MinkVec3<typename Derived::Scalar> lorentz_normalized(const Eigen::MatrixBase<Derived>& x)
{
    using std::abs;
    using std::sqrt;
    return x / sqrt(abs(inner(x, x)));
}

enum class CausalTag { Spacelike, Lightlike, Timelike };
enum class TimeOrientation { None, Future, Past };

struct CausalClass {
    CausalTag tag = CausalTag::Spacelike;
    TimeOrientation orientation = TimeOrientation::None;

    friend bool operator==(const CausalClass&, const CausalClass&) = default;
};

/// Scale-aware degeneracy threshold: 1e-12 * max(1, |x|^2_E).
template <typename Derived>
typename Derived::Scalar default_zero_tolerance(const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    return Scalar(1e-12) * std::max(Scalar(1), x.squaredNorm());
}

template <typename Derived>
CausalClass classify(const Eigen::MatrixBase<Derived>& x, typename Derived::Scalar zero_tol)
{
    const auto q = inner(x, x);
    CausalClass c;
    if (q > zero_tol) {
        c.tag = CausalTag::Spacelike;
        return c;
    }
    c.tag = q < -zero_tol ? CausalTag::Timelike : CausalTag::Lightlike;
    if (x(2) > 0) {
        c.orientation = TimeOrientation::Future;
    } else if (x(2) < 0) {
        c.orientation = TimeOrientation::Past;
    }
    return c;
}

template <typename Derived>
CausalClass classify(const Eigen::MatrixBase<Derived>& x)
{
    return classify(x, default_zero_tolerance(x));
}

template <typename Derived>
bool is_future_timelike(const Eigen::MatrixBase<Derived>& x)
{
    return inner(x, x) < 0 && x(2) > 0;
}

inline const char* to_string(CausalTag tag)
{
    switch (tag) {
    case CausalTag::Spacelike: return "Spacelike";
    case CausalTag::Lightlike: return "Lightlike";
    case CausalTag::Timelike: return "Timelike";
    }
    return "?";
}

inline const char* to_string(TimeOrientation o)
{
    switch (o) {
    case TimeOrientation::None: return "None";
    case TimeOrientation::Future: return "Future";
    case TimeOrientation::Past: return "Past";
    }
    return "?";
}

} // namespace mink
