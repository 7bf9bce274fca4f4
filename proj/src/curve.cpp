#include "mink/curve.hpp"

#include "mink/error.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace mink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Complex = std::complex<double>;

std::size_t fine_grid_size(std::size_t m)
{
    std::size_t q = 2048;
    while (q < 8 * m) q *= 2;
    return q;
}

int signed_frequency(std::size_t j, std::size_t q)
{
    return j <= q / 2 ? static_cast<int>(j) : static_cast<int>(j) - static_cast<int>(q);
}

} // namespace

PeriodicCurve::PeriodicCurve(std::span<const MinkVec3d> points)
    : node_count_(points.size())
{
    const std::size_t m = points.size();
    const std::size_t harmonics = m / 2;
    a_.assign(harmonics + 1, MinkVec3d::Zero());
    b_.assign(harmonics + 1, MinkVec3d::Zero());

    Eigen::FFT<double> fft;
    std::vector<Complex> samples(m), spectrum(m);
    for (int d = 0; d < 3; ++d) {
        for (std::size_t k = 0; k < m; ++k) samples[k] = points[k](d);
        fft.fwd(spectrum, samples);
        a_[0](d) = spectrum[0].real() / static_cast<double>(m);
        for (std::size_t j = 1; j <= harmonics; ++j) {
            const Complex c = spectrum[j] / static_cast<double>(m);
            if (2 * j == m) {
                a_[j](d) = c.real();
            } else {
                a_[j](d) = 2.0 * c.real();
                b_[j](d) = -2.0 * c.imag();
            }
        }
    }

    // Parameter speed on a fine grid by zero-padded spectral differentiation.
    const std::size_t q = fine_grid_size(m);
    std::array<std::vector<Complex>, 3> deriv;
    for (int d = 0; d < 3; ++d) {
        std::vector<Complex> spec(q, Complex(0, 0));
        for (std::size_t j = 1; j <= harmonics; ++j) {
            const double jd = static_cast<double>(j);
            const double aj = a_[j](d);
            const double bj = b_[j](d);
            spec[j] += Complex(jd * bj / 2.0, jd * aj / 2.0);
            spec[q - j] += Complex(jd * bj / 2.0, -jd * aj / 2.0);
        }
        std::vector<Complex> values;
        fft.inv(values, spec);
        for (auto& v : values) v *= static_cast<double>(q);
        deriv[static_cast<std::size_t>(d)] = std::move(values);
    }

    std::vector<Complex> speed(q);
    min_speed_sq_ = std::numeric_limits<double>::infinity();
    grid_speed_.assign(q + 1, 0.0);
    for (std::size_t i = 0; i < q; ++i) {
        const MinkVec3d v(deriv[0][i].real(), deriv[1][i].real(), deriv[2][i].real());
        const double v2 = inner(v, v);
        min_speed_sq_ = std::min(min_speed_sq_, v2);
        grid_speed_[i] = std::sqrt(std::max(v2, 0.0));
        speed[i] = grid_speed_[i];
    }
    grid_speed_[q] = grid_speed_[0];

    // s(u) = mean*u + periodic antiderivative of (speed - mean).
    std::vector<Complex> speed_hat;
    fft.fwd(speed_hat, speed);
    for (auto& c : speed_hat) c /= static_cast<double>(q);
    const double mean = speed_hat[0].real();
    std::vector<Complex> anti(q, Complex(0, 0));
    for (std::size_t j = 1; j < q; ++j) {
        if (2 * j == q) continue;
        const int f = signed_frequency(j, q);
        anti[j] = speed_hat[j] / Complex(0.0, static_cast<double>(f));
    }
    std::vector<Complex> periodic;
    fft.inv(periodic, anti);
    for (auto& v : periodic) v *= static_cast<double>(q);

    length_ = kTwoPi * mean;
    grid_s_.assign(q + 1, 0.0);
    const double du = kTwoPi / static_cast<double>(q);
    for (std::size_t i = 1; i < q; ++i) {
        grid_s_[i] = mean * du * static_cast<double>(i) + (periodic[i].real() - periodic[0].real());
    }
    grid_s_[q] = length_;
}

PeriodicCurve::Jet PeriodicCurve::jet(double u) const
{
    Jet out{a_[0], MinkVec3d::Zero(), MinkVec3d::Zero()};
    const double cu = std::cos(u);
    const double su = std::sin(u);
    double c = 1.0;
    double s = 0.0;
    for (std::size_t j = 1; j < a_.size(); ++j) {
        if (j % 32 == 0) {
            c = std::cos(static_cast<double>(j) * u);
            s = std::sin(static_cast<double>(j) * u);
        } else {
            const double cn = c * cu - s * su;
            s = s * cu + c * su;
            c = cn;
        }
        const double jd = static_cast<double>(j);
        out.position += a_[j] * c + b_[j] * s;
        out.first += jd * (b_[j] * c - a_[j] * s);
        out.second -= jd * jd * (a_[j] * c + b_[j] * s);
    }
    return out;
}

double PeriodicCurve::arc_length_at(double u) const
{
    const std::size_t q = grid_s_.size() - 1;
    const double du = kTwoPi / static_cast<double>(q);
    const double x = std::clamp(u, 0.0, kTwoPi) / du;
    const std::size_t i = std::min(static_cast<std::size_t>(x), q - 1);
    const double t = x - static_cast<double>(i);
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * grid_s_[i] + (t3 - 2 * t2 + t) * du * grid_speed_[i]
        + (-2 * t3 + 3 * t2) * grid_s_[i + 1] + (t3 - t2) * du * grid_speed_[i + 1];
}

double PeriodicCurve::parameter_at(double s) const
{
    double r = std::fmod(s, length_);
    if (r < 0) r += length_;
    const std::size_t q = grid_s_.size() - 1;
    const double du = kTwoPi / static_cast<double>(q);
    auto it = std::upper_bound(grid_s_.begin(), grid_s_.end(), r);
    std::size_t i = it == grid_s_.begin() ? 0 : static_cast<std::size_t>(it - grid_s_.begin()) - 1;
    i = std::min(i, q - 1);

    const double s0 = grid_s_[i];
    const double s1 = grid_s_[i + 1];
    const double d0 = du * grid_speed_[i];
    const double d1 = du * grid_speed_[i + 1];
    double lo = 0.0;
    double hi = 1.0;
    double t = s1 > s0 ? std::clamp((r - s0) / (s1 - s0), 0.0, 1.0) : 0.0;
    for (int iter = 0; iter < 50; ++iter) {
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double f = (2 * t3 - 3 * t2 + 1) * s0 + (t3 - 2 * t2 + t) * d0 + (-2 * t3 + 3 * t2) * s1
            + (t3 - t2) * d1 - r;
        const double df = (6 * t2 - 6 * t) * s0 + (3 * t2 - 4 * t + 1) * d0 + (-6 * t2 + 6 * t) * s1
            + (3 * t2 - 2 * t) * d1;
        if (f > 0) {
            hi = t;
        } else {
            lo = t;
        }
        double next = df > 0 ? t - f / df : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) < 1e-16) {
            t = next;
            break;
        }
        t = next;
    }
    return du * (static_cast<double>(i) + t);
}

ClosedCurve::ClosedCurve(std::shared_ptr<const PeriodicCurve> curve, std::size_t n, double offset, int direction)
    : curve_(std::move(curve))
    , offset_(offset)
    , direction_(direction)
    , length_(curve_->length())
{
    positions_.reserve(n);
    tangents_.reserve(n);
    curvature_vectors_.reserve(n);
    kappas_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const CurvePoint p = at(length_ * static_cast<double>(i) / static_cast<double>(n));
        positions_.push_back(p.position);
        tangents_.push_back(p.tangent);
        curvature_vectors_.push_back(p.curvature);
        const double k2 = inner(p.curvature, p.curvature);
        kappas_.push_back(k2 > 0 ? std::sqrt(k2) : std::numeric_limits<double>::quiet_NaN());
    }
}

CurvePoint ClosedCurve::at(double s) const
{
    const double u = curve_->parameter_at(offset_ + direction_ * s);
    const PeriodicCurve::Jet j = curve_->jet(u);
    const double v2 = inner(j.first, j.first);
    const double v = std::sqrt(v2);
    CurvePoint p;
    p.position = j.position;
    p.tangent = (direction_ / v) * j.first;
    p.curvature = (j.second - (inner(j.first, j.second) / v2) * j.first) / v2;
    return p;
}

ClosedCurve ClosedCurve::resampled(std::size_t n) const
{
    if (n < 8) throw Error(ErrorCode::TooFewPoints, "need at least 8 samples, got " + std::to_string(n));
    return ClosedCurve(curve_, n, offset_, direction_);
}

ClosedCurve ClosedCurve::shifted(double s0) const
{
    return ClosedCurve(curve_, size(), offset_ + direction_ * s0, direction_);
}

ClosedCurve ClosedCurve::reversed() const
{
    return ClosedCurve(curve_, size(), offset_, -direction_);
}

ClosedCurve resample_arclength(std::span<const MinkVec3d> points, std::size_t n)
{
    if (points.size() < 8) {
        throw Error(ErrorCode::TooFewPoints, "closed curve needs at least 8 points, got " + std::to_string(points.size()));
    }
    if (n < 8) throw Error(ErrorCode::TooFewPoints, "need at least 8 samples, got " + std::to_string(n));
    for (std::size_t k = 0; k < points.size(); ++k) {
        const MinkVec3d chord = points[(k + 1) % points.size()] - points[k];
        if (!std::isfinite(chord.squaredNorm())) {
            throw Error(ErrorCode::InvalidArgument, "non-finite coordinate at point " + std::to_string(k));
        }
        if (!(inner(chord, chord) > 0)) {
            throw Error(ErrorCode::NonSpacelikeSegment, "chord " + std::to_string(k) + " -> "
                    + std::to_string((k + 1) % points.size()) + " is not spacelike");
        }
    }
    auto curve = std::make_shared<const PeriodicCurve>(points);
    if (!(curve->min_speed_squared() > 0)) {
        throw Error(ErrorCode::NonSpacelikeSegment, "interpolated tangent is not spacelike everywhere (min <T,T> = "
                + std::to_string(curve->min_speed_squared()) + ")");
    }
    return ClosedCurve(std::move(curve), n, 0.0, 1);
}

StrongSpacelikeReport is_strong_spacelike(const ClosedCurve& c)
{
    StrongSpacelikeReport r;
    r.worst_margin = std::numeric_limits<double>::infinity();
    r.indicatrix_margin = std::numeric_limits<double>::infinity();
    r.criteria_agree = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const MinkVec3d& t = c.tangents()[i];
        const MinkVec3d& k = c.curvature_vectors()[i];
        const double margin = inner(k, k);
        if (margin < r.worst_margin) {
            r.worst_margin = margin;
            r.worst_index = i;
        }
        const double cosh2 = 1.0 + t(2) * t(2);
        const double dtheta = (t(0) * k(1) - t(1) * k(0)) / cosh2;
        const double dphi = k(2) / std::sqrt(cosh2);
        const double m5 = cosh2 * dtheta * dtheta - dphi * dphi;
        r.indicatrix_margin = std::min(r.indicatrix_margin, m5);
        if ((margin > 0) != (m5 > 0)) r.criteria_agree = false;
    }
    r.ok = r.worst_margin > 0;
    return r;
}

TangentIndicatrix indicatrix(const ClosedCurve& c)
{
    const std::size_t n = c.size();
    TangentIndicatrix ind;
    ind.theta.resize(n);
    ind.phi.resize(n);

    auto rate = [&](std::size_t i) {
        const MinkVec3d& t = c.tangents()[i];
        const MinkVec3d& k = c.curvature_vectors()[i];
        return (t(0) * k(1) - t(1) * k(0)) / (1.0 + t(2) * t(2));
    };
    auto principal = [&](std::size_t i) { return std::atan2(c.tangents()[i](1), c.tangents()[i](0)); };

    // Each step is the 2*pi-representative closest to the trapezoid prediction theta' * ds.
    auto step = [&](std::size_t from, std::size_t to) {
        const double predicted = 0.5 * (rate(from) + rate(to)) * c.spacing();
        double d = principal(to) - principal(from);
        d += kTwoPi * std::round((predicted - d) / kTwoPi);
        if (std::abs(d) >= std::numbers::pi) {
            throw Error(ErrorCode::AmbiguousLift, "longitude step of " + std::to_string(d) + " rad at sample "
                    + std::to_string(from) + "; resample finer");
        }
        return d;
    };

    std::vector<double> steps(n);
    ind.theta[0] = principal(0);
    for (std::size_t i = 0; i < n; ++i) {
        steps[i] = step(i, (i + 1) % n);
        if (i + 1 < n) ind.theta[i + 1] = ind.theta[i] + steps[i];
        ind.total_winding += steps[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        ind.phi[i] = std::asinh(c.tangents()[i](2));
        if (steps[i] * ind.total_winding <= 0) ++ind.monotonicity_violations;
    }
    return ind;
}

IndexResult curve_index(const ClosedCurve& c)
{
    const TangentIndicatrix ind = indicatrix(c);
    const long raw = std::lround(ind.total_winding / kTwoPi);
    IndexResult r;
    r.reversed = raw < 0;
    r.value = static_cast<int>(raw < 0 ? -raw : raw);
    return r;
}

double total_curvature(const ClosedCurve& c)
{
    const std::size_t n = c.size();
    const auto& k = c.kappas();
    double sum = 0;
    if (n % 2 == 0) {
        for (std::size_t i = 0; i < n; ++i) sum += (i % 2 == 0 ? 2.0 : 4.0) * k[i];
        sum /= 3.0;
    } else {
        for (std::size_t i = 0; i < n; ++i) sum += k[i];
    }
    return sum * c.spacing();
}

ClosedCurve oriented_positively(const ClosedCurve& c)
{
    return curve_index(c).reversed ? c.reversed() : c;
}

} // namespace mink
