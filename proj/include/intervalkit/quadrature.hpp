#pragma once

#include <intervalkit/interval.hpp>
#include <intervalkit/ivf.hpp>

#include <cstddef>
#include <functional>
#include <variant>

namespace intervalkit {

struct QuadratureResult {
    Interval value;
    double estimated_error = 0.0;
    std::size_t evaluations = 0;
};

struct RealQuadrature {
    double value = 0.0;
    double estimated_error = 0.0;
    std::size_t evaluations = 0;
};

/// Number of equal panels every adaptive integral starts from.
inline constexpr std::size_t initial_panels = 8;
inline constexpr int max_depth = 40;

/// Adaptive Simpson with error target tol, split evenly over the initial
/// panels. Throws MaxDepthExceeded or NonFinite.
RealQuadrature adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tol);

/// <integral of f_c; exp(integral of ln f_w)>, each part to tol / sqrt(2).
QuadratureResult ir_integral(const IvfHandle& f, double a, double b, double tol);

/// exp(integral of ln g); g must stay positive (NonPositiveIntegrand).
double mult_integral(const std::function<double(double)>& g, double a, double b, double tol);

/// Classical integral of the endpoint functions: [integral f_l, integral f_r]
/// (swapped if needed).
ExtendedInterval endpoint_integral(const IvfHandle& f, double a, double b, double tol);

/// A factor in a product: either an interval-valued function or a real one,
/// which is used through its embedding.
using Factor = std::variant<IvfHandle, std::function<double(double)>>;

struct FtcReport {
    bool holds = false;
    Interval difference; ///< F(b) - F(a)
    Interval integral;   ///< integral of F' over [a, b]
    double distance = 0.0;
};

/// F(b) - F(a) against the integral of the derivative of F.
FtcReport verify_ftc(const IvfHandle& f, double a, double b, double tol);

struct ByPartsReport {
    bool holds = false;
    Interval lhs; ///< F(b)G(b) - F(a)G(a)
    Interval rhs; ///< integral F'G + integral F G'
    double distance = 0.0;
};

ByPartsReport verify_by_parts(const IvfHandle& F, const Factor& G, double a, double b, double tol);

} // namespace intervalkit
