#pragma once

#include <intervalkit/interval.hpp>
#include <intervalkit/ivf.hpp>

#include <cstddef>
#include <functional>
#include <vector>

namespace intervalkit {

struct DerivativeResult {
    Interval value;
    double estimated_error = 0.0;
};

struct GhDerivativeResult {
    ExtendedInterval value;
    double estimated_error = 0.0;
};

struct DeriveOptions {
    double h0 = 1e-4;
    /// Reject t closer than 2 h0 to the domain ends (DomainBoundary).
    bool check_domain = true;
    /// Compare one-sided estimates and report NonDifferentiable on a mismatch.
    bool check_one_sided = true;
};

/// Richardson-extrapolated central difference of a real function.
struct RealDerivative {
    double value = 0.0;
    double estimated_error = 0.0;
};
RealDerivative central_derivative(const std::function<double(double)>& g, double t, double h0);

/// Derivative in the new calculus: d/dt of the center and of the log-radius,
/// so the radius part is the multiplicative derivative e^{(ln f_w)'}.
DerivativeResult derive(const IvfHandle& f, double t, const DeriveOptions& opts = {});

/// gH derivative [min(f_l'), max(f_r')] from differences of the endpoint
/// functions. Either endpoint failing to be differentiable is an error.
GhDerivativeResult gh_derive(const IvfHandle& f, double t, const DeriveOptions& opts = {});

/// Interior points where the radius derivative changes sign, located on a
/// grid of grid_n intervals and refined by bisection to 1e-10.
std::vector<double> find_switching_points(const IvfHandle& f, std::size_t grid_n);

/// Sampling test of endpoint continuity: every adjacent-node jump above tol is
/// bisected toward its larger half; a jump that survives at width 1e-13 is a
/// discontinuity.
bool check_continuity(const IvfHandle& f, std::size_t grid_n, double tol);

/// The derivative as an interval-valued function on f's domain. Domain checks
/// are off so the ends of the domain can be sampled.
IvfHandle derivative_function(const IvfHandle& f);
/// Same for the gH derivative, in endpoint form.
IvfHandle gh_derivative_function(const IvfHandle& f);

} // namespace intervalkit
