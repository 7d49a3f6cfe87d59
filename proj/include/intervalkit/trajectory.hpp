#pragma once

#include <intervalkit/interval.hpp>

#include <cstddef>
#include <vector>

namespace intervalkit {

/// Uniform time grid t_i = t0 + i (t_end - t0) / n, i = 0..n.
struct Grid {
    std::vector<double> t;

    /// Smallest n with (t_end - t0) / n <= step.
    static Grid uniform(double t0, double t_end, double step);
    static Grid with_nodes(double t0, double t_end, std::size_t intervals);

    [[nodiscard]] std::size_t size() const noexcept { return t.size(); }
    [[nodiscard]] double spacing() const noexcept;
    [[nodiscard]] double front() const { return t.front(); }
    [[nodiscard]] double back() const { return t.back(); }
};

/// Two grids are the same if they have the same length and their nodes agree
/// to 1e-9 relative.
bool same_grid(const Grid& a, const Grid& b);
void require_same_grid(const Grid& a, const Grid& b);

/// Solution of the new-calculus IDE: one interval per grid node.
struct Trajectory {
    Grid grid;
    std::vector<Interval> values;
};

/// Endpoint form, used by the gH and sweep solvers and for comparisons.
struct EndpointTrajectory {
    Grid grid;
    std::vector<ExtendedInterval> values;
    std::string label;
};

EndpointTrajectory to_endpoints(const Trajectory& x, std::string label = {});

} // namespace intervalkit
