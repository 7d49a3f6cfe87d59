#pragma once

#include <intervalkit/interval.hpp>
#include <intervalkit/trajectory.hpp>

#include <vector>

namespace intervalkit {

/// Euclidean distance in (center, log-radius) coordinates.
double distance(const Interval& a, const Interval& b);
double norm(const Interval& a);
double inner(const Interval& a, const Interval& b);

struct MetricReport {
    double distance = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    double inner = 0.0;
};

MetricReport metric_report(const Interval& a, const Interval& b);

/// Largest node-wise distance; throws GridMismatch.
double sup_distance(const Trajectory& x, const Trajectory& y);

/// Finite-sample limit test: the last element lies within tol of the
/// candidate and the distances do not increase over the final quarter.
bool check_limit(const std::vector<Interval>& seq, const Interval& candidate, double tol);

} // namespace intervalkit
