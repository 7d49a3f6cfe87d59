#include <intervalkit/metric.hpp>

#include <algorithm>
#include <cmath>

namespace intervalkit {

double distance(const Interval& a, const Interval& b)
{
    return std::hypot(a.center() - b.center(), a.log_radius() - b.log_radius());
}

double norm(const Interval& a) { return std::hypot(a.center(), a.log_radius()); }

double inner(const Interval& a, const Interval& b)
{
    return a.center() * b.center() + a.log_radius() * b.log_radius();
}

MetricReport metric_report(const Interval& a, const Interval& b)
{
    return {distance(a, b), norm(a), norm(b), inner(a, b)};
}

double sup_distance(const Trajectory& x, const Trajectory& y)
{
    require_same_grid(x.grid, y.grid);
    if (x.values.size() != y.values.size())
        throw Error(ErrorCode::GridMismatch, "trajectories have different lengths");
    double worst = 0.0;
    for (std::size_t i = 0; i < x.values.size(); ++i)
        worst = std::max(worst, distance(x.values[i], y.values[i]));
    return worst;
}

bool check_limit(const std::vector<Interval>& seq, const Interval& candidate, double tol)
{
    if (seq.empty())
        throw Error(ErrorCode::InvalidConfig, "check_limit needs a non-empty sequence");
    if (!(distance(seq.back(), candidate) < tol))
        return false;
    std::size_t n = seq.size();
    std::size_t start = n - std::max<std::size_t>(1, n / 4);
    double prev = distance(seq[start], candidate);
    for (std::size_t i = start + 1; i < n; ++i) {
        double d = distance(seq[i], candidate);
        if (d > prev)
            return false;
        prev = d;
    }
    return true;
}

} // namespace intervalkit
