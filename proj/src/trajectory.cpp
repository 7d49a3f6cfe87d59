#include <intervalkit/trajectory.hpp>

#include <cmath>

namespace intervalkit {

Grid Grid::with_nodes(double t0, double t_end, std::size_t intervals)
{
    if (!(t0 < t_end) || intervals == 0)
        throw Error(ErrorCode::InvalidConfig, "grid needs t0 < t_end and at least one step");
    Grid g;
    g.t.resize(intervals + 1);
    double span = t_end - t0;
    for (std::size_t i = 0; i <= intervals; ++i)
        g.t[i] = t0 + span * static_cast<double>(i) / static_cast<double>(intervals);
    g.t.back() = t_end;
    return g;
}

Grid Grid::uniform(double t0, double t_end, double step)
{
    if (!(step > 0.0) || !std::isfinite(step))
        throw Error(ErrorCode::InvalidConfig, "step must be positive");
    double n = std::ceil((t_end - t0) / step - 1e-9);
    if (n < 1.0)
        n = 1.0;
    return with_nodes(t0, t_end, static_cast<std::size_t>(n));
}

double Grid::spacing() const noexcept
{
    if (t.size() < 2)
        return 0.0;
    return (t.back() - t.front()) / static_cast<double>(t.size() - 1);
}

bool same_grid(const Grid& a, const Grid& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.t[i] - b.t[i]) > 1e-9 * (1.0 + std::abs(a.t[i])))
            return false;
    }
    return true;
}

void require_same_grid(const Grid& a, const Grid& b)
{
    if (!same_grid(a, b))
        throw Error(ErrorCode::GridMismatch,
                    "grids differ (" + std::to_string(a.size()) + " vs " + std::to_string(b.size())
                        + " nodes)");
}

EndpointTrajectory to_endpoints(const Trajectory& x, std::string label)
{
    EndpointTrajectory out;
    out.grid = x.grid;
    out.label = std::move(label);
    out.values.reserve(x.values.size());
    for (const auto& v : x.values)
        out.values.push_back(v.endpoints());
    return out;
}

} // namespace intervalkit
