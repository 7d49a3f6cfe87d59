#include <intervalkit/calculus.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace intervalkit {

namespace {

using Sample = std::array<double, 2>;
using Sampler = std::function<Sample(double)>;

struct Estimate {
    Sample value{};
    Sample error{};
};

constexpr int levels = 3;

Sample checked_sample(const Sampler& s, double t)
{
    Sample v = s(t);
    if (!std::isfinite(v[0]) || !std::isfinite(v[1]))
        throw Error(ErrorCode::NonFinite, "non-finite sample at t = " + format_real(t));
    return v;
}

// Richardson tableau over step sizes h0, h0/2, h0/4. For central differences
// the error series is in h^2, for one-sided ones in h.
Estimate extrapolate(const std::array<Sample, levels>& d, bool even_powers)
{
    Estimate out;
    for (int k = 0; k < 2; ++k) {
        std::array<double, levels> row{};
        for (int i = 0; i < levels; ++i)
            row[i] = d[i][k];
        double correction = 0.0;
        for (int j = 1; j < levels; ++j) {
            double factor = even_powers ? std::pow(4.0, j) - 1.0 : std::pow(2.0, j) - 1.0;
            for (int i = levels - 1; i >= j; --i) {
                double next = row[i] + (row[i] - row[i - 1]) / factor;
                if (i == levels - 1)
                    correction = next - row[i];
                row[i] = next;
            }
        }
        out.value[k] = row[levels - 1];
        out.error[k] = std::abs(correction);
    }
    return out;
}

Estimate central(const Sampler& s, double t, double h0)
{
    std::array<Sample, levels> d{};
    double h = h0;
    for (int i = 0; i < levels; ++i, h *= 0.5) {
        Sample p = checked_sample(s, t + h);
        Sample m = checked_sample(s, t - h);
        d[i] = {(p[0] - m[0]) / (2 * h), (p[1] - m[1]) / (2 * h)};
    }
    return extrapolate(d, true);
}

Estimate one_sided(const Sampler& s, double t, double h0, double direction, const Sample& at_t)
{
    std::array<Sample, levels> d{};
    double h = h0;
    for (int i = 0; i < levels; ++i, h *= 0.5) {
        Sample p = checked_sample(s, t + direction * h);
        d[i] = {(p[0] - at_t[0]) / (direction * h), (p[1] - at_t[1]) / (direction * h)};
    }
    return extrapolate(d, false);
}

Estimate differentiate(const Sampler& s, double t, double lo, double hi, const DeriveOptions& opts)
{
    if (!std::isfinite(t))
        throw Error(ErrorCode::NonFinite, "derivative point is not finite");
    if (opts.check_domain && (t - 2 * opts.h0 < lo || t + 2 * opts.h0 > hi))
        throw Error(ErrorCode::DomainBoundary,
                    "t = " + format_real(t) + " is within 2h of the domain boundary");
    Estimate c = central(s, t, opts.h0);
    if (!opts.check_one_sided)
        return c;
    Sample at_t = checked_sample(s, t);
    Estimate fwd = one_sided(s, t, opts.h0, 1.0, at_t);
    Estimate bwd = one_sided(s, t, opts.h0, -1.0, at_t);
    for (int k = 0; k < 2; ++k) {
        double gap = std::abs(fwd.value[k] - bwd.value[k]);
        double allowed = 100.0 * (c.error[k] + fwd.error[k] + bwd.error[k]) + 1e-6 * (1.0 + std::abs(c.value[k]));
        if (gap > allowed)
            throw Error(ErrorCode::NonDifferentiable,
                        "one-sided derivatives differ at t = " + format_real(t) + " (" + format_real(fwd.value[k])
                            + " vs " + format_real(bwd.value[k]) + ")");
    }
    return c;
}

Sampler coords_of(const IvfHandle& f)
{
    return [&f](double t) {
        Interval v = f.value(t);
        return Sample{v.center(), v.log_radius()};
    };
}

Sampler endpoints_of(const IvfHandle& f)
{
    return [&f](double t) {
        ExtendedInterval v = f.endpoints(t);
        return Sample{v.lo, v.hi};
    };
}

double jump(const ExtendedInterval& a, const ExtendedInterval& b)
{
    return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

} // namespace

RealDerivative central_derivative(const std::function<double(double)>& g, double t, double h0)
{
    Estimate e = central([&g](double s) { return Sample{g(s), 0.0}; }, t, h0);
    return {e.value[0], e.error[0]};
}

DerivativeResult derive(const IvfHandle& f, double t, const DeriveOptions& opts)
{
    Estimate e = differentiate(coords_of(f), t, f.t_lo(), f.t_hi(), opts);
    return {Interval::from_coords(e.value[0], e.value[1]), std::hypot(e.error[0], e.error[1])};
}

GhDerivativeResult gh_derive(const IvfHandle& f, double t, const DeriveOptions& opts)
{
    Estimate e = differentiate(endpoints_of(f), t, f.t_lo(), f.t_hi(), opts);
    double lo = std::min(e.value[0], e.value[1]);
    double hi = std::max(e.value[0], e.value[1]);
    return {ExtendedInterval(lo, hi), std::max(e.error[0], e.error[1])};
}

std::vector<double> find_switching_points(const IvfHandle& f, std::size_t grid_n)
{
    if (grid_n < 16)
        throw Error(ErrorCode::InvalidConfig, "switching point search needs at least 16 grid intervals");
    const double a = f.t_lo();
    const double b = f.t_hi();
    const double dt = (b - a) / static_cast<double>(grid_n);
    const double h = std::min(1e-4, dt / 4);
    auto radius = [&f](double t) { return f.endpoints(t).radius(); };
    auto slope = [&](double t) { return central_derivative(radius, t, h).value; };

    std::vector<double> nodes(grid_n + 1);
    std::vector<double> g(grid_n + 1, 0.0);
    for (std::size_t i = 0; i <= grid_n; ++i)
        nodes[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(grid_n);
    for (std::size_t i = 1; i < grid_n; ++i)
        g[i] = slope(nodes[i]);

    // Slopes below the roundoff floor count as flat; a switch needs a sign change across them.
    double scale = 0.0;
    for (double t : nodes)
        scale = std::max(scale, std::abs(radius(t)));
    const double floor = 1e-9 * (1.0 + scale);
    auto sign = [floor](double v) { return std::abs(v) <= floor ? 0 : (v > 0 ? 1 : -1); };

    std::vector<double> roots;
    std::size_t last = 0;
    for (std::size_t i = 1; i < grid_n; ++i) {
        int s = sign(g[i]);
        if (s == 0)
            continue;
        if (last != 0 && sign(g[last]) != s) {
            double lo = nodes[last];
            double hi = nodes[i];
            int s_lo = sign(g[last]);
            while (hi - lo > 1e-10) {
                double mid = 0.5 * (lo + hi);
                double gm = slope(mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((gm > 0.0) == (s_lo > 0))
                    lo = mid;
                else
                    hi = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        last = i;
    }
    return roots;
}

bool check_continuity(const IvfHandle& f, std::size_t grid_n, double tol)
{
    if (grid_n < 2)
        throw Error(ErrorCode::InvalidConfig, "continuity check needs at least 2 grid intervals");
    const double a = f.t_lo();
    const double b = f.t_hi();
    auto node = [&](std::size_t i) { return a + (b - a) * static_cast<double>(i) / static_cast<double>(grid_n); };

    ExtendedInterval prev = f.endpoints(a);
    for (std::size_t i = 1; i <= grid_n; ++i) {
        double t1 = node(i);
        ExtendedInterval cur = f.endpoints(t1);
        if (jump(prev, cur) > tol) {
            double lo = node(i - 1);
            double hi = t1;
            ExtendedInterval f_lo = prev;
            ExtendedInterval f_hi = cur;
            bool settled = false;
            while (hi - lo > 1e-13) {
                double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                ExtendedInterval f_mid = f.endpoints(mid);
                double left = jump(f_lo, f_mid);
                double right = jump(f_mid, f_hi);
                if (std::max(left, right) <= tol) {
                    settled = true;
                    break;
                }
                if (left >= right) {
                    hi = mid;
                    f_hi = f_mid;
                } else {
                    lo = mid;
                    f_lo = f_mid;
                }
            }
            if (!settled && jump(f_lo, f_hi) > tol)
                return false;
        }
        prev = cur;
    }
    return true;
}

IvfHandle derivative_function(const IvfHandle& f)
{
    DeriveOptions opts;
    opts.check_domain = false;
    opts.check_one_sided = false;
    return IvfHandle::from_function([g = f.extended(), opts](double t) { return derive(g, t, opts).value; }, f.t_lo(),
                                    f.t_hi());
}

IvfHandle gh_derivative_function(const IvfHandle& f)
{
    DeriveOptions opts;
    opts.check_domain = false;
    opts.check_one_sided = false;
    return IvfHandle::from_endpoint_function([g = f.extended(), opts](double t) { return gh_derive(g, t, opts).value; },
                                             f.t_lo(), f.t_hi());
}

} // namespace intervalkit
