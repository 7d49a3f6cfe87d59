#include <intervalkit/quadrature.hpp>

#include <intervalkit/calculus.hpp>
#include <intervalkit/metric.hpp>

#include <cmath>
#include <limits>

namespace intervalkit {

namespace {

struct Simpson {
    const std::function<double(double)>& g;
    std::size_t evaluations = 0;
    double error = 0.0;

    double eval(double t)
    {
        ++evaluations;
        double v = g(t);
        if (!std::isfinite(v))
            throw Error(ErrorCode::NonFinite, "integrand is not finite at t = " + format_real(t));
        return v;
    }

    static double rule(double a, double b, double fa, double fm, double fb)
    {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth)
    {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m);
        double rm = 0.5 * (m + b);
        double flm = eval(lm);
        double frm = eval(rm);
        double left = rule(a, m, fa, flm, fm);
        double right = rule(m, b, fm, frm, fb);
        double diff = left + right - whole;
        // Relative floor so roundoff alone never forces a split.
        double floor = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
        if (std::abs(diff) <= 15.0 * tol || std::abs(diff) <= floor) {
            error += std::abs(diff) / 15.0;
            return left + right + diff / 15.0;
        }
        if (depth >= max_depth)
            throw Error(ErrorCode::MaxDepthExceeded,
                        "adaptive Simpson exceeded depth " + std::to_string(max_depth) + " near t = " + format_real(m));
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
            + refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

Interval embed_or_value(const Factor& g, double t)
{
    if (const auto* f = std::get_if<IvfHandle>(&g))
        return f->value(t);
    return from_real(std::get<std::function<double(double)>>(g)(t));
}

Interval derivative_of(const Factor& g, double t)
{
    if (const auto* f = std::get_if<IvfHandle>(&g)) {
        DeriveOptions opts;
        opts.check_domain = false;
        opts.check_one_sided = false;
        return derive(f->extended(), t, opts).value;
    }
    const auto& real = std::get<std::function<double(double)>>(g);
    return from_real(central_derivative(real, t, 1e-4).value);
}

} // namespace

RealQuadrature adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tol)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw Error(ErrorCode::InvalidConfig, "integration needs finite a < b");
    if (!(tol > 0.0))
        throw Error(ErrorCode::InvalidConfig, "tolerance must be positive");
    Simpson s{g};
    double panel_tol = tol / static_cast<double>(initial_panels);
    double total = 0.0;
    double fa = s.eval(a);
    for (std::size_t i = 0; i < initial_panels; ++i) {
        double p0 = a + (b - a) * static_cast<double>(i) / static_cast<double>(initial_panels);
        double p1 = i + 1 == initial_panels
            ? b
            : a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(initial_panels);
        double pm = 0.5 * (p0 + p1);
        double fm = s.eval(pm);
        double fb = s.eval(p1);
        total += s.refine(p0, p1, fa, fm, fb, Simpson::rule(p0, p1, fa, fm, fb), panel_tol, 0);
        fa = fb;
    }
    return {total, s.error, s.evaluations};
}

QuadratureResult ir_integral(const IvfHandle& f, double a, double b, double tol)
{
    if (a < f.t_lo() || b > f.t_hi())
        throw Error(ErrorCode::DomainBoundary, "integration range leaves the function's domain");
    double part_tol = tol / std::sqrt(2.0);
    RealQuadrature center = adaptive_simpson([&f](double t) { return f.value(t).center(); }, a, b, part_tol);
    RealQuadrature log_radius
        = adaptive_simpson([&f](double t) { return f.value(t).log_radius(); }, a, b, part_tol);
    return {Interval::from_coords(center.value, log_radius.value),
            std::hypot(center.estimated_error, log_radius.estimated_error),
            center.evaluations + log_radius.evaluations};
}

double mult_integral(const std::function<double(double)>& g, double a, double b, double tol)
{
    auto log_g = [&g](double t) {
        double v = g(t);
        if (!(v > 0.0))
            throw Error(ErrorCode::NonPositiveIntegrand,
                        "multiplicative integrand is not positive at t = " + format_real(t));
        return std::log(v);
    };
    double r = std::exp(adaptive_simpson(log_g, a, b, tol).value);
    if (!std::isfinite(r))
        throw Error(ErrorCode::NonFinite, "multiplicative integral overflows");
    return r;
}

ExtendedInterval endpoint_integral(const IvfHandle& f, double a, double b, double tol)
{
    double part_tol = tol / std::sqrt(2.0);
    double lo = adaptive_simpson([&f](double t) { return f.endpoints(t).lo; }, a, b, part_tol).value;
    double hi = adaptive_simpson([&f](double t) { return f.endpoints(t).hi; }, a, b, part_tol).value;
    return {std::min(lo, hi), std::max(lo, hi)};
}

FtcReport verify_ftc(const IvfHandle& f, double a, double b, double tol)
{
    FtcReport r;
    r.difference = sub(f.value(b), f.value(a));
    r.integral = ir_integral(derivative_function(f), a, b, 0.1 * tol).value;
    r.distance = distance(r.difference, r.integral);
    r.holds = r.distance < tol;
    return r;
}

ByPartsReport verify_by_parts(const IvfHandle& F, const Factor& G, double a, double b, double tol)
{
    ByPartsReport r;
    r.lhs = sub(mul(F.value(b), embed_or_value(G, b)), mul(F.value(a), embed_or_value(G, a)));

    DeriveOptions opts;
    opts.check_domain = false;
    opts.check_one_sided = false;
    const IvfHandle F_ext = F.extended();
    auto dF_G = IvfHandle::from_function(
        [&](double t) { return mul(derive(F_ext, t, opts).value, embed_or_value(G, t)); }, a, b);
    auto F_dG = IvfHandle::from_function([&](double t) { return mul(F.value(t), derivative_of(G, t)); }, a, b);
    r.rhs = add(ir_integral(dF_G, a, b, 0.05 * tol).value, ir_integral(F_dG, a, b, 0.05 * tol).value);
    r.distance = distance(r.lhs, r.rhs);
    r.holds = r.distance < tol;
    return r;
}

} // namespace intervalkit
