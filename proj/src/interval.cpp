#include <intervalkit/interval.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace intervalkit {

namespace {

Interval checked(double c, double rho)
{
    if (!std::isfinite(c) || !std::isfinite(rho))
        throw Error(ErrorCode::Overflow, "interval result is not finite");
    return Interval::from_coords(c, rho);
}

void require_finite(double x, const char* what)
{
    if (!std::isfinite(x))
        throw Error(ErrorCode::Overflow, std::string(what) + " is not finite");
}

ExtendedInterval checked_pair(double lo, double hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw Error(ErrorCode::Overflow, "interval endpoint is not finite");
    return {lo, hi};
}

OrderRelation compare_real(double a, double b)
{
    if (a < b)
        return OrderRelation::Less;
    if (a > b)
        return OrderRelation::Greater;
    return OrderRelation::Equal;
}

} // namespace

ExtendedInterval::ExtendedInterval(double lo_, double hi_)
    : lo(lo_), hi(hi_)
{
    if (std::isnan(lo) || std::isnan(hi) || lo > hi)
        throw Error(ErrorCode::InvalidInterval,
                    "invalid endpoint pair [" + format_real(lo) + "," + format_real(hi) + "]");
}

Interval Interval::from_endpoints(double l, double r)
{
    if (!std::isfinite(l) || !std::isfinite(r))
        throw Error(ErrorCode::InvalidInterval, "interval endpoints must be finite");
    if (!(l < r))
        throw Error(ErrorCode::DegenerateInterval,
                    "degenerate interval [" + format_real(l) + "," + format_real(r) + "]");
    double half_width = 0.5 * r - 0.5 * l;
    if (half_width <= 0.0)
        throw Error(ErrorCode::DegenerateInterval, "interval width underflows");
    return Interval(0.5 * l + 0.5 * r, std::log(half_width));
}

Interval Interval::from_center_radius(double c, double w)
{
    if (!std::isfinite(c) || !std::isfinite(w))
        throw Error(ErrorCode::InvalidInterval, "center and radius must be finite");
    if (!(w > 0.0))
        throw Error(ErrorCode::DegenerateInterval, "radius must be positive");
    return Interval(c, std::log(w));
}

Interval Interval::from_coords(double center, double log_radius)
{
    if (!std::isfinite(center) || !std::isfinite(log_radius))
        throw Error(ErrorCode::InvalidInterval, "interval coordinates must be finite");
    return Interval(center, log_radius);
}

double Interval::radius() const
{
    double w = std::exp(log_radius_);
    require_finite(w, "radius");
    return w;
}

double Interval::lo() const { return endpoints().lo; }
double Interval::hi() const { return endpoints().hi; }

ExtendedInterval Interval::endpoints() const
{
    double w = radius();
    double l = center_ - w;
    double r = center_ + w;
    require_finite(l, "left endpoint");
    require_finite(r, "right endpoint");
    // A radius far below the center's ulp collapses on conversion; keep the
    // pair ordered even then.
    return {l, r};
}

std::string to_string(OrderRelation rel)
{
    switch (rel) {
    case OrderRelation::Equal: return "Equal";
    case OrderRelation::Less: return "Less";
    case OrderRelation::Greater: return "Greater";
    case OrderRelation::Incomparable: return "Incomparable";
    }
    return "Unknown";
}

Interval from_endpoints(double l, double r) { return Interval::from_endpoints(l, r); }

Interval from_real(double lambda)
{
    require_finite(lambda, "real operand");
    return Interval::from_coords(lambda, lambda);
}

Interval add(const Interval& a, const Interval& b)
{
    return checked(a.center() + b.center(), a.log_radius() + b.log_radius());
}

Interval neg(const Interval& a) noexcept
{
    return Interval::from_coords(-a.center(), -a.log_radius());
}

Interval sub(const Interval& a, const Interval& b)
{
    return checked(a.center() - b.center(), a.log_radius() - b.log_radius());
}

Interval scalar_mul(double k, const Interval& a)
{
    require_finite(k, "scalar");
    return checked(k * a.center(), k * a.log_radius());
}

Interval mul(const Interval& a, const Interval& b)
{
    return checked(a.center() * b.center(), a.log_radius() * b.log_radius());
}

Interval inv(const Interval& a)
{
    if (std::abs(a.center()) <= division_epsilon || std::abs(a.log_radius()) <= division_epsilon)
        throw Error(ErrorCode::NotInvertible,
                    "interval " + render_center_radius(a) + " has no reciprocal");
    return checked(1.0 / a.center(), 1.0 / a.log_radius());
}

Interval div(const Interval& a, const Interval& b)
{
    if (std::abs(b.center()) <= division_epsilon || std::abs(b.log_radius()) <= division_epsilon)
        throw Error(ErrorCode::DivisionUndefined,
                    "division by " + render_center_radius(b) + " is undefined");
    return checked(a.center() / b.center(), a.log_radius() / b.log_radius());
}

Interval pow_n(const Interval& a, unsigned n)
{
    if (n == 0)
        return Interval::one();
    double c = 1.0;
    double rho = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        c *= a.center();
        rho *= a.log_radius();
    }
    return checked(c, rho);
}

double phi(const Interval& a, const Interval& b)
{
    double dc = a.center() - b.center();
    double same = dc == 0.0 ? 1.0 : 0.0;
    return dc + same * (std::exp(a.log_radius() - b.log_radius()) - 1.0);
}

OrderRelation cmp_total(const Interval& a, const Interval& b)
{
    auto rel = compare_real(a.center(), b.center());
    if (rel != OrderRelation::Equal)
        return rel;
    return compare_real(a.log_radius(), b.log_radius());
}

OrderRelation cmp_subset(const Interval& a, const Interval& b)
{
    return cmp_subset(a.endpoints(), b.endpoints());
}

OrderRelation cmp_preceq(const Interval& a, const Interval& b)
{
    auto c = compare_real(a.center(), b.center());
    auto w = compare_real(a.log_radius(), b.log_radius());
    if (c == w)
        return c;
    if (c == OrderRelation::Equal)
        return w;
    if (w == OrderRelation::Equal)
        return c;
    return OrderRelation::Incomparable;
}

OrderRelation cmp_subset(const ExtendedInterval& a, const ExtendedInterval& b, double tol)
{
    bool same_lo = std::abs(a.lo - b.lo) <= tol;
    bool same_hi = std::abs(a.hi - b.hi) <= tol;
    if (same_lo && same_hi)
        return OrderRelation::Equal;
    bool a_in_b = a.lo >= b.lo - tol && a.hi <= b.hi + tol;
    bool b_in_a = b.lo >= a.lo - tol && b.hi <= a.hi + tol;
    if (a_in_b)
        return OrderRelation::Less;
    if (b_in_a)
        return OrderRelation::Greater;
    return OrderRelation::Incomparable;
}

ExtendedInterval moore_add(const ExtendedInterval& a, const ExtendedInterval& b)
{
    return checked_pair(a.lo + b.lo, a.hi + b.hi);
}

ExtendedInterval moore_sub(const ExtendedInterval& a, const ExtendedInterval& b)
{
    return checked_pair(a.lo - b.hi, a.hi - b.lo);
}

ExtendedInterval h_sub(const ExtendedInterval& a, const ExtendedInterval& b)
{
    if (a.hi - a.lo < b.hi - b.lo)
        throw Error(ErrorCode::HDiffNotExists,
                    "Hukuhara difference " + render_endpoints(a) + " - " + render_endpoints(b)
                        + " does not exist");
    double lo = a.lo - b.lo;
    double hi = a.hi - b.hi;
    // Equal widths can produce lo = hi + ulp; both are the same point.
    if (lo > hi)
        lo = hi = 0.5 * (lo + hi);
    return checked_pair(lo, hi);
}

ExtendedInterval gh_sub(const ExtendedInterval& a, const ExtendedInterval& b)
{
    double d1 = a.lo - b.lo;
    double d2 = a.hi - b.hi;
    return checked_pair(std::min(d1, d2), std::max(d1, d2));
}

ExtendedInterval moore_mul(const ExtendedInterval& a, const ExtendedInterval& b)
{
    std::array<double, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return checked_pair(*mn, *mx);
}

ExtendedInterval moore_div(const ExtendedInterval& a, const ExtendedInterval& b)
{
    if (b.lo <= 0.0 && 0.0 <= b.hi)
        throw Error(ErrorCode::MooreDivByZeroSpanning,
                    "divisor " + render_endpoints(b) + " contains zero");
    return moore_mul(a, ExtendedInterval(1.0 / b.hi, 1.0 / b.lo));
}

ExtendedInterval moore_scalar(double k, const ExtendedInterval& a)
{
    double x = k * a.lo;
    double y = k * a.hi;
    return checked_pair(std::min(x, y), std::max(x, y));
}

ExtendedInterval moore_neg(const ExtendedInterval& a) { return {-a.hi, -a.lo}; }

OrderRelation classify_vs_classical(ComparedOp op, const Interval& a, const Interval& b)
{
    ExtendedInterval fresh;
    ExtendedInterval old;
    switch (op) {
    case ComparedOp::Add:
        fresh = add(a, b).endpoints();
        old = moore_add(a, b);
        break;
    case ComparedOp::Sub:
        fresh = sub(a, b).endpoints();
        old = moore_sub(a, b);
        break;
    case ComparedOp::GhSub:
        fresh = sub(a, b).endpoints();
        old = gh_sub(a, b);
        break;
    }
    return cmp_subset(fresh, old, classify_tolerance);
}

OrderRelation classify_vs_classical(double k, const Interval& a)
{
    return cmp_subset(scalar_mul(k, a).endpoints(), moore_scalar(k, a), classify_tolerance);
}

OrderRelation predict_vs_classical(ComparedOp op, const Interval& a, const Interval& b)
{
    double aw = a.radius();
    double bw = b.radius();
    // Results are concentric, so comparing radii decides inclusion.
    switch (op) {
    case ComparedOp::Add:
        // 1/a_w + 1/b_w > 1  <=>  a_w b_w < a_w + b_w
        return compare_real(1.0, 1.0 / aw + 1.0 / bw);
    case ComparedOp::Sub:
        return compare_real(aw / bw, aw + bw);
    case ComparedOp::GhSub:
        return compare_real(aw / bw, std::abs(aw - bw));
    }
    return OrderRelation::Incomparable;
}

OrderRelation predict_vs_classical(double k, const Interval& a)
{
    double aw = a.radius();
    return compare_real(std::pow(aw, k), std::abs(k) * aw);
}

std::string format_real(double x)
{
    if (x == 0.0)
        x = 0.0; // drop the sign of -0
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

std::string format_real17(double x)
{
    if (x == 0.0)
        x = 0.0;
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string render_endpoints(const ExtendedInterval& a)
{
    return "[" + format_real(a.lo) + "," + format_real(a.hi) + "]";
}

std::string render_endpoints(const Interval& a) { return render_endpoints(a.endpoints()); }

std::string render_center_radius(const Interval& a)
{
    return "<" + format_real(a.center()) + ";" + format_real(std::exp(a.log_radius())) + ">";
}

} // namespace intervalkit
