#include <intervalkit/ivf.hpp>

#include <algorithm>
#include <cmath>

namespace intervalkit {

IvfHandle::IvfHandle(Expr expr, double t_lo, double t_hi, Semantics semantics)
    : expr_(std::move(expr)), t_lo_(t_lo), t_hi_(t_hi), semantics_(semantics)
{
    if (!expr_)
        throw Error(ErrorCode::InvalidConfig, "empty expression");
    if (mentions_var(expr_, 'x'))
        throw Error(ErrorCode::TypeError, "an interval-valued function may depend on t only");
    validate();
}

IvfHandle IvfHandle::parse(std::string_view text, double t_lo, double t_hi, Semantics semantics)
{
    return IvfHandle(intervalkit::parse(text), t_lo, t_hi, semantics);
}

IvfHandle IvfHandle::from_function(std::function<Interval(double)> f, double t_lo, double t_hi)
{
    IvfHandle h;
    h.value_fn_ = std::move(f);
    h.t_lo_ = t_lo;
    h.t_hi_ = t_hi;
    h.semantics_ = Semantics::NewArithmetic;
    h.validate();
    return h;
}

IvfHandle IvfHandle::from_endpoint_function(std::function<ExtendedInterval(double)> f, double t_lo,
                                            double t_hi)
{
    IvfHandle h;
    h.endpoint_fn_ = std::move(f);
    h.t_lo_ = t_lo;
    h.t_hi_ = t_hi;
    h.semantics_ = Semantics::Classical;
    h.validate();
    return h;
}

void IvfHandle::validate() const
{
    if (!std::isfinite(t_lo_) || !std::isfinite(t_hi_) || !(t_lo_ < t_hi_))
        throw Error(ErrorCode::InvalidConfig, "domain needs finite t_lo < t_hi");
    if (semantics_ == Semantics::NewArithmetic) {
        (void)value(t_lo_);
        (void)value(t_hi_);
    } else {
        (void)endpoints(t_lo_);
        (void)endpoints(t_hi_);
    }
}

void IvfHandle::check_in_domain(double t) const
{
    if (!bounded_)
        return;
    const double slack = 1e-12 * (1.0 + std::max(std::abs(t_lo_), std::abs(t_hi_)));
    if (!(t >= t_lo_ - slack && t <= t_hi_ + slack))
        throw Error(ErrorCode::DomainBoundary, "t = " + format_real(t) + " lies outside the domain");
}

Interval IvfHandle::value(double t) const
{
    check_in_domain(t);
    if (value_fn_)
        return value_fn_(t);
    if (semantics_ == Semantics::Classical) {
        ExtendedInterval e = endpoints(t);
        return Interval::from_endpoints(e.lo, e.hi);
    }
    Env env;
    env.t = t;
    return eval_interval(expr_, env);
}

ExtendedInterval IvfHandle::endpoints(double t) const
{
    check_in_domain(t);
    if (endpoint_fn_)
        return endpoint_fn_(t);
    if (semantics_ == Semantics::NewArithmetic)
        return value(t).endpoints();
    return eval_endpoint_pair(expr_, t);
}

IvfHandle IvfHandle::extended() const
{
    IvfHandle h = *this;
    h.bounded_ = false;
    return h;
}

IvfHandle IvfHandle::restricted(double t_lo, double t_hi) const
{
    IvfHandle h = *this;
    h.t_lo_ = t_lo;
    h.t_hi_ = t_hi;
    h.validate();
    return h;
}

} // namespace intervalkit
