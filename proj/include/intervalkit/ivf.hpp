#pragma once

#include <intervalkit/expr.hpp>
#include <intervalkit/interval.hpp>

#include <functional>
#include <string_view>

namespace intervalkit {

/// How an expression is read as an interval-valued function of t.
enum class Semantics {
    NewArithmetic, ///< evaluate(); values must be non-degenerate
    Classical,     ///< eval_endpoint_pair(); degenerate values allowed
};

/// An interval-valued function t -> [f_l(t), f_r(t)] on [t_lo, t_hi].
///
/// Backed either by an expression in t (x is rejected) or by a callable. The
/// constructor probes both domain ends so a handle is always evaluable there.
class IvfHandle {
public:
    IvfHandle(Expr expr, double t_lo, double t_hi, Semantics semantics = Semantics::NewArithmetic);

    static IvfHandle parse(std::string_view text, double t_lo, double t_hi,
                           Semantics semantics = Semantics::NewArithmetic);
    static IvfHandle from_function(std::function<Interval(double)> f, double t_lo, double t_hi);
    static IvfHandle from_endpoint_function(std::function<ExtendedInterval(double)> f, double t_lo,
                                            double t_hi);

    /// Throws DegenerateInterval where the function has zero width.
    [[nodiscard]] Interval value(double t) const;
    [[nodiscard]] ExtendedInterval endpoints(double t) const;

    [[nodiscard]] double t_lo() const noexcept { return t_lo_; }
    [[nodiscard]] double t_hi() const noexcept { return t_hi_; }
    [[nodiscard]] Semantics semantics() const noexcept { return semantics_; }
    [[nodiscard]] const Expr& expr() const noexcept { return expr_; }

    /// Same function on another domain (validated again).
    [[nodiscard]] IvfHandle restricted(double t_lo, double t_hi) const;

    /// A copy that evaluates outside [t_lo, t_hi] instead of throwing DomainBoundary.
    [[nodiscard]] IvfHandle extended() const;

private:
    void check_in_domain(double t) const;
    IvfHandle() = default;
    void validate() const;

    Expr expr_;
    std::function<Interval(double)> value_fn_;
    std::function<ExtendedInterval(double)> endpoint_fn_;
    double t_lo_ = 0.0;
    double t_hi_ = 1.0;
    Semantics semantics_ = Semantics::NewArithmetic;
    bool bounded_ = true;
};

} // namespace intervalkit
