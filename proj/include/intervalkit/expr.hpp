#pragma once

#include <intervalkit/interval.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace intervalkit {

enum class NodeKind {
    RealLit,
    IntervalLit,
    /// `[expr, expr]` or `<expr; expr>` whose parts are not plain numbers.
    EndpointPair,
    Var,
    Neg,
    Binary,
    Power,
    Call,
};

enum class BinaryOp { Add, Sub, Mul, Div };

enum class Func { Sin, Cos, Exp, Ln, Abs, Madd, Msub, Hsub, Ghsub, Mmul, Mdiv, Smul };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    NodeKind kind = NodeKind::RealLit;
    std::size_t offset = 0; ///< byte offset in the source, for messages

    double value = 0.0; ///< RealLit

    // IntervalLit: the two numbers as written, and whether they were `<c;w>`.
    double first = 0.0;
    double second = 0.0;
    bool center_radius = false; ///< also used by EndpointPair
    Interval interval;
    std::size_t param_id = 0;

    char var = 't'; ///< 't' or 'x'
    BinaryOp op = BinaryOp::Add;
    unsigned exponent = 0;
    Func fn = Func::Sin;
    std::vector<Expr> children;
};

/// Parses the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' uint)?
///   unary  := '-'? atom
///   atom   := number | '[' num ',' num ']' | '<' num ';' num '>' | 't' | 'x'
///           | fn '(' expr (',' expr)* ')' | '(' expr ')'
///
/// plus the constants `pi` and `e`, and bracket pairs of general expressions.
Expr parse(std::string_view src);

/// Canonical, fully parenthesised text. parse(render(e)) has the same tree.
std::string render(const Expr& e);

bool same_tree(const Expr& a, const Expr& b);

std::size_t count_interval_literals(const Expr& e);
bool mentions_var(const Expr& e, char var);
/// The i-th interval literal in parse order.
ExtendedInterval literal_range(const Expr& e, std::size_t param_id);

using EvalValue = std::variant<double, Interval>;

/// Variable bindings. An unset variable raises UnboundVariable when used.
struct Env {
    std::optional<double> t;
    std::optional<Interval> x;
};

/// New-arithmetic evaluation. Reals stay real until combined with an interval,
/// where they are embedded as from_real. Transcendental functions accept real
/// arguments only.
EvalValue evaluate(const Expr& e, const Env& env);

/// evaluate() forced to an interval (a real result is embedded).
Interval eval_interval(const Expr& e, double t, const Interval& x);
Interval eval_interval(const Expr& e, const Env& env);

/// Real evaluation with params[i] substituted for the i-th interval literal.
double eval_param(const Expr& e, double t, double x, const std::vector<double>& params);

/// Classical endpoint (Moore) evaluation with x = [x_lo, x_hi].
ExtendedInterval eval_endpoint_pair(const Expr& e, double t, double x_lo, double x_hi);
/// Same without binding x.
ExtendedInterval eval_endpoint_pair(const Expr& e, double t);

Interval to_interval(const EvalValue& v);
std::string render_value(const EvalValue& v);

} // namespace intervalkit
