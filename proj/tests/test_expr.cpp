#include <doctest.h>

#include "support.hpp"

#include <intervalkit/expr.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace intervalkit;
using test::near_interval;

namespace {

double real_of(const EvalValue& v)
{
    REQUIRE(std::holds_alternative<double>(v));
    return std::get<double>(v);
}

Interval interval_of(const EvalValue& v)
{
    REQUIRE(std::holds_alternative<Interval>(v));
    return std::get<Interval>(v);
}

} // namespace

TEST_CASE("parse structure")
{
    Expr e = parse("[1,2]*t/(1+x^2)");
    REQUIRE(e->kind == NodeKind::Binary);
    CHECK(e->op == BinaryOp::Div);
    const Expr& num = e->children[0];
    REQUIRE(num->kind == NodeKind::Binary);
    CHECK(num->op == BinaryOp::Mul);
    CHECK(num->children[0]->kind == NodeKind::IntervalLit);
    CHECK(num->children[1]->kind == NodeKind::Var);
    CHECK(num->children[1]->var == 't');
    const Expr& den = e->children[1];
    REQUIRE(den->kind == NodeKind::Binary);
    CHECK(den->op == BinaryOp::Add);
    CHECK(den->children[0]->kind == NodeKind::RealLit);
    REQUIRE(den->children[1]->kind == NodeKind::Power);
    CHECK(den->children[1]->exponent == 2);
    CHECK(den->children[1]->children[0]->var == 'x');
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS_CODE(parse("[2,1]"), ErrorCode::DegenerateInterval);
    try {
        parse("x -");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS_CODE(parse("t^-1"), ErrorCode::SyntaxError);
    CHECK_THROWS_AS_CODE(parse("t^1.5"), ErrorCode::SyntaxError);
    CHECK_THROWS_AS_CODE(parse("sin(t, t)"), ErrorCode::SyntaxError);
    CHECK_THROWS_AS_CODE(parse("foo(t)"), ErrorCode::SyntaxError);
    CHECK_THROWS_AS_CODE(parse("(t"), ErrorCode::SyntaxError);
    CHECK_THROWS_AS_CODE(parse(""), ErrorCode::SyntaxError);
    CHECK_THROWS_AS_CODE(parse("y"), ErrorCode::SyntaxError);
    CHECK_THROWS_AS_CODE(parse("t $"), ErrorCode::SyntaxError);
}

TEST_CASE("literals and constants")
{
    Expr e = parse("<1;2> + [-3,-1]");
    CHECK(count_interval_literals(e) == 2);
    CHECK(literal_range(e, 0) == ExtendedInterval(-1, 3));
    CHECK(literal_range(e, 1) == ExtendedInterval(-3, -1));
    CHECK(real_of(evaluate(parse("pi"), Env{})) == std::numbers::pi);
    CHECK(real_of(evaluate(parse("e"), Env{})) == std::numbers::e);
    CHECK(real_of(evaluate(parse("2^10"), Env{})) == 1024);
    // Unary minus binds tighter than ^, as in the grammar.
    CHECK(real_of(evaluate(parse("-t^2"), Env{3.0, {}})) == 9);
    CHECK(mentions_var(parse("sin(t)*x"), 'x'));
    CHECK_FALSE(mentions_var(parse("sin(t)"), 'x'));
}

TEST_CASE("new-arithmetic evaluation")
{
    Expr e = parse("[1,2]*t/(1+x^2)");
    near_interval(eval_interval(e, 0.0, from_endpoints(-1, 1)), -1, 1);
    Interval x = from_endpoints(4, 9);
    near_interval(eval_interval(parse("x - x"), 1.7, x), -1, 1);
    near_interval(eval_interval(parse("x*sin(t)"), std::numbers::pi / 2, from_endpoints(1, 2)), 1, 2);
    // A bracket pair of expressions builds an interval from its endpoints.
    near_interval(eval_interval(parse("[t, t^2+1]"), 2.0, Interval::zero()), 2, 5);
    near_interval(eval_interval(parse("<t; 2>"), 2.0, Interval::zero()), 0, 4);

    CHECK_THROWS_AS_CODE(evaluate(parse("sin([1,2])"), Env{}), ErrorCode::TypeError);
    CHECK_THROWS_AS_CODE(evaluate(parse("1/[-1,1]"), Env{}), ErrorCode::DivisionUndefined);
    CHECK_THROWS_AS_CODE(evaluate(parse("1/(t-t)"), Env{1.0, {}}), ErrorCode::DivisionUndefined);
    CHECK_THROWS_AS_CODE(evaluate(parse("ln(t)"), Env{-1.0, {}}), ErrorCode::MathDomain);
    CHECK_THROWS_AS_CODE(evaluate(parse("x + 1"), Env{}), ErrorCode::UnboundVariable);
    CHECK_THROWS_AS_CODE(evaluate(parse("[t, 1]"), Env{1.0, {}}), ErrorCode::DegenerateInterval);
}

TEST_CASE("embedding is a homomorphism on reals")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 2000; ++i) {
        double p = u(rng), q = u(rng);
        auto same = [](const Interval& a, const Interval& b) {
            return std::abs(a.center() - b.center()) <= 1e-12 * (1 + std::abs(a.center())) &&
                   std::abs(a.log_radius() - b.log_radius()) <= 1e-12 * (1 + std::abs(a.log_radius()));
        };
        REQUIRE(same(from_real(p) + from_real(q), from_real(p + q)));
        REQUIRE(same(from_real(p) - from_real(q), from_real(p - q)));
        REQUIRE(same(from_real(p) * from_real(q), from_real(p * q)));
        if (std::abs(q) > 1e-3)
            REQUIRE(same(from_real(p) / from_real(q), from_real(p / q)));
    }
    // The same through the evaluator, with an interval term forcing embedding.
    Env env{0.7, {}};
    Interval via_expr = interval_of(evaluate(parse("(t*3 - 2/t) + 0*[1,2]"), env));
    double real = 0.7 * 3 - 2 / 0.7;
    CHECK(via_expr.center() == doctest::Approx(real));
}

TEST_CASE("real times interval is scalar multiplication")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-4, 4);
    for (int i = 0; i < 500; ++i) {
        double k = u(rng);
        Interval a = Interval::from_coords(u(rng), u(rng) / 4);
        Env env{k, a};
        Interval got = interval_of(evaluate(parse("t*x"), env));
        Interval want = scalar_mul(k, a);
        REQUIRE(got.center() == want.center());
        REQUIRE(got.log_radius() == want.log_radius());
        REQUIRE(interval_of(evaluate(parse("x*t"), env)) == want);
    }
}

TEST_CASE("parametric evaluation")
{
    Expr e = parse("[1,2]*t/(1+x^2)");
    CHECK(eval_param(e, 2.0, 3.0, {1.5}) == doctest::Approx(1.5 * 2.0 / 10.0));
    CHECK(eval_param(parse("x*sin(t)"), 1.0, 2.0, {}) == doctest::Approx(2 * std::sin(1.0)));
    CHECK_THROWS_AS_CODE(eval_param(e, 0, 0, {3.0}), ErrorCode::ParamOutOfRange);
    CHECK_THROWS_AS_CODE(eval_param(e, 0, 0, {}), ErrorCode::ParamArityMismatch);
    CHECK_THROWS_AS_CODE(eval_param(e, 0, 0, {1.0, 1.0}), ErrorCode::ParamArityMismatch);
    // Classical calls collapse to real arithmetic.
    CHECK(eval_param(parse("smul(-1, x) + smul([1,2], t)"), 2.0, 5.0, {1.25}) == doctest::Approx(-5 + 2.5));
}

TEST_CASE("classical endpoint evaluation")
{
    Expr e = parse("smul(-1, x) + smul([1,2], t)");
    CHECK(eval_endpoint_pair(e, 1.0, 0.0, 1.0) == ExtendedInterval(0, 2));
    CHECK(eval_endpoint_pair(parse("x"), 0.0, -2.0, 5.0) == ExtendedInterval(-2, 5));
    CHECK_THROWS_AS_CODE(eval_endpoint_pair(parse("mdiv(x, x)"), 0.0, -1.0, 1.0), ErrorCode::MooreDivByZeroSpanning);
    CHECK(eval_endpoint_pair(parse("ghsub(x, x)"), 0.0, 1.0, 3.0) == ExtendedInterval(0, 0));
    CHECK(eval_endpoint_pair(parse("mmul([-2,-1], [1,2])"), 0.0) == ExtendedInterval(-4, -1));
    CHECK(eval_endpoint_pair(parse("smul(sin(t), x)"), std::numbers::pi / 2, 1, 2) == ExtendedInterval(1, 2));
}

TEST_CASE("render round trip on a corpus")
{
    const char* corpus[] = {
        "1",
        "t",
        "x",
        "-x",
        "-t^2",
        "[1,2]",
        "<1;2>",
        "[-2,-1]",
        "<-3;0.25>",
        "1+2",
        "1-2-3",
        "2*3/4",
        "t*x",
        "x/t",
        "(1+t)*(2-x)",
        "[1,2]*t/(1+x^2)",
        "[1,2]*sin(t)/(1+x^2)",
        "x*sin(t)",
        "x*cos(t)+[0,1]",
        "exp(t)*x",
        "ln(1+t^2)",
        "abs(t-2)",
        "smul(-1, x) + smul([1,2], t)",
        "smul(sin(t), x)",
        "madd(x, [1,2])",
        "msub(x, [1,2])",
        "hsub([0,4], x)",
        "ghsub([0,2], smul(abs(t-2), [-1,1]))",
        "mmul(x, x)",
        "mdiv([1,2], [3,4])",
        "x^0",
        "x^5",
        "(x+[1,3])^2",
        "[t, t^2+1]",
        "<t+1/2; exp((2*t-1)/(t^2-t+1))>",
        "[t^2/2, 1+t^2/2+2*sin(t)^2]",
        "[-abs(t), abs(t)+1]",
        "[t^2, 2*t+1]*(-1)",
        "pi",
        "e",
        "2*pi*t",
        "e^3*t",
        "1e-3*x",
        "2.5E+2",
        "sin(cos(exp(t)))",
        "((((t))))",
        "-(-x)",
        "x-x",
        "[0.5,3.5]-[1.5,2.5]",
        "1/(1+exp(-t))*x",
    };
    static_assert(std::size(corpus) == 50);
    for (const char* src : corpus) {
        std::string text = src;
        CAPTURE(text);
        Expr e = parse(src);
        std::string once = render(e);
        Expr again = parse(once);
        CHECK(same_tree(e, again));
        CHECK(render(again) == once);
    }
}
