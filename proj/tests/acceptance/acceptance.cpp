// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <intervalkit/calculus.hpp>
#include <intervalkit/cli.hpp>
#include <intervalkit/ide.hpp>
#include <intervalkit/metric.hpp>
#include <intervalkit/quadrature.hpp>

#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace intervalkit;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

const double ln2 = std::numbers::ln2;

class Report {
public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failures_++ < 3)
            detail_ += (detail_.empty() ? "" : "; ") + what;
    }
    void near(double got, double want, double tol, const std::string& what)
    {
        std::ostringstream os;
        os.precision(17);
        os << what << " got " << got << " want " << want;
        check(std::abs(got - want) <= tol, os.str());
    }
    void near(const ExtendedInterval& got, double lo, double hi, double tol, const std::string& what)
    {
        near(got.lo, lo, tol, what + " lo");
        near(got.hi, hi, tol, what + " hi");
    }
    void info(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }

    bool ok() const { return failures_ == 0; }
    std::string summary() const
    {
        if (!ok())
            return std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + detail_;
        return std::to_string(checks_) + " checks" + (info_.empty() ? "" : "; " + info_);
    }

private:
    int checks_ = 0;
    int failures_ = 0;
    std::string detail_;
    std::string info_;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

IdeProblem problem(const char* rhs, double t_end, double lo, double hi, double step = 1e-3)
{
    IdeProblem p;
    p.rhs = parse(rhs);
    p.t0 = 0;
    p.t_end = t_end;
    p.x0 = from_endpoints(lo, hi);
    p.step = step;
    return p;
}

using Closed = std::function<ExtendedInterval(double)>;

ExtendedInterval from_cw(double c, double w)
{
    return {c - w, c + w};
}

// Cardano forms of the two worked IDEs with forcing terms.
ExtendedInterval t_forcing(double t)
{
    double xi = 0.5 * std::cbrt(9 * t * t + std::sqrt(81 * std::pow(t, 4) + 64));
    double eta = 0.5 * std::cbrt(-6 * t * t * ln2 + 2 * std::sqrt(16 + 9 * std::pow(t, 4) * ln2 * ln2));
    return from_cw(xi - 1 / xi, std::exp(eta - 1 / eta));
}

ExtendedInterval sin_forcing(double t)
{
    double c = std::cos(t);
    double xi = 0.5 * std::cbrt(74 - 18 * c + 2 * std::sqrt(81 * c * c - 666 * c + 1385));
    double eta = 0.5 * std::cbrt(12 * (c - 1) * ln2 + 4 * std::sqrt(4 + 9 * (c - 1) * (c - 1) * ln2 * ln2));
    return from_cw(xi - 1 / xi, std::exp(eta - 1 / eta));
}

ExtendedInterval x_sin_t(double t)
{
    double E = std::exp(1 - std::cos(t));
    return from_cw(1.5 * E, std::pow(2.0, -E));
}

double deviation(const Trajectory& x, const Closed& f)
{
    double worst = 0;
    for (std::size_t i = 0; i < x.grid.size(); ++i) {
        auto got = x.values[i].endpoints();
        auto want = f(x.grid.t[i]);
        worst = std::max({worst, std::abs(got.lo - want.lo), std::abs(got.hi - want.hi)});
    }
    return worst;
}

double deviation(const EndpointTrajectory& x, const Closed& f)
{
    double worst = 0;
    for (std::size_t i = 0; i < x.grid.size(); ++i) {
        auto want = f(x.grid.t[i]);
        worst = std::max({worst, std::abs(x.values[i].lo - want.lo), std::abs(x.values[i].hi - want.hi)});
    }
    return worst;
}

// ---- criteria ------------------------------------------------------------------

void tables(Report& r)
{
    auto t0 = std::chrono::steady_clock::now();
    // Printed rows of the multiplication table, two decimals.
    const double mul[][6] = {{-10, 5, -10, 5, -51.71, 64.21},
                             {-2, -1, 1, 2, -3.87, -0.63},
                             {0, 1, 0, 1, -1.37, 1.87},
                             {0, 1, 0, 2, -0.5, 1.5},
                             {0, 1, 0, 4, 0.38, 1.62}};
    for (const auto& m : mul) {
        Interval p = from_endpoints(m[0], m[1]) * from_endpoints(m[2], m[3]);
        r.near(p.endpoints(), m[4], m[5], 0.01, "mul table");
        // Centres multiply, log-radii multiply.
        double c = (m[0] + m[1]) / 2 * (m[2] + m[3]) / 2;
        double w = std::exp(std::log((m[1] - m[0]) / 2) * std::log((m[3] - m[2]) / 2));
        r.near(p.endpoints(), c - w, c + w, 1e-9 * (1 + std::abs(c) + w), "mul formula");
    }
    const double div[][6] = {
        {-7, -5, -10, -2, 0, 2}, {2, 4, 1, 5, 0, 2}, {7, 9, -10, -6, -2, 0}, {-6, -4, -10, 0, 0, 2}, {-1, 1, -1, 2, -1, 1}};
    for (const auto& d : div)
        r.near((from_endpoints(d[0], d[1]) / from_endpoints(d[2], d[3])).endpoints(), d[4], d[5], 1e-12, "div table");
    for (auto [al, ar, bl, br] : {std::tuple{-10.0, 0.0, -6.0, -4.0}, std::tuple{-1.0, 2.0, -2.0, 2.0}}) {
        bool raised = false;
        try {
            (void)(from_endpoints(al, ar) / from_endpoints(bl, br));
        } catch (const Error& e) {
            raised = e.code() == ErrorCode::DivisionUndefined;
        }
        r.check(raised, "undefined division row did not raise DivisionUndefined");
    }
    double took = seconds_since(t0);
    r.check(took < 1e-3, "tables took " + sci(took) + " s");
    r.info(sci(took) + " s");
}

void worked(Report& r)
{
    const double tol = 1e-12;
    const double r2 = std::sqrt(2.0);
    Interval a = from_endpoints(-5, -1);
    r.near((a + from_endpoints(1, 3)).endpoints(), -3, 1, tol, "sum 1");
    r.near((a + from_endpoints(1, 5)).endpoints(), -4, 4, tol, "sum 2");
    r.near((a + from_endpoints(1, 7)).endpoints(), -5, 7, tol, "sum 3");

    // {a_l, a_r, k, lo, hi}
    const double scalars[][5] = {
        {-2, -1, -1, -0.5, 3.5},  {-2, -1, 0, -1, 1},     {-2, -1, 0.5, -0.75 - r2 / 2, -0.75 + r2 / 2},
        {-2, -1, 1, -2, -1},      {-2, -1, 2, -3.25, -2.75}, {1, 5, -1, -3.5, -2.5},
        {1, 5, 0, -1, 1},         {1, 5, 1, 1, 5},        {1, 5, 1.5, 4.5 - 2 * r2, 4.5 + 2 * r2},
        {1, 5, 2, 2, 10},         {1, 5, 3, 1, 17},       {1, 9, -0.5, -3, -2},
        {1, 9, 0, -1, 1},         {1, 9, 0.5, 0.5, 4.5},  {1, 9, 0.75, 3.75 - 2 * r2, 3.75 + 2 * r2},
        {1, 9, 1, 1, 9},          {1, 9, 2, -6, 26},
    };
    for (const auto& s : scalars)
        r.near((s[2] * from_endpoints(s[0], s[1])).endpoints(), s[3], s[4], tol, "scalar");

    // {a, b, new difference, Moore difference, gH difference}
    const double diffs[][10] = {
        {-3, -1, -4, 0, -0.5, 0.5, -3, 3, -1, 1},   {1, 9, -2, 2, 3, 7, -1, 11, 3, 7},
        {-4, 0, -3, -1, -2, 2, -3, 3, -1, 1},       {0.5, 5, 0, 1.5, -1, 5, -1, 5, 0.5, 3.5},
        {0.5, 3.5, 1.5, 2.5, -3, 3, -2, 2, -1, 1},
    };
    for (const auto& d : diffs) {
        Interval x = from_endpoints(d[0], d[1]), y = from_endpoints(d[2], d[3]);
        r.near((x - y).endpoints(), d[4], d[5], tol, "difference");
        r.near(moore_sub(x, y), d[6], d[7], tol, "Moore difference");
        r.near(gh_sub(x, y), d[8], d[9], tol, "gH difference");
    }

    Interval m = from_endpoints(-1, 3);
    Interval two = from_real(2);
    const double e2 = std::exp(2.0);
    r.near((m + two).endpoints(), 3 - 2 * e2, 3 + 2 * e2, tol, "a+2");
    r.near((two + m).endpoints(), 3 - 2 * e2, 3 + 2 * e2, tol, "2+a");
    r.near((m - two).endpoints(), -1 - 2 / e2, -1 + 2 / e2, tol, "a-2");
    r.near((two - m).endpoints(), 1 - e2 / 2, 1 + e2 / 2, tol, "2-a");
    r.near((m * two).endpoints(), -2, 6, tol, "a*2");
    r.near((m / two).endpoints(), 0.5 - r2, 0.5 + r2, tol, "a/2");
    double q = std::exp(2 / ln2);
    r.near((two / m).endpoints(), 2 - q, 2 + q, tol * q, "2/a");
}

void properties(Report& r)
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> c(-3, 3), lr(-1.2, 1.2), k(-2.5, 2.5);
    auto draw = [&] { return Interval::from_coords(c(rng), lr(rng)); };
    auto same = [](const Interval& x, const Interval& y) {
        return std::abs(x.center() - y.center()) < 1e-9 && std::abs(x.log_radius() - y.log_radius()) < 1e-9;
    };
    auto sq = [](double v) { return v * v; };
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        Interval a = draw(), b = draw(), d = draw();
        double s = k(rng), u = k(rng);
        bool ok = same(a + (b + d), (a + b) + d) && same(a + b, b + a) && same(a + Interval::zero(), a) &&
                  same(a - a, Interval::zero()) && same(s * (a + b), s * a + s * b) &&
                  same((s + u) * a, s * a + u * a) && same(s * (u * a), (s * u) * a) && same(1.0 * a, a);
        ok = ok && same((a + b) - b, a);
        if (std::abs(b.center()) > 1e-2 && std::abs(b.log_radius()) > 1e-2)
            ok = ok && same((a * b) / b, a);
        // Total order: trichotomy, translation invariance, transitivity.
        OrderRelation ab = cmp_total(a, b);
        ok = ok && ab != OrderRelation::Incomparable;
        if (ab == OrderRelation::Less) {
            ok = ok && cmp_total(b, a) == OrderRelation::Greater;
            ok = ok && cmp_total(a + d, b + d) == OrderRelation::Less;
            if (cmp_total(b, d) == OrderRelation::Less)
                ok = ok && cmp_total(a, d) == OrderRelation::Less;
        }
        ok = ok && std::abs(sq(norm(a + b)) + sq(norm(a - b)) - 2 * sq(norm(a)) - 2 * sq(norm(b))) < 1e-9;
        ok = ok && std::abs(inner(a, b) - (sq(norm(a + b)) - sq(norm(a - b))) / 4) < 1e-9;
        for (unsigned n = 0; n <= 5; ++n) {
            Interval sum = Interval::zero();
            double coef = 1;
            for (unsigned j = 0; j <= n; ++j) {
                sum = sum + coef * (pow_n(a, j) * pow_n(b, n - j));
                coef = coef * (n - j) / (j + 1);
            }
            Interval lhs = pow_n(a + b, n);
            double scale = 1 + std::abs(lhs.center()) + std::abs(lhs.log_radius());
            ok = ok && std::abs(lhs.center() - sum.center()) < 1e-9 * scale &&
                 std::abs(lhs.log_radius() - sum.log_radius()) < 1e-9 * scale;
        }
        bad += !ok;
    }
    r.check(bad == 0, std::to_string(bad) + " of 10000 triples failed");
    r.info("10000 triples");
}

void derivatives(Report& r)
{
    auto f = IvfHandle::parse("[t, t^2+1]", 0, 1);
    double worst = 0;
    for (int i = 0; i <= 100; ++i) {
        double t = 0.05 + 0.009 * i;
        Interval d = derive(f, t).value;
        worst = std::max({worst, std::abs(d.center() - (t + 0.5)),
                          std::abs(d.radius() - std::exp((2 * t - 1) / (t * t - t + 1)))});
    }
    r.check(worst <= 1e-6, "[t, t^2+1] derivative error " + sci(worst));

    // Center t^2/2 + 1/2 + sin^2 t, radius 1/2 + sin^2 t.
    auto g = IvfHandle::parse("[t^2/2, 1+t^2/2+2*sin(t)^2]", 0, 2 * pi);
    double worst_g = 0;
    for (int i = 0; i <= 200; ++i) {
        double t = 0.1 + (2 * pi - 0.2) * i / 200;
        double s = std::sin(t);
        double c = t + 2 * s * std::cos(t);
        double w = std::exp(2 * s * std::cos(t) / (0.5 + s * s));
        Interval d = derive(g, t).value;
        worst_g = std::max({worst_g, std::abs(d.center() - c), std::abs(d.radius() - w)});
    }
    r.check(worst_g <= 1e-6, "trigonometric derivative error " + sci(worst_g));

    auto sw = find_switching_points(g, 200);
    r.check(sw.size() == 3, std::to_string(sw.size()) + " switching points");
    for (std::size_t i = 0; i < sw.size() && i < 3; ++i)
        r.near(sw[i], (i + 1) * pi / 2, 1e-8, "switching point");
    r.info("errors " + sci(worst) + ", " + sci(worst_g));
}

void fundamental(Report& r)
{
    auto f = IvfHandle::parse("[t, t^2+1]", 0, 1);
    FtcReport ftc = verify_ftc(f, 0, 1, 1e-8);
    r.check(ftc.holds, "verify_ftc distance " + sci(ftc.distance));
    r.near(ftc.integral.center(), 1, 1e-8, "integral center");
    r.near(ftc.integral.radius(), 1, 1e-8, "integral radius");
    r.near(ftc.difference.endpoints(), 0, 2, 1e-12, "F(1) - F(0)");

    // gH: F'_gH = [1, 2t] below 1/2 and [2t, 1] above; its integral is [3/4, 5/4].
    auto ghd = gh_derivative_function(f);
    ExtendedInterval integral = endpoint_integral(ghd, 0, 1, 1e-10);
    r.near(integral, 0.75, 1.25, 1e-6, "integral of gH derivative");
    ExtendedInterval d = gh_sub(f.endpoints(1), f.endpoints(0));
    r.near(d, 1, 1, 1e-12, "gH difference");
    r.check(std::abs(integral.lo - d.lo) > 0.1, "gH sides agree");
}

void parts(Report& r)
{
    auto F = IvfHandle::parse("[t^2, 2*t+1]", 0, 1);
    auto G = IvfHandle::parse("[t, t^2+1]", 0, 1);
    ByPartsReport b = verify_by_parts(F, G, 0, 1, 1e-8);
    r.check(b.holds, "by parts distance " + sci(b.distance));
    const double w = std::exp(-ln2 * ln2);
    r.near(w, 0.618503, 1e-6, "printed radius");
    for (const Interval& side : {b.lhs, b.rhs}) {
        r.near(side.center(), 11.0 / 4, 1e-8, "by parts center");
        r.near(side.radius(), w, 1e-8, "by parts radius");
    }
    ByPartsReport m = verify_by_parts(F, std::function<double(double)>([](double t) { return 2 - t; }), 0, 1, 1e-8);
    r.check(m.holds, "real factor distance " + sci(m.distance));
    for (const Interval& side : {m.lhs, m.rhs}) {
        r.near(side.center(), 1, 1e-8, "real factor center");
        r.near(side.radius(), 4, 1e-8, "real factor radius");
    }
}

void forcing_examples(Report& r)
{
    for (auto [rhs, lo, hi, closed] : {std::tuple{"[1,2]*t/(1+x^2)", -1.0, 1.0, &t_forcing},
                                       std::tuple{"[1,2]*sin(t)/(1+x^2)", 1.0, 3.0, &sin_forcing}}) {
        auto t0 = std::chrono::steady_clock::now();
        Trajectory x = solve_new(problem(rhs, 4, lo, hi));
        double took = seconds_since(t0);
        double dev = deviation(x, closed);
        r.check(dev <= 1e-6, std::string(rhs) + " deviation " + sci(dev));
        r.check(took < 1, std::string(rhs) + " took " + sci(took) + " s");
        r.info(sci(dev) + " in " + sci(took) + " s");
    }
}

void product_example(Report& r)
{
    double dev = deviation(solve_new(problem("x*sin(t)", 6, 1, 2)), x_sin_t);
    r.check(dev <= 1e-6, "deviation " + sci(dev));
    r.info("deviation " + sci(dev));
}

void gh_branches(Report& r)
{
    auto x1 = [](double t) {
        return ExtendedInterval(2 * t - std::exp(t) + 2 * std::exp(-t) - 1, t + std::exp(t) + 2 * std::exp(-t) - 2);
    };
    auto x2 = [](double t) {
        if (t <= 1)
            return ExtendedInterval(2 * t + 2 * std::exp(-t) - 2, t + 2 * std::exp(-t) - 1);
        return ExtendedInterval(2 * t - std::exp(t - 1) + 2 * std::exp(-t) - 1, t + std::exp(t - 1) + 2 * std::exp(-t) - 2);
    };
    IdeProblem p = problem("smul(-1, x) + smul([1,2], t)", 3, 0, 1);
    p.gh.switch_points = {1.0};
    GhResult lin = solve_gh(p);
    auto dev_of = [&](const GhResult& res, const std::string& label, const Closed& f) {
        for (const auto& x : res.trajectories)
            if (x.label == label)
                return deviation(x, f);
        return std::numeric_limits<double>::infinity();
    };
    double d1 = dev_of(lin, "i>i", x1), d2 = dev_of(lin, "ii>i", x2);
    r.check(d1 <= 1e-6, "x1 deviation " + sci(d1));
    r.check(d2 <= 1e-6, "x2 deviation " + sci(d2));
    r.check(!lin.discarded.empty(), "no discarded branch reported");
    for (const auto& d : lin.discarded)
        r.check(d.t > 0 && d.t <= 3, "discarded branch " + d.label + " at t " + sci(d.t));

    auto E = [](double t) { return std::exp(1 - std::cos(t)); };
    auto mid = [&](double t, double w) { return from_cw(1.5 * E(t), w); };
    IdeProblem q = problem("smul(sin(t), x)", 6, 1, 2);
    q.gh.switch_points = {pi};
    GhResult prod = solve_gh(q);
    const std::pair<const char*, Closed> sols[] = {
        {"i>ii", [&](double t) { return ExtendedInterval(E(t), 2 * E(t)); }},
        {"ii>i", [&](double t) { return mid(t, 0.5 / E(t)); }},
        {"i>i", [&](double t) { return mid(t, t <= pi ? 0.5 * E(t) : 0.5 * std::exp(3 + std::cos(t))); }},
        {"ii>ii", [&](double t) { return mid(t, t <= pi ? 0.5 / E(t) : 0.5 * std::exp(-3 - std::cos(t))); }},
    };
    double worst = 0;
    for (const auto& [label, f] : sols) {
        double d = dev_of(prod, label, f);
        r.check(d <= 1e-6, std::string(label) + " deviation " + sci(d));
        worst = std::max(worst, d);
    }
    r.info(std::to_string(lin.discarded.size()) + " discarded, worst " + sci(std::max({d1, d2, worst})));
}

void order(Report& r)
{
    double a = deviation(solve_new(problem("[1,2]*t/(1+x^2)", 4, -1, 1, 0.1)), t_forcing);
    double b = deviation(solve_new(problem("[1,2]*t/(1+x^2)", 4, -1, 1, 0.05)), t_forcing);
    r.check(a / b >= 12 && a / b <= 20, "ratio " + std::to_string(a / b));
    r.info("ratio " + std::to_string(a / b));
}

void picard(Report& r)
{
    for (auto [rhs, t_end, lo, hi] : {std::tuple{"[1,2]*t/(1+x^2)", 4.0, -1.0, 1.0},
                                      std::tuple{"x*sin(t)", 6.0, 1.0, 2.0}}) {
        IdeProblem p = problem(rhs, t_end, lo, hi);
        p.picard_max_iter = 50;
        PicardResult res = solve_picard(p);
        double d = sup_distance(res.trajectory, solve_new(p));
        r.check(d <= 1e-4, std::string(rhs) + " sup distance " + sci(d));
        r.check(res.iterations <= 50, std::string(rhs) + " iterations " + std::to_string(res.iterations));
        r.info(std::string(rhs) + " " + std::to_string(res.iterations) + " iterations");
    }
}

int cli(const std::vector<std::string>& args, std::string* out = nullptr)
{
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    if (out)
        *out = o.str();
    return code;
}

void sweep_comparison(Report& r)
{
    test::TempDir dir;
    const std::string out = dir.path().string();
    for (auto [solution, sweep] : {std::pair{"t_forcing", "t_forcing_sweep"}, std::pair{"x_sin_t", "x_sin_t_sweep"}}) {
        std::string tag = std::string(solution) + " vs " + sweep;
        for (const char* name : {solution, sweep}) {
            int code = cli({"solve", test::config(std::string(name) + ".json").string(), "--out", out});
            r.check(code == exit_ok, std::string("solve ") + name + " exit " + std::to_string(code));
        }
        fs::path svg = dir / (std::string(solution) + ".svg");
        fs::path csv = dir / (std::string(solution) + "_deviation.csv");
        std::string text;
        int code = cli({"compare", (dir / (std::string(solution) + ".csv")).string(),
                        (dir / (std::string(sweep) + ".csv")).string(), "--svg", svg.string(), "--csv", csv.string()},
                       &text);
        r.check(code == exit_ok, tag + " compare exit " + std::to_string(code));
        r.check(fs::exists(svg) && fs::file_size(svg) > 0, tag + " SVG missing");
        r.check(fs::exists(csv) && fs::file_size(csv) > 0, tag + " CSV missing");
        // Second line: first,second,sup_deviation,t_at_sup
        std::istringstream lines(text);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        std::size_t a = row.find(','), b = row.find(',', a + 1), c = row.find(',', b + 1);
        double sup = NAN;
        if (c != std::string::npos)
            sup = std::stod(row.substr(b + 1, c - b - 1));
        r.check(std::isfinite(sup), tag + " no deviation reported");
        r.info(tag + " " + sci(sup));
    }
}

void selftest(Report& r)
{
    auto t0 = std::chrono::steady_clock::now();
    std::string text;
    int code = cli({"selftest"}, &text);
    double took = seconds_since(t0);
    r.check(code == exit_ok, "selftest exit " + std::to_string(code));
    r.check(took < 30, "selftest took " + sci(took) + " s");
    int rows = 0;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
        rows += line.find(" PASS ") != std::string::npos;
    r.check(rows == 11, std::to_string(rows) + " passing rows");
    r.info(std::to_string(rows) + " rows in " + sci(took) + " s");
}

struct Criterion {
    const char* name;
    void (*run)(Report&);
};

const Criterion criteria[] = {
    {"arithmetic tables", tables},
    {"worked arithmetic examples", worked},
    {"algebraic property suite", properties},
    {"derivative engine", derivatives},
    {"fundamental theorem", fundamental},
    {"integration by parts", parts},
    {"IDE with t and sin t forcing", forcing_examples},
    {"IDE x' = x sin t", product_example},
    {"gH branch solutions", gh_branches},
    {"RK4 convergence order", order},
    {"Picard vs RK4", picard},
    {"sweep vs new comparison", sweep_comparison},
    {"CLI selftest", selftest},
};

} // namespace

int main()
{
    int failed = 0;
    int id = 0;
    for (const auto& c : criteria) {
        ++id;
        Report r;
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.check(false, std::string("unexpected error: ") + e.what());
        }
        failed += !r.ok();
        std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << id << "  " << c.name << "  (" << r.summary() << ")\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
