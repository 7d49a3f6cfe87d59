#include <intervalkit/selftest.hpp>

#include <intervalkit/calculus.hpp>
#include <intervalkit/ide.hpp>
#include <intervalkit/metric.hpp>
#include <intervalkit/quadrature.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace intervalkit {

namespace {

using std::numbers::pi;
const double ln2 = std::numbers::ln2;

// Collects failures; the first few are kept for the detail column.
class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (failures_ <= 3)
                detail_ += (detail_.empty() ? "" : "; ") + what;
        }
    }

    void near(double got, double want, double tol, const std::string& what)
    {
        std::ostringstream os;
        os << what << ": got " << format_real(got) << " want " << format_real(want);
        expect(std::abs(got - want) <= tol, os.str());
    }

    void near(const ExtendedInterval& got, double lo, double hi, double tol, const std::string& what)
    {
        std::ostringstream os;
        os << what << ": got " << render_endpoints(got) << " want [" << format_real(lo) << ',' << format_real(hi)
           << ']';
        expect(std::abs(got.lo - lo) <= tol && std::abs(got.hi - hi) <= tol, os.str());
    }

    template <class F>
    void throws(ErrorCode code, F&& f, const std::string& what)
    {
        try {
            f();
            expect(false, what + ": no error");
        } catch (const Error& e) {
            expect(e.code() == code, what + ": wrong error " + std::string(to_string(e.code())));
        }
    }

    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }

    [[nodiscard]] bool ok() const { return failures_ == 0; }
    [[nodiscard]] std::string detail() const
    {
        if (!ok())
            return std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: " + detail_;
        return std::to_string(checks_) + " checks" + (notes_.empty() ? "" : ", " + notes_);
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string detail_;
    std::string notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(2);
    os << std::scientific << v;
    return os.str();
}

// ---- closed forms of the worked IDEs ---------------------------------------

struct Closed {
    double c;
    double w;
};

Closed ex64(double t)
{
    double xi = 0.5 * std::cbrt(9 * t * t + std::sqrt(81 * std::pow(t, 4) + 64));
    double eta = 0.5 * std::cbrt(-6 * t * t * ln2 + 2 * std::sqrt(16 + 9 * std::pow(t, 4) * ln2 * ln2));
    return {xi - 1 / xi, std::exp(eta - 1 / eta)};
}

Closed ex66(double t)
{
    double c = std::cos(t);
    double xi = 0.5 * std::cbrt(-18 * c + 74 + 2 * std::sqrt(81 * c * c - 666 * c + 1385));
    double eta = 0.5 * std::cbrt(4 * std::sqrt(4 + 9 * (c - 1) * (c - 1) * ln2 * ln2) + 12 * (c - 1) * ln2);
    return {xi - 1 / xi, std::exp(eta - 1 / eta)};
}

Closed ex68(double t)
{
    double e = std::exp(1 - std::cos(t));
    return {1.5 * e, std::pow(2.0, -e)};
}

template <class F>
double sup_deviation(const Trajectory& x, F closed)
{
    double m = 0.0;
    for (std::size_t i = 0; i < x.grid.size(); ++i) {
        Closed c = closed(x.grid.t[i]);
        auto e = x.values[i].endpoints();
        m = std::max({m, std::abs(e.lo - (c.c - c.w)), std::abs(e.hi - (c.c + c.w))});
    }
    return m;
}

double sup_deviation(const EndpointTrajectory& x, const std::function<ExtendedInterval(double)>& closed)
{
    double m = 0.0;
    for (std::size_t i = 0; i < x.grid.size(); ++i) {
        ExtendedInterval c = closed(x.grid.t[i]);
        m = std::max({m, std::abs(x.values[i].lo - c.lo), std::abs(x.values[i].hi - c.hi)});
    }
    return m;
}

IdeProblem problem(const char* rhs, double t_end, double x_lo, double x_hi, double step = 1e-3)
{
    IdeProblem p;
    p.rhs = parse(rhs);
    p.t0 = 0.0;
    p.t_end = t_end;
    p.x0 = from_endpoints(x_lo, x_hi);
    p.step = step;
    return p;
}

const EndpointTrajectory* find_label(const GhResult& r, const std::string& label)
{
    for (const auto& x : r.trajectories)
        if (x.label == label)
            return &x;
    return nullptr;
}

// ---- criteria ----------------------------------------------------------------

void arithmetic_tables(Checker& ck)
{
    auto start = std::chrono::steady_clock::now();
    struct Row {
        double al, ar, bl, br, lo, hi;
    };
    for (const Row& r : {Row{-10, 5, -10, 5, -51.71, 64.21}, Row{-2, -1, 1, 2, -3.87, -0.63},
                         Row{0, 1, 0, 1, -1.37, 1.87}, Row{0, 1, 0, 2, -0.5, 1.5}, Row{0, 1, 0, 4, 0.38, 1.62}}) {
        Interval c = from_endpoints(r.al, r.ar) * from_endpoints(r.bl, r.br);
        ck.near(c.endpoints(), r.lo, r.hi, 0.01 + 1e-12, "mul row [" + format_real(r.al) + "," + format_real(r.ar) + "]");
    }
    for (const Row& r : {Row{-7, -5, -10, -2, 0, 2}, Row{2, 4, 1, 5, 0, 2}, Row{7, 9, -10, -6, -2, 0},
                         Row{-6, -4, -10, 0, 0, 2}, Row{-1, 1, -1, 2, -1, 1}}) {
        Interval c = from_endpoints(r.al, r.ar) / from_endpoints(r.bl, r.br);
        ck.near(c.endpoints(), r.lo, r.hi, 1e-12, "div row [" + format_real(r.al) + "," + format_real(r.ar) + "]");
    }
    ck.throws(ErrorCode::DivisionUndefined, [] { (void)(from_endpoints(-10, 0) / from_endpoints(-6, -4)); },
              "div [-10,0]/[-6,-4]");
    ck.throws(ErrorCode::DivisionUndefined, [] { (void)(from_endpoints(-1, 2) / from_endpoints(-2, 2)); },
              "div [-1,2]/[-2,2]");
    double elapsed = seconds_since(start);
    ck.expect(elapsed < 1e-3, "tables took " + sci(elapsed) + " s");
}

void worked_examples(Checker& ck)
{
    const double tol = 1e-12;
    Interval a = from_endpoints(-5, -1);
    const double sums[][2] = {{-3, 1}, {-4, 4}, {-5, 7}};
    const double moore_sums[][2] = {{-4, 2}, {-4, 4}, {-4, 6}};
    for (int i = 0; i < 3; ++i) {
        Interval b = from_endpoints(1, 3 + 2 * i);
        ck.near((a + b).endpoints(), sums[i][0], sums[i][1], tol, "sum " + std::to_string(i + 1));
        ck.near(moore_add(a, b), moore_sums[i][0], moore_sums[i][1], tol, "moore sum " + std::to_string(i + 1));
    }

    const double r2 = std::sqrt(2.0);
    struct Scalar {
        double al, ar, k, lo, hi, mlo, mhi;
    };
    const Scalar scalars[] = {
        {-2, -1, -1, -0.5, 3.5, 1, 2},
        {-2, -1, 0, -1, 1, 0, 0},
        {-2, -1, 0.5, -0.75 - r2 / 2, -0.75 + r2 / 2, -1, -0.5},
        {-2, -1, 1, -2, -1, -2, -1},
        {-2, -1, 2, -3.25, -2.75, -4, -2},
        {1, 5, -1, -3.5, -2.5, -5, -1},
        {1, 5, 0, -1, 1, 0, 0},
        {1, 5, 1, 1, 5, 1, 5},
        {1, 5, 1.5, 4.5 - 2 * r2, 4.5 + 2 * r2, 1.5, 7.5},
        {1, 5, 2, 2, 10, 2, 10},
        {1, 5, 3, 1, 17, 3, 15},
        {1, 9, -0.5, -3, -2, -4.5, -0.5},
        {1, 9, 0, -1, 1, 0, 0},
        {1, 9, 0.5, 0.5, 4.5, 0.5, 4.5},
        {1, 9, 0.75, 3.75 - 2 * r2, 3.75 + 2 * r2, 0.75, 6.75},
        {1, 9, 1, 1, 9, 1, 9},
        {1, 9, 2, -6, 26, 2, 18},
    };
    for (const auto& s : scalars) {
        Interval x = from_endpoints(s.al, s.ar);
        std::string tag = format_real(s.k) + "*[" + format_real(s.al) + "," + format_real(s.ar) + "]";
        ck.near((s.k * x).endpoints(), s.lo, s.hi, tol, "scalar " + tag);
        ck.near(moore_scalar(s.k, x), s.mlo, s.mhi, tol, "moore scalar " + tag);
    }

    struct Diff {
        double al, ar, bl, br;
        double c[2], d[2], e[2];
    };
    const Diff diffs[] = {
        {-3, -1, -4, 0, {-0.5, 0.5}, {-3, 3}, {-1, 1}},
        {1, 9, -2, 2, {3, 7}, {-1, 11}, {3, 7}},
        {-4, 0, -3, -1, {-2, 2}, {-3, 3}, {-1, 1}},
        {0.5, 5, 0, 1.5, {-1, 5}, {-1, 5}, {0.5, 3.5}},
        {0.5, 3.5, 1.5, 2.5, {-3, 3}, {-2, 2}, {-1, 1}},
    };
    int n = 0;
    for (const auto& d : diffs) {
        ++n;
        Interval x = from_endpoints(d.al, d.ar);
        Interval y = from_endpoints(d.bl, d.br);
        std::string tag = " case " + std::to_string(n);
        ck.near((x - y).endpoints(), d.c[0], d.c[1], tol, "difference" + tag);
        ck.near(moore_sub(x, y), d.d[0], d.d[1], tol, "moore difference" + tag);
        ck.near(gh_sub(x, y), d.e[0], d.e[1], tol, "gH difference" + tag);
    }

    Interval m = from_endpoints(-1, 3);
    const double lam = 2;
    const double e2 = std::exp(2.0);
    ck.near((m + from_real(lam)).endpoints(), 3 - 2 * e2, 3 + 2 * e2, tol, "a+2");
    ck.near((from_real(lam) + m).endpoints(), 3 - 2 * e2, 3 + 2 * e2, tol, "2+a");
    ck.near((m - from_real(lam)).endpoints(), -1 - 2 / e2, -1 + 2 / e2, tol, "a-2");
    ck.near((from_real(lam) - m).endpoints(), 1 - e2 / 2, 1 + e2 / 2, tol, "2-a");
    ck.near((m * from_real(lam)).endpoints(), -2, 6, tol, "a*2");
    ck.near((lam * m).endpoints(), -2, 6, tol, "2a");
    ck.near((m / from_real(lam)).endpoints(), 0.5 - r2, 0.5 + r2, tol, "a/2");
    const double q = std::exp(2 / ln2);
    ck.near((from_real(lam) / m).endpoints(), 2 - q, 2 + q, 1e-12 * q, "2/a");
    auto pt = ExtendedInterval::point(lam);
    ck.near(moore_add(m, pt), 1, 5, tol, "a (+) 2");
    ck.near(moore_sub(m, pt), -3, 1, tol, "a (-) 2");
    ck.near(gh_sub(m, pt), -3, 1, tol, "a (-)gH 2");
    ck.near(h_sub(m, pt), -3, 1, tol, "a (-)H 2");
    ck.near(moore_sub(pt, m), -1, 3, tol, "2 (-) a");
    ck.near(gh_sub(pt, m), -1, 3, tol, "2 (-)gH a");
    ck.near(moore_mul(m, pt), -2, 6, tol, "a (x) 2");
    ck.near(moore_div(m, pt), -0.5, 1.5, tol, "a (/) 2");
    ck.throws(ErrorCode::MooreDivByZeroSpanning, [&] { (void)moore_div(pt, m); }, "2 (/) a");
}

void property_suite(Checker& ck)
{
    std::mt19937_64 rng(20240531);
    std::uniform_real_distribution<double> centre(-2.0, 2.0);
    std::uniform_real_distribution<double> logr(-1.0, 1.0);
    std::uniform_real_distribution<double> scal(-3.0, 3.0);
    auto draw = [&] { return Interval::from_coords(centre(rng), logr(rng)); };
    const double tol = 1e-9;
    auto same = [&](const Interval& x, const Interval& y) {
        return std::abs(x.center() - y.center()) < tol && std::abs(x.log_radius() - y.log_radius()) < tol;
    };
    auto sq = [](double v) { return v * v; };
    const int binom[6][6] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}, {1, 5, 10, 10, 5, 1}};

    std::size_t failed = 0;
    for (int i = 0; i < 10000; ++i) {
        Interval a = draw();
        Interval b = draw();
        Interval c = draw();
        double k = scal(rng);
        double l = scal(rng);
        bool ok = true;
        ok = ok && same((a + b) + c, a + (b + c)) && same(a + b, b + a);
        ok = ok && same(a + Interval::zero(), a) && same(a + (-a), Interval::zero());
        ok = ok && same(k * (a + b), k * a + k * b) && same((k + l) * a, k * a + l * a);
        ok = ok && same((k * l) * a, k * (l * a)) && same(1.0 * a, a);
        ok = ok && same((a + b) - b, a) && same((a - b) + b, a);
        if (std::abs(b.center()) > 1e-3 && std::abs(b.log_radius()) > 1e-3)
            ok = ok && same((a * b) / b, a);
        // Orders.
        OrderRelation ab = cmp_total(a, b);
        OrderRelation ba = cmp_total(b, a);
        ok = ok && ab != OrderRelation::Incomparable;
        ok = ok && ((ab == OrderRelation::Less) == (ba == OrderRelation::Greater));
        if (ab == OrderRelation::Less)
            ok = ok && cmp_total(a + c, b + c) == OrderRelation::Less;
        if (ab == OrderRelation::Less && cmp_total(b, c) == OrderRelation::Less)
            ok = ok && cmp_total(a, c) == OrderRelation::Less;
        auto le = [](OrderRelation r) { return r == OrderRelation::Less || r == OrderRelation::Equal; };
        if (le(cmp_preceq(a, b)) && le(cmp_preceq(b, c)))
            ok = ok && le(cmp_preceq(a, c));
        // Hilbert-space identities.
        double lhs = sq(norm(a + b)) + sq(norm(a - b));
        double rhs = 2 * sq(norm(a)) + 2 * sq(norm(b));
        ok = ok && std::abs(lhs - rhs) < tol;
        ok = ok && std::abs(inner(a, b) - 0.25 * (sq(norm(a + b)) - sq(norm(a - b)))) < tol;
        // (a + b)^n as a binomial sum.
        for (unsigned n = 0; n <= 5 && ok; ++n) {
            Interval sum = Interval::zero();
            for (unsigned j = 0; j <= n; ++j)
                sum = sum + static_cast<double>(binom[n][j]) * (pow_n(a, j) * pow_n(b, n - j));
            ok = ok && same(pow_n(a + b, n), sum);
        }
        if (!ok) {
            ++failed;
            if (failed == 1)
                ck.expect(false, "triple " + render_center_radius(a) + " " + render_center_radius(b) + " " +
                                     render_center_radius(c));
        }
    }
    ck.expect(failed == 0, std::to_string(failed) + " of 10000 triples failed");
    ck.note("10000 triples");
}

void derivative_engine(Checker& ck)
{
    auto f = IvfHandle::parse("[t, t^2+1]", 0, 1);
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        double t = 0.05 + 0.9 * i / 100.0;
        Interval d = derive(f, t).value;
        double c = t + 0.5;
        double w = std::exp((2 * t - 1) / (t * t - t + 1));
        worst = std::max({worst, std::abs(d.center() - c), std::abs(d.radius() - w)});
    }
    ck.expect(worst <= 1e-6, "[t,t^2+1] derivative off by " + sci(worst));

    auto g = IvfHandle::parse("[t^2/2, 1+t^2/2+2*sin(t)^2]", 0, 2 * pi);
    worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double t = 0.1 + (2 * pi - 0.2) * i / 200.0;
        Interval d = derive(g, t).value;
        double s = std::sin(2 * t);
        double c = t + s;
        double w = std::exp(2 * s / (2 - std::cos(2 * t)));
        worst = std::max({worst, std::abs(d.center() - c), std::abs(d.radius() - w)});
    }
    ck.expect(worst <= 1e-6, "sin^2 example derivative off by " + sci(worst));

    auto sw = find_switching_points(g, 256);
    ck.expect(sw.size() == 3, "expected 3 switching points, got " + std::to_string(sw.size()));
    if (sw.size() == 3) {
        for (int i = 0; i < 3; ++i)
            ck.near(sw[i], (i + 1) * pi / 2, 1e-8, "switching point " + std::to_string(i + 1));
    }
    ck.note("derivative error " + sci(worst));
}

void ftc(Checker& ck)
{
    auto f = IvfHandle::parse("[t, t^2+1]", 0, 1);
    FtcReport r = verify_ftc(f, 0, 1, 1e-8);
    ck.expect(r.holds, "verify_ftc failed, distance " + sci(r.distance));
    ck.near(r.integral.endpoints(), 0, 2, 1e-8, "integral of derivative");
    ck.near(r.difference.endpoints(), 0, 2, 1e-12, "F(1)-F(0)");

    auto gh = gh_derivative_function(f);
    ExtendedInterval integral = endpoint_integral(gh, 0, 1, 1e-10);
    ck.near(integral, 0.75, 1.25, 1e-8, "integral of gH derivative");
    ExtendedInterval diff = gh_sub(f.endpoints(1), f.endpoints(0));
    ck.near(diff, 1, 1, 1e-12, "gH difference F(1), F(0)");
    ck.expect(!(std::abs(integral.lo - diff.lo) < 1e-3 && std::abs(integral.hi - diff.hi) < 1e-3),
              "gH counterexample did not differ");
}

void by_parts(Checker& ck)
{
    auto f = IvfHandle::parse("[t^2, 2*t+1]", 0, 1);
    auto g = IvfHandle::parse("[t, t^2+1]", 0, 1);
    ByPartsReport r = verify_by_parts(f, g, 0, 1, 1e-10);
    const double w = std::exp(-ln2 * ln2);
    ck.expect(r.holds, "by parts failed, distance " + sci(r.distance));
    for (const auto& [side, v] : {std::pair{"lhs", r.lhs}, std::pair{"rhs", r.rhs}}) {
        ck.near(v.center(), 2.75, 1e-8, std::string("interval G ") + side + " center");
        ck.near(v.radius(), w, 1e-8, std::string("interval G ") + side + " radius");
    }
    ByPartsReport s = verify_by_parts(f, Factor(std::function<double(double)>([](double t) { return 2 - t; })), 0,
                                      1, 1e-10);
    ck.expect(s.holds, "real G by parts failed, distance " + sci(s.distance));
    for (const auto& [side, v] : {std::pair{"lhs", s.lhs}, std::pair{"rhs", s.rhs}}) {
        ck.near(v.center(), 1, 1e-8, std::string("real G ") + side + " center");
        ck.near(v.radius(), 4, 1e-8, std::string("real G ") + side + " radius");
    }
}

void ide_examples(Checker& ck)
{
    for (auto [name, rhs, lo, hi, closed] :
         {std::tuple{"t/(1+x^2)", "[1,2]*t/(1+x^2)", -1.0, 1.0, &ex64},
          std::tuple{"sin(t)/(1+x^2)", "[1,2]*sin(t)/(1+x^2)", 1.0, 3.0, &ex66}}) {
        auto start = std::chrono::steady_clock::now();
        Trajectory x = solve_new(problem(rhs, 4, lo, hi));
        double elapsed = seconds_since(start);
        double dev = sup_deviation(x, closed);
        ck.expect(dev <= 1e-6, std::string(name) + " deviation " + sci(dev));
        ck.expect(elapsed < 1.0, std::string(name) + " took " + sci(elapsed) + " s");
        ck.note(std::string(name) + " " + sci(dev));
    }
}

void ide_product(Checker& ck)
{
    Trajectory x = solve_new(problem("x*sin(t)", 6, 1, 2));
    double dev = sup_deviation(x, ex68);
    ck.expect(dev <= 1e-6, "deviation " + sci(dev));
    ck.note("deviation " + sci(dev));
}

void gh_solver(Checker& ck)
{
    IdeProblem p = problem("smul(-1, x) + smul([1,2], t)", 3, 0, 1);
    p.gh.switch_points = {1.0};
    GhResult r = solve_gh(p);
    auto x1 = [](double t) {
        return ExtendedInterval(2 * t - std::exp(t) + 2 * std::exp(-t) - 1, t + std::exp(t) + 2 * std::exp(-t) - 2);
    };
    auto x2 = [](double t) {
        if (t <= 1)
            return ExtendedInterval(2 * t + 2 * std::exp(-t) - 2, t + 2 * std::exp(-t) - 1);
        return ExtendedInterval(2 * t - std::exp(t - 1) + 2 * std::exp(-t) - 1,
                                t + std::exp(t - 1) + 2 * std::exp(-t) - 2);
    };
    for (auto [label, closed] : {std::pair<std::string, std::function<ExtendedInterval(double)>>{"i>i", x1},
                                 std::pair<std::string, std::function<ExtendedInterval(double)>>{"ii>i", x2}}) {
        const EndpointTrajectory* x = find_label(r, label);
        ck.expect(x != nullptr, "linear example: branch " + label + " missing");
        if (x) {
            double dev = sup_deviation(*x, closed);
            ck.expect(dev <= 1e-6, "linear example " + label + " deviation " + sci(dev));
        }
    }
    ck.expect(r.discarded.size() == 2, "linear example: expected 2 discarded branches, got " +
                                           std::to_string(r.discarded.size()));

    IdeProblem q = problem("smul(sin(t), x)", 6, 1, 2);
    q.gh.switch_points = {pi};
    GhResult s = solve_gh(q);
    auto E = [](double t) { return std::exp(1 - std::cos(t)); };
    auto around = [&](double t, double w) { return ExtendedInterval(1.5 * E(t) - w, 1.5 * E(t) + w); };
    std::function<ExtendedInterval(double)> sols[4] = {
        [&](double t) { return ExtendedInterval(E(t), 2 * E(t)); },
        [&](double t) { return around(t, 0.5 * std::exp(std::cos(t) - 1)); },
        [&](double t) { return around(t, t <= pi ? 0.5 * E(t) : 0.5 * std::exp(3 + std::cos(t))); },
        [&](double t) { return around(t, t <= pi ? 0.5 * std::exp(std::cos(t) - 1) : 0.5 * std::exp(-3 - std::cos(t))); },
    };
    const char* labels[4] = {"i>ii", "ii>i", "i>i", "ii>ii"};
    for (int i = 0; i < 4; ++i) {
        const EndpointTrajectory* x = find_label(s, labels[i]);
        ck.expect(x != nullptr, std::string("product example: branch ") + labels[i] + " missing");
        if (x) {
            double dev = sup_deviation(*x, sols[i]);
            ck.expect(dev <= 1e-6, std::string("product example ") + labels[i] + " deviation " + sci(dev));
        }
    }
    ck.note(std::to_string(r.discarded.size()) + " discarded");
}

void convergence_order(Checker& ck)
{
    double e1 = sup_deviation(solve_new(problem("[1,2]*t/(1+x^2)", 4, -1, 1, 0.1)), ex64);
    double e2 = sup_deviation(solve_new(problem("[1,2]*t/(1+x^2)", 4, -1, 1, 0.05)), ex64);
    double ratio = e1 / e2;
    ck.expect(ratio >= 12 && ratio <= 20, "error ratio " + format_real(ratio));
    std::ostringstream os;
    os.precision(4);
    os << "ratio " << ratio;
    ck.note(os.str());
}

void picard(Checker& ck)
{
    for (auto [name, rhs, t_end, lo, hi] : {std::tuple{"t/(1+x^2)", "[1,2]*t/(1+x^2)", 4.0, -1.0, 1.0},
                                            std::tuple{"x*sin(t)", "x*sin(t)", 6.0, 1.0, 2.0}}) {
        IdeProblem p = problem(rhs, t_end, lo, hi);
        p.picard_max_iter = 50;
        try {
            PicardResult r = solve_picard(p);
            double d = sup_distance(r.trajectory, solve_new(p));
            ck.expect(d <= 1e-4, std::string(name) + " sup distance " + sci(d));
            ck.note(std::string(name) + " " + std::to_string(r.iterations) + " iterations");
        } catch (const Error& e) {
            ck.expect(false, std::string(name) + ": " + e.what());
        }
    }
}

struct Entry {
    const char* name;
    void (*run)(Checker&);
};

const Entry entries[selftest_criteria] = {
    {"arithmetic tables", arithmetic_tables},
    {"worked arithmetic examples", worked_examples},
    {"algebraic property suite", property_suite},
    {"derivative engine", derivative_engine},
    {"fundamental theorem", ftc},
    {"integration by parts", by_parts},
    {"IDE closed forms (t and sin forcing)", ide_examples},
    {"IDE closed form (x sin t)", ide_product},
    {"gH branch solutions", gh_solver},
    {"RK4 convergence order", convergence_order},
    {"Picard vs RK4", picard},
};

} // namespace

CriterionResult run_criterion(int id)
{
    if (id < 1 || id > selftest_criteria)
        throw Error(ErrorCode::InvalidConfig, "no criterion " + std::to_string(id));
    const Entry& e = entries[id - 1];
    CriterionResult out;
    out.id = id;
    out.name = e.name;
    auto start = std::chrono::steady_clock::now();
    Checker ck;
    try {
        e.run(ck);
        out.passed = ck.ok();
        out.detail = ck.detail();
    } catch (const std::exception& ex) {
        out.passed = false;
        out.detail = std::string("unexpected error: ") + ex.what();
    }
    out.seconds = seconds_since(start);
    return out;
}

std::vector<CriterionResult> run_selftest()
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= selftest_criteria; ++id)
        out.push_back(run_criterion(id));
    return out;
}

} // namespace intervalkit
