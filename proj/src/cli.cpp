#include <intervalkit/cli.hpp>

#include <intervalkit/calculus.hpp>
#include <intervalkit/ide.hpp>
#include <intervalkit/io.hpp>
#include <intervalkit/quadrature.hpp>
#include <intervalkit/selftest.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace intervalkit {

namespace {

namespace fs = std::filesystem;

struct Failure {
    int code;
    std::string message;
};

// Runs f, turning library errors into a Failure with the given exit code.
template <class F>
auto stage(int code, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error& e) {
        throw Failure{code, e.what()};
    }
}

[[noreturn]] void fail(int code, const std::string& message)
{
    throw Failure{code, message};
}

// Expressions in x alone are read as functions of that variable.
Expr with_var_t(const Expr& e)
{
    auto copy = std::make_shared<ExprNode>(*e);
    if (copy->kind == NodeKind::Var)
        copy->var = 't';
    for (auto& c : copy->children)
        c = with_var_t(c);
    return copy;
}

Expr parse_function(const std::string& text)
{
    Expr e = stage(exit_parse, [&] { return parse(text); });
    if (mentions_var(e, 'x') && !mentions_var(e, 't'))
        e = with_var_t(e);
    return e;
}

double real_arg(const std::string& text, const char* flag)
{
    Expr e = stage(exit_parse, [&] { return parse(text); });
    EvalValue v = stage(exit_parse, [&] { return evaluate(e, Env{}); });
    if (!std::holds_alternative<double>(v))
        fail(exit_parse, std::string(flag) + " must be a real number");
    return std::get<double>(v);
}

Interval interval_arg(const std::string& text, const char* flag)
{
    Expr e = stage(exit_parse, [&] { return parse(text); });
    EvalValue v = stage(exit_eval, [&] { return evaluate(e, Env{}); });
    if (!std::holds_alternative<Interval>(v))
        fail(exit_parse, std::string(flag) + " must be an interval");
    return std::get<Interval>(v);
}

std::string both_forms(const Interval& v)
{
    return render_endpoints(v) + " " + render_center_radius(v);
}

std::string both_forms(const ExtendedInterval& v)
{
    return render_endpoints(v) + " <" + format_real(v.center()) + ";" + format_real(v.radius()) + ">";
}

std::string file_safe(std::string s)
{
    for (char& c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'))
            c = '-';
    return s;
}

std::string short_real(double v)
{
    std::ostringstream os;
    os << std::setprecision(4) << v;
    return os.str();
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
    std::string expr;
    std::optional<std::string> t;
    std::optional<std::string> x;
    bool classical = false;
};

void cmd_eval(const EvalArgs& a, std::ostream& out)
{
    Expr e = stage(exit_parse, [&] { return parse(a.expr); });
    Env env;
    if (a.t)
        env.t = real_arg(*a.t, "--t");
    if (a.x)
        env.x = interval_arg(*a.x, "--x");
    if (!a.classical) {
        EvalValue v = stage(exit_eval, [&] { return evaluate(e, env); });
        if (std::holds_alternative<double>(v))
            out << format_real(std::get<double>(v)) << '\n';
        else
            out << both_forms(std::get<Interval>(v)) << '\n';
        return;
    }
    if (mentions_var(e, 't') && !env.t)
        fail(exit_eval, "variable t is not bound (use --t)");
    if (mentions_var(e, 'x') && !env.x)
        fail(exit_eval, "variable x is not bound (use --x)");
    double t = env.t.value_or(0.0);
    ExtendedInterval v = stage(exit_eval, [&] {
        if (env.x) {
            auto xe = env.x->endpoints();
            return eval_endpoint_pair(e, t, xe.lo, xe.hi);
        }
        return eval_endpoint_pair(e, t);
    });
    out << both_forms(v) << '\n';
}

// ---- diff ------------------------------------------------------------------

struct DiffArgs {
    std::string expr;
    std::optional<std::string> at;
    std::optional<std::string> from;
    std::optional<std::string> to;
    std::size_t grid = 0;
    bool gh = false;
    bool switching = false;
    bool classical = false;
    double h0 = 1e-4;
};

void cmd_diff(const DiffArgs& a, std::ostream& out)
{
    Expr e = parse_function(a.expr);
    std::optional<double> at;
    if (a.at)
        at = real_arg(*a.at, "--at");
    if (a.from.has_value() != a.to.has_value())
        fail(exit_parse, "--from and --to go together");
    double lo = 0.0;
    double hi = 0.0;
    if (a.from) {
        lo = real_arg(*a.from, "--from");
        hi = real_arg(*a.to, "--to");
        if (!(lo < hi))
            fail(exit_parse, "--from must be below --to");
    } else if (at) {
        lo = *at - 1.0;
        hi = *at + 1.0;
    } else {
        fail(exit_parse, "give --at, or --from and --to");
    }
    Semantics sem = a.classical ? Semantics::Classical : Semantics::NewArithmetic;
    IvfHandle f = stage(exit_eval, [&] { return IvfHandle(e, lo, hi, sem); });
    DeriveOptions opts;
    opts.h0 = a.h0;

    if (a.switching) {
        std::size_t n = a.grid ? a.grid : 256;
        auto points = stage(exit_eval, [&] { return find_switching_points(f, n); });
        for (double s : points)
            out << format_real(s) << '\n';
        return;
    }
    if (at) {
        if (a.gh) {
            auto d = stage(exit_eval, [&] { return gh_derive(f, *at, opts); });
            out << both_forms(d.value) << '\n';
        } else {
            auto d = stage(exit_eval, [&] { return derive(f, *at, opts); });
            out << both_forms(d.value) << '\n';
        }
        return;
    }
    // Derivative sampled on a grid, as trajectory CSV.
    std::size_t n = a.grid ? a.grid : 100;
    IvfHandle d = stage(exit_eval, [&] { return a.gh ? gh_derivative_function(f) : derivative_function(f); });
    EndpointTrajectory x;
    x.grid = Grid::with_nodes(lo, hi, n);
    for (double t : x.grid.t)
        x.values.push_back(stage(exit_eval, [&] { return d.endpoints(t); }));
    write_csv(out, x);
}

// ---- integrate ---------------------------------------------------------------

struct IntegrateArgs {
    std::string expr;
    std::string from;
    std::string to;
    double tol = 1e-10;
    bool classical = false;
};

void cmd_integrate(const IntegrateArgs& a, std::ostream& out)
{
    Expr e = parse_function(a.expr);
    double lo = real_arg(a.from, "--from");
    double hi = real_arg(a.to, "--to");
    if (!(lo < hi))
        fail(exit_parse, "--from must be below --to");
    if (!(a.tol > 0.0))
        fail(exit_parse, "--tol must be positive");
    if (a.classical) {
        IvfHandle f = stage(exit_eval, [&] { return IvfHandle(e, lo, hi, Semantics::Classical); });
        out << both_forms(stage(exit_eval, [&] { return endpoint_integral(f, lo, hi, a.tol); })) << '\n';
        return;
    }
    IvfHandle f = stage(exit_eval, [&] { return IvfHandle(e, lo, hi); });
    auto r = stage(exit_eval, [&] { return ir_integral(f, lo, hi, a.tol); });
    out << both_forms(r.value) << '\n';
}

// ---- solve -------------------------------------------------------------------

struct SolveArgs {
    std::string config;
    std::string out_dir;
    std::optional<std::string> method;
    std::optional<double> step;
};

// Step-doubling estimate of the RK4 error, when the halved grid nests.
std::optional<double> rk4_error_estimate(const IdeProblem& p, const Trajectory& fine)
{
    IdeProblem coarse_p = p;
    coarse_p.step = 2 * p.step;
    if (coarse_p.step > (p.t_end - p.t0) / 8)
        return std::nullopt;
    Trajectory coarse = solve_new(coarse_p);
    if (fine.grid.size() - 1 != 2 * (coarse.grid.size() - 1))
        return std::nullopt;
    double m = 0.0;
    for (std::size_t i = 0; i < coarse.grid.size(); ++i) {
        auto a = fine.values[2 * i].endpoints();
        auto b = coarse.values[i].endpoints();
        m = std::max({m, std::abs(a.lo - b.lo), std::abs(a.hi - b.hi)});
    }
    return m / 15.0;
}

void cmd_solve(const SolveArgs& a, std::ostream& out)
{
    IdeProblem p = stage(exit_parse, [&] { return load_problem(a.config); });
    if (a.method)
        p.method = stage(exit_parse, [&] { return parse_method(*a.method); });
    if (a.step)
        p.step = *a.step;
    stage(exit_parse, [&] { validate(p); });

    std::error_code ec;
    fs::create_directories(a.out_dir, ec);
    if (ec)
        fail(exit_parse, "cannot create " + a.out_dir + ": " + ec.message());

    const std::string stem = fs::path(a.config).stem().string();
    std::vector<std::pair<std::string, EndpointTrajectory>> outputs;
    std::vector<std::string> notes;
    auto start = std::chrono::steady_clock::now();

    stage(exit_solver, [&] {
        switch (p.method) {
        case Method::Rk4: {
            Trajectory x = solve_new(p);
            auto est = rk4_error_estimate(p, x);
            notes.push_back("residual: " + (est ? short_real(*est) + " (step-doubling estimate)" : std::string("n/a")));
            outputs.emplace_back(stem + ".csv", to_endpoints(x, stem));
            break;
        }
        case Method::Picard: {
            PicardResult r = solve_picard(p);
            notes.push_back("iterations: " + std::to_string(r.iterations));
            notes.push_back("residual: " + short_real(r.residual));
            outputs.emplace_back(stem + ".csv", to_endpoints(r.trajectory, stem));
            break;
        }
        case Method::GhBranch: {
            GhResult r = solve_gh(p);
            for (auto& x : r.trajectories) {
                notes.push_back("branch " + x.label + ": kept");
                outputs.emplace_back(stem + "_" + file_safe(x.label) + ".csv", x);
            }
            for (const auto& d : r.discarded)
                notes.push_back("branch " + d.label + ": discarded at t = " + format_real(d.t));
            break;
        }
        case Method::ParamSweep: {
            EndpointTrajectory x = solve_param_sweep(p);
            notes.push_back("runs: " +
                            std::to_string(static_cast<std::size_t>(std::pow(
                                static_cast<double>(p.sweep_density), 1.0 + count_interval_literals(p.rhs)))));
            notes.push_back("threads: " + std::to_string(sweep_thread_count()));
            outputs.emplace_back(stem + ".csv", std::move(x));
            break;
        }
        }
    });
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ostringstream summary;
    summary << "method: " << to_string(p.method) << '\n'
            << "step: " << format_real(p.step) << '\n'
            << "nodes: " << problem_grid(p).size() << '\n'
            << "runtime: " << short_real(elapsed) << " s\n";
    for (const auto& n : notes)
        summary << n << '\n';
    for (auto& [name, x] : outputs) {
        fs::path path = fs::path(a.out_dir) / name;
        stage(exit_parse, [&] { write_csv(path, x); });
        summary << "output: " << path.string() << '\n';
    }
    std::ofstream s(fs::path(a.out_dir) / (stem + "_summary.txt"), std::ios::binary);
    s << summary.str();
    out << summary.str();
}

// ---- compare -----------------------------------------------------------------

struct CompareArgs {
    std::vector<std::string> files;
    std::optional<std::string> svg;
    std::optional<std::string> csv;
    std::string title;
};

void cmd_compare(const CompareArgs& a, std::ostream& out)
{
    std::vector<EndpointTrajectory> trajs;
    for (const auto& f : a.files)
        trajs.push_back(stage(exit_parse, [&] { return read_csv(fs::path(f)); }));
    ComparisonReport r = stage(exit_compare, [&] { return compare(trajs); });

    out << "first,second,sup_deviation,t_at_sup\n";
    for (const auto& p : r.pairs)
        out << r.labels[p.first] << ',' << r.labels[p.second] << ',' << format_real(p.sup) << ','
            << format_real(p.t_at_sup) << '\n';

    if (a.csv) {
        std::ofstream f(*a.csv, std::ios::binary);
        if (!f)
            fail(exit_parse, "cannot write " + *a.csv);
        f << 't';
        for (const auto& p : r.pairs)
            f << ',' << r.labels[p.first] << "_vs_" << r.labels[p.second];
        f << '\n';
        for (std::size_t i = 0; i < r.grid.size(); ++i) {
            f << format_real17(r.grid.t[i]);
            for (double d : r.deviations[i])
                f << ',' << format_real17(d);
            f << '\n';
        }
    }
    if (a.svg)
        stage(exit_parse, [&] { write_svg(fs::path(*a.svg), trajs, a.title); });
}

// ---- selftest ------------------------------------------------------------------

int cmd_selftest(std::ostream& out)
{
    auto start = std::chrono::steady_clock::now();
    bool all = true;
    out << std::left << std::setw(4) << "id" << std::setw(6) << "pass" << std::setw(10) << "seconds"
        << std::setw(40) << "criterion" << "detail\n";
    for (int id = 1; id <= selftest_criteria; ++id) {
        CriterionResult r = run_criterion(id);
        all = all && r.passed;
        out << std::left << std::setw(4) << r.id << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::setw(10)
            << short_real(r.seconds) << std::setw(40) << r.name << r.detail << '\n'
            << std::flush;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "total " << short_real(total) << " s, " << (all ? "all passed" : "FAILURES") << '\n';
    return all ? exit_ok : exit_selftest_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Interval arithmetic, calculus and interval differential equations", "intervalkit"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression");
    eval->add_option("expr", eval_args.expr, "Expression")->required();
    eval->add_option("--t", eval_args.t, "Value bound to t");
    eval->add_option("--x", eval_args.x, "Interval bound to x");
    eval->add_flag("--classical", eval_args.classical, "Endpoint (Moore) semantics");

    DiffArgs diff_args;
    auto* diff = app.add_subcommand("diff", "Differentiate a function of t");
    diff->add_option("expr", diff_args.expr, "Expression in t")->required();
    diff->add_option("--at", diff_args.at, "Point of differentiation");
    diff->add_option("--from", diff_args.from, "Domain start");
    diff->add_option("--to", diff_args.to, "Domain end");
    diff->add_option("--grid", diff_args.grid, "Grid intervals for sampling or switching-point search");
    diff->add_flag("--gh", diff_args.gh, "gH derivative instead of the new one");
    diff->add_flag("--switching", diff_args.switching, "Print the switching points of the gH derivative");
    diff->add_flag("--classical", diff_args.classical, "Endpoint (Moore) semantics for the function");
    diff->add_option("--h0", diff_args.h0, "Initial difference step")->check(CLI::PositiveNumber);

    IntegrateArgs int_args;
    auto* integrate = app.add_subcommand("integrate", "Integrate a function of t");
    integrate->add_option("expr", int_args.expr, "Expression in t")->required();
    integrate->add_option("--from", int_args.from, "Lower limit")->required();
    integrate->add_option("--to", int_args.to, "Upper limit")->required();
    integrate->add_option("--tol", int_args.tol, "Error target");
    integrate->add_flag("--classical", int_args.classical, "Endpoint integral with Moore semantics");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve an interval differential equation");
    solve->add_option("config", solve_args.config, "Problem file (JSON)")->required();
    solve->add_option("--out", solve_args.out_dir, "Output directory")->required();
    solve->add_option("--method", solve_args.method, "Override the method: rk4, picard, gh_branch, param_sweep");
    solve->add_option("--step", solve_args.step, "Override the step")->check(CLI::PositiveNumber);

    CompareArgs cmp_args;
    auto* cmp = app.add_subcommand("compare", "Pairwise deviations between trajectory CSVs");
    cmp->add_option("files", cmp_args.files, "Trajectory CSV files")->required()->expected(2, -1);
    cmp->add_option("--svg", cmp_args.svg, "Write an SVG plot");
    cmp->add_option("--csv", cmp_args.csv, "Write per-node deviations");
    cmp->add_option("--title", cmp_args.title, "SVG title");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in reproduction checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (eval->parsed())
            cmd_eval(eval_args, out);
        else if (diff->parsed())
            cmd_diff(diff_args, out);
        else if (integrate->parsed())
            cmd_integrate(int_args, out);
        else if (solve->parsed())
            cmd_solve(solve_args, out);
        else if (cmp->parsed())
            cmd_compare(cmp_args, out);
        else if (selftest->parsed())
            return cmd_selftest(out);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_eval;
    }
    return exit_ok;
}

} // namespace intervalkit
