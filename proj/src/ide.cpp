#include <intervalkit/ide.hpp>

#include <intervalkit/metric.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

namespace intervalkit {

namespace {

using State = std::array<double, 2>;

template <class F>
State rk4_step(const F& f, double t, const State& y, double h)
{
    auto axpy = [](const State& a, double s, const State& b) { return State{a[0] + s * b[0], a[1] + s * b[1]}; };
    State k1 = f(t, y);
    State k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
    State k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
    State k4 = f(t + h, axpy(y, h, k3));
    return {y[0] + h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
}

// Runs fn, turning any library error into an RhsEvaluationError at time t.
template <class Fn>
auto at_time(double t, Fn&& fn)
{
    try {
        return fn();
    } catch (const RhsEvaluationError&) {
        throw;
    } catch (const Error& e) {
        throw RhsEvaluationError(t, e.code(), e.what());
    }
}

void require_finite_state(const State& y, double t)
{
    if (!std::isfinite(y[0]) || !std::isfinite(y[1]))
        throw Error(ErrorCode::NonFinite, "solution is not finite at t = " + format_real(t));
}

State new_rhs(const Expr& rhs, double t, const State& y)
{
    require_finite_state(y, t);
    return at_time(t, [&] {
        Interval x = Interval::from_coords(y[0], y[1]);
        Interval f = eval_interval(rhs, t, x);
        return State{f.center(), f.log_radius()};
    });
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    if (n == 1)
        return {0.5 * (lo + hi)};
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j)
        v[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n - 1);
    v.front() = lo;
    v.back() = hi;
    return v;
}

} // namespace

std::string to_string(Method m)
{
    switch (m) {
    case Method::Rk4: return "rk4";
    case Method::Picard: return "picard";
    case Method::GhBranch: return "gh_branch";
    case Method::ParamSweep: return "param_sweep";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    if (name == "rk4")
        return Method::Rk4;
    if (name == "picard")
        return Method::Picard;
    if (name == "gh_branch" || name == "gh")
        return Method::GhBranch;
    if (name == "param_sweep" || name == "sweep")
        return Method::ParamSweep;
    throw Error(ErrorCode::InvalidConfig, "unknown method '" + std::string(name) + "'");
}

std::string branch_label(const BranchSequence& seq)
{
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0)
            out += ">";
        out += seq[i] == BranchType::I ? "i" : "ii";
    }
    return out;
}

void validate(const IdeProblem& p)
{
    if (!p.rhs)
        throw Error(ErrorCode::InvalidConfig, "problem has no right-hand side");
    if (!std::isfinite(p.t0) || !std::isfinite(p.t_end) || !(p.t0 < p.t_end))
        throw Error(ErrorCode::InvalidConfig, "need finite t0 < t_end");
    if (!(p.step > 0.0) || p.step > (p.t_end - p.t0) / 8.0)
        throw Error(ErrorCode::InvalidConfig, "step must be positive and at most (t_end - t0) / 8");
}

Grid problem_grid(const IdeProblem& p)
{
    validate(p);
    return Grid::uniform(p.t0, p.t_end, p.step);
}

Trajectory solve_new(const IdeProblem& p)
{
    Trajectory out;
    out.grid = problem_grid(p);
    const auto& t = out.grid.t;
    out.values.reserve(t.size());
    State y{p.x0.center(), p.x0.log_radius()};
    out.values.push_back(p.x0);
    auto f = [&](double s, const State& z) { return new_rhs(p.rhs, s, z); };
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        y = rk4_step(f, t[i], y, t[i + 1] - t[i]);
        require_finite_state(y, t[i + 1]);
        out.values.push_back(Interval::from_coords(y[0], y[1]));
    }
    return out;
}

PicardResult solve_picard(const IdeProblem& p)
{
    Grid grid = problem_grid(p);
    const auto& t = grid.t;
    const std::size_t n = t.size();
    const double h = grid.spacing();
    if (p.picard_max_iter == 0)
        throw Error(ErrorCode::InvalidConfig, "picard_max_iter must be at least 1");

    std::vector<State> x(n, State{p.x0.center(), p.x0.log_radius()});
    std::vector<State> f(n);
    std::vector<State> next(n);
    PicardResult result;
    result.trajectory.grid = grid;

    for (std::size_t iter = 1; iter <= p.picard_max_iter; ++iter) {
        for (std::size_t i = 0; i < n; ++i)
            f[i] = new_rhs(p.rhs, t[i], x[i]);

        // Cumulative Simpson: pairs of panels, with a third-order one-panel
        // rule for odd nodes.
        std::vector<State> cumulative(n, State{0.0, 0.0});
        next[0] = {p.x0.center(), p.x0.log_radius()};
        for (std::size_t i = 1; i < n; ++i) {
            for (int k = 0; k < 2; ++k) {
                if (i == 1)
                    cumulative[i][k] = h / 12.0 * (5 * f[0][k] + 8 * f[1][k] - f[2][k]);
                else if (i % 2 == 0)
                    cumulative[i][k] = cumulative[i - 2][k] + h / 3.0 * (f[i - 2][k] + 4 * f[i - 1][k] + f[i][k]);
                else
                    cumulative[i][k] = cumulative[i - 1][k] + h / 12.0 * (-f[i - 2][k] + 8 * f[i - 1][k] + 5 * f[i][k]);
            }
            next[i] = {p.x0.center() + cumulative[i][0], p.x0.log_radius() + cumulative[i][1]};
            require_finite_state(next[i], t[i]);
        }

        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            residual = std::max(residual, std::hypot(next[i][0] - x[i][0], next[i][1] - x[i][1]));
        x.swap(next);

        result.iterations = iter;
        result.residual = residual;
        if (residual < p.picard_tol)
            break;
        if (iter == p.picard_max_iter) {
            result.trajectory.values.clear();
            for (const auto& s : x)
                result.trajectory.values.push_back(Interval::from_coords(s[0], s[1]));
            throw PicardNonConvergence(result, "Picard iteration did not converge in "
                                                   + std::to_string(iter) + " iterations (residual "
                                                   + format_real(residual) + ")");
        }
    }
    for (const auto& s : x)
        result.trajectory.values.push_back(Interval::from_coords(s[0], s[1]));
    return result;
}

std::vector<BranchSequence> enumerate_branch_sequences(std::size_t switch_count)
{
    if (switch_count > 20)
        throw Error(ErrorCode::InvalidConfig, "too many switch points to enumerate");
    std::size_t len = switch_count + 1;
    std::vector<BranchSequence> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
        BranchSequence seq(len);
        for (std::size_t j = 0; j < len; ++j)
            seq[j] = (mask >> (len - 1 - j)) & 1U ? BranchType::II : BranchType::I;
        out.push_back(std::move(seq));
    }
    return out;
}

std::vector<double> segment_boundaries(std::vector<double> points, double t0, double t_end, double min_gap)
{
    std::sort(points.begin(), points.end());
    std::vector<double> out;
    for (double s : points) {
        if (!(s > t0 + min_gap) || !(s < t_end - min_gap))
            continue;
        if (!out.empty() && s - out.back() < min_gap)
            continue;
        out.push_back(s);
    }
    return out;
}

GhResult solve_gh(const IdeProblem& p)
{
    Grid grid = problem_grid(p);
    const auto& t = grid.t;
    const auto& sw = p.gh.switch_points;
    for (std::size_t j = 0; j < sw.size(); ++j) {
        if (!(sw[j] > p.t0 && sw[j] < p.t_end) || (j > 0 && !(sw[j] > sw[j - 1])))
            throw Error(ErrorCode::InvalidConfig, "switch points must increase strictly inside (t0, t_end)");
    }
    std::vector<BranchSequence> sequences = p.gh.branches;
    if (sequences.empty())
        sequences = enumerate_branch_sequences(sw.size());
    for (const auto& seq : sequences)
        if (seq.size() != sw.size() + 1)
            throw Error(ErrorCode::InvalidConfig, "branch sequence '" + branch_label(seq) + "' needs "
                                                      + std::to_string(sw.size() + 1) + " entries");

    ExtendedInterval x0 = p.x0.endpoints();
    GhResult result;
    for (const auto& seq : sequences) {
        std::string label = branch_label(seq);
        auto system = [&](BranchType type) {
            return [&p, type](double s, const State& y) {
                require_finite_state(y, s);
                return at_time(s, [&] {
                    ExtendedInterval f
                        = eval_endpoint_pair(p.rhs, s, std::min(y[0], y[1]), std::max(y[0], y[1]));
                    return type == BranchType::I ? State{f.lo, f.hi} : State{f.hi, f.lo};
                });
            };
        };
        auto step = [&](double a, double b, BranchType type, const State& y) {
            return type == BranchType::I ? rk4_step(system(BranchType::I), a, y, b - a)
                                         : rk4_step(system(BranchType::II), a, y, b - a);
        };

        EndpointTrajectory traj;
        traj.grid = grid;
        traj.label = label;
        traj.values.reserve(t.size());
        traj.values.push_back(x0);
        State y{x0.lo, x0.hi};
        std::size_t seg = 0;
        bool crossed = false;
        for (std::size_t i = 0; i + 1 < t.size() && !crossed; ++i) {
            double a = t[i];
            double b = t[i + 1];
            double tiny = 1e-12 * (1.0 + std::abs(b));
            while (seg < sw.size() && sw[seg] <= a + tiny)
                ++seg;
            while (seg < sw.size() && sw[seg] < b - tiny) {
                y = step(a, sw[seg], seq[seg], y);
                a = sw[seg];
                ++seg;
            }
            y = step(a, b, seq[seg], y);
            require_finite_state(y, b);
            double slack = 1e-9 * (1.0 + std::max(std::abs(y[0]), std::abs(y[1])));
            if (y[0] > y[1] + slack) {
                result.discarded.push_back({label, b});
                crossed = true;
                break;
            }
            traj.values.emplace_back(std::min(y[0], y[1]), std::max(y[0], y[1]));
        }
        if (!crossed)
            result.trajectories.push_back(std::move(traj));
    }
    if (result.trajectories.empty())
        throw Error(ErrorCode::BranchInfeasible, "every requested gH branch sequence crosses its endpoints");
    return result;
}

std::size_t sweep_thread_count()
{
    std::size_t n = 0;
    if (const char* env = std::getenv("INTERVALKIT_THREADS")) {
        std::string_view s(env);
        auto res = std::from_chars(s.data(), s.data() + s.size(), n);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size())
            throw Error(ErrorCode::InvalidConfig, "INTERVALKIT_THREADS must be a non-negative integer");
    }
    if (n == 0)
        n = std::max(1U, std::thread::hardware_concurrency());
    return n;
}

EndpointTrajectory solve_param_sweep(const IdeProblem& p)
{
    Grid grid = problem_grid(p);
    const auto& t = grid.t;
    if (p.sweep_density == 0)
        throw Error(ErrorCode::InvalidConfig, "sweep_density must be at least 1");

    // Axis 0 is the initial value, then one axis per interval literal.
    std::vector<std::vector<double>> axes;
    ExtendedInterval x0 = p.x0.endpoints();
    axes.push_back(linspace(x0.lo, x0.hi, p.sweep_density));
    std::size_t k = count_interval_literals(p.rhs);
    for (std::size_t j = 0; j < k; ++j) {
        ExtendedInterval r = literal_range(p.rhs, j);
        axes.push_back(linspace(r.lo, r.hi, p.sweep_density));
    }
    std::size_t combos = 1;
    for (const auto& axis : axes) {
        if (combos > std::numeric_limits<std::size_t>::max() / axis.size() || combos * axis.size() > 10'000'000)
            throw Error(ErrorCode::InvalidConfig, "parameter sweep is too large");
        combos *= axis.size();
    }

    struct Envelope {
        std::vector<double> lo;
        std::vector<double> hi;
    };
    auto run = [&](std::size_t index, Envelope& env) {
        double x = 0.0;
        std::vector<double> params(k);
        for (std::size_t a = 0; a < axes.size(); ++a) {
            std::size_t pick = index % axes[a].size();
            index /= axes[a].size();
            if (a == 0)
                x = axes[a][pick];
            else
                params[a - 1] = axes[a][pick];
        }
        auto f = [&](double s, const State& y) {
            return at_time(s, [&] { return State{eval_param(p.rhs, s, y[0], params), 0.0}; });
        };
        State y{x, 0.0};
        env.lo[0] = std::min(env.lo[0], x);
        env.hi[0] = std::max(env.hi[0], x);
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            y = rk4_step(f, t[i], y, t[i + 1] - t[i]);
            require_finite_state(y, t[i + 1]);
            env.lo[i + 1] = std::min(env.lo[i + 1], y[0]);
            env.hi[i + 1] = std::max(env.hi[i + 1], y[0]);
        }
    };

    std::size_t threads = std::min(sweep_thread_count(), combos);
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Envelope> partial(threads, Envelope{std::vector<double>(t.size(), inf),
                                                    std::vector<double>(t.size(), -inf)});
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::size_t> error_index(threads, combos);
    auto worker = [&](std::size_t tid) {
        for (std::size_t index = tid; index < combos; index += threads) {
            try {
                run(index, partial[tid]);
            } catch (...) {
                errors[tid] = std::current_exception();
                error_index[tid] = index;
                return;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t tid = 0; tid < threads; ++tid)
            pool.emplace_back(worker, tid);
        for (auto& th : pool)
            th.join();
    }
    // Report the failure of the lowest-numbered run so errors do not depend
    // on scheduling.
    std::size_t first = combos;
    std::exception_ptr err;
    for (std::size_t tid = 0; tid < threads; ++tid) {
        if (errors[tid] && error_index[tid] < first) {
            first = error_index[tid];
            err = errors[tid];
        }
    }
    if (err)
        std::rethrow_exception(err);

    EndpointTrajectory out;
    out.grid = grid;
    out.label = "sweep";
    out.values.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        double lo = inf;
        double hi = -inf;
        for (const auto& env : partial) {
            lo = std::min(lo, env.lo[i]);
            hi = std::max(hi, env.hi[i]);
        }
        out.values.emplace_back(lo, hi);
    }
    return out;
}

ComparisonReport compare(const std::vector<EndpointTrajectory>& trajs)
{
    ComparisonReport r;
    if (trajs.empty())
        return r;
    r.grid = trajs.front().grid;
    for (const auto& x : trajs) {
        require_same_grid(r.grid, x.grid);
        if (x.values.size() != r.grid.size())
            throw Error(ErrorCode::GridMismatch, "trajectory '" + x.label + "' does not match its grid");
        r.labels.push_back(x.label);
    }
    for (std::size_t i = 0; i < trajs.size(); ++i)
        for (std::size_t j = i + 1; j < trajs.size(); ++j)
            r.pairs.push_back({i, j, 0.0, r.grid.front()});
    r.deviations.assign(r.grid.size(), std::vector<double>(r.pairs.size(), 0.0));
    for (std::size_t q = 0; q < r.pairs.size(); ++q) {
        auto& pair = r.pairs[q];
        const auto& a = trajs[pair.first].values;
        const auto& b = trajs[pair.second].values;
        for (std::size_t n = 0; n < r.grid.size(); ++n) {
            double d = std::max(std::abs(a[n].lo - b[n].lo), std::abs(a[n].hi - b[n].hi));
            r.deviations[n][q] = d;
            if (d > pair.sup) {
                pair.sup = d;
                pair.t_at_sup = r.grid.t[n];
            }
        }
    }
    return r;
}

} // namespace intervalkit
