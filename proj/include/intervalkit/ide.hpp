#pragma once

#include <intervalkit/expr.hpp>
#include <intervalkit/interval.hpp>
#include <intervalkit/trajectory.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace intervalkit {

enum class Method { Rk4, Picard, GhBranch, ParamSweep };

std::string to_string(Method m);
Method parse_method(std::string_view name);

/// gH differentiability type on a segment between switch points:
/// I  : (x_l', x_r') = (f_l, f_r)
/// II : (x_l', x_r') = (f_r, f_l)
enum class BranchType { I, II };

using BranchSequence = std::vector<BranchType>;

std::string branch_label(const BranchSequence& seq);

struct GhSpec {
    /// Strictly increasing, inside (t0, t_end). Shared by all sequences.
    std::vector<double> switch_points;
    /// Each sequence has switch_points.size() + 1 entries.
    std::vector<BranchSequence> branches;
};

struct IdeProblem {
    Expr rhs;
    double t0 = 0.0;
    double t_end = 1.0;
    Interval x0;
    Method method = Method::Rk4;
    double step = 1e-3;
    double picard_tol = 1e-10;
    std::size_t picard_max_iter = 50;
    std::size_t sweep_density = 5;
    GhSpec gh;
};

/// Checks t0 < t_end and step <= (t_end - t0) / 8 (InvalidConfig).
void validate(const IdeProblem& p);
Grid problem_grid(const IdeProblem& p);

/// RK4 on (center, log-radius) of x' = f(t, x) under the new arithmetic.
Trajectory solve_new(const IdeProblem& p);

struct PicardResult {
    Trajectory trajectory;
    std::size_t iterations = 0;
    double residual = 0.0;
};

class PicardNonConvergence : public Error {
public:
    PicardNonConvergence(PicardResult last, const std::string& what)
        : Error(ErrorCode::NonConvergence, what), last_(std::move(last))
    {
    }
    [[nodiscard]] const PicardResult& last() const noexcept { return last_; }

private:
    PicardResult last_;
};

/// Fixed-point iteration of x -> x0 + integral of f(s, x(s)) from t0, seeded
/// with the constant x0 and integrated by cumulative Simpson on the grid.
/// Throws PicardNonConvergence when picard_max_iter is reached.
PicardResult solve_picard(const IdeProblem& p);

struct DiscardedBranch {
    std::string label;
    double t = 0.0; ///< first node where x_l > x_r
};

struct GhResult {
    std::vector<EndpointTrajectory> trajectories;
    std::vector<DiscardedBranch> discarded;
};

/// Integrates the endpoint system of every requested branch sequence with
/// RK4 under classical (Moore) evaluation of the right-hand side. Sequences
/// whose endpoints cross are discarded and reported; BranchInfeasible if none
/// survive.
GhResult solve_gh(const IdeProblem& p);

/// All 2^(k+1) sequences for k switch points.
std::vector<BranchSequence> enumerate_branch_sequences(std::size_t switch_count);

/// Switch points for solve_gh from detected switching points: sorted, kept
/// strictly inside (t0, t_end), and merged when closer than min_gap.
std::vector<double> segment_boundaries(std::vector<double> points, double t0, double t_end,
                                       double min_gap = 1e-9);

/// Envelope of the real ODE family obtained by sweeping every interval
/// literal and x0 over sweep_density evenly spaced values (density 1 uses the
/// midpoints). Runs in parallel; see sweep_thread_count().
EndpointTrajectory solve_param_sweep(const IdeProblem& p);

/// INTERVALKIT_THREADS, or the hardware concurrency when unset or 0.
std::size_t sweep_thread_count();

struct PairDeviation {
    std::size_t first = 0;
    std::size_t second = 0;
    double sup = 0.0;
    double t_at_sup = 0.0;
};

struct ComparisonReport {
    std::vector<std::string> labels;
    std::vector<PairDeviation> pairs;
    /// deviations[node][pair]
    std::vector<std::vector<double>> deviations;
    Grid grid;
};

/// Pairwise sup over nodes of max(|lo - lo'|, |hi - hi'|). GridMismatch if the
/// grids differ.
ComparisonReport compare(const std::vector<EndpointTrajectory>& trajs);

} // namespace intervalkit
