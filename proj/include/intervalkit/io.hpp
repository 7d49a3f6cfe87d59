#pragma once

#include <intervalkit/ide.hpp>
#include <intervalkit/trajectory.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace intervalkit {

/// Problem description in JSON:
///
///   {
///     "rhs": "[1,2]*t/(1+x^2)", "t0": 0, "t_end": 4, "x0": "[-1,1]",
///     "method": "rk4", "step": 0.001,
///     "picard": {"tol": 1e-10, "max_iter": 50},
///     "gh": {"switch_points": ["pi"], "branches": [["i", "ii"], ["ii", "i"]]},
///     "sweep": {"density": 5}
///   }
///
/// Unknown keys anywhere are rejected with InvalidConfig. Switch points may be
/// numbers or expression strings in t-free form.
IdeProblem parse_problem(std::string_view json_text);
IdeProblem load_problem(const std::filesystem::path& path);

/// Header `t,x_l,x_r,x_c,x_w`, 17 significant digits.
void write_csv(std::ostream& out, const EndpointTrajectory& x);
void write_csv(const std::filesystem::path& path, const EndpointTrajectory& x);

/// Reads what write_csv wrote; the label becomes the file stem.
EndpointTrajectory read_csv(std::istream& in, std::string label = {});
EndpointTrajectory read_csv(const std::filesystem::path& path);

/// Polylines of x_l and x_r against t for each trajectory, with axes and a
/// legend.
void write_svg(std::ostream& out, const std::vector<EndpointTrajectory>& trajs, std::string_view title = {});
void write_svg(const std::filesystem::path& path, const std::vector<EndpointTrajectory>& trajs,
               std::string_view title = {});

} // namespace intervalkit
