#include <intervalkit/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace intervalkit {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& msg)
{
    throw Error(ErrorCode::InvalidConfig, "config: " + msg);
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where)
{
    if (!obj.is_object())
        config_error(where + " must be an object");
    for (const auto& item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            config_error("unknown key '" + item.key() + "' in " + where);
    }
}

// A number, or a t- and x-free expression such as "pi/2".
double real_value(const json& v, const std::string& key)
{
    if (v.is_number())
        return v.get<double>();
    if (!v.is_string())
        config_error("'" + key + "' must be a number or an expression string");
    EvalValue r = evaluate(parse(v.get<std::string>()), Env{});
    if (!std::holds_alternative<double>(r))
        config_error("'" + key + "' must evaluate to a real number");
    return std::get<double>(r);
}

std::size_t count_value(const json& v, const std::string& key)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        config_error("'" + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

BranchType branch_type(const json& v)
{
    if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s == "i" || s == "I" || s == "+1" || s == "1")
            return BranchType::I;
        if (s == "ii" || s == "II" || s == "-1")
            return BranchType::II;
    } else if (v.is_number_integer()) {
        if (v.get<int>() == 1)
            return BranchType::I;
        if (v.get<int>() == -1)
            return BranchType::II;
    }
    config_error("branch types are \"i\"/\"ii\" (or +1/-1)");
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

double parse_cell(std::string_view cell, std::size_t line_no)
{
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' '))
        cell.remove_suffix(1);
    while (!cell.empty() && cell.front() == ' ')
        cell.remove_prefix(1);
    double v = 0.0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size() || !std::isfinite(v))
        throw Error(ErrorCode::Io, "csv line " + std::to_string(line_no) + ": bad number '" + std::string(cell) + "'");
    return v;
}

std::string xml_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string fixed(double v, int digits = 2)
{
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, digits);
    return std::string(buf.data(), res.ptr);
}

// Tick values at 1, 2 or 5 times a power of ten.
std::vector<double> ticks(double lo, double hi, int target = 6)
{
    double span = hi - lo;
    double raw = span / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (span / step <= target)
            break;
    }
    std::vector<double> out;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step)
        out.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
    return out;
}

} // namespace

IdeProblem parse_problem(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        config_error(std::string("malformed JSON: ") + e.what());
    }
    reject_unknown(doc, {"rhs", "t0", "t_end", "x0", "method", "step", "picard", "gh", "sweep"}, "problem");
    for (const char* key : {"rhs", "t0", "t_end", "x0"})
        if (!doc.contains(key))
            config_error(std::string("missing key '") + key + "'");

    IdeProblem p;
    if (!doc["rhs"].is_string())
        config_error("'rhs' must be an expression string");
    p.rhs = parse(doc["rhs"].get<std::string>());
    p.t0 = real_value(doc["t0"], "t0");
    p.t_end = real_value(doc["t_end"], "t_end");
    if (!doc["x0"].is_string())
        config_error("'x0' must be an interval string such as \"[1,2]\"");
    EvalValue x0 = evaluate(parse(doc["x0"].get<std::string>()), Env{});
    if (!std::holds_alternative<Interval>(x0))
        config_error("'x0' must be an interval");
    p.x0 = std::get<Interval>(x0);
    if (doc.contains("method")) {
        if (!doc["method"].is_string())
            config_error("'method' must be a string");
        p.method = parse_method(doc["method"].get<std::string>());
    }
    if (doc.contains("step"))
        p.step = real_value(doc["step"], "step");

    if (doc.contains("picard")) {
        const json& pic = doc["picard"];
        reject_unknown(pic, {"tol", "max_iter"}, "picard");
        if (pic.contains("tol"))
            p.picard_tol = real_value(pic["tol"], "picard.tol");
        if (pic.contains("max_iter"))
            p.picard_max_iter = count_value(pic["max_iter"], "picard.max_iter");
    }
    if (doc.contains("gh")) {
        const json& gh = doc["gh"];
        reject_unknown(gh, {"switch_points", "branches"}, "gh");
        if (gh.contains("switch_points")) {
            if (!gh["switch_points"].is_array())
                config_error("'gh.switch_points' must be an array");
            for (const auto& s : gh["switch_points"])
                p.gh.switch_points.push_back(real_value(s, "gh.switch_points"));
        }
        if (gh.contains("branches")) {
            if (!gh["branches"].is_array())
                config_error("'gh.branches' must be an array of arrays");
            for (const auto& seq : gh["branches"]) {
                if (!seq.is_array())
                    config_error("'gh.branches' must be an array of arrays");
                BranchSequence bs;
                for (const auto& b : seq)
                    bs.push_back(branch_type(b));
                p.gh.branches.push_back(std::move(bs));
            }
        }
    }
    if (doc.contains("sweep")) {
        const json& sw = doc["sweep"];
        reject_unknown(sw, {"density"}, "sweep");
        if (sw.contains("density"))
            p.sweep_density = count_value(sw["density"], "sweep.density");
    }
    validate(p);
    return p;
}

IdeProblem load_problem(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

void write_csv(std::ostream& out, const EndpointTrajectory& x)
{
    out << "t,x_l,x_r,x_c,x_w\n";
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        const auto& v = x.values[i];
        out << format_real17(x.grid.t[i]) << ',' << format_real17(v.lo) << ',' << format_real17(v.hi) << ','
            << format_real17(v.center()) << ',' << format_real17(v.radius()) << '\n';
    }
}

void write_csv(const std::filesystem::path& path, const EndpointTrajectory& x)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    write_csv(out, x);
    if (!out)
        throw Error(ErrorCode::Io, "error writing " + path.string());
}

EndpointTrajectory read_csv(std::istream& in, std::string label)
{
    EndpointTrajectory x;
    x.label = std::move(label);
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::Io, "empty csv");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "t,x_l,x_r,x_c,x_w")
        throw Error(ErrorCode::Io, "csv header must be t,x_l,x_r,x_c,x_w");
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        auto cells = split(line, ',');
        if (cells.size() != 5)
            throw Error(ErrorCode::Io, "csv line " + std::to_string(line_no) + ": expected 5 columns");
        double t = parse_cell(cells[0], line_no);
        double lo = parse_cell(cells[1], line_no);
        double hi = parse_cell(cells[2], line_no);
        if (lo > hi)
            throw Error(ErrorCode::Io, "csv line " + std::to_string(line_no) + ": x_l > x_r");
        if (!x.grid.t.empty() && !(t > x.grid.t.back()))
            throw Error(ErrorCode::Io, "csv line " + std::to_string(line_no) + ": t is not increasing");
        x.grid.t.push_back(t);
        x.values.emplace_back(lo, hi);
    }
    if (x.values.empty())
        throw Error(ErrorCode::Io, "csv has no rows");
    return x;
}

EndpointTrajectory read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    return read_csv(in, path.stem().string());
}

void write_svg(std::ostream& out, const std::vector<EndpointTrajectory>& trajs, std::string_view title)
{
    constexpr double width = 860;
    constexpr double height = 520;
    constexpr double left = 70;
    constexpr double right = 200;
    constexpr double top = 40;
    constexpr double bottom = 50;
    static constexpr std::array<std::string_view, 8> palette{
        "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

    double t_min = std::numeric_limits<double>::infinity();
    double t_max = -t_min;
    double y_min = t_min;
    double y_max = -t_min;
    for (const auto& x : trajs) {
        for (std::size_t i = 0; i < x.values.size(); ++i) {
            t_min = std::min(t_min, x.grid.t[i]);
            t_max = std::max(t_max, x.grid.t[i]);
            y_min = std::min(y_min, x.values[i].lo);
            y_max = std::max(y_max, x.values[i].hi);
        }
    }
    if (!(t_min < t_max)) {
        t_min = 0;
        t_max = 1;
    }
    if (!(y_min < y_max)) {
        y_min = std::isfinite(y_min) ? y_min - 1 : 0;
        y_max = y_min + 2;
    }
    double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto sx = [&](double t) { return left + (t - t_min) / (t_max - t_min) * plot_w; };
    auto sy = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        out << "<text x=\"" << left << "\" y=\"24\" font-size=\"15\">" << xml_escape(title) << "</text>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : ticks(t_min, t_max)) {
        double x = sx(t);
        out << "<line x1=\"" << fixed(x) << "\" y1=\"" << top + plot_h << "\" x2=\"" << fixed(x) << "\" y2=\""
            << top + plot_h + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fixed(x) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">"
            << format_real(t) << "</text>\n";
    }
    for (double y : ticks(y_min, y_max)) {
        double py = sy(y);
        out << "<line x1=\"" << left - 5 << "\" y1=\"" << fixed(py) << "\" x2=\"" << left << "\" y2=\""
            << fixed(py) << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << left << "\" y1=\"" << fixed(py) << "\" x2=\"" << left + plot_w << "\" y2=\""
            << fixed(py) << "\" stroke=\"#e0e0e0\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << fixed(py + 4) << "\" text-anchor=\"end\">"
            << format_real(y) << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">t</text>\n";

    // Thin long polylines to about two points per pixel.
    for (std::size_t k = 0; k < trajs.size(); ++k) {
        const auto& x = trajs[k];
        std::string_view colour = palette[k % palette.size()];
        std::size_t stride = std::max<std::size_t>(1, x.values.size() / static_cast<std::size_t>(2 * plot_w));
        for (int side = 0; side < 2; ++side) {
            out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\""
                << (side == 1 ? " stroke-dasharray=\"6 3\"" : "") << " points=\"";
            for (std::size_t i = 0; i < x.values.size(); i += stride) {
                double v = side == 0 ? x.values[i].lo : x.values[i].hi;
                out << fixed(sx(x.grid.t[i])) << ',' << fixed(sy(v)) << ' ';
            }
            if (!x.values.empty() && (x.values.size() - 1) % stride != 0) {
                double v = side == 0 ? x.values.back().lo : x.values.back().hi;
                out << fixed(sx(x.grid.t.back())) << ',' << fixed(sy(v));
            }
            out << "\"/>\n";
        }
        double ly = top + 10 + 22.0 * static_cast<double>(k);
        double lx = left + plot_w + 15;
        out << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 25 << "\" y2=\"" << ly
            << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << lx + 32 << "\" y=\"" << ly + 4 << "\">"
            << xml_escape(x.label.empty() ? "trajectory " + std::to_string(k + 1) : x.label) << "</text>\n";
    }
    double ly = top + 10 + 22.0 * static_cast<double>(trajs.size()) + 10;
    out << "<text x=\"" << left + plot_w + 15 << "\" y=\"" << ly << "\" fill=\"#555\">solid x_l, dashed x_r</text>\n";
    out << "</svg>\n";
}

void write_svg(const std::filesystem::path& path, const std::vector<EndpointTrajectory>& trajs, std::string_view title)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    write_svg(out, trajs, title);
}

} // namespace intervalkit
