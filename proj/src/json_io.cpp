#include "ekchain/json_io.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <regex>
#include <stdexcept>
#include <string>

namespace ekchain {

namespace {

Json list(const std::vector<double>& v)
{
    Json out = Json::array();
    for (double x : v)
        out.push_back(x);
    return out;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

[[noreturn]] void bad_coefficient(std::size_t index, std::string_view token)
{
    throw std::invalid_argument("invalid coefficient at index " + std::to_string(index) +
                                ": '" + std::string(token) + "'");
}

}  // namespace

Json to_json(const Annulus& a)
{
    return Json{{"inner", a.inner}, {"outer", a.outer}, {"degenerate", a.degenerate}};
}

Json to_json(Point2 p)
{
    return Json{{"x", p.x}, {"y", p.y}};
}

Json to_json(const Circle& c)
{
    return Json{{"center", to_json(c.center)}, {"radius", c.radius}};
}

Json to_json(const ChainConstruction& chain)
{
    Json sums = Json::array();
    for (Point2 p : chain.sums)
        sums.push_back(to_json(p));
    Json probes = Json::array();
    for (Point2 p : chain.probes)
        probes.push_back(to_json(p));
    Json circles = Json::array();
    for (const Circle& c : chain.circles)
        circles.push_back(to_json(c));
    Json coincident = Json::array();
    for (bool b : chain.coincident)
        coincident.push_back(b);

    Json out;
    out["orientation"] = std::string(to_string(chain.orientation));
    out["theta"] = chain.theta.canonical();
    out["sums"] = std::move(sums);
    out["probes"] = std::move(probes);
    out["circles"] = std::move(circles);
    out["coincident"] = std::move(coincident);
    out["degenerate_axis"] = chain.degenerate_axis;
    return out;
}

Json to_json(const VerificationReport& r)
{
    Json out;
    out["tangency_residuals"] = list(r.tangency_residuals);
    out["membership_residuals"] = list(r.membership_residuals);
    out["probe_residuals"] = list(r.probe_residuals);
    out["collinearity_residuals"] = list(r.collinearity_residuals);
    out["nesting_residuals"] = list(r.nesting_residuals);
    out["nonvanishing_magnitude"] = r.nonvanishing_magnitude;
    out["nonvanishing_floor"] = r.nonvanishing_floor;
    out["scale"] = r.scale;
    out["tolerance"] = r.tolerance;
    out["passed"] = r.passed;
    return out;
}

Json to_json(const AxisReport& r)
{
    return Json{{"endpoint", r.endpoint},
                {"expected_sign", r.expected_sign},
                {"max_off_axis", r.max_off_axis},
                {"passed", r.passed}};
}

Json to_json(const RootSet& r)
{
    Json roots = Json::array();
    for (const Complex& z : r.roots)
        roots.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
    Json out;
    out["roots"] = std::move(roots);
    out["residuals"] = list(r.residuals);
    out["converged"] = r.converged;
    out["iterations"] = r.iterations;
    out["relaxed"] = r.relaxed;
    return out;
}

Json to_json(const MembershipReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(
            Json{{"index", v.index}, {"modulus", v.modulus}, {"margin", v.margin}});
    Json out;
    out["passed"] = r.passed;
    out["roots_converged"] = r.roots_converged;
    out["min_margin"] = r.min_margin;
    out["violations"] = std::move(violations);
    return out;
}

std::vector<double> parse_coefficients(std::string_view text)
{
    text = trim(text);
    std::vector<double> out;
    if (!text.empty() && text.front() == '[') {
        Json arr;
        try {
            arr = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed coefficient array: ") + e.what());
        }
        if (!arr.is_array())
            throw std::invalid_argument("coefficients must be a JSON array");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            if (!arr[k].is_number())
                bad_coefficient(k, arr[k].dump());
            out.push_back(arr[k].get<double>());
        }
    } else {
        std::size_t index = 0;
        while (true) {
            const auto comma = text.find(',');
            const std::string_view token = trim(text.substr(0, comma));
            double v = 0.0;
            if (!parse_double(token, v))
                bad_coefficient(index, token);
            out.push_back(v);
            if (comma == std::string_view::npos)
                break;
            text.remove_prefix(comma + 1);
            ++index;
        }
    }
    if (out.empty())
        throw std::invalid_argument("no coefficients given");
    return out;
}

double parse_theta(std::string_view text)
{
    const std::string s(trim(text));
    static const std::regex pi_literal(R"(([+-]?)(\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?)");
    std::smatch m;
    if (std::regex_match(s, m, pi_literal)) {
        const double k = m[2].length() > 0 ? std::stod(m[2].str()) : 1.0;
        const double d = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (d == 0.0)
            throw std::invalid_argument("theta: zero denominator in '" + s + "'");
        const double value = k * std::numbers::pi / d;
        return m[1].str() == "-" ? -value : value;
    }
    double v = 0.0;
    if (!parse_double(s, v) || !std::isfinite(v))
        throw std::invalid_argument("theta: cannot parse '" + s + "'");
    return v;
}

}  // namespace ekchain
