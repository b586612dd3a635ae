#include "ekchain/cli.hpp"

#include "ekchain/chain_kakeya.hpp"
#include "ekchain/chain_tomic.hpp"
#include "ekchain/error.hpp"
#include "ekchain/figure.hpp"
#include "ekchain/json_io.hpp"
#include "ekchain/root_oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace ekchain::cli {

namespace {

struct CliConfig {
    std::string command;
    std::string coeffs;
    std::optional<std::string> theta;
    std::string orientation = "auto";
    double tolerance = kDefaultTolerance;
    std::optional<std::string> output_path;
    std::string format = "json";
    int count = kDefaultSweepCount;
    bool annulus = false;
    FigureStyle style;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Verification outcomes that are reported, not thrown.
class CheckFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double default_tolerance()
{
    if (const char* env = std::getenv("EK_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v))
            return v;
    }
    return kDefaultTolerance;
}

CoefficientSequence coefficients(const CliConfig& cfg)
{
    try {
        return CoefficientSequence(parse_coefficients(cfg.coeffs));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Angle angle(const CliConfig& cfg)
{
    if (!cfg.theta)
        throw UsageError("--theta is required for '" + cfg.command + "'");
    try {
        return Angle(parse_theta(*cfg.theta));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Orientation orientation_for(const CliConfig& cfg, const CoefficientSequence& c)
{
    if (cfg.orientation == "external")
        return Orientation::External;
    if (cfg.orientation == "internal")
        return Orientation::Internal;
    const MonotonicityClass m = classify_monotonicity(c);
    if (is_non_decreasing(m))
        return Orientation::External;
    if (is_non_increasing(m))
        return Orientation::Internal;
    throw Error(ErrorCode::NotMonotone, "coefficients are neither non-decreasing nor non-increasing");
}

ChainConstruction chain_for(Orientation o, const CoefficientSequence& c, const Angle& theta)
{
    return o == Orientation::External ? build_chain(c, theta) : build_chain_internal(c, theta);
}

NonvanishingWitness witness_for(Orientation o, const CoefficientSequence& c, const Angle& theta)
{
    return o == Orientation::External ? nonvanishing_witness(c, theta)
                                      : nonvanishing_witness_internal(c, theta);
}

VerificationReport verify_for(const ChainConstruction& chain, double tol)
{
    return chain.orientation == Orientation::External ? verify_chain(chain, tol)
                                                      : verify_chain_internal(chain, tol);
}

void emit(const CliConfig& cfg, std::ostream& out, const std::string& payload)
{
    if (cfg.output_path) {
        std::ofstream f(*cfg.output_path, std::ios::binary);
        if (!f)
            throw UsageError("cannot open output file '" + *cfg.output_path + "'");
        f << payload;
        return;
    }
    out << payload;
}

std::string dump(const Json& j)
{
    return j.dump() + "\n";
}

std::string text_block(const Json& j)
{
    std::ostringstream s;
    for (const auto& [key, value] : j.items())
        s << key << ": " << value.dump() << "\n";
    return s.str();
}

std::string render(const CliConfig& cfg, const Json& j)
{
    return cfg.format == "text" ? text_block(j) : dump(j);
}

int cmd_bounds(const CliConfig& cfg, std::ostream& out)
{
    const CoefficientSequence c = coefficients(cfg);
    if (c.degree() == 0)
        throw UsageError("bounds need at least two coefficients");
    Json j = to_json(ek_annulus(c));
    if (cfg.format == "text")
        j["monotonicity"] = std::string(to_string(classify_monotonicity(c)));
    emit(cfg, out, render(cfg, j));
    return kExitOk;
}

int cmd_construct(const CliConfig& cfg, std::ostream& out)
{
    const CoefficientSequence c = coefficients(cfg);
    const Angle theta = angle(cfg);
    const ChainConstruction chain = chain_for(orientation_for(cfg, c), c, theta);
    if (cfg.format == "svg")
        emit(cfg, out, render_chain_svg(chain, cfg.style));
    else
        emit(cfg, out, render(cfg, to_json(chain)));
    return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out)
{
    const CoefficientSequence c = coefficients(cfg);
    const Angle theta = angle(cfg);
    const Orientation o = orientation_for(cfg, c);
    const ChainConstruction chain = chain_for(o, c, theta);
    witness_for(o, c, theta);

    bool passed;
    Json j;
    if (chain.degenerate_axis) {
        const AxisReport rep = verify_axis_chain(chain, cfg.tolerance);
        passed = rep.passed;
        j = to_json(rep);
    } else {
        const VerificationReport rep = verify_for(chain, cfg.tolerance);
        passed = rep.passed;
        j = to_json(rep);
    }
    emit(cfg, out, render(cfg, j));
    if (!passed)
        throw CheckFailed("verification failed at tolerance " + std::to_string(cfg.tolerance));
    return kExitOk;
}

int cmd_roots(const CliConfig& cfg, std::ostream& out)
{
    const CoefficientSequence c = coefficients(cfg);
    if (c.degree() == 0)
        throw UsageError("root finding needs at least two coefficients");
    const RootSet roots = find_roots(c);
    emit(cfg, out, render(cfg, to_json(roots)));
    if (!roots.converged)
        throw CheckFailed("root iteration did not converge");
    const MembershipReport rep = check_annulus_membership(roots, ek_annulus(c), cfg.tolerance);
    if (!rep.passed)
        throw CheckFailed("annulus violation: " + std::to_string(rep.violations.size()) +
                          " root(s) outside, worst margin " + std::to_string(rep.min_margin));
    return kExitOk;
}

int cmd_figure(const CliConfig& cfg, std::ostream& out)
{
    if (cfg.format != "svg")
        throw UsageError("figure only emits svg");
    const CoefficientSequence c = coefficients(cfg);
    if (cfg.annulus) {
        if (c.degree() == 0)
            throw UsageError("annulus figures need at least two coefficients");
        emit(cfg, out, render_annulus_svg(ek_annulus(c), find_roots(c), cfg.style));
        return kExitOk;
    }
    const Angle theta = angle(cfg);
    emit(cfg, out, render_chain_svg(chain_for(orientation_for(cfg, c), c, theta), cfg.style));
    return kExitOk;
}

struct SweepPoint {
    double theta = 0.0;
    bool evaluated = false;
    bool passed = false;
    std::string error;
    VerificationReport report;
};

double worst(const std::vector<double>& v)
{
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out)
{
    if (cfg.count <= 0)
        throw UsageError("--count must be positive");
    const CoefficientSequence c = coefficients(cfg);
    const Orientation o = orientation_for(cfg, c);

    std::vector<SweepPoint> grid(static_cast<std::size_t>(cfg.count));
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(grid.size());
        grid[j].theta = t;
        grid[j].evaluated = t > kSweepExclusion && std::abs(t - std::numbers::pi) > kSweepExclusion &&
                            2.0 * std::numbers::pi - t > kSweepExclusion;
    }

    const auto evaluate = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t j = begin; j < grid.size(); j += stride) {
            SweepPoint& pt = grid[j];
            if (!pt.evaluated)
                continue;
            try {
                const Angle theta(pt.theta);
                pt.report = verify_for(chain_for(o, c, theta), cfg.tolerance);
                witness_for(o, c, theta);
                pt.passed = pt.report.passed;
            } catch (const Error& e) {
                pt.error = e.what();
            }
        }
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(evaluate, w, workers);
    for (auto& t : pool)
        t.join();

    // Aggregation walks the grid in index order, independent of scheduling.
    struct Worst {
        double value = 0.0;
        double theta = 0.0;
    };
    Worst tangency, membership, probe, collinearity, nesting;
    Worst smallest{std::numeric_limits<double>::infinity(), 0.0};
    std::size_t evaluated = 0;
    Json failures = Json::array();
    const auto track = [](Worst& w, double v, double t) {
        if (v > w.value)
            w = {v, t};
    };
    for (const SweepPoint& pt : grid) {
        if (!pt.evaluated)
            continue;
        ++evaluated;
        if (!pt.passed)
            failures.push_back(Json{{"theta", pt.theta}, {"error", pt.error}});
        if (!pt.error.empty())
            continue;
        const VerificationReport& r = pt.report;
        const double s = r.scale > 0.0 ? r.scale : 1.0;
        track(tangency, worst(r.tangency_residuals) / s, pt.theta);
        track(membership, worst(r.membership_residuals) / s, pt.theta);
        track(probe, worst(r.probe_residuals) / s, pt.theta);
        track(collinearity, worst(r.collinearity_residuals) / (s * s), pt.theta);
        track(nesting, worst(r.nesting_residuals) / s, pt.theta);
        if (r.nonvanishing_magnitude < smallest.value)
            smallest = {r.nonvanishing_magnitude, pt.theta};
    }

    const auto entry = [](const Worst& w) { return Json{{"value", w.value}, {"theta", w.theta}}; };
    Json j;
    j["orientation"] = std::string(to_string(o));
    j["count"] = cfg.count;
    j["evaluated"] = evaluated;
    j["tolerance"] = cfg.tolerance;
    j["worst_tangency"] = entry(tangency);
    j["worst_membership"] = entry(membership);
    j["worst_probe"] = entry(probe);
    j["worst_collinearity"] = entry(collinearity);
    j["worst_nesting"] = entry(nesting);
    j["min_nonvanishing"] = entry(smallest);
    j["failures"] = failures;
    j["passed"] = failures.empty();
    emit(cfg, out, render(cfg, j));
    if (!failures.empty())
        throw CheckFailed("sweep failed at " + std::to_string(failures.size()) + " grid point(s)");
    return kExitOk;
}

void add_common(CLI::App* sub, CliConfig& cfg)
{
    sub->add_option("--coeffs", cfg.coeffs,
                    "Coefficients, constant term first: 1,2,3 or [1,2,3]")
        ->required();
    sub->add_option("--tolerance", cfg.tolerance, "Verification tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output_path, "Write output to a file instead of stdout");
}

void add_theta(CLI::App* sub, CliConfig& cfg)
{
    sub->add_option("--theta", cfg.theta, "Angle in radians or a k*pi/m literal");
    sub->add_option("--orientation", cfg.orientation, "external, internal or auto")
        ->check(CLI::IsMember({"external", "internal", "auto"}));
}

void add_style(CLI::App* sub, CliConfig& cfg)
{
    sub->add_option("--width", cfg.style.width_px, "SVG width in px")->check(CLI::PositiveNumber);
    sub->add_option("--height", cfg.style.height_px, "SVG height in px")
        ->check(CLI::PositiveNumber);
    sub->add_option("--margin", cfg.style.margin_frac, "Margin fraction in [0, 0.4)")
        ->check(CLI::Range(0.0, 0.399999));
    sub->add_flag("!--no-labels", cfg.style.label_toggle, "Omit point labels");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    cfg.tolerance = default_tolerance();

    CLI::App app{"Eneström–Kakeya annuli and interlacing circle chains"};
    app.require_subcommand(1);

    auto* bounds = app.add_subcommand("bounds", "Eneström–Kakeya annulus of the polynomial");
    add_common(bounds, cfg);
    bounds->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

    auto* construct = app.add_subcommand("construct", "Build the interlacing circle chain");
    add_common(construct, cfg);
    add_theta(construct, cfg);
    add_style(construct, cfg);
    construct->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text", "svg"}));

    auto* verify = app.add_subcommand("verify", "Check every chain identity at a tolerance");
    add_common(verify, cfg);
    add_theta(verify, cfg);
    verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

    auto* roots = app.add_subcommand("roots", "Find all zeros and test annulus membership");
    add_common(roots, cfg);
    roots->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

    auto* figure = app.add_subcommand("figure", "Render the chain (or the annulus) as SVG");
    add_common(figure, cfg);
    add_theta(figure, cfg);
    add_style(figure, cfg);
    figure->add_option("--format", cfg.format)->check(CLI::IsMember({"svg"}));
    figure->add_flag("--annulus", cfg.annulus, "Draw the annulus and the roots instead");

    auto* sweep = app.add_subcommand("sweep", "Verify the chain over a grid of angles");
    add_common(sweep, cfg);
    sweep->add_option("--orientation", cfg.orientation, "external, internal or auto")
        ->check(CLI::IsMember({"external", "internal", "auto"}));
    sweep->add_option("--count", cfg.count, "Number of grid points over [0, 2pi)");
    sweep->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (figure->parsed())
        cfg.format = "svg";
    for (const CLI::App* sub : app.get_subcommands())
        cfg.command = sub->get_name();

    try {
        if (cfg.command == "bounds")
            return cmd_bounds(cfg, out);
        if (cfg.command == "construct")
            return cmd_construct(cfg, out);
        if (cfg.command == "verify")
            return cmd_verify(cfg, out);
        if (cfg.command == "roots")
            return cmd_roots(cfg, out);
        if (cfg.command == "figure")
            return cmd_figure(cfg, out);
        return cmd_sweep(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CheckFailed& e) {
        err << "failed: " << e.what() << "\n";
        return kExitFailed;
    } catch (const Error& e) {
        switch (e.code()) {
        case ErrorCode::RootOfUnityCase:
        case ErrorCode::NonvanishingFloor:
            err << "failed: " << to_string(e.code()) << ": " << e.what() << "\n";
            return kExitFailed;
        default:
            err << "usage error: " << to_string(e.code()) << ": " << e.what() << "\n";
            return kExitUsage;
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace ekchain::cli
