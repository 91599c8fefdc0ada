#ifndef COTANGENT_CLI_HPP
#define COTANGENT_CLI_HPP

/**
 * Command-line front end. The parser and dispatcher live here so the test
 * suite can drive them in-process; tools/cotangent.cpp only forwards argv.
 *
 *   series <target>  fatpoint | fatpoint-module | cone | cone-multigraded | partition | quotient
 *   dim <t|harr>     a single dimension, by formula or (--oracle) by the cochain complexes
 *   verify           formula-versus-oracle suite for the cone
 *   complex          JSON dump of one slot of the toric complex
 *
 * Exit codes: 0 success, 1 verify mismatch, 2 usage, 3 internal invariant failure.
 */

#include <algorithm>
#include <array>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "formulas.hpp"
#include "lattice.hpp"
#include "oracle/fat_point.hpp"
#include "oracle/toric.hpp"
#include "series.hpp"
#include "verify.hpp"

namespace cotangent::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, invariant = 3 };

/// "i,k" -> [i,k]
inline MultiDegree parse_degree(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("degree must be given as i,k, got '" + text + "'");
    try {
        std::size_t used_i = 0, used_k = 0;
        const std::string a = text.substr(0, comma);
        const std::string b = text.substr(comma + 1);
        const long i = std::stol(a, &used_i);
        const long k = std::stol(b, &used_k);
        if (used_i != a.size() || used_k != b.size())
            throw std::invalid_argument("trailing characters");
        return {i, k};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("degree must be given as i,k, got '" + text + "'");
    }
}

inline void print_table(std::ostream& out, const UniSeries& s)
{
    std::vector<std::pair<std::string, std::string>> rows{{"n", "dim"}};
    for (long n = 0; n <= s.order(); ++n)
        rows.emplace_back(std::to_string(n), s.coeff(n).str());
    std::size_t w = 0;
    for (const auto& r : rows)
        w = std::max(w, r.first.size());
    for (const auto& [a, b] : rows)
        out << std::setw(static_cast<int>(w)) << a << "  " << b << '\n';
}

inline void print_table(std::ostream& out, const MultiSeries& s)
{
    std::vector<std::array<std::string, 3>> rows{{"ht", "R", "dim"}};
    for (const auto& [r, c] : s.terms())
        rows.push_back({std::to_string(r.k), r.str(), c.str()});
    std::size_t w0 = 0, w1 = 0;
    for (const auto& r : rows) {
        w0 = std::max(w0, r[0].size());
        w1 = std::max(w1, r[1].size());
    }
    for (const auto& r : rows)
        out << std::setw(static_cast<int>(w0)) << r[0] << "  " << std::left << std::setw(static_cast<int>(w1))
            << r[1] << std::right << "  " << r[2] << '\n';
}

struct Options
{
    std::string target;
    std::string quantity;
    long d = 0;
    long m = 0;
    long order = 4;
    long tau = -1;
    long n = -1;
    std::string degree;
    bool json = false;
    bool oracle = false;
    bool homogeneous = false;
};

namespace detail {

inline void require_flag(bool present, const std::string& message)
{
    if (!present)
        throw std::invalid_argument(message);
}

inline int run_series(const Options& o, std::ostream& out)
{
    require_flag(o.order >= 0, "--order must be >= 0");
    auto emit = [&](const auto& s, std::optional<long> d) {
        if (o.json) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, UniSeries>)
                out << to_json(s, d).dump() << '\n';
            else
                out << to_json(s).dump() << '\n';
        } else {
            print_table(out, s);
        }
        return ExitCode::ok;
    };

    if (o.target == "fatpoint" || o.target == "fatpoint-module") {
        require_flag(o.m >= 2, "--m >= 2 is required for fat point targets");
        if (o.target == "fatpoint")
            return emit(q_fat_point(o.m, o.order), std::nullopt);
        return emit(p_fat_point(o.m, o.order), std::nullopt);
    }
    require_flag(o.d != 0, "--d is required for target " + o.target);
    const ConeContext ctx(o.d);
    if (o.target == "cone")
        return emit(p_cone(o.d, o.order), o.d);
    if (o.target == "cone-multigraded")
        return emit(p_tilde_cone(ctx, o.order), o.d);
    require_flag(o.tau >= 0, "--tau is required for target " + o.target);
    if (o.target == "partition")
        return emit(p_partition_curve({o.d, o.tau}, o.order), o.d);
    return emit(p_quotient({o.d, o.tau}, o.order), o.d);
}

inline int run_dim(const Options& o, std::ostream& out)
{
    const bool harrison = o.quantity == "harr";
    Integer value = 0;

    if (o.target == "fatpoint" || o.target == "fatpoint-module") {
        require_flag(o.m >= 2, "--m >= 2 is required for fat point targets");
        require_flag(o.n >= 1, "--n >= 1 is required for fat point targets");
        if (o.target == "fatpoint") {
            // C coefficients: T^n = Harr^{n+1}
            const long h = harrison ? o.n : o.n + 1;
            value = o.oracle ? Integer(oracle::shuffle_operator_rank(static_cast<int>(o.m), static_cast<int>(h))
                                           .harrison_dim())
                             : fat_point_harrison_dim(o.m, h);
        } else {
            const long h = harrison ? o.n : o.n + 1;
            if (o.oracle)
                value = oracle::fat_point_harrison_A_dims(o.m, h).back().direct;
            else
                value = o.m * fat_point_harrison_dim(o.m, h) - (h > 1 ? fat_point_harrison_dim(o.m, h - 1) : Integer(0));
        }
    } else {
        require_flag(o.d != 0, "--d is required for target " + o.target);
        const ConeContext ctx(o.d);
        if (o.target == "cone") {
            require_flag(o.n >= 1, "--n >= 1 is required for target cone");
            if (harrison)
                value = (q_fat_point(o.d - 1, o.n) + UniSeries::polynomial({2, 2}, o.n)).coeff(o.n);
            else
                value = p_cone(o.d, o.n).coeff(o.n);
        } else if (o.target == "cone-multigraded") {
            require_flag(!o.degree.empty(), "--R is required for target cone-multigraded");
            const MultiDegree r = parse_degree(o.degree);
            if (!in_lambda_plus(ctx, r))
                throw std::invalid_argument("R = " + r.str() + " is not in Lambda_+");
            const long n = o.n >= 0 ? o.n : r.k;
            if (harrison) {
                require_flag(n >= 1, "--n must be >= 1");
                value = o.oracle ? Integer(oracle::homogeneous_split_dim(ctx, r, static_cast<int>(n)))
                                 : (n == r.k ? oracle::cone_harrison_coefficient(ctx, r) : Integer(0));
            } else {
                require_flag(n >= 1, "--n must be >= 1");
                if (o.oracle) {
                    require_flag(n >= 2, "the toric oracle computes T^n for n >= 2");
                    value = oracle::toric_T_dim(ctx, r, static_cast<int>(n));
                } else {
                    value = n == r.k ? p_tilde_cone(ctx, r.k).coeff(r) : Integer(0);
                }
            }
        } else {
            throw std::invalid_argument("dim supports fatpoint, fatpoint-module, cone and cone-multigraded");
        }
    }

    if (o.json)
        out << nlohmann::json{{"dim", cotangent::detail::integer_to_json(value)}}.dump() << '\n';
    else
        out << value << '\n';
    return ExitCode::ok;
}

inline int run_verify(const Options& o, std::ostream& out)
{
    require_flag(o.d != 0, "--d is required");
    require_flag(o.order >= 1, "--max-height must be >= 1");
    const ConeContext ctx(o.d);
    const VerifyReport report = verify_cone(ctx, o.order);
    if (o.json) {
        auto lines = nlohmann::json::array();
        for (const auto& l : report.lines)
            lines.push_back({{"check", l.check}, {"where", l.where}, {"pass", l.pass}, {"detail", l.detail}});
        out << nlohmann::json{{"d", o.d}, {"max_height", o.order}, {"pass", report.all_pass()}, {"lines", lines}}.dump()
            << '\n';
    } else {
        std::size_t w = 0;
        for (const auto& l : report.lines)
            w = std::max(w, l.check.size());
        for (const auto& l : report.lines)
            out << (l.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w)) << l.check
                << std::right << "  " << l.where << "  (" << l.detail << ")\n";
        std::size_t failed = 0;
        for (const auto& l : report.lines)
            failed += !l.pass;
        out << (failed == 0 ? "all " + std::to_string(report.lines.size()) + " checks passed"
                            : std::to_string(failed) + " of " + std::to_string(report.lines.size()) + " checks failed")
            << '\n';
    }
    return report.all_pass() ? ExitCode::ok : ExitCode::mismatch;
}

inline int run_complex(const Options& o, std::ostream& out)
{
    require_flag(o.d != 0, "--d is required");
    require_flag(!o.degree.empty(), "--R is required");
    require_flag(o.n >= 1, "--n >= 1 is required");
    const ConeContext ctx(o.d);
    const MultiDegree r = parse_degree(o.degree);
    const int n = static_cast<int>(o.n);
    auto build = [&](int slot) {
        return o.homogeneous ? oracle::build_homogeneous_slice(ctx, r, slot) : oracle::build_toric_complex(ctx, r, slot);
    };
    const oracle::ToricComplexSlice here = build(n);
    const oracle::ToricComplexSlice next = build(n + 1);
    nlohmann::json j = oracle::to_json(here);
    j["differential"] = oracle::to_json(oracle::toric_differential(here, next));
    out << j.dump() << '\n';
    return ExitCode::ok;
}

} // namespace detail

/// Parses and runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Poincare series of cotangent cohomology"};
    app.name("cotangent");
    app.require_subcommand(1);
    Options o;

    auto* series = app.add_subcommand("series", "print a Poincare series");
    series->add_option("target", o.target, "series to compute")
        ->required()
        ->check(CLI::IsMember({"fatpoint", "fatpoint-module", "cone", "cone-multigraded", "partition", "quotient"}));
    series->add_option("--d", o.d, "cone parameter d >= 3");
    series->add_option("--m", o.m, "fat point dimension m >= 2");
    series->add_option("--order,--cut", o.order, "truncation order (height cut for multigraded series)");
    series->add_option("--tau", o.tau, "tau_H (partition) or tau (quotient)");
    series->add_flag("--json", o.json, "canonical JSON output");

    auto* dim = app.add_subcommand("dim", "print one dimension");
    dim->add_option("quantity", o.quantity, "t: cotangent cohomology, harr: Harrison cohomology")
        ->required()
        ->check(CLI::IsMember({"t", "harr"}));
    dim->add_option("--target", o.target, "fatpoint, fatpoint-module, cone or cone-multigraded")->required();
    dim->add_option("--d", o.d, "cone parameter d >= 3");
    dim->add_option("--m", o.m, "fat point dimension m >= 2");
    dim->add_option("--R", o.degree, "multidegree as i,k");
    dim->add_option("--n", o.n, "cohomological degree (default: ht R)");
    dim->add_flag("--oracle", o.oracle, "compute from the explicit cochain complex");
    dim->add_flag("--json", o.json, "JSON output");

    auto* verify = app.add_subcommand("verify", "formula-versus-oracle checks for the cone");
    verify->add_option("--d", o.d, "cone parameter d >= 3")->required();
    verify->add_option("--max-height", o.order, "largest height checked");
    verify->add_flag("--json", o.json, "JSON report");

    auto* complex = app.add_subcommand("complex", "dump one slot of the toric cochain complex as JSON");
    complex->add_option("--d", o.d, "cone parameter d >= 3")->required();
    complex->add_option("--R", o.degree, "multidegree as i,k")->required();
    complex->add_option("--n", o.n, "cochain degree")->required();
    complex->add_flag("--homogeneous", o.homogeneous, "homogeneous complex in degree -R instead of K_R");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return ExitCode::usage;
    }

    try {
        if (series->parsed())
            return detail::run_series(o, out);
        if (dim->parsed())
            return detail::run_dim(o, out);
        if (verify->parsed())
            return detail::run_verify(o, out);
        return detail::run_complex(o, out);
    } catch (const invariant_violation& e) {
        err << "invariant failure: " << e.what() << '\n';
        return ExitCode::invariant;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return ExitCode::usage;
    }
}

} // namespace cotangent::cli

#endif
