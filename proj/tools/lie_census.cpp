// lie_census: class and character censuses of GL_n(eps q), checked against
// brute-force matrix groups.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "liecensus/census.hpp"
#include "liecensus/errors.hpp"
#include "liecensus/matgroup.hpp"
#include "liecensus/series.hpp"
#include "liecensus/verify.hpp"
#include "report_format.hpp"

using namespace liecensus;

namespace {

enum Exit : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_inadmissible = 3,
    exit_cap = 4,
    exit_invalid = 5,
    exit_internal = 6,
};

struct Options {
    std::string format = "json";
    std::string family = "gl";
    std::string epsilon = "+1";
    unsigned n = 1;
    unsigned q = 2;
    std::optional<unsigned> k;
    unsigned max_degree = default_series_order;
    std::optional<std::uint64_t> max_order;
    std::uint64_t max_labels = default_label_cap;
};

int parse_epsilon(const std::string& s)
{
    if (s == "+1" || s == "1")
        return 1;
    if (s == "-1")
        return -1;
    throw invalid_argument("epsilon must be +1 or -1, got '" + s + "'");
}

int census_epsilon(const std::string& family) { return family == "gu" ? -1 : 1; }

Family oracle_family(const std::string& f)
{
    if (f == "gl")
        return Family::GL;
    if (f == "sl")
        return Family::SL;
    if (f == "gu")
        return Family::GU;
    return Family::SU;
}

// Explicit --max-order, then LIE_CENSUS_MAX_ORDER, then the built-in default.
std::uint64_t element_cap(const Options& o)
{
    if (o.max_order)
        return *o.max_order;
    return max_order_from_env(default_max_order);
}

void warn_if_large(const GroupSpec& s)
{
    const auto order = closed_form_order(s);
    if (order > soft_order_warning)
        std::cerr << "warning: " << s.name() << " has " << order << " elements; enumeration may be slow\n";
}

void add_group_options(CLI::App* cmd, Options& o, const std::vector<std::string>& families)
{
    cmd->add_option("--family", o.family, "group family")->required()->check(CLI::IsMember(families));
    cmd->add_option("--n", o.n, "matrix dimension")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--q", o.q, "field order (prime power)")->required()->check(CLI::PositiveNumber);
}

void add_format_option(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Conjugacy-class and character censuses of finite general linear and unitary groups"};
    app.require_subcommand(1);
    Options o;

    auto* census = app.add_subcommand("census", "symbolic class censuses of GL_n(q) and GU_n(q)");
    census->require_subcommand(1);
    auto* c_count = census->add_subcommand("count", "c_{n,k}(q) and its value at q");
    add_group_options(c_count, o, {"gl", "gu"});
    c_count->add_option("--k", o.k, "order of the central element (default 1)")->check(CLI::PositiveNumber);
    add_format_option(c_count, o);
    auto* c_labels = census->add_subcommand("labels", "enumerate class labels with their types");
    add_group_options(c_labels, o, {"gl", "gu"});
    c_labels->add_option("--max-labels", o.max_labels, "label enumeration cap")->check(CLI::PositiveNumber);
    add_format_option(c_labels, o);
    auto* c_ratios = census->add_subcommand("ratios", "exact census ratios");
    add_group_options(c_ratios, o, {"gl", "gu"});
    c_ratios->add_option("--max-labels", o.max_labels, "label enumeration cap")->check(CLI::PositiveNumber);
    add_format_option(c_ratios, o);

    auto* series = app.add_subcommand("series", "generating functions");
    series->require_subcommand(1);
    auto* s_coeffs = series->add_subcommand("coeffs", "coefficients of c_k(t)");
    s_coeffs->add_option("--epsilon", o.epsilon, "+1 for GL, -1 for GU")->required();
    s_coeffs->add_option("--k", o.k, "substitution power")->required()->check(CLI::PositiveNumber);
    s_coeffs->add_option("--max-degree", o.max_degree, "truncation degree")->required();
    add_format_option(s_coeffs, o);

    auto* oracle = app.add_subcommand("oracle", "brute-force matrix group");
    oracle->require_subcommand(1);
    auto* o_report = oracle->add_subcommand("report", "conjugacy classes and flag counts");
    add_group_options(o_report, o, {"gl", "sl", "gu", "su"});
    o_report->add_option("--max-order", o.max_order, "element enumeration cap")->check(CLI::PositiveNumber);
    add_format_option(o_report, o);

    auto* verify = app.add_subcommand("verify", "acceptance checks");
    verify->require_subcommand(1);
    auto* v_all = verify->add_subcommand("all", "run every acceptance criterion");
    v_all->add_option("--max-order", o.max_order, "element enumeration cap")->check(CLI::PositiveNumber);
    std::string verify_format = "pretty";
    v_all->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        int status = exit_ok;
        report::Report out;
        if (*c_count) {
            const auto sq = make_signed_q(o.q, census_epsilon(o.family));
            const unsigned k = o.k.value_or(1);
            out = report::census_count(o.n, sq, k);
            if (sq.center_order() % k != 0) {
                std::cerr << "error: k = " << k << " does not divide q - eps = " << sq.center_order()
                          << "; value omitted\n";
                status = exit_inadmissible;
            }
        } else if (*c_labels) {
            out = report::census_labels(o.n, make_signed_q(o.q, census_epsilon(o.family)), o.max_labels);
        } else if (*c_ratios) {
            out = report::census_ratios(o.n, make_signed_q(o.q, census_epsilon(o.family)), o.max_labels);
        } else if (*s_coeffs) {
            out = report::series_coeffs(parse_epsilon(o.epsilon), *o.k, o.max_degree);
        } else if (*o_report) {
            const GroupSpec spec{oracle_family(o.family), o.n, o.q};
            prime_power(o.q);
            if (o.n > max_matrix_dim)
                throw invalid_argument("n must be at most " + std::to_string(max_matrix_dim));
            warn_if_large(spec);
            out = report::oracle(conjugacy_classes(build_group(spec, element_cap(o))));
        } else if (*v_all) {
            const auto cap = element_cap(o);
            const auto results = run_acceptance(cap);
            out = report::verify(results, cap);
            o.format = verify_format;
            if (!out.doc["pass"].get<bool>())
                status = exit_verify_failed;
        }
        report::write(std::cout, out, o.format);
        std::cout.flush();
        return status;
    } catch (const inadmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inadmissible;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << " (raise with --max-order or LIE_CENSUS_MAX_ORDER)\n";
        return exit_cap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
