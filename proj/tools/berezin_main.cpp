// Command-line front end: sample Berezin ranges of Toeplitz, Weyl-type and
// composition operators, run the verification suites, dump quadrature rules.
//
// Exit codes: 0 success, 1 failed verification check, 2 invalid
// configuration, 3 numeric failure.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "berezin/berezin.hpp"

namespace {

using berezin::cplx;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOptions {
    double gamma = 0.0;
    std::string beta = "0";
    std::string eta = "1";
    std::string symbol;
    std::string grid = "40,64,0.95";
    std::string quad = "64,256";
    std::string out_csv, out_json, out_svg;
    std::uint64_t seed = 12345;
    int n_pairs = 4000;
};

cplx parse_complex(const std::string& text) {
    // "re" or "re,im"
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw std::invalid_argument("expected a number in '" + text + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw std::invalid_argument("expected re,im in '" + text + "'");
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("trailing input in '" + text + "'");
    return {re, im};
}

berezin::GridSpec parse_grid(const std::string& text) {
    std::istringstream in(text);
    berezin::GridSpec g;
    char c1 = 0, c2 = 0;
    if (!(in >> g.n_radii >> c1 >> g.n_angles >> c2 >> g.r_max) || c1 != ',' || c2 != ',')
        throw std::invalid_argument("expected nr,na,rmax in '" + text + "'");
    g.validate();
    return g;
}

std::pair<int, int> parse_quad(const std::string& text) {
    std::istringstream in(text);
    int nr = 0, ntheta = 0;
    char c = 0;
    if (!(in >> nr >> c >> ntheta) || c != ',')
        throw std::invalid_argument("expected nr,ntheta in '" + text + "'");
    return {nr, ntheta};
}

nlohmann::json config_json(const CommonOptions& opt, const std::string& operator_kind) {
    nlohmann::json j;
    j["operator"] = operator_kind;
    j["gamma"] = opt.gamma;
    j["beta"] = opt.beta;
    j["eta"] = opt.eta;
    if (!opt.symbol.empty()) j["symbol"] = nlohmann::json::parse(opt.symbol);
    j["grid"] = opt.grid;
    j["quad"] = opt.quad;
    j["seed"] = opt.seed;
    j["n_pairs"] = opt.n_pairs;
    j["outputs"] = {{"csv", opt.out_csv}, {"json", opt.out_json}, {"svg", opt.out_svg}};
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output path '" + path + "'");
    out << content;
}

/// Shared tail of the toeplitz/weyl/comp subcommands: analyze the sample,
/// emit CSV/JSON/SVG, print a one-line summary.
int emit_outputs(const berezin::RangeSample& sample, const CommonOptions& opt,
                 const std::string& operator_kind) {
    const berezin::ConvexityReport report =
        berezin::convexity_defect(sample, opt.n_pairs, opt.seed);

    double ber = 0.0;
    cplx argmax(0.0, 0.0);
    for (const berezin::RangePoint& rp : sample.points)
        if (std::abs(rp.value) > ber * (1.0 + 1e-12)) {
            ber = std::abs(rp.value);
            argmax = rp.w.value();
        }

    nlohmann::json j;
    j["toolkit"] = std::string(berezin::k_toolkit_name) + " " + berezin::k_toolkit_version;
    j["config"] = config_json(opt, operator_kind);
    j["report"] = berezin::report_to_json(report);
    j["ber"] = ber;
    j["ber_argmax"] = {argmax.real(), argmax.imag()};
    j["min_modulus"] = berezin::min_modulus(sample);
    j["n_points"] = sample.points.size();

    if (!opt.out_csv.empty()) {
        std::ostringstream csv;
        berezin::write_range_csv(csv, sample);
        write_file(opt.out_csv, csv.str());
    }
    if (!opt.out_json.empty()) write_file(opt.out_json, j.dump(2) + "\n");
    if (!opt.out_svg.empty()) {
        std::vector<cplx> values;
        values.reserve(sample.points.size());
        for (const berezin::RangePoint& rp : sample.points) values.push_back(rp.value);
        std::ostringstream svg;
        berezin::write_range_svg(svg, sample, berezin::convex_hull(values));
        write_file(opt.out_svg, svg.str());
    }

    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int run_toeplitz(const CommonOptions& opt) {
    if (opt.symbol.empty())
        throw std::invalid_argument("toeplitz: --symbol is required");
    const berezin::SpaceParams p(opt.gamma);
    const berezin::SymbolExpr symbol = berezin::parse_symbol_json(opt.symbol);
    const auto [nr, ntheta] = parse_quad(opt.quad);
    const berezin::DiskRule rule =
        symbol.catalog() == berezin::SymbolExpr::Catalog::indicator_disk
            ? berezin::disk_rule_split(nr, ntheta, p, symbol.radius())
            : berezin::disk_rule(nr, ntheta, p);
    const berezin::RangeSample sample = berezin::sample_range(
        [&](berezin::DiskPoint w) { return berezin::berezin_toeplitz_quad(symbol, w, p, rule); },
        parse_grid(opt.grid));
    return emit_outputs(sample, opt, "toeplitz");
}

int run_weyl(const CommonOptions& opt) {
    const berezin::SpaceParams p(opt.gamma);
    const berezin::WeylOperator op(berezin::DiskPoint(parse_complex(opt.beta)),
                                   parse_complex(opt.eta), p);
    const berezin::RangeSample sample = berezin::sample_range(
        [&](berezin::DiskPoint xi) { return berezin::weyl_berezin(op, xi); },
        parse_grid(opt.grid));
    return emit_outputs(sample, opt, "weyl");
}

int run_comp(const CommonOptions& opt) {
    const berezin::SpaceParams p(opt.gamma);
    const berezin::Automorphism map(berezin::DiskPoint(parse_complex(opt.beta)),
                                    parse_complex(opt.eta));
    const berezin::RangeSample sample = berezin::sample_range(
        [&](berezin::DiskPoint w) { return berezin::comp_berezin(map, p, w); },
        parse_grid(opt.grid));
    return emit_outputs(sample, opt, "comp");
}

int run_verify(const std::string& suite, const std::string& out_json) {
    const std::vector<berezin::CheckResult> results = berezin::run_verification(suite);
    nlohmann::json j;
    j["toolkit"] = std::string(berezin::k_toolkit_name) + " " + berezin::k_toolkit_version;
    j["suite"] = suite;
    j["checks"] = nlohmann::json::array();
    bool all_pass = true;
    std::vector<std::string> failed;
    for (const berezin::CheckResult& r : results) {
        j["checks"].push_back({{"suite", r.suite},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail}});
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << '/' << r.name << ": "
                  << r.detail << '\n';
        if (!r.pass) {
            all_pass = false;
            failed.push_back(r.name);
        }
    }
    j["all_pass"] = all_pass;
    if (!out_json.empty()) write_file(out_json, j.dump(2) + "\n");
    if (!all_pass) {
        std::cerr << "failed checks:";
        for (const std::string& name : failed) std::cerr << ' ' << name;
        std::cerr << '\n';
        return kExitCheckFailed;
    }
    return kExitOk;
}

int run_rule_dump(double gamma, const std::string& quad, double split,
                  const std::string& out_csv) {
    const berezin::SpaceParams p(gamma);
    const auto [nr, ntheta] = parse_quad(quad);
    const berezin::RadialRule rule = split > 0.0
                                         ? berezin::gauss_jacobi_rule_split(nr, p, split * split)
                                         : berezin::gauss_jacobi_rule(nr, p);
    std::ostringstream out;
    out << "# gamma " << gamma << " n_theta " << ntheta << '\n';
    out << "t,weight\n";
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        out << berezin::detail::full_precision(rule.nodes[i]) << ','
            << berezin::detail::full_precision(rule.weights[i]) << '\n';
    if (!out_csv.empty())
        write_file(out_csv, out.str());
    else
        std::cout << out.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berezin transforms, ranges and numbers of Toeplitz and weighted "
                 "composition operators on weighted Bergman spaces"};
    app.require_subcommand(1);

    CommonOptions opt;
    const auto add_common = [&](CLI::App* cmd, bool with_symbol) {
        cmd->add_option("--gamma", opt.gamma, "weight parameter, > -1");
        cmd->add_option("--beta", opt.beta, "automorphism parameter, re[,im]");
        cmd->add_option("--eta", opt.eta, "unimodular rotation, re[,im]");
        if (with_symbol)
            cmd->add_option("--symbol", opt.symbol, "symbol literal JSON");
        cmd->add_option("--grid", opt.grid, "evaluation grid nr,na,rmax");
        cmd->add_option("--quad", opt.quad, "quadrature resolution nr,ntheta");
        cmd->add_option("--out-csv", opt.out_csv, "range sample CSV path");
        cmd->add_option("--out-json", opt.out_json, "report JSON path");
        cmd->add_option("--out-svg", opt.out_svg, "scatter SVG path");
        cmd->add_option("--seed", opt.seed, "seed for convexity pair sampling");
        cmd->add_option("--pairs", opt.n_pairs, "number of midpoint pairs");
    };

    CLI::App* toeplitz = app.add_subcommand("toeplitz", "Berezin range of a Toeplitz operator");
    add_common(toeplitz, true);
    CLI::App* weyl = app.add_subcommand("weyl", "Berezin range of a Weyl-type operator");
    add_common(weyl, false);
    CLI::App* comp = app.add_subcommand("comp", "Berezin range of a composition operator");
    add_common(comp, false);

    std::string suite = "all";
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run theorem verification suites");
    verify->add_option("suite", suite, "all | toeplitz | weyl | composition | convexity");
    verify->add_option("--out-json", verify_out, "write the machine-readable report here");

    double dump_gamma = 0.0, dump_split = 0.0;
    std::string dump_quad = "64,256", dump_csv;
    CLI::App* rule_dump = app.add_subcommand("rule-dump", "dump the radial quadrature rule");
    rule_dump->add_option("--gamma", dump_gamma, "weight parameter, > -1");
    rule_dump->add_option("--quad", dump_quad, "quadrature resolution nr,ntheta");
    rule_dump->add_option("--split", dump_split, "radial breakpoint |z| in (0,1)");
    rule_dump->add_option("--out-csv", dump_csv, "rule CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadConfig;
    }

    try {
        if (app.got_subcommand(toeplitz)) return run_toeplitz(opt);
        if (app.got_subcommand(weyl)) return run_weyl(opt);
        if (app.got_subcommand(comp)) return run_comp(opt);
        if (app.got_subcommand(verify)) return run_verify(suite, verify_out);
        if (app.got_subcommand(rule_dump))
            return run_rule_dump(dump_gamma, dump_quad, dump_split, dump_csv);
    } catch (const berezin::numeric_error& e) {
        std::cerr << "numeric failure: " << e.what();
        if (e.has_node())
            std::cerr << " at node (" << e.node().real() << ", " << e.node().imag() << ")";
        std::cerr << '\n';
        return kExitNumeric;
    } catch (const berezin::resolution_error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitBadConfig;
    }
    return kExitBadConfig;
}
