#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "berezin/range_analysis.hpp"
#include "berezin/symbols.hpp"
#include "berezin/version.hpp"

// Wire formats: the CLI symbol literal, RangeSample CSV, ConvexityReport JSON,
// and the SVG scatter. CSV numbers use 17 significant digits so a written
// sample re-parses bit-identically.

namespace berezin {

/// Symbol literal: {"terms": [[m, n, re, im], ...]} or
/// {"catalog": "indicator", "radius": R} or {"catalog": "modsq"}.
inline SymbolExpr parse_symbol_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("symbol literal: invalid JSON: ") + e.what());
    }
    if (j.contains("catalog")) {
        const std::string name = j.at("catalog").get<std::string>();
        if (name == "indicator") {
            if (!j.contains("radius"))
                throw std::invalid_argument("symbol literal: indicator requires \"radius\"");
            return SymbolExpr::indicator_disk(j.at("radius").get<double>());
        }
        if (name == "modsq") return SymbolExpr::modulus_squared();
        throw std::invalid_argument("symbol literal: unknown catalog entry \"" + name + "\"");
    }
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw std::invalid_argument("symbol literal: expected \"terms\" array or \"catalog\"");
    std::vector<SymbolExpr::Term> terms;
    for (const auto& row : j.at("terms")) {
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("symbol literal: each term must be [m, n, re, im]");
        terms.push_back(SymbolExpr::Term{row[0].get<int>(), row[1].get<int>(),
                                         cplx(row[2].get<double>(), row[3].get<double>())});
    }
    return SymbolExpr::from_terms(std::move(terms));
}

inline nlohmann::json symbol_to_json(const SymbolExpr& s) {
    nlohmann::json j;
    switch (s.catalog()) {
        case SymbolExpr::Catalog::indicator_disk:
            j["catalog"] = "indicator";
            j["radius"] = s.radius();
            return j;
        case SymbolExpr::Catalog::modulus_squared:
            j["catalog"] = "modsq";
            return j;
        case SymbolExpr::Catalog::none:
            break;
    }
    j["terms"] = nlohmann::json::array();
    for (const auto& t : s.terms())
        j["terms"].push_back({t.m, t.n, t.coeff.real(), t.coeff.imag()});
    return j;
}

namespace detail {
inline std::string full_precision(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
}  // namespace detail

/// Columns w_re, w_im, val_re, val_im; the grid spec rides in a leading
/// comment so the sample round-trips whole.
inline void write_range_csv(std::ostream& out, const RangeSample& sample) {
    out << "# grid " << sample.grid.n_radii << ',' << sample.grid.n_angles << ','
        << detail::full_precision(sample.grid.r_max) << '\n';
    out << "w_re,w_im,val_re,val_im\n";
    for (const RangePoint& rp : sample.points)
        out << detail::full_precision(rp.w.value().real()) << ','
            << detail::full_precision(rp.w.value().imag()) << ','
            << detail::full_precision(rp.value.real()) << ','
            << detail::full_precision(rp.value.imag()) << '\n';
}

inline RangeSample read_range_csv(std::istream& in) {
    RangeSample sample;
    std::string line;
    bool have_grid = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# grid ", 0) == 0) {
            std::istringstream grid_in(line.substr(7));
            char comma;
            if (!(grid_in >> sample.grid.n_radii >> comma >> sample.grid.n_angles >> comma >>
                  sample.grid.r_max))
                throw std::invalid_argument("range CSV: malformed grid comment");
            have_grid = true;
            continue;
        }
        if (line.rfind("w_re", 0) == 0) continue;  // header row
        std::istringstream row(line);
        double wre, wim, vre, vim;
        char c1, c2, c3;
        if (!(row >> wre >> c1 >> wim >> c2 >> vre >> c3 >> vim))
            throw std::invalid_argument("range CSV: malformed row: " + line);
        sample.points.push_back({DiskPoint(wre, wim), cplx(vre, vim)});
    }
    if (!have_grid)
        throw std::invalid_argument("range CSV: missing grid comment line");
    return sample;
}

inline nlohmann::json report_to_json(const ConvexityReport& report) {
    nlohmann::json j;
    j["defect"] = report.defect;
    j["hull_area"] = report.hull_area;
    j["diameter"] = report.diameter;
    j["collinear"] = report.collinear;
    j["min_modulus"] = report.min_modulus;
    j["verdict"] = to_string(report.verdict);
    j["nn_spacing"] = report.nn_spacing;
    j["threshold"] = report.threshold;
    j["n_distinct"] = report.n_distinct;
    j["n_pairs"] = report.n_pairs;
    j["seed"] = report.seed;
    return j;
}

/// Static scatter of a sampled range: axis box, hull polyline, point cloud.
inline void write_range_svg(std::ostream& out, const RangeSample& sample,
                            const std::vector<cplx>& hull) {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const RangePoint& rp : sample.points) {
        const double x = rp.value.real(), y = rp.value.imag();
        if (first) { xmin = xmax = x; ymin = ymax = y; first = false; }
        xmin = std::min(xmin, x); xmax = std::max(xmax, x);
        ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
    const double spanx = std::max(xmax - xmin, 1e-9);
    const double spany = std::max(ymax - ymin, 1e-9);
    const double span = std::max(spanx, spany);
    const double pad = 0.08 * span;
    const double lo_x = xmin - pad, lo_y = ymin - pad;
    const double scale = 600.0 / (span + 2.0 * pad);
    const auto px = [&](double x) { return 20.0 + (x - lo_x) * scale; };
    const auto py = [&](double y) { return 620.0 - (y - lo_y) * scale; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out << "  <rect x=\"20\" y=\"20\" width=\"600\" height=\"600\" fill=\"white\" "
           "stroke=\"black\"/>\n";
    if (hull.size() >= 2) {
        out << "  <polygon fill=\"none\" stroke=\"#c02020\" stroke-width=\"1.2\" points=\"";
        for (const cplx& h : hull) out << px(h.real()) << ',' << py(h.imag()) << ' ';
        out << "\"/>\n";
    }
    for (const RangePoint& rp : sample.points)
        out << "  <circle cx=\"" << px(rp.value.real()) << "\" cy=\"" << py(rp.value.imag())
            << "\" r=\"1.5\" fill=\"#2040a0\" fill-opacity=\"0.6\"/>\n";
    out << "  <text x=\"24\" y=\"636\" font-size=\"12\">[" << detail::full_precision(xmin)
        << ", " << detail::full_precision(xmax) << "] x [" << detail::full_precision(ymin)
        << ", " << detail::full_precision(ymax) << "]</text>\n";
    out << "</svg>\n";
}

}  // namespace berezin
