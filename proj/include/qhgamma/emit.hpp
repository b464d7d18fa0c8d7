#pragma once

#include "qhgamma/sweep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qhgamma {

using Json = nlohmann::ordered_json;

/// Rationals cross the wire as "num/den" strings (lowest terms); CSV uses
/// paired integer columns. Machine outputs carry no floating point.
inline Json json_rational(const Rational& q) { return to_string(q); }

inline Json json_affine(const std::optional<AffineExponent>& e) {
    if (!e) return "mixed";
    Json j;
    j["const"] = to_string(e->const_part);
    j["mu_coeff"] = to_string(e->mu_coeff);
    return j;
}

inline Json json_gamma(long p, const GammaResult& g) {
    Json j;
    j["p"] = p;
    j["gamma"] = json_rational(g.value);
    j["affine_form"] = json_affine(g.affine_form);
    j["lattice_ok"] = g.lattice_ok;
    j["generic_mu"] = g.generic_mu;
    j["window"] = json_rational(g.window);
    return j;
}

inline std::string csv_sweep(const std::vector<SweepSample>& samples) {
    std::string out = "mu_num,mu_den,p,gamma_num,gamma_den,generic\n";
    for (const auto& s : samples) {
        if (!s.gamma) continue;
        out += s.mu.get_num().get_str() + "," + s.mu.get_den().get_str() + "," +
               std::to_string(s.p) + "," + s.gamma->get_num().get_str() + "," +
               s.gamma->get_den().get_str() + "," + (s.generic_mu ? "1" : "0") + "\n";
    }
    return out;
}

inline Json json_sweep(const std::vector<SweepSample>& samples, const PiecewiseLinear* fit) {
    Json j;
    Json arr = Json::array();
    for (const auto& s : samples) {
        Json row;
        row["mu"] = json_rational(s.mu);
        row["p"] = s.p;
        if (s.gamma) {
            row["gamma"] = json_rational(*s.gamma);
            row["generic"] = s.generic_mu;
        } else {
            row["error"] = s.error;
        }
        arr.push_back(std::move(row));
    }
    j["samples"] = std::move(arr);
    if (fit) {
        Json pieces = Json::array();
        for (const auto& p : fit->pieces) {
            Json pc;
            pc["intercept"] = to_string(p.const_part);
            pc["slope"] = to_string(p.mu_coeff);
            pieces.push_back(std::move(pc));
        }
        j["pieces"] = std::move(pieces);
        Json bps = Json::array();
        for (const auto& b : fit->breakpoints) bps.push_back(json_rational(b));
        j["breakpoints"] = std::move(bps);
    }
    return j;
}

/// Dependency-free SVG line chart: one polyline per p, dashed wall markers at
/// the fitted breakpoints. Coordinates are decimal renderings (display only).
inline std::string svg_sweep(const std::vector<std::vector<SweepSample>>& series,
                             const std::vector<Rational>& walls) {
    const int width = 640, height = 420;
    const int ml = 56, mr = 20, mt = 24, mb = 44;
    Rational xmin, xmax, ymax(0);
    bool have = false;
    for (const auto& run : series) {
        for (const auto& s : run) {
            if (!s.gamma) continue;
            if (!have) {
                xmin = xmax = s.mu;
                have = true;
            } else {
                if (s.mu < xmin) xmin = s.mu;
                if (s.mu > xmax) xmax = s.mu;
            }
            if (*s.gamma > ymax) ymax = *s.gamma;
        }
    }
    if (!have || xmax == xmin) xmax = xmin + 1;
    if (ymax == 0) ymax = 1;

    auto xpix = [&](const Rational& x) {
        Rational t = (x - xmin) / (xmax - xmin);
        return to_decimal(Rational(ml) + t * (width - ml - mr), 2);
    };
    auto ypix = [&](const Rational& y) {
        Rational t = y / ymax;
        return to_decimal(Rational(height - mb) - t * (height - mt - mb), 2);
    };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf"};
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    s += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(height - mb) +
         "\" x2=\"" + std::to_string(width - mr) + "\" y2=\"" + std::to_string(height - mb) +
         "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(mt) + "\" x2=\"" +
         std::to_string(ml) + "\" y2=\"" + std::to_string(height - mb) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + std::to_string(width / 2) + "\" y=\"" + std::to_string(height - 10) +
         "\" font-size=\"13\" text-anchor=\"middle\">mu</text>\n";
    s += "<text x=\"16\" y=\"" + std::to_string(height / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         std::to_string(height / 2) + ")\">Gamma</text>\n";
    // x ticks at integers, y ticks at integers up to ymax
    for (Rational x = rceil(xmin); x <= xmax; x += 1) {
        s += "<line x1=\"" + xpix(x) + "\" y1=\"" + std::to_string(height - mb) + "\" x2=\"" +
             xpix(x) + "\" y2=\"" + std::to_string(height - mb + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + xpix(x) + "\" y=\"" + std::to_string(height - mb + 18) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + to_decimal(x, 0) + "</text>\n";
    }
    for (Rational y = 0; y <= ymax; y += 1) {
        s += "<line x1=\"" + std::to_string(ml - 5) + "\" y1=\"" + ypix(y) + "\" x2=\"" +
             std::to_string(ml) + "\" y2=\"" + ypix(y) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + std::to_string(ml - 9) + "\" y=\"" + ypix(y) +
             "\" font-size=\"11\" text-anchor=\"end\" dominant-baseline=\"middle\">" +
             to_decimal(y, 0) + "</text>\n";
    }
    for (const auto& w : walls) {
        s += "<line x1=\"" + xpix(w) + "\" y1=\"" + std::to_string(mt) + "\" x2=\"" + xpix(w) +
             "\" y2=\"" + std::to_string(height - mb) +
             "\" stroke=\"#999\" stroke-dasharray=\"5,4\"/>\n";
        s += "<text x=\"" + xpix(w) + "\" y=\"" + std::to_string(mt - 6) +
             "\" font-size=\"11\" text-anchor=\"middle\">mu=" + to_string(w) + "</text>\n";
    }
    std::size_t ci = 0;
    for (const auto& run : series) {
        std::string pts;
        long p = 0;
        for (const auto& smp : run) {
            if (!smp.gamma) continue;
            p = smp.p;
            pts += xpix(smp.mu) + "," + ypix(*smp.gamma) + " ";
        }
        if (pts.empty()) continue;
        const char* color = palette[ci % (sizeof(palette) / sizeof(palette[0]))];
        s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" +
             pts + "\"/>\n";
        s += "<text x=\"" + std::to_string(width - mr - 4) + "\" y=\"" +
             std::to_string(static_cast<int>(mt + 14 * (ci + 1))) + "\" font-size=\"11\" fill=\"" +
             color + "\" text-anchor=\"end\">p = " + std::to_string(p) + "</text>\n";
        ++ci;
    }
    s += "</svg>\n";
    return s;
}

}  // namespace qhgamma
