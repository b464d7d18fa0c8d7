// Command-line surface: compute Gamma and valuations, run the verification
// suite, sweep mu, and emit tables/CSV/JSON/SVG.
//
// Exit codes: 0 success, 1 verification failure, 2 unsupported regime,
// 64 usage error, 74 I/O error.

#include <qhgamma/qhgamma.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qhgamma;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUnsupportedRegime = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

std::pair<long, long> parse_long_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        long a = std::stol(text.substr(0, dots));
        long b = std::stol(text.substr(dots + 2));
        if (a > b) throw ParseError("empty range: " + text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw ParseError("bad integer range: " + text);
    }
}

struct GridSpec {
    Rational from, to, step;
};

// "a..b" (step = a) or "a..b:s" with exact rational bounds
GridSpec parse_grid(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw ParseError("grid must look like a..b[:step]");
    GridSpec g;
    g.from = parse_rational(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
        g.to = parse_rational(rest);
        g.step = g.from;
    } else {
        g.to = parse_rational(rest.substr(0, colon));
        g.step = parse_rational(rest.substr(colon + 1));
    }
    return g;
}

ManifoldKind parse_manifold(const std::string& name) {
    if (name == "cpn") return ManifoldKind::CPn;
    if (name == "even-hirzebruch") return ManifoldKind::EvenHirzebruch;
    if (name == "odd-hirzebruch") return ManifoldKind::OddHirzebruch;
    throw ParseError("unknown manifold: " + name +
                     " (expected cpn, even-hirzebruch, odd-hirzebruch)");
}

std::optional<Rational> env_window() {
    const char* w = std::getenv("SEIDEL_GAMMA_WINDOW");
    if (!w || !*w) return std::nullopt;
    return parse_rational(w);
}

int write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitIo;
    }
    return 0;
}

int emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    return write_file(path, content);
}

struct CommonOpts {
    std::string manifold = "odd-hirzebruch";
    int n = 2;
    std::string mu_text = "1/2";
    std::string p_text = "1";
    std::string window_text;
    std::string format = "table";
    std::string output;

    ManifoldKind kind() const { return parse_manifold(manifold); }
    Rational mu() const {
        Rational m = parse_rational(mu_text);
        if (m <= 0) throw ParseError("mu must be a positive rational");
        return m;
    }
    std::optional<Rational> window() const {
        if (!window_text.empty()) return parse_rational(window_text);
        return env_window();
    }
};

int cmd_gamma(const CommonOpts& o) {
    ManifoldKind kind = o.kind();
    Rational mu = kind == ManifoldKind::CPn ? Rational(1) : o.mu();
    auto [plo, phi] = parse_long_range(o.p_text);
    LoopClass proto{kind, o.n, mu, 0};
    auto results = gamma_range(proto, plo, phi, o.window());

    if (o.format == "json") {
        Json j = Json::array();
        for (long p = plo; p <= phi; ++p)
            j.push_back(json_gamma(p, results[static_cast<std::size_t>(p - plo)]));
        return emit(o.output, j.dump(2) + "\n");
    }
    if (o.format == "csv") {
        std::string s = "p,gamma_num,gamma_den,lattice,generic\n";
        for (long p = plo; p <= phi; ++p) {
            const auto& g = results[static_cast<std::size_t>(p - plo)];
            s += std::to_string(p) + "," + g.value.get_num().get_str() + "," +
                 g.value.get_den().get_str() + "," + (g.lattice_ok ? "1" : "0") + "," +
                 (g.generic_mu ? "1" : "0") + "\n";
        }
        return emit(o.output, s);
    }
    std::ostringstream s;
    s << "# " << o.manifold;
    if (kind == ManifoldKind::CPn)
        s << " n=" << o.n;
    else
        s << " mu=" << to_string(mu);
    s << "  window=" << to_string(results.front().window) << "\n";
    s << "p\tGamma\taffine\tlattice\tgeneric\n";
    for (long p = plo; p <= phi; ++p) {
        const auto& g = results[static_cast<std::size_t>(p - plo)];
        s << p << "\t" << to_string(g.value) << "\t"
          << (g.affine_form ? to_string(*g.affine_form) : "mixed") << "\t"
          << (g.lattice_ok ? "yes" : "NO") << "\t" << (g.generic_mu ? "yes" : "no") << "\n";
    }
    return emit(o.output, s.str());
}

int cmd_valuations(const CommonOpts& o) {
    ManifoldKind kind = o.kind();
    Rational mu = kind == ManifoldKind::CPn ? Rational(1) : o.mu();
    auto [plo, phi] = parse_long_range(o.p_text);
    if (plo < 1) throw ParseError("valuations expects p >= 1");
    Rational W = o.window() ? *o.window() : default_window(kind, mu, phi);
    auto pres = make_presentation(kind, o.n, mu, -W);

    std::ostringstream s;
    Json j = Json::array();
    const bool json = o.format == "json";
    if (!json) {
        s << "# " << o.manifold << (kind == ManifoldKind::CPn ? " n=" + std::to_string(o.n)
                                                              : " mu=" + to_string(mu))
          << "  window=" << to_string(W) << "\n";
        s << (kind == ManifoldKind::OddHirzebruch
                  ? "p\tnu(u^p)\tnu(u^-p)\tclosed(u^p)\tclosed(u^-p)\n"
                  : "p\tnu(S^p)\tnu(S^-p)\n");
    }
    for (long p = plo; p <= phi; ++p) {
        LoopClass c{kind, o.n, mu, p};
        if (kind == ManifoldKind::OddHirzebruch) {
            QuantumClass up = power(pres->basis_element(1), p);
            QuantumClass un = power(pres->basis_element(1), -p);
            auto vp = val(up), vn = val(un);
            std::string cp = "-", cn = "-";
            if (p >= valuation_closed_form_threshold(mu, +1))
                cp = to_string(valuation_closed_form_odd(mu, p, +1));
            if (p >= valuation_closed_form_threshold(mu, -1))
                cn = to_string(valuation_closed_form_odd(mu, p, -1));
            if (json) {
                Json row;
                row["p"] = p;
                row["nu_pos"] = vp ? Json(to_string(*vp)) : Json(nullptr);
                row["nu_neg"] = vn ? Json(to_string(*vn)) : Json(nullptr);
                row["closed_pos"] = cp;
                row["closed_neg"] = cn;
                j.push_back(std::move(row));
            } else {
                s << p << "\t" << to_string(*vp) << "\t" << to_string(*vn) << "\t" << cp << "\t"
                  << cn << "\n";
            }
        } else {
            auto a = seidel_element_in(pres, c);
            auto b = seidel_element_in(pres, c.inverse());
            auto va = val(a), vb = val(b);
            if (json) {
                Json row;
                row["p"] = p;
                row["nu_pos"] = to_string(*va);
                row["nu_neg"] = to_string(*vb);
                j.push_back(std::move(row));
            } else {
                s << p << "\t" << to_string(*va) << "\t" << to_string(*vb) << "\n";
            }
        }
    }
    return emit(o.output, json ? j.dump(2) + "\n" : s.str());
}

int cmd_verify(const CommonOpts& o, const std::string& only, const std::string& q_text,
               bool corrupt) {
    VerifyOptions v;
    if (!only.empty()) v.only = only;
    if (!o.mu_text.empty() && o.mu_text != "-") v.mu = parse_rational(o.mu_text);
    if (!o.p_text.empty() && o.p_text != "-") v.p_range = parse_long_range(o.p_text);
    if (!q_text.empty() && q_text != "-") v.q_range = parse_long_range(q_text);
    v.corrupt_fixture = corrupt;
    v.window = o.window();

    auto results = run_verifications(v);
    Json j = Json::array();
    for (const auto& r : results) {
        Json row;
        row["check_id"] = r.check_id;
        row["params"] = r.params;
        row["expected"] = r.expected;
        row["got"] = r.got;
        row["pass"] = r.pass;
        j.push_back(std::move(row));
    }
    if (o.format == "table") {
        std::ostringstream s;
        for (const auto& r : results)
            s << (r.pass ? "PASS" : "FAIL") << "  " << r.check_id << "  [" << r.params << "]  "
              << (r.pass ? r.got : "expected: " + r.expected + "; got: " + r.got) << "\n";
        int rc = emit(o.output, s.str());
        if (rc != 0) return rc;
    } else {
        int rc = emit(o.output, j.dump(2) + "\n");
        if (rc != 0) return rc;
    }
    if (!all_passed(results)) {
        for (const auto& r : results) {
            if (!r.pass) {
                std::cerr << "verification failed: " << r.check_id << " [" << r.params
                          << "] expected " << r.expected << "; got " << r.got << "\n";
                break;
            }
        }
        return kExitVerifyFail;
    }
    return 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& grid_text) {
    ManifoldKind kind = o.kind();
    auto [plo, phi] = parse_long_range(o.p_text);
    std::vector<Rational> grid;
    if (grid_text.empty()) {
        grid = default_grid();
    } else {
        GridSpec gs = parse_grid(grid_text);
        grid = make_grid(gs.from, gs.to, gs.step);
    }
    if (grid.empty()) throw ParseError("empty grid");

    std::set<std::string> formats;
    std::stringstream fs(o.format);
    for (std::string tok; std::getline(fs, tok, ',');) formats.insert(tok);

    std::vector<std::vector<SweepSample>> series;
    std::vector<Rational> walls;
    std::ostringstream report;
    std::vector<SweepSample> flat;
    for (long p = plo; p <= phi; ++p) {
        auto samples = sweep_gamma(kind, o.n, p, grid, o.window());
        flat.insert(flat.end(), samples.begin(), samples.end());
        report << "p = " << p << "\n";
        long failed = 0;
        for (const auto& smp : samples)
            if (!smp.gamma) ++failed;
        if (failed == static_cast<long>(samples.size())) {
            report << "  no samples (" << samples.front().error << ")\n";
            series.push_back(samples);
            continue;
        }
        try {
            PiecewiseLinear fit = fit_piecewise_linear(samples);
            for (std::size_t i = 0; i < fit.pieces.size(); ++i) {
                report << "  piece " << i << ": Gamma = " << to_string(fit.pieces[i]);
                if (i < fit.breakpoints.size())
                    report << "   (up to mu = " << to_string(fit.breakpoints[i]) << ")";
                report << "\n";
            }
            report << "  breakpoints:";
            if (fit.breakpoints.empty()) report << " none";
            for (const auto& b : fit.breakpoints) {
                report << " " << to_string(b);
                walls.push_back(b);
            }
            report << "\n";
        } catch (const std::exception& e) {
            report << "  fit: " << e.what() << "\n";
        }
        series.push_back(std::move(samples));
    }
    std::sort(walls.begin(), walls.end());
    walls.erase(std::unique(walls.begin(), walls.end()), walls.end());

    std::cout << report.str();
    const std::string base = o.output;
    int rc = 0;
    if (formats.count("csv")) {
        std::string path = base.empty() ? "sweep.csv" : (formats.size() > 1 ? base + ".csv" : base);
        rc = write_file(path, csv_sweep(flat));
        if (rc != 0) return rc;
        std::cout << "wrote " << path << "\n";
    }
    if (formats.count("svg")) {
        std::string path = base.empty() ? "sweep.svg" : (formats.size() > 1 ? base + ".svg" : base);
        rc = write_file(path, svg_sweep(series, walls));
        if (rc != 0) return rc;
        std::cout << "wrote " << path << "\n";
    }
    if (formats.count("json")) {
        Json all = Json::array();
        for (const auto& run : series) {
            PiecewiseLinear fit;
            const PiecewiseLinear* fp = nullptr;
            try {
                fit = fit_piecewise_linear(run);
                fp = &fit;
            } catch (const std::exception&) {
            }
            all.push_back(json_sweep(run, fp));
        }
        std::string path = base.empty() ? "sweep.json" : (formats.size() > 1 ? base + ".json" : base);
        rc = write_file(path, all.dump(2) + "\n");
        if (rc != 0) return rc;
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum-homology valuations and the spectral pseudo-norm Gamma"};
    app.require_subcommand(1);

    CommonOpts g, v, s, vf;
    std::string verify_only, verify_q = "-", sweep_grid;
    bool corrupt = false;

    auto add_common = [](CLI::App* cmd, CommonOpts& o, bool with_p = true) {
        cmd->add_option("--manifold", o.manifold,
                        "cpn | even-hirzebruch | odd-hirzebruch");
        cmd->add_option("--n", o.n, "projective space dimension (cpn only)");
        cmd->add_option("--mu", o.mu_text, "area parameter, exact rational a/b");
        if (with_p) cmd->add_option("--p", o.p_text, "exponent or range a..b");
        cmd->add_option("--window", o.window_text,
                        "precision window override (also: SEIDEL_GAMMA_WINDOW)");
        cmd->add_option("--format", o.format, "output format");
        cmd->add_option("--output,-o", o.output, "output path");
    };

    auto* cg = app.add_subcommand("gamma", "compute Gamma(generator^p)");
    add_common(cg, g);
    auto* cv = app.add_subcommand("valuations", "valuation tables for powers");
    add_common(cv, v);
    auto* cs = app.add_subcommand("sweep", "sweep Gamma over a mu grid and fit exact pieces");
    add_common(cs, s);
    cs->add_option("--grid", sweep_grid, "mu grid a..b[:step], default 1/60..3:1/60");
    auto* cf = app.add_subcommand("verify", "run the verification suite");
    cf->add_option("--only", verify_only, "run checks whose id starts with this prefix");
    cf->add_option("--mu", vf.mu_text, "restrict to one mu");
    cf->add_option("--p", vf.p_text, "restrict p range a..b");
    cf->add_option("--q", verify_q, "restrict q range a..b");
    cf->add_flag("--corrupt-fixture", corrupt,
                 "negative control: degree-check a deliberately corrupted table");
    cf->add_option("--window", vf.window_text, "precision window override");
    cf->add_option("--format", vf.format, "json | table");
    cf->add_option("--output,-o", vf.output, "output path");
    vf.mu_text = "-";
    vf.p_text = "-";
    vf.format = "json";

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cg->parsed()) return cmd_gamma(g);
        if (cv->parsed()) return cmd_valuations(v);
        if (cs->parsed()) return cmd_sweep(s, sweep_grid);
        if (cf->parsed()) return cmd_verify(vf, verify_only, verify_q, corrupt);
    } catch (const UnsupportedRegimeError& e) {
        std::cerr << "unsupported regime: " << e.what() << "\n";
        return kExitUnsupportedRegime;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
