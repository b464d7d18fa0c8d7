#pragma once

#include "qhgamma/seidel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhgamma {

/// One point of a mu-sweep of Gamma(generator^p). Per-sample failures are
/// recorded in `error` instead of aborting the sweep.
struct SweepSample {
    Rational mu;
    long p = 0;
    std::optional<Rational> gamma;  // absent when error is set
    bool generic_mu = true;
    std::string error;
};

/// mu |-> Gamma as a continuous piecewise-linear function: pieces[k], an
/// affine form const_part + mu_coeff * mu, is valid between breakpoints[k-1]
/// and breakpoints[k] (unbounded at the ends). Adjacent pieces agree at the
/// shared breakpoint.
struct PiecewiseLinear {
    std::vector<Rational> breakpoints;
    std::vector<AffineExponent> pieces;

    Rational eval(const Rational& mu) const {
        std::size_t i = 0;
        while (i < breakpoints.size() && mu > breakpoints[i]) ++i;
        Rational v = pieces[i].const_part + pieces[i].mu_coeff * mu;
        return v;
    }
};

/// Arithmetic grid {from, from+step, ...} up to and including `to`.
inline std::vector<Rational> make_grid(const Rational& from, const Rational& to,
                                       const Rational& step) {
    if (from <= 0 || step <= 0 || to < from)
        throw InvalidParameterError("make_grid: need 0 < from <= to and step > 0");
    std::vector<Rational> g;
    for (Rational x = from; x <= to; x += step) g.push_back(x);
    return g;
}

/// The default sweep grid {k/60 : 1 <= k <= 180}; denominator 60 gives at
/// least three samples per regime and hits the walls 1/2 and 1 exactly once.
inline std::vector<Rational> default_grid() {
    return make_grid(Rational(1, 60), Rational(3), Rational(1, 60));
}

/// One Gamma sample per grid point, each computed independently through
/// seidel::gamma at that mu.
inline std::vector<SweepSample> sweep_gamma(ManifoldKind kind, int n, long p,
                                            const std::vector<Rational>& grid,
                                            std::optional<Rational> window = std::nullopt) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= 0) throw InvalidParameterError("sweep grid values must be positive");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw InvalidParameterError("sweep grid must be sorted and duplicate-free");
    }
    std::vector<SweepSample> out;
    out.reserve(grid.size());
    for (const auto& m : grid) {
        SweepSample s;
        s.mu = m;
        s.p = p;
        try {
            LoopClass c{kind, n, m, p};
            GammaResult g = gamma(c, window);
            s.gamma = g.value;
            s.generic_mu = g.generic_mu;
        } catch (const std::exception& e) {
            s.error = e.what();
            s.generic_mu = false;
        }
        out.push_back(std::move(s));
    }
    return out;
}

namespace detail {

inline AffineExponent line_through(const Rational& x1, const Rational& y1, const Rational& x2,
                                   const Rational& y2) {
    Rational slope = (y2 - y1) / (x2 - x1);
    Rational intercept = y1 - slope * x1;
    return {intercept, slope};
}

inline bool on_line(const AffineExponent& line, const Rational& x, const Rational& y) {
    Rational v = line.const_part + line.mu_coeff * x;
    return v == y;
}

}  // namespace detail

/// Greedy exact line fitting: two consecutive generic samples seed a
/// candidate line; each further sample either lies on it exactly or starts a
/// new piece. Samples flagged non-generic (walls) participate in containment
/// and continuity checks but never seed a line. Breakpoints are the exact
/// intersection points of adjacent pieces and must fall inside the sample gap
/// separating them.
inline PiecewiseLinear fit_piecewise_linear(const std::vector<SweepSample>& samples) {
    if (samples.size() < 3)
        throw InsufficientDataError("fit_piecewise_linear: at least 3 samples required");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!samples[i].gamma)
            throw InsufficientDataError("fit_piecewise_linear: sample without a value at mu = " +
                                        to_string(samples[i].mu));
        if (i > 0 && samples[i].mu <= samples[i - 1].mu)
            throw InvalidParameterError("fit_piecewise_linear: samples must be sorted by mu");
    }

    struct Piece {
        AffineExponent line;
        std::size_t first, last;  // sample index range lying on the line
    };
    std::vector<Piece> pieces;
    std::optional<AffineExponent> cur;
    std::optional<std::size_t> pending;  // a generic sample waiting for its neighbor
    std::size_t first = 0, last = 0;

    auto close = [&]() {
        pieces.push_back({*cur, first, last});
        cur.reset();
    };

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        const Rational& y = *s.gamma;
        if (cur) {
            if (detail::on_line(*cur, s.mu, y)) {
                last = i;
                continue;
            }
            close();
            pending.reset();
        }
        if (!s.generic_mu) {
            pending.reset();  // walls never seed, and break seed adjacency
            continue;
        }
        if (pending && *pending == i - 1) {
            cur = detail::line_through(samples[*pending].mu, *samples[*pending].gamma, s.mu, y);
            first = *pending;
            last = i;
            pending.reset();
        } else {
            pending = i;
        }
    }
    if (cur) close();
    if (pieces.empty())
        throw NonPiecewiseLinearError("fit_piecewise_linear: no adjacent generic samples seed a line",
                                      to_string(samples.front().mu), to_string(samples.back().mu));

    PiecewiseLinear out;
    for (const auto& p : pieces) out.pieces.push_back(p.line);
    for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
        const auto& a = pieces[k];
        const auto& b = pieces[k + 1];
        const Rational lo = samples[a.last].mu;
        const Rational hi = samples[b.first].mu;
        if (a.line.mu_coeff == b.line.mu_coeff)
            throw NonPiecewiseLinearError("fit_piecewise_linear: parallel adjacent pieces (jump)",
                                          to_string(lo), to_string(hi));
        Rational x = (b.line.const_part - a.line.const_part) / (a.line.mu_coeff - b.line.mu_coeff);
        if (x < lo || x > hi)
            throw NonPiecewiseLinearError(
                "fit_piecewise_linear: adjacent pieces meet outside the sample gap", to_string(lo),
                to_string(hi));
        out.breakpoints.push_back(std::move(x));
    }

    // fit-evaluate roundtrip: every sample, walls included, lies on the fit
    for (const auto& s : samples) {
        if (out.eval(s.mu) != *s.gamma)
            throw NonPiecewiseLinearError("fit_piecewise_linear: sample off the fitted function",
                                          to_string(s.mu), to_string(s.mu));
    }
    return out;
}

}  // namespace qhgamma
