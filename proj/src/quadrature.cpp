#include "xih/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace xih {

namespace {

// Gauss-Kronrod 7/15 node set (positive half; node 7 is the center).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Rule15 {
    double node[15];
    double w15[15];
    double w7[15];  // zero off the embedded Gauss subset
    Rule15() {
        // ascending nodes: -kXgk[0..6], kXgk[7] (= 0), +kXgk[6..0]
        for (int i = 0; i < 15; ++i) {
            int j = i <= 7 ? i : 14 - i;
            double sign = i < 7 ? -1.0 : 1.0;
            node[i] = sign * kXgk[j];
            w15[i] = kWgk[j];
            w7[i] = 0.0;
        }
        // Gauss nodes sit at odd kXgk indices plus the center.
        const int gauss_j[3] = {1, 3, 5};
        for (int g = 0; g < 3; ++g) {
            int j = gauss_j[g];
            w7[j] = kWg[g];
            w7[14 - j] = kWg[g];
        }
        w7[7] = kWg[3];
    }
};
const Rule15& rule() {
    static const Rule15 r;
    return r;
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
    double lo, hi;
    complex value;
    double err;
    double absval;
    int depth;
};

Panel eval_panel(const std::function<complex(double)>& f, double lo, double hi, int depth,
                 std::int64_t& n_evals) {
    const Rule15& r = rule();
    double mid = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    complex s15{0.0, 0.0};
    complex s7{0.0, 0.0};
    double sabs = 0.0;
    for (int i = 0; i < 15; ++i) {
        complex fv = f(mid + half * r.node[i]);
        s15 += r.w15[i] * fv;
        if (r.w7[i] != 0.0) s7 += r.w7[i] * fv;
        sabs += r.w15[i] * std::abs(fv);
    }
    n_evals += 15;
    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.value = half * s15;
    p.absval = half * sabs;
    p.err = std::abs(half * (s15 - s7)) + 10.0 * kEps * std::abs(p.value);
    p.depth = depth;
    return p;
}

std::vector<double> initial_edges(double lo, double hi, double base_width,
                                  const std::vector<double>& breakpoints) {
    std::vector<double> edges;
    int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / base_width)));
    edges.reserve(static_cast<std::size_t>(n) + breakpoints.size() + 1);
    for (int i = 0; i <= n; ++i) edges.push_back(lo + (hi - lo) * static_cast<double>(i) / n);
    for (double b : breakpoints)
        if (b > lo + 1e-12 * (hi - lo) && b < hi - 1e-12 * (hi - lo)) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [&](double a, double b) { return b - a < 1e-12 * (hi - lo); }),
                edges.end());
    edges.front() = lo;
    edges.back() = hi;
    return edges;
}

double truncation_for(const DecayHint& hint, double abs_target, double share,
                      double t_cap = 5000.0) {
    // C e^{-aT} / a <= abs_target * share
    double T = std::log(std::max(hint.scale / (hint.rate * abs_target * share), 2.0)) / hint.rate;
    return std::min(std::max(T, 0.5), t_cap);
}

}  // namespace

QuadResult integrate_semi_infinite(const std::function<complex(double)>& f, DecayHint hint,
                                   const Tolerances& tol, const SemiInfiniteOptions& opt) {
    tol.validate();
    double abs_target = std::max(tol.abs_tol, 1e-16);

    std::vector<Panel> panels;
    double T;
    std::int64_t n_evals = 0;

    if (opt.use_plan != nullptr) {
        if (!opt.use_plan->valid()) throw DomainError("integrate_semi_infinite: invalid plan");
        T = opt.use_plan->truncation_point;
        const auto& e = opt.use_plan->edges;
        panels.reserve(e.size() - 1);
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            panels.push_back(eval_panel(f, e[i], e[i + 1], 0, n_evals));
    } else {
        if (!(hint.rate > 0.0)) throw DomainError("integrate_semi_infinite: decay rate must be > 0");
        if (!(hint.scale > 0.0)) throw DomainError("integrate_semi_infinite: decay scale must be > 0");
        T = truncation_for(hint, abs_target, 0.5);
        double w0 = std::clamp(1.0 / hint.rate, 0.05, 4.0);
        if (opt.max_panel_width > 0.0) w0 = std::min(w0, opt.max_panel_width);
        std::vector<double> edges = initial_edges(0.0, T, w0, opt.breakpoints);
        panels.reserve(edges.size() + 64);
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            panels.push_back(eval_panel(f, edges[i], edges[i + 1], 0, n_evals));

        const std::size_t panel_cap = 20000;
        for (;;) {
            complex total{0.0, 0.0};
            double total_err = 0.0;
            double total_abs = 0.0;
            for (const Panel& p : panels) {
                total += p.value;
                total_err += p.err;
                total_abs += p.absval;
            }
            double target = 0.5 * std::max(abs_target, tol.rel_tol * std::abs(total));
            double floor = 50.0 * kEps * total_abs;
            if (total_err <= std::max(target, floor)) break;
            // worst panel: largest err, ties resolved toward smaller left edge
            std::size_t worst = panels.size();
            for (std::size_t i = 0; i < panels.size(); ++i) {
                const Panel& p = panels[i];
                if (p.depth >= tol.max_refinement_depth) continue;
                if (p.hi - p.lo < 1e-13 * std::max(1.0, T)) continue;
                if (worst == panels.size() || p.err > panels[worst].err ||
                    (p.err == panels[worst].err && p.lo < panels[worst].lo))
                    worst = i;
            }
            if (worst == panels.size() || panels.size() + 1 > panel_cap)
                throw ConvergenceError("integrate_semi_infinite: refinement budget exhausted");
            Panel p = panels[worst];
            double mid = 0.5 * (p.lo + p.hi);
            panels[worst] = eval_panel(f, p.lo, mid, p.depth + 1, n_evals);
            panels.push_back(eval_panel(f, mid, p.hi, p.depth + 1, n_evals));
        }
    }

    std::sort(panels.begin(), panels.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    KahanSumComplex value;
    KahanSum err;
    for (const Panel& p : panels) {
        value.add(p.value);
        err.add(p.err);
    }
    double tail = hint.rate > 0.0 ? hint.scale * std::exp(-hint.rate * T) / hint.rate : 0.0;

    if (opt.record_plan != nullptr) {
        opt.record_plan->edges.clear();
        opt.record_plan->edges.reserve(panels.size() + 1);
        for (const Panel& p : panels) opt.record_plan->edges.push_back(p.lo);
        opt.record_plan->edges.push_back(panels.back().hi);
        opt.record_plan->truncation_point = T;
    }

    QuadResult res;
    res.value = value.value();
    res.err_estimate = err.value() + tail;
    res.n_evals = n_evals;
    res.truncation_point = T;
    return res;
}

// ---------------------------------------------------------------------------
// Tensor-product boxes over R^n.
// ---------------------------------------------------------------------------

namespace {

struct Box {
    double lo[3];
    double hi[3];
    double value;
    double err;
    double absval;
    int depth;
};

Box eval_box(const std::function<double(const std::vector<double>&)>& f, int n, const double* lo,
             const double* hi, int depth, std::int64_t& n_evals) {
    const Rule15& r = rule();
    double mid[3], half[3];
    double scale = 1.0;
    for (int a = 0; a < n; ++a) {
        mid[a] = 0.5 * (lo[a] + hi[a]);
        half[a] = 0.5 * (hi[a] - lo[a]);
        scale *= half[a];
    }
    int total = 1;
    for (int a = 0; a < n; ++a) total *= 15;
    double s15 = 0.0, s7 = 0.0, sabs = 0.0;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int idx = 0; idx < total; ++idx) {
        int rem = idx;
        double w15 = 1.0, w7 = 1.0;
        bool on_gauss = true;
        for (int a = 0; a < n; ++a) {
            int i = rem % 15;
            rem /= 15;
            x[static_cast<std::size_t>(a)] = mid[a] + half[a] * r.node[i];
            w15 *= r.w15[i];
            if (r.w7[i] == 0.0)
                on_gauss = false;
            else
                w7 *= r.w7[i];
        }
        double fv = f(x);
        s15 += w15 * fv;
        sabs += w15 * std::abs(fv);
        if (on_gauss) s7 += w7 * fv;
    }
    n_evals += total;
    Box b{};
    for (int a = 0; a < n; ++a) {
        b.lo[a] = lo[a];
        b.hi[a] = hi[a];
    }
    b.value = scale * s15;
    b.absval = scale * sabs;
    b.err = std::abs(scale * (s15 - s7)) + 10.0 * kEps * std::abs(b.value);
    b.depth = depth;
    return b;
}

bool box_before(const Box& a, const Box& b, int n) {
    for (int i = 0; i < n; ++i) {
        if (a.lo[i] != b.lo[i]) return a.lo[i] < b.lo[i];
    }
    return false;
}

}  // namespace

QuadResult integrate_rn(const std::function<double(const std::vector<double>&)>& f, int n,
                        const std::vector<DecayHint>& hints, const Tolerances& tol,
                        const RnOptions& opt) {
    tol.validate();
    if (n < 1 || n > 3) throw DomainError("integrate_rn: n must be 1, 2, or 3");
    if (static_cast<int>(hints.size()) != n) throw DomainError("integrate_rn: one hint per axis");
    for (const DecayHint& h : hints)
        if (!(h.rate > 0.0) || !(h.scale > 0.0))
            throw DomainError("integrate_rn: decay hints must have positive rate and scale");
    double abs_target = std::max(tol.abs_tol, 1e-16);

    std::vector<bool> folded(static_cast<std::size_t>(n), false);
    for (std::size_t a = 0; a < opt.even_axes.size() && a < folded.size(); ++a)
        folded[a] = opt.even_axes[a];

    std::vector<Box> boxes;
    std::vector<double> T(static_cast<std::size_t>(n));
    std::int64_t n_evals = 0;
    int per_box = 1;
    for (int a = 0; a < n; ++a) per_box *= 15;

    if (opt.use_plan != nullptr) {
        const BoxPlan& plan = *opt.use_plan;
        if (!plan.valid() || plan.n != n) throw DomainError("integrate_rn: invalid plan");
        T = plan.truncation;
        folded.assign(plan.folded.begin(), plan.folded.end());
        for (const auto& bx : plan.boxes)
            boxes.push_back(eval_box(f, n, bx.data(), bx.data() + n, 0, n_evals));
    } else {
        for (int a = 0; a < n; ++a)
            T[static_cast<std::size_t>(a)] =
                truncation_for(hints[static_cast<std::size_t>(a)], abs_target,
                               0.5 / static_cast<double>(n), 2.0e7);
        // initial tensor grid
        std::vector<std::vector<double>> axis_edges(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) {
            double lo = folded[static_cast<std::size_t>(a)] ? 0.0 : -T[static_cast<std::size_t>(a)];
            double hi = T[static_cast<std::size_t>(a)];
            double w0 = std::clamp(1.0 / hints[static_cast<std::size_t>(a)].rate, 0.05, 4.0);
            // keep the initial tensor grid within a fraction of the node
            // budget (the rest is for refinement); otherwise wide spans or
            // n = 3 would blanket the domain with uniform boxes up front
            double cap = std::clamp(
                std::floor(std::pow(static_cast<double>(opt.node_budget) / (8.0 * per_box),
                                    1.0 / static_cast<double>(n))),
                4.0, 1024.0);
            if ((hi - lo) > cap * w0) w0 = (hi - lo) / cap;
            std::vector<double> bps;
            if (static_cast<std::size_t>(a) < opt.breakpoints.size())
                bps = opt.breakpoints[static_cast<std::size_t>(a)];
            axis_edges[static_cast<std::size_t>(a)] = initial_edges(lo, hi, w0, bps);
        }
        std::size_t count = 1;
        for (int a = 0; a < n; ++a) count *= axis_edges[static_cast<std::size_t>(a)].size() - 1;
        if (static_cast<std::int64_t>(count) * per_box > opt.node_budget)
            throw CapacityError("integrate_rn: node budget exceeded by initial grid");
        for (std::size_t ib = 0; ib < count; ++ib) {
            std::size_t rem = ib;
            double lo[3], hi[3];
            for (int a = 0; a < n; ++a) {
                const auto& e = axis_edges[static_cast<std::size_t>(a)];
                std::size_t i = rem % (e.size() - 1);
                rem /= e.size() - 1;
                lo[a] = e[i];
                hi[a] = e[i + 1];
            }
            boxes.push_back(eval_box(f, n, lo, hi, 0, n_evals));
        }

        for (;;) {
            double total = 0.0, total_err = 0.0, total_abs = 0.0;
            for (const Box& b : boxes) {
                total += b.value;
                total_err += b.err;
                total_abs += b.absval;
            }
            double target = 0.5 * std::max(abs_target, tol.rel_tol * std::abs(total));
            double floor = 50.0 * kEps * total_abs;
            if (total_err <= std::max(target, floor)) break;
            std::size_t worst = boxes.size();
            for (std::size_t i = 0; i < boxes.size(); ++i) {
                const Box& b = boxes[i];
                if (b.depth >= tol.max_refinement_depth) continue;
                double wmax = 0.0;
                for (int a = 0; a < n; ++a) wmax = std::max(wmax, b.hi[a] - b.lo[a]);
                if (wmax < 1e-10) continue;
                if (worst == boxes.size() || b.err > boxes[worst].err ||
                    (b.err == boxes[worst].err && box_before(b, boxes[worst], n)))
                    worst = i;
            }
            if (worst == boxes.size())
                throw ConvergenceError("integrate_rn: refinement depth exhausted");
            if (n_evals + 2 * per_box > opt.node_budget)
                throw CapacityError("integrate_rn: node budget exceeded");
            Box b = boxes[worst];
            int split = 0;
            for (int a = 1; a < n; ++a)
                if (b.hi[a] - b.lo[a] > b.hi[split] - b.lo[split]) split = a;
            double mid = 0.5 * (b.lo[split] + b.hi[split]);
            double lo2[3], hi2[3];
            for (int a = 0; a < n; ++a) {
                lo2[a] = b.lo[a];
                hi2[a] = b.hi[a];
            }
            hi2[split] = mid;
            boxes[worst] = eval_box(f, n, lo2, hi2, b.depth + 1, n_evals);
            lo2[split] = mid;
            hi2[split] = b.hi[split];
            boxes.push_back(eval_box(f, n, lo2, hi2, b.depth + 1, n_evals));
        }
    }

    std::sort(boxes.begin(), boxes.end(),
              [n](const Box& a, const Box& b) { return box_before(a, b, n); });
    KahanSum value;
    KahanSum err;
    for (const Box& b : boxes) {
        value.add(b.value);
        err.add(b.err);
    }

    double fold_factor = 1.0;
    for (int a = 0; a < n; ++a)
        if (folded[static_cast<std::size_t>(a)]) fold_factor *= 2.0;

    // tail: per-axis escape beyond T, other axes bounded by their full-line mass
    double tail = 0.0;
    for (int a = 0; a < n; ++a) {
        const DecayHint& h = hints[static_cast<std::size_t>(a)];
        double esc = 2.0 * h.scale * std::exp(-h.rate * T[static_cast<std::size_t>(a)]) / h.rate;
        for (int k = 0; k < n; ++k) {
            if (k == a) continue;
            const DecayHint& hk = hints[static_cast<std::size_t>(k)];
            esc *= 2.0 * hk.scale / hk.rate;
        }
        tail += esc;
    }

    if (opt.record_plan != nullptr) {
        BoxPlan& plan = *opt.record_plan;
        plan.n = n;
        plan.truncation = T;
        plan.folded.assign(folded.begin(), folded.end());
        plan.boxes.clear();
        plan.boxes.reserve(boxes.size());
        for (const Box& b : boxes) {
            std::vector<double> bx(static_cast<std::size_t>(2 * n));
            for (int a = 0; a < n; ++a) {
                bx[static_cast<std::size_t>(a)] = b.lo[a];
                bx[static_cast<std::size_t>(n + a)] = b.hi[a];
            }
            plan.boxes.push_back(std::move(bx));
        }
    }

    QuadResult res;
    res.value = complex(fold_factor * value.value(), 0.0);
    res.err_estimate = fold_factor * err.value() + tail;
    res.n_evals = n_evals;
    res.truncation_point = T[0];
    return res;
}

QuadResult laplace_transform(const std::function<double(double)>& f, complex s, DecayHint hint,
                             const Tolerances& tol) {
    double combined = hint.rate + s.real();
    if (!(combined > 0.0))
        throw DomainError("laplace_transform: combined decay rate must be > 0");
    SemiInfiniteOptions opt;
    if (s.imag() != 0.0) opt.max_panel_width = std::numbers::pi / (4.0 * std::abs(s.imag()));
    auto g = [&f, s](double y) { return f(y) * std::exp(-s * y); };
    return integrate_semi_infinite(g, DecayHint{combined, hint.scale}, tol, opt);
}

}  // namespace xih
