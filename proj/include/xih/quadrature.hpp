#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "xih/types.hpp"

namespace xih {

// A frozen 1-d integration layout: panel edges plus the truncation point.
// Recording a plan on one integrand and replaying it on nearby integrands
// makes differences of integrals (finite-difference stencils) see identical
// quadrature nodes, so the smooth part of the quadrature error cancels.
struct PanelPlan {
    std::vector<double> edges;       // ascending, first = 0 or domain start
    double truncation_point = 0.0;
    bool valid() const { return edges.size() >= 2; }
};

// Same idea for tensor-product boxes over a truncated region of R^n.
struct BoxPlan {
    int n = 0;
    std::vector<std::vector<double>> boxes;  // each box: lo_0..lo_{n-1}, hi_0..hi_{n-1}
    std::vector<double> truncation;          // per-axis T
    std::vector<bool> folded;                // axes integrated on [0,T] and doubled
    bool valid() const { return n > 0 && !boxes.empty(); }
};

struct SemiInfiniteOptions {
    // Panels wider than this are split before evaluation (0 = no cap);
    // used to keep oscillatory factors resolved.
    double max_panel_width = 0.0;
    // Extra initial panel edges (e.g. around kernel spikes); values outside
    // (0, T) are ignored.
    std::vector<double> breakpoints;
    PanelPlan* record_plan = nullptr;     // optional: store the final layout
    const PanelPlan* use_plan = nullptr;  // optional: reuse a stored layout verbatim
};

QuadResult integrate_semi_infinite(const std::function<complex(double)>& f, DecayHint hint,
                                   const Tolerances& tol = {},
                                   const SemiInfiniteOptions& opt = {});

struct RnOptions {
    std::vector<bool> even_axes;     // axis folded to [0,T] and doubled when true
    std::int64_t node_budget = 10000000;
    std::vector<std::vector<double>> breakpoints;  // optional per-axis initial edges
    BoxPlan* record_plan = nullptr;
    const BoxPlan* use_plan = nullptr;
};

QuadResult integrate_rn(const std::function<double(const std::vector<double>&)>& f, int n,
                        const std::vector<DecayHint>& hints, const Tolerances& tol = {},
                        const RnOptions& opt = {});

// int_0^infty f(y) e^{-s y} dy. The hint describes f alone; its rate may be
// negative (growth), and the combined rate hint.rate + Re(s) must be positive.
QuadResult laplace_transform(const std::function<double(double)>& f, complex s, DecayHint hint,
                             const Tolerances& tol = {});

}  // namespace xih
