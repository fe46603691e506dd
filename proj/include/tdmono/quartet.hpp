#pragma once

#include <array>
#include <optional>
#include <string>

#include "tdmono/sampling.hpp"
#include "tdmono/states.hpp"
#include "tdmono/trace_distance.hpp"

namespace tdmono {

/// One quartet case: the classes of the four slots (rho, zeta, xi, eta)
/// and the system dimension.
struct CaseStudy {
    std::array<SlotKind, 4> slots{SlotKind::MixedBall, SlotKind::MixedBall, SlotKind::MixedBall,
                                  SlotKind::MixedBall};
    int dim = 2;

    static constexpr int kTable1Rows = 11;
    static CaseStudy table1_row(int row);  // 1-based, top-to-bottom table order
    static CaseStudy spectral(int d);      // all four slots MixedSpectral

    void validate() const;
    std::string label() const;   // machine label, e.g. "mb+mb+p+mm"
    std::string pretty() const;  // e.g. "(rho,zeta),(|xi>,I/2)"
};

struct Quartet {
    DensityMatrix rho, zeta, xi, eta;
};

/// The four distances of a quartet plus the ordering-reversal verdict.
/// g is present only for flagged quartets.
struct QuartetMetrics {
    double d1;   // d(rho, zeta)
    double d2;   // d(xi, eta)
    double dt1;  // d(rho x rho, zeta x zeta)
    double dt2;  // d(xi x xi, eta x eta)
    bool nmutp;
    std::optional<double> g;
};

/// Flags the quartet when the two pair orderings reverse between single
/// copies and tensor squares: (d1 - d2)(dt1 - dt2) < 0, with both gaps
/// strictly beyond tie_tol. The strength g = |d1 - d2| + |dt1 - dt2|.
/// Tensor-square distances come from one eigensolve of the d^2 x d^2
/// difference each.
QuartetMetrics evaluate_quartet(const Quartet& q, const ToleranceConfig& tol = {});

/// Independent draws for the four slots, in the order rho, zeta, xi, eta.
template <class Rng>
Quartet generate_quartet(const CaseStudy& cs, Rng& rng, const ToleranceConfig& tol = {}) {
    cs.validate();
    DensityMatrix rho = sample_state(cs.slots[0], cs.dim, rng, tol);
    DensityMatrix zeta = sample_state(cs.slots[1], cs.dim, rng, tol);
    DensityMatrix xi = sample_state(cs.slots[2], cs.dim, rng, tol);
    DensityMatrix eta = sample_state(cs.slots[3], cs.dim, rng, tol);
    return Quartet{std::move(rho), std::move(zeta), std::move(xi), std::move(eta)};
}

}  // namespace tdmono
