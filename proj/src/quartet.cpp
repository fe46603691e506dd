#include "tdmono/quartet.hpp"

#include <cmath>
#include <stdexcept>

namespace tdmono {

CaseStudy CaseStudy::table1_row(int row) {
    const SlotKind mb = SlotKind::MixedBall;
    const SlotKind p = SlotKind::Pure;
    const SlotKind mm = SlotKind::MaxMixed;
    CaseStudy cs;
    cs.dim = 2;
    switch (row) {
        case 1: cs.slots = {mb, mb, mb, mb}; break;
        case 2: cs.slots = {mb, mb, mb, p}; break;
        case 3: cs.slots = {mb, p, mb, p}; break;
        case 4: cs.slots = {mb, mb, p, p}; break;
        case 5: cs.slots = {mb, p, p, p}; break;
        case 6: cs.slots = {mb, mb, mb, mm}; break;
        case 7: cs.slots = {mb, mb, p, mm}; break;
        case 8: cs.slots = {mb, p, mb, mm}; break;
        case 9: cs.slots = {mb, p, p, mm}; break;
        case 10: cs.slots = {p, p, mb, mm}; break;
        case 11: cs.slots = {p, p, p, mm}; break;
        default:
            throw std::invalid_argument("table1_row: row must lie in 1..11");
    }
    return cs;
}

CaseStudy CaseStudy::spectral(int d) {
    CaseStudy cs;
    cs.dim = d;
    cs.slots = {SlotKind::MixedSpectral, SlotKind::MixedSpectral, SlotKind::MixedSpectral,
                SlotKind::MixedSpectral};
    cs.validate();
    return cs;
}

void CaseStudy::validate() const {
    if (dim < 2) throw std::invalid_argument("CaseStudy: dimension must be at least 2");
    for (SlotKind k : slots)
        if (k == SlotKind::MixedBall && dim != 2)
            throw std::invalid_argument("CaseStudy: MixedBall slots require d = 2");
}

std::string CaseStudy::label() const {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i > 0) s += '+';
        s += slot_code(slots[i]);
    }
    return s;
}

std::string CaseStudy::pretty() const {
    static const char* names[4] = {"rho", "zeta", "xi", "eta"};
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        switch (slots[i]) {
            case SlotKind::MixedBall:
            case SlotKind::MixedSpectral: s += names[i]; break;
            case SlotKind::Pure: s += std::string("|") + names[i] + ">"; break;
            case SlotKind::MaxMixed: s += "I/2"; break;
        }
        if (i == 1) s += "),(";
        else if (i == 0 || i == 2) s += ",";
    }
    s += ")";
    return s;
}

QuartetMetrics evaluate_quartet(const Quartet& q, const ToleranceConfig& tol) {
    const int d = q.rho.dim();
    if (q.zeta.dim() != d || q.xi.dim() != d || q.eta.dim() != d)
        throw std::invalid_argument("evaluate_quartet: quartet dimensions differ");

    QuartetMetrics m{};
    m.d1 = trace_distance(q.rho, q.zeta, tol);
    m.d2 = trace_distance(q.xi, q.eta, tol);
    m.dt1 = trace_norm(kron(q.rho.matrix(), q.rho.matrix()) -
                           kron(q.zeta.matrix(), q.zeta.matrix()),
                       tol);
    m.dt2 = trace_norm(kron(q.xi.matrix(), q.xi.matrix()) -
                           kron(q.eta.matrix(), q.eta.matrix()),
                       tol);

    const double gap1 = m.d1 - m.d2;
    const double gap2 = m.dt1 - m.dt2;
    m.nmutp = std::abs(gap1) > tol.tie_tol && std::abs(gap2) > tol.tie_tol &&
              ((gap1 > 0.0) != (gap2 > 0.0));
    if (m.nmutp) m.g = std::abs(gap1) + std::abs(gap2);
    return m;
}

}  // namespace tdmono
