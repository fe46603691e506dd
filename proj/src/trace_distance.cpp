#include "tdmono/trace_distance.hpp"

#include <cmath>
#include <stdexcept>

#include "tdmono/sampling.hpp"

namespace tdmono {

double trace_distance(const DensityMatrix& x, const DensityMatrix& y, const ToleranceConfig& tol) {
    if (x.dim() != y.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
    return trace_norm(x.matrix() - y.matrix(), tol);
}

double trace_distance_pure(double overlap) {
    if (!(overlap >= 0.0 && overlap <= 1.0))
        throw std::invalid_argument("trace_distance_pure: overlap must lie in [0, 1]");
    return 2.0 * std::sqrt(1.0 - overlap);
}

double trace_distance_pure_tensor(double overlap) {
    if (!(overlap >= 0.0 && overlap <= 1.0))
        throw std::invalid_argument("trace_distance_pure_tensor: overlap must lie in [0, 1]");
    return 2.0 * std::sqrt(1.0 - overlap * overlap);
}

void CollinearPairSpec::validate() const {
    const double n2 = direction[0] * direction[0] + direction[1] * direction[1] +
                      direction[2] * direction[2];
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-14)
        throw std::invalid_argument("CollinearPairSpec: direction must be a unit vector");
    if (!(r >= 0.0 && r <= 1.0) || !(z >= 0.0 && z <= 1.0))
        throw std::invalid_argument("CollinearPairSpec: r and z must lie in [0, 1]");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("CollinearPairSpec: sign must be +1 or -1");
}

std::pair<DensityMatrix, DensityMatrix> CollinearPairSpec::states(
    const ToleranceConfig& tol) const {
    validate();
    const std::array<double, 3> rv{r * direction[0], r * direction[1], r * direction[2]};
    const std::array<double, 3> zv{sign * z * direction[0], sign * z * direction[1],
                                   sign * z * direction[2]};
    return {DensityMatrix::from_matrix(matrix_from_bloch_components(rv), tol),
            DensityMatrix::from_matrix(matrix_from_bloch_components(zv), tol)};
}

CollinearDistances trace_distance_collinear(const CollinearPairSpec& spec) {
    spec.validate();
    const double base = std::abs(spec.r - spec.sign * spec.z);
    const double opposite = std::abs(spec.r + spec.sign * spec.z);
    return {base, base * (2.0 + opposite) / 2.0};
}

double crosscheck_precision(AnalyticPairClass cls, int d, std::uint64_t n_pairs, RngStream& rng,
                            const ToleranceConfig& tol) {
    double worst = 0.0;
    switch (cls) {
        case AnalyticPairClass::CollinearQubit: {
            if (d != 2)
                throw std::invalid_argument("crosscheck_precision: collinear pairs require d = 2");
            for (std::uint64_t i = 0; i < n_pairs; ++i) {
                const CollinearPairSpec spec = sample_collinear_spec(rng);
                const CollinearDistances analytic = trace_distance_collinear(spec);
                const auto [rho, zeta] = spec.states(tol);
                const double base = trace_distance(rho, zeta, tol);
                const double tensor = trace_norm(
                    kron(rho.matrix(), rho.matrix()) - kron(zeta.matrix(), zeta.matrix()), tol);
                worst = std::max(worst, std::abs(base - analytic.base));
                worst = std::max(worst, std::abs(tensor - analytic.tensor));
            }
            break;
        }
        case AnalyticPairClass::PureState: {
            for (std::uint64_t i = 0; i < n_pairs; ++i) {
                const DensityMatrix x = sample_pure(d, rng, tol);
                const DensityMatrix y = sample_pure(d, rng, tol);
                const double c = std::clamp(trace_product(x.matrix(), y.matrix()), 0.0, 1.0);
                const double base = trace_distance(x, y, tol);
                const double tensor = trace_norm(
                    kron(x.matrix(), x.matrix()) - kron(y.matrix(), y.matrix()), tol);
                worst = std::max(worst, std::abs(base - trace_distance_pure(c)));
                worst = std::max(worst, std::abs(tensor - trace_distance_pure_tensor(c)));
            }
            break;
        }
    }
    return worst;
}

}  // namespace tdmono
