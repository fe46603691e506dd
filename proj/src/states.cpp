#include "tdmono/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tdmono {

namespace {

constexpr double kStructureTol = 1e-12;  // Hermiticity / trace / unitarity checks

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

void BlochVector::validate() const {
    require(std::isfinite(norm) && norm >= 0.0 && norm <= 1.0,
            "BlochVector: norm must lie in [0, 1]");
    require(std::isfinite(theta) && theta >= 0.0 && theta <= std::numbers::pi,
            "BlochVector: theta must lie in [0, pi]");
    require(std::isfinite(phi) && phi >= 0.0 && phi <= 2.0 * std::numbers::pi,
            "BlochVector: phi must lie in [0, 2*pi]");
}

std::array<double, 3> BlochVector::components() const {
    return {norm * std::sin(theta) * std::cos(phi), norm * std::sin(theta) * std::sin(phi),
            norm * std::cos(theta)};
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, const ToleranceConfig& tol) {
    tol.validate();
    require(m.dim() >= 1, "DensityMatrix: empty matrix");
    require(m.is_finite(), "DensityMatrix: entries must be finite");
    if (m.hermiticity_defect() > kStructureTol)
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    const complexd tr = m.trace();
    if (std::abs(tr - complexd{1.0, 0.0}) > kStructureTol)
        throw std::invalid_argument("DensityMatrix: trace deviates from one");
    const Spectrum spec = hermitian_eigenvalues(m, tol);
    if (spec.min() < -tol.psd_tol)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(spec.min()));
    return DensityMatrix(std::move(m));
}

void ProbVector::validate() const {
    require(!probs.empty(), "ProbVector: empty");
    double sum = 0.0;
    for (double p : probs) {
        require(std::isfinite(p) && p >= 0.0, "ProbVector: entries must be nonnegative");
        sum += p;
    }
    require(std::abs(sum - 1.0) <= 1e-12, "ProbVector: entries must sum to one");
}

void SimplexAngles::validate() const {
    for (double t : angles)
        require(std::isfinite(t) && t >= 0.0 && t <= std::numbers::pi / 2.0,
                "SimplexAngles: angles must lie in [0, pi/2]");
}

UnitaryMatrix UnitaryMatrix::from_matrix(ComplexMatrix m) {
    require(m.dim() >= 1, "UnitaryMatrix: empty matrix");
    require(m.is_finite(), "UnitaryMatrix: entries must be finite");
    UnitaryMatrix u(std::move(m));
    if (u.unitarity_defect() > kStructureTol)
        throw std::invalid_argument("UnitaryMatrix: U^dagger U deviates from identity");
    return u;
}

double UnitaryMatrix::unitarity_defect() const {
    const int n = mat_.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            complexd s{0.0, 0.0};
            for (int k = 0; k < n; ++k) s += std::conj(mat_(k, i)) * mat_(k, j);
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

ComplexMatrix matrix_from_bloch_components(const std::array<double, 3>& x) {
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + x[2]);
    m(1, 1) = 0.5 * (1.0 - x[2]);
    m(0, 1) = 0.5 * complexd{x[0], -x[1]};
    m(1, 0) = 0.5 * complexd{x[0], x[1]};
    return m;
}

DensityMatrix bloch_to_density(const BlochVector& b, const ToleranceConfig& tol) {
    b.validate();
    return DensityMatrix::from_matrix(matrix_from_bloch_components(b.components()), tol);
}

std::array<double, 3> bloch_components(const DensityMatrix& rho) {
    require(rho.dim() == 2, "bloch_components: qubit states only");
    const ComplexMatrix& m = rho.matrix();
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

ProbVector simplex_from_angles(const SimplexAngles& a) {
    a.validate();
    const int d = static_cast<int>(a.angles.size()) + 1;
    ProbVector p;
    p.probs.resize(d);
    // x_j for j = 1..d (1-based): sin^2(theta_{j-1}) times the cos^2 tail.
    for (int j = 1; j <= d; ++j) {
        const double s = (j == 1) ? 1.0 : std::sin(a.angles[j - 2]);  // theta_0 = pi/2
        double v = s * s;
        for (int k = j; k <= d - 1; ++k) {
            const double c = std::cos(a.angles[k - 1]);
            v *= c * c;
        }
        p.probs[j - 1] = v;
    }
    p.validate();
    return p;
}

DensityMatrix density_from_spectrum(const ProbVector& p, const UnitaryMatrix& u,
                                    const ToleranceConfig& tol) {
    p.validate();
    require(p.dim() == u.dim(), "density_from_spectrum: dimension mismatch");
    const int d = p.dim();
    ComplexMatrix m(d);
    for (int j = 0; j < d; ++j) {
        const double pj = p.probs[j];
        if (pj == 0.0) continue;
        for (int r = 0; r < d; ++r) {
            const complexd urj = u.matrix()(r, j);
            for (int c = 0; c < d; ++c) m(r, c) += pj * urj * std::conj(u.matrix()(c, j));
        }
    }
    return DensityMatrix::from_matrix(std::move(m), tol);
}

DensityMatrix maximally_mixed(int d) {
    require(d >= 2, "maximally_mixed: dimension must be at least 2");
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0 / d;
    return DensityMatrix::from_matrix(std::move(m));
}

double purity(const DensityMatrix& x) { return trace_product(x.matrix(), x.matrix()); }

}  // namespace tdmono
