#pragma once

#include <array>
#include <vector>

#include "tdmono/matrix.hpp"

namespace tdmono {

/// Qubit state parameters: length of the Bloch vector plus spherical angles.
struct BlochVector {
    double norm = 0.0;   // [0, 1]
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi]

    void validate() const;
    std::array<double, 3> components() const;  // (x1, x2, x3)
};

/// Unit-trace positive semidefinite Hermitian matrix. Construction always
/// validates: Hermiticity and trace entrywise, positivity through the
/// eigensolver. Invalid inputs must fail here, not downstream.
class DensityMatrix {
  public:
    static DensityMatrix from_matrix(ComplexMatrix m, const ToleranceConfig& tol = {});

    int dim() const { return mat_.dim(); }
    const ComplexMatrix& matrix() const { return mat_; }

  private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

/// Probability vector: nonnegative entries summing to one within 1e-12.
struct ProbVector {
    std::vector<double> probs;

    int dim() const { return static_cast<int>(probs.size()); }
    void validate() const;
};

/// d-1 angles in [0, pi/2] encoding a point of the probability simplex;
/// the leading angle pi/2 is implicit.
struct SimplexAngles {
    std::vector<double> angles;

    void validate() const;
};

/// Unitary matrix, validated as ||U^dagger U - I||_max <= 1e-12.
class UnitaryMatrix {
  public:
    static UnitaryMatrix from_matrix(ComplexMatrix m);

    int dim() const { return mat_.dim(); }
    const ComplexMatrix& matrix() const { return mat_; }
    double unitarity_defect() const;

  private:
    explicit UnitaryMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

/// (I + sum_j x_j sigma_j) / 2 from raw Bloch components (need not be unit length).
ComplexMatrix matrix_from_bloch_components(const std::array<double, 3>& x);

/// Fano form: 2^-1 (I + |x| (sin t cos p, sin t sin p, cos t) . sigma).
DensityMatrix bloch_to_density(const BlochVector& b, const ToleranceConfig& tol = {});

/// Recover (x1, x2, x3) = (Tr(rho sigma_1), Tr(rho sigma_2), Tr(rho sigma_3)).
std::array<double, 3> bloch_components(const DensityMatrix& rho);

/// x_j = sin^2(theta_{j-1}) * prod_{k=j}^{d-1} cos^2(theta_k), theta_0 = pi/2.
ProbVector simplex_from_angles(const SimplexAngles& a);

/// sum_j p_j |u_j><u_j| with |u_j> the columns of U.
DensityMatrix density_from_spectrum(const ProbVector& p, const UnitaryMatrix& u,
                                    const ToleranceConfig& tol = {});

DensityMatrix maximally_mixed(int d);

double purity(const DensityMatrix& x);  // Tr(x^2)

}  // namespace tdmono
