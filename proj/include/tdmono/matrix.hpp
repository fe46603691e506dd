#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace tdmono {

using complexd = std::complex<double>;

/// Numeric thresholds shared across the library. Strict-inequality
/// classification (tie_tol) is the sensitive one: quartets whose distance
/// differences fall inside it are treated as ties.
struct ToleranceConfig {
    double eig_tol = 1e-12;
    double psd_tol = 1e-12;
    double tie_tol = 1e-12;

    void validate() const;  // throws std::invalid_argument
};

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);  // zero-initialized
    static ComplexMatrix identity(int dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<complexd>> rows);

    int dim() const { return dim_; }
    bool empty() const { return dim_ == 0; }

    complexd& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const complexd& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * dim_ + j];
    }

    complexd* data() { return a_.data(); }
    const complexd* data() const { return a_.data(); }

    ComplexMatrix adjoint() const;
    complexd trace() const;
    double frobenius_norm() const;
    double max_abs() const;                      // entrywise max modulus
    bool is_finite() const;
    double hermiticity_defect() const;           // max |a_ij - conj(a_ji)|

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(complexd s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(complexd s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    int dim_ = 0;
    std::vector<complexd> a_;
};

/// Real eigenvalues of a Hermitian matrix, sorted ascending.
struct Spectrum {
    std::vector<double> values;

    double sum() const;
    double abs_sum() const;
    double min() const { return values.front(); }
    double max() const { return values.back(); }
};

namespace pauli {
const ComplexMatrix& identity2();
const ComplexMatrix& x();
const ComplexMatrix& y();
const ComplexMatrix& z();
}  // namespace pauli

inline constexpr int kDefaultMaxKronDim = 1024;

/// Kronecker product; entry ((i*n+k),(j*n+l)) = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   int max_dim = kDefaultMaxKronDim);

/// Trace over the second factor of an (m*n)x(m*n) matrix:
/// result(i,j) = sum_k x(i*n+k, j*n+k).
ComplexMatrix partial_trace_second(const ComplexMatrix& x, int m, int n);

/// Tr(a*b) for Hermitian a, b of equal dimension. The product trace is real
/// for Hermitian inputs; the residual imaginary part must stay below 1e-12.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
/// The input must be Hermitian within 1e-12 entrywise; it is symmetrized
/// as (h + h^dagger)/2 before solving. Convergence: off-diagonal Frobenius
/// norm <= 1e-14 * ||h||_F, at most 100 sweeps.
Spectrum hermitian_eigenvalues(const ComplexMatrix& h, const ToleranceConfig& tol = {});

/// Sum of absolute eigenvalues (Schatten 1-norm restricted to Hermitian input).
double trace_norm(const ComplexMatrix& h, const ToleranceConfig& tol = {});

}  // namespace tdmono
