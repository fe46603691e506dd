#include "tdmono/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace tdmono {

namespace {

constexpr double kHermitianTol = 1e-12;   // entrywise input check
constexpr double kJacobiConvFactor = 1e-14;  // off(A) <= factor * ||A||_F
constexpr int kJacobiMaxSweeps = 100;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

void ToleranceConfig::validate() const {
    for (double t : {eig_tol, psd_tol, tie_tol}) {
        require(t > 0.0 && t < 1e-6, "ToleranceConfig: tolerances must lie in (0, 1e-6)");
    }
}

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    require(dim >= 1, "ComplexMatrix: dimension must be positive");
    a_.assign(static_cast<std::size_t>(dim) * dim, complexd{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<complexd>> rows) {
    const int n = static_cast<int>(rows.size());
    ComplexMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        require(static_cast<int>(row.size()) == n, "ComplexMatrix: rows must form a square matrix");
        int j = 0;
        for (complexd v : row) m(i, j++) = v;
        ++i;
    }
    require(m.is_finite(), "ComplexMatrix: entries must be finite");
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

complexd ComplexMatrix::trace() const {
    complexd t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const complexd& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const complexd& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const complexd& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double ComplexMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require(dim_ == o.dim_, "matrix addition: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require(dim_ == o.dim_, "matrix subtraction: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd s) {
    for (complexd& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.dim_ == b.dim_, "matrix product: dimension mismatch");
    const int n = a.dim_;
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const complexd aik = a(i, k);
            if (aik == complexd{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double Spectrum::abs_sum() const {
    double s = 0.0;
    for (double v : values) s += std::abs(v);
    return s;
}

namespace pauli {

const ComplexMatrix& identity2() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

const ComplexMatrix& x() {
    static const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    return m;
}

const ComplexMatrix& y() {
    static const ComplexMatrix m =
        ComplexMatrix::from_rows({{0.0, complexd{0.0, -1.0}}, {complexd{0.0, 1.0}, 0.0}});
    return m;
}

const ComplexMatrix& z() {
    static const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    return m;
}

}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, int max_dim) {
    const int m = a.dim();
    const int n = b.dim();
    require(m >= 1 && n >= 1, "kron: empty factor");
    if (static_cast<long long>(m) * n > max_dim) {
        throw std::invalid_argument("kron: result dimension " + std::to_string(m) + "*" +
                                    std::to_string(n) + " exceeds maximum " +
                                    std::to_string(max_dim));
    }
    ComplexMatrix c(m * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const complexd aij = a(i, j);
            if (aij == complexd{0.0, 0.0}) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) c(i * n + k, j * n + l) = aij * b(k, l);
        }
    }
    return c;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& x, int m, int n) {
    require(m >= 1 && n >= 1 && x.dim() == m * n,
            "partial_trace_second: dimension does not factor as m*n");
    ComplexMatrix r(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            complexd s{0.0, 0.0};
            for (int k = 0; k < n; ++k) s += x(i * n + k, j * n + k);
            r(i, j) = s;
        }
    return r;
}

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.dim() == b.dim(), "trace_product: dimension mismatch");
    require(a.hermiticity_defect() <= kHermitianTol && b.hermiticity_defect() <= kHermitianTol,
            "trace_product: inputs must be Hermitian");
    complexd t{0.0, 0.0};
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t += a(i, j) * b(j, i);
    if (std::abs(t.imag()) > 1e-12)
        throw std::runtime_error("trace_product: unexpected imaginary part");
    return t.real();
}

// Cyclic Jacobi on the symmetrized copy. Eigenvectors are never needed here,
// so rotations update only the matrix. Each rotation touches rows p,q and
// mirrors them into columns p,q through Hermitian symmetry.
Spectrum hermitian_eigenvalues(const ComplexMatrix& h, const ToleranceConfig& tol) {
    tol.validate();
    const int n = h.dim();
    require(n >= 1, "hermitian_eigenvalues: empty matrix");
    require(h.is_finite(), "hermitian_eigenvalues: entries must be finite");
    if (h.hermiticity_defect() > kHermitianTol)
        throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");

    if (n == 1) return Spectrum{{h(0, 0).real()}};

    // symmetrize to kill rounding drift from upstream arithmetic
    std::vector<complexd> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = h(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const complexd v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a[static_cast<std::size_t>(i) * n + j] = v;
            a[static_cast<std::size_t>(j) * n + i] = std::conj(v);
        }
    }

    double fro = 0.0;
    for (const complexd& v : a) fro += std::norm(v);
    fro = std::sqrt(fro);
    const double conv = kJacobiConvFactor * fro;
    const double skip = 0.1 * conv / n;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += std::norm(a[static_cast<std::size_t>(i) * n + j]);
        return std::sqrt(2.0 * s);
    };

    double off = off_norm();
    int sweep = 0;
    while (off > conv) {
        if (sweep++ >= kJacobiMaxSweeps) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "hermitian_eigenvalues: no convergence after %d sweeps, residual %.3e",
                          kJacobiMaxSweeps, off);
            throw std::runtime_error(buf);
        }
        for (int p = 0; p < n - 1; ++p) {
            complexd* rp = &a[static_cast<std::size_t>(p) * n];
            for (int q = p + 1; q < n; ++q) {
                complexd* rq = &a[static_cast<std::size_t>(q) * n];
                const complexd apq = rp[q];
                const double hmag = std::abs(apq);
                if (hmag <= skip) continue;

                const double app = rp[p].real();
                const double aqq = rq[q].real();
                const double tau = (aqq - app) / (2.0 * hmag);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const complexd phase = apq / hmag;  // e^{i arg(apq)}

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const complexd apk = rp[k];
                    const complexd zqk = phase * rq[k];
                    const complexd new_pk = c * apk - s * zqk;
                    const complexd new_qk = s * apk + c * zqk;
                    rp[k] = new_pk;
                    rq[k] = new_qk;
                    a[static_cast<std::size_t>(k) * n + p] = std::conj(new_pk);
                    a[static_cast<std::size_t>(k) * n + q] = std::conj(new_qk);
                }
                rp[p] = c * c * app + s * s * aqq - 2.0 * c * s * hmag;
                rq[q] = s * s * app + c * c * aqq + 2.0 * c * s * hmag;
                rp[q] = 0.0;
                rq[p] = 0.0;
            }
        }
        off = off_norm();
    }

    Spectrum spec;
    spec.values.resize(n);
    for (int i = 0; i < n; ++i) spec.values[i] = a[static_cast<std::size_t>(i) * n + i].real();
    std::sort(spec.values.begin(), spec.values.end());
    return spec;
}

double trace_norm(const ComplexMatrix& h, const ToleranceConfig& tol) {
    return hermitian_eigenvalues(h, tol).abs_sum();
}

}  // namespace tdmono
