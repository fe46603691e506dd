#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tdmono/matrix.hpp"
#include "tdmono/rng.hpp"
#include "tdmono/states.hpp"

namespace tdmono {

/// State classes drawn by the Monte Carlo experiments. MixedBall is the
/// uniform Bloch-ball measure (qubits only); MixedSpectral combines a flat
/// simplex of eigenvalues with a Haar-random eigenbasis and exists for
/// every dimension.
enum class SlotKind { MixedBall, MixedSpectral, Pure, MaxMixed };

const char* slot_code(SlotKind k);                 // "mb", "ms", "p", "mm"
SlotKind slot_from_code(const std::string& code);  // throws std::invalid_argument

// Samplers are templated on the generator so tests can feed scripted draws.
// The uniform-draw order below is part of the reproducibility contract.

/// Uniform point of the unit Bloch ball. Draws t1, t2, t3 and maps
/// norm = t1^(1/3), theta = arccos(-1 + 2 t2), phi = 2 pi t3.
template <class Rng>
BlochVector sample_bloch_ball(Rng& rng) {
    BlochVector b;
    b.norm = std::cbrt(rng.uniform());
    b.theta = std::acos(-1.0 + 2.0 * rng.uniform());
    b.phi = 2.0 * std::numbers::pi * rng.uniform();
    return b;
}

/// Uniform point of the Bloch sphere: ball sampling with norm pinned to one.
/// Draws t2, t3 only.
template <class Rng>
BlochVector sample_bloch_sphere(Rng& rng) {
    BlochVector b;
    b.norm = 1.0;
    b.theta = std::acos(-1.0 + 2.0 * rng.uniform());
    b.phi = 2.0 * std::numbers::pi * rng.uniform();
    return b;
}

/// Flat (uniform) point of the probability simplex via normalized unit-rate
/// exponential spacings. Draws d uniforms.
template <class Rng>
ProbVector sample_simplex(int d, Rng& rng) {
    if (d < 2) throw std::invalid_argument("sample_simplex: dimension must be at least 2");
    ProbVector p;
    p.probs.resize(d);
    double sum = 0.0;
    for (int j = 0; j < d; ++j) {
        const double e = -std::log(1.0 - rng.uniform());
        p.probs[j] = e;
        sum += e;
    }
    for (double& v : p.probs) v /= sum;
    p.validate();
    return p;
}

namespace detail {

/// Right-multiply u by the two-level rotation acting on columns (i, j):
/// E_ii = cos(phi) e^{i psi}, E_ij = sin(phi) e^{i chi},
/// E_ji = -sin(phi) e^{-i chi}, E_jj = cos(phi) e^{-i psi}.
inline void apply_two_level_rotation(ComplexMatrix& u, int i, int j, double phi, double psi,
                                     double chi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const complexd eii = c * std::polar(1.0, psi);
    const complexd eij = s * std::polar(1.0, chi);
    const complexd eji = -s * std::polar(1.0, -chi);
    const complexd ejj = c * std::polar(1.0, -psi);
    const int n = u.dim();
    for (int r = 0; r < n; ++r) {
        const complexd ui = u(r, i);
        const complexd uj = u(r, j);
        u(r, i) = ui * eii + uj * eji;
        u(r, j) = ui * eij + uj * ejj;
    }
}

}  // namespace detail

/// Haar-distributed unitary built from composed Euler-angle two-level
/// rotations. The composite blocks are
///   E_r = E^{(r,r+1)} E^{(r-1,r)} ... E^{(1,2)},   r = 1..d-1,
/// applied as U = e^{i alpha} E_1 E_2 ... E_{d-1}. Angle laws: psi and chi
/// uniform on [0, 2 pi) (chi only for the trailing E^{(1,2)} factor of each
/// block), and phi = arcsin(xi^(1/(2 m))) for the rotation in plane
/// (m, m+1), xi uniform on [0, 1]. Draw order: alpha, then per block r and
/// plane s = r..1 descending: xi, psi, [chi when s = 1].
template <class Rng>
UnitaryMatrix sample_haar_unitary(int d, Rng& rng) {
    if (d < 2) throw std::invalid_argument("sample_haar_unitary: dimension must be at least 2");
    const double alpha = 2.0 * std::numbers::pi * rng.uniform();
    ComplexMatrix u = ComplexMatrix::identity(d);
    u *= std::polar(1.0, alpha);
    for (int r = 1; r <= d - 1; ++r) {
        for (int s = r; s >= 1; --s) {
            const double xi = rng.uniform();
            const double phi = std::asin(std::pow(xi, 1.0 / (2.0 * s)));
            const double psi = 2.0 * std::numbers::pi * rng.uniform();
            const double chi = (s == 1) ? 2.0 * std::numbers::pi * rng.uniform() : 0.0;
            detail::apply_two_level_rotation(u, s - 1, s, phi, psi, chi);
        }
    }
    return UnitaryMatrix::from_matrix(std::move(u));
}

/// Independent oracle for the Haar measure: QR of a complex Gaussian matrix,
/// with the triangular factor's diagonal rotated to the positive real axis.
template <class Rng>
UnitaryMatrix sample_unitary_ginibre(int d, Rng& rng) {
    if (d < 2) throw std::invalid_argument("sample_unitary_ginibre: dimension must be at least 2");
    ComplexMatrix g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto z = gaussian_pair(rng);
            g(i, j) = complexd{z[0], z[1]};
        }

    // Householder QR; reflectors are accumulated into q afterwards.
    std::vector<std::vector<complexd>> reflectors;
    std::vector<complexd> diag(d);
    for (int k = 0; k < d; ++k) {
        double norm2 = 0.0;
        for (int i = k; i < d; ++i) norm2 += std::norm(g(i, k));
        const double norm = std::sqrt(norm2);
        std::vector<complexd> v(d - k, complexd{0.0, 0.0});
        if (norm > 0.0) {
            const complexd x0 = g(k, k);
            const complexd phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : complexd{1.0, 0.0};
            const complexd alpha = -phase * norm;
            for (int i = k; i < d; ++i) v[i - k] = g(i, k);
            v[0] -= alpha;
            double vnorm2 = 0.0;
            for (const complexd& vi : v) vnorm2 += std::norm(vi);
            if (vnorm2 > 0.0) {
                const double vnorm = std::sqrt(vnorm2);
                for (complexd& vi : v) vi /= vnorm;
                for (int j = k; j < d; ++j) {
                    complexd dot{0.0, 0.0};
                    for (int i = k; i < d; ++i) dot += std::conj(v[i - k]) * g(i, j);
                    dot *= 2.0;
                    for (int i = k; i < d; ++i) g(i, j) -= dot * v[i - k];
                }
            }
            diag[k] = g(k, k);
        } else {
            diag[k] = 0.0;
        }
        reflectors.push_back(std::move(v));
    }

    ComplexMatrix q = ComplexMatrix::identity(d);
    for (int k = d - 1; k >= 0; --k) {
        const auto& v = reflectors[k];
        for (int j = 0; j < d; ++j) {
            complexd dot{0.0, 0.0};
            for (int i = k; i < d; ++i) dot += std::conj(v[i - k]) * q(i, j);
            dot *= 2.0;
            for (int i = k; i < d; ++i) q(i, j) -= dot * v[i - k];
        }
    }
    // Q <- Q diag(r_kk / |r_kk|) makes the factorization unique and Q Haar.
    for (int k = 0; k < d; ++k) {
        const double m = std::abs(diag[k]);
        const complexd lambda = (m > 0.0) ? diag[k] / m : complexd{1.0, 0.0};
        for (int i = 0; i < d; ++i) q(i, k) *= lambda;
    }
    return UnitaryMatrix::from_matrix(std::move(q));
}

/// Projector onto a Haar-random unit vector (normalized complex Gaussian
/// vector; d gaussian pairs = 2 d uniforms). At d = 2 this reproduces the
/// uniform Bloch-sphere measure.
template <class Rng>
DensityMatrix sample_pure(int d, Rng& rng, const ToleranceConfig& tol = {}) {
    if (d < 2) throw std::invalid_argument("sample_pure: dimension must be at least 2");
    std::vector<complexd> psi(d);
    double norm2 = 0.0;
    for (int i = 0; i < d; ++i) {
        const auto z = gaussian_pair(rng);
        psi[i] = complexd{z[0], z[1]};
        norm2 += std::norm(psi[i]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = psi[i] * std::conj(psi[j]) * (inv * inv);
    return DensityMatrix::from_matrix(std::move(m), tol);
}

/// Draw one state of the requested class.
template <class Rng>
DensityMatrix sample_state(SlotKind kind, int d, Rng& rng, const ToleranceConfig& tol = {}) {
    switch (kind) {
        case SlotKind::MixedBall:
            if (d != 2)
                throw std::invalid_argument("sample_state: MixedBall is defined only for d = 2");
            return bloch_to_density(sample_bloch_ball(rng), tol);
        case SlotKind::MixedSpectral: {
            ProbVector p = sample_simplex(d, rng);
            UnitaryMatrix u = sample_haar_unitary(d, rng);
            return density_from_spectrum(p, u, tol);
        }
        case SlotKind::Pure:
            return sample_pure(d, rng, tol);
        case SlotKind::MaxMixed:
            return maximally_mixed(d);
    }
    throw std::invalid_argument("sample_state: unknown slot kind");
}

}  // namespace tdmono
