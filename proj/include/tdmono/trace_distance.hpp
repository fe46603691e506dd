#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "tdmono/matrix.hpp"
#include "tdmono/rng.hpp"
#include "tdmono/states.hpp"

namespace tdmono {

/// Trace norm of the difference, in [0, 2]. This is the diagonalization
/// path; the closed forms below exist to cross-validate it.
double trace_distance(const DensityMatrix& x, const DensityMatrix& y,
                      const ToleranceConfig& tol = {});

/// Pure pair with overlap c = Tr(xy): distance 2 sqrt(1 - c).
double trace_distance_pure(double overlap);

/// Two-copy distance of a pure pair: 2 sqrt(1 - c^2).
double trace_distance_pure_tensor(double overlap);

/// Qubit pair with parallel or anti-parallel Bloch vectors
/// r_vec = r n_hat, z_vec = sign * z n_hat.
struct CollinearPairSpec {
    std::array<double, 3> direction{0.0, 0.0, 1.0};  // unit vector
    double r = 0.0;                                  // [0, 1]
    double z = 0.0;                                  // [0, 1]
    int sign = +1;                                   // +1 or -1

    void validate() const;
    std::pair<DensityMatrix, DensityMatrix> states(const ToleranceConfig& tol = {}) const;
};

struct CollinearDistances {
    double base;    // |r - sign z|
    double tensor;  // base * (2 + |r + sign z|) / 2
};

CollinearDistances trace_distance_collinear(const CollinearPairSpec& spec);

/// Pair classes whose trace distance has a closed form, used to pin the
/// precision of the numeric path.
enum class AnalyticPairClass { CollinearQubit, PureState };

/// Worst |numeric - analytic| trace distance over n random pairs of the given
/// class, covering both the plain and the two-copy distances. Single stream,
/// sequential; callers parallelize by splitting streams.
double crosscheck_precision(AnalyticPairClass cls, int d, std::uint64_t n_pairs, RngStream& rng,
                            const ToleranceConfig& tol = {});

/// Draw one collinear qubit pair spec: uniform axis, r and z uniform on
/// [0, 1], fair sign. Consumes 5 uniforms.
template <class Rng>
CollinearPairSpec sample_collinear_spec(Rng& rng) {
    CollinearPairSpec spec;
    const double ct = -1.0 + 2.0 * rng.uniform();
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double ph = 2.0 * std::numbers::pi * rng.uniform();
    spec.direction = {st * std::cos(ph), st * std::sin(ph), ct};
    spec.r = rng.uniform();
    spec.z = rng.uniform();
    spec.sign = (rng.uniform() < 0.5) ? +1 : -1;
    return spec;
}

}  // namespace tdmono
