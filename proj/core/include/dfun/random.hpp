#pragma once

#include "dfun/grid_function.hpp"
#include "dfun/polytope.hpp"

#include <cstdint>

namespace dfun {

/// SplitMix64 in counter form: the k-th output is mix(seed + k * 0x9E3779B97F4A7C15)
/// with Steele, Lea and Flood's finalizer. Outputs depend only on (seed, k),
/// so streams reproduce bit for bit on every platform.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z);

    std::uint64_t next();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);
    /// Independent child stream, keyed by the parent seed and a label.
    CounterRng fork(std::uint64_t label) const;
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

struct LogConcaveParams {
    /// Nodes per axis; 0 picks 257, 65, 33 for n = 1, 2, 3.
    std::size_t nodes = 0;
    double half_width = 6.0;
};

/// f = exp(-v) on the centered cube, with
///   v(x) = max_k (a_k . x + b_k) + x^T Q x / 2,
/// a_k uniform in [-2, 2]^n, b_k uniform in [-1, 1], Q = L L^T + 0.05 I with
/// L lower-triangular, entries uniform in [-0.5, 0.5]. Throws std::invalid_argument
/// for k = 0 or n outside 1..3.
GridFunction generate_random_logconcave(std::uint64_t seed, int n, std::size_t k, const LogConcaveParams& params = {});

/// f = u^(1/alpha) with u(x) = max(0.2 + x^T Q x / 2, max_k (a_k . x + b_k)),
/// the same coefficient ranges as above, so f is alpha-concave. Requires a
/// finite alpha.
GridFunction generate_random_alpha_concave(std::uint64_t seed, int n, std::size_t k, double alpha,
                                           const LogConcaveParams& params = {});

/// Hull of m points uniform in the unit ball, redrawn up to 100 times until
/// full-dimensional. Throws std::invalid_argument for m < n + 1 and
/// std::runtime_error on persistent degeneracy.
Polytope generate_random_polytope(std::uint64_t seed, int n, std::size_t m);

/// generate_random_polytope translated so the vertex mean is the origin,
/// which is then interior.
Polytope generate_random_centered_polytope(std::uint64_t seed, int n, std::size_t m);

/// A point uniform in the polytope by rejection from its bounding box.
Point random_interior_point(CounterRng& rng, const Polytope& p);

} // namespace dfun
