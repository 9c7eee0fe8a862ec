#pragma once

#include <cstdint>
#include <vector>

#include "trimwave/hamiltonian.hpp"

namespace trimwave {

/// Single-site distribution: uniform on the compact support [a, b].
/// The density bound is then exactly 1/(b-a).
struct DistributionSpec {
    double a = 0.0;
    double b = 1.0;

    void validate() const;
    double rho_max() const { return 1.0 / (b - a); }
    double width() const { return b - a; }
    bool contains(double v) const { return v >= a && v <= b; }
};

/// Replayable disorder ensemble: (seed, realization, site) fully determine
/// every sample, independent of iteration order and worker count.
struct EnsembleSpec {
    std::uint64_t seed = 0;
    int realizations = 1;
    DistributionSpec dist;
    TrimMask mask;
};

// Keyed counter construction, platform-stable by using only 64-bit integer
// ops. splitmix64 is the standard finalizer; the chain is
//   counter_hash(seed, r, site) = f(f(f(seed) ^ r) ^ site),  f = splitmix64.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t realization, std::uint64_t site);

/// Top 53 bits mapped to [0, 1).
double uniform01(std::uint64_t h);

/// I.i.d. uniform values on the active sites, zero elsewhere.
/// Throws ParameterError if realization is outside 0..R-1.
PotentialField sample_potential(const EnsembleSpec& ensemble, int realization);

/// V_a = a * chi_Gamma.
PotentialField constant_potential(const TrimMask& mask, double a);

/// Torus translate V'(x1, x2) = V(x1, x2 - j) for a free-direction lattice
/// vector j (one entry per free direction, each a multiple of that
/// direction's period). Requires periodic bc in the free directions.
PotentialField shift_potential(const PotentialField& v, const std::vector<int>& j);

/// True iff v vanishes off Gamma and every on-Gamma value lies in supp P0.
bool is_admissible(const PotentialField& v, const DistributionSpec& dist, const TrimMask& mask);

}  // namespace trimwave
