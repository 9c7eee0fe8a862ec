#include "trimwave/disorder.hpp"

#include <string>

namespace trimwave {

void DistributionSpec::validate() const {
    if (!(b > a))
        throw ConfigurationError("distribution support must have b > a");
}

std::uint64_t splitmix64(std::uint64_t x) {
    std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t realization, std::uint64_t site) {
    return splitmix64(splitmix64(splitmix64(seed) ^ realization) ^ site);
}

double uniform01(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

PotentialField sample_potential(const EnsembleSpec& ensemble, int realization) {
    ensemble.dist.validate();
    if (realization < 0 || realization >= ensemble.realizations)
        throw ParameterError("realization index " + std::to_string(realization) + " outside 0.." +
                             std::to_string(ensemble.realizations - 1));

    const TrimMask& mask = ensemble.mask;
    Eigen::VectorXd values = Eigen::VectorXd::Zero(mask.box().site_count());
    const double width = ensemble.dist.width();
    for (int s = 0; s < mask.box().site_count(); ++s) {
        if (!mask.active(s)) continue;
        const std::uint64_t h = counter_hash(ensemble.seed, static_cast<std::uint64_t>(realization),
                                             static_cast<std::uint64_t>(s));
        values[s] = ensemble.dist.a + width * uniform01(h);
    }
    return PotentialField(mask, std::move(values));
}

PotentialField constant_potential(const TrimMask& mask, double a) {
    Eigen::VectorXd values = Eigen::VectorXd::Zero(mask.box().site_count());
    for (int s = 0; s < mask.box().site_count(); ++s)
        if (mask.active(s)) values[s] = a;
    return PotentialField(mask, std::move(values));
}

PotentialField shift_potential(const PotentialField& v, const std::vector<int>& j) {
    const LatticeBox& box = v.box();
    const int d1 = box.confined_dims();
    const int d2 = box.dim() - d1;
    if (static_cast<int>(j.size()) != d2)
        throw InvalidShift("shift vector must have one entry per free direction");
    for (int nu = 0; nu < d2; ++nu) {
        if (j[nu] % box.periods()[d1 + nu] != 0)
            throw InvalidShift("shift entries must be multiples of the free-direction periods");
        if (box.bc()[d1 + nu] != Bc::Periodic)
            throw InvalidShift("shifts need periodic bc in the free directions");
    }

    Eigen::VectorXd values(box.site_count());
    for (int s = 0; s < box.site_count(); ++s) {
        SiteCoord x = box.coord_of(s);
        for (int nu = 0; nu < d2; ++nu) {
            const int side = box.sides()[d1 + nu];
            x[d1 + nu] = ((x[d1 + nu] - j[nu]) % side + side) % side;
        }
        values[s] = v.value(box.index_of(x));
    }
    // Gamma is shift invariant (residues unchanged), so the mask carries over.
    return PotentialField(v.mask(), std::move(values));
}

bool is_admissible(const PotentialField& v, const DistributionSpec& dist, const TrimMask& mask) {
    dist.validate();
    if (v.box() != mask.box()) throw ConfigurationError("potential and mask live on different boxes");
    for (int s = 0; s < mask.box().site_count(); ++s) {
        if (mask.active(s)) {
            if (!dist.contains(v.value(s))) return false;
        } else if (v.value(s) != 0.0) {
            return false;
        }
    }
    return true;
}

}  // namespace trimwave
