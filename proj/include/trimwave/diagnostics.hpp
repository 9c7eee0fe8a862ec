#pragma once

#include <cstdint>
#include <vector>

#include "trimwave/green.hpp"
#include "trimwave/spectral.hpp"

namespace trimwave {

struct WegnerCell {
    int box_sites = 0;
    double eps = 0.0;
    double mean_count = 0.0;  // Monte Carlo mean of N(E+eps) - N(E-eps)
    double c_hat = 0.0;       // mean * gamma / (rho_max * eps * |Lambda|)
};

struct WegnerReport {
    double energy = 0.0;
    double rho_max = 0.0;
    int realizations = 0;
    std::vector<double> gammas;        // per box, against its own sigma0
    std::vector<int> box_sites;        // |Lambda| per box, ascending
    std::vector<WegnerCell> cells;     // per (box, eps), box-major order
    std::vector<double> slopes;        // per box, log mean vs log eps
    std::vector<double> c_hat_by_box;  // per box, averaged over eps
};

/// Monte Carlo check of the eigenvalue-window bound
/// E[N(E+eps) - N(E-eps)] <= (C / gamma) rho_max eps |Lambda|.
/// Boxes must share the residue pattern and satisfy gamma >= gamma_floor,
/// eps <= gamma / 2.
WegnerReport wegner_experiment(const std::vector<TrimMask>& boxes, const DistributionSpec& dist,
                               double energy, const std::vector<double>& eps_list, int realizations,
                               std::uint64_t seed, double gamma_floor = 0.5, int threads = 1,
                               int dense_cap = kDefaultDenseCap);

struct UcpRow {
    int n = 0;  // eigenvalue index within its realization
    double energy = 0.0;
    double gamma = 0.0;
    double lhs = 0.0;  // |psi|
    double rhs = 0.0;  // sqrt(1 + (2d/gamma)^2) |psi|_{Gamma n Lambda}
    bool pass = false;
};

struct UcpReport {
    std::vector<UcpRow> rows;  // qualifying eigenpairs only
    int total_eigenpairs = 0;
    int qualifying = 0;
    int passed = 0;
    bool empty_notice = false;  // nothing beyond gamma_floor
};

/// Quantitative unique continuation: every eigenpair of H with
/// dist(E_n, sigma0) >= gamma_floor must satisfy
/// |psi| <= sqrt(1 + (2d/gamma_n)^2) |psi|_{Gamma}. The provided sigma0 must
/// contain the box's own Gamma^c spectrum for the bound to be a theorem.
UcpReport ucp_check(const SymOperator& h, const TrimMask& mask, const SpectrumSet& sigma0,
                    double gamma_floor, int dense_cap = kDefaultDenseCap);

struct GapReport {
    double e_min = 0.0;    // E_min(a)
    double e_max = 0.0;    // E_max(b)
    double eta_low = 0.0;  // largest eta with [E_min, E_min+eta] disjoint from sigma0
    double eta_high = 0.0;
    bool nonempty = false;  // both margins positive
};

/// Prop-nonempty style margins between the spectrum endpoints and sigma0.
GapReport nonempty_gap_check(const TrimMask& mask, const DistributionSpec& dist,
                             int dense_cap = kDefaultDenseCap);

enum class PhaseClass { LocalizedLike, ExtendedLike, NearEdge };

const char* phase_class_name(PhaseClass c);

struct MobilityThresholds {
    double mass_min = 0.1;
    double r2_min = 0.9;
    double alpha_min = 0.8;
};

struct MobilityScanRow {
    double energy = 0.0;
    double gamma = 0.0;      // distance to sigma0
    bool in_region = false;  // E in the explicit region
    double mass = 0.0;       // median decay mass over realizations
    double r2 = 0.0;
    double alpha = 0.0;  // median zeta exponent
    PhaseClass cls = PhaseClass::NearEdge;
    MobilityThresholds thresholds;
};

struct MobilityScanParams {
    std::vector<double> energies;
    int realizations = 3;
    double zeta_max = 1e-1;
    double zeta_min = 1e-4;
    int zeta_points = 9;
    int source_site = -1;  // -1: max-|Phi| site off Gamma
    int min_dist = 2;
    int boundary_margin = 2;
    MobilityThresholds thresholds;
};

/// Classification of the source site used when params.source_site < 0:
/// confined coordinates floor(p/2), free coordinates 0.
int default_scan_source(const LatticeBox& box);

/// Per-energy Green diagnostics across the spectrum: decay mass at the
/// smallest zeta plus the zeta-sweep exponent, classified against the
/// thresholds. Deterministic given the seed.
std::vector<MobilityScanRow> mobility_scan(const TrimMask& mask, const DistributionSpec& dist,
                                           std::uint64_t seed, const MobilityScanParams& params,
                                           const SpectrumSet& sigma0, const SpectrumSet& region,
                                           int threads = 1);

/// sigma0_numeric with the free-direction truncation doubled until the
/// distances from the probe energies move by less than rel_tol (capped at
/// max_doublings or the site cap).
SpectrumSet stable_sigma0(const GeometrySpec& spec, const std::vector<SiteCoord>& gamma0,
                          const std::vector<double>& probe_energies, double rel_tol = 0.05,
                          int max_doublings = 3, int dense_cap = kDefaultDenseCap);

}  // namespace trimwave
