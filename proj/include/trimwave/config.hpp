#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "trimwave/diagnostics.hpp"

namespace trimwave {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class ExperimentKind {
    Spectrum,
    Endpoints,
    ExtendedCheck,
    Green,
    Wegner,
    MobilityScan,
    Ucp,
};

const char* experiment_kind_name(ExperimentKind k);

/// How the trim pattern Gamma0 is declared in the config.
struct TrimConfig {
    enum class Kind { SingleLayer, SingleLayerUnion, Explicit };
    Kind kind = Kind::SingleLayer;
    int axis = 0;                    // for SingleLayer
    std::vector<SiteCoord> gamma0;   // for Explicit

    std::vector<SiteCoord> resolve(const GeometrySpec& spec) const;
};

struct SpectrumParams {
    int realizations = 1;
    bool dump_operator = false;
};

struct EndpointsParams {
    std::vector<double> a_values;
};

struct ExtendedCheckParams {
    int realizations = 20;
    bool allow_odd_span = false;
    double residual_tol = 1e-12;
    double subspace_tol = 1e-10;
};

struct GreenParams {
    std::vector<double> energies;
    int realization = 0;
    double zeta_max = 1e-1;
    double zeta_min = 1e-4;
    int zeta_points = 9;
    int source = -1;  // -1: default off-Gamma site
    int min_dist = 2;
    int boundary_margin = 2;
};

struct WegnerParams {
    double energy = 0.0;
    std::vector<double> eps;
    std::vector<std::vector<int>> box_k;  // free-direction truncations, one entry per box
    int realizations = 200;
    double gamma_floor = 0.5;
    double slope_lo = 0.85;
    double slope_hi = 1.15;
    double chat_rel_tol = 0.30;
};

struct MobilityParams {
    std::optional<double> e_min;  // grid anchors; default E_min(a)-1 / E_max(b)+1
    std::optional<double> e_max;
    int e_count = 41;
    std::vector<double> explicit_energies;  // overrides the grid when nonempty
    int realizations = 3;
    double zeta_max = 1e-1;
    double zeta_min = 1e-4;
    int zeta_points = 9;
    int source = -1;
    int min_dist = 2;
    int boundary_margin = 2;
    MobilityThresholds thresholds;
    double sigma0_rel_tol = 0.05;
    int sigma0_max_doublings = 3;
};

struct UcpParams {
    int realizations = 20;
    double gamma_floor = 0.5;
};

struct ExperimentConfig {
    GeometrySpec geometry;
    Bc confined_bc = Bc::Periodic;
    Bc free_bc = Bc::Periodic;
    TrimConfig trim;
    DistributionSpec dist;
    std::uint64_t seed = 0;
    ExperimentKind experiment = ExperimentKind::Spectrum;
    std::string output_dir = "out";

    SpectrumParams spectrum;
    EndpointsParams endpoints;
    ExtendedCheckParams extended;
    GreenParams green;
    WegnerParams wegner;
    MobilityParams mobility;
    UcpParams ucp;

    std::string canonical;  // sorted-key dump of the parsed document, hashed for the manifest
};

/// Strict parse: unknown keys and invariant violations throw
/// ConfigurationError with a path-anchored message.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

/// Non-throwing check: schema errors plus cheap physics preconditions
/// (parity for extended-check, closed-form sigma0 distance for wegner).
std::vector<std::string> validate_config(const nlohmann::json& doc);
std::vector<std::string> validate_config_file(const std::string& path);

}  // namespace trimwave
