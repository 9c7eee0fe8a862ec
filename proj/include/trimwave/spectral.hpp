#pragma once

#include <Eigen/Dense>
#include <vector>

#include "trimwave/disorder.hpp"
#include "trimwave/hamiltonian.hpp"

namespace trimwave {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool operator==(const Interval&) const = default;
};

/// Union of closed intervals and isolated points, kept in normalized form:
/// intervals sorted and disjoint (touching ones merged), points sorted,
/// deduplicated and outside every interval.
class SpectrumSet {
public:
    SpectrumSet() = default;

    static SpectrumSet from_points(std::vector<double> pts);
    static SpectrumSet from_intervals(std::vector<Interval> ivs);
    static SpectrumSet make(std::vector<Interval> ivs, std::vector<double> pts);

    bool empty() const { return intervals_.empty() && points_.empty(); }
    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<double>& points() const { return points_; }

    /// Dilation by [-c, c]; c must be >= 0.
    SpectrumSet minkowski_sum(double c) const;

    /// Euclidean distance from e to the set. Throws on an empty set.
    double distance_to(double e) const;

    double min() const;
    double max() const;
    bool contains(double e) const { return distance_to(e) == 0.0; }

    bool operator==(const SpectrumSet&) const = default;

private:
    void normalize();

    std::vector<Interval> intervals_;
    std::vector<double> points_;
};

inline constexpr int kDefaultDenseCap = 4096;

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;   // nondecreasing
    Eigen::MatrixXd eigenvectors;  // orthonormal columns; empty unless requested
    double residual = 0.0;         // max_n |H psi_n - E_n psi_n|_2 (0 without vectors)

    bool has_vectors() const { return eigenvectors.size() > 0; }
};

/// Dense symmetric eigensolve. Throws SizeCapExceeded above `dense_cap`.
EigenDecomposition eigen_sym(const SymOperator& h, bool want_vectors, int dense_cap = kDefaultDenseCap);

/// N(H, e): number of eigenvalues <= e.
int count_below(const EigenDecomposition& decomp, double e);

/// Mode energy 2 * sum_nu cos(pi l[nu] / p[nu]) over confined directions.
/// Requires 1 <= l[nu] <= p[nu]-1.
double compute_eL(const std::vector<int>& confined_periods, const std::vector<int>& l);

/// The explicit region union_L e_L + [-2 d2, 2 d2] over all valid modes.
SpectrumSet energy_region(const std::vector<int>& confined_periods, int d2);

/// Closed form for sigma(H_{0,Gamma^c}) in the d1 = 1 hyperplane-trim case:
/// the (p-1)-site segment spectrum {2 cos(k pi / p)} dilated by [-2 d2, 2 d2].
SpectrumSet sigma0_single_layer(int p, int d2);

/// Eigenvalues of the free Laplacian restricted to Gamma^c with simple bc
/// inside the periodic box, as isolated points (inner approximation).
SpectrumSet sigma0_numeric(const TrimMask& mask, int dense_cap = kDefaultDenseCap);

struct Endpoints {
    double e_min = 0.0;
    double e_max = 0.0;
};

/// Extreme eigenvalues of H_a = H0 + a chi_Gamma on the mask's torus box.
Endpoints spectrum_endpoints(const TrimMask& mask, double a, int dense_cap = kDefaultDenseCap);

struct HellmannFeynmanResult {
    double energy = 0.0;      // ground state energy of h_a on the unit cell
    double derivative = 0.0;  // dE/da = sum over Gamma-cell sites of |psi(j)|^2
    double gap = 0.0;         // distance to the next eigenvalue
};

/// Ground-state derivative of the periodic-cell operator h_a = H0 + a chi.
/// Throws DegenerateGroundState when the gap is below `gap_floor`.
HellmannFeynmanResult hellmann_feynman(const GeometrySpec& spec, const std::vector<SiteCoord>& gamma0,
                                       double a, double gap_floor = 1e-8);

struct ContainmentReport {
    double e_min_bound = 0.0;  // E_min(a)
    double e_max_bound = 0.0;  // E_max(b)
    double spec_min = 0.0;     // min sigma(H0 + W)
    double spec_max = 0.0;
    double lower_margin = 0.0;  // spec_min - E_min(a)
    double upper_margin = 0.0;  // E_max(b) - spec_max
    bool contained = false;
};

/// Checks sigma(H0 + W) within [E_min(a) - tol, E_max(b) + tol] for an
/// admissible W. Throws AdmissibilityError otherwise.
ContainmentReport admissible_containment(const TrimMask& mask, const DistributionSpec& dist,
                                         const PotentialField& w, double tol = 1e-8,
                                         int dense_cap = kDefaultDenseCap);

}  // namespace trimwave
