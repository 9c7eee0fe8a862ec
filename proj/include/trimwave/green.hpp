#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseLU>
#include <complex>
#include <memory>
#include <vector>

#include "trimwave/hamiltonian.hpp"

namespace trimwave {

struct GreenColumn {
    int source = 0;
    std::complex<double> z;
    Eigen::VectorXcd values;      // G_z(source, .)
    double solve_residual = 0.0;  // |(H - z) u - delta|_2 achieved
};

/// Direct complex factorization of (H - z), reusable across source sites.
class GreenSolver {
public:
    GreenSolver(const SymOperator& h, std::complex<double> z);

    GreenColumn column(int source) const;
    std::complex<double> z() const { return z_; }

private:
    std::complex<double> z_;
    double residual_tol_;
    Eigen::SparseMatrix<std::complex<double>> shifted_;
    std::unique_ptr<Eigen::SparseLU<Eigen::SparseMatrix<std::complex<double>>>> lu_;
};

/// Green column at z = E + i zeta, zeta > 0.
GreenColumn green_column(const SymOperator& h, double energy, double zeta, int source);

/// l1 mass of the column, sum_y |G(y)|.
double row_l1(const GreenColumn& col);

struct DecayFit {
    double mass = 0.0;           // per-site decay rate m
    double log_prefactor = 0.0;  // log C
    double r2 = 0.0;
    int distances_used = 0;
    int r_min = 0;
    int r_max = 0;
};

/// Least-squares fit of log max_{|y-x|=r} |G| against r over the retained
/// distance range (short distances and the torus antipode region excluded).
DecayFit decay_fit(const LatticeBox& box, const GreenColumn& col, int min_dist = 2,
                   int boundary_margin = 2);

struct ZetaSweep {
    double energy = 0.0;
    int source = 0;
    std::vector<double> zetas;          // strictly decreasing geometric grid
    std::vector<double> l1_sums;        // S(zeta)
    std::vector<double> running_alpha;  // fit over the prefix; nan for the first point
    double alpha = 0.0;                 // S(zeta) ~ zeta^-alpha over the whole grid
    double min_zeta_s = 0.0;            // min over the grid of zeta * S(zeta)
    bool zeta_floor_warning = false;    // zeta_min below 1e-2 x mean level spacing estimate
};

ZetaSweep zeta_sweep(const SymOperator& h, double energy, int source, double zeta_max, double zeta_min,
                     int points);

}  // namespace trimwave
