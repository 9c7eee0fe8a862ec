#include "trimwave/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace trimwave {

namespace {

// OLS of y against x; returns (slope, intercept, r2).
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    const double vx = sxx - sx * sx / n;
    const double cxy = sxy - sx * sy / n;
    const double vy = syy - sy * sy / n;
    LineFit f;
    f.slope = cxy / vx;
    f.intercept = (sy - f.slope * sx) / n;
    f.r2 = vy > 0 ? (cxy * cxy) / (vx * vy) : 1.0;
    return f;
}

}  // namespace

GreenSolver::GreenSolver(const SymOperator& h, std::complex<double> z) : z_(z) {
    if (z.imag() <= 0.0) throw ParameterError("spectral parameter needs zeta = Im z > 0");
    residual_tol_ = 1e-10 * (h.row_sum_bound() + std::abs(z));

    shifted_ = h.sparse().cast<std::complex<double>>();
    for (int i = 0; i < shifted_.rows(); ++i) shifted_.coeffRef(i, i) -= z;
    shifted_.makeCompressed();

    lu_ = std::make_unique<Eigen::SparseLU<Eigen::SparseMatrix<std::complex<double>>>>();
    lu_->compute(shifted_);
    if (lu_->info() != Eigen::Success)
        throw SingularityError("factorization of (H - z) failed at z = " + std::to_string(z.real()) +
                               " + " + std::to_string(z.imag()) + "i");
}

GreenColumn GreenSolver::column(int source) const {
    if (source < 0 || source >= shifted_.rows()) throw IndexError("source site out of range");

    Eigen::VectorXcd delta = Eigen::VectorXcd::Zero(shifted_.rows());
    delta[source] = 1.0;
    Eigen::VectorXcd u = lu_->solve(delta);

    double res = (shifted_ * u - delta).norm();
    if (res > residual_tol_) {
        u += lu_->solve(delta - shifted_ * u);  // one refinement step
        res = (shifted_ * u - delta).norm();
        if (res > residual_tol_)
            throw SingularityError("green solve residual " + std::to_string(res) + " above tolerance");
    }
    return GreenColumn{source, z_, std::move(u), res};
}

GreenColumn green_column(const SymOperator& h, double energy, double zeta, int source) {
    if (zeta <= 0.0) throw ParameterError("zeta must be positive");
    return GreenSolver(h, {energy, zeta}).column(source);
}

double row_l1(const GreenColumn& col) {
    return col.values.cwiseAbs().sum();
}

DecayFit decay_fit(const LatticeBox& box, const GreenColumn& col, int min_dist, int boundary_margin) {
    if (col.values.size() != box.site_count())
        throw ConfigurationError("green column does not match the box");

    std::map<int, double> peak;  // distance -> max |G|
    int r_max_avail = 0;
    for (int s = 0; s < box.site_count(); ++s) {
        const int r = box.torus_distance(col.source, s);
        r_max_avail = std::max(r_max_avail, r);
        auto [it, inserted] = peak.emplace(r, std::abs(col.values[s]));
        if (!inserted) it->second = std::max(it->second, std::abs(col.values[s]));
    }

    std::vector<double> rs, logs;
    for (const auto& [r, g] : peak) {
        if (r < min_dist || r > r_max_avail - boundary_margin) continue;
        rs.push_back(r);
        logs.push_back(std::log(std::max(g, 1e-300)));
    }
    if (rs.size() < 5)
        throw FitRangeError("need at least 5 distinct distances, box too small for the margins");

    const LineFit f = fit_line(rs, logs);
    DecayFit fit;
    fit.mass = -f.slope;
    fit.log_prefactor = f.intercept;
    fit.r2 = f.r2;
    fit.distances_used = static_cast<int>(rs.size());
    fit.r_min = static_cast<int>(rs.front());
    fit.r_max = static_cast<int>(rs.back());
    return fit;
}

ZetaSweep zeta_sweep(const SymOperator& h, double energy, int source, double zeta_max, double zeta_min,
                     int points) {
    if (!(zeta_max > zeta_min) || zeta_min <= 0.0)
        throw ParameterError("need zeta_max > zeta_min > 0");
    if (points < 2) throw ParameterError("need at least 2 grid points");

    ZetaSweep sweep;
    sweep.energy = energy;
    sweep.source = source;

    const double ratio = std::pow(zeta_min / zeta_max, 1.0 / (points - 1));
    for (int i = 0; i < points; ++i) sweep.zetas.push_back(zeta_max * std::pow(ratio, i));

    // Finite-volume floor: below ~1% of the mean level spacing the sweep
    // resolves single eigenvalues rather than the infinite-volume limit.
    const double spacing_estimate = 2.0 * h.row_sum_bound() / std::max(1, h.dim() - 1);
    sweep.zeta_floor_warning = zeta_min < 0.01 * spacing_estimate;

    std::vector<double> logz, logs;
    sweep.running_alpha.assign(sweep.zetas.size(), std::numeric_limits<double>::quiet_NaN());
    double min_zs = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sweep.zetas.size(); ++i) {
        const GreenColumn col = green_column(h, energy, sweep.zetas[i], source);
        const double s = row_l1(col);
        sweep.l1_sums.push_back(s);
        min_zs = std::min(min_zs, sweep.zetas[i] * s);
        logz.push_back(std::log(sweep.zetas[i]));
        logs.push_back(std::log(std::max(s, 1e-300)));
        if (i >= 1) sweep.running_alpha[i] = -fit_line(logz, logs).slope;
    }
    sweep.alpha = sweep.running_alpha.back();
    sweep.min_zeta_s = min_zs;
    return sweep;
}

}  // namespace trimwave
