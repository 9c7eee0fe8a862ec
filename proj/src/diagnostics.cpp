#include "trimwave/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trimwave/parallel.hpp"

namespace trimwave {

namespace {

double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (sxy - sx * sy / n) / (sxx - sx * sx / n);
}

// Smallest element of the set at or above e, +inf if none.
double next_at_or_above(const SpectrumSet& s, double e) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : s.intervals()) {
        if (iv.hi < e) continue;
        best = std::min(best, std::max(iv.lo, e));
    }
    for (double p : s.points())
        if (p >= e) best = std::min(best, p);
    return best;
}

double prev_at_or_below(const SpectrumSet& s, double e) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& iv : s.intervals()) {
        if (iv.lo > e) continue;
        best = std::max(best, std::min(iv.hi, e));
    }
    for (double p : s.points())
        if (p <= e) best = std::max(best, p);
    return best;
}

}  // namespace

WegnerReport wegner_experiment(const std::vector<TrimMask>& boxes, const DistributionSpec& dist,
                               double energy, const std::vector<double>& eps_list, int realizations,
                               std::uint64_t seed, double gamma_floor, int threads, int dense_cap) {
    dist.validate();
    if (boxes.empty()) throw ParameterError("need at least one box");
    if (eps_list.empty()) throw ParameterError("need at least one window width");
    if (realizations < 1) throw ParameterError("need at least one realization");

    WegnerReport report;
    report.energy = energy;
    report.rho_max = dist.rho_max();
    report.realizations = realizations;

    for (const auto& mask : boxes) {
        const SpectrumSet sigma0 = sigma0_numeric(mask, dense_cap);
        const double gamma = sigma0.distance_to(energy);
        if (gamma < gamma_floor)
            throw PreconditionError("E is only " + std::to_string(gamma) +
                                    " away from sigma0; the Wegner bound blows up near sigma0");
        for (double eps : eps_list) {
            if (!(eps > 0.0) || eps > 0.5 * gamma)
                throw PreconditionError("window widths must satisfy 0 < eps <= gamma/2");
        }
        report.gammas.push_back(gamma);
        report.box_sites.push_back(mask.box().site_count());
    }

    for (std::size_t b = 0; b < boxes.size(); ++b) {
        const TrimMask& mask = boxes[b];
        const EnsembleSpec ensemble{seed, realizations, dist, mask};

        std::vector<std::vector<int>> counts(static_cast<std::size_t>(realizations));
        parallel_for(realizations, threads, [&](int r) {
            const SymOperator h = assemble_h(mask.box(), sample_potential(ensemble, r));
            const EigenDecomposition d = eigen_sym(h, false, dense_cap);
            std::vector<int> row;
            row.reserve(eps_list.size());
            for (double eps : eps_list)
                row.push_back(count_below(d, energy + eps) - count_below(d, energy - eps));
            counts[static_cast<std::size_t>(r)] = std::move(row);
        });

        std::vector<double> means;
        for (std::size_t e = 0; e < eps_list.size(); ++e) {
            double sum = 0.0;
            for (int r = 0; r < realizations; ++r) sum += counts[static_cast<std::size_t>(r)][e];
            const double mean = sum / realizations;
            means.push_back(mean);
            const double denom = report.rho_max * eps_list[e] * mask.box().site_count();
            report.cells.push_back(WegnerCell{mask.box().site_count(), eps_list[e], mean,
                                              mean * report.gammas[b] / denom});
        }

        bool positive = true;
        for (double m : means) positive = positive && m > 0.0;
        report.slopes.push_back(positive && eps_list.size() >= 2
                                    ? loglog_slope(eps_list, means)
                                    : std::numeric_limits<double>::quiet_NaN());

        double chat = 0.0;
        for (std::size_t e = 0; e < eps_list.size(); ++e)
            chat += report.cells[b * eps_list.size() + e].c_hat;
        report.c_hat_by_box.push_back(chat / static_cast<double>(eps_list.size()));
    }
    return report;
}

UcpReport ucp_check(const SymOperator& h, const TrimMask& mask, const SpectrumSet& sigma0,
                    double gamma_floor, int dense_cap) {
    for (Bc bc : mask.box().bc())
        if (bc != Bc::Periodic) throw PreconditionError("ucp check needs periodic bc");
    if (h.dim() != mask.box().site_count())
        throw ConfigurationError("operator does not match the mask box");

    const int d = mask.box().dim();
    const EigenDecomposition decomp = eigen_sym(h, true, dense_cap);

    UcpReport report;
    report.total_eigenpairs = static_cast<int>(decomp.eigenvalues.size());
    const std::vector<int> gamma_sites = mask.active_sites();

    for (int n = 0; n < decomp.eigenvalues.size(); ++n) {
        const double gamma = sigma0.distance_to(decomp.eigenvalues[n]);
        if (gamma < gamma_floor) continue;

        const Eigen::VectorXd psi = decomp.eigenvectors.col(n);
        double on_gamma_sq = 0.0;
        for (int s : gamma_sites) on_gamma_sq += psi[s] * psi[s];

        UcpRow row;
        row.n = n;
        row.energy = decomp.eigenvalues[n];
        row.gamma = gamma;
        row.lhs = psi.norm();
        row.rhs = std::sqrt(1.0 + (2.0 * d / gamma) * (2.0 * d / gamma)) * std::sqrt(on_gamma_sq);
        row.pass = row.lhs <= row.rhs + 1e-9;
        report.qualifying += 1;
        report.passed += row.pass ? 1 : 0;
        report.rows.push_back(row);
    }
    report.empty_notice = report.qualifying == 0;
    return report;
}

GapReport nonempty_gap_check(const TrimMask& mask, const DistributionSpec& dist, int dense_cap) {
    dist.validate();
    const SpectrumSet sigma0 = sigma0_numeric(mask, dense_cap);
    GapReport report;
    report.e_min = spectrum_endpoints(mask, dist.a, dense_cap).e_min;
    report.e_max = spectrum_endpoints(mask, dist.b, dense_cap).e_max;
    report.eta_low = next_at_or_above(sigma0, report.e_min) - report.e_min;
    report.eta_high = report.e_max - prev_at_or_below(sigma0, report.e_max);
    report.nonempty = report.eta_low > 0.0 && report.eta_high > 0.0;
    return report;
}

const char* phase_class_name(PhaseClass c) {
    switch (c) {
        case PhaseClass::LocalizedLike: return "localized-like";
        case PhaseClass::ExtendedLike: return "extended-like";
        case PhaseClass::NearEdge: return "near-edge";
    }
    return "?";
}

int default_scan_source(const LatticeBox& box) {
    SiteCoord x(box.dim(), 0);
    for (int nu = 0; nu < box.confined_dims(); ++nu) x[nu] = box.periods()[nu] / 2;
    return box.index_of(x);
}

std::vector<MobilityScanRow> mobility_scan(const TrimMask& mask, const DistributionSpec& dist,
                                           std::uint64_t seed, const MobilityScanParams& params,
                                           const SpectrumSet& sigma0, const SpectrumSet& region,
                                           int threads) {
    dist.validate();
    if (params.energies.empty()) throw ParameterError("energy grid is empty");
    const int source = params.source_site >= 0 ? params.source_site : default_scan_source(mask.box());
    if (mask.active(source))
        throw PreconditionError("scan source site lies on Gamma; the divergence probe needs x off Gamma");

    const EnsembleSpec ensemble{seed, params.realizations, dist, mask};

    // Disorder realizations are shared across the energy grid: one operator
    // per realization, reused for every E.
    std::vector<SymOperator> ops;
    ops.reserve(static_cast<std::size_t>(params.realizations));
    for (int r = 0; r < params.realizations; ++r)
        ops.push_back(assemble_h(mask.box(), sample_potential(ensemble, r)));

    const int n_energies = static_cast<int>(params.energies.size());
    std::vector<MobilityScanRow> rows(static_cast<std::size_t>(n_energies));
    parallel_for(n_energies, threads, [&](int ei) {
        const double energy = params.energies[static_cast<std::size_t>(ei)];
        std::vector<double> masses, r2s, alphas;
        for (const SymOperator& h : ops) {
            const ZetaSweep sweep =
                zeta_sweep(h, energy, source, params.zeta_max, params.zeta_min, params.zeta_points);
            const GreenColumn col = green_column(h, energy, params.zeta_min, source);
            const DecayFit fit = decay_fit(mask.box(), col, params.min_dist, params.boundary_margin);
            masses.push_back(fit.mass);
            r2s.push_back(fit.r2);
            alphas.push_back(sweep.alpha);
        }

        MobilityScanRow row;
        row.energy = energy;
        row.gamma = sigma0.distance_to(energy);
        row.in_region = region.contains(energy);
        row.mass = median(masses);
        row.r2 = median(r2s);
        row.alpha = median(alphas);
        row.thresholds = params.thresholds;
        if (row.mass > params.thresholds.mass_min && row.r2 >= params.thresholds.r2_min)
            row.cls = PhaseClass::LocalizedLike;
        else if (row.alpha >= params.thresholds.alpha_min)
            row.cls = PhaseClass::ExtendedLike;
        else
            row.cls = PhaseClass::NearEdge;
        rows[static_cast<std::size_t>(ei)] = std::move(row);
    });
    return rows;
}

SpectrumSet stable_sigma0(const GeometrySpec& spec, const std::vector<SiteCoord>& gamma0,
                          const std::vector<double>& probe_energies, double rel_tol,
                          int max_doublings, int dense_cap) {
    GeometrySpec current = spec;
    SpectrumSet set = sigma0_numeric(TrimMask(build_box(current), gamma0), dense_cap);

    for (int i = 0; i < max_doublings; ++i) {
        GeometrySpec doubled = current;
        for (int& kv : doubled.k) kv *= 2;

        SpectrumSet refined;
        try {
            refined = sigma0_numeric(TrimMask(build_box(doubled), gamma0), dense_cap);
        } catch (const SizeCapExceeded&) {
            break;
        }

        bool stable = true;
        for (double e : probe_energies) {
            const double g0 = set.distance_to(e);
            const double g1 = refined.distance_to(e);
            const double scale = std::max({std::abs(g0), std::abs(g1), 1e-12});
            if (std::abs(g1 - g0) / scale > rel_tol) stable = false;
        }
        current = doubled;
        set = std::move(refined);
        if (stable) break;
    }
    return set;
}

}  // namespace trimwave
