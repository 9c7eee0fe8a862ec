#include "trimwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trimwave {

namespace {

void check_finite(double v) {
    if (!std::isfinite(v)) throw ParameterError("spectrum sets take finite values only");
}

}  // namespace

SpectrumSet SpectrumSet::from_points(std::vector<double> pts) {
    return make({}, std::move(pts));
}

SpectrumSet SpectrumSet::from_intervals(std::vector<Interval> ivs) {
    return make(std::move(ivs), {});
}

SpectrumSet SpectrumSet::make(std::vector<Interval> ivs, std::vector<double> pts) {
    SpectrumSet s;
    for (const auto& iv : ivs) {
        check_finite(iv.lo);
        check_finite(iv.hi);
        if (iv.hi < iv.lo) throw ParameterError("interval endpoints out of order");
    }
    for (double p : pts) check_finite(p);
    s.intervals_ = std::move(ivs);
    s.points_ = std::move(pts);
    s.normalize();
    return s;
}

void SpectrumSet::normalize() {
    // Degenerate intervals become points.
    for (auto it = intervals_.begin(); it != intervals_.end();) {
        if (it->lo == it->hi) {
            points_.push_back(it->lo);
            it = intervals_.erase(it);
        } else {
            ++it;
        }
    }

    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Interval> merged;
    for (const auto& iv : intervals_) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    intervals_ = std::move(merged);

    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    std::erase_if(points_, [this](double p) {
        for (const auto& iv : intervals_)
            if (iv.lo <= p && p <= iv.hi) return true;
        return false;
    });
}

SpectrumSet SpectrumSet::minkowski_sum(double c) const {
    if (c < 0.0 || !std::isfinite(c)) throw ParameterError("dilation radius must be a finite value >= 0");
    std::vector<Interval> ivs;
    ivs.reserve(intervals_.size() + points_.size());
    for (const auto& iv : intervals_) ivs.push_back({iv.lo - c, iv.hi + c});
    std::vector<double> pts;
    if (c == 0.0) {
        pts = points_;
    } else {
        for (double p : points_) ivs.push_back({p - c, p + c});
    }
    return make(std::move(ivs), std::move(pts));
}

double SpectrumSet::distance_to(double e) const {
    if (empty()) throw ParameterError("distance query on an empty spectrum set");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : intervals_) {
        if (e < iv.lo)
            best = std::min(best, iv.lo - e);
        else if (e > iv.hi)
            best = std::min(best, e - iv.hi);
        else
            return 0.0;
    }
    for (double p : points_) best = std::min(best, std::abs(e - p));
    return best;
}

double SpectrumSet::min() const {
    if (empty()) throw ParameterError("min of an empty spectrum set");
    double m = std::numeric_limits<double>::infinity();
    if (!intervals_.empty()) m = intervals_.front().lo;
    if (!points_.empty()) m = std::min(m, points_.front());
    return m;
}

double SpectrumSet::max() const {
    if (empty()) throw ParameterError("max of an empty spectrum set");
    double m = -std::numeric_limits<double>::infinity();
    if (!intervals_.empty()) m = intervals_.back().hi;
    if (!points_.empty()) m = std::max(m, points_.back());
    return m;
}

EigenDecomposition eigen_sym(const SymOperator& h, bool want_vectors, int dense_cap) {
    if (h.dim() > dense_cap)
        throw SizeCapExceeded("dense eigensolve limited to dimension " + std::to_string(dense_cap) +
                              ", got " + std::to_string(h.dim()));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.compute(h.dense(), want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw SingularityError("symmetric eigensolver did not converge");

    EigenDecomposition out;
    out.eigenvalues = solver.eigenvalues();
    if (want_vectors) {
        out.eigenvectors = solver.eigenvectors();
        double worst = 0.0;
        for (int n = 0; n < out.eigenvalues.size(); ++n) {
            const Eigen::VectorXd r =
                h.apply(Eigen::VectorXd(out.eigenvectors.col(n))) - out.eigenvalues[n] * out.eigenvectors.col(n);
            worst = std::max(worst, r.norm());
        }
        out.residual = worst;
        const double scale = std::max({std::abs(out.eigenvalues[0]),
                                       std::abs(out.eigenvalues[out.eigenvalues.size() - 1]), 1.0});
        if (worst > 1e-10 * scale)
            throw SingularityError("eigensolver residual " + std::to_string(worst) + " above tolerance");
    }
    return out;
}

int count_below(const EigenDecomposition& decomp, double e) {
    const auto& ev = decomp.eigenvalues;
    return static_cast<int>(std::upper_bound(ev.data(), ev.data() + ev.size(), e) - ev.data());
}

double compute_eL(const std::vector<int>& confined_periods, const std::vector<int>& l) {
    if (l.size() != confined_periods.size())
        throw InvalidMode("mode vector must have one entry per confined direction");
    double sum = 0.0;
    for (std::size_t nu = 0; nu < l.size(); ++nu) {
        const int p = confined_periods[nu];
        if (l[nu] < 1 || l[nu] > p - 1)
            throw InvalidMode("mode numbers must satisfy 1 <= l < p");
        sum += std::cos(M_PI * static_cast<double>(l[nu]) / p);
    }
    return 2.0 * sum;
}

SpectrumSet energy_region(const std::vector<int>& confined_periods, int d2) {
    if (confined_periods.empty()) throw InvalidGeometry("need at least one confined period");
    if (d2 < 0) throw InvalidGeometry("d2 must be >= 0");

    std::vector<double> bands;
    std::vector<int> l(confined_periods.size(), 1);
    while (true) {
        bands.push_back(compute_eL(confined_periods, l));
        std::size_t nu = 0;
        for (; nu < l.size(); ++nu) {
            if (++l[nu] <= confined_periods[nu] - 1) break;
            l[nu] = 1;
        }
        if (nu == l.size()) break;
    }
    return SpectrumSet::from_points(std::move(bands)).minkowski_sum(2.0 * d2);
}

SpectrumSet sigma0_single_layer(int p, int d2) {
    if (p < 2) throw InvalidGeometry("period must be >= 2");
    std::vector<double> segment;
    for (int k = 1; k <= p - 1; ++k) segment.push_back(2.0 * std::cos(M_PI * static_cast<double>(k) / p));
    return SpectrumSet::from_points(std::move(segment)).minkowski_sum(2.0 * d2);
}

SpectrumSet sigma0_numeric(const TrimMask& mask, int dense_cap) {
    for (Bc bc : mask.box().bc())
        if (bc != Bc::Periodic)
            throw PreconditionError("sigma0_numeric needs periodic bc on the box");
    const std::vector<int> complement = mask.inactive_sites();
    if (complement.empty()) throw InvalidTrim("Gamma^c is empty");
    const SymOperator h = restrict_simple(mask.box(), complement);
    const EigenDecomposition d = eigen_sym(h, false, dense_cap);
    return SpectrumSet::from_points(std::vector<double>(d.eigenvalues.data(), d.eigenvalues.data() + d.eigenvalues.size()));
}

Endpoints spectrum_endpoints(const TrimMask& mask, double a, int dense_cap) {
    const SymOperator h = assemble_h(mask.box(), constant_potential(mask, a));
    const EigenDecomposition d = eigen_sym(h, false, dense_cap);
    return Endpoints{d.eigenvalues[0], d.eigenvalues[d.eigenvalues.size() - 1]};
}

HellmannFeynmanResult hellmann_feynman(const GeometrySpec& spec, const std::vector<SiteCoord>& gamma0,
                                       double a, double gap_floor) {
    spec.validate();
    // One-period cell with periodic bc in every direction.
    LatticeBox cell(spec.periods, spec.periods, std::vector<Bc>(spec.dim(), Bc::Periodic), spec.d1);
    TrimMask cell_mask(cell, gamma0);
    const SymOperator h = assemble_h(cell, constant_potential(cell_mask, a));
    const EigenDecomposition d = eigen_sym(h, true);

    if (d.eigenvalues.size() < 2)
        throw InvalidGeometry("unit cell has a single site; gap undefined");
    const double gap = d.eigenvalues[1] - d.eigenvalues[0];
    if (gap < gap_floor)
        throw DegenerateGroundState("ground-state gap " + std::to_string(gap) + " below " +
                                    std::to_string(gap_floor));

    double deriv = 0.0;
    for (int s = 0; s < cell.site_count(); ++s)
        if (cell_mask.active(s)) deriv += d.eigenvectors(s, 0) * d.eigenvectors(s, 0);
    return HellmannFeynmanResult{d.eigenvalues[0], deriv, gap};
}

ContainmentReport admissible_containment(const TrimMask& mask, const DistributionSpec& dist,
                                         const PotentialField& w, double tol, int dense_cap) {
    if (!is_admissible(w, dist, mask))
        throw AdmissibilityError("W must vanish off Gamma with on-Gamma values in supp P0");

    const Endpoints lo = spectrum_endpoints(mask, dist.a, dense_cap);
    const Endpoints hi = spectrum_endpoints(mask, dist.b, dense_cap);

    const EigenDecomposition d = eigen_sym(assemble_h(mask.box(), w), false, dense_cap);
    ContainmentReport r;
    r.e_min_bound = lo.e_min;
    r.e_max_bound = hi.e_max;
    r.spec_min = d.eigenvalues[0];
    r.spec_max = d.eigenvalues[d.eigenvalues.size() - 1];
    r.lower_margin = r.spec_min - r.e_min_bound;
    r.upper_margin = r.e_max_bound - r.spec_max;
    r.contained = r.lower_margin >= -tol && r.upper_margin >= -tol;
    return r;
}

}  // namespace trimwave
