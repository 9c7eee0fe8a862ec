#include "trimwave/states.hpp"

#include <cmath>
#include <string>

#include "trimwave/spectral.hpp"

namespace trimwave {

namespace {

void check_state_preconditions(const LatticeBox& box, const TrimMask& mask, bool allow_odd_span) {
    for (Bc bc : box.bc())
        if (bc != Bc::Periodic)
            throw PreconditionError("extended states need periodic bc in every direction");
    for (int nu = 0; nu < box.confined_dims(); ++nu) {
        const int span = box.sides()[nu] / box.periods()[nu];
        if (span % 2 != 0 && !allow_odd_span)
            throw ParityError("confined span (m2 - m1) must be even for direction " + std::to_string(nu));
    }
    if (!mask.is_single_layer())
        throw SupportViolation("extended states require a single-layer trim");
}

void check_mode(const LatticeBox& box, const ModeIndex& mode) {
    const int d1 = box.confined_dims();
    if (static_cast<int>(mode.l.size()) != d1 || static_cast<int>(mode.m.size()) != box.dim() - d1)
        throw InvalidMode("mode vectors must match the box dimension split");
    for (int nu = 0; nu < d1; ++nu)
        if (mode.l[nu] < 1 || mode.l[nu] > box.periods()[nu] - 1)
            throw InvalidMode("confined mode numbers must satisfy 1 <= l < p");
    for (int nu = d1; nu < box.dim(); ++nu) {
        const int m = mode.m[nu - d1];
        if (m < 0 || m >= box.sides()[nu]) throw InvalidMode("torus momentum index out of range");
    }
}

}  // namespace

double phi_L(const SiteCoord& x_confined, const std::vector<int>& confined_periods,
             const std::vector<int>& l) {
    if (x_confined.size() != confined_periods.size() || l.size() != confined_periods.size())
        throw InvalidMode("coordinate, period and mode vectors must have equal length");
    double prod = 1.0;
    for (std::size_t nu = 0; nu < l.size(); ++nu) {
        const int p = confined_periods[nu];
        if (l[nu] < 1 || l[nu] > p - 1) throw InvalidMode("mode numbers must satisfy 1 <= l < p");
        // Reduce l*x mod 2p first so sites on p*Z give sin(0) or sin(pi*1)
        // with integer arguments, i.e. exact zeros.
        const long t = ((static_cast<long>(l[nu]) * x_confined[nu]) % (2L * p) + 2L * p) % (2L * p);
        if (t % p == 0) return 0.0;
        prod *= std::sin(M_PI * static_cast<double>(t) / p);
    }
    return prod;
}

ExtendedState build_extended_state(const LatticeBox& box, const TrimMask& mask, const ModeIndex& mode,
                                   bool allow_odd_span) {
    if (mask.box() != box) throw ConfigurationError("mask lives on a different box");
    check_state_preconditions(box, mask, allow_odd_span);
    check_mode(box, mode);

    const int d1 = box.confined_dims();
    const std::vector<int> confined_periods(box.periods().begin(), box.periods().begin() + d1);

    double eta = 0.0;
    for (int nu = d1; nu < box.dim(); ++nu)
        eta += 2.0 * std::cos(2.0 * M_PI * mode.m[nu - d1] / box.sides()[nu]);

    ExtendedState state;
    state.mode = mode;
    state.energy = compute_eL(confined_periods, mode.l) + eta;
    state.values.resize(box.site_count());

    SiteCoord conf(d1);
    for (int s = 0; s < box.site_count(); ++s) {
        const SiteCoord x = box.coord_of(s);
        std::copy(x.begin(), x.begin() + d1, conf.begin());
        const double amp = phi_L(conf, confined_periods, mode.l);
        if (amp == 0.0) {
            state.values[s] = 0.0;
            continue;
        }
        double phase = 0.0;
        for (int nu = d1; nu < box.dim(); ++nu)
            phase += 2.0 * M_PI * static_cast<double>(mode.m[nu - d1]) * x[nu] / box.sides()[nu];
        state.values[s] = amp * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return state;
}

double residual(const SymOperator& h, const ExtendedState& state) {
    if (h.dim() != state.values.size()) throw ConfigurationError("operator and state dimensions differ");
    const Eigen::VectorXcd r = h.apply(state.values) - state.energy * state.values;
    return r.cwiseAbs().maxCoeff();
}

SubspaceReport invariant_subspace_check(const SymOperator& h, const LatticeBox& box, const TrimMask& mask,
                                        const std::vector<int>& l, bool allow_odd_span) {
    if (h.dim() != box.site_count()) throw ConfigurationError("operator and box dimensions differ");
    const int d1 = box.confined_dims();

    // Normalized confined profile; the subspace is span{phi (x) e_m}.
    int n1 = 1, n2 = 1;
    for (int nu = 0; nu < d1; ++nu) n1 *= box.sides()[nu];
    for (int nu = d1; nu < box.dim(); ++nu) n2 *= box.sides()[nu];

    const std::vector<int> confined_periods(box.periods().begin(), box.periods().begin() + d1);
    Eigen::VectorXd phi(n1);
    {
        LatticeBox conf_box(std::vector<int>(box.sides().begin(), box.sides().begin() + d1),
                            confined_periods,
                            std::vector<Bc>(box.bc().begin(), box.bc().begin() + d1), d1);
        for (int ci = 0; ci < n1; ++ci) phi[ci] = phi_L(conf_box.coord_of(ci), confined_periods, l);
    }
    phi.normalize();

    SubspaceReport report;
    report.basis_size = n2;

    // Enumerate free momenta via the free sub-index; site = ci + n1 * fi.
    std::vector<int> m(box.dim() - d1, 0);
    for (int mode_count = 0; mode_count < n2; ++mode_count) {
        ModeIndex mode{l, m};
        const ExtendedState psi = build_extended_state(box, mask, mode, allow_odd_span);
        const Eigen::VectorXcd w = h.apply(psi.values);
        double off_sq = 0.0;
        for (int fi = 0; fi < n2; ++fi) {
            const auto slice = w.segment(static_cast<Eigen::Index>(fi) * n1, n1);
            const std::complex<double> coeff = phi.cast<std::complex<double>>().dot(slice);
            off_sq += (slice - coeff * phi.cast<std::complex<double>>()).squaredNorm();
        }
        report.max_off_residual = std::max(report.max_off_residual, std::sqrt(off_sq));

        std::size_t nu = 0;
        for (; nu < m.size(); ++nu) {
            if (++m[nu] < box.sides()[d1 + static_cast<int>(nu)]) break;
            m[nu] = 0;
        }
    }
    return report;
}

}  // namespace trimwave
