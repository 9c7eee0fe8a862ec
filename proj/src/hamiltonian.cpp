#include "trimwave/hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace trimwave {

namespace {

void check_symmetry(const Eigen::SparseMatrix<double>& m) {
    if (m.rows() != m.cols())
        throw ConfigurationError("operator matrix must be square");
    Eigen::SparseMatrix<double> diff = m - Eigen::SparseMatrix<double>(m.transpose());
    diff.prune(0.0, 0.0);
    if (diff.nonZeros() != 0)
        throw ConfigurationError("operator matrix must be exactly symmetric");
}

}  // namespace

SymOperator::SymOperator(Eigen::SparseMatrix<double> mat) : mat_(std::move(mat)) {
    mat_.makeCompressed();
    check_symmetry(mat_);
}

Eigen::VectorXcd SymOperator::apply(const Eigen::VectorXcd& v) const {
    return mat_ * v.real() + std::complex<double>(0, 1) * (mat_ * v.imag());
}

double SymOperator::row_sum_bound() const {
    Eigen::VectorXd sums = Eigen::VectorXd::Zero(mat_.rows());
    for (int c = 0; c < mat_.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(mat_, c); it; ++it)
            sums[it.row()] += std::abs(it.value());
    return sums.size() ? sums.maxCoeff() : 0.0;
}

std::string SymOperator::dump_coordinate_list() const {
    struct Entry {
        int i, j;
        double v;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(mat_.nonZeros()));
    for (int c = 0; c < mat_.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(mat_, c); it; ++it)
            entries.push_back({static_cast<int>(it.row()), static_cast<int>(it.col()), it.value()});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });

    std::string out;
    char buf[64];
    for (const auto& e : entries) {
        out += std::to_string(e.i);
        out += ' ';
        out += std::to_string(e.j);
        out += ' ';
        auto r = std::to_chars(buf, buf + sizeof buf, e.v);
        out.append(buf, r.ptr);
        out += '\n';
    }
    return out;
}

PotentialField::PotentialField(TrimMask mask, Eigen::VectorXd values, bool enforce_support)
    : mask_(std::move(mask)), values_(std::move(values)) {
    if (values_.size() != mask_.box().site_count())
        throw ConfigurationError("potential vector length must equal the box site count");
    if (enforce_support) {
        for (int s = 0; s < values_.size(); ++s)
            if (!mask_.active(s) && values_[s] != 0.0)
                throw SupportViolation("potential must vanish off the trim set");
    }
}

PotentialField PotentialField::zero(const TrimMask& mask) {
    return PotentialField(mask, Eigen::VectorXd::Zero(mask.box().site_count()));
}

PotentialField PotentialField::with_value(int site, double v) const {
    if (site < 0 || site >= values_.size()) throw IndexError("site out of range");
    Eigen::VectorXd vals = values_;
    vals[site] = v;
    return PotentialField(mask_, std::move(vals), /*enforce_support=*/false);
}

SymOperator assemble_h0(const LatticeBox& box) {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(box.site_count()) * 2 * box.dim());
    for (int s = 0; s < box.site_count(); ++s)
        for (int nu = 0; nu < box.dim(); ++nu)
            for (int nb : box.neighbors(s, nu))
                trips.emplace_back(s, nb, 1.0);

    Eigen::SparseMatrix<double> m(box.site_count(), box.site_count());
    m.setFromTriplets(trips.begin(), trips.end());
    return SymOperator(std::move(m));
}

SymOperator assemble_h(const LatticeBox& box, const PotentialField& potential) {
    if (potential.box() != box)
        throw ConfigurationError("potential box does not match the operator box");
    Eigen::SparseMatrix<double> m = assemble_h0(box).sparse();
    for (int s = 0; s < box.site_count(); ++s)
        if (potential.value(s) != 0.0) m.coeffRef(s, s) += potential.value(s);
    m.makeCompressed();
    return SymOperator(std::move(m));
}

SymOperator submatrix(const SymOperator& h, const std::vector<int>& sites) {
    std::vector<int> sorted = sites;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw InvalidRestriction("subset must be nonempty");
    if (sorted.front() < 0 || sorted.back() >= h.dim())
        throw IndexError("subset site out of range");

    std::vector<int> pos(static_cast<std::size_t>(h.dim()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) pos[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);

    std::vector<Eigen::Triplet<double>> trips;
    const auto& m = h.sparse();
    for (int c = 0; c < m.outerSize(); ++c) {
        if (pos[static_cast<std::size_t>(c)] < 0) continue;
        for (Eigen::SparseMatrix<double>::InnerIterator it(m, c); it; ++it) {
            const int r = static_cast<int>(it.row());
            if (pos[static_cast<std::size_t>(r)] < 0) continue;
            trips.emplace_back(pos[static_cast<std::size_t>(r)], pos[static_cast<std::size_t>(c)], it.value());
        }
    }
    Eigen::SparseMatrix<double> sub(static_cast<int>(sorted.size()), static_cast<int>(sorted.size()));
    sub.setFromTriplets(trips.begin(), trips.end());
    return SymOperator(std::move(sub));
}

SymOperator restrict_simple(const LatticeBox& box, const std::vector<int>& subset_sites) {
    return submatrix(assemble_h0(box), subset_sites);
}

BlockSplit block_split(const SymOperator& h, const TrimMask& mask) {
    if (h.dim() != mask.box().site_count())
        throw ConfigurationError("operator dimension does not match the mask box");
    if (mask.active_count() == 0 || mask.active_count() == mask.box().site_count())
        throw InvalidTrim("block split needs a mask that is neither empty nor full");

    const std::vector<int> lambda1 = mask.inactive_sites();
    const std::vector<int> lambda2 = mask.active_sites();

    std::vector<int> block_of(static_cast<std::size_t>(h.dim()));
    std::vector<int> pos(static_cast<std::size_t>(h.dim()));
    for (std::size_t i = 0; i < lambda1.size(); ++i) {
        block_of[static_cast<std::size_t>(lambda1[i])] = 1;
        pos[static_cast<std::size_t>(lambda1[i])] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < lambda2.size(); ++i) {
        block_of[static_cast<std::size_t>(lambda2[i])] = 2;
        pos[static_cast<std::size_t>(lambda2[i])] = static_cast<int>(i);
    }

    std::vector<Eigen::Triplet<double>> t1, t2, tl;
    const auto& m = h.sparse();
    for (int c = 0; c < m.outerSize(); ++c) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(m, c); it; ++it) {
            const int r = static_cast<int>(it.row());
            const int br = block_of[static_cast<std::size_t>(r)];
            const int bc = block_of[static_cast<std::size_t>(c)];
            if (br == 1 && bc == 1)
                t1.emplace_back(pos[static_cast<std::size_t>(r)], pos[static_cast<std::size_t>(c)], it.value());
            else if (br == 2 && bc == 2)
                t2.emplace_back(pos[static_cast<std::size_t>(r)], pos[static_cast<std::size_t>(c)], it.value());
            else if (br == 1 && bc == 2)
                tl.emplace_back(pos[static_cast<std::size_t>(r)], pos[static_cast<std::size_t>(c)], it.value());
        }
    }

    Eigen::SparseMatrix<double> m1(static_cast<int>(lambda1.size()), static_cast<int>(lambda1.size()));
    Eigen::SparseMatrix<double> m2(static_cast<int>(lambda2.size()), static_cast<int>(lambda2.size()));
    Eigen::SparseMatrix<double> ml(static_cast<int>(lambda1.size()), static_cast<int>(lambda2.size()));
    m1.setFromTriplets(t1.begin(), t1.end());
    m2.setFromTriplets(t2.begin(), t2.end());
    ml.setFromTriplets(tl.begin(), tl.end());
    ml.makeCompressed();

    return BlockSplit{SymOperator(std::move(m1)), SymOperator(std::move(m2)), std::move(ml), lambda1, lambda2};
}

TensorFactors tensor_factors(const TrimMask& mask, double a) {
    if (!mask.is_product_form())
        throw NotSeparable("tensor separation requires Gamma = G x (full free fiber)");

    const LatticeBox& box = mask.box();
    const int d1 = box.confined_dims();
    const int d = box.dim();
    if (d1 < 1 || d1 >= d)
        throw NotSeparable("tensor separation needs at least one confined and one free direction");

    std::vector<int> sides1(box.sides().begin(), box.sides().begin() + d1);
    std::vector<int> per1(box.periods().begin(), box.periods().begin() + d1);
    std::vector<Bc> bc1(box.bc().begin(), box.bc().begin() + d1);
    LatticeBox box1(std::move(sides1), std::move(per1), std::move(bc1), d1);

    std::vector<int> sides2(box.sides().begin() + d1, box.sides().end());
    std::vector<int> per2(box.periods().begin() + d1, box.periods().end());
    std::vector<Bc> bc2(box.bc().begin() + d1, box.bc().end());
    LatticeBox box2(std::move(sides2), std::move(per2), std::move(bc2), 0);

    // chi_G on the confined factor via residue lookup.
    const auto g_pattern = mask.confined_pattern();
    Eigen::SparseMatrix<double> m1 = assemble_h0(box1).sparse();
    if (a != 0.0) {
        for (int s = 0; s < box1.site_count(); ++s) {
            SiteCoord x = box1.coord_of(s);
            for (int nu = 0; nu < d1; ++nu) x[nu] %= box1.periods()[nu];
            if (std::find(g_pattern.begin(), g_pattern.end(), x) != g_pattern.end())
                m1.coeffRef(s, s) += a;
        }
        m1.makeCompressed();
    }

    SymOperator h2 = assemble_h0(box2);
    return TensorFactors{std::move(box1), std::move(box2), SymOperator(std::move(m1)), std::move(h2)};
}

}  // namespace trimwave
