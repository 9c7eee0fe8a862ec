#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <string>
#include <vector>

#include "trimwave/geometry.hpp"

namespace trimwave {

/// Real symmetric sparse operator. Off-diagonal entries are edge
/// multiplicities (1 or 2), the diagonal holds potential values.
class SymOperator {
public:
    explicit SymOperator(Eigen::SparseMatrix<double> mat);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::SparseMatrix<double>& sparse() const { return mat_; }
    Eigen::MatrixXd dense() const { return Eigen::MatrixXd(mat_); }
    Eigen::VectorXd diagonal() const { return mat_.diagonal(); }

    Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return mat_ * v; }
    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

    /// Max absolute row sum; an upper bound on the operator norm.
    double row_sum_bound() const;

    /// Coordinate-list text dump, one "i j value" line per nonzero,
    /// sorted by (i, j). Stable across runs for diffing.
    std::string dump_coordinate_list() const;

private:
    Eigen::SparseMatrix<double> mat_;
};

/// Real potential on box sites; nonzero only on the support mask.
class PotentialField {
public:
    PotentialField(TrimMask mask, Eigen::VectorXd values, bool enforce_support = true);

    static PotentialField zero(const TrimMask& mask);

    const TrimMask& mask() const { return mask_; }
    const LatticeBox& box() const { return mask_.box(); }
    const Eigen::VectorXd& values() const { return values_; }
    double value(int site) const { return values_[site]; }

    /// Copy with one value overridden, support check skipped. Intended for
    /// negative-control experiments that deliberately break the support rule.
    PotentialField with_value(int site, double v) const;

private:
    TrimMask mask_;
    Eigen::VectorXd values_;
};

/// Block form of an operator with respect to a trim mask:
/// rows/cols permuted to (complement sites, active sites).
struct BlockSplit {
    SymOperator h1;                    // on Lambda1 = Lambda n Gamma^c
    SymOperator h2;                    // on Lambda2 = Lambda n Gamma, diagonal includes V
    Eigen::SparseMatrix<double> link;  // T : Lambda2 -> Lambda1
    std::vector<int> lambda1_sites;    // parent site indices, ascending
    std::vector<int> lambda2_sites;
};

/// Free hopping operator of the box (zero diagonal).
SymOperator assemble_h0(const LatticeBox& box);

/// H0 + diag(V). Throws ConfigurationError if the potential lives on a
/// different box.
SymOperator assemble_h(const LatticeBox& box, const PotentialField& potential);

/// Submatrix of `h` on the given parent sites (ascending, deduplicated
/// internally). Edges with one endpoint outside the subset are dropped.
SymOperator submatrix(const SymOperator& h, const std::vector<int>& sites);

/// Free Laplacian on a subset of box sites with simple boundary conditions:
/// only edges with both endpoints in the subset survive.
SymOperator restrict_simple(const LatticeBox& box, const std::vector<int>& subset_sites);

BlockSplit block_split(const SymOperator& h, const TrimMask& mask);

struct TensorFactors {
    LatticeBox confined_box;
    LatticeBox free_box;
    SymOperator h1;  // H0 on the confined factor plus a*chi_G
    SymOperator h2;  // free H0 on the d2 factor
};

/// Separation H_a = H1_a (x) 1 + 1 (x) H2_0, valid when the trim is of
/// product form G x (full free fiber). Throws NotSeparable otherwise.
TensorFactors tensor_factors(const TrimMask& mask, double a);

}  // namespace trimwave
