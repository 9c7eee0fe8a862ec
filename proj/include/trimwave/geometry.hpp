#pragma once

#include <cstdint>
#include <vector>

#include "trimwave/errors.hpp"

namespace trimwave {

/// Lattice point, one integer per direction. Confined directions come first.
using SiteCoord = std::vector<int>;

enum class Bc { Simple, Periodic };

inline constexpr long kDefaultSiteCap = 200000;

/// Waveguide geometry: d1 confined directions of m2-m1 periods each,
/// d2 free directions truncated to a torus of k[nu] periods.
struct GeometrySpec {
    int d1 = 1;
    int d2 = 1;
    std::vector<int> periods;  // d1+d2 entries, each >= 2
    int m1 = 0;
    int m2 = 1;                // m2 > m1
    std::vector<int> k;        // d2 entries, each >= 1

    int dim() const { return d1 + d2; }
    int span() const { return m2 - m1; }  // confined extent in period units

    void validate() const;  // throws InvalidGeometry
};

/// Sites of the unit cell {0 <= x[nu] <= p[nu]-1}, in index order
/// (direction 1 varying fastest).
std::vector<SiteCoord> build_unit_cell(const std::vector<int>& periods);

/// Finite rectangular box of lattice sites. Side lengths are whole multiples
/// of the per-direction periods. Coordinates are box-local: 0..side-1 per
/// direction. Immutable after construction.
class LatticeBox {
public:
    LatticeBox(std::vector<int> sides, std::vector<int> periods, std::vector<Bc> bc,
               int confined_dims, long site_cap = kDefaultSiteCap);

    int dim() const { return static_cast<int>(sides_.size()); }
    int confined_dims() const { return d1_; }
    int free_dims() const { return dim() - d1_; }
    int site_count() const { return site_count_; }

    const std::vector<int>& sides() const { return sides_; }
    const std::vector<int>& periods() const { return periods_; }
    const std::vector<Bc>& bc() const { return bc_; }

    // Index order is fixed: direction 1 varies fastest.
    int index_of(const SiteCoord& x) const;  // throws IndexError if out of bounds
    SiteCoord coord_of(int index) const;

    /// Nearest-neighbor slots of `site` along `direction`, as a multiset of
    /// site indices. Periodic sides of length 2 yield the same neighbor
    /// twice; simple boundaries drop out-of-box slots.
    std::vector<int> neighbors(int site, int direction) const;

    /// l1 distance with minimum-image wrap in periodic directions.
    int torus_distance(int a, int b) const;

    bool operator==(const LatticeBox&) const = default;

private:
    std::vector<int> sides_;
    std::vector<int> periods_;
    std::vector<Bc> bc_;
    int d1_ = 0;
    int site_count_ = 0;
};

LatticeBox build_box(const GeometrySpec& spec, Bc confined_bc = Bc::Periodic,
                     Bc free_bc = Bc::Periodic, long site_cap = kDefaultSiteCap);

/// The set Gamma of active sites: a residue pattern on the unit cell,
/// periodized over the whole box.
class TrimMask {
public:
    TrimMask(LatticeBox box, const std::vector<SiteCoord>& gamma0);

    const LatticeBox& box() const { return box_; }
    bool active(int site) const { return active_[static_cast<std::size_t>(site)] != 0; }
    int active_count() const { return active_count_; }

    std::vector<int> active_sites() const;
    std::vector<int> inactive_sites() const;

    /// True if every active residue lies on a confined coordinate hyperplane
    /// x[nu] = 0, nu < d1 (the "single layer" condition).
    bool is_single_layer() const;

    /// True if the residue pattern does not depend on the free-direction
    /// residues, i.e. Gamma = G x (full free fiber).
    bool is_product_form() const;

    /// Confined-direction residues of the pattern (requires product form).
    std::vector<SiteCoord> confined_pattern() const;

    const std::vector<std::uint8_t>& cell_pattern() const { return pattern_; }

    bool operator==(const TrimMask&) const = default;

private:
    int cell_index(const SiteCoord& residue) const;

    LatticeBox box_;
    std::vector<std::uint8_t> pattern_;  // chi_Gamma0 over the unit cell
    std::vector<std::uint8_t> active_;   // chi_Gamma over box sites
    int active_count_ = 0;
};

TrimMask build_trim_mask(const LatticeBox& box, const std::vector<SiteCoord>& gamma0);

/// Hyperplane layer {x in C0 | x[axis] = 0} (axis < d1).
std::vector<SiteCoord> single_layer_gamma0(const GeometrySpec& spec, int axis = 0);

/// Union layer {x in C0 | x[nu] = 0 for some nu < d1}.
std::vector<SiteCoord> single_layer_union_gamma0(const GeometrySpec& spec);

}  // namespace trimwave
