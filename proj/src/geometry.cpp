#include "trimwave/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace trimwave {

void GeometrySpec::validate() const {
    if (d1 < 1 || d2 < 1)
        throw InvalidGeometry("d1 and d2 must both be >= 1");
    if (static_cast<int>(periods.size()) != dim())
        throw InvalidGeometry("periods must have d1+d2 entries");
    for (int p : periods)
        if (p < 2) throw InvalidGeometry("every period must be >= 2, got " + std::to_string(p));
    if (m2 <= m1)
        throw InvalidGeometry("m2 must exceed m1");
    if (static_cast<int>(k.size()) != d2)
        throw InvalidGeometry("k must have d2 entries");
    for (int kv : k)
        if (kv < 1) throw InvalidGeometry("every k must be >= 1, got " + std::to_string(kv));
}

std::vector<SiteCoord> build_unit_cell(const std::vector<int>& periods) {
    if (periods.empty()) throw InvalidGeometry("periods must be nonempty");
    for (int p : periods)
        if (p < 2) throw InvalidGeometry("every period must be >= 2, got " + std::to_string(p));

    long count = 1;
    for (int p : periods) count *= p;

    std::vector<SiteCoord> cell;
    cell.reserve(static_cast<std::size_t>(count));
    SiteCoord x(periods.size(), 0);
    for (long i = 0; i < count; ++i) {
        cell.push_back(x);
        for (std::size_t nu = 0; nu < periods.size(); ++nu) {
            if (++x[nu] < periods[nu]) break;
            x[nu] = 0;
        }
    }
    return cell;
}

LatticeBox::LatticeBox(std::vector<int> sides, std::vector<int> periods, std::vector<Bc> bc,
                       int confined_dims, long site_cap)
    : sides_(std::move(sides)), periods_(std::move(periods)), bc_(std::move(bc)), d1_(confined_dims) {
    const std::size_t d = sides_.size();
    if (d == 0 || periods_.size() != d || bc_.size() != d)
        throw InvalidGeometry("sides, periods and bc must have equal nonzero length");
    if (d1_ < 0 || d1_ > static_cast<int>(d))
        throw InvalidGeometry("confined dimension count out of range");

    long count = 1;
    for (std::size_t nu = 0; nu < d; ++nu) {
        if (periods_[nu] < 2) throw InvalidGeometry("every period must be >= 2");
        if (sides_[nu] < 1 || sides_[nu] % periods_[nu] != 0)
            throw InvalidGeometry("side length must be a positive multiple of the period");
        count *= sides_[nu];
        if (count > site_cap)
            throw SizeCapExceeded("box has more than " + std::to_string(site_cap) + " sites");
    }
    site_count_ = static_cast<int>(count);
}

int LatticeBox::index_of(const SiteCoord& x) const {
    if (static_cast<int>(x.size()) != dim())
        throw IndexError("coordinate dimension mismatch");
    int idx = 0;
    for (int nu = dim() - 1; nu >= 0; --nu) {
        if (x[nu] < 0 || x[nu] >= sides_[nu])
            throw IndexError("coordinate out of box bounds");
        idx = idx * sides_[nu] + x[nu];
    }
    return idx;
}

SiteCoord LatticeBox::coord_of(int index) const {
    if (index < 0 || index >= site_count_)
        throw IndexError("site index out of range");
    SiteCoord x(dim());
    for (int nu = 0; nu < dim(); ++nu) {
        x[nu] = index % sides_[nu];
        index /= sides_[nu];
    }
    return x;
}

std::vector<int> LatticeBox::neighbors(int site, int direction) const {
    if (direction < 0 || direction >= dim())
        throw IndexError("direction out of range");
    SiteCoord x = coord_of(site);  // validates site
    const int side = sides_[direction];

    std::vector<int> out;
    out.reserve(2);
    for (int step : {+1, -1}) {
        SiteCoord y = x;
        y[direction] += step;
        if (y[direction] < 0 || y[direction] >= side) {
            if (bc_[direction] == Bc::Simple) continue;
            y[direction] = (y[direction] + side) % side;
        }
        out.push_back(index_of(y));
    }
    return out;
}

int LatticeBox::torus_distance(int a, int b) const {
    const SiteCoord xa = coord_of(a);
    const SiteCoord xb = coord_of(b);
    int dist = 0;
    for (int nu = 0; nu < dim(); ++nu) {
        int delta = std::abs(xa[nu] - xb[nu]);
        if (bc_[nu] == Bc::Periodic) delta = std::min(delta, sides_[nu] - delta);
        dist += delta;
    }
    return dist;
}

LatticeBox build_box(const GeometrySpec& spec, Bc confined_bc, Bc free_bc, long site_cap) {
    spec.validate();
    std::vector<int> sides(spec.dim());
    std::vector<Bc> bc(spec.dim());
    for (int nu = 0; nu < spec.d1; ++nu) {
        sides[nu] = spec.span() * spec.periods[nu];
        bc[nu] = confined_bc;
    }
    for (int nu = spec.d1; nu < spec.dim(); ++nu) {
        sides[nu] = spec.k[nu - spec.d1] * spec.periods[nu];
        bc[nu] = free_bc;
    }
    return LatticeBox(std::move(sides), spec.periods, std::move(bc), spec.d1, site_cap);
}

int TrimMask::cell_index(const SiteCoord& residue) const {
    int idx = 0;
    for (int nu = box_.dim() - 1; nu >= 0; --nu)
        idx = idx * box_.periods()[nu] + residue[nu];
    return idx;
}

TrimMask::TrimMask(LatticeBox box, const std::vector<SiteCoord>& gamma0) : box_(std::move(box)) {
    const auto& p = box_.periods();
    long cell_size = 1;
    for (int pv : p) cell_size *= pv;

    pattern_.assign(static_cast<std::size_t>(cell_size), 0);
    long marked = 0;
    for (const auto& g : gamma0) {
        if (static_cast<int>(g.size()) != box_.dim())
            throw InvalidTrim("gamma0 coordinate dimension mismatch");
        for (int nu = 0; nu < box_.dim(); ++nu)
            if (g[nu] < 0 || g[nu] >= p[nu])
                throw InvalidTrim("gamma0 site outside the unit cell");
        auto& slot = pattern_[static_cast<std::size_t>(cell_index(g))];
        if (!slot) ++marked;
        slot = 1;
    }
    if (marked == 0) throw InvalidTrim("gamma0 must be nonempty");
    if (marked == cell_size) throw InvalidTrim("gamma0 must be a proper subset of the unit cell");

    active_.resize(static_cast<std::size_t>(box_.site_count()));
    SiteCoord residue(box_.dim());
    for (int s = 0; s < box_.site_count(); ++s) {
        const SiteCoord x = box_.coord_of(s);
        for (int nu = 0; nu < box_.dim(); ++nu) residue[nu] = x[nu] % p[nu];
        active_[static_cast<std::size_t>(s)] = pattern_[static_cast<std::size_t>(cell_index(residue))];
        active_count_ += active_[static_cast<std::size_t>(s)];
    }
}

std::vector<int> TrimMask::active_sites() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(active_count_));
    for (int s = 0; s < box_.site_count(); ++s)
        if (active(s)) out.push_back(s);
    return out;
}

std::vector<int> TrimMask::inactive_sites() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(box_.site_count() - active_count_));
    for (int s = 0; s < box_.site_count(); ++s)
        if (!active(s)) out.push_back(s);
    return out;
}

bool TrimMask::is_single_layer() const {
    const auto cell = build_unit_cell(box_.periods());
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (!pattern_[i]) continue;
        bool on_layer = false;
        for (int nu = 0; nu < box_.confined_dims(); ++nu)
            if (cell[i][nu] == 0) { on_layer = true; break; }
        if (!on_layer) return false;
    }
    return true;
}

bool TrimMask::is_product_form() const {
    const auto cell = build_unit_cell(box_.periods());
    // Group residues by confined part; the pattern must be constant per group.
    std::set<SiteCoord> active_conf, inactive_conf;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        SiteCoord conf(cell[i].begin(), cell[i].begin() + box_.confined_dims());
        (pattern_[i] ? active_conf : inactive_conf).insert(std::move(conf));
    }
    for (const auto& c : active_conf)
        if (inactive_conf.count(c)) return false;
    return true;
}

std::vector<SiteCoord> TrimMask::confined_pattern() const {
    if (!is_product_form())
        throw NotSeparable("trim pattern depends on free-direction residues");
    const auto cell = build_unit_cell(box_.periods());
    std::set<SiteCoord> conf;
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (pattern_[i])
            conf.insert(SiteCoord(cell[i].begin(), cell[i].begin() + box_.confined_dims()));
    return {conf.begin(), conf.end()};
}

TrimMask build_trim_mask(const LatticeBox& box, const std::vector<SiteCoord>& gamma0) {
    return TrimMask(box, gamma0);
}

std::vector<SiteCoord> single_layer_gamma0(const GeometrySpec& spec, int axis) {
    spec.validate();
    if (axis < 0 || axis >= spec.d1)
        throw InvalidTrim("layer axis must name a confined direction");
    std::vector<SiteCoord> out;
    for (const auto& x : build_unit_cell(spec.periods))
        if (x[axis] == 0) out.push_back(x);
    return out;
}

std::vector<SiteCoord> single_layer_union_gamma0(const GeometrySpec& spec) {
    spec.validate();
    std::vector<SiteCoord> out;
    for (const auto& x : build_unit_cell(spec.periods)) {
        for (int nu = 0; nu < spec.d1; ++nu) {
            if (x[nu] == 0) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

}  // namespace trimwave
