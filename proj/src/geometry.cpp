#include "meroext/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace meroext {

namespace {

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

double principal_arg_step(cplx from, cplx to) {
    return std::arg(to / from);
}

}  // namespace

BoundaryCurve::BoundaryCurve(std::vector<std::pair<int, cplx>> coeffs, std::size_t nodes)
    : coeffs_(std::move(coeffs)), nodes_(nodes) {
    if (coeffs_.empty()) throw InputError("curve needs at least one Fourier coefficient");
    if (!is_power_of_two(nodes_)) throw InputError("node count must be a power of two");
    std::sort(coeffs_.begin(), coeffs_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

BoundaryCurve BoundaryCurve::circle(cplx center, double radius, std::size_t nodes) {
    return BoundaryCurve{{{0, center}, {1, cplx{radius, 0.0}}}, nodes};
}

cplx BoundaryCurve::eval(double t) const {
    cplx acc{0.0, 0.0};
    for (const auto& [k, a] : coeffs_)
        acc += a * std::polar(1.0, static_cast<double>(k) * t);
    return acc;
}

cplx BoundaryCurve::deriv(double t) const {
    cplx acc{0.0, 0.0};
    for (const auto& [k, a] : coeffs_)
        acc += a * cplx{0.0, static_cast<double>(k)} * std::polar(1.0, static_cast<double>(k) * t);
    return acc;
}

double BoundaryCurve::signed_area() const {
    // A = (1/2) Im \oint conj(gamma) gamma' dt; exact for Fourier curves:
    // A = pi * sum_k k |a_k|^2.
    double area = 0.0;
    for (const auto& [k, a] : coeffs_) area += static_cast<double>(k) * std::norm(a);
    return std::numbers::pi * area;
}

cplx curve_contour_integral(const BoundaryCurve& curve, const CurveGrid& grid,
                            std::span<const cplx> values) {
    if (values.size() != grid.point.size())
        throw SampleMismatch("integrand sample count does not match the curve grid");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < values.size(); ++i) acc += values[i] * grid.tangent[i];
    const double h = kTwoPi / static_cast<double>(grid.point.size());
    return static_cast<double>(curve.orientation()) * h * acc;
}

int curve_winding(const BoundaryCurve& curve, const CurveGrid& grid, cplx z) {
    // First pass over the precomputed grid; refine by exact curve evaluation
    // wherever an argument step reaches pi/2.
    std::size_t m = grid.point.size();
    std::vector<cplx> pts(grid.point.begin(), grid.point.end());
    for (std::size_t pass = 0;; ++pass) {
        double total = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            cplx a = pts[i] - z;
            cplx b = pts[(i + 1) % pts.size()] - z;
            if (a == cplx{0.0, 0.0} || b == cplx{0.0, 0.0})
                throw NearZero("winding query point lies on a curve sample");
            double step = principal_arg_step(a, b);
            if (std::abs(step) >= std::numbers::pi / 2.0) ok = false;
            total += step;
        }
        if (ok) return static_cast<int>(std::lround(total / kTwoPi));
        if (pass >= 14) throw Unresolved("curve winding did not resolve under refinement");
        m *= 2;
        pts.resize(m);
        const double h = kTwoPi / static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) pts[i] = curve.eval(static_cast<double>(i) * h);
    }
}

DomainBoundary::DomainBoundary(std::vector<BoundaryCurve> curves, DomainConfig cfg)
    : curves_(std::move(curves)), cfg_(cfg) {
    if (curves_.empty()) throw InputError("domain needs at least one curve");

    grids_.resize(curves_.size());
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        const auto& c = curves_[i];
        const std::size_t m = c.node_count();
        auto& g = grids_[i];
        g.t.resize(m);
        g.point.resize(m);
        g.tangent.resize(m);
        double max_speed = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            g.t[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
            g.point[j] = c.eval(g.t[j]);
            g.tangent[j] = c.deriv(g.t[j]);
            max_speed = std::max(max_speed, std::abs(g.tangent[j]));
        }
        for (std::size_t j = 0; j < m; ++j)
            if (std::abs(g.tangent[j]) <= 1e-9 * max_speed)
                throw DegenerateCurve("curve derivative vanishes at a quadrature node");
        total_nodes_ += m;

        // Approximate simplicity: samples far apart along the curve must not
        // come close in the plane. Checked on a decimated sample set; the
        // arclength gate keeps slow curve sections from tripping the check.
        const std::size_t dense = std::min<std::size_t>(m, 1024);
        const std::size_t stride = m / dense;
        const double h = kTwoPi / static_cast<double>(m);
        const double threshold = cfg_.simplicity_factor * max_speed * h;
        std::vector<double> arclen(dense + 1, 0.0);
        for (std::size_t a = 0; a < dense; ++a)
            arclen[a + 1] = arclen[a] +
                            std::abs(g.point[((a + 1) % dense) * stride] - g.point[a * stride]);
        const double total_len = arclen[dense];
        for (std::size_t a = 0; a < dense; ++a) {
            for (std::size_t b = a + 1; b < dense; ++b) {
                double along = arclen[b] - arclen[a];
                along = std::min(along, total_len - along);
                if (along < std::max(total_len / 8.0, 4.0 * threshold)) continue;
                if (std::abs(g.point[a * stride] - g.point[b * stride]) < threshold)
                    throw CurvesIntersect("curve is not simple (self-approach detected)");
            }
        }
    }

    // Pairwise disjointness, on decimated samples.
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        for (std::size_t j = i + 1; j < curves_.size(); ++j) {
            double speed = 0.0;
            for (cplx d : grids_[i].tangent) speed = std::max(speed, std::abs(d));
            for (cplx d : grids_[j].tangent) speed = std::max(speed, std::abs(d));
            const double hmax = kTwoPi / static_cast<double>(std::min(
                                    curves_[i].node_count(), curves_[j].node_count()));
            const double threshold = cfg_.simplicity_factor * speed * hmax;
            const std::size_t si = std::max<std::size_t>(1, grids_[i].point.size() / 512);
            const std::size_t sj = std::max<std::size_t>(1, grids_[j].point.size() / 512);
            double dmin = std::numeric_limits<double>::infinity();
            for (std::size_t a = 0; a < grids_[i].point.size(); a += si)
                for (std::size_t b = 0; b < grids_[j].point.size(); b += sj)
                    dmin = std::min(dmin, std::abs(grids_[i].point[a] - grids_[j].point[b]));
            if (dmin < threshold) throw CurvesIntersect("boundary curves intersect or nearly touch");
        }
    }

    // Nesting: containment of curve j in curve i decided by winding of curve i
    // around a sample of curve j.
    const std::size_t m_count = curves_.size();
    std::vector<std::vector<bool>> contains(m_count, std::vector<bool>(m_count, false));
    for (std::size_t i = 0; i < m_count; ++i)
        for (std::size_t j = 0; j < m_count; ++j)
            if (i != j)
                contains[i][j] = curve_winding(curves_[i], grids_[i], grids_[j].point[0]) != 0;

    bool found_outer = false;
    for (std::size_t i = 0; i < m_count; ++i) {
        bool all = true;
        for (std::size_t j = 0; j < m_count; ++j)
            if (i != j && !contains[i][j]) all = false;
        if (all) {
            if (found_outer) throw AmbiguousNesting("more than one enclosing curve");
            outer_index_ = i;
            found_outer = true;
        }
    }
    if (!found_outer) throw AmbiguousNesting("no curve encloses all the others");
    for (std::size_t i = 0; i < m_count; ++i)
        for (std::size_t j = 0; j < m_count; ++j)
            if (i != j && i != outer_index_ && contains[i][j])
                throw AmbiguousNesting("inner curves are nested");

    // Standard orientation: outer counterclockwise, holes clockwise.
    for (std::size_t i = 0; i < m_count; ++i) {
        const bool ccw = curves_[i].signed_area() > 0.0;
        const bool want_ccw = (i == outer_index_);
        curves_[i].set_orientation(ccw == want_ccw ? +1 : -1);
    }

    // Diameter and centroid from the outer curve samples (decimated).
    const auto& outer = grids_[outer_index_];
    const std::size_t step = std::max<std::size_t>(1, outer.point.size() / 512);
    for (std::size_t a = 0; a < outer.point.size(); a += step)
        for (std::size_t b = a + step; b < outer.point.size(); b += step)
            diameter_ = std::max(diameter_, std::abs(outer.point[a] - outer.point[b]));
    band_width_ = cfg_.band_frac * diameter_;

    cplx sum{0.0, 0.0};
    std::size_t count = 0;
    for (const auto& g : grids_)
        for (cplx p : g.point) {
            sum += p;
            ++count;
        }
    centroid_ = sum / static_cast<double>(count);
    for (cplx p : outer.point) radius_ = std::max(radius_, std::abs(p - centroid_));
}

double DomainBoundary::distance_to_boundary(cplx z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& g : grids_)
        for (cplx p : g.point) d = std::min(d, std::abs(p - z));
    return d;
}

int DomainBoundary::effective_winding(std::size_t i, cplx z) const {
    return curves_[i].orientation() * curve_winding(curves_[i], grids_[i], z);
}

RegionTag DomainBoundary::locate(cplx z, double band) const {
    if (band < 0.0) band = band_width_;
    if (distance_to_boundary(z) < band) return {Region::NearBoundary, 0};

    int total = 0;
    std::vector<int> w(curves_.size());
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        w[i] = effective_winding(i, z);
        total += w[i];
    }
    if (total == 1) return {Region::Interior, 0};
    bool all_zero = true;
    for (int x : w)
        if (x != 0) all_zero = false;
    if (all_zero) return {Region::Exterior, 0};
    for (std::size_t i = 0; i < curves_.size(); ++i)
        if (i != outer_index_ && w[i] == -1) return {Region::Hole, i};
    throw Error("inconsistent winding pattern in point location");
}

cplx DomainBoundary::integrate(std::span<const cplx> values) const {
    if (values.size() != total_nodes_)
        throw SampleMismatch("integrand sample count does not match the domain grids");
    cplx acc{0.0, 0.0};
    std::size_t offset = 0;
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        const std::size_t m = grids_[i].point.size();
        acc += curve_contour_integral(curves_[i], grids_[i], values.subspan(offset, m));
        offset += m;
    }
    return acc;
}

DomainBoundary build_domain(std::vector<BoundaryCurve> curves, DomainConfig cfg) {
    return DomainBoundary{std::move(curves), cfg};
}

}  // namespace meroext
