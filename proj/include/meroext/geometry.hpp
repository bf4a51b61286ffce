#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "meroext/common.hpp"

namespace meroext {

/// Closed real-analytic curve given by a truncated Fourier series
/// gamma(t) = sum_k a_k e^{ikt}, t in [0, 2pi).
class BoundaryCurve {
public:
    BoundaryCurve() = default;
    /// coeffs: list of (k, a_k) pairs, k may be negative.
    BoundaryCurve(std::vector<std::pair<int, cplx>> coeffs, std::size_t nodes = 256);

    static BoundaryCurve circle(cplx center, double radius, std::size_t nodes = 256);

    cplx eval(double t) const;
    cplx deriv(double t) const;

    std::size_t node_count() const { return nodes_; }
    int orientation() const { return orientation_; }
    void set_orientation(int o) { orientation_ = o; }
    const std::vector<std::pair<int, cplx>>& coeffs() const { return coeffs_; }

    /// Positive for counterclockwise intrinsic traversal.
    double signed_area() const;

private:
    std::vector<std::pair<int, cplx>> coeffs_;
    std::size_t nodes_ = 256;
    int orientation_ = +1;  // +1 keeps the intrinsic traversal, -1 reverses it
};

/// Precomputed uniform quadrature grid for one curve.
struct CurveGrid {
    std::vector<double> t;
    std::vector<cplx> point;
    std::vector<cplx> tangent;  // gamma'(t_i), intrinsic direction
};

enum class Region { Interior, Hole, Exterior, NearBoundary };

struct RegionTag {
    Region region = Region::Exterior;
    std::size_t hole_index = 0;  // meaningful only for Region::Hole

    friend bool operator==(const RegionTag&, const RegionTag&) = default;
};

struct DomainConfig {
    double band_frac = 1e-3;         // delta_band = band_frac * diameter
    double simplicity_factor = 10.0; // threshold = factor * max|gamma'| * (2pi/M)
};

/// Trapezoidal integral of sampled values over one curve, with orientation.
cplx curve_contour_integral(const BoundaryCurve& curve, const CurveGrid& grid,
                            std::span<const cplx> values);

/// Integer winding number of the curve around z (intrinsic traversal,
/// not multiplied by the stored orientation). Refines by exact curve
/// evaluation until every argument step is below pi/2.
int curve_winding(const BoundaryCurve& curve, const CurveGrid& grid, cplx z);

/// Multiply connected domain bounded by pairwise disjoint Fourier curves.
/// Construction identifies the outer curve, normalizes orientations to the
/// standard convention (outer counterclockwise, holes clockwise) and builds
/// the quadrature grids.
class DomainBoundary {
public:
    explicit DomainBoundary(std::vector<BoundaryCurve> curves, DomainConfig cfg = {});

    std::size_t curve_count() const { return curves_.size(); }
    std::size_t outer_index() const { return outer_index_; }
    const BoundaryCurve& curve(std::size_t i) const { return curves_[i]; }
    const CurveGrid& grid(std::size_t i) const { return grids_[i]; }
    const DomainConfig& config() const { return cfg_; }

    std::size_t total_nodes() const { return total_nodes_; }
    double diameter() const { return diameter_; }
    double band_width() const { return band_width_; }  // delta_band
    cplx centroid() const { return centroid_; }
    double radius() const { return radius_; }          // max |sample - centroid|

    double distance_to_boundary(cplx z) const;  // sample-based

    /// Winding of curve i around z in the standard (normalized) orientation.
    int effective_winding(std::size_t i, cplx z) const;

    /// Classifies z, returning NearBoundary within `band` of a boundary
    /// sample (band < 0 uses the domain default).
    RegionTag locate(cplx z, double band = -1.0) const;

    /// Contour integral over bD of sampled integrand values, curves
    /// concatenated in index order, standard orientation.
    cplx integrate(std::span<const cplx> values) const;

private:
    std::vector<BoundaryCurve> curves_;
    std::vector<CurveGrid> grids_;
    DomainConfig cfg_;
    std::size_t outer_index_ = 0;
    std::size_t total_nodes_ = 0;
    double diameter_ = 0.0;
    double band_width_ = 0.0;
    cplx centroid_;
    double radius_ = 0.0;
};

/// Convenience alias used throughout: at least one curve required.
DomainBoundary build_domain(std::vector<BoundaryCurve> curves, DomainConfig cfg = {});

}  // namespace meroext
