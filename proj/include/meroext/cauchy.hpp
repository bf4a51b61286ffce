#pragma once

#include <functional>
#include <span>
#include <vector>

#include "meroext/geometry.hpp"
#include "meroext/polynomial.hpp"

namespace meroext {

/// Boundary values of a function at the domain's quadrature nodes,
/// one array per curve, aligned with the grids.
class BoundarySamples {
public:
    BoundarySamples() = default;
    explicit BoundarySamples(std::vector<std::vector<cplx>> values);

    static BoundarySamples from_function(const DomainBoundary& domain,
                                         const std::function<cplx(cplx)>& f);

    const std::vector<std::vector<cplx>>& values() const { return values_; }
    std::vector<std::vector<cplx>>& values() { return values_; }
    double scale() const;  // max |f| over all nodes
    std::vector<cplx> flatten() const;

    /// Checks array lengths against the domain's grids.
    void validate(const DomainBoundary& domain) const;

private:
    std::vector<std::vector<cplx>> values_;
};

struct MomentSequence {
    std::vector<cplx> c;  // c[j-1] holds c_j
    std::size_t count() const { return c.size(); }
};

/// c_j = -(1/2pi i) \oint_bD zeta^{j-1} f(zeta) dzeta, j = 1..count.
MomentSequence compute_moments(const DomainBoundary& domain,
                               const BoundarySamples& f, std::size_t count);

/// (1/2pi i) \oint_bD f(zeta)/(zeta - z) dzeta for z off the boundary band.
/// Interior points use the compensated (barycentric) form, which stays
/// accurate up to the band edge; hole/exterior points use the plain sum.
cplx cauchy_transform(const DomainBoundary& domain, const BoundarySamples& f,
                      cplx z);

struct ProbeConfig {
    std::vector<double> exterior_radii{1.5, 2.0, 4.0};  // multiples of domain radius
    std::size_t exterior_points = 16;                   // per ring
    std::size_t hole_grid = 5;                          // up to hole_grid^2 per hole
    double clearance_frac = 0.05;   // hole-probe clearance as fraction of diameter
    std::size_t check_moments = 16; // exterior moment check depth (J_check)
};

struct ProbePoint {
    cplx z;
    RegionTag tag;
    cplx value;
};

struct CauchyField {
    std::vector<ProbePoint> probes;
    std::vector<double> component_max;  // per curve-indexed complementary component
    double max_abs = 0.0;
};

struct HoloTestResult {
    bool extendible = false;
    double max_residual = 0.0;  // max over probes and scaled moment checks
    double scale = 0.0;
    CauchyField field;
    std::vector<double> moment_residuals;  // |c_j| / R^j
};

/// Tests holomorphic extendibility: the Cauchy transform of g must vanish on
/// every complementary component. Exterior decay is additionally checked via
/// the first check_moments moments. Throws NoProbes when a hole is too thin
/// to host any probe outside the clearance band.
HoloTestResult holo_test(const DomainBoundary& domain, const BoundarySamples& g,
                         const ProbeConfig& cfg = {}, double tol_rel = 1e-8);

/// Value of the meromorphic extension h/Q at an interior point z, where
/// h is the Cauchy transform of Q(zeta) f(zeta).
cplx reconstruct(const DomainBoundary& domain, const BoundarySamples& f,
                 const Polynomial& q, cplx z);

struct MismatchConfig {
    double offset_frac = 1e-12;  // inward offset as a fraction of the diameter
    std::size_t stride = 4;     // held-out nodes: indices == 1 (mod stride)
};

/// Certifies a claimed extension h/Q against the boundary data: the
/// reconstruction is evaluated just inside held-out nodes from a decimated
/// quadrature grid and compared with the held-out samples.
double boundary_mismatch(const DomainBoundary& domain, const BoundarySamples& f,
                         const Polynomial& q, const MismatchConfig& cfg = {});

}  // namespace meroext
