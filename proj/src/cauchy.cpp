#include "meroext/cauchy.hpp"

#include <algorithm>
#include <cmath>

namespace meroext {

namespace {

constexpr cplx kInv2PiI{0.0, -1.0 / kTwoPi};  // 1 / (2 pi i)

/// Flattened quadrature node set; weight = orientation * h * gamma'(t_i).
struct NodeSet {
    std::vector<cplx> point;
    std::vector<cplx> weight;
};

NodeSet flatten_nodes(const DomainBoundary& domain, std::size_t decimation = 1) {
    NodeSet ns;
    for (std::size_t i = 0; i < domain.curve_count(); ++i) {
        const auto& g = domain.grid(i);
        const std::size_t m = g.point.size() / decimation;
        const double w = static_cast<double>(domain.curve(i).orientation()) * kTwoPi /
                         static_cast<double>(m);
        for (std::size_t j = 0; j < m; ++j) {
            ns.point.push_back(g.point[j * decimation]);
            ns.weight.push_back(w * g.tangent[j * decimation]);
        }
    }
    return ns;
}

std::vector<cplx> flatten_values(const BoundarySamples& f, std::size_t decimation = 1) {
    std::vector<cplx> out;
    for (const auto& arr : f.values())
        for (std::size_t j = 0; j < arr.size() / decimation; ++j)
            out.push_back(arr[j * decimation]);
    return out;
}

/// Plain discretized Cauchy integral (1/2pi i) sum f_i w_i / (zeta_i - z).
cplx raw_transform(const NodeSet& ns, std::span<const cplx> values, cplx z) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < ns.point.size(); ++i)
        acc += values[i] * ns.weight[i] / (ns.point[i] - z);
    return kInv2PiI * acc;
}

/// Compensated (barycentric) form for interior points: the same sum divided
/// by the discretization of (1/2pi i) \oint dzeta/(zeta - z), whose exact
/// value is 1. The ratio interpolates the boundary data and stays spectrally
/// accurate arbitrarily close to the curve.
cplx compensated_interior(const NodeSet& ns, std::span<const cplx> values, cplx z) {
    cplx num{0.0, 0.0};
    cplx den{0.0, 0.0};
    for (std::size_t i = 0; i < ns.point.size(); ++i) {
        const cplx k = ns.weight[i] / (ns.point[i] - z);
        num += values[i] * k;
        den += k;
    }
    return num / den;
}

}  // namespace

BoundarySamples::BoundarySamples(std::vector<std::vector<cplx>> values)
    : values_(std::move(values)) {}

BoundarySamples BoundarySamples::from_function(const DomainBoundary& domain,
                                               const std::function<cplx(cplx)>& f) {
    std::vector<std::vector<cplx>> values(domain.curve_count());
    for (std::size_t i = 0; i < domain.curve_count(); ++i) {
        const auto& g = domain.grid(i);
        values[i].reserve(g.point.size());
        for (cplx p : g.point) values[i].push_back(f(p));
    }
    return BoundarySamples{std::move(values)};
}

double BoundarySamples::scale() const {
    double s = 0.0;
    for (const auto& arr : values_)
        for (cplx v : arr) s = std::max(s, std::abs(v));
    return s;
}

std::vector<cplx> BoundarySamples::flatten() const { return flatten_values(*this); }

void BoundarySamples::validate(const DomainBoundary& domain) const {
    if (values_.size() != domain.curve_count())
        throw SampleMismatch("sample curve count does not match the domain");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].size() != domain.grid(i).point.size())
            throw SampleMismatch("sample array length does not match the curve grid");
        for (cplx v : values_[i])
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw SampleMismatch("non-finite boundary sample");
    }
}

MomentSequence compute_moments(const DomainBoundary& domain, const BoundarySamples& f,
                               std::size_t count) {
    if (count < 1) throw InsufficientMoments("moment count must be at least 1");
    f.validate(domain);
    const NodeSet ns = flatten_nodes(domain);
    const std::vector<cplx> vals = flatten_values(f);

    MomentSequence seq;
    seq.c.assign(count, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < ns.point.size(); ++i) {
        const cplx base = vals[i] * ns.weight[i];
        cplx zeta_pow{1.0, 0.0};
        for (std::size_t j = 0; j < count; ++j) {
            seq.c[j] += base * zeta_pow;
            zeta_pow *= ns.point[i];
        }
    }
    for (auto& c : seq.c) c *= -kInv2PiI;
    return seq;
}

cplx cauchy_transform(const DomainBoundary& domain, const BoundarySamples& f, cplx z) {
    f.validate(domain);
    const RegionTag tag = domain.locate(z);
    if (tag.region == Region::NearBoundary)
        throw ProbeTooClose("transform evaluation point lies in the boundary band");
    const NodeSet ns = flatten_nodes(domain);
    const std::vector<cplx> vals = flatten_values(f);
    return tag.region == Region::Interior ? compensated_interior(ns, vals, z)
                                          : raw_transform(ns, vals, z);
}

HoloTestResult holo_test(const DomainBoundary& domain, const BoundarySamples& g,
                         const ProbeConfig& cfg, double tol_rel) {
    g.validate(domain);
    const NodeSet ns = flatten_nodes(domain);
    const std::vector<cplx> vals = flatten_values(g);

    HoloTestResult result;
    result.scale = g.scale();
    result.field.component_max.assign(domain.curve_count(), 0.0);

    // Exterior ladder: rings of probes around the domain.
    const cplx center = domain.centroid();
    const double radius = domain.radius();
    for (std::size_t r = 0; r < cfg.exterior_radii.size(); ++r) {
        for (std::size_t k = 0; k < cfg.exterior_points; ++k) {
            const double angle = kTwoPi * (static_cast<double>(k) + 0.5 * static_cast<double>(r)) /
                                 static_cast<double>(cfg.exterior_points);
            const cplx z = center + cfg.exterior_radii[r] * radius * std::polar(1.0, angle);
            const cplx v = raw_transform(ns, vals, z);
            result.field.probes.push_back({z, {Region::Exterior, 0}, v});
            result.field.component_max[domain.outer_index()] =
                std::max(result.field.component_max[domain.outer_index()], std::abs(v));
        }
    }

    // Hole grids.
    const double clearance = std::max(domain.band_width(), cfg.clearance_frac * domain.diameter());
    for (std::size_t j = 0; j < domain.curve_count(); ++j) {
        if (j == domain.outer_index()) continue;
        double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
        for (cplx p : domain.grid(j).point) {
            x0 = std::min(x0, p.real());
            x1 = std::max(x1, p.real());
            y0 = std::min(y0, p.imag());
            y1 = std::max(y1, p.imag());
        }
        std::size_t placed = 0;
        for (std::size_t a = 0; a < cfg.hole_grid; ++a) {
            for (std::size_t b = 0; b < cfg.hole_grid; ++b) {
                const double fx = (static_cast<double>(a) + 0.5) / static_cast<double>(cfg.hole_grid);
                const double fy = (static_cast<double>(b) + 0.5) / static_cast<double>(cfg.hole_grid);
                const cplx z{x0 + fx * (x1 - x0), y0 + fy * (y1 - y0)};
                if (domain.distance_to_boundary(z) < clearance) continue;
                if (domain.locate(z) != RegionTag{Region::Hole, j}) continue;
                const cplx v = raw_transform(ns, vals, z);
                result.field.probes.push_back({z, {Region::Hole, j}, v});
                result.field.component_max[j] = std::max(result.field.component_max[j], std::abs(v));
                ++placed;
            }
        }
        if (placed == 0)
            throw NoProbes("hole component " + std::to_string(j) +
                           " is too thin to host probes outside the clearance band");
    }

    for (const auto& p : result.field.probes)
        result.field.max_abs = std::max(result.field.max_abs, std::abs(p.value));

    // Exterior tail: the expansion coefficients at infinity must vanish too;
    // far probes alone are insensitive to them.
    const MomentSequence moments = compute_moments(domain, g, std::max<std::size_t>(1, cfg.check_moments));
    result.moment_residuals.reserve(moments.count());
    double rpow = 1.0;
    for (std::size_t j = 0; j < moments.count(); ++j) {
        rpow *= radius;
        result.moment_residuals.push_back(std::abs(moments.c[j]) / rpow);
    }

    result.max_residual = result.field.max_abs;
    for (double m : result.moment_residuals) result.max_residual = std::max(result.max_residual, m);
    result.extendible = result.max_residual <= tol_rel * result.scale;
    return result;
}

cplx reconstruct(const DomainBoundary& domain, const BoundarySamples& f,
                 const Polynomial& q, cplx z) {
    f.validate(domain);
    const RegionTag tag = domain.locate(z);
    if (tag.region == Region::NearBoundary)
        throw ProbeTooClose("reconstruction point lies in the boundary band");
    if (tag.region != Region::Interior)
        throw InputError("reconstruction point must lie in the domain");

    const cplx qz = q(z);
    const double qfloor = 1e-10 * q.coeff_scale() * std::pow(1.0 + std::abs(z), static_cast<double>(q.degree()));
    if (std::abs(qz) <= qfloor) throw EvalAtPole("reconstruction requested at a detected pole");

    const NodeSet ns = flatten_nodes(domain);
    std::vector<cplx> qf = flatten_values(f);
    for (std::size_t i = 0; i < qf.size(); ++i) qf[i] *= q(ns.point[i]);
    return compensated_interior(ns, qf, z) / qz;
}

double boundary_mismatch(const DomainBoundary& domain, const BoundarySamples& f,
                         const Polynomial& q, const MismatchConfig& cfg) {
    f.validate(domain);
    // Quadrature on the even nodes only; the held-out comparison nodes never
    // feed the reconstruction they are checked against.
    const NodeSet ns = flatten_nodes(domain, 2);
    std::vector<cplx> qf = flatten_values(f, 2);
    for (std::size_t i = 0; i < qf.size(); ++i) qf[i] *= q(ns.point[i]);

    const double eps = cfg.offset_frac * domain.diameter();
    const double qfloor_base = 1e-10 * q.coeff_scale();

    double worst = 0.0;
    for (std::size_t ci = 0; ci < domain.curve_count(); ++ci) {
        const auto& g = domain.grid(ci);
        const double o = static_cast<double>(domain.curve(ci).orientation());
        for (std::size_t i = 1; i < g.point.size(); i += cfg.stride) {
            const cplx tangent = o * g.tangent[i];
            const cplx inward = cplx{0.0, 1.0} * tangent / std::abs(tangent);
            const cplx z = g.point[i] + eps * inward;
            const cplx qz = q(z);
            if (std::abs(qz) <= qfloor_base * std::pow(1.0 + std::abs(z), static_cast<double>(q.degree())))
                throw EvalAtPole("claimed extension has a pole inside the validation band");
            const cplx value = compensated_interior(ns, qf, z) / qz;
            worst = std::max(worst, std::abs(value - f.values()[ci][i]));
        }
    }
    return worst;
}

}  // namespace meroext
