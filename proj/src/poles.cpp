#include "meroext/poles.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace meroext {

namespace {

BoundarySamples multiply_by_polynomial(const DomainBoundary& domain,
                                       const BoundarySamples& f, const Polynomial& p) {
    std::vector<std::vector<cplx>> values(domain.curve_count());
    for (std::size_t i = 0; i < domain.curve_count(); ++i) {
        const auto& g = domain.grid(i);
        values[i].resize(g.point.size());
        for (std::size_t j = 0; j < g.point.size(); ++j)
            values[i][j] = p(g.point[j]) * f.values()[i][j];
    }
    return BoundarySamples{std::move(values)};
}

std::vector<cplx> cluster_roots_flat(const std::vector<RootCluster>& clusters) {
    std::vector<cplx> flat;
    for (const auto& c : clusters)
        for (int k = 0; k < c.multiplicity; ++k) flat.push_back(c.location);
    return flat;
}

Polynomial polynomial_from_clusters(const std::vector<RootCluster>& clusters) {
    const auto flat = cluster_roots_flat(clusters);
    return Polynomial::from_roots(flat);
}

}  // namespace

HankelSystem build_hankel(const MomentSequence& moments, std::size_t n) {
    if (n < 1) throw InsufficientMoments("Hankel order must be at least 1");
    if (moments.count() < 2 * n)
        throw InsufficientMoments("need at least 2N moments for the order-N system");
    HankelSystem sys;
    sys.n = n;
    sys.moments = moments;
    sys.h.assign(n, std::vector<cplx>(n + 1));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col <= n; ++col)
            sys.h[row][col] = moments.c[col + row];  // c_{(col) + (row+1)}
    return sys;
}

NullVectorResult null_vector(const HankelSystem& sys) {
    const long rows = static_cast<long>(sys.n);
    const long cols = static_cast<long>(sys.n) + 1;
    Eigen::MatrixXcd h(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) h(r, c) = sys.h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h, Eigen::ComputeFullV);
    Eigen::VectorXcd d = svd.matrixV().col(cols - 1);

    // Deterministic phase: rotate the largest-modulus coefficient onto the
    // positive real axis.
    long pivot = 0;
    for (long i = 1; i < cols; ++i)
        if (std::abs(d(i)) > std::abs(d(pivot))) pivot = i;
    const cplx phase = std::abs(d(pivot)) > 0.0 ? d(pivot) / std::abs(d(pivot)) : cplx{1.0, 0.0};
    d /= phase;
    d.normalize();

    NullVectorResult result;
    result.coeffs.assign(d.data(), d.data() + cols);
    result.singular_values.assign(svd.singularValues().data(),
                                  svd.singularValues().data() + svd.singularValues().size());
    result.residual = (h * d).norm();
    return result;
}

RootPartition classify_roots(const std::vector<RootCluster>& roots,
                             const DomainBoundary& domain, double band) {
    if (band < 0.0) band = domain.band_width();
    RootPartition part;
    for (const auto& r : roots) {
        if (domain.distance_to_boundary(r.location) < band) {
            part.boundary.push_back(r);
            continue;
        }
        const RegionTag tag = domain.locate(r.location, band);
        if (tag.region == Region::Interior)
            part.inside.push_back(r);
        else
            part.outside.push_back(r);
    }
    return part;
}

std::vector<cplx> tail_residuals(const MomentSequence& moments,
                                 std::span<const cplx> p_coeffs, std::size_t extra) {
    if (p_coeffs.empty()) throw ZeroPolynomial("empty candidate polynomial");
    const std::size_t n = p_coeffs.size() - 1;
    if (moments.count() < 2 * n + extra)
        throw InsufficientMoments("need 2N + extra moments for the tail residuals");
    std::vector<cplx> d(extra);
    for (std::size_t j = 1; j <= extra; ++j) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i <= n; ++i) acc += p_coeffs[i] * moments.c[i + n + j - 1];
        d[j - 1] = acc;  // d_{N+j}
    }
    return d;
}

ExtensionReport detect(const DomainBoundary& domain, const BoundarySamples& f,
                       std::size_t n, const DetectConfig& cfg) {
    f.validate(domain);

    ExtensionReport report;
    report.n_bound = n;
    report.scale = f.scale();

    ProbeConfig probes = cfg.probes;
    probes.check_moments = n + 8;

    auto finish_plain = [&](const HoloTestResult& ht) {
        report.holo_residual = ht.max_residual;
        report.q_coeffs = {cplx{1.0, 0.0}};
        report.mismatch = -1.0;
        report.verdict = ht.extendible ? Verdict::Holomorphic : Verdict::NotExtendible;
    };

    if (n == 0) {
        report.p_coeffs = {cplx{1.0, 0.0}};
        finish_plain(holo_test(domain, f, probes, cfg.tol_rel));
        return report;
    }

    const std::size_t moment_count = 2 * n + cfg.extra_moments;
    const MomentSequence moments = compute_moments(domain, f, moment_count);

    const HankelSystem sys = build_hankel(moments, n);
    const NullVectorResult nv = null_vector(sys);
    report.singular_values = nv.singular_values;

    // Degenerate system: the moments already vanish, so every candidate P
    // works and the data is tested directly for a holomorphic extension.
    double moment_residual = 0.0;
    double rpow = 1.0;
    for (std::size_t j = 0; j < 2 * n; ++j) {
        rpow *= domain.radius();
        moment_residual = std::max(moment_residual, std::abs(moments.c[j]) / rpow);
    }
    if (moment_residual <= cfg.tol_rel * report.scale) {
        report.p_coeffs = {cplx{1.0, 0.0}};
        finish_plain(holo_test(domain, f, probes, cfg.tol_rel));
        return report;
    }

    report.p_coeffs = nv.coeffs;
    const Polynomial p{nv.coeffs};

    const std::vector<cplx> tails = tail_residuals(moments, nv.coeffs, cfg.extra_moments);
    for (cplx d : tails) report.tail.push_back(std::abs(d));

    const BoundarySamples pf = multiply_by_polynomial(domain, f, p);
    const HoloTestResult ht = holo_test(domain, pf, probes, cfg.tol_rel);
    report.holo_residual = ht.max_residual;

    std::vector<RootCluster> roots = poly_roots(nv.coeffs, cfg.roots);
    RootPartition part = classify_roots(roots, domain);
    report.discarded_boundary = part.boundary;
    report.outside_roots = part.outside;

    if (!ht.extendible) {
        report.q_coeffs = polynomial_from_clusters(part.inside).coeffs();
        report.mismatch = -1.0;
        report.verdict = Verdict::NotExtendible;
        return report;
    }

    // Minimal inside factor: drop candidate poles the data does not require.
    // Boundary zeros are removable, so only strictly interior roots enter Q.
    std::vector<RootCluster> inside = part.inside;
    if (cfg.deflate) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < inside.size(); ++k) {
                std::vector<RootCluster> trial = inside;
                if (--trial[k].multiplicity == 0) trial.erase(trial.begin() + static_cast<long>(k));
                const Polynomial q_trial = polynomial_from_clusters(trial);
                const BoundarySamples qf = multiply_by_polynomial(domain, f, q_trial);
                if (holo_test(domain, qf, probes, cfg.tol_rel).extendible) {
                    inside = std::move(trial);
                    changed = true;
                    break;
                }
            }
        }
    }

    const Polynomial q = polynomial_from_clusters(inside);
    report.q_coeffs = q.coeffs();
    report.mismatch = boundary_mismatch(domain, f, q, cfg.mismatch);

    if (report.mismatch <= cfg.mismatch_tol * report.scale) {
        report.poles = inside;
        report.verdict = q.degree() >= 1 ? Verdict::Meromorphic : Verdict::Holomorphic;
    } else {
        report.conflicting_evidence = true;
        report.verdict = Verdict::NotExtendible;
    }
    return report;
}

}  // namespace meroext
