#include "meroext/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace meroext {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx{0.0, 0.0});
}

Polynomial Polynomial::from_roots(std::span<const cplx> roots) {
    std::vector<cplx> c{cplx{1.0, 0.0}};
    for (cplx r : roots) {
        c.push_back(cplx{0.0, 0.0});
        for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] = c[i - 1] - r * c[i];
        c[0] *= -r;
    }
    return Polynomial{std::move(c)};
}

cplx Polynomial::operator()(cplx z) const {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double Polynomial::coeff_scale() const {
    double s = 0.0;
    for (cplx c : coeffs_) s = std::max(s, std::abs(c));
    return s;
}

Polynomial Polynomial::deflated(cplx root) const {
    if (coeffs_.size() < 2) throw ZeroPolynomial("cannot deflate a constant polynomial");
    // Synthetic division by (z - root), dropping the remainder.
    std::vector<cplx> q(coeffs_.size() - 1);
    cplx carry = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) {
        q[i - 1] = carry;
        carry = coeffs_[i - 1] + carry * root;
    }
    return Polynomial{std::move(q)};
}

std::vector<RootCluster> poly_roots(std::span<const cplx> coeffs, const RootConfig& cfg) {
    double scale = 0.0;
    for (cplx c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale == 0.0 || coeffs.empty())
        throw ZeroPolynomial("all polynomial coefficients vanish");

    std::size_t deg = coeffs.size() - 1;
    while (deg > 0 && std::abs(coeffs[deg]) <= cfg.drop_tol * scale) --deg;
    if (deg == 0) return {};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    const cplx lead = coeffs[deg];
    for (std::size_t i = 0; i + 1 < deg; ++i) companion(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / lead;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<cplx> roots(deg);
    for (std::size_t i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(static_cast<long>(i));

    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    double max_root = 0.0;
    for (cplx r : roots) max_root = std::max(max_root, std::abs(r));
    const double radius = cfg.cluster_radius * (1.0 + max_root);

    // Greedy clustering on the sorted roots.
    std::vector<RootCluster> clusters;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        cplx sum = roots[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(roots[j] - sum / static_cast<double>(count)) <= radius) {
                sum += roots[j];
                ++count;
                used[j] = true;
            }
        }
        clusters.push_back({sum / static_cast<double>(count), count});
    }
    return clusters;
}

}  // namespace meroext
