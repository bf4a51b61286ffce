#pragma once

#include <span>
#include <vector>

#include "meroext/common.hpp"

namespace meroext {

/// Dense polynomial with complex coefficients, ascending powers.
class Polynomial {
public:
    Polynomial() : coeffs_{cplx{1.0, 0.0}} {}
    explicit Polynomial(std::vector<cplx> coeffs);

    static Polynomial one() { return Polynomial{}; }
    /// Monic polynomial with the given roots (repeated for multiplicity).
    static Polynomial from_roots(std::span<const cplx> roots);

    cplx operator()(cplx z) const;

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    double coeff_scale() const;

    /// Divides out a single root factor (z - r); the root must actually
    /// divide the polynomial to working precision.
    Polynomial deflated(cplx root) const;

private:
    std::vector<cplx> coeffs_;
};

struct RootCluster {
    cplx location;
    int multiplicity = 1;
};

struct RootConfig {
    double drop_tol = 1e-10;       // relative trailing-coefficient drop
    double cluster_radius = 1e-5;  // scaled by (1 + max|root|)
};

/// All roots of the effective polynomial, merged into multiplicity clusters.
std::vector<RootCluster> poly_roots(std::span<const cplx> coeffs,
                                    const RootConfig& cfg = {});

}  // namespace meroext
