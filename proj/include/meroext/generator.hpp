#pragma once

#include <memory>
#include <vector>

#include "meroext/cauchy.hpp"
#include "meroext/polynomial.hpp"

namespace meroext {

/// Synthetic boundary-data generators used for fixtures and golden tests.
struct GeneratorSpec {
    enum class Kind { Rational, Entire, Essential, Conjugate };
    enum class EntireForm { Poly, Exp, Sin };

    Kind kind = Kind::Entire;

    // rational: R(z) / prod (z - p_i)^{m_i} + entire part
    std::vector<RootCluster> poles;
    std::vector<cplx> numerator{cplx{1.0, 0.0}};
    std::vector<cplx> entire_poly;  // optional additive polynomial part

    // entire: poly coefficients, or scale * exp(z) / scale * sin(z)
    EntireForm form = EntireForm::Poly;
    std::vector<cplx> coeffs;
    cplx scale{1.0, 0.0};

    // essential: scale * exp(1 / (z - center))
    cplx center{0.0, 0.0};

    // conjugate: conj(base(z)) evaluated on bD
    std::shared_ptr<GeneratorSpec> base;

    cplx eval(cplx z) const;

    /// Poles of the function this generator produces on D (empty when the
    /// data is holomorphic or has no meromorphic extension at all).
    std::vector<RootCluster> true_poles() const;
    bool meromorphic() const;  // false only for the essential kind
};

BoundarySamples synth_samples(const DomainBoundary& domain, const GeneratorSpec& spec);

}  // namespace meroext
