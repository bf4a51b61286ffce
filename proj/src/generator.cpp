#include "meroext/generator.hpp"

#include <cmath>

namespace meroext {

namespace {

cplx eval_poly(const std::vector<cplx>& coeffs, cplx z) {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

cplx GeneratorSpec::eval(cplx z) const {
    switch (kind) {
        case Kind::Rational: {
            cplx den{1.0, 0.0};
            for (const auto& p : poles)
                for (int k = 0; k < p.multiplicity; ++k) den *= z - p.location;
            cplx value = eval_poly(numerator, z) / den;
            if (!entire_poly.empty()) value += eval_poly(entire_poly, z);
            return value;
        }
        case Kind::Entire:
            switch (form) {
                case EntireForm::Poly: return eval_poly(coeffs, z);
                case EntireForm::Exp: return scale * std::exp(z);
                case EntireForm::Sin: return scale * std::sin(z);
            }
            return {};
        case Kind::Essential:
            return scale * std::exp(cplx{1.0, 0.0} / (z - center));
        case Kind::Conjugate:
            if (!base) throw InputError("conjugate generator needs a base spec");
            return std::conj(base->eval(z));
    }
    return {};
}

std::vector<RootCluster> GeneratorSpec::true_poles() const {
    if (kind == Kind::Rational || kind == Kind::Conjugate) return poles;
    return {};
}

bool GeneratorSpec::meromorphic() const { return kind != Kind::Essential; }

BoundarySamples synth_samples(const DomainBoundary& domain, const GeneratorSpec& spec) {
    return BoundarySamples::from_function(domain, [&spec](cplx z) { return spec.eval(z); });
}

}  // namespace meroext
