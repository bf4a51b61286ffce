#include "meroext/argument.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace meroext {

namespace {

struct LoopAccumulator {
    double total_arg = 0.0;
    double min_modulus = 1e300;
    double max_modulus = 0.0;
    bool resolved = true;

    void add_curve(std::span<const cplx> values, int orientation) {
        double curve_arg = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const cplx a = values[i];
            const cplx b = values[(i + 1) % values.size()];
            min_modulus = std::min({min_modulus, std::abs(a)});
            max_modulus = std::max({max_modulus, std::abs(a)});
            if (a == cplx{0.0, 0.0} || b == cplx{0.0, 0.0}) {
                min_modulus = 0.0;
                resolved = false;
                return;
            }
            const double step = std::arg(b / a);
            if (std::abs(step) >= std::numbers::pi / 2.0) resolved = false;
            curve_arg += step;
        }
        total_arg += static_cast<double>(orientation) * curve_arg;
    }

    long rounded() const { return std::lround(total_arg / kTwoPi); }
};

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

}  // namespace

WindingResult winding_of_samples(const DomainBoundary& domain, const BoundarySamples& phi,
                                 double min_modulus_floor) {
    phi.validate(domain);
    LoopAccumulator acc;
    for (std::size_t i = 0; i < domain.curve_count(); ++i)
        acc.add_curve(phi.values()[i], domain.curve(i).orientation());

    WindingResult result;
    result.min_modulus = acc.min_modulus;
    result.resolved = acc.resolved && acc.min_modulus > min_modulus_floor;
    result.winding = result.resolved ? acc.rounded() : 0;
    return result;
}

long winding_number(const DomainBoundary& domain, const LoopFn& phi,
                    double min_modulus_floor, std::size_t max_doublings) {
    for (std::size_t pass = 0;; ++pass) {
        LoopAccumulator acc;
        for (std::size_t ci = 0; ci < domain.curve_count(); ++ci) {
            const std::size_t m = domain.curve(ci).node_count() << pass;
            std::vector<cplx> values(m);
            for (std::size_t j = 0; j < m; ++j)
                values[j] = phi(ci, kTwoPi * static_cast<double>(j) / static_cast<double>(m));
            acc.add_curve(values, domain.curve(ci).orientation());
        }
        const double floor = std::max(min_modulus_floor, 1e-12 * acc.max_modulus);
        if (acc.min_modulus <= floor)
            throw NearZero("loop function passes too close to the origin");
        if (acc.resolved) return acc.rounded();
        if (pass >= max_doublings)
            throw Unresolved("winding number did not resolve under refinement");
    }
}

ArgPrincipleResult argument_principle_check(const DomainBoundary& domain,
                                            const BoundarySamples& f, const Polynomial& q,
                                            double shrink_frac) {
    f.validate(domain);

    const WindingResult wf = winding_of_samples(domain, f);
    if (wf.min_modulus <= 0.0) throw NearZero("boundary data vanishes at a node");
    if (!wf.resolved) throw Unresolved("boundary winding did not resolve at this sampling");

    // Winding of the reconstructed extension along the boundary shrunk into D.
    const double eps = shrink_frac * domain.diameter();
    std::vector<std::vector<cplx>> shrunk(domain.curve_count());
    for (std::size_t ci = 0; ci < domain.curve_count(); ++ci) {
        const auto& g = domain.grid(ci);
        const double o = static_cast<double>(domain.curve(ci).orientation());
        shrunk[ci].resize(g.point.size());
        for (std::size_t i = 0; i < g.point.size(); ++i) {
            const cplx tangent = o * g.tangent[i];
            const cplx inward = cplx{0.0, 1.0} * tangent / std::abs(tangent);
            shrunk[ci][i] = reconstruct(domain, f, q, g.point[i] + eps * inward);
        }
    }
    LoopAccumulator acc;
    for (std::size_t ci = 0; ci < domain.curve_count(); ++ci)
        acc.add_curve(shrunk[ci], domain.curve(ci).orientation());
    if (acc.min_modulus <= 0.0) throw NearZero("extension vanishes on the shrunk boundary");
    if (!acc.resolved) throw Unresolved("shrunk-boundary winding did not resolve");

    ArgPrincipleResult result;
    result.boundary_winding = wf.winding;
    result.zeros_minus_poles = acc.rounded();
    result.poles = static_cast<long>(q.degree());
    result.zeros = result.zeros_minus_poles + result.poles;
    return result;
}

cplx RationalProbe::eval_p(cplx z) const {
    cplx acc = p_const;
    for (const auto& t : p_terms) acc += t.coeff / (z - t.pole);
    return acc;
}

cplx RationalProbe::eval_q(cplx z) const {
    cplx acc = q_const;
    for (const auto& t : q_terms) acc += t.coeff / (z - t.pole);
    return acc;
}

RationalProbe make_probe(const DomainBoundary& domain, std::uint64_t seed,
                         std::size_t complexity, double margin) {
    if (margin < 0.0) margin = 2.0 * domain.band_width();
    std::mt19937_64 rng(seed);

    auto random_coeff = [&rng]() {
        const double modulus = std::exp(std::log(0.05) + uniform01(rng) * (std::log(2.0) - std::log(0.05)));
        const double phase = kTwoPi * uniform01(rng);
        return std::polar(modulus, phase);
    };

    std::vector<std::size_t> holes;
    for (std::size_t i = 0; i < domain.curve_count(); ++i)
        if (i != domain.outer_index()) holes.push_back(i);

    auto random_pole = [&]() -> cplx {
        // Complementary components only: the exterior, or one of the holes.
        for (int attempt = 0; attempt < 200; ++attempt) {
            const bool use_hole = !holes.empty() && uniform01(rng) < 0.5;
            cplx z;
            if (use_hole) {
                const std::size_t j = holes[static_cast<std::size_t>(uniform01(rng) *
                                            static_cast<double>(holes.size())) % holes.size()];
                double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
                for (cplx p : domain.grid(j).point) {
                    x0 = std::min(x0, p.real());
                    x1 = std::max(x1, p.real());
                    y0 = std::min(y0, p.imag());
                    y1 = std::max(y1, p.imag());
                }
                z = cplx{x0 + uniform01(rng) * (x1 - x0), y0 + uniform01(rng) * (y1 - y0)};
                if (domain.distance_to_boundary(z) < margin) continue;
                if (domain.locate(z) != RegionTag{Region::Hole, j}) continue;
            } else {
                const double r = domain.radius() + margin + uniform01(rng) * 1.5 * domain.radius();
                z = domain.centroid() + std::polar(r, kTwoPi * uniform01(rng));
                if (domain.distance_to_boundary(z) < margin) continue;
                if (domain.locate(z).region != Region::Exterior) continue;
            }
            return z;
        }
        throw Error("could not place a probe pole outside the margin");
    };

    RationalProbe probe;
    probe.seed = seed;
    probe.p_const = random_coeff();
    probe.q_const = random_coeff();
    const std::size_t np = complexity == 0 ? 0
                           : static_cast<std::size_t>(uniform01(rng) * static_cast<double>(complexity + 1)) %
                                 (complexity + 1);
    const std::size_t nq = complexity == 0 ? 0
                           : static_cast<std::size_t>(uniform01(rng) * static_cast<double>(complexity + 1)) %
                                 (complexity + 1);
    for (std::size_t i = 0; i < np; ++i) probe.p_terms.push_back({random_coeff(), random_pole()});
    for (std::size_t i = 0; i < nq; ++i) probe.q_terms.push_back({random_coeff(), random_pole()});
    return probe;
}

ProbeReport probe_harness(const DomainBoundary& domain, const BoundarySamples& f,
                          std::size_t n, std::size_t trials, std::uint64_t seed,
                          const HarnessConfig& cfg) {
    if (trials < 1) throw InputError("probe harness needs at least one trial");
    f.validate(domain);

    ProbeReport report;
    report.trials = trials;
    report.n_bound = static_cast<long>(n);

    const double margin = cfg.margin_factor * domain.band_width();

    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t tseed = mix_seed(seed, t);
        const RationalProbe probe = make_probe(domain, tseed, cfg.complexity, margin);

        std::vector<std::vector<cplx>> values(domain.curve_count());
        double scale = 0.0;
        double min_mod = 1e300;
        for (std::size_t ci = 0; ci < domain.curve_count(); ++ci) {
            const auto& g = domain.grid(ci);
            values[ci].resize(g.point.size());
            for (std::size_t i = 0; i < g.point.size(); ++i) {
                const cplx z = g.point[i];
                values[ci][i] = probe.eval_p(z) * f.values()[ci][i] + probe.eval_q(z);
                scale = std::max(scale, std::abs(values[ci][i]));
                min_mod = std::min(min_mod, std::abs(values[ci][i]));
            }
        }
        if (min_mod < cfg.rho_min * scale) continue;  // theorem hypothesis Pf+Q != 0

        const WindingResult wr = winding_of_samples(domain, BoundarySamples{values});
        if (!wr.resolved) {
            ++report.unresolved;
            continue;
        }
        ++report.admissible;
        report.windings.push_back(wr.winding);
        if (!report.any_admissible || wr.winding < report.min_winding)
            report.min_winding = wr.winding;
        report.any_admissible = true;
        if (wr.winding < -static_cast<long>(n)) report.violation_seeds.push_back(tseed);
    }

    if (!report.any_admissible)
        throw AllTrialsInadmissible("every probe trial was inadmissible or unresolved");
    return report;
}

}  // namespace meroext
