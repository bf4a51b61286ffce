#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "meroext/cauchy.hpp"
#include "meroext/polynomial.hpp"

namespace meroext {

struct WindingResult {
    long winding = 0;
    bool resolved = false;      // every argument step below pi/2
    double min_modulus = 0.0;
};

/// Winding number of fixed boundary samples around the origin, following the
/// standard orientation. No refinement: unresolved samples stay unresolved
/// rather than being interpolated.
WindingResult winding_of_samples(const DomainBoundary& domain,
                                 const BoundarySamples& phi,
                                 double min_modulus_floor = 0.0);

using LoopFn = std::function<cplx(std::size_t curve, double t)>;

/// Winding number of a generator-backed loop function; the sampling density
/// doubles adaptively until every step resolves. Throws NearZero when the
/// loop passes too close to the origin and Unresolved at the refinement cap.
long winding_number(const DomainBoundary& domain, const LoopFn& phi,
                    double min_modulus_floor = 0.0,
                    std::size_t max_doublings = 14);

struct ArgPrincipleResult {
    long boundary_winding = 0;     // W(f) on bD
    long zeros_minus_poles = 0;    // nu_0 - nu_p, from the shrunk boundary
    long zeros = 0;                // nu_0
    long poles = 0;                // nu_p = deg Q
};

/// Checks the argument-principle identity W(f) = nu_0 - nu_p for data with a
/// known extension h/Q; nu_0 is counted by the winding of the reconstructed
/// extension along a slightly shrunk boundary.
ArgPrincipleResult argument_principle_check(const DomainBoundary& domain,
                                            const BoundarySamples& f,
                                            const Polynomial& q,
                                            double shrink_frac = 2e-2);

/// Random rational elements of A(D): constants plus simple poles placed in
/// the complementary components, at a safety margin from bD.
struct RationalProbe {
    struct Term {
        cplx coeff;
        cplx pole;
    };
    cplx p_const{1.0, 0.0};
    cplx q_const{0.0, 0.0};
    std::vector<Term> p_terms;
    std::vector<Term> q_terms;
    std::uint64_t seed = 0;

    cplx eval_p(cplx z) const;
    cplx eval_q(cplx z) const;
};

RationalProbe make_probe(const DomainBoundary& domain, std::uint64_t seed,
                         std::size_t complexity, double margin = -1.0);

struct HarnessConfig {
    std::size_t complexity = 2;
    double rho_min = 1e-6;        // admissibility floor, relative to scale(Pf+Q)
    double margin_factor = 2.0;   // probe-pole margin = factor * delta_band
};

struct ProbeReport {
    std::size_t trials = 0;
    std::size_t admissible = 0;
    std::size_t unresolved = 0;
    long n_bound = 0;
    bool any_admissible = false;
    long min_winding = 0;
    std::vector<long> windings;             // admissible trials, in trial order
    std::vector<std::uint64_t> violation_seeds;  // trials with W < -N
};

/// Theorem-style necessary-condition harness: for seeded random probes P, Q
/// the winding of P f + Q must stay >= -N when f extends with at most N
/// poles. Violations are evidence of non-extendibility, never proof of the
/// converse.
ProbeReport probe_harness(const DomainBoundary& domain, const BoundarySamples& f,
                          std::size_t n, std::size_t trials, std::uint64_t seed,
                          const HarnessConfig& cfg = {});

}  // namespace meroext
