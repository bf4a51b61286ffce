#pragma once

#include <vector>

#include "meroext/cauchy.hpp"

namespace meroext {

/// The N x (N+1) homogeneous moment system whose null vector gives the
/// candidate pole polynomial: row j, column i holds c_{i+j}.
struct HankelSystem {
    std::size_t n = 0;                // N
    std::vector<std::vector<cplx>> h; // n rows, n+1 columns
    MomentSequence moments;

    cplx at(std::size_t row, std::size_t col) const { return h[row][col]; }
};

HankelSystem build_hankel(const MomentSequence& moments, std::size_t n);

struct NullVectorResult {
    std::vector<cplx> coeffs;            // D_0..D_N, unit norm, phase-normalized
    std::vector<double> singular_values; // descending
    double residual = 0.0;               // ||H D||
};

/// Unit-norm minimizer of ||H D|| (smallest right singular vector), with the
/// largest-modulus coefficient rotated to the positive real axis.
NullVectorResult null_vector(const HankelSystem& h);

struct RootPartition {
    std::vector<RootCluster> inside;
    std::vector<RootCluster> boundary;  // discarded from Q (removable)
    std::vector<RootCluster> outside;   // holes and exterior
};

RootPartition classify_roots(const std::vector<RootCluster>& roots,
                             const DomainBoundary& domain, double band = -1.0);

/// Tail coefficients d_{N+j} = sum_i D_i c_{i+N+j}, j = 1..extra, of the
/// expansion of P(z) * sum_k c_k z^{-k}; they vanish when P f extends.
std::vector<cplx> tail_residuals(const MomentSequence& moments,
                                 std::span<const cplx> p_coeffs,
                                 std::size_t extra);

enum class Verdict { Holomorphic, Meromorphic, NotExtendible };

struct DetectConfig {
    double tol_rel = 1e-8;       // holo_test tolerance, relative to scale
    double mismatch_tol = 1e-6;  // boundary_mismatch tolerance, relative to scale
    std::size_t extra_moments = 8;
    ProbeConfig probes;
    RootConfig roots;
    MismatchConfig mismatch;
    bool deflate = true;  // strip candidate poles the data does not require
};

struct ExtensionReport {
    Verdict verdict = Verdict::NotExtendible;
    bool conflicting_evidence = false;
    std::size_t n_bound = 0;  // the N the question was asked for

    std::vector<cplx> p_coeffs;           // candidate polynomial P
    std::vector<double> singular_values;  // of the Hankel system
    std::vector<cplx> q_coeffs;           // inside factor Q (monic)
    std::vector<RootCluster> poles;       // zeros of Q
    std::vector<RootCluster> discarded_boundary;
    std::vector<RootCluster> outside_roots;  // factor S

    double holo_residual = 0.0;
    std::vector<double> tail;  // |d_{N+1}|, |d_{N+2}|, ...
    double mismatch = 0.0;
    double scale = 0.0;
};

/// Full detection pipeline: moments -> Hankel null vector -> holomorphic test
/// of P f -> root classification -> boundary certification of h/Q.
ExtensionReport detect(const DomainBoundary& domain, const BoundarySamples& f,
                       std::size_t n, const DetectConfig& cfg = {});

}  // namespace meroext
