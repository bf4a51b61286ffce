#pragma once

#include <string>

#include "meroext/argument.hpp"
#include "meroext/generator.hpp"
#include "meroext/poles.hpp"

namespace meroext::io {

/// Domain spec file: {"curves": [{"coeffs": [[k, re, im], ...], "nodes": M}, ...]}
std::vector<BoundaryCurve> read_curves(const std::string& path);
DomainBoundary read_domain(const std::string& path, DomainConfig cfg = {},
                           std::size_t nodes_override = 0);
void write_domain(const std::string& path, const std::vector<BoundaryCurve>& curves);

/// Samples file: CSV records (curve_index, node_index, re_f, im_f) in grid order.
BoundarySamples read_samples(const std::string& path, const DomainBoundary& domain);
void write_samples(const std::string& path, const DomainBoundary& domain,
                   const BoundarySamples& samples);

GeneratorSpec read_generator(const std::string& path);

std::string verdict_name(Verdict v);

void write_report(const std::string& path, const ExtensionReport& report);
ExtensionReport read_report(const std::string& path);

void write_probe_report(const std::string& path, const ProbeReport& report);

/// Ground-truth sidecar accompanying synthetic samples.
void write_sidecar(const std::string& path, const GeneratorSpec& spec);

/// 17-significant-digit decimal, round-trip exact.
std::string format_double(double x);

}  // namespace meroext::io
