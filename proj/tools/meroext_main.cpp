#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "meroext/argument.hpp"
#include "meroext/generator.hpp"
#include "meroext/io.hpp"
#include "meroext/poles.hpp"

namespace {

using namespace meroext;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotExtendible = 3;
constexpr int kExitConflicting = 4;

struct CommonOpts {
    std::string domain_file;
    std::string samples_file;
    std::size_t nodes = 0;       // 0 keeps the domain file's node counts
    double tol_rel = 1e-8;
    std::string out;
    std::string format = "json";
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write file: " + out);
    f << text;
}

std::string poles_csv(const std::vector<RootCluster>& poles) {
    std::ostringstream s;
    s << "re,im,multiplicity\n";
    for (const auto& p : poles)
        s << io::format_double(p.location.real()) << ',' << io::format_double(p.location.imag())
          << ',' << p.multiplicity << '\n';
    return s.str();
}

int verdict_exit_code(const ExtensionReport& report) {
    if (report.verdict == Verdict::NotExtendible)
        return report.conflicting_evidence ? kExitConflicting : kExitNotExtendible;
    return kExitOk;
}

int cmd_domain_check(const CommonOpts& opts) {
    const DomainBoundary domain = io::read_domain(opts.domain_file, {}, opts.nodes);
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < domain.curve_count(); ++i)
        for (std::size_t j = i + 1; j < domain.curve_count(); ++j)
            for (cplx p : domain.grid(i).point)
                for (cplx q : domain.grid(j).point)
                    min_dist = std::min(min_dist, std::abs(p - q));
    std::cout << "m=" << domain.curve_count() << ", outer=" << domain.outer_index()
              << ", orientation normalized\n";
    if (domain.curve_count() > 1)
        std::cout << "min inter-curve distance: " << io::format_double(min_dist) << "\n";
    std::cout << "diameter: " << io::format_double(domain.diameter())
              << ", band width: " << io::format_double(domain.band_width()) << "\n";
    return kExitOk;
}

int cmd_synth(const CommonOpts& opts, const std::string& generator_file) {
    const DomainBoundary domain = io::read_domain(opts.domain_file, {}, opts.nodes);
    const GeneratorSpec spec = io::read_generator(generator_file);
    const BoundarySamples samples = synth_samples(domain, spec);
    if (opts.out.empty()) throw InputError("synth requires --out");
    io::write_samples(opts.out, domain, samples);
    io::write_sidecar(opts.out + ".truth.json", spec);
    std::cout << "wrote " << opts.out << " and " << opts.out << ".truth.json\n";
    return kExitOk;
}

int cmd_moments(const CommonOpts& opts, std::size_t count) {
    const DomainBoundary domain = io::read_domain(opts.domain_file, {}, opts.nodes);
    const BoundarySamples samples = io::read_samples(opts.samples_file, domain);
    const MomentSequence moments = compute_moments(domain, samples, count);
    std::ostringstream s;
    if (opts.format == "csv") {
        s << "j,re_c,im_c\n";
        for (std::size_t j = 0; j < moments.count(); ++j)
            s << (j + 1) << ',' << io::format_double(moments.c[j].real()) << ','
              << io::format_double(moments.c[j].imag()) << '\n';
    } else {
        s << "{\n  \"moments\": [";
        for (std::size_t j = 0; j < moments.count(); ++j)
            s << (j ? ", " : "") << '[' << io::format_double(moments.c[j].real()) << ", "
              << io::format_double(moments.c[j].imag()) << ']';
        s << "]\n}\n";
    }
    emit(opts.out, s.str());
    return kExitOk;
}

int cmd_detect(const CommonOpts& opts, std::size_t n, const std::string& report_file,
               const std::string& poles_file) {
    const DomainBoundary domain = io::read_domain(opts.domain_file, {}, opts.nodes);
    const BoundarySamples samples = io::read_samples(opts.samples_file, domain);
    if (n > 16)
        std::cerr << "warning: N=" << n
                  << " exceeds the supported range (16); Hankel conditioning is not guaranteed\n";
    DetectConfig cfg;
    cfg.tol_rel = opts.tol_rel;
    const ExtensionReport report = detect(domain, samples, n, cfg);
    if (!report_file.empty()) io::write_report(report_file, report);
    if (!poles_file.empty()) emit(poles_file, poles_csv(report.poles));
    std::cout << io::verdict_name(report.verdict);
    if (report.conflicting_evidence) std::cout << " (conflicting evidence)";
    std::cout << "\n";
    for (const auto& p : report.poles)
        std::cout << "pole " << io::format_double(p.location.real()) << " + "
                  << io::format_double(p.location.imag()) << "i, multiplicity "
                  << p.multiplicity << "\n";
    return verdict_exit_code(report);
}

int cmd_winding(const CommonOpts& opts) {
    const DomainBoundary domain = io::read_domain(opts.domain_file, {}, opts.nodes);
    const BoundarySamples samples = io::read_samples(opts.samples_file, domain);
    const WindingResult wr = winding_of_samples(domain, samples);
    if (wr.min_modulus <= 0.0) throw NearZero("boundary samples vanish at a node");
    if (!wr.resolved)
        throw Unresolved("winding did not resolve at this sampling density");
    std::cout << wr.winding << "\n";
    return kExitOk;
}

int cmd_probe(const CommonOpts& opts, std::size_t n, std::size_t trials,
              std::uint64_t seed, std::size_t complexity, double rho_min) {
    const DomainBoundary domain = io::read_domain(opts.domain_file, {}, opts.nodes);
    const BoundarySamples samples = io::read_samples(opts.samples_file, domain);
    HarnessConfig cfg;
    cfg.complexity = complexity;
    cfg.rho_min = rho_min;
    const ProbeReport report = probe_harness(domain, samples, n, trials, seed, cfg);
    if (!opts.out.empty()) io::write_probe_report(opts.out, report);
    std::cout << "trials=" << report.trials << " admissible=" << report.admissible
              << " unresolved=" << report.unresolved << " min_winding=" << report.min_winding
              << " violations=" << report.violation_seeds.size() << "\n";
    return kExitOk;
}

int cmd_reconstruct(const CommonOpts& opts, const std::string& report_file,
                    const std::vector<std::string>& at, const std::string& points_file) {
    const DomainBoundary domain = io::read_domain(opts.domain_file, {}, opts.nodes);
    const BoundarySamples samples = io::read_samples(opts.samples_file, domain);
    const ExtensionReport report = io::read_report(report_file);
    const Polynomial q{report.q_coeffs.empty() ? std::vector<cplx>{cplx{1.0, 0.0}}
                                               : report.q_coeffs};

    std::vector<cplx> points;
    for (const auto& spec : at) {
        double re = 0.0, im = 0.0;
        if (std::sscanf(spec.c_str(), "%lf,%lf", &re, &im) != 2)
            throw InputError("--at expects re,im: " + spec);
        points.emplace_back(re, im);
    }
    if (!points_file.empty()) {
        std::ifstream in(points_file);
        if (!in) throw InputError("cannot open file: " + points_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || (!std::isdigit(static_cast<unsigned char>(line[0])) && line[0] != '-'))
                continue;
            double re = 0.0, im = 0.0;
            if (std::sscanf(line.c_str(), "%lf,%lf", &re, &im) != 2)
                throw InputError("points row must be re,im: " + line);
            points.emplace_back(re, im);
        }
    }
    if (points.empty()) throw InputError("reconstruct needs --at or --points-file");

    std::ostringstream s;
    s << "re_z,im_z,re_value,im_value,status\n";
    for (cplx z : points) {
        s << io::format_double(z.real()) << ',' << io::format_double(z.imag()) << ',';
        try {
            const cplx v = reconstruct(domain, samples, q, z);
            s << io::format_double(v.real()) << ',' << io::format_double(v.imag()) << ",ok\n";
        } catch (const EvalAtPole&) {
            s << ",,EvalAtPole\n";
        } catch (const ProbeTooClose&) {
            s << ",,ProbeTooClose\n";
        }
    }
    emit(opts.out, s.str());
    return kExitOk;
}

int cmd_sweep(const CommonOpts& opts, std::size_t n_min, std::size_t n_max) {
    const DomainBoundary domain = io::read_domain(opts.domain_file, {}, opts.nodes);
    const BoundarySamples samples = io::read_samples(opts.samples_file, domain);
    DetectConfig cfg;
    cfg.tol_rel = opts.tol_rel;
    std::ostringstream s;
    s << "n,verdict,min_singular_value,holo_residual,tail_residual_max\n";
    for (std::size_t n = n_min; n <= n_max; ++n) {
        const ExtensionReport report = detect(domain, samples, n, cfg);
        const double min_sv = report.singular_values.empty()
                                  ? 0.0
                                  : *std::min_element(report.singular_values.begin(),
                                                      report.singular_values.end());
        double tail_max = 0.0;
        for (double t : report.tail) tail_max = std::max(tail_max, t);
        s << n << ',' << io::verdict_name(report.verdict) << ',' << io::format_double(min_sv)
          << ',' << io::format_double(report.holo_residual) << ',' << io::format_double(tail_max)
          << '\n';
    }
    emit(opts.out, s.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meromorphic extendibility toolkit: decides from boundary samples whether "
                 "data extends holomorphically or meromorphically, locates candidate poles, "
                 "and verifies the winding-number characterization"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::size_t n = 1;
    std::size_t count = 10;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::size_t complexity = 2;
    double rho_min = 1e-6;
    std::string generator_file, report_file, poles_file, points_file;
    std::vector<std::string> at;
    std::size_t n_min = 0, n_max = 4;

    auto add_common = [&](CLI::App* cmd, bool needs_samples) {
        cmd->add_option("--domain", opts.domain_file, "domain spec file (JSON)")->required();
        if (needs_samples)
            cmd->add_option("--samples", opts.samples_file, "boundary samples CSV")->required();
        cmd->add_option("--nodes", opts.nodes, "override quadrature node count (power of two)");
        cmd->add_option("--tol", opts.tol_rel, "relative residual tolerance");
        cmd->add_option("--out", opts.out, "output file (stdout if omitted)");
        cmd->add_option("--format", opts.format, "output format: json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* c_check = app.add_subcommand("domain-check", "validate a domain spec file");
    add_common(c_check, false);

    auto* c_synth = app.add_subcommand("synth", "generate boundary samples from a generator spec");
    add_common(c_synth, false);
    c_synth->add_option("--generator", generator_file, "generator spec file (JSON)")->required();

    auto* c_moments = app.add_subcommand("moments", "compute the moment sequence c_j");
    add_common(c_moments, true);
    c_moments->add_option("--count", count, "number of moments");

    auto* c_detect = app.add_subcommand("detect", "run the meromorphic-extendibility detector");
    add_common(c_detect, true);
    c_detect->add_option("--n-poles", n, "upper bound N on the pole count")->required();
    c_detect->add_option("--report", report_file, "write the extension report (JSON)");
    c_detect->add_option("--poles-csv", poles_file, "write detected poles as CSV");

    auto* c_winding = app.add_subcommand("winding", "winding number of the boundary samples");
    add_common(c_winding, true);

    auto* c_probe = app.add_subcommand("probe", "randomized winding-number probe harness");
    add_common(c_probe, true);
    c_probe->add_option("--n-poles", n, "pole bound N in the W(Pf+Q) >= -N check")->required();
    c_probe->add_option("--trials", trials, "number of probe trials");
    c_probe->add_option("--seed", seed, "base seed");
    c_probe->add_option("--complexity", complexity, "max poles per probe component");
    c_probe->add_option("--rho-min", rho_min, "relative admissibility floor for |Pf+Q|");

    auto* c_recon = app.add_subcommand("reconstruct", "evaluate the detected extension");
    add_common(c_recon, true);
    c_recon->add_option("--report", report_file, "extension report from detect")->required();
    c_recon->add_option("--at", at, "evaluation point re,im (repeatable)");
    c_recon->add_option("--points-file", points_file, "CSV of evaluation points re,im");

    auto* c_sweep = app.add_subcommand("sweep", "diagnostics sweep over a range of N");
    add_common(c_sweep, true);
    c_sweep->add_option("--n-min", n_min, "first N");
    c_sweep->add_option("--n-max", n_max, "last N");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return cmd_domain_check(opts);
        if (c_synth->parsed()) return cmd_synth(opts, generator_file);
        if (c_moments->parsed()) return cmd_moments(opts, count);
        if (c_detect->parsed()) return cmd_detect(opts, n, report_file, poles_file);
        if (c_winding->parsed()) return cmd_winding(opts);
        if (c_probe->parsed()) return cmd_probe(opts, n, trials, seed, complexity, rho_min);
        if (c_recon->parsed()) return cmd_reconstruct(opts, report_file, at, points_file);
        if (c_sweep->parsed()) return cmd_sweep(opts, n_min, n_max);
    } catch (const meroext::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
