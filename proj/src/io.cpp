#include "meroext/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace meroext::io {

using json = nlohmann::ordered_json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json clusters_to_json(const std::vector<RootCluster>& clusters) {
    json arr = json::array();
    for (const auto& c : clusters)
        arr.push_back({{"re", c.location.real()},
                       {"im", c.location.imag()},
                       {"multiplicity", c.multiplicity}});
    return arr;
}

std::vector<RootCluster> clusters_from_json(const json& arr) {
    std::vector<RootCluster> out;
    for (const auto& j : arr)
        out.push_back({{j.at("re").get<double>(), j.at("im").get<double>()},
                       j.value("multiplicity", 1)});
    return out;
}

json coeffs_to_json(const std::vector<cplx>& coeffs) {
    json arr = json::array();
    for (cplx c : coeffs) arr.push_back(complex_to_json(c));
    return arr;
}

std::vector<cplx> coeffs_from_json(const json& arr) {
    std::vector<cplx> out;
    for (const auto& j : arr) out.push_back(complex_from_json(j));
    return out;
}

GeneratorSpec generator_from_json(const json& j);

json generator_to_json(const GeneratorSpec& spec) {
    json j;
    switch (spec.kind) {
        case GeneratorSpec::Kind::Rational:
            j["kind"] = "rational";
            j["poles"] = clusters_to_json(spec.poles);
            j["numerator"] = coeffs_to_json(spec.numerator);
            if (!spec.entire_poly.empty()) j["entire_poly"] = coeffs_to_json(spec.entire_poly);
            break;
        case GeneratorSpec::Kind::Entire:
            j["kind"] = "entire";
            j["form"] = spec.form == GeneratorSpec::EntireForm::Poly  ? "poly"
                        : spec.form == GeneratorSpec::EntireForm::Exp ? "exp"
                                                                      : "sin";
            if (spec.form == GeneratorSpec::EntireForm::Poly)
                j["coeffs"] = coeffs_to_json(spec.coeffs);
            else
                j["scale"] = complex_to_json(spec.scale);
            break;
        case GeneratorSpec::Kind::Essential:
            j["kind"] = "essential";
            j["center"] = complex_to_json(spec.center);
            j["scale"] = complex_to_json(spec.scale);
            break;
        case GeneratorSpec::Kind::Conjugate:
            j["kind"] = "conjugate";
            j["base"] = generator_to_json(*spec.base);
            if (!spec.poles.empty()) j["poles"] = clusters_to_json(spec.poles);
            break;
    }
    return j;
}

GeneratorSpec generator_from_json(const json& j) {
    GeneratorSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") {
        spec.kind = GeneratorSpec::Kind::Rational;
        spec.poles = clusters_from_json(j.at("poles"));
        if (j.contains("numerator")) spec.numerator = coeffs_from_json(j["numerator"]);
        if (j.contains("entire_poly")) spec.entire_poly = coeffs_from_json(j["entire_poly"]);
    } else if (kind == "entire") {
        spec.kind = GeneratorSpec::Kind::Entire;
        const std::string form = j.value("form", "poly");
        if (form == "poly") {
            spec.form = GeneratorSpec::EntireForm::Poly;
            spec.coeffs = coeffs_from_json(j.at("coeffs"));
        } else if (form == "exp" || form == "sin") {
            spec.form = form == "exp" ? GeneratorSpec::EntireForm::Exp
                                      : GeneratorSpec::EntireForm::Sin;
            if (j.contains("scale")) spec.scale = complex_from_json(j["scale"]);
        } else {
            throw InputError("unknown entire form: " + form);
        }
    } else if (kind == "essential") {
        spec.kind = GeneratorSpec::Kind::Essential;
        if (j.contains("center")) spec.center = complex_from_json(j["center"]);
        if (j.contains("scale")) spec.scale = complex_from_json(j["scale"]);
    } else if (kind == "conjugate") {
        spec.kind = GeneratorSpec::Kind::Conjugate;
        spec.base = std::make_shared<GeneratorSpec>(generator_from_json(j.at("base")));
        if (j.contains("poles")) spec.poles = clusters_from_json(j["poles"]);
    } else {
        throw InputError("unknown generator kind: " + kind);
    }
    return spec;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<BoundaryCurve> read_curves(const std::string& path) {
    const json j = load_json(path);
    if (!j.contains("curves") || !j["curves"].is_array() || j["curves"].empty())
        throw InputError("domain file needs a non-empty 'curves' array");
    std::vector<BoundaryCurve> curves;
    for (const auto& cj : j["curves"]) {
        std::vector<std::pair<int, cplx>> coeffs;
        for (const auto& entry : cj.at("coeffs")) {
            if (!entry.is_array() || entry.size() != 3)
                throw InputError("curve coefficient must be [k, re, im]");
            coeffs.emplace_back(entry[0].get<int>(),
                                cplx{entry[1].get<double>(), entry[2].get<double>()});
        }
        curves.emplace_back(std::move(coeffs), cj.value("nodes", std::size_t{256}));
    }
    return curves;
}

DomainBoundary read_domain(const std::string& path, DomainConfig cfg,
                           std::size_t nodes_override) {
    auto curves = read_curves(path);
    if (nodes_override != 0) {
        std::vector<BoundaryCurve> replaced;
        replaced.reserve(curves.size());
        for (const auto& c : curves) replaced.emplace_back(c.coeffs(), nodes_override);
        curves = std::move(replaced);
    }
    return DomainBoundary{std::move(curves), cfg};
}

void write_domain(const std::string& path, const std::vector<BoundaryCurve>& curves) {
    json j;
    j["curves"] = json::array();
    for (const auto& c : curves) {
        json cj;
        cj["coeffs"] = json::array();
        for (const auto& [k, a] : c.coeffs())
            cj["coeffs"].push_back(json::array({k, a.real(), a.imag()}));
        cj["nodes"] = c.node_count();
        j["curves"].push_back(cj);
    }
    save_text(path, j.dump(2) + "\n");
}

BoundarySamples read_samples(const std::string& path, const DomainBoundary& domain) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);

    std::vector<std::vector<cplx>> values(domain.curve_count());
    for (std::size_t i = 0; i < domain.curve_count(); ++i)
        values[i].assign(domain.grid(i).point.size(), cplx{0.0, 0.0});
    std::vector<std::vector<bool>> seen(domain.curve_count());
    for (std::size_t i = 0; i < domain.curve_count(); ++i)
        seen[i].assign(domain.grid(i).point.size(), false);

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!line.empty() && !std::isdigit(static_cast<unsigned char>(line[0])) && line[0] != '-')
            continue;  // header
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 4) throw InputError("samples row must have 4 fields: " + line);
        const std::size_t ci = std::stoul(fields[0]);
        const std::size_t ni = std::stoul(fields[1]);
        if (ci >= values.size() || ni >= values[ci].size())
            throw SampleMismatch("sample index out of range for the domain grid");
        values[ci][ni] = cplx{std::stod(fields[2]), std::stod(fields[3])};
        seen[ci][ni] = true;
    }
    for (const auto& curve_seen : seen)
        for (bool s : curve_seen)
            if (!s) throw SampleMismatch("samples file does not cover every grid node");
    return BoundarySamples{std::move(values)};
}

void write_samples(const std::string& path, const DomainBoundary& domain,
                   const BoundarySamples& samples) {
    samples.validate(domain);
    std::ostringstream out;
    out << "curve_index,node_index,re_f,im_f\n";
    for (std::size_t ci = 0; ci < domain.curve_count(); ++ci)
        for (std::size_t ni = 0; ni < samples.values()[ci].size(); ++ni)
            out << ci << ',' << ni << ',' << format_double(samples.values()[ci][ni].real())
                << ',' << format_double(samples.values()[ci][ni].imag()) << '\n';
    save_text(path, out.str());
}

GeneratorSpec read_generator(const std::string& path) {
    return generator_from_json(load_json(path));
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holomorphic: return "Holomorphic";
        case Verdict::Meromorphic: return "Meromorphic";
        case Verdict::NotExtendible: return "NotExtendible";
    }
    return "NotExtendible";
}

void write_report(const std::string& path, const ExtensionReport& report) {
    json j;
    j["verdict"] = verdict_name(report.verdict);
    j["n_bound"] = report.n_bound;
    j["conflicting_evidence"] = report.conflicting_evidence;
    j["poles"] = clusters_to_json(report.poles);
    j["residuals"] = {{"holo", report.holo_residual},
                      {"tail", report.tail},
                      {"mismatch", report.mismatch}};
    j["singular_values"] = report.singular_values;
    j["discarded_boundary_roots"] = clusters_to_json(report.discarded_boundary);
    j["outside_roots"] = clusters_to_json(report.outside_roots);
    j["p_coeffs"] = coeffs_to_json(report.p_coeffs);
    j["q_coeffs"] = coeffs_to_json(report.q_coeffs);
    j["scale"] = report.scale;
    save_text(path, j.dump(2) + "\n");
}

ExtensionReport read_report(const std::string& path) {
    const json j = load_json(path);
    ExtensionReport report;
    const std::string v = j.at("verdict").get<std::string>();
    report.verdict = v == "Holomorphic"   ? Verdict::Holomorphic
                     : v == "Meromorphic" ? Verdict::Meromorphic
                                          : Verdict::NotExtendible;
    report.n_bound = j.value("n_bound", std::size_t{0});
    report.conflicting_evidence = j.value("conflicting_evidence", false);
    report.poles = clusters_from_json(j.at("poles"));
    if (j.contains("residuals")) {
        report.holo_residual = j["residuals"].value("holo", 0.0);
        report.mismatch = j["residuals"].value("mismatch", 0.0);
        if (j["residuals"].contains("tail"))
            report.tail = j["residuals"]["tail"].get<std::vector<double>>();
    }
    if (j.contains("singular_values"))
        report.singular_values = j["singular_values"].get<std::vector<double>>();
    if (j.contains("discarded_boundary_roots"))
        report.discarded_boundary = clusters_from_json(j["discarded_boundary_roots"]);
    if (j.contains("outside_roots")) report.outside_roots = clusters_from_json(j["outside_roots"]);
    if (j.contains("p_coeffs")) report.p_coeffs = coeffs_from_json(j["p_coeffs"]);
    if (j.contains("q_coeffs")) report.q_coeffs = coeffs_from_json(j["q_coeffs"]);
    report.scale = j.value("scale", 0.0);
    return report;
}

void write_probe_report(const std::string& path, const ProbeReport& report) {
    json j;
    j["trials"] = report.trials;
    j["admissible"] = report.admissible;
    j["unresolved"] = report.unresolved;
    j["n_bound"] = report.n_bound;
    j["min_winding"] = report.min_winding;
    j["violations"] = report.violation_seeds;
    j["windings"] = report.windings;
    save_text(path, j.dump(2) + "\n");
}

void write_sidecar(const std::string& path, const GeneratorSpec& spec) {
    json j;
    j["generator"] = generator_to_json(spec);
    j["meromorphic"] = spec.meromorphic();
    j["poles"] = clusters_to_json(spec.true_poles());
    int minimal_n = 0;
    for (const auto& p : spec.true_poles()) minimal_n += p.multiplicity;
    j["minimal_n"] = minimal_n;
    save_text(path, j.dump(2) + "\n");
}

}  // namespace meroext::io
