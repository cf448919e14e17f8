#include "rsc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "rsc/errors.hpp"
#include "rsc/version.hpp"

namespace rsc {

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("maximal_simplices"))
        throw validation_error("complex JSON must contain \"maximal_simplices\"");
    std::string name = j.value("name", std::string("complex"));
    std::vector<Simplex> maximal;
    for (const auto& js : j.at("maximal_simplices")) {
        Simplex s;
        for (const auto& v : js) s.push_back(v.get<VertexId>());
        maximal.push_back(std::move(s));
    }
    if (maximal.empty()) return {};
    return SimplicialComplex::from_maximal(std::move(name), maximal);
}

Json complex_to_json(const SimplicialComplex& K) {
    Json j;
    j["name"] = K.name();
    Json sims = Json::array();
    if (!K.empty()) {
        // maximal = no proper coface
        std::vector<char> has_coface(K.num_simplices(), 0);
        Simplex facet;
        for (int p = 1; p <= K.dim(); ++p) {
            for (const Simplex& s : K.simplices(p)) {
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    facet.clear();
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) facet.push_back(s[i]);
                    has_coface[K.global_id_of(facet)] = 1;
                }
            }
        }
        for (int p = 0; p <= K.dim(); ++p)
            for (std::int64_t i = 0; i < K.f(p); ++i)
                if (!has_coface[K.global_id(p, i)]) sims.push_back(K.simplex(p, i));
    }
    j["maximal_simplices"] = std::move(sims);
    return j;
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open complex file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("invalid JSON in " + path + ": " + e.what());
    }
    return complex_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open output file: " + path);
    out << text;
}

Json cochain_to_json(const Cochain& eps, const std::string& complex_name) {
    Json j;
    j["k_minus_1"] = eps.degree();
    j["bits_hex"] = eps.to_hex();
    j["complex"] = complex_name;
    return j;
}

Cochain cochain_from_json(const Json& j, const SimplicialComplex& K) {
    const int degree = j.at("k_minus_1").get<int>();
    return Cochain::from_hex(degree, K.f(degree), j.at("bits_hex").get<std::string>());
}

namespace {

Json stat_to_json(const StatSummary& s) {
    Json j;
    j["name"] = s.name;
    if (s.exact) {
        j["exact"] = rat_to_string(s.exact_value);
        j["value"] = s.mean;
    } else {
        j["approx"] = true;
        j["mean"] = s.mean;
        j["sample_variance"] = s.sample_variance;
        j["ci99_radius"] = s.ci99_radius;
    }
    return j;
}

} // namespace

Json artifact_stamp() {
    Json j;
    j["name"] = "rsc";
    j["version"] = kVersion;
    return j;
}

Json report_to_json(const ExperimentReport& r, const Json& config_echo) {
    Json j;
    j["artifact"] = artifact_stamp();
    j["config"] = config_echo;
    j["complex"] = r.complex_name;
    j["n"] = r.n;
    j["k"] = r.k;
    j["nu"] = rat_to_string(r.nu);
    j["depth"] = r.depth;
    j["mode"] = (r.mode == ExperimentMode::Exhaustive) ? "exhaustive" : "montecarlo";
    j["exact"] = (r.mode == ExperimentMode::Exhaustive);
    if (r.mode == ExperimentMode::MonteCarlo) {
        j["trials"] = r.trials;
        j["seed"] = r.seed;
    }
    j["normalization"] = r.normalization.str();
    Json stats = Json::array();
    for (const auto& s : r.stats) stats.push_back(stat_to_json(s));
    j["stats"] = std::move(stats);
    Json census = Json::array();
    for (const auto& row : r.census) {
        Json cj;
        cj["betti"] = row.betti;
        if (row.exact)
            cj["expected_count"] = rat_to_string(row.exact_mean);
        else
            cj["mean_count"] = row.mean;
        census.push_back(std::move(cj));
    }
    j["census"] = std::move(census);
    return j;
}

std::string report_to_csv(const ExperimentReport& r) {
    std::ostringstream out;
    out << "statistic,d,value,ci_radius,normalization\n";
    out.precision(17);
    for (const auto& s : r.stats) {
        out << s.name << ',' << r.depth << ',' << s.mean << ','
            << (s.exact ? 0.0 : s.ci99_radius) << ',' << r.normalization.str() << '\n';
    }
    return out.str();
}

std::string convergence_to_csv(const ConvergenceTable& t) {
    std::ostringstream out;
    out << "statistic,d,value,ci_radius,normalization\n";
    out.precision(17);
    for (const auto& row : t.rows) {
        const std::string norm = row.normalization.str();
        for (std::size_t i = 0; i < row.f_expected_normalized.size(); ++i)
            out << "f_" << i << "_normalized," << row.d << ','
                << row.f_expected_normalized[i].convert_to<double>() << ",0," << norm << '\n';
        out << "chi_normalized," << row.d << ',' << row.chi_normalized.convert_to<double>()
            << ",0," << norm << '\n';
        for (std::size_t i = 0; i < row.mc_betti.size(); ++i)
            out << "b_" << i << "_mc," << row.d << ',' << row.mc_betti[i].mean << ','
                << row.mc_betti[i].ci99_radius << ',' << norm << '\n';
    }
    for (std::size_t i = 0; i < t.c_plus_reference.size(); ++i)
        out << "c_plus_" << i << ",," << t.c_plus_reference[i].convert_to<double>() << ",0,1\n";
    out << "chi_limit,," << t.chi_limit.convert_to<double>() << ",0,1\n";
    return out.str();
}

Json convergence_to_json(const ConvergenceTable& t, const Json& config_echo) {
    Json j;
    j["artifact"] = artifact_stamp();
    j["config"] = config_echo;
    j["n"] = t.n;
    j["k"] = t.k;
    j["nu"] = rat_to_string(t.nu);
    j["c_plus"] = rats_to_strings(t.c_plus_reference);
    j["chi_limit"] = rat_to_string(t.chi_limit);
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json rj;
        rj["d"] = row.d;
        std::vector<std::string> fs;
        for (const auto& v : row.f_host) fs.push_back(v.str());
        rj["f_host"] = fs;
        rj["E_chi"] = rat_to_string(row.chi_expected);
        rj["E_chi_normalized"] = rat_to_string(row.chi_normalized);
        rj["E_f_normalized"] = rats_to_strings(row.f_expected_normalized);
        if (!row.mc_betti.empty()) {
            Json mc = Json::array();
            for (const auto& s : row.mc_betti) mc.push_back(stat_to_json(s));
            rj["mc_betti"] = std::move(mc);
        }
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j;
}

} // namespace rsc
