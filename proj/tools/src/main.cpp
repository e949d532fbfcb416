#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etcs/angles.hpp"
#include "etcs/catalog.hpp"
#include "etcs/classify.hpp"
#include "etcs/document.hpp"
#include "etcs/error.hpp"
#include "etcs/nu.hpp"
#include "etcs/torus.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace etcs;

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_input: return 2;
        case ErrorKind::math: return 3;
        case ErrorKind::incompatible: return 4;
    }
    return 3;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_input("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json angle_json(const ExactAngle& a) {
    Json j;
    if (const auto t = a.as_pi_fraction()) {
        j["over_pi"] = rat_to_string(*t);
    } else {
        j["sign"] = a.sign_part();
        j["cos_poly"] = poly_to_string(a.cosine().defining_poly());
        j["cos_approx"] = a.cosine().to_double();
        j["radians"] = a.approx_radians();
    }
    return j;
}

Json angles_json(const std::vector<ExactAngle>& list) {
    Json arr = Json::array();
    for (const auto& a : list) arr.push_back(angle_json(a));
    return arr;
}

int cmd_angles(const std::string& path, const std::string& format, const EvalMode& mode) {
    const ConfigDocument doc = parse_document(read_file(path));
    const AngleSpectrum sp = configuration_angles(doc.config, mode);
    if (format == "json") {
        Json j;
        j["alpha_plus"] = angles_json(sp.alpha_plus);
        j["alpha_minus"] = angles_json(sp.alpha_minus);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "alpha+ = " << render_angle_multiset(sp.alpha_plus) << "\n"
                  << "alpha- = " << render_angle_multiset(sp.alpha_minus) << "\n";
    }
    return 0;
}

int cmd_nu(const std::string& path, long b1, const std::string& format,
           const EvalMode& mode) {
    const ConfigDocument doc = parse_document(read_file(path));
    const NuReport rep = nu_bar(doc.config, Int(b1), mode);
    if (format == "json") {
        Json j;
        j["rho_over_pi"] = rat_to_string(rep.rho_over_pi);
        j["m_rho"] = rep.m_rho_value.get_si();
        j["term_halves"] = rat_to_string(rep.term_halves);
        j["term_gluing"] = rat_to_string(rep.term_gluing);
        j["term_maslov"] = rep.term_maslov.get_si();
        j["nu_bar"] = rat_to_string(rep.nu_bar);
        if (rep.nu_mod_48)
            j["nu_mod_48"] = *rep.nu_mod_48;
        else
            j["nu_mod_48"] = nullptr;
        j["b1"] = rep.b1.get_si();
        j["integral"] = rep.integral;
        j["divisible_by_3"] = rep.divisible_by_3;
        j["within_bound"] = rep.within_bound;
        j["conditional_on_halves"] = rep.conditional_on_halves;
        std::cout << j.dump(2) << "\n";
    } else {
        const auto yn = [](bool v) { return v ? "yes" : "no"; };
        std::cout << "rho/pi = " << rat_to_string(rep.rho_over_pi) << "\n"
                  << "m_rho = " << rep.m_rho_value.get_str() << "\n"
                  << "halves term = " << rat_to_string(rep.term_halves) << "\n"
                  << "gluing term (-72 rho/pi) = " << rat_to_string(rep.term_gluing) << "\n"
                  << "correction term (3 m_rho) = " << rep.term_maslov.get_str() << "\n"
                  << "nu_bar = " << rat_to_string(rep.nu_bar) << "\n";
        if (rep.nu_mod_48)
            std::cout << "nu mod 48 = " << *rep.nu_mod_48 << " (b1 = " << rep.b1.get_str()
                      << ")\n";
        else
            std::cout << "nu mod 48 = undefined (nu_bar is not an integer)\n";
        std::cout << "integral = " << yn(rep.integral)
                  << "; divisible by 3 = " << yn(rep.divisible_by_3)
                  << "; within bound = " << yn(rep.within_bound)
                  << "; conditional on halves = " << yn(rep.conditional_on_halves) << "\n";
    }
    return 0;
}

ManifoldInvariants load_invariants(const std::string& path, const EvalMode& mode) {
    const ConfigDocument doc = parse_document(read_file(path));
    if (!doc.manifold) fail_input("document lacks a manifold block: " + path);
    ManifoldInvariants inv = *doc.manifold;
    inv.nu_bar = nu_bar(doc.config, Int(0), mode).nu_bar;
    return inv;
}

int cmd_classify(const std::string& path_a, const std::string& path_b, const std::string& format,
                 const EvalMode& mode) {
    const ManifoldInvariants a = load_invariants(path_a, mode);
    const ManifoldInvariants b = load_invariants(path_b, mode);
    const ComparisonVerdict v = full_verdict(a, b);
    if (format == "json") {
        Json j;
        j["verdict"] = verdict_level_name(v.level);
        j["reasoning"] = v.reasoning;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict = " << verdict_level_name(v.level) << "\n";
        for (const auto& r : v.reasoning) std::cout << "  - " << r << "\n";
    }
    return 0;
}

int cmd_catalog_list(const std::string& format) {
    if (format == "json") {
        Json arr = Json::array();
        for (const CatalogEntry& e : entries())
            arr.push_back(Json{{"id", e.id}, {"citation", e.citation}});
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const CatalogEntry& e : entries()) std::cout << e.id << "  " << e.citation << "\n";
    }
    return 0;
}

int cmd_catalog_show(const std::string& id) {
    const CatalogEntry* e = find_entry(id);
    if (!e) fail_input("unknown catalog id: " + id);
    std::cout << document_to_json(entry_to_document(*e));
    return 0;
}

int cmd_catalog_verify(const std::string& format, const EvalMode& mode) {
    const std::vector<VerifyReport> reports = verify_all(mode);
    size_t passed = 0;
    for (const VerifyReport& r : reports)
        if (r.pass) ++passed;
    if (format == "json") {
        Json j;
        Json arr = Json::array();
        for (const VerifyReport& r : reports)
            arr.push_back(Json{{"id", r.id}, {"pass", r.pass}, {"message", r.message}});
        j["reports"] = std::move(arr);
        j["passed"] = passed;
        j["total"] = reports.size();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const VerifyReport& r : reports)
            std::cout << r.id << ": " << (r.pass ? "pass" : "FAIL (" + r.message + ")") << "\n";
        std::cout << passed << "/" << reports.size() << " pass\n";
    }
    return passed == reports.size() ? 0 : 3;
}

Surd parse_surd(const std::string& s) {
    if (const auto v = surd_from_string(s)) return *v;
    fail_input("cannot parse length \"" + s +
               "\": expected a rational combination of sqrt2, sqrt3, sqrt6");
}

int cmd_match_torus(const TorusFactor& t_plus, const TorusFactor& t_minus,
                    const std::string& format) {
    const std::vector<ExactAngle> angles = gluing_angles(t_plus, t_minus);
    if (format == "json") {
        Json j;
        j["angles"] = angles_json(angles);
        std::cout << j.dump(2) << "\n";
    } else if (angles.empty()) {
        std::cout << "no matching isometry\n";
    } else {
        for (const ExactAngle& a : angles) std::cout << "theta = " << a.to_string() << "\n";
    }
    return angles.empty() ? 4 : 0;
}

int run(int argc, char** argv) {
    CLI::App app{"exact nu invariants of extra-twisted connected sums"};
    app.require_subcommand(1);

    std::string format = "text";
    double tolerance = 1e-9;
    bool exact = true;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tolerance", tolerance, "numeric fallback tolerance (default 1e-9)");
    app.add_flag("--exact,!--no-exact", exact, "forbid the numeric fallback (default on)");

    std::string angles_path;
    CLI::App* angles_cmd = app.add_subcommand("angles", "configuration angles of a document");
    angles_cmd->add_option("path", angles_path, "configuration document")->required();

    std::string nu_path;
    long b1 = 0;
    CLI::App* nu_cmd = app.add_subcommand("nu", "nu_bar and nu mod 48 of a document");
    nu_cmd->add_option("path", nu_path, "configuration document")->required();
    nu_cmd->add_option("--b1", b1, "first Betti number (default 0)");

    std::string classify_a, classify_b;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "compare the manifolds of two documents");
    classify_cmd->add_option("path_a", classify_a, "first document")->required();
    classify_cmd->add_option("path_b", classify_b, "second document")->required();

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in worked examples");
    catalog_cmd->require_subcommand(1);
    CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "print ids and citations");
    std::string show_id;
    CLI::App* show_cmd = catalog_cmd->add_subcommand("show", "print one entry as a document");
    show_cmd->add_option("id", show_id, "catalog id")->required();
    CLI::App* verify_cmd =
        catalog_cmd->add_subcommand("verify", "recompute every entry and compare");

    TorusFactor t_plus, t_minus;
    std::string zeta_plus, xi_plus, zeta_minus, xi_minus;
    CLI::App* match_cmd =
        app.add_subcommand("match-torus", "gluing angles matching two torus factors");
    match_cmd->add_option("--k-plus", t_plus.k, "quotient order of the + side (default 1)");
    match_cmd->add_option("--zeta-plus", zeta_plus, "side length zeta of the + side")->required();
    match_cmd->add_option("--xi-plus", xi_plus, "side length xi of the + side")->required();
    match_cmd->add_option("--k-minus", t_minus.k, "quotient order of the - side (default 1)");
    match_cmd->add_option("--zeta-minus", zeta_minus, "side length zeta of the - side")
        ->required();
    match_cmd->add_option("--xi-minus", xi_minus, "side length xi of the - side")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const EvalMode mode{exact, tolerance};
    if (*angles_cmd) return cmd_angles(angles_path, format, mode);
    if (*nu_cmd) return cmd_nu(nu_path, b1, format, mode);
    if (*classify_cmd) return cmd_classify(classify_a, classify_b, format, mode);
    if (*catalog_cmd) {
        if (*list_cmd) return cmd_catalog_list(format);
        if (*show_cmd) return cmd_catalog_show(show_id);
        if (*verify_cmd) return cmd_catalog_verify(format, mode);
    }
    if (*match_cmd) {
        t_plus.zeta = parse_surd(zeta_plus);
        t_plus.xi = parse_surd(xi_plus);
        t_minus.zeta = parse_surd(zeta_minus);
        t_minus.xi = parse_surd(xi_minus);
        return cmd_match_torus(t_plus, t_minus, format);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const etcs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
