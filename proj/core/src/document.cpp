#include "etcs/document.hpp"

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "etcs/error.hpp"

namespace etcs {

namespace {

using Json = nlohmann::ordered_json;

void require_keys(const Json& obj, const char* where, const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key()))
            fail_input(std::string("unknown key \"") + item.key() + "\" in " + where);
    }
}

long require_integer(const Json& obj, const char* where, const std::string& key) {
    if (!obj.contains(key)) fail_input(std::string("missing key \"") + key + "\" in " + where);
    const Json& v = obj.at(key);
    if (!v.is_number_integer())
        fail_input(std::string("key \"") + key + "\" in " + where + " must be an integer");
    return v.get<long>();
}

Rat require_rational(const Json& v, const std::string& key) {
    if (v.is_number_integer()) return Rat(Int(v.get<long>()));
    if (v.is_string()) {
        if (const auto r = rat_from_string(v.get<std::string>())) return *r;
    }
    fail_input("key \"" + key + "\" must be an integer or a \"p/q\" string");
}

} // namespace

ConfigDocument parse_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail_input(e.what());
    }
    if (!doc.is_object()) fail_input("document must be a JSON object");
    require_keys(doc, "document",
                 {"name", "citation", "k_plus", "k_minus", "theta", "rank_plus", "rank_minus",
                  "gram", "nu_bar_plus", "nu_bar_minus", "manifold"});

    ConfigDocument out;
    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) fail_input("key \"name\" must be a string");
        out.config.name = doc.at("name").get<std::string>();
    }
    if (doc.contains("citation")) {
        if (!doc.at("citation").is_string()) fail_input("key \"citation\" must be a string");
        out.citation = doc.at("citation").get<std::string>();
    }

    const long kp = require_integer(doc, "document", "k_plus");
    const long km = require_integer(doc, "document", "k_minus");
    if (kp < 1 || km < 1) fail_input("quotient orders must be positive");
    out.config.k_plus = static_cast<unsigned>(kp);
    out.config.k_minus = static_cast<unsigned>(km);

    if (!doc.contains("theta")) fail_input("missing key \"theta\" in document");
    const Json& theta = doc.at("theta");
    if (!theta.is_object()) fail_input("key \"theta\" must be an object {num, den}");
    require_keys(theta, "theta", {"num", "den"});
    const long num = require_integer(theta, "theta", "num");
    const long den = require_integer(theta, "theta", "den");
    if (den == 0) fail_input("theta denominator must be nonzero");
    out.config.theta = make_rat(Int(num), Int(den));

    const long rp = require_integer(doc, "document", "rank_plus");
    const long rm = require_integer(doc, "document", "rank_minus");
    if (rp < 1 || rm < 1) fail_input("block ranks must be positive");
    out.config.rank_plus = static_cast<size_t>(rp);
    out.config.rank_minus = static_cast<size_t>(rm);

    if (!doc.contains("gram")) fail_input("missing key \"gram\" in document");
    const Json& gram = doc.at("gram");
    if (!gram.is_array() || gram.empty()) fail_input("key \"gram\" must be a non-empty array of rows");
    std::vector<std::vector<Rat>> rows;
    for (const Json& row : gram) {
        if (!row.is_array()) fail_input("gram rows must be arrays");
        if (row.size() != gram.size()) fail_input("gram must be square");
        std::vector<Rat> r;
        for (const Json& v : row) {
            if (!v.is_number_integer()) fail_input("gram entries must be integers");
            r.emplace_back(Int(v.get<long>()));
        }
        rows.push_back(std::move(r));
    }
    out.config.gram = RatMat::from_rows(std::move(rows));

    if (doc.contains("nu_bar_plus"))
        out.config.nu_bar_plus = require_rational(doc.at("nu_bar_plus"), "nu_bar_plus");
    if (doc.contains("nu_bar_minus"))
        out.config.nu_bar_minus = require_rational(doc.at("nu_bar_minus"), "nu_bar_minus");

    if (doc.contains("manifold")) {
        const Json& man = doc.at("manifold");
        if (!man.is_object()) fail_input("key \"manifold\" must be an object");
        require_keys(man, "manifold", {"b3", "div_p1", "torsion_free", "two_connected"});
        ManifoldInvariants inv;
        inv.b3 = Int(require_integer(man, "manifold", "b3"));
        inv.div_p1 = Int(require_integer(man, "manifold", "div_p1"));
        if (man.contains("torsion_free")) {
            if (!man.at("torsion_free").is_boolean())
                fail_input("key \"torsion_free\" must be a boolean");
            inv.h4_torsion_free = man.at("torsion_free").get<bool>();
        }
        if (man.contains("two_connected")) {
            if (!man.at("two_connected").is_boolean())
                fail_input("key \"two_connected\" must be a boolean");
            inv.two_connected = man.at("two_connected").get<bool>();
        }
        out.manifold = inv;
    }
    return out;
}

std::string document_to_json(const ConfigDocument& doc) {
    Json j;
    j["name"] = doc.config.name;
    if (!doc.citation.empty()) j["citation"] = doc.citation;
    j["k_plus"] = doc.config.k_plus;
    j["k_minus"] = doc.config.k_minus;
    j["theta"] = Json{{"num", rat_num(doc.config.theta).get_si()},
                      {"den", rat_den(doc.config.theta).get_si()}};
    j["rank_plus"] = doc.config.rank_plus;
    j["rank_minus"] = doc.config.rank_minus;
    Json rows = Json::array();
    for (size_t i = 0; i < doc.config.gram.n; ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < doc.config.gram.m; ++k)
            row.push_back(rat_num(doc.config.gram(i, k)).get_si());
        rows.push_back(std::move(row));
    }
    j["gram"] = std::move(rows);
    if (doc.config.nu_bar_plus) j["nu_bar_plus"] = rat_to_string(*doc.config.nu_bar_plus);
    if (doc.config.nu_bar_minus) j["nu_bar_minus"] = rat_to_string(*doc.config.nu_bar_minus);
    if (doc.manifold) {
        j["manifold"] = Json{{"b3", doc.manifold->b3.get_si()},
                             {"div_p1", doc.manifold->div_p1.get_si()},
                             {"torsion_free", doc.manifold->h4_torsion_free},
                             {"two_connected", doc.manifold->two_connected}};
    }
    return j.dump(2) + "\n";
}

ConfigDocument entry_to_document(const CatalogEntry& entry) {
    ConfigDocument doc;
    doc.config = entry.config;
    doc.manifold = entry.manifold;
    doc.citation = entry.citation;
    return doc;
}

} // namespace etcs
