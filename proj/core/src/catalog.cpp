#include "etcs/catalog.hpp"

#include <sstream>
#include <utility>

#include "etcs/error.hpp"
#include "etcs/nu.hpp"

namespace etcs {

namespace {

Rat frac(long n, long d) { return make_rat(Int(n), Int(d)); }

RatMat gram_from(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rat>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> row;
        row.reserve(r.size());
        for (long v : r) row.emplace_back(Int(v));
        out.push_back(std::move(row));
    }
    return RatMat::from_rows(std::move(out));
}

std::vector<ExactAngle> half_spectrum(const std::vector<Rat>& fractions, size_t slots) {
    std::vector<ExactAngle> out;
    for (const Rat& f : fractions) out.push_back(ExactAngle::from_pi_fraction(f));
    while (out.size() < slots) out.push_back(ExactAngle::zero());
    sort_angles(out);
    return out;
}

CatalogEntry make_entry(std::string id, unsigned k_plus, unsigned k_minus, const Rat& theta,
                        size_t rank_plus, size_t rank_minus, RatMat gram,
                        const std::vector<Rat>& plus, const std::vector<Rat>& minus,
                        long nu_bar_expected, long b3, long div_p1, std::string citation) {
    CatalogEntry e;
    e.id = std::move(id);
    e.config.name = e.id;
    e.config.k_plus = k_plus;
    e.config.k_minus = k_minus;
    e.config.theta = theta;
    e.config.rank_plus = rank_plus;
    e.config.rank_minus = rank_minus;
    e.config.gram = std::move(gram);
    e.expected_angles.alpha_plus = half_spectrum(plus, 3);
    e.expected_angles.alpha_minus = half_spectrum(minus, 19);
    e.expected_nu_bar = Int(nu_bar_expected);
    e.expected_nu_mod_48 = static_cast<int>(int_mod(Int(nu_bar_expected) + 24, Int(48)).get_si());
    e.manifold.b3 = Int(b3);
    e.manifold.div_p1 = Int(div_p1);
    e.manifold.nu_bar = Rat(Int(nu_bar_expected));
    e.citation = std::move(citation);
    return e;
}

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> out;
    out.push_back(make_entry(
        "ex_3_6", 2, 1, frac(1, 4), 1, 1, gram_from({{2, 2}, {2, 4}}),
        {frac(1, 2), frac(-1, 2)}, {}, -39, 134, 48,
        "built-in example: quotient orders (2,1), gluing angle pi/4, rank 1+1"));
    out.push_back(make_entry(
        "ex_3_7", 2, 1, frac(1, 4), 2, 2,
        gram_from({{2, 0, 2, 1}, {0, -2, 0, 1}, {2, 0, 4, 2}, {1, 1, 2, 0}}),
        {frac(1, 2), frac(-1, 2)}, {frac(1, 2), frac(-1, 2)}, -36, 97, 4,
        "built-in example: quotient orders (2,1), gluing angle pi/4, rank 2+2"));
    out.push_back(make_entry(
        "ex_3_8", 2, 1, frac(1, 4), 1, 2, gram_from({{2, 1, 3}, {1, 0, 4}, {3, 4, 8}}),
        {frac(1, 2), frac(-1, 2)}, {Rat(1)}, -36, 91, 8,
        "built-in example: quotient orders (2,1), gluing angle pi/4, rank 1+2"));
    out.push_back(make_entry(
        "ex_3_10", 2, 2, frac(1, 6), 1, 1, gram_from({{2, 3}, {3, 6}}),
        {frac(1, 3), frac(-1, 3)}, {}, -51, 86, 4,
        "built-in example: quotient orders (2,2), gluing angle pi/6, rank 1+1"));
    out.push_back(make_entry(
        "ex_3_11", 2, 2, frac(1, 6), 2, 2,
        gram_from({{2, 0, 2, 1}, {0, -2, 1, 2}, {2, 1, 2, 0}, {1, 2, 0, -2}}),
        {frac(1, 3), frac(-1, 3)}, {frac(1, 3), frac(-1, 3)}, -48, 109, 4,
        "built-in example: quotient orders (2,2), gluing angle pi/6, rank 2+2"));
    out.push_back(make_entry(
        "rect_b74", 1, 1, frac(1, 2), 1, 1, gram_from({{2, 0}, {0, 2}}),
        {Rat(1), Rat(1)}, {}, 0, 97, 4,
        "rectangular partner of ex_3_7: untwisted, gluing angle pi/2"));
    out.push_back(make_entry(
        "rect_b86", 1, 1, frac(1, 2), 1, 1, gram_from({{2, 0}, {0, 2}}),
        {Rat(1), Rat(1)}, {}, 0, 109, 4,
        "rectangular partner of ex_3_11: untwisted, gluing angle pi/2"));
    return out;
}

} // namespace

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> data = build_entries();
    return data;
}

const CatalogEntry* find_entry(const std::string& id) {
    for (const CatalogEntry& e : entries())
        if (e.id == id) return &e;
    return nullptr;
}

VerifyReport verify_entry(const CatalogEntry& entry, const EvalMode& mode) {
    VerifyReport rep;
    rep.id = entry.id;
    std::ostringstream diff;
    try {
        const AngleSpectrum computed = configuration_angles(entry.config, mode);
        if (!same_angle_multiset(computed.alpha_plus, entry.expected_angles.alpha_plus))
            diff << "alpha+ mismatch: computed " << render_angle_multiset(computed.alpha_plus)
                 << ", expected " << render_angle_multiset(entry.expected_angles.alpha_plus)
                 << "; ";
        if (!same_angle_multiset(computed.alpha_minus, entry.expected_angles.alpha_minus))
            diff << "alpha- mismatch: computed " << render_angle_multiset(computed.alpha_minus)
                 << ", expected " << render_angle_multiset(entry.expected_angles.alpha_minus)
                 << "; ";
        const MatchingCheck check = check_matching_compatibility(entry.config, mode);
        if (!check.pass) diff << check.message << "; ";
        if (diff.str().empty()) {
            const NuReport report = nu_bar(entry.config, Int(0), mode);
            if (report.nu_bar != Rat(entry.expected_nu_bar))
                diff << "nu_bar mismatch: computed " << rat_to_string(report.nu_bar)
                     << ", expected " << entry.expected_nu_bar.get_str() << "; ";
            else if (!report.nu_mod_48 || *report.nu_mod_48 != entry.expected_nu_mod_48)
                diff << "nu mod 48 mismatch: computed "
                     << (report.nu_mod_48 ? std::to_string(*report.nu_mod_48)
                                          : std::string("none"))
                     << ", expected " << entry.expected_nu_mod_48 << "; ";
        }
    } catch (const Error& e) {
        diff << e.what();
    }
    std::string msg = diff.str();
    if (msg.size() >= 2 && msg.compare(msg.size() - 2, 2, "; ") == 0) msg.resize(msg.size() - 2);
    rep.pass = msg.empty();
    rep.message = rep.pass ? "ok" : msg;
    return rep;
}

std::vector<VerifyReport> verify_all(const EvalMode& mode) {
    std::vector<VerifyReport> out;
    for (const CatalogEntry& e : entries()) out.push_back(verify_entry(e, mode));
    return out;
}

std::vector<VerifyReport> verify_all(const std::vector<std::string>& filter,
                                     const EvalMode& mode) {
    std::vector<VerifyReport> out;
    for (const CatalogEntry& e : entries()) {
        for (const std::string& id : filter)
            if (e.id == id) {
                out.push_back(verify_entry(e, mode));
                break;
            }
    }
    return out;
}

Rat berger_identity() {
    return Rat(24) * make_rat(Int(12923), Int(281250)) - Rat(3) * make_rat(Int(4817), Int(140625));
}

} // namespace etcs
