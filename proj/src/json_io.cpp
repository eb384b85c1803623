#include "hcenter/json_io.hpp"

#include <json.hpp>

#include "hcenter/errors.hpp"

namespace hcenter {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("malformed JSON");
    return j;
}

json partition_to_value(const Partition& p) { return json(p.parts()); }

Partition partition_from_value(const json& j) {
    if (!j.is_array()) throw DomainError("partition must be a JSON array");
    std::vector<int> parts;
    for (const json& e : j) {
        if (!e.is_number_integer()) throw DomainError("partition parts must be integers");
        parts.push_back(e.get<int>());
    }
    return Partition(parts);
}

Rational rational_from_value(const json& j) {
    if (!j.is_string()) throw DomainError("rationals must be JSON strings");
    return rational_from_string(j.get<std::string>());
}

const char* kind_to_text(SliceKind k) {
    switch (k) {
        case SliceKind::CupCW: return "cup_cw";
        case SliceKind::CupCCW: return "cup_ccw";
        case SliceKind::CapCW: return "cap_cw";
        case SliceKind::CapCCW: return "cap_ccw";
        case SliceKind::Cross: return "cross";
        case SliceKind::Dot: return "dot";
    }
    return "?";
}

SliceKind kind_from_text(const std::string& s) {
    if (s == "cup_cw") return SliceKind::CupCW;
    if (s == "cup_ccw") return SliceKind::CupCCW;
    if (s == "cap_cw") return SliceKind::CapCW;
    if (s == "cap_ccw") return SliceKind::CapCCW;
    if (s == "cross") return SliceKind::Cross;
    if (s == "dot") return SliceKind::Dot;
    throw DiagramError("unknown slice kind: " + s);
}

json signs_to_value(const SignSequence& signs) {
    json arr = json::array();
    for (Sign s : signs) arr.push_back(s == Sign::Plus ? "+" : "-");
    return arr;
}

SignSequence signs_from_value(const json& j) {
    if (!j.is_array()) throw DiagramError("boundary must be a JSON array");
    SignSequence signs;
    for (const json& e : j) {
        if (!e.is_string()) throw DiagramError("boundary entries must be \"+\" or \"-\"");
        const std::string s = e.get<std::string>();
        if (s == "+")
            signs.push_back(Sign::Plus);
        else if (s == "-")
            signs.push_back(Sign::Minus);
        else
            throw DiagramError("boundary entries must be \"+\" or \"-\"");
    }
    return signs;
}

}  // namespace

std::string partition_to_json(const Partition& p) { return partition_to_value(p).dump(); }

Partition partition_from_json(const std::string& text) {
    return partition_from_value(parse_json(text));
}

std::string measure_to_json(const DiscreteMeasure& m) {
    json atoms = json::array();
    for (const auto& [x, w] : m.atoms) atoms.push_back({{"w", to_string(w)}, {"x", x}});
    return json{{"atoms", atoms}}.dump();
}

DiscreteMeasure measure_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
        throw DomainError("measure JSON needs an \"atoms\" array");
    DiscreteMeasure m;
    for (const json& a : j["atoms"]) {
        if (!a.is_object() || !a.contains("x") || !a.contains("w") ||
            !a["x"].is_number_integer())
            throw DomainError("measure atoms need integer \"x\" and rational \"w\"");
        const int x = a["x"].get<int>();
        if (m.atoms.count(x)) throw DomainError("duplicate atom in measure");
        m.atoms[x] = rational_from_value(a["w"]);
    }
    validate(m);
    return m;
}

namespace {

std::string terms_to_json(const std::map<Partition, Rational, CanonicalLess>& coeffs,
                          const std::string& basis) {
    json terms = json::array();
    for (const auto& [mu, c] : coeffs)
        terms.push_back({{"coef", to_string(c)}, {"part", partition_to_value(mu)}});
    return json{{"basis", basis}, {"terms", terms}}.dump();
}

}  // namespace

std::string shifted_to_json(const ShiftedSymFn& f) { return terms_to_json(f.coeffs(), "pshift"); }

std::string sstar_to_json(const std::map<Partition, Rational, CanonicalLess>& coeffs) {
    return terms_to_json(coeffs, "sstar");
}

ShiftedSymFn shifted_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms") ||
        !j["terms"].is_array())
        throw DomainError("shifted-function JSON needs \"basis\" and \"terms\"");
    const std::string basis = j["basis"].get<std::string>();
    if (basis != "pshift" && basis != "sstar")
        throw DomainError("unknown basis: " + basis);
    ShiftedSymFn f = ShiftedSymFn::zero();
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("part") || !t.contains("coef"))
            throw DomainError("terms need \"part\" and \"coef\"");
        const Partition mu = partition_from_value(t["part"]);
        const Rational c = rational_from_value(t["coef"]);
        if (basis == "pshift")
            f.add_term(mu, c);
        else
            f = f + s_star_to_p(mu).scaled(c);
    }
    return f;
}

std::string diagram_to_json(const DiagramWord& w) {
    json slices = json::array();
    for (const Slice& s : w.slices)
        slices.push_back({{"kind", kind_to_text(s.kind)}, {"pos", s.pos}});
    return json{{"bottom", signs_to_value(w.bottom)},
                {"slices", slices},
                {"top", signs_to_value(w.top)}}
        .dump();
}

DiagramWord diagram_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("bottom") || !j.contains("top") ||
        !j.contains("slices") || !j["slices"].is_array())
        throw DiagramError("diagram JSON needs \"bottom\", \"top\" and \"slices\"");
    DiagramWord w;
    w.bottom = signs_from_value(j["bottom"]);
    w.top = signs_from_value(j["top"]);
    for (const json& s : j["slices"]) {
        if (!s.is_object() || !s.contains("kind") || !s.contains("pos") ||
            !s["kind"].is_string() || !s["pos"].is_number_integer())
            throw DiagramError("slices need a \"kind\" string and an integer \"pos\"");
        w.slices.push_back({kind_from_text(s["kind"].get<std::string>()), s["pos"].get<int>()});
    }
    return validate(std::move(w));
}

std::string central_to_json(const CentralElement& x) {
    json coeffs = json::array();
    for (const auto& [mu, c] : x.class_coeffs())
        coeffs.push_back({{"coef", to_string(c)}, {"part", partition_to_value(mu)}});
    return json{{"class_coeffs", coeffs}, {"n", x.degree()}}.dump();
}

CentralElement central_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
        !j.contains("class_coeffs") || !j["class_coeffs"].is_array())
        throw DomainError("central-element JSON needs \"n\" and \"class_coeffs\"");
    CentralElement x(j["n"].get<int>());
    for (const json& t : j["class_coeffs"]) {
        if (!t.is_object() || !t.contains("part") || !t.contains("coef"))
            throw DomainError("class_coeffs entries need \"part\" and \"coef\"");
        x.add_coeff(partition_from_value(t["part"]), rational_from_value(t["coef"]));
    }
    return x;
}

}  // namespace hcenter
