#include "io.hpp"

#include <algorithm>
#include <set>

#include "lct/errors.hpp"

namespace lct::cli {

namespace {

Rational rational_field(const Json& j, const char* key) {
    if (!j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    const Json& v = j.at(key);
    if (v.is_number_integer()) {
        return Rational(v.get<long long>());
    }
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    throw ParseError(std::string("field '") + key + "' must be a rational string");
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw ParseError(std::string("missing integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

GradedMap map_from_json(const Json& doc, const char* key) {
    GradedMap out;
    if (!doc.contains(key)) {
        return out;
    }
    const Json& list = doc.at(key);
    if (!list.is_array()) {
        throw ParseError(std::string("field '") + key + "' must be a list of entries");
    }
    for (const Json& entry : list) {
        out.add(int_field(entry, "n"), rational_field(entry, "value"));
    }
    return out;
}

Json map_to_json(const GradedMap& m) {
    Json list = Json::array();
    for (const auto& [n, v] : m.entries()) {
        Json entry;
        entry["n"] = n;
        entry["value"] = to_string(v);
        list.push_back(std::move(entry));
    }
    return list;
}

}  // namespace

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
}

bool is_table_document(const Json& doc) { return doc.is_object() && doc.contains("rows"); }

RawWindow table_from_json(const Json& doc) {
    try {
        RawWindow w;
        const Json& window = doc.at("window");
        w.lo = int_field(window, "lo");
        w.hi = int_field(window, "hi");
        if (w.lo > w.hi) {
            throw ParseError("window bounds out of order");
        }
        const std::size_t width = static_cast<std::size_t>(w.hi - w.lo + 1);
        for (auto& column : w.values) {
            column.assign(width, Rational(0));
        }
        const Json& rows = doc.at("rows");
        if (!rows.is_array() || rows.size() != width) {
            throw ParseError("rows must cover the window exactly once each");
        }
        std::set<int> seen;
        for (const Json& row : rows) {
            const int n = int_field(row, "n");
            if (n < w.lo || n > w.hi || !seen.insert(n).second) {
                throw ParseError("rows must cover the window exactly once each");
            }
            const std::size_t idx = static_cast<std::size_t>(n - w.lo);
            w.values[0][idx] = rational_field(row, "h0");
            w.values[1][idx] = rational_field(row, "h1");
            w.values[2][idx] = rational_field(row, "h2");
        }
        const Json& tail = doc.at("tail");
        if (!tail.contains("h1_constant") || !tail.at("h1_constant").is_boolean() ||
            !tail.contains("h2_linear") || !tail.at("h2_linear").is_boolean()) {
            throw ParseError("tail must declare h1_constant and h2_linear booleans");
        }
        if (tail.at("h1_constant").get<bool>()) {
            w.h1_tail = w.values[1].front();
        }
        if (tail.at("h2_linear").get<bool>()) {
            const Rational next = width > 1 ? w.values[2][1] : Rational(0);
            w.h2_slope = w.values[2].front() - next;
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid table document: ") + e.what());
    }
}

Json table_to_json(const RawWindow& w) {
    Json doc;
    doc["window"] = {{"lo", w.lo}, {"hi", w.hi}};
    Json rows = Json::array();
    for (int n = w.lo; n <= w.hi; ++n) {
        const std::size_t idx = static_cast<std::size_t>(n - w.lo);
        Json row;
        row["n"] = n;
        row["h0"] = to_string(w.values[0][idx]);
        row["h1"] = to_string(w.values[1][idx]);
        row["h2"] = to_string(w.values[2][idx]);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["tail"] = {{"h1_constant", w.h1_tail.has_value()}, {"h2_linear", w.h2_slope.has_value()}};
    return doc;
}

MPoint point_from_json(const Json& doc) {
    try {
        MPoint p;
        p.rows[0] = map_from_json(doc, "d0");
        p.rows[1] = map_from_json(doc, "d1");
        p.rows[2] = map_from_json(doc, "d2");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid point document: ") + e.what());
    }
}

Json point_to_json(const MPoint& p) {
    Json doc;
    doc["d0"] = map_to_json(p.rows[0]);
    doc["d1"] = map_to_json(p.rows[1]);
    doc["d2"] = map_to_json(p.rows[2]);
    return doc;
}

MPoint input_point(const Json& doc) {
    if (is_table_document(doc)) {
        return MPoint::from_delta(from_raw(table_from_json(doc)));
    }
    return point_from_json(doc);
}

std::vector<std::pair<Rational, DeltaTable>> spec_terms_from_json(const Json& doc) {
    try {
        if (!doc.contains("terms") || !doc.at("terms").is_array()) {
            throw ParseError("module spec must carry a list of terms");
        }
        std::vector<std::pair<Rational, DeltaTable>> out;
        for (const Json& term : doc.at("terms")) {
            const Rational coeff = rational_field(term, "coeff");
            if (coeff < 0) {
                throw InvalidSpec("term coefficients must be nonnegative");
            }
            const std::string kind = term.at("kind").get<std::string>();
            const int shift = int_field(term, "shift");
            DeltaTable table;
            if (kind == "k") {
                table = extremal_table(label_k(shift));
            } else if (kind == "kx") {
                table = extremal_table(label_kx(shift));
            } else if (kind == "R") {
                table = extremal_table(label_r(shift));
            } else if (kind == "m_power") {
                const int t = int_field(term, "t");
                if (t < 1) {
                    throw InvalidSpec("m_power terms need t >= 1");
                }
                table = extremal_table(label_m_power(t, shift));
            } else if (kind == "monomial_ideal") {
                MonomialIdealSpec spec;
                spec.shift = shift;
                if (!term.contains("generators") || !term.at("generators").is_array()) {
                    throw InvalidSpec("monomial_ideal terms need a generator list");
                }
                for (const Json& g : term.at("generators")) {
                    if (!g.is_array() || g.size() != 2) {
                        throw InvalidSpec("monomial generators are exponent pairs");
                    }
                    spec.generators.emplace_back(g.at(0).get<int>(), g.at(1).get<int>());
                }
                table = monomial_ideal_table(spec);
            } else {
                throw InvalidSpec("unknown term kind '" + kind + "'");
            }
            out.emplace_back(coeff, std::move(table));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid module spec: ") + e.what());
    }
}

Json decomposition_to_json(const Decomposition& dec) {
    Json terms = Json::array();
    for (const auto& term : dec.terms) {
        Json t;
        t["coeff"] = to_string(term.coeff);
        switch (term.label.kind) {
            case ModuleKind::K:
                t["kind"] = "k";
                break;
            case ModuleKind::Kx:
                t["kind"] = "kx";
                break;
            case ModuleKind::R:
                t["kind"] = "R";
                break;
            case ModuleKind::MPow:
                t["kind"] = "m_power";
                break;
        }
        t["shift"] = term.label.shift;
        if (term.label.kind == ModuleKind::MPow) {
            t["t"] = term.label.t;
        }
        terms.push_back(std::move(t));
    }
    Json doc;
    doc["terms"] = std::move(terms);
    return doc;
}

Json generator_to_json(const GeneratorId& g) {
    Json out;
    if (g.kind == GeneratorId::Kind::E) {
        out["kind"] = "E";
        out["i"] = g.i;
        out["s"] = g.s;
    } else {
        out["kind"] = "Gamma";
        out["s"] = g.s;
        out["n"] = g.n;
    }
    return out;
}

Json generator_terms_to_json(const std::vector<std::pair<Rational, GeneratorId>>& terms) {
    Json list = Json::array();
    for (const auto& [coeff, generator] : terms) {
        Json t;
        t["coeff"] = to_string(coeff);
        t["generator"] = generator_to_json(generator);
        list.push_back(std::move(t));
    }
    Json doc;
    doc["terms"] = std::move(list);
    return doc;
}

Json functional_to_json(const FunctionalId& f) {
    Json out;
    switch (f.kind) {
        case FunctionalId::Kind::Mu:
            out["kind"] = "mu";
            break;
        case FunctionalId::Kind::Tau:
            out["kind"] = "tau";
            break;
        case FunctionalId::Kind::Phi:
            out["kind"] = "phi";
            break;
        case FunctionalId::Kind::Pi:
            out["kind"] = "pi";
            out["n"] = f.n;
            break;
    }
    out["s"] = f.s;
    return out;
}

Json violation_to_json(const Violation& v) {
    Json out = functional_to_json(v.functional);
    out["value"] = to_string(v.value);
    return out;
}

Json incidence_to_json(const Incidence& data) {
    Json doc;
    doc["d"] = data.d;
    Json rays = Json::array();
    for (const GeneratorId& ray : data.rays) {
        rays.push_back(generator_to_json(ray));
    }
    doc["rays"] = std::move(rays);
    Json facets = Json::array();
    for (const FunctionalId& facet : data.facets) {
        facets.push_back(functional_to_json(facet));
    }
    doc["facets"] = std::move(facets);
    Json matrix = Json::array();
    Json ray_counts = Json::array();
    std::vector<int> facet_counts(data.facets.size(), 0);
    for (const auto& row : data.vanishes) {
        Json json_row = Json::array();
        int count = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            json_row.push_back(static_cast<bool>(row[j]));
            if (row[j]) {
                ++count;
                ++facet_counts[j];
            }
        }
        matrix.push_back(std::move(json_row));
        ray_counts.push_back(count);
    }
    doc["incidence"] = std::move(matrix);
    doc["ray_facet_counts"] = std::move(ray_counts);
    doc["facet_ray_counts"] = facet_counts;
    return doc;
}

}  // namespace lct::cli
