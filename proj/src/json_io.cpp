#include "bifc/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace bifc {

using nlohmann::json;

namespace {

json bipartition_json(const Bipartition& pi, const std::vector<int>& order) {
    json j;
    j["type"] = pi.type.str();
    j["blocks"] = json::array();
    for (const auto& B : pi.blocks) j["blocks"].push_back(B);
    if (!order.empty()) j["order"] = order;
    return j;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

Alphabet read_variables(const json& j) {
    if (!j.is_object() || !j.contains("variables") || !j["variables"].is_object())
        throw std::invalid_argument("expected an object with a \"variables\" object");
    Alphabet A;
    for (auto it = j["variables"].begin(); it != j["variables"].end(); ++it) {
        if (!it.value().is_string()) throw std::invalid_argument("variable side must be the string \"L\" or \"R\"");
        std::string side = it.value().get<std::string>();
        if (side != "L" && side != "R")
            throw std::invalid_argument("variable \"" + it.key() + "\" has side \"" + side + "\"");
        A.add(it.key(), side == "L" ? Side::L : Side::R);
    }
    return A;
}

Rational read_value(const json& v, const std::string& key) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("value of \"" + key + "\" must be a rational string or an integer");
}

Table read_table(const json& j, const char* field, const Alphabet& A) {
    if (!j.contains(field) || !j[field].is_object())
        throw std::invalid_argument(std::string("expected a \"") + field + "\" object");
    Table t;
    for (auto it = j[field].begin(); it != j[field].end(); ++it) {
        Word w = parse_word(A, it.key());
        if (!is_complete(w)) throw std::invalid_argument("table key \"" + it.key() + "\" contains a placeholder");
        t[w] = read_value(it.value(), it.key());
    }
    return t;
}

json write_variables(const Alphabet& A) {
    json v = json::object();
    for (int id : A.ids()) v[A.name(id)] = std::string(1, side_char(A.side(id)));
    return v;
}

json write_table(const Table& t, const Alphabet& A) {
    json out = json::object();
    for (const auto& [w, v] : t) out[to_string(A, w)] = to_string(v);
    return out;
}

}  // namespace

std::string bipartitions_to_json(const std::vector<Bipartition>& list) {
    json out = json::array();
    for (const auto& pi : list) out.push_back(bipartition_json(pi, {}));
    return out.dump(2) + "\n";
}

std::string bipartitions_to_json(const std::vector<LabeledBipartition>& list) {
    json out = json::array();
    for (const auto& lp : list) out.push_back(bipartition_json(lp.base, lp.order));
    return out.dump(2) + "\n";
}

std::vector<LabeledBipartition> bipartitions_from_json(const std::string& text) {
    json j = parse(text);
    if (j.is_object()) j = json::array({j});
    if (!j.is_array()) throw std::invalid_argument("expected a bipartition object or array");
    std::vector<LabeledBipartition> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("type") || !item.contains("blocks"))
            throw std::invalid_argument("bipartition needs \"type\" and \"blocks\"");
        try {
            TranslucentWord t = TranslucentWord::parse(item["type"].get<std::string>());
            auto blocks = item["blocks"].get<std::vector<PosSet>>();
            // keep the caller's block indices for "order" before canonicalizing
            std::vector<PosSet> original = blocks;
            Bipartition pi = make_bipartition(t, std::move(blocks));
            std::vector<int> order;
            if (item.contains("order"))
                for (int idx : item["order"].get<std::vector<int>>()) {
                    if (idx < 0 || idx >= static_cast<int>(original.size()))
                        throw std::invalid_argument("order index out of range");
                    PosSet B = original[idx];
                    std::sort(B.begin(), B.end());
                    auto pos = std::find(pi.blocks.begin(), pi.blocks.end(), B);
                    order.push_back(static_cast<int>(pos - pi.blocks.begin()));
                }
            out.push_back({std::move(pi), std::move(order)});
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("bad bipartition entry: ") + e.what());
        }
    }
    return out;
}

MomentData moments_from_json(const std::string& text) {
    json j = parse(text);
    MomentData m;
    m.alphabet = read_variables(j);
    m.moments = read_table(j, "moments", m.alphabet);
    return m;
}

std::string moments_to_json(const MomentData& m) {
    json j;
    j["variables"] = write_variables(m.alphabet);
    j["moments"] = write_table(m.moments, m.alphabet);
    return j.dump(2) + "\n";
}

CumulantData cumulants_from_json(const std::string& text) {
    json j = parse(text);
    CumulantData c;
    c.alphabet = read_variables(j);
    if (!j.contains("family") || !j["family"].is_string())
        throw std::invalid_argument("expected a \"family\" string");
    c.family = parse_family(j["family"].get<std::string>());
    c.values = read_table(j, "cumulants", c.alphabet);
    if (c.values.count(Word{})) throw std::invalid_argument("cumulants are not defined on the empty word");
    return c;
}

std::string cumulants_to_json(const CumulantData& c) {
    json j;
    j["variables"] = write_variables(c.alphabet);
    j["family"] = family_name(c.family);
    j["cumulants"] = write_table(c.values, c.alphabet);
    return j.dump(2) + "\n";
}

int longest_word(const Table& t) {
    std::size_t n = 0;
    for (const auto& [w, v] : t) n = std::max(n, w.size());
    return static_cast<int>(n);
}

}  // namespace bifc
