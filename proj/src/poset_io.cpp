#include "posettop/poset_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace posettop {

using nlohmann::json;

std::string poset_to_json(const Poset& P) {
    json j;
    j["elements"] = P.labels();
    json rels = json::array();
    for (auto [a, b] : P.covers()) rels.push_back({P.label(a), P.label(b)});
    j["relations"] = rels;
    return j.dump();
}

Poset poset_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid poset JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw ParseError("poset JSON must contain an \"elements\" array");
    std::vector<std::string> labels;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw ParseError("poset elements must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) throw ParseError("\"relations\" must be an array");
        for (const auto& r : j["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw ParseError("each relation must be a [lower, upper] string pair");
            pairs.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    return Poset::from_relations(std::move(labels), pairs);
}

std::string poset_to_text(const Poset& P) {
    // Elements first so a round trip preserves id assignment order.
    std::ostringstream out;
    for (int x = 0; x < P.size(); ++x) out << P.label(x) << "\n";
    for (auto [a, b] : P.covers()) out << P.label(a) << " < " << P.label(b) << "\n";
    return out.str();
}

Poset poset_from_text(const std::string& text) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    auto note_label = [&](const std::string& l) {
        for (const auto& k : labels)
            if (k == l) return;
        labels.push_back(l);
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string lhs, op, rhs, extra;
        if (!(ls >> lhs)) continue;  // blank
        if (!(ls >> op)) {
            note_label(lhs);
            continue;
        }
        if (op != "<" || !(ls >> rhs) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": expected \"x < y\"");
        note_label(lhs);
        note_label(rhs);
        pairs.emplace_back(lhs, rhs);
    }
    return Poset::from_relations(std::move(labels), pairs);
}

std::string poset_to_dot(const Poset& P) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (int x = 0; x < P.size(); ++x) out << "  \"" << P.label(x) << "\";\n";
    for (auto [a, b] : P.covers())
        out << "  \"" << P.label(a) << "\" -> \"" << P.label(b) << "\";\n";
    out << "}\n";
    return out.str();
}

Poset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return poset_from_json(text);
    return poset_from_text(text);
}

}  // namespace posettop
