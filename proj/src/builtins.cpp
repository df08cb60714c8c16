#include "posettop/builtins.hpp"

#include <cctype>

namespace posettop {

namespace {

Poset chain(int n) {
    if (n < 1) throw ParseError("chain{n} requires n >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                                 : "x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[static_cast<std::size_t>(i)],
                                                       labels[static_cast<std::size_t>(i + 1)]);
    return Poset::from_relations(std::move(labels), pairs);
}

std::optional<int> suffix_number(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    int v = 0;
    for (std::size_t i = prefix.size(); i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        v = v * 10 + (name[i] - '0');
        if (v > 1'000'000) throw ParseError("builtin parameter too large: " + name);
    }
    return v;
}

}  // namespace

Poset qcube(int n) {
    if (n < 0 || n > 20) throw ParseError("qcube{n} requires 0 <= n <= 20");
    if (n == 0) return Poset::from_relations({"0"}, {});
    std::vector<std::string> labels;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::string l(static_cast<std::size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) l[static_cast<std::size_t>(i)] = '1';
        labels.push_back(std::move(l));
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        for (int i = 0; i < n; ++i)
            if (!(mask & (1u << i)))
                pairs.emplace_back(labels[mask], labels[mask | (1u << i)]);
    return Poset::from_relations(std::move(labels), pairs);
}

Poset builtin_poset(const std::string& name) {
    if (name == "circle4")
        return Poset::from_relations({"a", "b", "c", "d"},
                                     {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    if (name == "sphere6")
        return Poset::from_relations({"a", "b", "c", "d", "e", "f"},
                                     {{"a", "c"},
                                      {"a", "d"},
                                      {"b", "c"},
                                      {"b", "d"},
                                      {"c", "e"},
                                      {"c", "f"},
                                      {"d", "e"},
                                      {"d", "f"}});
    if (name == "max5")
        return Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "d"}, {"c", "d"}});
    if (auto n = suffix_number(name, "chain")) return chain(*n);
    if (auto p = suffix_number(name, "fence")) return fence(*p);
    if (auto n = suffix_number(name, "qcube")) return qcube(*n);
    throw ParseError("unknown builtin poset: " + name);
}

std::vector<std::string> builtin_names() {
    return {"chain{n}", "fence{p}", "circle4", "sphere6", "max5", "qcube{n}"};
}

}  // namespace posettop
