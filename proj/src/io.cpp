#include "spanlab/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace spanlab {

namespace {

// Non-comment, non-blank lines in order.
std::vector<std::string> payload_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ContractError(std::string("parse: bad ") + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw ContractError(std::string("parse: bad ") + what + " '" + tok + "'");
    return value;
}

} // namespace

Graph parse_gr(std::istream& in) {
    auto lines = payload_lines(in);
    if (lines.empty()) throw ContractError("parse_gr: missing 'p tw' header");
    auto head = tokens_of(lines[0]);
    if (head.size() != 4 || head[0] != "p" || head[1] != "tw")
        throw ContractError("parse_gr: expected header 'p tw <n> <m>'");
    int n = parse_int(head[2], "vertex count");
    int m = parse_int(head[3], "edge count");
    if (n < 0 || m < 0) throw ContractError("parse_gr: negative header counts");
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ContractError("parse_gr: header promises " + std::to_string(m) + " edges, found " +
                            std::to_string(lines.size() - 1));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.size() != 2) throw ContractError("parse_gr: edge line needs two endpoints");
        int u = parse_int(toks[0], "endpoint");
        int v = parse_int(toks[1], "endpoint");
        if (u < 1 || v < 1 || u > n || v > n)
            throw ContractError("parse_gr: endpoint out of range on line '" + lines[i] + "'");
        if (u == v) throw ContractError("parse_gr: self-loop on line '" + lines[i] + "'");
        edges.push_back({u - 1, v - 1});
    }
    return new_graph(n, std::move(edges));
}

std::string emit_gr(const Graph& g) {
    std::string out = "p tw " + std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges)
        out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

TreeDecomposition parse_td(std::istream& in, int* graphN) {
    auto lines = payload_lines(in);
    if (lines.empty()) throw ContractError("parse_td: missing 's td' header");
    auto head = tokens_of(lines[0]);
    if (head.size() != 5 || head[0] != "s" || head[1] != "td")
        throw ContractError("parse_td: expected header 's td <numBags> <maxBagSize> <n>'");
    int numBags = parse_int(head[2], "bag count");
    int maxBagSize = parse_int(head[3], "max bag size");
    int n = parse_int(head[4], "vertex count");
    if (numBags < 1 || maxBagSize < 0 || n < 0)
        throw ContractError("parse_td: bad header counts");
    if (graphN) *graphN = n;

    TreeDecomposition td;
    td.bags.assign(numBags, {});
    std::vector<char> seen(numBags, 0);
    std::size_t at = 1;
    int actualMax = 0;
    for (; at < lines.size(); ++at) {
        auto toks = tokens_of(lines[at]);
        if (toks.empty() || toks[0] != "b") break;
        if (toks.size() < 2) throw ContractError("parse_td: bag line needs an id");
        int id = parse_int(toks[1], "bag id");
        if (id < 1 || id > numBags) throw ContractError("parse_td: bag id out of range");
        if (seen[id - 1]) throw ContractError("parse_td: duplicate bag " + std::to_string(id));
        seen[id - 1] = 1;
        std::vector<int> bag;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            int v = parse_int(toks[i], "bag vertex");
            if (v < 1 || v > n) throw ContractError("parse_td: bag vertex out of range");
            bag.push_back(v - 1);
        }
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        actualMax = std::max(actualMax, static_cast<int>(bag.size()));
        td.bags[id - 1] = std::move(bag);
    }
    for (int b = 0; b < numBags; ++b)
        if (!seen[b]) throw ContractError("parse_td: bag " + std::to_string(b + 1) + " missing");
    if (actualMax != maxBagSize)
        throw ContractError("parse_td: header max bag size " + std::to_string(maxBagSize) +
                            " but bags reach " + std::to_string(actualMax));
    for (; at < lines.size(); ++at) {
        auto toks = tokens_of(lines[at]);
        if (toks.size() != 2) throw ContractError("parse_td: tree edge line needs two bag ids");
        int a = parse_int(toks[0], "bag id");
        int b = parse_int(toks[1], "bag id");
        if (a < 1 || b < 1 || a > numBags || b > numBags)
            throw ContractError("parse_td: tree edge endpoint out of range");
        td.treeEdges.push_back({a - 1, b - 1});
    }
    return td;
}

std::string emit_td(const TreeDecomposition& td, int n) {
    int maxBag = 0;
    for (const auto& bag : td.bags) maxBag = std::max(maxBag, static_cast<int>(bag.size()));
    std::string out = "s td " + std::to_string(td.num_nodes()) + " " + std::to_string(maxBag) +
                      " " + std::to_string(n) + "\n";
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out += "b " + std::to_string(b + 1);
        for (int v : td.bags[b]) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    for (auto [a, b] : td.treeEdges)
        out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

nlohmann::ordered_json labeling_json(const Graph& g, const Labeling& f, PqParams params,
                                     int lambda, const std::string& algo) {
    if (static_cast<int>(f.size()) != g.n)
        throw ContractError("labeling_json: labeling size mismatch");
    nlohmann::ordered_json j;
    j["p"] = params.p;
    j["q"] = params.q;
    j["lambda"] = lambda;
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (int v = 0; v < g.n; ++v) labels[std::to_string(v + 1)] = f[v];
    j["labels"] = labels;
    j["algo"] = algo;
    j["valid"] = verify(g, f, params).valid;
    return j;
}

Labeling labeling_from_json(const nlohmann::ordered_json& j, int n) {
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_object())
        throw ContractError("labeling json: expected an object with a 'labels' object");
    Labeling f(n, -1);
    for (int v = 0; v < n; ++v) {
        std::string key = std::to_string(v + 1);
        if (!j["labels"].contains(key))
            throw ContractError("labeling json: vertex " + key + " missing");
        const auto& val = j["labels"][key];
        if (!val.is_number_integer())
            throw ContractError("labeling json: label of vertex " + key + " is not an integer");
        f[v] = val.get<int>();
        if (f[v] < 0) throw ContractError("labeling json: negative label at vertex " + key);
    }
    return f;
}

} // namespace spanlab
