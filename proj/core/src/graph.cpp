#include "phimet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace phimet {

int WeightedGraph::add_vertex(const VertexId& label) {
    if (label.empty()) throw ParseError("empty vertex label");
    for (char c : label)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw ParseError("vertex label '" + label + "' contains whitespace");
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    int id = vertex_count();
    labels_.push_back(label);
    index_.emplace(label, id);
    adjacency_.emplace_back();
    return id;
}

void WeightedGraph::add_edge(const VertexId& a, const VertexId& b, Weight w,
                             std::string lexeme, int line) {
    if (a == b) throw SelfLoop("self-loop at vertex '" + a + "'", line);
    int ia = add_vertex(a);
    int ib = add_vertex(b);
    if (find_edge(ia, ib) >= 0)
        throw DuplicateEdge("duplicate edge {" + a + ", " + b + "}", line);
    if (w.is_exact() != mode_.is_exact())
        throw InternalError("weight representation does not match graph mode");
    int e = edge_count();
    edges_.push_back(EdgeRec{std::min(ia, ib), std::max(ia, ib), std::move(w),
                             std::move(lexeme)});
    adjacency_[static_cast<size_t>(ia)].emplace_back(ib, e);
    adjacency_[static_cast<size_t>(ib)].emplace_back(ia, e);
}

int WeightedGraph::index_of(const VertexId& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

int WeightedGraph::require_index(const VertexId& label) const {
    int id = index_of(label);
    if (id < 0) throw Error("unknown vertex '" + label + "'");
    return id;
}

int WeightedGraph::find_edge(int u, int v) const {
    const auto& adj = adjacency_[static_cast<size_t>(u)];
    for (const auto& [nbr, e] : adj)
        if (nbr == v) return e;
    return -1;
}

std::span<const std::pair<int, int>> WeightedGraph::neighbors(int v) const {
    return adjacency_[static_cast<size_t>(v)];
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

WeightedGraph parse_edge_list(std::string_view text, const NumericMode& mode) {
    WeightedGraph g(mode);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() == 2 && tokens[0] == "vertex") {
            try {
                g.add_vertex(tokens[1]);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno);
            }
            continue;
        }
        if (tokens.size() != 3)
            throw ParseError("expected 'vertex <label>' or '<u> <v> <w>'",
                             lineno);
        Weight w = parse_weight_lexeme(tokens[2], mode, lineno);
        g.add_edge(tokens[0], tokens[1], std::move(w), tokens[2], lineno);
    }
    return g;
}

WeightedGraph parse_graph_json(std::string_view text, const NumericMode& mode) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("graph JSON needs 'vertices' and 'edges' keys");
    WeightedGraph g(mode);
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex labels must be strings");
        g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v") ||
            !e.contains("w"))
            throw ParseError("each edge needs 'u', 'v' and 'w'");
        if (!e["w"].is_string())
            throw ParseError("edge weight must be a string lexeme");
        std::string lexeme = e["w"].get<std::string>();
        Weight w = parse_weight_lexeme(lexeme, mode);
        g.add_edge(e["u"].get<std::string>(), e["v"].get<std::string>(),
                   std::move(w), lexeme);
    }
    return g;
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::string out;
    for (const auto& label : g.vertex_labels())
        out += "vertex " + label + "\n";
    for (const auto& e : g.edges()) {
        const std::string& lex = e.lexeme.empty() ? e.w.lexeme() : e.lexeme;
        out += g.label(e.u) + " " + g.label(e.v) + " " + lex + "\n";
    }
    return out;
}

std::string serialize_graph_json(const WeightedGraph& g) {
    nlohmann::json doc;
    doc["vertices"] = g.vertex_labels();
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        const std::string& lex = e.lexeme.empty() ? e.w.lexeme() : e.lexeme;
        doc["edges"].push_back(
            {{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"w", lex}});
    }
    return doc.dump(2) + "\n";
}

std::pair<std::vector<int>, int> component_ids(const WeightedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        stack.push_back(s);
        comp[static_cast<size_t>(s)] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [nbr, e] : g.neighbors(v)) {
                if (comp[static_cast<size_t>(nbr)] < 0) {
                    comp[static_cast<size_t>(nbr)] = count;
                    stack.push_back(nbr);
                }
            }
        }
        ++count;
    }
    return {std::move(comp), count};
}

std::vector<std::vector<VertexId>> components(const WeightedGraph& g) {
    auto [comp, count] = component_ids(g);
    std::vector<std::vector<VertexId>> blocks(static_cast<size_t>(count));
    for (int v = 0; v < g.vertex_count(); ++v)
        blocks[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(
            g.label(v));
    for (auto& block : blocks) std::sort(block.begin(), block.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

bool same_graph(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<VertexId> la = a.vertex_labels(), lb = b.vertex_labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return false;
    for (const auto& e : a.edges()) {
        int u = b.index_of(a.label(e.u)), v = b.index_of(a.label(e.v));
        if (u < 0 || v < 0) return false;
        int other = b.find_edge(u, v);
        if (other < 0) return false;
        if (!(b.edge(other).w == e.w)) return false;
    }
    return true;
}

}  // namespace phimet
