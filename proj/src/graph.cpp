#include "mkp/graph.hpp"

#include <algorithm>

#include "json.hpp"

namespace mkp {

std::string RoleLabel::to_string() const {
    switch (kind) {
        case Kind::S: return "s";
        case Kind::T: return "t";
        case Kind::A: return "a(" + std::to_string(i) + ")";
        case Kind::B: return "b(" + std::to_string(i) + ")";
        case Kind::C: return "c(" + std::to_string(i) + ")";
        case Kind::U: return "u(" + std::to_string(i) + ")";
        case Kind::D: return "d(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::WireMid: return "wire-mid";
        case Kind::UVPathMid: return "uvpath-mid";
        case Kind::GadgetInternal: return "gadget(" + detail + ")";
    }
    return "?";
}

std::optional<RoleLabel> RoleLabel::parse(const std::string& s) {
    RoleLabel r;
    auto args = [&](size_t at) {
        std::string inner = s.substr(at + 1, s.size() - at - 2);
        auto comma = inner.find(',');
        if (comma == std::string::npos) return std::pair<std::string, std::string>{inner, ""};
        return std::pair<std::string, std::string>{inner.substr(0, comma), inner.substr(comma + 1)};
    };
    if (s == "s") { r.kind = Kind::S; return r; }
    if (s == "t") { r.kind = Kind::T; return r; }
    if (s == "wire-mid") { r.kind = Kind::WireMid; return r; }
    if (s == "uvpath-mid") { r.kind = Kind::UVPathMid; return r; }
    auto paren = s.find('(');
    if (paren == std::string::npos || s.back() != ')') return std::nullopt;
    std::string head = s.substr(0, paren);
    auto [first, second] = args(paren);
    if (head == "gadget") { r.kind = Kind::GadgetInternal; r.detail = first; return r; }
    try {
        if (head == "a") { r.kind = Kind::A; r.i = std::stoi(first); return r; }
        if (head == "b") { r.kind = Kind::B; r.i = std::stoi(first); return r; }
        if (head == "c") { r.kind = Kind::C; r.i = std::stoi(first); return r; }
        if (head == "u") { r.kind = Kind::U; r.i = std::stoi(first); return r; }
        if (head == "d") { r.kind = Kind::D; r.i = std::stoi(first); r.j = std::stoi(second); return r; }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

int Graph::add_vertex(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    int v = static_cast<int>(names_.size());
    names_.push_back(id);
    index_[id] = v;
    return v;
}

int Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop rejected: " + names_.at(u));
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw std::invalid_argument("edge endpoint out of range");
    auto key = std::minmax(u, v);
    auto it = edge_index_.find(key);
    if (it != edge_index_.end()) return it->second;
    int e = static_cast<int>(edges_.size());
    edges_.push_back(key);
    edge_index_[key] = e;
    return e;
}

int Graph::add_edge(const std::string& u, const std::string& v) {
    return add_edge(vertex_index(u), vertex_index(v));
}

bool Graph::has_edge(int u, int v) const {
    return edge_index_.count(std::minmax(u, v)) > 0;
}

int Graph::vertex_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + id);
    return it->second;
}

int Graph::edge_index(int u, int v) const {
    auto it = edge_index_.find(std::minmax(u, v));
    return it == edge_index_.end() ? -1 : it->second;
}

std::optional<RoleLabel> Graph::label(int v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); ++e)
        if (edges_[e].first == v || edges_[e].second == v) out.push_back(e);
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

bool Graph::adjacent_edges(int e, int f) const {
    auto [a, b] = edges_.at(e);
    auto [c, d] = edges_.at(f);
    return a == c || a == d || b == c || b == d;
}

bool Graph::connected() const {
    if (num_vertices() <= 1) return true;
    std::vector<std::vector<int>> adj(num_vertices());
    for (auto [a, b] : edges_) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(num_vertices(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == num_vertices();
}

Graph complete_graph(int t) {
    if (t < 1) throw std::invalid_argument("complete_graph requires t >= 1");
    Graph g;
    for (int v = 0; v < t; ++v) g.add_vertex("v" + std::to_string(v));
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return g;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.num_vertices(); ++v) j["vertices"].push_back(g.vertex_name(v));
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges())
        j["edges"].push_back({g.vertex_name(a), g.vertex_name(b)});
    j["labels"] = nlohmann::ordered_json::object();
    for (const auto& [v, lab] : g.labels()) j["labels"][g.vertex_name(v)] = lab.to_string();
    return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Graph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    if (j.contains("labels"))
        for (auto& [k, v] : j["labels"].items()) {
            auto lab = RoleLabel::parse(v.get<std::string>());
            if (!lab) throw std::invalid_argument("bad role label: " + v.get<std::string>());
            g.set_label(g.vertex_index(k), *lab);
        }
    return g;
}

}  // namespace mkp
