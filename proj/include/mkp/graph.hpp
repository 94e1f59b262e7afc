#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mkp {

/// Role tag attached to a vertex of a host graph. Indices are 1-based and
/// only meaningful for the roles that carry them.
struct RoleLabel {
    enum class Kind {
        S,
        T,
        A,
        B,
        C,
        U,
        D,
        WireMid,
        UVPathMid,
        GadgetInternal,
    };
    Kind kind = Kind::GadgetInternal;
    int i = 0;
    int j = 0;
    std::string detail;  // sub-kind for GadgetInternal ("block", ...)

    std::string to_string() const;
    static std::optional<RoleLabel> parse(const std::string& s);
    bool operator==(const RoleLabel&) const = default;
};

/// Simple labeled undirected graph. Vertices are named; edges are stored in
/// insertion order and referenced elsewhere by index into that order.
class Graph {
  public:
    Graph() = default;

    int add_vertex(const std::string& id);
    /// Adds the edge if not already present; returns its index either way.
    int add_edge(int u, int v);
    int add_edge(const std::string& u, const std::string& v);

    bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }
    bool has_edge(int u, int v) const;
    int vertex_index(const std::string& id) const;
    const std::string& vertex_name(int v) const { return names_.at(v); }

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_.at(e); }
    int edge_index(int u, int v) const;  // -1 if absent

    void set_label(int v, RoleLabel label) { labels_[v] = std::move(label); }
    std::optional<RoleLabel> label(int v) const;
    const std::map<int, RoleLabel>& labels() const { return labels_; }

    std::vector<int> neighbors(int v) const;
    std::vector<int> incident_edges(int v) const;
    int degree(int v) const;
    bool adjacent_edges(int e, int f) const;
    bool connected() const;

    bool operator==(const Graph& o) const {
        return names_ == o.names_ && edges_ == o.edges_;
    }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::pair<int, int>, int> edge_index_;
    std::map<int, RoleLabel> labels_;
};

Graph complete_graph(int t);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace mkp
