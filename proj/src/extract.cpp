#include "mkp/extract.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mkp/planar_map.hpp"

namespace mkp {

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

Partition extract_partition(const ReductionArtifact& art, const Drawing& d) {
    auto rep = validate_drawing(d);
    if (!rep.valid()) throw ExtractError("drawing invalid: " + rep.violations.front());
    if (!(d.base == art.graph)) throw ExtractError("drawing is not over the reduction graph");

    int ne = art.graph.num_edges();
    std::vector<int> gadget_of(ne, -1);
    for (size_t gi = 0; gi < art.gadgets.size(); ++gi)
        for (int e : art.gadgets[gi].edges) gadget_of[e] = static_cast<int>(gi);

    // the Claim's condition: a gadget edge may only cross edges of the same
    // gadget
    for (const auto& c : d.crossings) {
        int ga = gadget_of[c.pair.first];
        int gb = gadget_of[c.pair.second];
        if ((ga >= 0 || gb >= 0) && ga != gb)
            throw ExtractError("uncrossable edge crossed externally at " + c.id);
    }

    // skeleton = the 4n corridor gadgets
    std::set<int> skeleton_edges;
    int n = art.instance.n;
    for (const auto& h : art.gadgets) {
        bool skel = h.role.rfind("s-a", 0) == 0 || h.role.rfind("a-b", 0) == 0 ||
                    h.role.rfind("b-c", 0) == 0 || h.role.rfind("c-t", 0) == 0;
        if (skel)
            for (int e : h.edges) skeleton_edges.insert(e);
    }

    // planarization faces, merged across every non-skeleton dart; the merged
    // regions are the faces of the skeleton subdrawing
    PlanarMap m = PlanarMap::from_drawing(d);
    std::vector<int> face_of(m.num_darts(), -1);
    int nfaces = 0;
    for (int dd = 0; dd < m.num_darts(); ++dd) {
        if (face_of[dd] >= 0 || !m.dart_alive(dd)) continue;
        int it = dd;
        do {
            face_of[it] = nfaces;
            it = m.face_next(it);
        } while (it != dd);
        ++nfaces;
    }
    UF uf(nfaces);
    for (int dd = 0; dd < m.num_darts(); ++dd) {
        if (!m.dart_alive(dd)) continue;
        if (skeleton_edges.count(m.edge_of(dd))) continue;
        uf.unite(face_of[dd], face_of[m.twin(dd)]);
    }

    auto region_of_vertex = [&](int v) {
        int reg = -1;
        for (int c : m.corners(v)) {
            if (c < 0) throw ExtractError("vertex with no incident face");
            int r = uf.find(face_of[c]);
            if (reg >= 0 && r != reg)
                throw ExtractError("vertex lies on a skeleton face boundary: " +
                                   art.graph.vertex_name(v));
            reg = r;
        }
        return reg;
    };

    // which corridor paths bound each region (corridor role "x-yi" -> row)
    std::map<int, int> corridor_row;
    for (size_t gi = 0; gi < art.gadgets.size(); ++gi) {
        const auto& role = art.gadgets[gi].role;
        if (role.rfind("s-a", 0) == 0 || role.rfind("a-b", 0) == 0 ||
            role.rfind("b-c", 0) == 0 || role.rfind("c-t", 0) == 0)
            corridor_row[static_cast<int>(gi)] = std::stoi(role.substr(3)) - 1;
    }
    std::map<int, std::set<int>> region_paths;
    for (int dd = 0; dd < m.num_darts(); ++dd) {
        if (!m.dart_alive(dd)) continue;
        int e = m.edge_of(dd);
        if (!skeleton_edges.count(e)) continue;
        auto it = corridor_row.find(gadget_of[e]);
        if (it != corridor_row.end())
            region_paths[uf.find(face_of[dd])].insert(it->second);
    }

    // face of row i: located through that row's chain; the face must be
    // bounded by the corridors of paths i and i+1 (just path 1 when n = 1)
    std::map<int, int> region_row;
    for (int i = 0; i < n; ++i) {
        int probe = n == 1 ? art.u[0] : art.d[i][1];
        int r = region_of_vertex(probe);
        if (region_row.count(r) && region_row[r] != i)
            throw ExtractError("two chains share a skeleton face");
        std::set<int> expect;
        expect.insert(i);
        expect.insert((i + 1) % n);
        if (region_paths[r] != expect)
            throw ExtractError("skeleton does not form the expected cycle of paths");
        region_row[r] = i;
    }
    if (static_cast<int>(region_row.size()) != n)
        throw ExtractError("content faces are not distinct per row");

    Partition p;
    p.triplets.assign(n, {});
    std::vector<std::vector<int>> members(n);
    for (int j = 0; j < 3 * n; ++j) {
        int r = region_of_vertex(art.u[j]);
        auto it = region_row.find(r);
        if (it == region_row.end())
            throw ExtractError("u vertex outside every content face: u" + std::to_string(j + 1));
        members[it->second].push_back(j + 1);
    }
    for (int i = 0; i < n; ++i) {
        if (members[i].size() != 3)
            throw ExtractError("face does not hold exactly three u vertices");
        std::sort(members[i].begin(), members[i].end());
        p.triplets[i] = {members[i][0], members[i][1], members[i][2]};
    }
    if (!check_partition(art.instance, p))
        throw ExtractError("extracted assignment is not a valid partition");
    return p;
}

}  // namespace mkp
