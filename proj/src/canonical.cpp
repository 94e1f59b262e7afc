#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mkp/planar_map.hpp"

namespace mkp {

namespace {

// Rooted BFS encoding of a connected map from a start dart, walking each
// rotation in the chosen direction. Nodes are numbered in emission order;
// the stream is (color, degree, neighbor ids...) per visited node.
class Encoder {
  public:
    explicit Encoder(const PlanarMap& m) : m_(m), id_(m.num_nodes(), -1) {}

    // Emits the encoding for (start, reversed); compares against `best`
    // (empty best = always better). Returns -1/0/+1 like a comparator and
    // fills `out` when the candidate is <= best.
    int run(int start, bool reversed, const std::vector<int>& best, std::vector<int>* out,
            std::vector<int>* numbering) {
        ++epoch_;
        if (epoch_mark_.size() != id_.size()) epoch_mark_.assign(id_.size(), 0);
        out->clear();
        int verdict = best.empty() ? -1 : 0;
        auto emit = [&](int x) {
            if (verdict <= 0) {
                size_t pos = out->size();
                if (verdict == 0 && pos < best.size()) {
                    if (x < best[pos]) verdict = -1;
                    else if (x > best[pos]) verdict = 1;
                }
                out->push_back(x);
            }
            return verdict <= 0;
        };

        int next_id = 0;
        auto assign = [&](int node) {
            epoch_mark_[node] = epoch_;
            id_[node] = next_id++;
        };

        std::vector<int> queue_entry;  // entry dart per BFS slot
        std::vector<int> queue_node;
        assign(m_.origin(start));
        queue_node.push_back(m_.origin(start));
        queue_entry.push_back(start);

        for (size_t qi = 0; qi < queue_node.size(); ++qi) {
            int n = queue_node[qi];
            int entry = queue_entry[qi];
            if (!emit(m_.node(n).is_crossing ? 1 : 0)) return 1;
            if (!emit(m_.node(n).degree)) return 1;
            int d = entry;
            for (int k = 0; k < m_.node(n).degree; ++k) {
                int h = m_.head(d);
                if (epoch_mark_[h] != epoch_) {
                    assign(h);
                    queue_node.push_back(h);
                    queue_entry.push_back(m_.twin(d));
                }
                if (!emit(id_[h])) return 1;
                d = reversed ? m_.prev(d) : m_.next(d);
            }
        }
        if (verdict == 0 && out->size() != best.size())
            verdict = out->size() < best.size() ? -1 : 1;
        if (numbering) {
            numbering->assign(id_.size(), -1);
            for (size_t n = 0; n < id_.size(); ++n)
                if (epoch_mark_[n] == epoch_) (*numbering)[n] = id_[n];
        }
        return verdict;
    }

  private:
    const PlanarMap& m_;
    std::vector<int> id_;
    std::vector<int> epoch_mark_;
    int epoch_ = 0;
};

std::string pack(const std::vector<int>& enc) {
    std::string s;
    s.reserve(enc.size() * 2);
    for (int x : enc) {
        // varint-ish pack; values are small nonnegative ints
        unsigned v = static_cast<unsigned>(x);
        while (v >= 0x80) {
            s.push_back(static_cast<char>((v & 0x7f) | 0x80));
            v >>= 7;
        }
        s.push_back(static_cast<char>(v));
    }
    return s;
}

std::vector<int> canonical_encoding(const PlanarMap& m, const CanonicalOptions& opt,
                                    std::vector<std::vector<int>>* all_optimal_numberings) {
    if (!m.connected()) throw std::invalid_argument("canonical form requires a connected map");
    if (m.num_darts() == 0) {
        std::vector<int> enc{m.node(0).is_crossing ? 1 : 0, 0};
        if (all_optimal_numberings) all_optimal_numberings->push_back({0});
        return enc;
    }
    Encoder enc(m);
    std::vector<int> best, cand, numbering;
    std::vector<std::pair<int, bool>> optimal;
    for (int rev = 0; rev < (opt.allow_reflection ? 2 : 1); ++rev) {
        for (int d = 0; d < m.num_darts(); ++d) {
            if (!m.dart_alive(d)) continue;
            int v = enc.run(d, rev != 0, best, &cand, nullptr);
            if (v < 0) {
                best = cand;
                optimal.clear();
                optimal.push_back({d, rev != 0});
            } else if (v == 0) {
                optimal.push_back({d, rev != 0});
            }
        }
    }
    if (all_optimal_numberings) {
        for (auto [d, rev] : optimal) {
            int v = enc.run(d, rev, best, &cand, &numbering);
            if (v != 0 && !(cand == best)) continue;
            all_optimal_numberings->push_back(numbering);
        }
    }
    return best;
}

}  // namespace

std::string canonical_map_key(const PlanarMap& m, const CanonicalOptions& opt) {
    return pack(canonical_encoding(m, opt, nullptr));
}

std::vector<std::vector<int>> map_automorphisms(const PlanarMap& m, const CanonicalOptions& opt) {
    std::vector<std::vector<int>> numberings;
    canonical_encoding(m, opt, &numberings);
    if (numberings.empty()) return {};
    const auto& ref = numberings.front();
    std::vector<int> ref_inv(ref.size(), -1);
    for (size_t n = 0; n < ref.size(); ++n)
        if (ref[n] >= 0) ref_inv[ref[n]] = static_cast<int>(n);
    std::set<std::vector<int>> uniq;
    for (const auto& num : numberings) {
        std::vector<int> perm(num.size(), -1);
        for (size_t n = 0; n < num.size(); ++n)
            if (num[n] >= 0) perm[n] = ref_inv[num[n]];
        uniq.insert(perm);
    }
    return {uniq.begin(), uniq.end()};
}

std::string canonical_key_iso(const Drawing& d) {
    return canonical_map_key(PlanarMap::from_drawing(d));
}

bool isomorphic(const Drawing& a, const Drawing& b) {
    return canonical_key_iso(a) == canonical_key_iso(b);
}

bool isomorphic_orientation_preserving(const Drawing& a, const Drawing& b) {
    CanonicalOptions opt;
    opt.allow_reflection = false;
    return canonical_map_key(PlanarMap::from_drawing(a), opt) ==
           canonical_map_key(PlanarMap::from_drawing(b), opt);
}

namespace {

// (sorted edge list, sorted crossing-pair list) after relabeling vertices by
// perm; the pair list encodes each crossing pair as two normalized vertex
// pairs.
std::vector<int> relabeled_signature(const Drawing& d, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : d.base.edges()) {
        int u = perm[a], v = perm[b];
        edges.push_back(std::minmax(u, v));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<std::array<int, 4>> pairs;
    for (const auto& c : d.crossings) {
        auto [ea, eb] = c.pair;
        auto [a1, a2] = d.base.edge(ea);
        auto [b1, b2] = d.base.edge(eb);
        auto p = std::minmax(perm[a1], perm[a2]);
        auto q = std::minmax(perm[b1], perm[b2]);
        std::array<int, 4> rec{p.first, p.second, q.first, q.second};
        std::array<int, 4> rec2{q.first, q.second, p.first, p.second};
        pairs.push_back(std::min(rec, rec2));
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> sig;
    sig.push_back(d.base.num_vertices());
    for (auto [u, v] : edges) {
        sig.push_back(u);
        sig.push_back(v);
    }
    sig.push_back(-1);
    for (const auto& r : pairs) sig.insert(sig.end(), r.begin(), r.end());
    return sig;
}

}  // namespace

std::string canonical_key_weak_iso(const Drawing& d) {
    if (!is_simple(d)) throw std::invalid_argument("weak isomorphism is defined for simple drawings");
    int n = d.base.num_vertices();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<int> best;
    do {
        auto sig = relabeled_signature(d, perm);
        if (best.empty() || sig < best) best = std::move(sig);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return pack(best);
}

bool weakly_isomorphic(const Drawing& a, const Drawing& b, bool relabel) {
    if (!is_simple(a) || !is_simple(b))
        throw std::invalid_argument("weak isomorphism is defined for simple drawings");
    if (relabel) return canonical_key_weak_iso(a) == canonical_key_weak_iso(b);
    if (!(a.base == b.base)) return false;
    std::vector<int> id(a.base.num_vertices());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    return relabeled_signature(a, id) == relabeled_signature(b, id);
}

}  // namespace mkp
