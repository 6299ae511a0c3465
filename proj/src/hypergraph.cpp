#include "toric/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace toric {

void Hypergraph::validate() const {
    if (vertex_count < 0) throw std::invalid_argument("hypergraph: negative vertex count");
    if (!vertex_labels.empty() && static_cast<int>(vertex_labels.size()) != vertex_count)
        throw std::invalid_argument("hypergraph: label count mismatch");
    for (const auto& e : edges) {
        if (e.empty()) throw std::invalid_argument("hypergraph: empty edge");
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (e[t] < 0 || e[t] >= vertex_count) throw std::invalid_argument("hypergraph: vertex index out of range");
            if (t > 0 && e[t] <= e[t - 1]) throw std::invalid_argument("hypergraph: edge vertices must be sorted and distinct");
        }
    }
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

IntegerMatrix incidence_matrix(const Hypergraph& h) {
    IntegerMatrix M(h.vertex_count, static_cast<int>(h.edges.size()));
    for (int j = 0; j < M.cols; ++j)
        for (int v : h.edges[static_cast<std::size_t>(j)]) M.at(v, j) = 1;
    return M;
}

std::pair<Hypergraph, std::vector<int>> restrict_to(const Hypergraph& h, const std::vector<int>& U) {
    if (U.empty()) throw std::invalid_argument("restrict: U must be nonempty");
    std::vector<int> index_of(static_cast<std::size_t>(h.vertex_count), -1);
    std::vector<int> sortedU = U;
    std::sort(sortedU.begin(), sortedU.end());
    sortedU.erase(std::unique(sortedU.begin(), sortedU.end()), sortedU.end());
    for (std::size_t t = 0; t < sortedU.size(); ++t) {
        if (sortedU[t] < 0 || sortedU[t] >= h.vertex_count) throw std::invalid_argument("restrict: vertex out of range");
        index_of[static_cast<std::size_t>(sortedU[t])] = static_cast<int>(t);
    }
    Hypergraph multi;
    multi.vertex_count = static_cast<int>(sortedU.size());
    if (!h.vertex_labels.empty())
        for (int v : sortedU) multi.vertex_labels.push_back(h.vertex_labels[static_cast<std::size_t>(v)]);
    std::vector<int> edge_map;
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
        std::vector<int> cut;
        for (int v : h.edges[j])
            if (index_of[static_cast<std::size_t>(v)] >= 0) cut.push_back(index_of[static_cast<std::size_t>(v)]);
        if (!cut.empty()) {
            multi.edges.push_back(std::move(cut));
            edge_map.push_back(static_cast<int>(j));
        }
    }
    return {multi, edge_map};
}

std::optional<BouquetWithBasis> is_bouquet_with_basis(const Hypergraph& h, const std::vector<int>& U) {
    if (U.empty()) return std::nullopt;
    auto [multi, edge_map] = restrict_to(h, U);
    if (multi.edges.empty()) return std::nullopt;
    LatticeBasis K = kernel_lattice_basis(incidence_matrix(multi));
    if (K.vectors.size() != 1) return std::nullopt;
    IVec c_small = sign_canonical(K.vectors[0]);
    for (const Int& x : c_small)
        if (x == 0) return std::nullopt;  // generator must have support on all of E_U
    BouquetWithBasis b;
    b.basis_U = U;
    std::sort(b.basis_U.begin(), b.basis_U.end());
    b.basis_U.erase(std::unique(b.basis_U.begin(), b.basis_U.end()), b.basis_U.end());
    b.edge_indices = edge_map;
    b.c_vector.assign(h.edges.size(), Int(0));
    for (std::size_t t = 0; t < edge_map.size(); ++t)
        b.c_vector[static_cast<std::size_t>(edge_map[t])] = c_small[t];
    b.a_vector = incidence_matrix(h).mul(b.c_vector);
    return b;
}

bool verify_bwb_partition(const Hypergraph& h,
                          const std::vector<std::pair<std::vector<int>, std::vector<int>>>& parts) {
    std::vector<char> seen(h.edges.size(), 0);
    for (const auto& [U, E] : parts) {
        for (int e : E) {
            if (e < 0 || e >= static_cast<int>(h.edges.size())) return false;
            if (seen[static_cast<std::size_t>(e)]) return false;
            seen[static_cast<std::size_t>(e)] = 1;
        }
    }
    for (char s : seen)
        if (!s) return false;
    for (const auto& [U, E] : parts) {
        auto bwb = is_bouquet_with_basis(h, U);
        if (!bwb) return false;
        std::vector<int> want = E;
        std::sort(want.begin(), want.end());
        if (bwb->edge_indices != want) return false;
    }
    return true;
}

IVec imbalance_vector(const Hypergraph& h, const std::vector<int>& blue, const std::vector<int>& red) {
    IVec a(static_cast<std::size_t>(h.vertex_count), Int(0));
    for (int e : blue) {
        if (e < 0 || e >= static_cast<int>(h.edges.size())) throw std::invalid_argument("imbalance: bad edge index");
        for (int v : h.edges[static_cast<std::size_t>(e)]) a[static_cast<std::size_t>(v)] += 1;
    }
    for (int e : red) {
        if (e < 0 || e >= static_cast<int>(h.edges.size())) throw std::invalid_argument("imbalance: bad edge index");
        for (int v : h.edges[static_cast<std::size_t>(e)]) a[static_cast<std::size_t>(v)] -= 1;
    }
    return a;
}

std::pair<std::vector<int>, std::vector<int>> walk_from_kernel_vector(const Hypergraph& h, const IVec& u) {
    if (u.size() != h.edges.size()) throw std::invalid_argument("walk: vector length mismatch");
    if (!is_zero_vec(incidence_matrix(h).mul(u))) throw std::invalid_argument("walk: vector is not in the kernel");
    std::vector<int> blue, red;
    for (std::size_t j = 0; j < u.size(); ++j) {
        Int k = abs_int(u[j]);
        for (Int t(0); t < k; ++t) (u[j] > 0 ? blue : red).push_back(static_cast<int>(j));
    }
    return {blue, red};
}

IVec kernel_vector_from_walk(const Hypergraph& h, const std::vector<int>& blue, const std::vector<int>& red) {
    IVec u(h.edges.size(), Int(0));
    for (int e : blue) {
        if (e < 0 || e >= static_cast<int>(h.edges.size())) throw std::invalid_argument("walk: bad edge index");
        u[static_cast<std::size_t>(e)] += 1;
    }
    for (int e : red) {
        if (e < 0 || e >= static_cast<int>(h.edges.size())) throw std::invalid_argument("walk: bad edge index");
        u[static_cast<std::size_t>(e)] -= 1;
    }
    return u;
}

bool is_primitive_walk(const Hypergraph& h, const std::vector<int>& blue, const std::vector<int>& red,
                       const Budget& budget) {
    IVec u = kernel_vector_from_walk(h, blue, red);
    IntegerMatrix M = incidence_matrix(h);
    if (!is_zero_vec(M.mul(u))) return false;  // not even a monomial walk
    BasisSet gr = graver(M, budget);
    return gr.contains(sign_canonical(u));
}

std::string sunflower_flavor_name(SunflowerFlavor f) {
    switch (f) {
        case SunflowerFlavor::Plain: return "plain";
        case SunflowerFlavor::MatchedPetal: return "matched-petal";
        case SunflowerFlavor::PartitionedCore: return "partitioned-core";
        case SunflowerFlavor::RelaxedCore: return "relaxed-core";
    }
    return "?";
}

namespace {

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_and(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Given the set of matching edges, check the full structure and build it.
std::optional<SunflowerStructure> assemble(const Hypergraph& h, const std::vector<char>& is_matching) {
    const int n = static_cast<int>(h.edges.size());
    std::vector<int> matched;  // vertices covered by the matching
    for (int j = 0; j < n; ++j)
        if (is_matching[static_cast<std::size_t>(j)])
            for (int v : h.edges[static_cast<std::size_t>(j)]) matched.push_back(v);
    std::sort(matched.begin(), matched.end());
    // matching edges must be pairwise disjoint (checked by the caller's
    // pruning, but recheck when called directly)
    for (std::size_t t = 1; t < matched.size(); ++t)
        if (matched[t] == matched[t - 1]) return std::nullopt;
    // group petals by core = petal minus matched vertices
    std::map<std::vector<int>, std::vector<int>> groups;  // core -> petal edge indices
    std::vector<int> petal_noncore_union;
    for (int j = 0; j < n; ++j) {
        if (is_matching[static_cast<std::size_t>(j)]) continue;
        const auto& P = h.edges[static_cast<std::size_t>(j)];
        std::vector<int> core = set_minus(P, matched);
        if (core == P) return std::nullopt;  // C must be a proper subset of every petal
        groups[core].push_back(j);
        std::vector<int> nc = set_and(P, matched);
        petal_noncore_union.insert(petal_noncore_union.end(), nc.begin(), nc.end());
    }
    std::sort(petal_noncore_union.begin(), petal_noncore_union.end());
    petal_noncore_union.erase(std::unique(petal_noncore_union.begin(), petal_noncore_union.end()),
                              petal_noncore_union.end());
    if (petal_noncore_union != matched) return std::nullopt;  // matching covers exactly the non-core vertices
    if (groups.empty()) return std::nullopt;
    // within a sunflower, every pair of petals meets exactly in the core
    for (const auto& [core, petals] : groups)
        for (std::size_t a = 0; a < petals.size(); ++a)
            for (std::size_t b = a + 1; b < petals.size(); ++b)
                if (set_and(h.edges[static_cast<std::size_t>(petals[a])], h.edges[static_cast<std::size_t>(petals[b])]) != core)
                    return std::nullopt;
    // distinct sunflowers may intersect only at their cores
    std::vector<std::pair<std::vector<int>, std::vector<int>>> flat;  // (core, vertex set)
    for (const auto& [core, petals] : groups) {
        std::vector<int> verts;
        for (int p : petals)
            for (int v : h.edges[static_cast<std::size_t>(p)]) verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        flat.emplace_back(core, verts);
    }
    for (std::size_t a = 0; a < flat.size(); ++a)
        for (std::size_t b = a + 1; b < flat.size(); ++b) {
            std::vector<int> common = set_and(flat[a].second, flat[b].second);
            std::vector<int> cores = set_and(flat[a].first, flat[b].first);
            if (common != cores) return std::nullopt;
        }
    SunflowerStructure s;
    for (const auto& [core, petals] : groups) s.sunflowers.push_back({core, petals});
    // keep sunflowers ordered by their first petal
    std::sort(s.sunflowers.begin(), s.sunflowers.end(),
              [](const Sunflower& x, const Sunflower& y) { return x.petals.front() < y.petals.front(); });
    for (int j = 0; j < n; ++j)
        if (is_matching[static_cast<std::size_t>(j)]) s.matching.push_back(j);
    bool disjoint = true;
    for (std::size_t a = 0; a < flat.size() && disjoint; ++a)
        for (std::size_t b = a + 1; b < flat.size() && disjoint; ++b)
            if (!set_and(flat[a].second, flat[b].second).empty()) disjoint = false;
    if (s.sunflowers.size() == 1) s.flavor = SunflowerFlavor::MatchedPetal;
    else if (disjoint) s.flavor = SunflowerFlavor::PartitionedCore;
    else s.flavor = SunflowerFlavor::RelaxedCore;
    // connectivity of H - C: restricted petals plus matching edges over the
    // matched vertices
    std::vector<int> verts = matched;
    std::map<int, int> parent;
    for (int v : verts) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int j = 0; j < n; ++j) {
        const auto& E = h.edges[static_cast<std::size_t>(j)];
        std::vector<int> inU = set_and(E, matched);
        for (std::size_t t = 1; t < inU.size(); ++t) unite(inU[0], inU[t]);
    }
    std::set<int> roots;
    for (int v : verts) roots.insert(find(v));
    s.connected = roots.size() <= 1;
    return s;
}

}  // namespace

std::optional<SunflowerStructure> recognize_sunflower_structure(const Hypergraph& h) {
    const int n = static_cast<int>(h.edges.size());
    if (n == 0) return std::nullopt;
    // every matched vertex lies in exactly one petal and one matching edge,
    // so only edges all of whose vertices have degree 2 can be matching
    // edges; all other edges are forced petals, which keeps the search small
    std::vector<int> deg(static_cast<std::size_t>(h.vertex_count), 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    std::vector<int> cands;
    for (int j = 0; j < n; ++j) {
        bool ok = true;
        for (int v : h.edges[static_cast<std::size_t>(j)])
            if (deg[static_cast<std::size_t>(v)] != 2) { ok = false; break; }
        if (ok) cands.push_back(j);
    }
    // lexicographically first assignment over edge roles, petal < matching
    std::vector<char> is_matching(static_cast<std::size_t>(n), 0);
    std::vector<char> vertex_matched(static_cast<std::size_t>(h.vertex_count), 0);
    std::optional<SunflowerStructure> found;
    std::function<void(std::size_t)> go = [&](std::size_t t) {
        if (found) return;
        if (t == cands.size()) {
            auto s = assemble(h, is_matching);
            if (s) found = std::move(s);
            return;
        }
        int j = cands[t];
        is_matching[static_cast<std::size_t>(j)] = 0;
        go(t + 1);
        if (found) return;
        bool ok = true;
        for (int v : h.edges[static_cast<std::size_t>(j)])
            if (vertex_matched[static_cast<std::size_t>(v)]) { ok = false; break; }
        if (ok) {
            is_matching[static_cast<std::size_t>(j)] = 1;
            for (int v : h.edges[static_cast<std::size_t>(j)]) vertex_matched[static_cast<std::size_t>(v)] = 1;
            go(t + 1);
            is_matching[static_cast<std::size_t>(j)] = 0;
            for (int v : h.edges[static_cast<std::size_t>(j)]) vertex_matched[static_cast<std::size_t>(v)] = 0;
        }
    };
    go(0);
    if (found) return found;
    // fall back to a bare sunflower: all edges pairwise meet in a common
    // proper subset
    if (n >= 2) {
        std::vector<int> core = set_and(h.edges[0], h.edges[1]);
        bool plain = true;
        for (int a = 0; a < n && plain; ++a)
            for (int b = a + 1; b < n && plain; ++b)
                if (set_and(h.edges[static_cast<std::size_t>(a)], h.edges[static_cast<std::size_t>(b)]) != core) plain = false;
        for (int a = 0; a < n && plain; ++a)
            if (core == h.edges[static_cast<std::size_t>(a)]) plain = false;
        if (plain) {
            SunflowerStructure s;
            Sunflower sf;
            sf.core = core;
            for (int j = 0; j < n; ++j) sf.petals.push_back(j);
            s.sunflowers.push_back(std::move(sf));
            s.flavor = SunflowerFlavor::Plain;
            // connectivity of H - C
            std::map<int, int> parent;
            std::vector<int> verts;
            for (int j = 0; j < n; ++j)
                for (int v : set_minus(h.edges[static_cast<std::size_t>(j)], core)) verts.push_back(v);
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            for (int v : verts) parent[v] = v;
            std::function<int(int)> find = [&](int v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            for (int j = 0; j < n; ++j) {
                std::vector<int> rest = set_minus(h.edges[static_cast<std::size_t>(j)], core);
                for (std::size_t t = 1; t < rest.size(); ++t) parent[find(rest[0])] = find(rest[t]);
            }
            std::set<int> roots;
            for (int v : verts) roots.insert(find(v));
            s.connected = roots.size() <= 1;
            return s;
        }
    }
    return std::nullopt;
}

std::pair<IVec, IVec> sunflower_c_vector(const Hypergraph& h, const SunflowerStructure& s) {
    if (!s.connected) throw std::invalid_argument("sunflower_c_vector: structure is not connected");
    if (s.flavor == SunflowerFlavor::Plain)
        throw std::invalid_argument("sunflower_c_vector: a bare sunflower carries no matching");
    IVec c(h.edges.size(), Int(0));
    for (const Sunflower& sf : s.sunflowers)
        for (int p : sf.petals) c[static_cast<std::size_t>(p)] = 1;
    for (int medge : s.matching) c[static_cast<std::size_t>(medge)] = -1;
    IVec a = incidence_matrix(h).mul(c);
    return {c, a};
}

IntegerMatrix core_incidence_matrix(const Hypergraph& h) {
    auto s = recognize_sunflower_structure(h);
    if (!s || s->flavor == SunflowerFlavor::Plain)
        throw std::invalid_argument("core_incidence_matrix: not a matched-petal relaxed-core sunflower");
    // components of H - C over the matched vertices
    std::map<int, int> parent;
    std::vector<int> matched;
    for (int j : s->matching)
        for (int v : h.edges[static_cast<std::size_t>(j)]) matched.push_back(v);
    std::sort(matched.begin(), matched.end());
    for (int v : matched) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<int> core_union;
    for (const Sunflower& sf : s->sunflowers) core_union.insert(core_union.end(), sf.core.begin(), sf.core.end());
    std::sort(core_union.begin(), core_union.end());
    core_union.erase(std::unique(core_union.begin(), core_union.end()), core_union.end());
    auto restricted = [&](int j) { return set_minus(h.edges[static_cast<std::size_t>(j)], core_union); };
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
        std::vector<int> rest = restricted(static_cast<int>(j));
        for (std::size_t t = 1; t < rest.size(); ++t) parent[find(rest[0])] = find(rest[t]);
    }
    // assign petals to components; order components by smallest petal index
    std::map<int, std::vector<int>> comp_petals;  // root -> petal edges
    for (const Sunflower& sf : s->sunflowers)
        for (int p : sf.petals) {
            std::vector<int> rest = restricted(p);
            if (rest.empty()) throw std::logic_error("core_incidence_matrix: petal without non-core vertices");
            comp_petals[find(rest[0])].push_back(p);
        }
    std::vector<std::vector<int>> comps;
    for (auto& [root, petals] : comp_petals) {
        std::sort(petals.begin(), petals.end());
        comps.push_back(petals);
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    IntegerMatrix D(static_cast<int>(core_union.size()), static_cast<int>(comps.size()));
    for (int i = 0; i < D.rows; ++i)
        for (int j = 0; j < D.cols; ++j) {
            Int count = 0;
            for (int p : comps[static_cast<std::size_t>(j)])
                if (std::binary_search(h.edges[static_cast<std::size_t>(p)].begin(), h.edges[static_cast<std::size_t>(p)].end(),
                                       core_union[static_cast<std::size_t>(i)]))
                    count += 1;
            D.at(i, j) = count;
        }
    return D;
}

std::optional<std::vector<int>> two_regular_cover_certificate(const Hypergraph& h) {
    const int n = static_cast<int>(h.edges.size());
    if (n == 0) return std::vector<int>{};
    std::vector<int> deg(static_cast<std::size_t>(h.vertex_count), 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    bool two_regular = h.vertex_count > 0;
    for (int v = 0; v < h.vertex_count; ++v)
        if (deg[static_cast<std::size_t>(v)] != 2) { two_regular = false; break; }
    if (two_regular) {
        std::vector<int> all(static_cast<std::size_t>(h.vertex_count));
        for (int v = 0; v < h.vertex_count; ++v) all[static_cast<std::size_t>(v)] = v;
        return all;
    }
    // hitting set among degree-2 vertices, smallest-index-first backtracking
    std::vector<char> chosen(static_cast<std::size_t>(h.vertex_count), 0);
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    std::function<bool()> go = [&]() {
        int uncovered = -1;
        for (int j = 0; j < n; ++j)
            if (!covered[static_cast<std::size_t>(j)]) { uncovered = j; break; }
        if (uncovered < 0) return true;
        for (int v : h.edges[static_cast<std::size_t>(uncovered)]) {
            if (deg[static_cast<std::size_t>(v)] != 2 || chosen[static_cast<std::size_t>(v)]) continue;
            chosen[static_cast<std::size_t>(v)] = 1;
            std::vector<int> newly;
            for (int j = 0; j < n; ++j)
                if (!covered[static_cast<std::size_t>(j)] &&
                    std::binary_search(h.edges[static_cast<std::size_t>(j)].begin(), h.edges[static_cast<std::size_t>(j)].end(), v)) {
                    covered[static_cast<std::size_t>(j)] = 1;
                    newly.push_back(j);
                }
            if (go()) return true;
            chosen[static_cast<std::size_t>(v)] = 0;
            for (int j : newly) covered[static_cast<std::size_t>(j)] = 0;
        }
        return false;
    };
    if (!go()) return std::nullopt;
    std::vector<int> U;
    for (int v = 0; v < h.vertex_count; ++v)
        if (chosen[static_cast<std::size_t>(v)]) U.push_back(v);
    return U;
}

Hypergraph hypergraph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Hypergraph h;
    if (j.at("vertices").is_number_integer()) {
        h.vertex_count = j.at("vertices").get<int>();
    } else {
        h.vertex_labels = j.at("vertices").get<std::vector<std::string>>();
        h.vertex_count = static_cast<int>(h.vertex_labels.size());
    }
    for (const auto& e : j.at("edges")) {
        std::vector<int> edge;
        for (const auto& v : e) edge.push_back(v.get<int>() - 1);  // 1-based on the wire
        std::sort(edge.begin(), edge.end());
        h.edges.push_back(std::move(edge));
    }
    h.validate();
    return h;
}

std::string hypergraph_to_json(const Hypergraph& h) {
    nlohmann::json j;
    if (h.vertex_labels.empty()) j["vertices"] = h.vertex_count;
    else j["vertices"] = h.vertex_labels;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : h.edges) {
        nlohmann::json edge = nlohmann::json::array();
        for (int v : e) edge.push_back(v + 1);
        edges.push_back(edge);
    }
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open hypergraph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return hypergraph_from_json(ss.str());
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << hypergraph_to_json(h);
}

}  // namespace toric
