#pragma once

#include <optional>
#include <string>

#include "toric/bases.hpp"
#include "toric/bouquet.hpp"

namespace toric {

// Vertex-edge hypergraph. Edges are vertex-index sets stored sorted; the
// edge list is ordered and repeats are allowed (multi-hypergraph) — edge
// order is part of the identity, being the column order of the incidence
// matrix. Vertices that belong to no edge are permitted.
struct Hypergraph {
    int vertex_count = 0;
    std::vector<std::string> vertex_labels;  // empty, or one per vertex
    std::vector<std::vector<int>> edges;     // each sorted ascending, nonempty, 0-based

    void validate() const;
    int degree(int v) const;
};

struct BouquetWithBasis {
    std::vector<int> basis_U;       // vertex set, ascending
    std::vector<int> edge_indices;  // the set E_U, ascending
    IVec c_vector;                  // in Z^n over all edges, supp = edge_indices
    IVec a_vector;                  // in Z^m, the imbalance vector; zero on U
};

enum class SunflowerFlavor { Plain, MatchedPetal, PartitionedCore, RelaxedCore };

std::string sunflower_flavor_name(SunflowerFlavor f);

struct Sunflower {
    std::vector<int> core;    // vertex set, possibly empty
    std::vector<int> petals;  // edge indices
};

struct SunflowerStructure {
    std::vector<Sunflower> sunflowers;
    std::vector<int> matching;  // edge indices, pairwise disjoint, cover exactly the non-core vertices
    SunflowerFlavor flavor = SunflowerFlavor::Plain;
    bool connected = false;  // connectivity of H - C (restricted petals plus matching)
};

IntegerMatrix incidence_matrix(const Hypergraph& h);

// The restriction multiset U_E: nonempty intersections E ∩ U kept with
// multiplicity in original order, re-indexed over U. edge_map records which
// original edges survive.
std::pair<Hypergraph, std::vector<int>> restrict_to(const Hypergraph& h, const std::vector<int>& U);

// Some iff the kernel of the restricted incidence matrix has rank 1 with a
// full-support generator; c sign-normalized, a = sum c_E alpha_E.
std::optional<BouquetWithBasis> is_bouquet_with_basis(const Hypergraph& h, const std::vector<int>& U);

// true iff the given (U, edge set) parts partition E(H) and each part is a
// certified bouquet with basis whose edge set matches.
bool verify_bwb_partition(const Hypergraph& h,
                          const std::vector<std::pair<std::vector<int>, std::vector<int>>>& parts);

// (deg_blue(v) - deg_red(v))_v for edge multisets given as index lists.
IVec imbalance_vector(const Hypergraph& h, const std::vector<int>& blue, const std::vector<int>& red);

// Kernel vector <-> two-colored edge multiset; round-trip identity.
std::pair<std::vector<int>, std::vector<int>> walk_from_kernel_vector(const Hypergraph& h, const IVec& u);
IVec kernel_vector_from_walk(const Hypergraph& h, const std::vector<int>& blue, const std::vector<int>& red);

// A walk is primitive iff its kernel vector is a Graver element.
bool is_primitive_walk(const Hypergraph& h, const std::vector<int>& blue, const std::vector<int>& red,
                       const Budget& budget = Budget());

// Decompose H as sunflowers (pairwise core-only intersections) plus a
// perfect matching on the non-core vertices. Backtracking over edge roles in
// edge order; the lexicographically first valid assignment is reported.
// Falls back to recognizing a bare sunflower (flavor Plain, no matching).
std::optional<SunflowerStructure> recognize_sunflower_structure(const Hypergraph& h);

// c = +1 on petals, -1 on matching edges; a = the induced imbalance vector.
// Requires a connected structure of a matched flavor; agrees with
// is_bouquet_with_basis on the non-core vertices.
std::pair<IVec, IVec> sunflower_c_vector(const Hypergraph& h, const SunflowerStructure& s);

// D = (d_ij): rows = union-of-cores vertices (ascending), columns = connected
// components of H - C (ordered by smallest edge index), d_ij = number of
// petals of component j containing vertex i.
IntegerMatrix core_incidence_matrix(const Hypergraph& h);

// Some U hitting every edge with every vertex of U of degree exactly 2.
std::optional<std::vector<int>> two_regular_cover_certificate(const Hypergraph& h);

// JSON: {"vertices": m or ["labels"...], "edges": [[1-based indices]...]}
Hypergraph hypergraph_from_json(const std::string& text);
std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_file(const Hypergraph& h, const std::string& path);

}  // namespace toric
