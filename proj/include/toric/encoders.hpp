#pragma once

#include "toric/hypergraph.hpp"

namespace toric {

// Almost-3-uniform hypergraph encoding of an arbitrary matrix with no zero
// row or column. Each nonzero entry becomes a sunflower (positive entries:
// 3-edges through the shared vertex v_i; negative entries: 3-edges through a
// new core u(ij) plus the 2-edge {v_i, u(ij)}); each column becomes a
// connected matched-petal partitioned-core sunflower with a cyclic matching
// over the nonzero blocks, extended by the 2-edges into a bouquet with
// basis. The kernel of the source and of the hypergraph correspond under
// b_map, restricting to Graver bases and circuits, and the hypergraph ideal
// is strongly robust.
struct H3Encoding {
    IntegerMatrix source;
    Hypergraph hypergraph;
    std::vector<BouquetWithBasis> parts;  // one per source column, in order
    EncodingMap map;
};

// Stable 0/1 encoding of a nonnegative matrix with no zero column: the block
// layout with Sigma_{delta_i+1} on the diagonal and repeated prefix rows
// eps_{d,k} elsewhere. Bouquet i of the result is its delta_i+1 consecutive
// columns with an all-ones c-vector.
struct StableEncoding {
    IntegerMatrix source;
    std::vector<Int> delta;   // per-column maxima
    std::vector<int> j_index; // first row attaining each maximum
    Int total_delta = 0;      // n + sum delta_i
    int extra_rows = 0;       // rows of D carrying no column maximum
    IntegerMatrix matrix;     // (delta + l) x delta, entries in {0,1}
    EncodingMap map;
    std::vector<std::pair<int, int>> blocks;  // (first column, width) per part
};

H3Encoding encode_h3(const IntegerMatrix& A);

StableEncoding encode_stable(const IntegerMatrix& D);

// The hypergraph H_{d+1} on (d+1)^2 vertices and (d+2)(d+1) edges together
// with the kernel vector of the distinguished binomial
// prod_i prod_{j!=1} E_ij - prod_i E_i prod_i E_i1^{d-1}, which is a Graver
// element reached through the bouquet route.
std::pair<Hypergraph, IVec> gadget_hd(int d);

// The canonical subbouquet partition of gadget_hd's incidence columns:
// d+1 blocks of d+1 columns followed by d+1 singletons.
std::vector<std::vector<int>> gadget_hd_partition(int d);

struct UniversalityGadget {
    std::vector<IVec> d_list;
    IntegerMatrix bipartite;   // incidence of the chosen K_{2,l}
    IntegerMatrix lawrence;    // generalized Lawrence matrix
    H3Encoding encoding;       // hypergraph encoding of the Lawrence matrix
    std::vector<std::pair<int, int>> lawrence_blocks;  // (first col, width) per c'_i
};

// Corollary machinery: c'_i = (1, d_i) over the incidence matrix of a
// complete bipartite graph with enough edges (the last vector repeated when
// needed), then generalized Lawrence, then encode_h3. Every element of the
// minimal Markov basis of the result pulls back to a vector containing some
// +-(1, d_i) as a contiguous block.
UniversalityGadget universality_gadget(const std::vector<IVec>& d_list);

// Desk-scale verification of the universality guarantee; returns false with
// a message naming the offending element if the scan fails.
bool universality_verify(const UniversalityGadget& g, const Budget& budget, std::string* message = nullptr);

}  // namespace toric
