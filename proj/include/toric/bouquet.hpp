#pragma once

#include <string>

#include "toric/lattice.hpp"

namespace toric {

enum class BouquetKind { Free, Mixed, NonMixed };

std::string bouquet_kind_name(BouquetKind k);

struct Bouquet {
    std::vector<int> column_indices;  // ascending, 0-based
    BouquetKind kind = BouquetKind::Free;
    IVec c_vector;  // in Z^n, supp = column_indices, first nonzero positive
    IVec a_vector;  // in Z^m, sum_i c_i a_i
};

struct BouquetDecomposition {
    IntegerMatrix source;
    std::vector<Bouquet> bouquets;              // ordered by smallest column index
    bool is_subbouquet_decomposition = false;   // true when parts refine true bouquets
};

// The per-part c-vectors realizing u -> B(u) = sum_i c_i u_i between
// Ker_Z(bouquet matrix) and Ker_Z(source).
struct EncodingMap {
    std::vector<IVec> c_vectors;  // one per part, each in Z^source_cols
    int source_cols = 0;          // n, the big side
    int target_cols = 0;          // s, the number of parts
};

// Connected components of the bouquet graph: columns with zero Gale row form
// the single free bouquet; the rest group by mutual proportionality of Gale
// rows (exact 2x2 minors, no division).
BouquetDecomposition bouquet_graph(const IntegerMatrix& M);

// c and a vectors of one (sub)bouquet. For a free part c is the 0/1
// indicator; for a non-free part c_i = eps * G(a_i)_j / g_j with j the
// smallest coordinate nonzero on the part's Gale rows, i0 the smallest
// column of the part and eps the sign of G(a_{i0})_j. force_j (tests only)
// overrides the choice of j; the result is provably independent of it.
std::pair<IVec, IVec> bouquet_vectors(const IntegerMatrix& M, const std::vector<int>& part, int force_j = -1);

std::pair<IntegerMatrix, EncodingMap> bouquet_matrix(const IntegerMatrix& M, const BouquetDecomposition& dec);

IVec b_map(const EncodingMap& map, const IVec& u);

// Inverse of b_map on its image; throws if v is not in the image.
IVec b_map_inverse(const EncodingMap& map, const IVec& v);

// true iff the parts cover all columns disjointly and each part has
// pairwise mutually-proportional Gale rows (all zero, or all nonzero and
// proportional).
bool subbouquet_verify(const IntegerMatrix& M, const std::vector<std::vector<int>>& partition);

bool is_stable(const IntegerMatrix& M);        // every non-free bouquet non-mixed
bool all_nonfree_mixed(const IntegerMatrix& M);  // every non-free bouquet mixed

// Inverse construction: a matrix whose i-th subbouquet is encoded by
// c_{B_i} = c_i embedded in block i and a_{B_i} = (a_i, 0, ..., 0). Block i's
// top rows are lambda_j * a_i with lambda.c_i = 1 (extended gcd); its
// constraint rows are a canonical basis of the lattice orthogonal to c_i,
// which pins Ker of the block to Z*c_i.
std::pair<IntegerMatrix, BouquetDecomposition> generalized_lawrence(const std::vector<IVec>& a_list,
                                                                    const std::vector<IVec>& c_list);

// Structured report: human-readable key-value text; JSON alongside via the
// CLI. Bit-stable given the canonicalizations above.
std::string decomposition_report(const BouquetDecomposition& dec);

}  // namespace toric
