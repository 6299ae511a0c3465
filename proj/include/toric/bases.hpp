#pragma once

#include <map>
#include <optional>
#include <string>

#include "toric/lattice.hpp"

namespace toric {

enum class BasisKind { Graver, Circuits, Markov, Indispensable, BruteForce };

std::string basis_kind_name(BasisKind k);

// Sign-canonical, deduplicated, lexicographically sorted set of primitive
// kernel vectors with provenance.
struct BasisSet {
    BasisKind kind = BasisKind::Graver;
    IntegerMatrix matrix;
    std::vector<IVec> vectors;

    bool contains(const IVec& v) const;  // expects sign-canonical v
};

// All x in N^n with Mx = b; finite because the matrix is positively graded.
struct Fiber {
    IntegerMatrix matrix;
    IVec degree;
    std::vector<IVec> points;  // lexicographically sorted
};

struct DegreeReport {
    IVec degree;
    long fiber_size = 0;
    int components = 0;
    int moves_added = 0;
};

struct MarkovResult {
    BasisSet basis;
    std::vector<DegreeReport> report;  // in processing order
};

struct RobustnessCertificate {
    bool verdict = false;
    long graver_size = 0;
    long markov_size = 0;
    std::optional<IVec> witness;  // a Graver element missing from the minimal Markov basis
};

// The Graver basis: all conformal-minimal nonzero vectors of Ker_Z(M),
// sign-canonical. Pottier-style completion over a kernel lattice basis;
// candidate sums are processed in rounds in a fixed (1-norm, lex) order, and
// each round's normal forms run as a deterministic parallel map. Throws
// budget_exceeded instead of truncating.
BasisSet graver(const IntegerMatrix& M, const Budget& budget = Budget());

// Classic single-queue sequential completion, kept as an independent
// reference for testing the round-based kernel (the Graver basis is unique,
// so both must agree exactly).
BasisSet graver_reference(const IntegerMatrix& M, const Budget& budget = Budget());

// Test oracle: enumerate every kernel vector with |coordinate| <= bound and
// keep the conformal-minimal ones. Equals graver(M) whenever the true basis
// fits in the box.
BasisSet graver_brute_force(const IntegerMatrix& M, long bound);

// All support-minimal primitive kernel vectors, by enumerating column
// subsets S with rank(M_S) = |S|-1 whose dependence has full support.
BasisSet circuits(const IntegerMatrix& M);

Fiber fiber(const IntegerMatrix& M, const IVec& degree, const Budget& budget = Budget());

enum class TieBreak { LexSmallest, LexLargest };  // LexLargest exists for determinism tests

MarkovResult minimal_markov(const IntegerMatrix& M, const Budget& budget = Budget(),
                            TieBreak tie = TieBreak::LexSmallest);

BasisSet indispensables(const IntegerMatrix& M, const Budget& budget = Budget());

// verdict true iff graver == indispensables; then the unique minimal Markov
// basis is the Graver basis and every reduced Groebner basis squeezes in
// between, so all the distinguished sets coincide.
RobustnessCertificate certify_strongly_robust(const IntegerMatrix& M, const Budget& budget = Budget());

// Greedy constructive conformal decomposition of a kernel vector into
// Graver elements; returns the multiset of summands or nullopt if v is not
// in the kernel.
std::optional<std::vector<IVec>> conformal_decompose(const IntegerMatrix& M, const BasisSet& graver_basis,
                                                     const IVec& v);

// Serialization: matrix text (one vector per row) plus a JSON sidecar
// {kind, size, degrees} where degrees are the total degrees sum(v+).
std::string basis_to_matrix_text(const BasisSet& b);
std::string basis_sidecar_json(const BasisSet& b);

}  // namespace toric
