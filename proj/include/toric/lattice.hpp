#pragma once

#include <optional>
#include <utility>

#include "toric/matrix.hpp"

namespace toric {

// Basis of a sublattice of Z^ambient_dim. Vectors are linearly independent
// over Q; bases produced by kernel_lattice_basis span a saturated lattice
// (the lattice equals its saturation) and are in row-HNF form, so they are
// deterministic for a given input matrix.
struct LatticeBasis {
    int ambient_dim = 0;
    std::vector<IVec> vectors;
};

// Column-style Hermite normal form: returns (H, U) with M*U = H, U unimodular.
// Convention (fixed so golden files are bit-stable): nonzero columns first,
// pivot rows strictly increasing top-down, pivots positive, entries above a
// pivot zero, entries to the left of a pivot (in its row) reduced into
// [0, pivot). Total: works for any shape including empty matrices.
std::pair<IntegerMatrix, IntegerMatrix> hnf(const IntegerMatrix& M);

// Row-style HNF (the transpose convention); H = U*M. Used to canonicalize
// row-generated lattices.
std::pair<IntegerMatrix, IntegerMatrix> row_hnf(const IntegerMatrix& M);

int rank(const IntegerMatrix& M);

// Canonical row-HNF basis of the row lattice spanned by the given vectors
// (zero rows dropped). Two generating sets span the same lattice iff their
// canonical forms are identical matrices.
IntegerMatrix lattice_canonical_form(const std::vector<IVec>& gens, int ambient_dim);

// Basis of Ker_Z(M) = {u in Z^n : Mu = 0}, saturated, canonicalized by
// row-HNF; size = n - rank(M).
LatticeBasis kernel_lattice_basis(const IntegerMatrix& M);

// Test hook: kernel basis computed after permuting the rows of M. Spans the
// same lattice, generally differs as a list; used to exercise the
// basis-invariance properties.
LatticeBasis kernel_lattice_basis_row_permuted(const IntegerMatrix& M, const std::vector<int>& row_order);

// Gale transform: the n x (n-r) matrix whose columns are the kernel basis
// vectors; row i is G(a_i). Basis-dependent; downstream consumers use only
// zero/proportionality relations between rows, which are basis-invariant.
IntegerMatrix gale_transform(const IntegerMatrix& M);
IntegerMatrix gale_from_kernel(const LatticeBasis& K);

// True iff the two integer spans coincide (canonical HNFs compared).
bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);

// Membership of v in the integer span of the basis.
bool lattice_contains(const LatticeBasis& basis, const IVec& v);

// True iff Ker_Z(M) meets N^n only in 0. Equivalently (Stiemke/Gordan, exact
// rational Fourier-Motzkin): there is a rational w with w.a_i > 0 for every
// column. Decided on the kernel cone, which is exact for every input; the
// nonnegative-matrix fast path is just a shortcut.
bool is_positively_graded(const IntegerMatrix& M);

// A strictly positive integer grading: w with w.a_i >= 1 for all columns i,
// when one exists (iff positively graded and every column nonzero... a zero
// column never admits one). Used to order degrees and bound fibers.
std::optional<IVec> grading_vector(const IntegerMatrix& M);

// Exact rational Fourier-Motzkin feasibility for systems sum_j c_ij x_j >= c_i0.
// Rows are given as (c_1,...,c_k | rhs). Returns a rational solution when
// feasible. Desk-scale tool, exposed for tests.
std::optional<std::vector<Rat>> fourier_motzkin_feasible(const std::vector<std::vector<Rat>>& lhs_rhs, int nvars);

}  // namespace toric
