#include "toric/lattice.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

void negate_col(IntegerMatrix& M, int j) {
    for (int i = 0; i < M.rows; ++i) M.at(i, j) = -M.at(i, j);
}

// col_j += q * col_k
void addmul_col(IntegerMatrix& M, int j, int k, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < M.rows; ++i) M.at(i, j) += q * M.at(i, k);
}

}  // namespace

std::pair<IntegerMatrix, IntegerMatrix> hnf(const IntegerMatrix& M) {
    const int m = M.rows, n = M.cols;
    IntegerMatrix H = M;
    IntegerMatrix U = IntegerMatrix::identity(n);
    int r = 0;  // next pivot column
    for (int i = 0; i < m && r < n; ++i) {
        // make H[i][r..n) = (g, 0, ..., 0) by unimodular column ops
        int piv = -1;
        for (int j = r; j < n; ++j)
            if (H.at(i, j) != 0) { piv = j; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int t = 0; t < m; ++t) std::swap(H.entries[static_cast<std::size_t>(t) * n + r], H.entries[static_cast<std::size_t>(t) * n + piv]);
            for (int t = 0; t < n; ++t) std::swap(U.entries[static_cast<std::size_t>(t) * n + r], U.entries[static_cast<std::size_t>(t) * n + piv]);
        }
        for (int j = r + 1; j < n; ++j) {
            if (H.at(i, j) == 0) continue;
            Int p, q;
            Int a = H.at(i, r), b = H.at(i, j);
            Int g = xgcd(a, b, p, q);
            Int ag = divexact(a, g), bg = divexact(b, g);
            // (col_r, col_j) <- (p*col_r + q*col_j, ag*col_j - bg*col_r)
            for (int t = 0; t < m; ++t) {
                Int hr = H.at(t, r), hj = H.at(t, j);
                H.at(t, r) = p * hr + q * hj;
                H.at(t, j) = ag * hj - bg * hr;
            }
            for (int t = 0; t < n; ++t) {
                Int ur = U.at(t, r), uj = U.at(t, j);
                U.at(t, r) = p * ur + q * uj;
                U.at(t, j) = ag * uj - bg * ur;
            }
        }
        if (H.at(i, r) < 0) { negate_col(H, r); negate_col(U, r); }
        // reduce earlier columns at this pivot row into [0, pivot)
        for (int j = 0; j < r; ++j) {
            Int q = fdiv(H.at(i, j), H.at(i, r));
            if (q != 0) { addmul_col(H, j, r, -q); addmul_col(U, j, r, -q); }
        }
        ++r;
    }
    return {H, U};
}

std::pair<IntegerMatrix, IntegerMatrix> row_hnf(const IntegerMatrix& M) {
    auto [H, U] = hnf(M.transpose());
    return {H.transpose(), U.transpose()};
}

int rank(const IntegerMatrix& M) {
    auto [H, U] = hnf(M);
    (void)U;
    int r = 0;
    for (int j = 0; j < H.cols; ++j) {
        bool nz = false;
        for (int i = 0; i < H.rows; ++i)
            if (H.at(i, j) != 0) { nz = true; break; }
        if (nz) ++r;
    }
    return r;
}

IntegerMatrix lattice_canonical_form(const std::vector<IVec>& gens, int ambient_dim) {
    IntegerMatrix G = IntegerMatrix::from_rows(gens, ambient_dim);
    auto [H, U] = row_hnf(G);
    (void)U;
    std::vector<IVec> nonzero;
    for (int i = 0; i < H.rows; ++i) {
        IVec r = H.row(i);
        if (!is_zero_vec(r)) nonzero.push_back(std::move(r));
    }
    return IntegerMatrix::from_rows(nonzero, ambient_dim);
}

namespace {

LatticeBasis kernel_from_hnf(const IntegerMatrix& M) {
    auto [H, U] = hnf(M);
    int r = 0;
    for (int j = 0; j < H.cols; ++j) {
        bool nz = false;
        for (int i = 0; i < H.rows; ++i)
            if (H.at(i, j) != 0) { nz = true; break; }
        if (nz) ++r;
    }
    std::vector<IVec> gens;
    for (int j = r; j < M.cols; ++j) gens.push_back(U.col(j));
    IntegerMatrix canon = lattice_canonical_form(gens, M.cols);
    LatticeBasis K;
    K.ambient_dim = M.cols;
    for (int i = 0; i < canon.rows; ++i) K.vectors.push_back(canon.row(i));
    return K;
}

}  // namespace

LatticeBasis kernel_lattice_basis(const IntegerMatrix& M) { return kernel_from_hnf(M); }

LatticeBasis kernel_lattice_basis_row_permuted(const IntegerMatrix& M, const std::vector<int>& row_order) {
    IntegerMatrix P(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) P.at(i, j) = M.at(row_order[static_cast<std::size_t>(i)], j);
    // skip the final row-HNF canonicalization so the basis genuinely varies
    auto [H, U] = hnf(P);
    int r = 0;
    for (int j = 0; j < H.cols; ++j) {
        bool nz = false;
        for (int i = 0; i < H.rows; ++i)
            if (H.at(i, j) != 0) { nz = true; break; }
        if (nz) ++r;
    }
    LatticeBasis K;
    K.ambient_dim = M.cols;
    for (int j = r; j < M.cols; ++j) K.vectors.push_back(U.col(j));
    return K;
}

IntegerMatrix gale_from_kernel(const LatticeBasis& K) {
    IntegerMatrix G(K.ambient_dim, static_cast<int>(K.vectors.size()));
    for (int j = 0; j < G.cols; ++j)
        for (int i = 0; i < G.rows; ++i) G.at(i, j) = K.vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return G;
}

IntegerMatrix gale_transform(const IntegerMatrix& M) { return gale_from_kernel(kernel_lattice_basis(M)); }

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("lattice_equal: ambient dimension mismatch");
    return lattice_canonical_form(a.vectors, a.ambient_dim) == lattice_canonical_form(b.vectors, b.ambient_dim);
}

bool lattice_contains(const LatticeBasis& basis, const IVec& v) {
    if (static_cast<int>(v.size()) != basis.ambient_dim) throw std::invalid_argument("lattice_contains: dimension mismatch");
    if (is_zero_vec(v)) return true;
    std::vector<IVec> gens = basis.vectors;
    IntegerMatrix with = lattice_canonical_form(gens, basis.ambient_dim);
    gens.push_back(v);
    IntegerMatrix without = lattice_canonical_form(gens, basis.ambient_dim);
    return with == without;
}

std::optional<std::vector<Rat>> fourier_motzkin_feasible(const std::vector<std::vector<Rat>>& lhs_rhs, int nvars) {
    // rows encode sum_j c_j x_j >= rhs with rhs stored last; variables are
    // eliminated from the highest index down, keeping each pre-elimination
    // system for back-substitution
    std::vector<std::vector<std::vector<Rat>>> levels;
    std::vector<std::vector<Rat>> sys = lhs_rhs;
    for (int k = nvars - 1; k >= 0; --k) {
        levels.push_back(sys);
        std::vector<std::vector<Rat>> next;
        std::vector<const std::vector<Rat>*> pos, neg;
        for (const auto& row : sys) {
            int s = mpq_sgn(row[static_cast<std::size_t>(k)].get_mpq_t());
            if (s > 0) pos.push_back(&row);
            else if (s < 0) neg.push_back(&row);
            else next.push_back(row);
        }
        for (const auto* p : pos)
            for (const auto* q : neg) {
                // normalize both rows so the x_k coefficient is +-1, then add
                std::vector<Rat> row(static_cast<std::size_t>(nvars) + 1);
                Rat cp = (*p)[static_cast<std::size_t>(k)];
                Rat cq = -(*q)[static_cast<std::size_t>(k)];
                for (int j = 0; j <= nvars; ++j)
                    row[static_cast<std::size_t>(j)] = (*p)[static_cast<std::size_t>(j)] / cp + (*q)[static_cast<std::size_t>(j)] / cq;
                row[static_cast<std::size_t>(k)] = 0;
                next.push_back(std::move(row));
            }
        sys = std::move(next);
    }
    for (const auto& row : sys)
        if (row[static_cast<std::size_t>(nvars)] > 0) return std::nullopt;  // 0 >= positive
    // back-substitute in reverse elimination order: var 0 first (it was
    // eliminated last; its level contains vars 0..k only)
    std::vector<Rat> x(static_cast<std::size_t>(nvars), Rat(0));
    for (int k = 0; k < nvars; ++k) {
        const auto& level = levels[static_cast<std::size_t>(nvars - 1 - k)];
        bool has_lo = false, has_hi = false;
        Rat lo = 0, hi = 0;
        for (const auto& row : level) {
            const Rat& c = row[static_cast<std::size_t>(k)];
            int s = mpq_sgn(c.get_mpq_t());
            if (s == 0) continue;
            Rat bound = row[static_cast<std::size_t>(nvars)];
            for (int j = 0; j < k; ++j) bound -= row[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
            bound /= c;
            if (s > 0) {  // x_k >= bound
                if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
            } else {  // x_k <= bound
                if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
            }
        }
        Rat v(0);
        if (has_lo && has_hi) v = (lo + hi) / 2;
        else if (has_lo) v = lo;
        else if (has_hi) v = hi;
        x[static_cast<std::size_t>(k)] = v;
    }
    return x;
}

namespace {

bool has_zero_column(const IntegerMatrix& M) {
    for (int j = 0; j < M.cols; ++j)
        if (is_zero_vec(M.col(j))) return true;
    return false;
}

}  // namespace

bool is_positively_graded(const IntegerMatrix& M) {
    if (M.cols == 0) return true;
    if (has_zero_column(M)) return false;  // a unit vector lies in the kernel
    if (M.is_nonnegative()) return true;   // w = (1,...,1) is a grading
    LatticeBasis K = kernel_lattice_basis(M);
    const int k = static_cast<int>(K.vectors.size());
    if (k == 0) return true;
    // Ker meets N^n nontrivially iff for some i the cone {y : Ky >= 0} has a
    // point with (Ky)_i >= 1 (K's columns = basis vectors, y the coordinates).
    for (int i = 0; i < M.cols; ++i) {
        std::vector<std::vector<Rat>> sys;
        for (int t = 0; t < M.cols; ++t) {
            std::vector<Rat> row(static_cast<std::size_t>(k) + 1, Rat(0));
            for (int j = 0; j < k; ++j) row[static_cast<std::size_t>(j)] = Rat(K.vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]);
            row[static_cast<std::size_t>(k)] = (t == i) ? Rat(1) : Rat(0);
            sys.push_back(std::move(row));
        }
        if (fourier_motzkin_feasible(sys, k)) return false;
    }
    return true;
}

std::optional<IVec> grading_vector(const IntegerMatrix& M) {
    if (has_zero_column(M)) return std::nullopt;
    if (M.is_nonnegative()) {
        IVec w(static_cast<std::size_t>(M.rows), Int(1));
        return w;
    }
    if (!is_positively_graded(M)) return std::nullopt;
    // solve w.a_i >= 1 over the row space: parametrize w by v over a row
    // basis R = T*M (rows of the row-HNF), then w = v*T
    auto [H, U] = row_hnf(M);
    std::vector<int> pivot_rows;
    for (int i = 0; i < H.rows; ++i)
        if (!is_zero_vec(H.row(i))) pivot_rows.push_back(i);
    const int r = static_cast<int>(pivot_rows.size());
    std::vector<std::vector<Rat>> sys;
    for (int j = 0; j < M.cols; ++j) {
        std::vector<Rat> row(static_cast<std::size_t>(r) + 1, Rat(0));
        for (int t = 0; t < r; ++t) row[static_cast<std::size_t>(t)] = Rat(H.at(pivot_rows[static_cast<std::size_t>(t)], j));
        row[static_cast<std::size_t>(r)] = Rat(1);
        sys.push_back(std::move(row));
    }
    auto sol = fourier_motzkin_feasible(sys, r);
    if (!sol) return std::nullopt;
    // w = v * T where T = rows of U picked at the pivot rows
    std::vector<Rat> w(static_cast<std::size_t>(M.rows), Rat(0));
    for (int t = 0; t < r; ++t)
        for (int i = 0; i < M.rows; ++i)
            w[static_cast<std::size_t>(i)] += (*sol)[static_cast<std::size_t>(t)] * Rat(U.at(pivot_rows[static_cast<std::size_t>(t)], i));
    Int denom = 1;
    for (auto& q : w) { q.canonicalize(); denom = denom / gcd_int(denom, q.get_den()) * q.get_den(); }
    IVec wi(static_cast<std::size_t>(M.rows));
    for (int i = 0; i < M.rows; ++i) {
        Rat scaled = w[static_cast<std::size_t>(i)] * Rat(denom);
        scaled.canonicalize();
        wi[static_cast<std::size_t>(i)] = scaled.get_num();
    }
    // exactness check: the scaled w must satisfy w.a_i >= 1
    for (int j = 0; j < M.cols; ++j)
        if (dot(wi, M.col(j)) < 1) throw std::logic_error("grading_vector: certificate check failed");
    return wi;
}

}  // namespace toric
