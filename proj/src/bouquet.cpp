#include "toric/bouquet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

std::string bouquet_kind_name(BouquetKind k) {
    switch (k) {
        case BouquetKind::Free: return "free";
        case BouquetKind::Mixed: return "mixed";
        case BouquetKind::NonMixed: return "non-mixed";
    }
    return "?";
}

namespace {

bool rows_proportional(const IntegerMatrix& G, int i, int j) {
    for (int p = 0; p < G.cols; ++p)
        for (int q = p + 1; q < G.cols; ++q)
            if (G.at(i, p) * G.at(j, q) != G.at(i, q) * G.at(j, p)) return false;
    return true;
}

bool row_zero(const IntegerMatrix& G, int i) {
    for (int j = 0; j < G.cols; ++j)
        if (G.at(i, j) != 0) return false;
    return true;
}

BouquetKind classify_from_c(const IVec& c, bool free_part) {
    if (free_part) return BouquetKind::Free;
    bool pos = false, neg = false;
    for (const Int& x : c) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    return (pos && neg) ? BouquetKind::Mixed : BouquetKind::NonMixed;
}

std::pair<IVec, IVec> vectors_from_gale(const IntegerMatrix& M, const IntegerMatrix& G,
                                        const std::vector<int>& part, int force_j) {
    const int n = M.cols;
    bool all_zero = true, all_nonzero = true;
    for (int i : part) (row_zero(G, i) ? all_nonzero : all_zero) = false;
    if (!all_zero && !all_nonzero)
        throw std::invalid_argument("bouquet_vectors: part mixes free and non-free columns");
    for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = a + 1; b < part.size(); ++b)
            if (!rows_proportional(G, part[a], part[b]))
                throw std::invalid_argument("bouquet_vectors: Gale rows of the part are not pairwise proportional");
    IVec c(static_cast<std::size_t>(n), Int(0));
    if (all_zero) {
        // free part: the all-ones indicator is the fixed admissible choice
        for (int i : part) c[static_cast<std::size_t>(i)] = 1;
    } else {
        int j = force_j;
        if (j < 0) {
            for (int cand = 0; cand < G.cols && j < 0; ++cand) {
                bool all_nz = true;
                for (int i : part)
                    if (G.at(i, cand) == 0) { all_nz = false; break; }
                if (all_nz) j = cand;
            }
        } else {
            for (int i : part)
                if (G.at(i, j) == 0) throw std::invalid_argument("bouquet_vectors: forced coordinate vanishes on the part");
        }
        if (j < 0) throw std::logic_error("bouquet_vectors: no common nonzero Gale coordinate");
        Int g = 0;
        for (int i : part) g = gcd_int(g, G.at(i, j));
        const int i0 = *std::min_element(part.begin(), part.end());
        const int eps = sgn(G.at(i0, j));
        for (int i : part) {
            Int val = divexact(G.at(i, j), g);
            c[static_cast<std::size_t>(i)] = eps > 0 ? val : Int(-val);
        }
    }
    IVec a(static_cast<std::size_t>(M.rows), Int(0));
    for (int i : part)
        for (int r = 0; r < M.rows; ++r) a[static_cast<std::size_t>(r)] += c[static_cast<std::size_t>(i)] * M.at(r, i);
    return {c, a};
}

}  // namespace

BouquetDecomposition bouquet_graph(const IntegerMatrix& M) {
    const int n = M.cols;
    IntegerMatrix G = gale_transform(M);
    std::vector<int> free_cols;
    std::vector<int> group(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        if (row_zero(G, i)) { free_cols.push_back(i); continue; }
        bool placed = false;
        for (std::size_t t = 0; t < groups.size() && !placed; ++t)
            if (rows_proportional(G, groups[t].front(), i)) {
                groups[t].push_back(i);
                placed = true;
            }
        if (!placed) groups.push_back({i});
        (void)group;
    }
    std::vector<std::vector<int>> parts = groups;
    if (!free_cols.empty()) parts.push_back(free_cols);  // the free vectors form one bouquet
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    BouquetDecomposition dec;
    dec.source = M;
    dec.is_subbouquet_decomposition = false;
    for (const auto& part : parts) {
        Bouquet b;
        b.column_indices = part;
        bool free_part = row_zero(G, part.front());
        auto [c, a] = vectors_from_gale(M, G, part, -1);
        b.c_vector = std::move(c);
        b.a_vector = std::move(a);
        b.kind = classify_from_c(b.c_vector, free_part);
        dec.bouquets.push_back(std::move(b));
    }
    return dec;
}

std::pair<IVec, IVec> bouquet_vectors(const IntegerMatrix& M, const std::vector<int>& part, int force_j) {
    if (part.empty()) throw std::invalid_argument("bouquet_vectors: empty part");
    for (int i : part)
        if (i < 0 || i >= M.cols) throw std::invalid_argument("bouquet_vectors: column index out of range");
    IntegerMatrix G = gale_transform(M);
    return vectors_from_gale(M, G, part, force_j);
}

std::pair<IntegerMatrix, EncodingMap> bouquet_matrix(const IntegerMatrix& M, const BouquetDecomposition& dec) {
    std::vector<IVec> cols, cs;
    for (const Bouquet& b : dec.bouquets) {
        cols.push_back(b.a_vector);
        cs.push_back(b.c_vector);
    }
    EncodingMap map;
    map.c_vectors = std::move(cs);
    map.source_cols = M.cols;
    map.target_cols = static_cast<int>(dec.bouquets.size());
    return {IntegerMatrix::from_cols(cols, M.rows), map};
}

IVec b_map(const EncodingMap& map, const IVec& u) {
    if (static_cast<int>(u.size()) != map.target_cols) throw std::invalid_argument("b_map: length mismatch");
    IVec v(static_cast<std::size_t>(map.source_cols), Int(0));
    for (int i = 0; i < map.target_cols; ++i)
        for (int j = 0; j < map.source_cols; ++j)
            v[static_cast<std::size_t>(j)] += map.c_vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(i)];
    return v;
}

IVec b_map_inverse(const EncodingMap& map, const IVec& v) {
    if (static_cast<int>(v.size()) != map.source_cols) throw std::invalid_argument("b_map_inverse: length mismatch");
    IVec u(static_cast<std::size_t>(map.target_cols), Int(0));
    for (int i = 0; i < map.target_cols; ++i) {
        const IVec& c = map.c_vectors[static_cast<std::size_t>(i)];
        int at = first_nonzero(c);
        if (at < 0) throw std::invalid_argument("b_map_inverse: empty c-vector");
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[static_cast<std::size_t>(at)].get_mpz_t(), c[static_cast<std::size_t>(at)].get_mpz_t());
        if (r != 0) throw std::invalid_argument("b_map_inverse: coordinate ratio is not integral; v is not in the image");
        u[static_cast<std::size_t>(i)] = q;
    }
    if (b_map(map, u) != v)
        throw std::invalid_argument("b_map_inverse: v is not in the image of the encoding map");
    return u;
}

bool subbouquet_verify(const IntegerMatrix& M, const std::vector<std::vector<int>>& partition) {
    std::vector<char> seen(static_cast<std::size_t>(M.cols), 0);
    for (const auto& part : partition) {
        if (part.empty()) return false;
        for (int i : part) {
            if (i < 0 || i >= M.cols) return false;
            if (seen[static_cast<std::size_t>(i)]) return false;
            seen[static_cast<std::size_t>(i)] = 1;
        }
    }
    for (char s : seen)
        if (!s) return false;
    IntegerMatrix G = gale_transform(M);
    for (const auto& part : partition) {
        bool all_zero = true, all_nonzero = true;
        for (int i : part) (row_zero(G, i) ? all_nonzero : all_zero) = false;
        if (!all_zero && !all_nonzero) return false;
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (!rows_proportional(G, part[a], part[b])) return false;
    }
    return true;
}

namespace {
bool row_zero_free(const IntegerMatrix& G, int i) { return row_zero(G, i); }
}  // namespace

bool is_stable(const IntegerMatrix& M) {
    BouquetDecomposition dec = bouquet_graph(M);
    for (const Bouquet& b : dec.bouquets)
        if (b.kind == BouquetKind::Mixed) return false;
    return true;
}

bool all_nonfree_mixed(const IntegerMatrix& M) {
    BouquetDecomposition dec = bouquet_graph(M);
    for (const Bouquet& b : dec.bouquets)
        if (b.kind == BouquetKind::NonMixed) return false;
    return true;
}

std::pair<IntegerMatrix, BouquetDecomposition> generalized_lawrence(const std::vector<IVec>& a_list,
                                                                    const std::vector<IVec>& c_list) {
    if (a_list.size() != c_list.size() || a_list.empty())
        throw std::invalid_argument("generalized_lawrence: need equally many a and c vectors");
    const int s = static_cast<int>(a_list.size());
    const int m = static_cast<int>(a_list[0].size());
    for (const IVec& a : a_list)
        if (static_cast<int>(a.size()) != m) throw std::invalid_argument("generalized_lawrence: a-vector dimensions differ");
    std::vector<int> block_size(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        const IVec& c = c_list[static_cast<std::size_t>(i)];
        if (c.empty()) throw std::invalid_argument("generalized_lawrence: empty c-vector");
        for (const Int& x : c)
            if (x == 0) throw std::invalid_argument("generalized_lawrence: c-vector must have full support");
        if (c[0] <= 0) throw std::invalid_argument("generalized_lawrence: c-vector must have positive first coordinate");
        if (gcd_vec(c) != 1) throw std::invalid_argument("generalized_lawrence: c-vector must be primitive");
        block_size[static_cast<std::size_t>(i)] = static_cast<int>(c.size());
    }
    int total_cols = 0, constraint_rows = 0;
    for (int i = 0; i < s; ++i) {
        total_cols += block_size[static_cast<std::size_t>(i)];
        constraint_rows += block_size[static_cast<std::size_t>(i)] - 1;
    }
    IntegerMatrix A(m + constraint_rows, total_cols);
    int col0 = 0, row0 = m;
    std::vector<std::pair<int, int>> block_span;
    for (int i = 0; i < s; ++i) {
        const IVec& c = c_list[static_cast<std::size_t>(i)];
        const int mi = block_size[static_cast<std::size_t>(i)];
        // lambda with lambda.c = 1 via iterated extended gcd
        IVec lambda(static_cast<std::size_t>(mi), Int(0));
        Int g = c[0];
        lambda[0] = 1;
        for (int j = 1; j < mi; ++j) {
            Int p, q;
            Int g2 = xgcd(g, c[static_cast<std::size_t>(j)], p, q);
            for (int t = 0; t < j; ++t) lambda[static_cast<std::size_t>(t)] *= p;
            lambda[static_cast<std::size_t>(j)] = q;
            g = g2;
        }
        // top rows: column j of block i is lambda_j * a_i
        for (int j = 0; j < mi; ++j)
            for (int r = 0; r < m; ++r)
                A.at(r, col0 + j) = lambda[static_cast<std::size_t>(j)] * a_list[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
        // constraint rows: canonical basis of the lattice orthogonal to c
        IntegerMatrix crow(1, mi);
        for (int j = 0; j < mi; ++j) crow.at(0, j) = c[static_cast<std::size_t>(j)];
        LatticeBasis ortho = kernel_lattice_basis(crow);
        for (std::size_t t = 0; t < ortho.vectors.size(); ++t)
            for (int j = 0; j < mi; ++j)
                A.at(row0 + static_cast<int>(t), col0 + j) = ortho.vectors[t][static_cast<std::size_t>(j)];
        block_span.emplace_back(col0, mi);
        col0 += mi;
        row0 += mi - 1;
    }
    // expected subbouquet decomposition, classified against the small matrix
    IntegerMatrix S = IntegerMatrix::from_cols(a_list, m);
    IntegerMatrix GS = gale_transform(S);
    BouquetDecomposition dec;
    dec.source = A;
    dec.is_subbouquet_decomposition = true;
    for (int i = 0; i < s; ++i) {
        Bouquet b;
        auto [c0, mi] = block_span[static_cast<std::size_t>(i)];
        for (int j = 0; j < mi; ++j) b.column_indices.push_back(c0 + j);
        b.c_vector.assign(static_cast<std::size_t>(total_cols), Int(0));
        for (int j = 0; j < mi; ++j) b.c_vector[static_cast<std::size_t>(c0 + j)] = c_list[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        b.a_vector.assign(static_cast<std::size_t>(A.rows), Int(0));
        for (int r = 0; r < m; ++r) b.a_vector[static_cast<std::size_t>(r)] = a_list[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
        b.kind = classify_from_c(b.c_vector, row_zero_free(GS, i));
        dec.bouquets.push_back(std::move(b));
    }
    return {A, dec};
}

std::string decomposition_report(const BouquetDecomposition& dec) {
    std::ostringstream out;
    out << "columns: " << dec.source.cols << "\n";
    out << "parts: " << dec.bouquets.size() << "\n";
    out << "subbouquet-decomposition: " << (dec.is_subbouquet_decomposition ? "yes" : "no") << "\n";
    for (std::size_t t = 0; t < dec.bouquets.size(); ++t) {
        const Bouquet& b = dec.bouquets[t];
        out << "part " << t + 1 << ": columns=";
        for (std::size_t i = 0; i < b.column_indices.size(); ++i) {
            if (i) out << ",";
            out << b.column_indices[i] + 1;
        }
        out << " kind=" << bouquet_kind_name(b.kind);
        out << " c=" << vec_to_string(b.c_vector);
        out << " a=" << vec_to_string(b.a_vector) << "\n";
    }
    return out.str();
}

}  // namespace toric
