#include "toric/encoders.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

namespace {

std::string num(long v) { return std::to_string(v); }

}  // namespace

H3Encoding encode_h3(const IntegerMatrix& A) {
    const int m = A.rows, n = A.cols;
    if (m == 0 || n == 0) throw std::invalid_argument("encode_h3: empty matrix");
    for (int i = 0; i < m; ++i)
        if (is_zero_vec(A.row(i))) throw std::invalid_argument("encode_h3: zero row " + num(i + 1) + " (drop it first)");
    for (int j = 0; j < n; ++j)
        if (is_zero_vec(A.col(j))) throw std::invalid_argument("encode_h3: zero column " + num(j + 1) + " (reduce the ideal first)");
    H3Encoding enc;
    enc.source = A;
    Hypergraph& h = enc.hypergraph;
    for (int i = 0; i < m; ++i) h.vertex_labels.push_back("v" + num(i + 1));
    h.vertex_count = m;
    auto new_vertex = [&](const std::string& label) {
        h.vertex_labels.push_back(label);
        return h.vertex_count++;
    };
    std::vector<std::vector<std::pair<int, Int>>> col_coeffs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        // sunflower vertices per nonzero entry of column j
        struct Block {
            int row = 0;
            long petals = 0;       // |a_ij|
            bool negative = false;
            int core = 0;          // v_i for positive entries, u(ij) otherwise
            std::vector<int> vs;   // v_1(ij), ..., v_{2|a|}(ij)
        };
        std::vector<Block> blocks;
        for (int i = 0; i < m; ++i) {
            const Int& a = A.at(i, j);
            if (a == 0) continue;
            if (!a.fits_slong_p()) throw std::invalid_argument("encode_h3: entry too large");
            Block b;
            b.row = i;
            b.negative = a < 0;
            b.petals = std::labs(a.get_si());
            std::string ij = "(" + num(i + 1) + "," + num(j + 1) + ")";
            b.core = b.negative ? new_vertex("u" + ij) : i;
            for (long k = 1; k <= 2 * b.petals; ++k) b.vs.push_back(new_vertex("v" + num(k) + ij));
            blocks.push_back(std::move(b));
        }
        std::vector<int> part_edges;
        auto add_edge = [&](std::vector<int> e) {
            std::sort(e.begin(), e.end());
            part_edges.push_back(static_cast<int>(h.edges.size()));
            h.edges.push_back(std::move(e));
        };
        std::vector<std::pair<int, Int>>& coeffs = col_coeffs[static_cast<std::size_t>(j)];
        for (const Block& b : blocks) {
            for (long s = 1; s <= b.petals; ++s) {
                add_edge({b.core, b.vs[static_cast<std::size_t>(2 * s - 2)], b.vs[static_cast<std::size_t>(2 * s - 1)]});
                coeffs.emplace_back(part_edges.back(), Int(1));
            }
            if (b.negative) {
                add_edge({b.row, b.core});
                coeffs.emplace_back(part_edges.back(), A.at(b.row, j));  // = -|a_ij|
            }
        }
        // cyclic perfect matching over the non-core vertices: inside each
        // block the pairs {v_2,v_3}, {v_4,v_5}, ..., then the block's last
        // vertex pairs with the first vertex of the next nonzero block
        for (std::size_t t = 0; t < blocks.size(); ++t) {
            const Block& b = blocks[t];
            for (long s = 1; s < b.petals; ++s) {
                add_edge({b.vs[static_cast<std::size_t>(2 * s - 1)], b.vs[static_cast<std::size_t>(2 * s)]});
                coeffs.emplace_back(part_edges.back(), Int(-1));
            }
            const Block& nxt = blocks[(t + 1) % blocks.size()];
            add_edge({b.vs[static_cast<std::size_t>(2 * b.petals - 1)], nxt.vs[0]});
            coeffs.emplace_back(part_edges.back(), Int(-1));
        }
        BouquetWithBasis part;
        part.edge_indices = part_edges;
        for (const Block& b : blocks) {
            if (b.negative) part.basis_U.push_back(b.core);
            for (int v : b.vs) part.basis_U.push_back(v);
        }
        std::sort(part.basis_U.begin(), part.basis_U.end());
        enc.parts.push_back(std::move(part));
    }
    // build full-length c-vectors now the edge count is known
    const int ne = static_cast<int>(h.edges.size());
    enc.map.source_cols = ne;
    enc.map.target_cols = n;
    for (int j = 0; j < n; ++j) {
        IVec c(static_cast<std::size_t>(ne), Int(0));
        for (const auto& [e, cc] : col_coeffs[static_cast<std::size_t>(j)]) c[static_cast<std::size_t>(e)] = cc;
        enc.parts[static_cast<std::size_t>(j)].c_vector = c;
        enc.map.c_vectors.push_back(std::move(c));
    }
    h.validate();
    IntegerMatrix inc = incidence_matrix(h);
    for (int j = 0; j < n; ++j) {
        BouquetWithBasis& part = enc.parts[static_cast<std::size_t>(j)];
        part.a_vector = inc.mul(part.c_vector);
        // the imbalance must be the source column padded with zeros
        for (int i = 0; i < m; ++i)
            if (part.a_vector[static_cast<std::size_t>(i)] != A.at(i, j))
                throw std::logic_error("encode_h3: imbalance mismatch on column " + num(j + 1));
        for (int v = m; v < h.vertex_count; ++v)
            if (part.a_vector[static_cast<std::size_t>(v)] != 0)
                throw std::logic_error("encode_h3: imbalance leaks outside v_1..v_m");
    }
    return enc;
}

StableEncoding encode_stable(const IntegerMatrix& D) {
    const int m = D.rows, n = D.cols;
    if (m == 0 || n == 0) throw std::invalid_argument("encode_stable: empty matrix");
    for (const Int& x : D.entries)
        if (x < 0) throw std::invalid_argument("encode_stable: negative entry");
    StableEncoding enc;
    enc.source = D;
    long delta_total = n;
    for (int i = 0; i < n; ++i) {
        Int mx = 0;
        int jx = -1;
        for (int k = 0; k < m; ++k)
            if (D.at(k, i) > mx) { mx = D.at(k, i); jx = k; }
        if (mx == 0) throw std::invalid_argument("encode_stable: zero column " + num(i + 1));
        if (!mx.fits_sint_p()) throw std::invalid_argument("encode_stable: entry too large");
        enc.delta.push_back(mx);
        enc.j_index.push_back(jx);
        delta_total += mx.get_si();
    }
    enc.total_delta = delta_total;
    std::vector<char> carries(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i) carries[static_cast<std::size_t>(enc.j_index[static_cast<std::size_t>(i)])] = 1;
    int distinct = 0;
    for (char c : carries) distinct += c;
    enc.extra_rows = m - distinct;
    std::vector<int> width(static_cast<std::size_t>(n));
    std::vector<int> offset(static_cast<std::size_t>(n));
    int off = 0;
    for (int i = 0; i < n; ++i) {
        width[static_cast<std::size_t>(i)] = static_cast<int>(enc.delta[static_cast<std::size_t>(i)].get_si()) + 1;
        offset[static_cast<std::size_t>(i)] = off;
        off += width[static_cast<std::size_t>(i)];
        enc.blocks.emplace_back(offset[static_cast<std::size_t>(i)], width[static_cast<std::size_t>(i)]);
    }
    const int total_cols = off;
    std::vector<IVec> rows;
    auto eps_row = [&](const Int& d, int w) {
        IVec r(static_cast<std::size_t>(w), Int(0));
        long dv = d.get_si();
        for (long t = 0; t < dv && t < w; ++t) r[static_cast<std::size_t>(t)] = 1;
        return r;
    };
    for (int k = 0; k < m; ++k) {
        if (carries[static_cast<std::size_t>(k)]) {
            for (int i = 0; i < n; ++i) {
                if (enc.j_index[static_cast<std::size_t>(i)] != k) continue;
                const int wi = width[static_cast<std::size_t>(i)];
                for (int t = 0; t < wi; ++t) {
                    IVec row(static_cast<std::size_t>(total_cols), Int(0));
                    for (int l = 0; l < n; ++l) {
                        if (l == i) {
                            for (int u = 0; u < wi; ++u)
                                row[static_cast<std::size_t>(offset[static_cast<std::size_t>(l)] + u)] = (u == t) ? 0 : 1;
                        } else {
                            IVec e = eps_row(D.at(k, l), width[static_cast<std::size_t>(l)]);
                            for (int u = 0; u < width[static_cast<std::size_t>(l)]; ++u)
                                row[static_cast<std::size_t>(offset[static_cast<std::size_t>(l)] + u)] = e[static_cast<std::size_t>(u)];
                        }
                    }
                    rows.push_back(std::move(row));
                }
            }
        } else {
            IVec row(static_cast<std::size_t>(total_cols), Int(0));
            for (int l = 0; l < n; ++l) {
                IVec e = eps_row(D.at(k, l), width[static_cast<std::size_t>(l)]);
                for (int u = 0; u < width[static_cast<std::size_t>(l)]; ++u)
                    row[static_cast<std::size_t>(offset[static_cast<std::size_t>(l)] + u)] = e[static_cast<std::size_t>(u)];
            }
            rows.push_back(std::move(row));
        }
    }
    enc.matrix = IntegerMatrix::from_rows(rows, total_cols);
    enc.map.source_cols = total_cols;
    enc.map.target_cols = n;
    for (int i = 0; i < n; ++i) {
        IVec c(static_cast<std::size_t>(total_cols), Int(0));
        for (int u = 0; u < width[static_cast<std::size_t>(i)]; ++u)
            c[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + u)] = 1;
        enc.map.c_vectors.push_back(std::move(c));
    }
    return enc;
}

std::pair<Hypergraph, IVec> gadget_hd(int d) {
    if (d < 2) throw std::invalid_argument("gadget_hd: d must be at least 2");
    const int dd = d + 1;
    Hypergraph h;
    h.vertex_count = dd * dd;
    // rows ordered v_11, v_21, ..., v_{d+1,1}, v_12, ..., v_{d+1,d+1}
    auto vid = [&](int i, int j) { return (j - 1) * dd + (i - 1); };
    for (int j = 1; j <= dd; ++j)
        for (int i = 1; i <= dd; ++i) h.vertex_labels.push_back("v(" + num(i) + "," + num(j) + ")");
    // columns E_11, ..., E_1,d+1, E_21, ..., E_{d+1,d+1}, E_1, ..., E_{d+1}
    for (int i = 1; i <= dd; ++i)
        for (int j = 1; j <= dd; ++j) {
            std::vector<int> e;
            for (int k = 1; k <= dd; ++k)
                if (k != j) e.push_back(vid(i, k));
            std::sort(e.begin(), e.end());
            h.edges.push_back(std::move(e));
        }
    for (int j = 1; j <= dd; ++j) {
        std::vector<int> e;
        for (int k = 1; k <= dd; ++k)
            if (k != j) e.push_back(vid(k, 1));
        std::sort(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    h.validate();
    IVec f(h.edges.size(), Int(0));
    for (int i = 1; i <= dd; ++i)
        for (int j = 1; j <= dd; ++j) f[static_cast<std::size_t>((i - 1) * dd + (j - 1))] = (j == 1) ? Int(1 - d) : Int(1);
    for (int j = 1; j <= dd; ++j) f[static_cast<std::size_t>(dd * dd + (j - 1))] = -1;
    return {h, f};
}

std::vector<std::vector<int>> gadget_hd_partition(int d) {
    const int dd = d + 1;
    std::vector<std::vector<int>> parts;
    for (int i = 0; i < dd; ++i) {
        std::vector<int> block;
        for (int j = 0; j < dd; ++j) block.push_back(i * dd + j);
        parts.push_back(std::move(block));
    }
    for (int j = 0; j < dd; ++j) parts.push_back({dd * dd + j});
    return parts;
}

UniversalityGadget universality_gadget(const std::vector<IVec>& d_list) {
    if (d_list.empty()) throw std::invalid_argument("universality_gadget: empty vector list");
    const int r = static_cast<int>(d_list.size());
    std::vector<IVec> cprime;
    for (const IVec& dv : d_list) {
        if (is_zero_vec(dv)) {
            cprime.push_back({Int(1)});  // degenerate convention: c' = (1) when d = 0
            continue;
        }
        IVec c;
        c.push_back(1);
        for (const Int& x : dv) {
            if (x == 0)
                throw std::invalid_argument(
                    "universality_gadget: d-vector with a zero coordinate has no full-support c' = (1, d)");
            c.push_back(x);
        }
        cprime.push_back(std::move(c));
    }
    // complete bipartite K_{2,l} with q = 2l >= r edges; repeat the last c'
    const int ell = std::max(2, (r + 1) / 2);
    const int q = 2 * ell;
    Hypergraph kpl;
    kpl.vertex_count = 2 + ell;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < ell; ++b) kpl.edges.push_back({a, 2 + b});
    UniversalityGadget g;
    g.d_list = d_list;
    g.bipartite = incidence_matrix(kpl);
    std::vector<IVec> a_list;
    for (int j = 0; j < q; ++j) a_list.push_back(g.bipartite.col(j));
    std::vector<IVec> c_list;
    for (int j = 0; j < q; ++j) c_list.push_back(cprime[static_cast<std::size_t>(std::min(j, r - 1))]);
    auto [A, dec] = generalized_lawrence(a_list, c_list);
    int col = 0;
    for (const Bouquet& b : dec.bouquets) {
        g.lawrence_blocks.emplace_back(col, static_cast<int>(b.column_indices.size()));
        col += static_cast<int>(b.column_indices.size());
    }
    // the paper's pre-reduction: drop zero rows before encoding (none arise
    // from bipartite incidence columns, but the guard keeps the op total)
    std::vector<IVec> kept;
    for (int i = 0; i < A.rows; ++i)
        if (!is_zero_vec(A.row(i))) kept.push_back(A.row(i));
    g.lawrence = IntegerMatrix::from_rows(kept, A.cols);
    g.encoding = encode_h3(g.lawrence);
    return g;
}

bool universality_verify(const UniversalityGadget& g, const Budget& budget, std::string* message) {
    IntegerMatrix inc = incidence_matrix(g.encoding.hypergraph);
    MarkovResult mk = minimal_markov(inc, budget);
    std::vector<IVec> patterns;
    for (const IVec& dv : g.d_list) {
        IVec c;
        c.push_back(1);
        if (!is_zero_vec(dv))
            for (const Int& x : dv) c.push_back(x);
        patterns.push_back(std::move(c));
    }
    auto contains_block = [](const IVec& u, const IVec& p) {
        if (p.size() > u.size()) return false;
        for (std::size_t off = 0; off + p.size() <= u.size(); ++off) {
            bool plus = true, minus = true;
            for (std::size_t t = 0; t < p.size(); ++t) {
                if (u[off + t] != p[t]) plus = false;
                if (u[off + t] != -p[t]) minus = false;
            }
            if (plus || minus) return true;
        }
        return false;
    };
    for (const IVec& move : mk.basis.vectors) {
        IVec u = b_map_inverse(g.encoding.map, move);
        bool hit = false;
        for (const IVec& p : patterns)
            if (contains_block(u, p)) { hit = true; break; }
        if (!hit) {
            if (message) *message = "markov element " + vec_to_string(move) + " pulls back to " + vec_to_string(u) +
                                    " containing no +-(1,d_i) block";
            return false;
        }
    }
    return true;
}

}  // namespace toric
