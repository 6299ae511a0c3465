#include "toric/bases.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <json.hpp>

#include "toric/parallel.hpp"

namespace toric {

std::string basis_kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::Graver: return "graver";
        case BasisKind::Circuits: return "circuits";
        case BasisKind::Markov: return "markov";
        case BasisKind::Indispensable: return "indispensable";
        case BasisKind::BruteForce: return "brute-force";
    }
    return "?";
}

bool BasisSet::contains(const IVec& v) const {
    return std::binary_search(vectors.begin(), vectors.end(), v, lex_less);
}

namespace {

void canonicalize_set(std::vector<IVec>& vs) {
    for (IVec& v : vs) v = sign_canonical(std::move(v));
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

IVec positive_part(const IVec& v) {
    IVec p(v.size(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) p[i] = v[i];
    return p;
}

// true when g or -g conformally divides v; flip reports which sign
bool reduces(const IVec& g, const IVec& v, bool& flip) {
    if (conformal_leq(g, v)) { flip = false; return true; }
    IVec ng = negate_vec(g);
    if (conformal_leq(ng, v)) { flip = true; return true; }
    return false;
}

// reduce s against one or two sets until no element conformally divides it
IVec normal_form(IVec s, const std::vector<IVec>& g1, const std::vector<IVec>* g2 = nullptr) {
    bool changed = true;
    while (changed && !is_zero_vec(s)) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            const std::vector<IVec>* gs = pass == 0 ? &g1 : g2;
            if (!gs) continue;
            for (const IVec& g : *gs) {
                bool flip = false;
                if (reduces(g, s, flip)) {
                    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= flip ? Int(-g[i]) : g[i];
                    changed = true;
                    if (is_zero_vec(s)) return s;
                }
            }
        }
    }
    return s;
}

bool sum_order(const IVec& a, const IVec& b) {
    Int na = one_norm(a), nb = one_norm(b);
    int c = cmp(na, nb);
    if (c != 0) return c < 0;
    return lex_less(a, b);
}

void check_budget(const std::vector<IVec>& gset, const Budget& budget, const char* stage) {
    if (static_cast<long>(gset.size()) > budget.max_vectors)
        throw budget_exceeded(std::string(stage) + ": vector budget exhausted (" +
                              std::to_string(gset.size()) + " vectors so far; partial progress, not a basis)");
    if (!gset.empty())
        for (const Int& x : gset.back())
            if (abs_int(x) > budget.max_coord)
                throw budget_exceeded(std::string(stage) + ": coordinate budget exhausted (partial progress, not a basis)");
}

void push_pair_sums(std::vector<IVec>& queue, const IVec& a, const IVec& b) {
    IVec s(a.size()), d(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) { s[t] = a[t] + b[t]; d[t] = a[t] - b[t]; }
    if (!is_zero_vec(s)) queue.push_back(sign_canonical(std::move(s)));
    if (!is_zero_vec(d)) queue.push_back(sign_canonical(std::move(d)));
}

std::vector<IVec> minimal_filter(const std::vector<IVec>& gset) {
    std::vector<IVec> out;
    for (std::size_t i = 0; i < gset.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < gset.size() && minimal; ++j) {
            if (i == j) continue;
            bool flip = false;
            if (reduces(gset[j], gset[i], flip)) {
                if (gset[j] != gset[i] || j < i) minimal = false;  // proper divisor or duplicate twin
            }
        }
        if (minimal) out.push_back(gset[i]);
    }
    return out;
}

BasisSet finish_graver(const IntegerMatrix& M, std::vector<IVec> gset) {
    gset = minimal_filter(gset);
    canonicalize_set(gset);
    BasisSet b;
    b.kind = BasisKind::Graver;
    b.matrix = M;
    b.vectors = std::move(gset);
    return b;
}

}  // namespace

BasisSet graver(const IntegerMatrix& M, const Budget& budget) {
    LatticeBasis K = kernel_lattice_basis(M);
    std::vector<IVec> gset;
    for (const IVec& v : K.vectors) gset.push_back(sign_canonical(v));
    std::vector<IVec> queue;
    for (std::size_t i = 0; i < gset.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) push_pair_sums(queue, gset[i], gset[j]);
    // rounds: normal-form the pending batch against the frozen set as a
    // deterministic parallel map, then insert survivors in fixed order
    while (!queue.empty()) {
        std::sort(queue.begin(), queue.end(), sum_order);
        queue.erase(std::unique(queue.begin(), queue.end()), queue.end());
        const std::vector<IVec> batch = std::move(queue);
        queue.clear();
        std::vector<IVec> reduced = parallel_map<IVec>(batch.size(), [&](std::size_t idx) {
            return normal_form(batch[idx], gset);
        });
        std::vector<IVec> fresh;
        for (IVec& r : reduced) {
            if (is_zero_vec(r)) continue;
            r = normal_form(std::move(r), gset, &fresh);
            if (is_zero_vec(r)) continue;
            r = sign_canonical(std::move(r));
            if (std::find(fresh.begin(), fresh.end(), r) == fresh.end()) fresh.push_back(std::move(r));
        }
        for (std::size_t fi = 0; fi < fresh.size(); ++fi) {
            const IVec& f = fresh[fi];
            for (const IVec& g : gset) push_pair_sums(queue, f, g);
            for (std::size_t fj = 0; fj < fi; ++fj) push_pair_sums(queue, f, fresh[fj]);
            push_pair_sums(queue, f, f);
        }
        for (IVec& f : fresh) {
            gset.push_back(std::move(f));
            check_budget(gset, budget, "graver");
        }
    }
    return finish_graver(M, std::move(gset));
}

BasisSet graver_reference(const IntegerMatrix& M, const Budget& budget) {
    LatticeBasis K = kernel_lattice_basis(M);
    std::vector<IVec> gset;
    for (const IVec& v : K.vectors) gset.push_back(sign_canonical(v));
    std::set<IVec, bool (*)(const IVec&, const IVec&)> queue(lex_less);
    auto push2 = [&](const IVec& a, const IVec& b) {
        std::vector<IVec> tmp;
        push_pair_sums(tmp, a, b);
        for (IVec& v : tmp) queue.insert(std::move(v));
    };
    for (std::size_t i = 0; i < gset.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) push2(gset[i], gset[j]);
    while (!queue.empty()) {
        IVec s = *queue.begin();
        queue.erase(queue.begin());
        IVec r = normal_form(std::move(s), gset);
        if (is_zero_vec(r)) continue;
        r = sign_canonical(std::move(r));
        for (const IVec& g : gset) push2(r, g);
        push2(r, r);
        gset.push_back(std::move(r));
        check_budget(gset, budget, "graver");
    }
    return finish_graver(M, std::move(gset));
}

BasisSet graver_brute_force(const IntegerMatrix& M, long bound) {
    const int n = M.cols;
    // stripes over the first coordinate: canonical vectors have a nonnegative
    // leading coordinate, and independent stripes run in parallel
    auto scan_stripe = [&](std::size_t stripe) {
        long c0 = static_cast<long>(stripe);
        std::vector<IVec> found;
        if (n == 0) return found;
        std::vector<long> x(static_cast<std::size_t>(n), -bound);
        x[0] = c0;
        IVec acc(static_cast<std::size_t>(M.rows), Int(0));
        for (int i = 0; i < M.rows; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += M.at(i, j) * x[static_cast<std::size_t>(j)];
            acc[static_cast<std::size_t>(i)] = s;
        }
        while (true) {
            if (is_zero_vec(acc)) {
                IVec v(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
                int fn = first_nonzero(v);
                if (fn >= 0 && v[static_cast<std::size_t>(fn)] > 0) found.push_back(std::move(v));
            }
            int k = n - 1;
            while (k >= 1 && x[static_cast<std::size_t>(k)] == bound) {
                for (int i = 0; i < M.rows; ++i) acc[static_cast<std::size_t>(i)] -= M.at(i, k) * Int(2 * bound);
                x[static_cast<std::size_t>(k)] = -bound;
                --k;
            }
            if (k < 1) break;
            ++x[static_cast<std::size_t>(k)];
            for (int i = 0; i < M.rows; ++i) acc[static_cast<std::size_t>(i)] += M.at(i, k);
        }
        return found;
    };
    std::vector<std::vector<IVec>> stripes =
        parallel_map<std::vector<IVec>>(static_cast<std::size_t>(bound) + 1, scan_stripe);
    std::vector<IVec> all;
    for (auto& s : stripes)
        for (auto& v : s) all.push_back(std::move(v));
    std::vector<IVec> minimal = minimal_filter(all);
    canonicalize_set(minimal);
    BasisSet b;
    b.kind = BasisKind::BruteForce;
    b.matrix = M;
    b.vectors = std::move(minimal);
    return b;
}

BasisSet circuits(const IntegerMatrix& M) {
    const int n = M.cols;
    LatticeBasis K = kernel_lattice_basis(M);
    const int k = static_cast<int>(K.vectors.size());
    std::vector<IVec> candidates;
    if (k == 1) {
        candidates.push_back(K.vectors[0]);
    } else if (k >= 2) {
        // every support-minimal kernel vector spans the solution set of
        // "vanish on Z" for some (k-1)-subset Z of coordinates, so enumerate
        // those subsets and keep the 1-dimensional cases
        std::vector<int> Z(static_cast<std::size_t>(k - 1));
        std::function<void(int, int)> choose = [&](int pos, int start) {
            if (pos == k - 1) {
                IntegerMatrix C(k - 1, k);
                for (int r = 0; r < k - 1; ++r)
                    for (int c = 0; c < k; ++c)
                        C.at(r, c) = K.vectors[static_cast<std::size_t>(c)][static_cast<std::size_t>(Z[static_cast<std::size_t>(r)])];
                LatticeBasis Y = kernel_lattice_basis(C);
                if (Y.vectors.size() == 1) {
                    const IVec& y = Y.vectors[0];
                    IVec v(static_cast<std::size_t>(n), Int(0));
                    for (int t = 0; t < n; ++t) {
                        Int s = 0;
                        for (int c = 0; c < k; ++c) s += y[static_cast<std::size_t>(c)] * K.vectors[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)];
                        v[static_cast<std::size_t>(t)] = s;
                    }
                    if (!is_zero_vec(v)) {
                        Int g = gcd_vec(v);
                        for (Int& x : v) x = divexact(x, g);
                        candidates.push_back(sign_canonical(std::move(v)));
                    }
                }
                return;
            }
            for (int c = start; c < n; ++c) {
                Z[static_cast<std::size_t>(pos)] = c;
                choose(pos + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    canonicalize_set(candidates);
    // keep the support-minimal candidates
    std::vector<IVec> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
            if (i == j) continue;
            bool subset = true, proper = false;
            for (std::size_t t = 0; t < candidates[i].size() && subset; ++t) {
                bool zi = candidates[i][t] == 0, zj = candidates[j][t] == 0;
                if (!zj && zi) subset = false;
                if (zj && !zi) proper = true;
            }
            if (subset && proper) minimal = false;
        }
        if (minimal) out.push_back(candidates[i]);
    }
    BasisSet b;
    b.kind = BasisKind::Circuits;
    b.matrix = M;
    b.vectors = std::move(out);
    return b;
}

namespace {

void fiber_dfs_nonneg(const IntegerMatrix& M, int col, IVec& residual, IVec& x, std::vector<IVec>& out,
                      long max_points) {
    const int n = M.cols;
    if (col == n) {
        if (is_zero_vec(residual)) {
            if (static_cast<long>(out.size()) >= max_points)
                throw budget_exceeded("fiber: point budget exhausted");
            out.push_back(x);
        }
        return;
    }
    for (int i = 0; i < M.rows; ++i) {
        if (residual[static_cast<std::size_t>(i)] == 0) continue;
        if (residual[static_cast<std::size_t>(i)] < 0) return;
        bool coverable = false;
        for (int j = col; j < n; ++j)
            if (M.at(i, j) != 0) { coverable = true; break; }
        if (!coverable) return;
    }
    Int bound(-1);
    bool unbounded = true;
    for (int i = 0; i < M.rows; ++i) {
        const Int& c = M.at(i, col);
        if (c == 0) continue;
        Int b = residual[static_cast<std::size_t>(i)] / c;
        if (unbounded || b < bound) { bound = b; unbounded = false; }
    }
    if (unbounded) bound = 0;  // zero column cannot occur here (positively graded)
    for (Int v(0); v <= bound; ++v) {
        x[static_cast<std::size_t>(col)] = v;
        if (v != 0)
            for (int i = 0; i < M.rows; ++i) residual[static_cast<std::size_t>(i)] -= M.at(i, col);
        fiber_dfs_nonneg(M, col + 1, residual, x, out, max_points);
    }
    for (int i = 0; i < M.rows; ++i) residual[static_cast<std::size_t>(i)] += bound * M.at(i, col);
    x[static_cast<std::size_t>(col)] = 0;
}

void fiber_dfs_graded(const IntegerMatrix& M, const IVec& wcol, int col, IVec& residual, Int wres, IVec& x,
                      std::vector<IVec>& out, long max_points) {
    const int n = M.cols;
    if (col == n) {
        if (is_zero_vec(residual)) {
            if (static_cast<long>(out.size()) >= max_points)
                throw budget_exceeded("fiber: point budget exhausted");
            out.push_back(x);
        }
        return;
    }
    if (wres < 0) return;
    Int bound = wres / wcol[static_cast<std::size_t>(col)];
    for (Int v(0); v <= bound; ++v) {
        x[static_cast<std::size_t>(col)] = v;
        if (v != 0)
            for (int i = 0; i < M.rows; ++i) residual[static_cast<std::size_t>(i)] -= M.at(i, col);
        fiber_dfs_graded(M, wcol, col + 1, residual, wres - v * wcol[static_cast<std::size_t>(col)], x, out,
                         max_points);
    }
    for (int i = 0; i < M.rows; ++i) residual[static_cast<std::size_t>(i)] += bound * M.at(i, col);
    x[static_cast<std::size_t>(col)] = 0;
}

}  // namespace

Fiber fiber(const IntegerMatrix& M, const IVec& degree, const Budget& budget) {
    if (static_cast<int>(degree.size()) != M.rows) throw std::invalid_argument("fiber: degree dimension mismatch");
    if (!is_positively_graded(M)) throw std::invalid_argument("fiber: matrix is not positively graded");
    Fiber f;
    f.matrix = M;
    f.degree = degree;
    IVec residual = degree;
    IVec x(static_cast<std::size_t>(M.cols), Int(0));
    if (M.is_nonnegative()) {
        fiber_dfs_nonneg(M, 0, residual, x, f.points, budget.max_fiber);
    } else {
        auto w = grading_vector(M);
        if (!w) throw std::invalid_argument("fiber: no positive grading exists");
        IVec wcol(static_cast<std::size_t>(M.cols));
        for (int j = 0; j < M.cols; ++j) wcol[static_cast<std::size_t>(j)] = dot(*w, M.col(j));
        fiber_dfs_graded(M, wcol, 0, residual, dot(*w, degree), x, f.points, budget.max_fiber);
    }
    std::sort(f.points.begin(), f.points.end(), lex_less);
    return f;
}

namespace {

// components of the fiber graph whose edges are moves of strictly smaller
// degree; two points are joined by such a move exactly when their supports
// overlap (subtracting the common part is the smaller-degree move)
std::vector<int> fiber_components(const std::vector<IVec>& pts) {
    const std::size_t n = pts.size();
    std::vector<int> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int i) {
        while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
        return i;
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<char> adj = parallel_map<char>(pairs.size(), [&](std::size_t idx) {
        const IVec& a = pts[pairs[idx].first];
        const IVec& b = pts[pairs[idx].second];
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t] > 0 && b[t] > 0) return char(1);
        return char(0);
    });
    for (std::size_t idx = 0; idx < pairs.size(); ++idx)
        if (adj[idx]) {
            int a = find(static_cast<int>(pairs[idx].first));
            int b = find(static_cast<int>(pairs[idx].second));
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    std::vector<int> root(n);
    for (std::size_t i = 0; i < n; ++i) root[i] = find(static_cast<int>(i));
    return root;
}

}  // namespace

MarkovResult minimal_markov(const IntegerMatrix& M, const Budget& budget, TieBreak tie) {
    if (!is_positively_graded(M))
        throw std::invalid_argument(
            "minimal_markov: matrix is not positively graded (such ideals admit infinitely many minimal generating sets)");
    BasisSet gr = graver(M, budget);
    MarkovResult res;
    res.basis.kind = BasisKind::Markov;
    res.basis.matrix = M;
    if (gr.vectors.empty()) return res;
    auto w = grading_vector(M);
    if (!w) throw std::invalid_argument("minimal_markov: no positive grading exists");
    // candidate degrees: degrees of Graver elements, in (w.b, lex) order — a
    // linear extension of the divisibility order on degrees
    std::vector<IVec> degrees;
    for (const IVec& g : gr.vectors) degrees.push_back(M.mul(positive_part(g)));
    std::sort(degrees.begin(), degrees.end(), lex_less);
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::stable_sort(degrees.begin(), degrees.end(), [&](const IVec& a, const IVec& b) {
        int c = cmp(dot(*w, a), dot(*w, b));
        if (c != 0) return c < 0;
        return lex_less(a, b);
    });
    std::vector<IVec> moves;
    for (const IVec& deg : degrees) {
        Fiber fb = fiber(M, deg, budget);
        std::vector<int> root = fiber_components(fb.points);
        std::map<int, std::vector<std::size_t>> comps;
        for (std::size_t i = 0; i < fb.points.size(); ++i) comps[root[i]].push_back(i);
        DegreeReport rep;
        rep.degree = deg;
        rep.fiber_size = static_cast<long>(fb.points.size());
        rep.components = static_cast<int>(comps.size());
        if (comps.size() > 1) {
            std::vector<std::vector<std::size_t>> ordered;
            for (auto& [r, idxs] : comps) ordered.push_back(idxs);
            std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
                const IVec& pa = fb.points[a.front()];
                const IVec& pb = fb.points[b.front()];
                return tie == TieBreak::LexSmallest ? lex_less(pa, pb) : lex_less(pb, pa);
            });
            // star from the first component; each tree edge contributes the
            // tie-break-extremal difference of fiber points
            for (std::size_t t = 1; t < ordered.size(); ++t) {
                std::optional<IVec> best;
                for (std::size_t ia : ordered[0])
                    for (std::size_t ib : ordered[t]) {
                        IVec mv(fb.points[ia].size());
                        for (std::size_t q = 0; q < mv.size(); ++q) mv[q] = fb.points[ia][q] - fb.points[ib][q];
                        mv = sign_canonical(std::move(mv));
                        if (!best || (tie == TieBreak::LexSmallest ? lex_less(mv, *best) : lex_less(*best, mv)))
                            best = std::move(mv);
                    }
                moves.push_back(std::move(*best));
                ++rep.moves_added;
            }
        }
        res.report.push_back(std::move(rep));
    }
    canonicalize_set(moves);
    res.basis.vectors = std::move(moves);
    return res;
}

BasisSet indispensables(const IntegerMatrix& M, const Budget& budget) {
    if (!is_positively_graded(M))
        throw std::invalid_argument("indispensables: matrix is not positively graded");
    BasisSet gr = graver(M, budget);
    std::map<IVec, long, bool (*)(const IVec&, const IVec&)> fiber_size(lex_less);
    std::vector<IVec> out;
    for (const IVec& g : gr.vectors) {
        IVec deg = M.mul(positive_part(g));
        auto it = fiber_size.find(deg);
        long sz;
        if (it == fiber_size.end()) {
            sz = static_cast<long>(fiber(M, deg, budget).points.size());
            fiber_size.emplace(deg, sz);
        } else {
            sz = it->second;
        }
        // forced in every minimal Markov basis exactly when its fiber is the
        // two-point fiber {g+, g-}
        if (sz == 2) out.push_back(g);
    }
    canonicalize_set(out);
    BasisSet b;
    b.kind = BasisKind::Indispensable;
    b.matrix = M;
    b.vectors = std::move(out);
    return b;
}

RobustnessCertificate certify_strongly_robust(const IntegerMatrix& M, const Budget& budget) {
    if (!is_positively_graded(M))
        throw std::invalid_argument("certify_strongly_robust: matrix is not positively graded");
    BasisSet gr = graver(M, budget);
    BasisSet ind = indispensables(M, budget);
    MarkovResult mk = minimal_markov(M, budget);
    RobustnessCertificate cert;
    cert.graver_size = static_cast<long>(gr.vectors.size());
    cert.markov_size = static_cast<long>(mk.basis.vectors.size());
    cert.verdict = gr.vectors == ind.vectors;
    for (const IVec& g : gr.vectors)
        if (!mk.basis.contains(g)) { cert.witness = g; break; }
    return cert;
}

std::optional<std::vector<IVec>> conformal_decompose(const IntegerMatrix& M, const BasisSet& graver_basis,
                                                     const IVec& v) {
    if (!is_zero_vec(M.mul(v))) return std::nullopt;
    std::vector<IVec> parts;
    IVec rest = v;
    while (!is_zero_vec(rest)) {
        bool hit = false;
        for (const IVec& g : graver_basis.vectors) {
            bool flip = false;
            if (reduces(g, rest, flip)) {
                IVec used = flip ? negate_vec(g) : g;
                for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= used[t];
                parts.push_back(std::move(used));
                hit = true;
                break;
            }
        }
        if (!hit) return std::nullopt;  // cannot happen for a true Graver basis
    }
    return parts;
}

std::string basis_to_matrix_text(const BasisSet& b) {
    IntegerMatrix M = IntegerMatrix::from_rows(b.vectors, b.matrix.cols);
    return write_matrix_text(M);
}

std::string basis_sidecar_json(const BasisSet& b) {
    nlohmann::json j;
    j["kind"] = basis_kind_name(b.kind);
    j["size"] = b.vectors.size();
    std::vector<long> degs;
    for (const IVec& v : b.vectors) {
        Int d = 0;
        for (const Int& x : v)
            if (x > 0) d += x;
        if (!d.fits_slong_p()) throw std::runtime_error("degree too large for sidecar");
        degs.push_back(d.get_si());
    }
    std::sort(degs.begin(), degs.end());
    j["degrees"] = degs;
    return j.dump(2) + "\n";
}

}  // namespace toric
