#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "toric/bases.hpp"
#include "toric/parallel.hpp"

using namespace toric;

namespace {

IntegerMatrix curve345() { return IntegerMatrix(1, 3, {{Int(3), Int(4), Int(5)}}); }

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

std::vector<IVec> graver345_expected() {
    // the seven published elements, in canonical lex order
    std::vector<IVec> e = {iv({4, -3, 0}), iv({1, -2, 1}),  iv({3, -1, -1}), iv({2, 1, -2}),
                           iv({5, 0, -3}), iv({1, 3, -3}), iv({0, 5, -4})};
    std::sort(e.begin(), e.end(), lex_less);
    return e;
}

// spec-literal circuit oracle: column subsets S with rank(M_S) = |S|-1, all
// proper subsets independent (equivalently the generator has full support)
std::vector<IVec> circuits_oracle(const IntegerMatrix& M) {
    const int n = M.cols;
    std::vector<IVec> out;
    for (long mask = 1; mask < (1L << n); ++mask) {
        std::vector<int> S;
        for (int j = 0; j < n; ++j)
            if (mask & (1L << j)) S.push_back(j);
        IntegerMatrix sub(M.rows, static_cast<int>(S.size()));
        for (int j = 0; j < sub.cols; ++j)
            for (int i = 0; i < M.rows; ++i) sub.at(i, j) = M.at(i, S[static_cast<std::size_t>(j)]);
        if (rank(sub) != static_cast<int>(S.size()) - 1) continue;
        LatticeBasis K = kernel_lattice_basis(sub);
        if (K.vectors.size() != 1) continue;
        bool full = true;
        for (const Int& x : K.vectors[0]) full = full && x != 0;
        if (!full) continue;
        IVec v(static_cast<std::size_t>(n), Int(0));
        for (std::size_t t = 0; t < S.size(); ++t) v[static_cast<std::size_t>(S[t])] = K.vectors[0][t];
        out.push_back(sign_canonical(std::move(v)));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("graver of [3 4 5] is the published seven-element set") {
    BasisSet g = graver(curve345());
    CHECK(g.vectors == graver345_expected());
    BasisSet ref = graver_reference(curve345());
    CHECK(ref.vectors == g.vectors);
    BasisSet bf = graver_brute_force(curve345(), 5);
    CHECK(bf.vectors == g.vectors);
}

TEST_CASE("graver: identity and empty-kernel cases") {
    CHECK(graver(IntegerMatrix::identity(4)).vectors.empty());
    CHECK(graver_brute_force(IntegerMatrix::identity(3), 4).vectors.empty());
}

TEST_CASE("graver of the 2x4 hypergraph-encoding source") {
    IntegerMatrix A(2, 4, {{Int(-1), Int(-1), Int(2), Int(2)}, {Int(-2), Int(2), Int(-1), Int(0)}});
    BasisSet g = graver(A);
    CHECK(g.vectors.size() == 7);
    CHECK(g.contains(iv({1, 3, 4, -2})));
    CHECK(graver_brute_force(A, 6).vectors == g.vectors);
}

TEST_CASE("graver brute force on x+y-z") {
    IntegerMatrix M(1, 3, {{Int(1), Int(1), Int(-1)}});
    BasisSet bf = graver_brute_force(M, 2);
    std::vector<IVec> expect = {iv({1, 0, 1}), iv({0, 1, 1}), iv({1, -1, 0})};
    std::sort(expect.begin(), expect.end(), lex_less);
    CHECK(bf.vectors == expect);
    CHECK(graver(M).vectors == expect);
}

TEST_CASE("parallel and serial kernels agree") {
    IntegerMatrix A(2, 5, {{Int(3), Int(5), Int(7), Int(11), Int(13)}, {Int(1), Int(2), Int(3), Int(5), Int(8)}});
    set_parallel(false);
    BasisSet serial = graver(A);
    set_parallel(true);
    BasisSet parallel = graver(A);
    CHECK(serial.vectors == parallel.vectors);
    CHECK(graver_reference(A).vectors == serial.vectors);
    set_parallel(false);
    BasisSet bfs = graver_brute_force(A, 3);
    set_parallel(true);
    CHECK(graver_brute_force(A, 3).vectors == bfs.vectors);
}

TEST_CASE("budget aborts loudly") {
    IntegerMatrix A(2, 5, {{Int(3), Int(5), Int(7), Int(11), Int(13)}, {Int(1), Int(2), Int(3), Int(5), Int(8)}});
    Budget tiny;
    tiny.max_vectors = 3;
    CHECK_THROWS_AS(graver(A, tiny), budget_exceeded);
    CHECK_THROWS_AS(graver_reference(A, tiny), budget_exceeded);
}

TEST_CASE("circuits of [3 4 5]") {
    BasisSet c = circuits(curve345());
    std::vector<IVec> expect = {iv({4, -3, 0}), iv({5, 0, -3}), iv({0, 5, -4})};
    std::sort(expect.begin(), expect.end(), lex_less);
    CHECK(c.vectors == expect);
    CHECK(circuits(IntegerMatrix::identity(3)).vectors.empty());
}

TEST_CASE("circuits are contained in graver and support-minimal there") {
    for (const IntegerMatrix& M : {curve345(),
                                   IntegerMatrix(2, 4, {{Int(-1), Int(-1), Int(2), Int(2)}, {Int(-2), Int(2), Int(-1), Int(0)}}),
                                   IntegerMatrix(5, 7,
                                                 {{Int(3), Int(0), Int(0), Int(4), Int(5), Int(0), Int(1)},
                                                  {Int(1), Int(1), Int(0), Int(4), Int(5), Int(0), Int(2)},
                                                  {Int(3), Int(0), Int(1), Int(0), Int(0), Int(0), Int(0)},
                                                  {Int(7), Int(1), Int(2), Int(4), Int(3), Int(1), Int(1)},
                                                  {Int(6), Int(0), Int(2), Int(0), Int(0), Int(0), Int(1)}})}) {
        BasisSet c = circuits(M);
        BasisSet g = graver(M);
        for (const IVec& v : c.vectors) CHECK(g.contains(v));
        // support-minimality filter of the graver output reproduces circuits
        std::vector<IVec> filt;
        for (const IVec& v : g.vectors) {
            bool minimal = true;
            for (const IVec& w : g.vectors) {
                if (w == v) continue;
                bool subset = true, proper = false;
                for (std::size_t t = 0; t < v.size(); ++t) {
                    if (w[t] != 0 && v[t] == 0) subset = false;
                    if (w[t] == 0 && v[t] != 0) proper = true;
                }
                if (subset && proper) { minimal = false; break; }
            }
            if (minimal) filt.push_back(v);
        }
        CHECK(c.vectors == filt);
    }
}

TEST_CASE("circuits agree with the subset-rank oracle on random matrices") {
    TestRng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int m = static_cast<int>(rng.range(1, 3));
        int n = static_cast<int>(rng.range(2, 5));
        IntegerMatrix M = random_matrix(rng, m, n, -3, 3);
        CHECK(circuits(M).vectors == circuits_oracle(M));
    }
}

TEST_CASE("fiber enumeration") {
    Fiber f12 = fiber(curve345(), iv({12}));
    std::vector<IVec> expect12 = {iv({4, 0, 0}), iv({0, 3, 0}), iv({1, 1, 1})};
    std::sort(expect12.begin(), expect12.end(), lex_less);
    CHECK(f12.points == expect12);
    Fiber f8 = fiber(curve345(), iv({8}));
    std::vector<IVec> expect8 = {iv({1, 0, 1}), iv({0, 2, 0})};
    std::sort(expect8.begin(), expect8.end(), lex_less);
    CHECK(f8.points == expect8);
    Fiber f0 = fiber(curve345(), iv({0}));
    CHECK(f0.points == std::vector<IVec>{iv({0, 0, 0})});
    CHECK_THROWS_AS(fiber(IntegerMatrix(1, 2, {{Int(1), Int(-1)}}), iv({1})), std::invalid_argument);
}

TEST_CASE("fiber enumeration with negative entries matches a box oracle") {
    IntegerMatrix M(2, 3, {{Int(2), Int(-1), Int(1)}, {Int(1), Int(1), Int(1)}});
    REQUIRE(is_positively_graded(M));
    IVec b = M.mul(iv({3, 2, 1}));
    Fiber f = fiber(M, b);
    std::vector<IVec> oracle;
    for (long x = 0; x <= 12; ++x)
        for (long y = 0; y <= 12; ++y)
            for (long z = 0; z <= 12; ++z) {
                IVec v = iv({x, y, z});
                if (M.mul(v) == b) oracle.push_back(v);
            }
    std::sort(oracle.begin(), oracle.end(), lex_less);
    CHECK(f.points == oracle);
}

TEST_CASE("minimal markov of [3 4 5]") {
    MarkovResult res = minimal_markov(curve345());
    CHECK(res.basis.vectors.size() == 3);
    // fiber-connectivity oracle: degrees 8, 9, 10 each split into two
    // components and contribute one move; larger degrees are connected
    int moves = 0;
    for (const DegreeReport& d : res.report) {
        if (d.degree == iv({8}) || d.degree == iv({9}) || d.degree == iv({10})) {
            CHECK(d.components == 2);
            CHECK(d.moves_added == 1);
            ++moves;
        } else {
            CHECK(d.moves_added == 0);
        }
    }
    CHECK(moves == 3);
    CHECK(minimal_markov(IntegerMatrix::identity(3)).basis.vectors.empty());
}

TEST_CASE("markov cardinality is selection-independent") {
    for (const IntegerMatrix& M :
         {curve345(), IntegerMatrix(2, 4, {{Int(1), Int(1), Int(1), Int(1)}, {Int(0), Int(1), Int(2), Int(3)}})}) {
        MarkovResult a = minimal_markov(M, Budget(), TieBreak::LexSmallest);
        MarkovResult b = minimal_markov(M, Budget(), TieBreak::LexLargest);
        CHECK(a.basis.vectors.size() == b.basis.vectors.size());
        REQUIRE(a.report.size() == b.report.size());
        for (std::size_t t = 0; t < a.report.size(); ++t) {
            CHECK(a.report[t].components == b.report[t].components);
            CHECK(a.report[t].moves_added == b.report[t].moves_added);
        }
    }
}

TEST_CASE("indispensables of [3 4 5] are all three minimal generators") {
    BasisSet ind = indispensables(curve345());
    CHECK(ind.vectors.size() == 3);
    MarkovResult mk = minimal_markov(curve345());
    for (const IVec& v : ind.vectors) CHECK(mk.basis.contains(v));
    CHECK(indispensables(IntegerMatrix::identity(3)).vectors.empty());
}

TEST_CASE("basis sandwich: indispensable within markov within graver") {
    TestRng rng(31);
    int done = 0;
    while (done < 12) {
        int m = static_cast<int>(rng.range(1, 3));
        int n = static_cast<int>(rng.range(2, 5));
        IntegerMatrix M = random_matrix(rng, m, n, 0, 3);
        bool zero_col = false;
        for (int j = 0; j < n; ++j) zero_col = zero_col || is_zero_vec(M.col(j));
        if (zero_col) continue;
        BasisSet g = graver(M);
        MarkovResult mk = minimal_markov(M);
        BasisSet ind = indispensables(M);
        for (const IVec& v : ind.vectors) CHECK(mk.basis.contains(v));
        for (const IVec& v : mk.basis.vectors) CHECK(g.contains(v));
        ++done;
    }
}

TEST_CASE("certify_strongly_robust") {
    RobustnessCertificate cert = certify_strongly_robust(curve345());
    CHECK(!cert.verdict);
    CHECK(cert.graver_size == 7);
    CHECK(cert.markov_size == 3);
    CHECK(cert.witness.has_value());
    RobustnessCertificate triv = certify_strongly_robust(IntegerMatrix::identity(2));
    CHECK(triv.verdict);
    CHECK(triv.graver_size == 0);
}

TEST_CASE("conformal decomposition of box kernel vectors") {
    TestRng rng(55);
    int done = 0;
    while (done < 20) {
        int m = static_cast<int>(rng.range(2, 3));
        int n = static_cast<int>(rng.range(3, 6));
        IntegerMatrix M(m, n);
        for (int j = 0; j < n; ++j) M.at(0, j) = rng.range(1, 3);  // positive first row forces the grading
        for (int i = 1; i < m; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = rng.range(-3, 3);
        REQUIRE(is_positively_graded(M));
        BasisSet g = graver(M);
        ++done;
        // every kernel vector in the [-4,4] box decomposes conformally
        std::vector<long> x(static_cast<std::size_t>(n), -4);
        while (true) {
            IVec v(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
            if (is_zero_vec(M.mul(v)) && !is_zero_vec(v)) {
                auto parts = conformal_decompose(M, g, v);
                REQUIRE(parts.has_value());
                IVec sum(static_cast<std::size_t>(n), Int(0));
                for (const IVec& p : *parts) {
                    CHECK(conformal_leq(p, v));
                    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += p[t];
                }
                CHECK(sum == v);
            }
            int k = n - 1;
            while (k >= 0 && x[static_cast<std::size_t>(k)] == 4) x[static_cast<std::size_t>(k--)] = -4;
            if (k < 0) break;
            ++x[static_cast<std::size_t>(k)];
        }
    }
}

TEST_CASE("graver equals brute force on random positively graded instances") {
    TestRng rng(77);
    int done = 0;
    while (done < 10) {
        int n = static_cast<int>(rng.range(2, 4));
        IntegerMatrix M(1, n);
        for (int j = 0; j < n; ++j) M.at(0, j) = rng.range(-4, 4);
        bool haszero = false;
        for (int j = 0; j < n; ++j) haszero = haszero || M.at(0, j) == 0;
        if (haszero) continue;
        BasisSet g = graver(M);
        Int maxc = 0;
        for (const IVec& v : g.vectors)
            for (const Int& x : v) maxc = std::max(maxc, abs_int(x));
        if (maxc > 6) continue;
        BasisSet bf = graver_brute_force(M, maxc.get_si() + 1);
        CHECK(bf.vectors == g.vectors);
        ++done;
    }
}

TEST_CASE("basis serialization") {
    BasisSet g = graver(curve345());
    std::string text = basis_to_matrix_text(g);
    CHECK(text.substr(0, 4) == "7 3\n");
    std::string sidecar = basis_sidecar_json(g);
    CHECK(sidecar.find("\"kind\": \"graver\"") != std::string::npos);
    CHECK(sidecar.find("\"size\": 7") != std::string::npos);
}
