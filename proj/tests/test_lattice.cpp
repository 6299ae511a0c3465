#include <doctest.h>

#include <numeric>

#include "test_util.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntegerMatrix working_example() {
    return IntegerMatrix(5, 7,
                         {{Int(3), Int(0), Int(0), Int(4), Int(5), Int(0), Int(1)},
                          {Int(1), Int(1), Int(0), Int(4), Int(5), Int(0), Int(2)},
                          {Int(3), Int(0), Int(1), Int(0), Int(0), Int(0), Int(0)},
                          {Int(7), Int(1), Int(2), Int(4), Int(3), Int(1), Int(1)},
                          {Int(6), Int(0), Int(2), Int(0), Int(0), Int(0), Int(1)}});
}

IntegerMatrix curve345() { return IntegerMatrix(1, 3, {{Int(3), Int(4), Int(5)}}); }

Int det2(const IntegerMatrix& M) { return M.at(0, 0) * M.at(1, 1) - M.at(0, 1) * M.at(1, 0); }

// independent oracle for the positively-graded test: exhaustive search for a
// nonzero nonnegative kernel vector with coordinates up to the bound
bool has_nonneg_kernel_vector(const IntegerMatrix& M, long bound) {
    std::vector<long> x(static_cast<std::size_t>(M.cols), 0);
    while (true) {
        bool nonzero = false;
        for (long v : x) nonzero = nonzero || v != 0;
        if (nonzero) {
            bool in_kernel = true;
            for (int i = 0; i < M.rows && in_kernel; ++i) {
                Int s = 0;
                for (int j = 0; j < M.cols; ++j) s += M.at(i, j) * x[static_cast<std::size_t>(j)];
                in_kernel = s == 0;
            }
            if (in_kernel) return true;
        }
        int k = M.cols - 1;
        while (k >= 0 && x[static_cast<std::size_t>(k)] == bound) x[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) return false;
        ++x[static_cast<std::size_t>(k)];
    }
}

}  // namespace

TEST_CASE("hnf: empty and identity") {
    auto [h0, u0] = hnf(IntegerMatrix(0, 0));
    CHECK(h0.rows == 0);
    CHECK(u0.cols == 0);
    auto [h1, u1] = hnf(IntegerMatrix::identity(3));
    CHECK(h1 == IntegerMatrix::identity(3));
    CHECK(u1 == IntegerMatrix::identity(3));
}

TEST_CASE("hnf preserves determinant up to sign") {
    IntegerMatrix M(2, 2, {{Int(2), Int(4)}, {Int(0), Int(3)}});
    auto [h, u] = hnf(M);
    CHECK(M.mul(u.col(0)) == h.col(0));
    CHECK(M.mul(u.col(1)) == h.col(1));
    CHECK(abs_int(det2(h)) == abs_int(det2(M)));
    CHECK(abs_int(det2(h)) == 6);
    CHECK(abs_int(det2(u)) == 1);
    // lower triangular with positive pivots
    CHECK(h.at(0, 1) == 0);
    CHECK(h.at(0, 0) > 0);
    CHECK(h.at(1, 1) > 0);
}

TEST_CASE("hnf is a column form on random small matrices") {
    TestRng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int m = static_cast<int>(rng.range(1, 4));
        int n = static_cast<int>(rng.range(1, 4));
        IntegerMatrix M = random_matrix(rng, m, n, -5, 5);
        auto [h, u] = hnf(M);
        for (int j = 0; j < n; ++j) CHECK(M.mul(u.col(j)) == h.col(j));
    }
}

TEST_CASE("kernel: identity and zero") {
    CHECK(kernel_lattice_basis(IntegerMatrix::identity(4)).vectors.empty());
    LatticeBasis z = kernel_lattice_basis(IntegerMatrix(2, 3));
    CHECK(z.vectors.size() == 3);
}

TEST_CASE("kernel of the 5x7 example equals the published lattice") {
    LatticeBasis K = kernel_lattice_basis(working_example());
    REQUIRE(K.vectors.size() == 2);
    LatticeBasis paper;
    paper.ambient_dim = 7;
    paper.vectors = {{Int(1), Int(2), Int(-3), Int(3), Int(-3), Int(-6), Int(0)},
                     {Int(1), Int(2), Int(-3), Int(-2), Int(1), Int(2), Int(0)}};
    CHECK(lattice_equal(K, paper));
    for (const IVec& v : K.vectors) CHECK(is_zero_vec(working_example().mul(v)));
}

TEST_CASE("kernel of [3 4 5] contains the expected vectors") {
    LatticeBasis K = kernel_lattice_basis(curve345());
    REQUIRE(K.vectors.size() == 2);
    CHECK(lattice_contains(K, {Int(4), Int(-3), Int(0)}));
    CHECK(lattice_contains(K, {Int(0), Int(5), Int(-4)}));
    // brute-force cross-check: every small kernel vector lies in the lattice
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
            for (long c = -5; c <= 5; ++c)
                if (3 * a + 4 * b + 5 * c == 0) CHECK(lattice_contains(K, {Int(a), Int(b), Int(c)}));
}

TEST_CASE("gale transform basics") {
    IntegerMatrix G0 = gale_transform(IntegerMatrix::identity(3));
    CHECK(G0.rows == 3);
    CHECK(G0.cols == 0);
    IntegerMatrix G = gale_transform(working_example());
    REQUIRE(G.rows == 7);
    REQUIRE(G.cols == 2);
    // basis-invariant facts from the worked example
    auto row = [&](int i) { return G.row(i); };
    auto proportional = [](const IVec& a, const IVec& b, long num, long den) {
        // a == (num/den) * b
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t] * den != b[t] * num) return false;
        return true;
    };
    CHECK(proportional(row(1), row(0), 2, 1));   // G(a_2) = 2 G(a_1)
    CHECK(proportional(row(2), row(0), -3, 1));  // G(a_3) = -3 G(a_1)
    CHECK(proportional(row(5), row(4), 2, 1));   // G(a_6) = 2 G(a_5)
    CHECK(is_zero_vec(row(6)));                  // G(a_7) = 0
}

TEST_CASE("gale of [3 4 5]: no zero row, no proportional rows") {
    IntegerMatrix G = gale_transform(curve345());
    REQUIRE(G.cols == 2);
    for (int i = 0; i < 3; ++i) CHECK(!is_zero_vec(G.row(i)));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(G.at(i, 0) * G.at(j, 1) != G.at(i, 1) * G.at(j, 0));
}

TEST_CASE("gale proportionality is basis-invariant") {
    IntegerMatrix M = working_example();
    std::vector<int> perm = {4, 2, 0, 3, 1};
    LatticeBasis K2 = kernel_lattice_basis_row_permuted(M, perm);
    CHECK(lattice_equal(K2, kernel_lattice_basis(M)));
    IntegerMatrix G2 = gale_from_kernel(K2);
    IntegerMatrix G1 = gale_transform(M);
    for (int i = 0; i < 7; ++i) CHECK(is_zero_vec(G1.row(i)) == is_zero_vec(G2.row(i)));
    auto prop = [](const IntegerMatrix& G, int i, int j) {
        for (int p = 0; p < G.cols; ++p)
            for (int q = p + 1; q < G.cols; ++q)
                if (G.at(i, p) * G.at(j, q) != G.at(i, q) * G.at(j, p)) return false;
        return true;
    };
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) CHECK(prop(G1, i, j) == prop(G2, i, j));
}

TEST_CASE("lattice_equal") {
    LatticeBasis b1{2, {{Int(1), Int(2)}}};
    LatticeBasis b2{2, {{Int(-1), Int(-2)}}};
    CHECK(lattice_equal(b1, b1));
    CHECK(lattice_equal(b1, b2));
    LatticeBasis c1{2, {{Int(1), Int(0)}, {Int(0), Int(2)}}};
    LatticeBasis c2{2, {{Int(1), Int(0)}, {Int(0), Int(1)}}};
    CHECK(!lattice_equal(c1, c2));  // (0,1) is not an integer combination
    CHECK(!lattice_contains(c1, {Int(0), Int(1)}));
    LatticeBasis d1{2, {{Int(1), Int(2)}}};
    LatticeBasis d2{3, {{Int(1), Int(2), Int(0)}}};
    CHECK_THROWS_AS(lattice_equal(d1, d2), std::invalid_argument);
}

TEST_CASE("is_positively_graded examples") {
    CHECK(is_positively_graded(curve345()));
    IntegerMatrix zc(2, 3);
    zc.at(0, 0) = 1;
    zc.at(1, 2) = 1;  // middle column zero
    CHECK(!is_positively_graded(zc));
    CHECK(!is_positively_graded(IntegerMatrix(1, 2, {{Int(1), Int(-1)}})));
}

namespace {

// exact oracle: the kernel meets N^n nontrivially iff the cone
// {x >= 0, Mx = 0} has an extreme ray, and extreme rays are sign-uniform
// circuits: supports S with rank(M_S) = |S| - 1 and a one-signed generator.
// (A plain coordinate box is not enough: a 3x4 matrix with entries in
// [-3,3] can have its minimal nonnegative kernel vector at (3,11,29,2).)
bool oracle_not_positively_graded(const IntegerMatrix& M) {
    const int n = M.cols;
    for (long mask = 1; mask < (1L << n); ++mask) {
        std::vector<int> S;
        for (int j = 0; j < n; ++j)
            if (mask & (1L << j)) S.push_back(j);
        IntegerMatrix sub(M.rows, static_cast<int>(S.size()));
        for (int j = 0; j < sub.cols; ++j)
            for (int i = 0; i < M.rows; ++i) sub.at(i, j) = M.at(i, S[static_cast<std::size_t>(j)]);
        LatticeBasis K = kernel_lattice_basis(sub);
        if (K.vectors.size() != 1) continue;
        IVec g = sign_canonical(K.vectors[0]);
        bool nonneg = true;
        for (const Int& x : g) nonneg = nonneg && x >= 0;
        if (nonneg && !is_zero_vec(g)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("is_positively_graded agrees with the extreme-ray oracle") {
    TestRng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int m = static_cast<int>(rng.range(1, 3));
        int n = static_cast<int>(rng.range(1, 5));
        IntegerMatrix M = random_matrix(rng, m, n, -3, 3);
        bool graded = is_positively_graded(M);
        CHECK(graded == !oracle_not_positively_graded(M));
        // a box search is sound in one direction: any nonnegative kernel
        // vector it finds disproves positive grading
        if (has_nonneg_kernel_vector(M, 10)) CHECK(!graded);
    }
}

TEST_CASE("grading_vector certifies positivity") {
    auto w = grading_vector(working_example());
    REQUIRE(w.has_value());
    for (int j = 0; j < 7; ++j) CHECK(dot(*w, working_example().col(j)) >= 1);
    IntegerMatrix mixed(2, 3, {{Int(1), Int(-1), Int(2)}, {Int(0), Int(3), Int(-1)}});
    if (is_positively_graded(mixed)) {
        auto wm = grading_vector(mixed);
        REQUIRE(wm.has_value());
        for (int j = 0; j < 3; ++j) CHECK(dot(*wm, mixed.col(j)) >= 1);
    }
    CHECK(!grading_vector(IntegerMatrix(1, 2, {{Int(1), Int(-1)}})).has_value());
}

TEST_CASE("fourier_motzkin solves a small system") {
    // x >= 1, y >= 1, -x - y >= -3 is feasible; adding -x >= -0 is not
    std::vector<std::vector<Rat>> sys = {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}, {Rat(-1), Rat(-1), Rat(-3)}};
    auto sol = fourier_motzkin_feasible(sys, 2);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] >= 1);
    CHECK((*sol)[1] >= 1);
    CHECK((*sol)[0] + (*sol)[1] <= 3);
    sys.push_back({Rat(-1), Rat(0), Rat(0)});
    CHECK(!fourier_motzkin_feasible(sys, 2).has_value());
}
