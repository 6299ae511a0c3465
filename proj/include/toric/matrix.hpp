#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

// Dense row-major matrix of arbitrary-precision integers. The universal
// input/output currency of the library; immutable by convention after it is
// fully built (all operations take it by const reference and return copies).
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    IVec entries;  // rows*cols, row-major

    IntegerMatrix() = default;
    IntegerMatrix(int m, int n) : rows(m), cols(n), entries(static_cast<std::size_t>(m) * n, Int(0)) {
        if (m < 0 || n < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    }
    IntegerMatrix(int m, int n, std::vector<std::vector<Int>> data) : IntegerMatrix(m, n) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) at(i, j) = data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    Int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const IntegerMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
    bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }

    IVec row(int i) const {
        IVec r(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) r[static_cast<std::size_t>(j)] = at(i, j);
        return r;
    }
    IVec col(int j) const {
        IVec c(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) c[static_cast<std::size_t>(i)] = at(i, j);
        return c;
    }

    static IntegerMatrix identity(int n) {
        IntegerMatrix I(n, n);
        for (int i = 0; i < n; ++i) I.at(i, i) = 1;
        return I;
    }
    static IntegerMatrix from_rows(const std::vector<IVec>& rws, int ncols) {
        IntegerMatrix M(static_cast<int>(rws.size()), ncols);
        for (int i = 0; i < M.rows; ++i)
            for (int j = 0; j < ncols; ++j) M.at(i, j) = rws[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return M;
    }
    static IntegerMatrix from_cols(const std::vector<IVec>& cls, int nrows) {
        IntegerMatrix M(nrows, static_cast<int>(cls.size()));
        for (int j = 0; j < M.cols; ++j)
            for (int i = 0; i < nrows; ++i) M.at(i, j) = cls[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        return M;
    }

    IntegerMatrix transpose() const {
        IntegerMatrix T(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
        return T;
    }

    IVec mul(const IVec& x) const {
        if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("matrix-vector size mismatch");
        IVec y(static_cast<std::size_t>(rows), Int(0));
        for (int i = 0; i < rows; ++i) {
            Int s = 0;
            for (int j = 0; j < cols; ++j) s += at(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        return y;
    }

    bool is_zero() const { return is_zero_vec(entries); }
    bool is_nonnegative() const {
        for (const Int& x : entries)
            if (x < 0) return false;
        return true;
    }
};

// Matrix text format: first line "m n", then m lines of n whitespace-separated
// decimal integers. Exact round-trip; the writer is byte-stable.
IntegerMatrix read_matrix_text(std::istream& in);
IntegerMatrix read_matrix_file(const std::string& path);
std::string write_matrix_text(const IntegerMatrix& M);
void write_matrix_file(const IntegerMatrix& M, const std::string& path);

}  // namespace toric
