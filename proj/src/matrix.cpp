#include "toric/matrix.hpp"

#include <fstream>
#include <sstream>

namespace toric {

IntegerMatrix read_matrix_text(std::istream& in) {
    long m = 0, n = 0;
    if (!(in >> m >> n)) throw std::invalid_argument("matrix text: missing 'm n' header");
    if (m < 0 || n < 0) throw std::invalid_argument("matrix text: negative dimensions");
    IntegerMatrix M(static_cast<int>(m), static_cast<int>(n));
    for (long i = 0; i < m * n; ++i) {
        std::string tok;
        if (!(in >> tok)) throw std::invalid_argument("matrix text: too few entries");
        try {
            M.entries[static_cast<std::size_t>(i)] = Int(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("matrix text: bad integer '" + tok + "'");
        }
    }
    return M;
}

IntegerMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return read_matrix_text(in);
}

std::string write_matrix_text(const IntegerMatrix& M) {
    std::ostringstream out;
    out << M.rows << " " << M.cols << "\n";
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) {
            if (j) out << " ";
            out << M.at(i, j).get_str();
        }
        out << "\n";
    }
    return out.str();
}

void write_matrix_file(const IntegerMatrix& M, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << write_matrix_text(M);
}

}  // namespace toric
