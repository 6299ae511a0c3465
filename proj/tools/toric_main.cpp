#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/bases.hpp"
#include "toric/bouquet.hpp"
#include "toric/encoders.hpp"
#include "toric/hypergraph.hpp"
#include "toric/parallel.hpp"

using namespace toric;
using nlohmann::json;

namespace {

std::string fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    unsigned long long h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // path -> hash
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<std::string> artifacts;

    void add_input(const std::string& path) { inputs.emplace_back(path, fnv1a_file(path)); }
    void add(const std::string& k, const std::string& v) { results.emplace_back(k, v); }
    void add(const std::string& k, long v) { results.emplace_back(k, std::to_string(v)); }

    void print(bool as_json) const {
        if (as_json) {
            json j;
            j["command"] = command;
            json jin = json::object();
            for (const auto& [p, h] : inputs) jin[p] = h;
            j["inputs"] = jin;
            json jres = json::object();
            for (const auto& [k, v] : results) jres[k] = v;
            j["results"] = jres;
            j["artifacts"] = artifacts;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "command: " << command << "\n";
            for (const auto& [p, h] : inputs) std::cout << "input: " << p << " fnv1a=" << h << "\n";
            for (const auto& [k, v] : results) std::cout << k << ": " << v << "\n";
            for (const auto& a : artifacts) std::cout << "artifact: " << a << "\n";
        }
    }
};

IVec parse_int_list(const std::string& s) {
    IVec out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(Int(tok));
    }
    return out;
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    for (const Int& x : parse_int_list(s)) {
        if (!x.fits_sint_p() || x < 1) throw std::invalid_argument("bad 1-based index list: " + s);
        out.push_back(static_cast<int>(x.get_si()) - 1);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << data;
}

std::string vectors_as_matrix_text(const std::vector<IVec>& vs, int ncols) {
    return write_matrix_text(IntegerMatrix::from_rows(vs, ncols));
}

std::string map_as_matrix_text(const EncodingMap& map) {
    return vectors_as_matrix_text(map.c_vectors, map.source_cols);
}

EncodingMap map_from_matrix(const IntegerMatrix& M) {
    EncodingMap map;
    map.source_cols = M.cols;
    map.target_cols = M.rows;
    for (int i = 0; i < M.rows; ++i) map.c_vectors.push_back(M.row(i));
    return map;
}

void print_basis(const BasisSet& b, const Report& rep, bool as_json) {
    if (as_json) {
        json j;
        j["command"] = rep.command;
        json jin = json::object();
        for (const auto& [p, h] : rep.inputs) jin[p] = h;
        j["inputs"] = jin;
        j["kind"] = basis_kind_name(b.kind);
        j["size"] = b.vectors.size();
        json vec = json::array();
        for (const IVec& v : b.vectors) {
            json row = json::array();
            for (const Int& x : v) {
                if (!x.fits_slong_p()) throw std::runtime_error("entry too large for json output");
                row.push_back(x.get_si());
            }
            vec.push_back(row);
        }
        j["vectors"] = vec;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << basis_to_matrix_text(b);
        rep.print(false);
    }
}

long g_max_vectors = 100000;
std::string g_max_coord = "1000000000000000000000000000000";
long g_max_fiber = 1000000;

Budget budget_from_flags() {
    Budget b;
    b.max_vectors = g_max_vectors;
    b.max_coord = Int(g_max_coord);
    b.max_fiber = g_max_fiber;
    return b;
}

json manifest_for(const std::string& source_path, const json& dims, const json& parts) {
    json j;
    j["source_hash"] = fnv1a_file(source_path);
    j["dimensions"] = dims;
    j["part_structure"] = parts;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for toric ideals: bouquet decompositions, Graver/Markov/circuit bases, hypergraph encodings"};
    app.require_subcommand(1);
    bool as_json = false;
    bool serial = false;
    int threads = 0;
    app.add_flag("--json", as_json, "machine-readable report on stdout");
    app.add_flag("--serial", serial, "force the serial reference kernels");
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
    app.add_option("--max-vectors", g_max_vectors, "completion budget: max basis vectors");
    app.add_option("--max-coord", g_max_coord, "completion budget: max |coordinate|");
    app.add_option("--max-fiber", g_max_fiber, "fiber enumeration budget: max points");

    std::string matrix_path, hyper_path, map_path, out_prefix, degree_str, basis_str, parts_path, vectors_path,
        a_path, c_path;
    int gadget_d = 2;

    auto* c_kernel = app.add_subcommand("kernel", "kernel lattice basis of a matrix");
    c_kernel->add_option("matrix", matrix_path)->required();
    auto* c_gale = app.add_subcommand("gale", "Gale transform of a matrix");
    c_gale->add_option("matrix", matrix_path)->required();
    auto* c_bouquets = app.add_subcommand("bouquets", "bouquet decomposition of a matrix");
    c_bouquets->add_option("matrix", matrix_path)->required();
    auto* c_stable = app.add_subcommand("stable-check", "is every non-free bouquet non-mixed");
    c_stable->add_option("matrix", matrix_path)->required();
    auto* c_graver = app.add_subcommand("graver", "Graver basis");
    c_graver->add_option("matrix", matrix_path)->required();
    auto* c_circuits = app.add_subcommand("circuits", "circuits");
    c_circuits->add_option("matrix", matrix_path)->required();
    auto* c_markov = app.add_subcommand("markov", "a minimal Markov basis with the per-degree report");
    c_markov->add_option("matrix", matrix_path)->required();
    auto* c_indisp = app.add_subcommand("indispensable", "indispensable moves");
    c_indisp->add_option("matrix", matrix_path)->required();
    auto* c_fiber = app.add_subcommand("fiber", "fiber of a degree vector");
    c_fiber->add_option("matrix", matrix_path)->required();
    c_fiber->add_option("--degree", degree_str, "comma-separated degree vector")->required();
    auto* c_robust = app.add_subcommand("certify-robust", "strong-robustness certificate");
    c_robust->add_option("matrix", matrix_path)->required();
    auto* c_bwb = app.add_subcommand("bwb", "bouquet-with-basis test for a vertex set");
    c_bwb->add_option("hypergraph", hyper_path)->required();
    c_bwb->add_option("--basis", basis_str, "comma-separated 1-based vertex set")->required();
    auto* c_sun = app.add_subcommand("sunflower", "recognize a matched-petal relaxed-core sunflower");
    c_sun->add_option("hypergraph", hyper_path)->required();
    auto* c_core = app.add_subcommand("core-matrix", "core incidence matrix D of a recognized sunflower");
    c_core->add_option("hypergraph", hyper_path)->required();
    auto* c_h3 = app.add_subcommand("encode-h3", "almost-3-uniform hypergraph encoding");
    c_h3->add_option("matrix", matrix_path)->required();
    c_h3->add_option("--out", out_prefix, "bundle prefix (.hypergraph.json, .map.txt, .manifest.json)");
    auto* c_st = app.add_subcommand("encode-stable", "stable 0/1 encoding of a nonnegative matrix");
    c_st->add_option("matrix", matrix_path)->required();
    c_st->add_option("--out", out_prefix, "bundle prefix (.matrix.txt, .map.txt, .manifest.json)");
    auto* c_hd = app.add_subcommand("gadget-hd", "the H_{d+1} hypergraph and its distinguished Graver vector");
    c_hd->add_option("--d", gadget_d, "parameter d >= 2")->required();
    c_hd->add_option("--out", out_prefix, "bundle prefix (.hypergraph.json, .fvector.txt)");
    auto* c_law = app.add_subcommand("lawrence", "generalized Lawrence matrix from a-vectors and c-vectors");
    c_law->add_option("avectors", a_path, "matrix text: one a-vector per row")->required();
    c_law->add_option("cvectors", c_path, "text: one c-vector per line")->required();
    c_law->add_option("--out", out_prefix, "bundle prefix (.matrix.txt, .parts.txt)");
    auto* c_uni = app.add_subcommand("universality", "universality gadget for a list of vectors");
    c_uni->add_option("--vectors", vectors_path, "text: one d-vector per line")->required();
    c_uni->add_option("--out", out_prefix, "bundle prefix (.hypergraph.json, .map.txt, .manifest.json)");
    auto* c_vb = app.add_subcommand("verify-bijection", "check u -> B(u) between the Graver bases of A and H");
    c_vb->add_option("matrix", matrix_path)->required();
    c_vb->add_option("hypergraph", hyper_path)->required();
    c_vb->add_option("map", map_path, "EncodingMap as matrix text (one c-vector per row)")->required();
    auto* c_vp = app.add_subcommand("verify-partition", "verify a subbouquet or bouquet-with-basis partition");
    c_vp->add_option("--matrix", matrix_path);
    c_vp->add_option("--hypergraph", hyper_path);
    c_vp->add_option("--parts", parts_path)->required();

    CLI11_PARSE(app, argc, argv);
    set_parallel(!serial);
    set_thread_count(threads);

    try {
        Budget budget = budget_from_flags();
        if (*c_kernel) {
            Report rep;
            rep.command = "kernel";
            rep.add_input(matrix_path);
            IntegerMatrix M = read_matrix_file(matrix_path);
            LatticeBasis K = kernel_lattice_basis(M);
            rep.add("rank", static_cast<long>(M.cols - static_cast<int>(K.vectors.size())));
            rep.add("kernel-rank", static_cast<long>(K.vectors.size()));
            std::cout << vectors_as_matrix_text(K.vectors, K.ambient_dim);
            rep.print(as_json);
            return 0;
        }
        if (*c_gale) {
            Report rep;
            rep.command = "gale";
            rep.add_input(matrix_path);
            IntegerMatrix G = gale_transform(read_matrix_file(matrix_path));
            std::cout << write_matrix_text(G);
            rep.print(as_json);
            return 0;
        }
        if (*c_bouquets) {
            Report rep;
            rep.command = "bouquets";
            rep.add_input(matrix_path);
            BouquetDecomposition dec = bouquet_graph(read_matrix_file(matrix_path));
            rep.add("parts", static_cast<long>(dec.bouquets.size()));
            if (as_json) {
                json j;
                j["command"] = "bouquets";
                j["inputs"] = {{matrix_path, fnv1a_file(matrix_path)}};
                json parts = json::array();
                for (const Bouquet& b : dec.bouquets) {
                    json p;
                    json cols = json::array();
                    for (int c : b.column_indices) cols.push_back(c + 1);
                    p["columns"] = cols;
                    p["kind"] = bouquet_kind_name(b.kind);
                    json cv = json::array(), av = json::array();
                    for (const Int& x : b.c_vector) cv.push_back(x.get_si());
                    for (const Int& x : b.a_vector) av.push_back(x.get_si());
                    p["c"] = cv;
                    p["a"] = av;
                    parts.push_back(p);
                }
                j["parts"] = parts;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << decomposition_report(dec);
                rep.print(false);
            }
            return 0;
        }
        if (*c_stable) {
            Report rep;
            rep.command = "stable-check";
            rep.add_input(matrix_path);
            bool st = is_stable(read_matrix_file(matrix_path));
            rep.add("stable", st ? "yes" : "no");
            rep.print(as_json);
            return st ? 0 : 1;
        }
        if (*c_graver || *c_circuits || *c_indisp) {
            Report rep;
            rep.command = *c_graver ? "graver" : (*c_circuits ? "circuits" : "indispensable");
            rep.add_input(matrix_path);
            IntegerMatrix M = read_matrix_file(matrix_path);
            BasisSet b = *c_graver ? graver(M, budget) : (*c_circuits ? circuits(M) : indispensables(M, budget));
            rep.add("size", static_cast<long>(b.vectors.size()));
            if (!out_prefix.empty()) {}
            print_basis(b, rep, as_json);
            return 0;
        }
        if (*c_markov) {
            Report rep;
            rep.command = "markov";
            rep.add_input(matrix_path);
            IntegerMatrix M = read_matrix_file(matrix_path);
            MarkovResult res = minimal_markov(M, budget);
            rep.add("size", static_cast<long>(res.basis.vectors.size()));
            for (const DegreeReport& d : res.report)
                rep.add("degree " + vec_to_string(d.degree),
                        "fiber=" + std::to_string(d.fiber_size) + " components=" + std::to_string(d.components) +
                            " moves=" + std::to_string(d.moves_added));
            print_basis(res.basis, rep, as_json);
            return 0;
        }
        if (*c_fiber) {
            Report rep;
            rep.command = "fiber";
            rep.add_input(matrix_path);
            IntegerMatrix M = read_matrix_file(matrix_path);
            Fiber f = fiber(M, parse_int_list(degree_str), budget);
            rep.add("points", static_cast<long>(f.points.size()));
            std::cout << vectors_as_matrix_text(f.points, M.cols);
            rep.print(as_json);
            return 0;
        }
        if (*c_robust) {
            Report rep;
            rep.command = "certify-robust";
            rep.add_input(matrix_path);
            RobustnessCertificate cert = certify_strongly_robust(read_matrix_file(matrix_path), budget);
            rep.add("strongly-robust", cert.verdict ? "yes" : "no");
            rep.add("graver-size", cert.graver_size);
            rep.add("markov-size", cert.markov_size);
            if (cert.witness) rep.add("witness", vec_to_string(*cert.witness));
            rep.print(as_json);
            return cert.verdict ? 0 : 1;
        }
        if (*c_bwb) {
            Report rep;
            rep.command = "bwb";
            rep.add_input(hyper_path);
            Hypergraph h = read_hypergraph_file(hyper_path);
            auto bwb = is_bouquet_with_basis(h, parse_index_list(basis_str));
            rep.add("bouquet-with-basis", bwb ? "yes" : "no");
            if (bwb) {
                rep.add("c", vec_to_string(bwb->c_vector));
                rep.add("a", vec_to_string(bwb->a_vector));
            }
            rep.print(as_json);
            return bwb ? 0 : 1;
        }
        if (*c_sun) {
            Report rep;
            rep.command = "sunflower";
            rep.add_input(hyper_path);
            Hypergraph h = read_hypergraph_file(hyper_path);
            auto s = recognize_sunflower_structure(h);
            rep.add("recognized", s ? "yes" : "no");
            if (s) {
                rep.add("flavor", sunflower_flavor_name(s->flavor));
                rep.add("connected", s->connected ? "yes" : "no");
                rep.add("sunflowers", static_cast<long>(s->sunflowers.size()));
                rep.add("matching-edges", static_cast<long>(s->matching.size()));
            }
            rep.print(as_json);
            return s ? 0 : 1;
        }
        if (*c_core) {
            Report rep;
            rep.command = "core-matrix";
            rep.add_input(hyper_path);
            IntegerMatrix D = core_incidence_matrix(read_hypergraph_file(hyper_path));
            std::cout << write_matrix_text(D);
            rep.print(as_json);
            return 0;
        }
        if (*c_h3) {
            Report rep;
            rep.command = "encode-h3";
            rep.add_input(matrix_path);
            H3Encoding enc = encode_h3(read_matrix_file(matrix_path));
            rep.add("vertices", static_cast<long>(enc.hypergraph.vertex_count));
            rep.add("edges", static_cast<long>(enc.hypergraph.edges.size()));
            if (!out_prefix.empty()) {
                write_file(out_prefix + ".hypergraph.json", hypergraph_to_json(enc.hypergraph));
                write_file(out_prefix + ".map.txt", map_as_matrix_text(enc.map));
                json parts = json::array();
                for (std::size_t j = 0; j < enc.parts.size(); ++j) {
                    json p;
                    p["column"] = j + 1;
                    json es = json::array(), us = json::array();
                    for (int e : enc.parts[j].edge_indices) es.push_back(e + 1);
                    for (int u : enc.parts[j].basis_U) us.push_back(u + 1);
                    p["edges"] = es;
                    p["basis"] = us;
                    parts.push_back(p);
                }
                json dims;
                dims["vertices"] = enc.hypergraph.vertex_count;
                dims["edges"] = enc.hypergraph.edges.size();
                dims["source_rows"] = enc.source.rows;
                dims["source_cols"] = enc.source.cols;
                write_file(out_prefix + ".manifest.json", manifest_for(matrix_path, dims, parts).dump(2) + "\n");
                rep.artifacts = {out_prefix + ".hypergraph.json", out_prefix + ".map.txt", out_prefix + ".manifest.json"};
            } else {
                std::cout << hypergraph_to_json(enc.hypergraph);
            }
            rep.print(as_json);
            return 0;
        }
        if (*c_st) {
            Report rep;
            rep.command = "encode-stable";
            rep.add_input(matrix_path);
            StableEncoding enc = encode_stable(read_matrix_file(matrix_path));
            rep.add("rows", static_cast<long>(enc.matrix.rows));
            rep.add("cols", static_cast<long>(enc.matrix.cols));
            if (!out_prefix.empty()) {
                write_file(out_prefix + ".matrix.txt", write_matrix_text(enc.matrix));
                write_file(out_prefix + ".map.txt", map_as_matrix_text(enc.map));
                json parts = json::array();
                for (std::size_t i = 0; i < enc.blocks.size(); ++i) {
                    json p;
                    p["column"] = i + 1;
                    p["first"] = enc.blocks[i].first + 1;
                    p["width"] = enc.blocks[i].second;
                    parts.push_back(p);
                }
                json dims;
                dims["rows"] = enc.matrix.rows;
                dims["cols"] = enc.matrix.cols;
                dims["source_rows"] = enc.source.rows;
                dims["source_cols"] = enc.source.cols;
                write_file(out_prefix + ".manifest.json", manifest_for(matrix_path, dims, parts).dump(2) + "\n");
                rep.artifacts = {out_prefix + ".matrix.txt", out_prefix + ".map.txt", out_prefix + ".manifest.json"};
            } else {
                std::cout << write_matrix_text(enc.matrix);
            }
            rep.print(as_json);
            return 0;
        }
        if (*c_hd) {
            Report rep;
            rep.command = "gadget-hd";
            auto [h, f] = gadget_hd(gadget_d);
            rep.add("vertices", static_cast<long>(h.vertex_count));
            rep.add("edges", static_cast<long>(h.edges.size()));
            rep.add("f-vector", vec_to_string(f));
            if (!out_prefix.empty()) {
                write_file(out_prefix + ".hypergraph.json", hypergraph_to_json(h));
                write_file(out_prefix + ".fvector.txt", vectors_as_matrix_text({f}, static_cast<int>(f.size())));
                rep.artifacts = {out_prefix + ".hypergraph.json", out_prefix + ".fvector.txt"};
            } else {
                std::cout << hypergraph_to_json(h);
            }
            rep.print(as_json);
            return 0;
        }
        if (*c_law) {
            Report rep;
            rep.command = "lawrence";
            rep.add_input(a_path);
            rep.add_input(c_path);
            IntegerMatrix Am = read_matrix_file(a_path);
            std::vector<IVec> a_list;
            for (int i = 0; i < Am.rows; ++i) a_list.push_back(Am.row(i));
            std::vector<IVec> c_list;
            std::istringstream cin_(read_file(c_path));
            std::string line;
            while (std::getline(cin_, line)) {
                std::istringstream ls(line);
                IVec c;
                std::string tok;
                while (ls >> tok) c.push_back(Int(tok));
                if (!c.empty()) c_list.push_back(std::move(c));
            }
            auto [A, dec] = generalized_lawrence(a_list, c_list);
            rep.add("rows", static_cast<long>(A.rows));
            rep.add("cols", static_cast<long>(A.cols));
            std::cout << write_matrix_text(A);
            if (!out_prefix.empty()) {
                write_file(out_prefix + ".matrix.txt", write_matrix_text(A));
                write_file(out_prefix + ".parts.txt", decomposition_report(dec));
                rep.artifacts = {out_prefix + ".matrix.txt", out_prefix + ".parts.txt"};
            }
            rep.print(as_json);
            return 0;
        }
        if (*c_uni) {
            Report rep;
            rep.command = "universality";
            rep.add_input(vectors_path);
            std::vector<IVec> d_list;
            std::istringstream din(read_file(vectors_path));
            std::string line;
            while (std::getline(din, line)) {
                std::istringstream ls(line);
                IVec d;
                std::string tok;
                while (ls >> tok) d.push_back(Int(tok));
                if (!d.empty()) d_list.push_back(std::move(d));
            }
            UniversalityGadget g = universality_gadget(d_list);
            rep.add("vertices", static_cast<long>(g.encoding.hypergraph.vertex_count));
            rep.add("edges", static_cast<long>(g.encoding.hypergraph.edges.size()));
            std::string msg;
            bool ok = universality_verify(g, budget, &msg);
            rep.add("universality", ok ? "ok" : ("FAILED: " + msg));
            if (!out_prefix.empty()) {
                write_file(out_prefix + ".hypergraph.json", hypergraph_to_json(g.encoding.hypergraph));
                write_file(out_prefix + ".map.txt", map_as_matrix_text(g.encoding.map));
                write_file(out_prefix + ".lawrence.txt", write_matrix_text(g.lawrence));
                rep.artifacts = {out_prefix + ".hypergraph.json", out_prefix + ".map.txt", out_prefix + ".lawrence.txt"};
            }
            rep.print(as_json);
            return ok ? 0 : 1;
        }
        if (*c_vb) {
            Report rep;
            rep.command = "verify-bijection";
            rep.add_input(matrix_path);
            rep.add_input(hyper_path);
            rep.add_input(map_path);
            IntegerMatrix A = read_matrix_file(matrix_path);
            Hypergraph h = read_hypergraph_file(hyper_path);
            EncodingMap map = map_from_matrix(read_matrix_file(map_path));
            BasisSet grA = graver(A, budget);
            BasisSet grH = graver(incidence_matrix(h), budget);
            bool sizes = grA.vectors.size() == grH.vectors.size();
            bool mapped = true, norms = true;
            for (const IVec& g : grA.vectors) {
                IVec img = sign_canonical(b_map(map, g));
                if (!grH.contains(img)) mapped = false;
                if (one_norm(g) > one_norm(img)) norms = false;
            }
            std::ostringstream line;
            line << grA.vectors.size() << (sizes ? " == " : " != ") << grH.vectors.size() << ", "
                 << (mapped ? "all mapped" : "NOT all mapped") << ", "
                 << (norms ? "1-norm OK" : "1-norm VIOLATED");
            rep.add("verdict", line.str());
            rep.print(as_json);
            return (sizes && mapped && norms) ? 0 : 1;
        }
        if (*c_vp) {
            Report rep;
            rep.command = "verify-partition";
            bool ok = false;
            if (!matrix_path.empty()) {
                rep.add_input(matrix_path);
                rep.add_input(parts_path);
                IntegerMatrix M = read_matrix_file(matrix_path);
                json pj = json::parse(read_file(parts_path));
                std::vector<std::vector<int>> parts;
                for (const auto& p : pj) {
                    std::vector<int> cols;
                    for (const auto& c : p) cols.push_back(c.get<int>() - 1);
                    parts.push_back(std::move(cols));
                }
                ok = subbouquet_verify(M, parts);
            } else if (!hyper_path.empty()) {
                rep.add_input(hyper_path);
                rep.add_input(parts_path);
                Hypergraph h = read_hypergraph_file(hyper_path);
                json pj = json::parse(read_file(parts_path));
                std::vector<std::pair<std::vector<int>, std::vector<int>>> parts;
                for (const auto& p : pj) {
                    std::vector<int> U, E;
                    for (const auto& v : p.at("basis")) U.push_back(v.get<int>() - 1);
                    for (const auto& e : p.at("edges")) E.push_back(e.get<int>() - 1);
                    parts.emplace_back(U, E);
                }
                ok = verify_bwb_partition(h, parts);
            } else {
                throw std::invalid_argument("verify-partition: need --matrix or --hypergraph");
            }
            rep.add("partition", ok ? "valid" : "invalid");
            rep.print(as_json);
            return ok ? 0 : 1;
        }
        throw std::invalid_argument("no subcommand");
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
