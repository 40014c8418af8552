#include "marvel/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace marvel {

namespace {

struct Row {
    std::size_t line_no;
    std::vector<std::string> fields;
};

std::vector<Row> tokenize(std::istream& in) {
    std::vector<Row> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        Row row{line_no, {}};
        for (std::string tok; ss >> tok;) row.fields.push_back(tok);
        if (!row.fields.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

[[noreturn]] void fail(const Row& row, const std::string& why) {
    throw std::invalid_argument("line " + std::to_string(row.line_no) + ": " + why);
}

int parse_index(const Row& row, const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        fail(row, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(row, "expected an integer, got '" + tok + "'");
    return v;
}

int parse_header(const std::vector<Row>& rows) {
    if (rows.empty()) throw std::invalid_argument("graph file is empty");
    const Row& head = rows.front();
    if (head.fields.size() != 1) fail(head, "first line must hold the vertex count");
    const int p = parse_index(head, head.fields[0]);
    if (p < 0) fail(head, "negative vertex count");
    return p;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    return out;
}

}  // namespace

Dag read_dag(std::istream& in) {
    const auto rows = tokenize(in);
    const int p = parse_header(rows);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const Row& row = rows[i];
        if (row.fields.size() != 2) fail(row, "expected `i j`");
        const int a = parse_index(row, row.fields[0]);
        const int b = parse_index(row, row.fields[1]);
        if (a < 0 || a >= p || b < 0 || b >= p) fail(row, "vertex index out of range");
        edges.emplace_back(a, b);
    }
    return Dag(p, edges);
}

Dag read_dag(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_dag(in);
}

void write_dag(std::ostream& out, const Dag& g) {
    out << g.p() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

void write_dag(const std::filesystem::path& path, const Dag& g) {
    auto out = open_out(path);
    write_dag(out, g);
}

Pdag read_pdag(std::istream& in) {
    const auto rows = tokenize(in);
    const int p = parse_header(rows);
    Pdag g(p);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const Row& row = rows[i];
        if (row.fields.size() != 3) fail(row, "expected `i j d` or `i j u`");
        const int a = parse_index(row, row.fields[0]);
        const int b = parse_index(row, row.fields[1]);
        if (a < 0 || a >= p || b < 0 || b >= p) fail(row, "vertex index out of range");
        if (a == b) fail(row, "self-loop");
        if (g.adjacent(a, b)) fail(row, "pair listed twice");
        if (row.fields[2] == "d")
            g.orient(a, b);
        else if (row.fields[2] == "u")
            g.set_undirected(a, b);
        else
            fail(row, "edge kind must be `d` or `u`");
    }
    return g;
}

Pdag read_pdag(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_pdag(in);
}

void write_pdag(std::ostream& out, const Pdag& g) {
    out << g.p() << '\n';
    for (const auto& [a, b] : g.directed_edges()) out << a << ' ' << b << " d\n";
    for (const auto& [a, b] : g.undirected_edges()) out << a << ' ' << b << " u\n";
}

void write_pdag(const std::filesystem::path& path, const Pdag& g) {
    auto out = open_out(path);
    write_pdag(out, g);
}

}  // namespace marvel
