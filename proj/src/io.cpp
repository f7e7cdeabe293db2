#include "ppr/io.hpp"

#include <fstream>
#include <sstream>

namespace ppr {

namespace {

// Strips comments/blank lines; yields (line_number, content) pairs.
class LineReader {
public:
    LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            if (raw.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            out = raw;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, source_, line_); }

    std::string expect(const std::string& what) {
        std::string s;
        if (!next(s)) fail("unexpected end of file, expected " + what);
        return s;
    }

    int line() const { return line_; }
    const std::string& source() const { return source_; }

private:
    std::istream& in_;
    std::string source_;
    int line_ = 0;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source) {
    LineReader lr(in, source);
    std::istringstream head(lr.expect("graph header"));
    std::string tag;
    int order = 0;
    long long ecount = 0;
    if (!(head >> tag >> order >> ecount) || tag != "graph")
        lr.fail("expected `graph <order> <edge_count>`");
    if (order < 0 || ecount < 0) lr.fail("negative order or edge count");
    Graph g(order);
    for (long long i = 0; i < ecount; ++i) {
        std::istringstream line(lr.expect("edge line"));
        int u = 0, v = 0;
        if (!(line >> u >> v)) lr.fail("expected `u v`");
        if (u < 0 || v < 0 || u >= order || v >= order) lr.fail("edge references unknown vertex");
        if (u >= v) lr.fail("edges must satisfy u < v");
        if (g.has_edge(u, v)) lr.fail("duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    auto in = open_in(path);
    return read_graph(in, path);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "graph " << g.order << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_graph_file(const Graph& g, const std::string& path) {
    auto out = open_out(path);
    write_graph(g, out);
}

TwoColoring read_coloring(std::istream& in, const Graph& host, const std::string& source) {
    LineReader lr(in, source);
    std::istringstream head(lr.expect("coloring header"));
    std::string tag;
    long long ecount = 0;
    if (!(head >> tag >> ecount) || tag != "coloring")
        lr.fail("expected `coloring <edge_count>`");
    TwoColoring c(host.order);
    for (long long i = 0; i < ecount; ++i) {
        std::istringstream line(lr.expect("colored edge line"));
        int u = 0, v = 0;
        std::string col;
        if (!(line >> u >> v >> col)) lr.fail("expected `u v R|B`");
        if (!host.has_edge(u, v)) lr.fail("colored pair is not an edge of the host");
        if (c.get(u, v)) lr.fail("edge colored twice");
        if (col == "R")
            c.set(u, v, Color::Red);
        else if (col == "B")
            c.set(u, v, Color::Blue);
        else
            lr.fail("color must be R or B");
    }
    if (static_cast<long long>(c.size()) != host.edge_count())
        throw ParseError("coloring is not total on the host", source, lr.line());
    return c;
}

TwoColoring read_coloring_file(const std::string& path, const Graph& host) {
    auto in = open_in(path);
    return read_coloring(in, host, path);
}

void write_coloring(const TwoColoring& c, const Graph& host, std::ostream& out) {
    out << "coloring " << host.edge_count() << "\n";
    for (auto [u, v] : host.edges()) out << u << " " << v << " " << color_char(c.at(u, v)) << "\n";
}

void write_coloring_file(const TwoColoring& c, const Graph& host, const std::string& path) {
    auto out = open_out(path);
    write_coloring(c, host, out);
}

Witness read_witness(std::istream& in, const std::string& source) {
    LineReader lr(in, source);
    std::istringstream head(lr.expect("witness header"));
    std::string tag, col;
    int k = 0;
    long long len = 0;
    if (!(head >> tag >> col >> k >> len) || tag != "witness")
        lr.fail("expected `witness <R|B> <k> <length>`");
    Witness w;
    if (col == "R")
        w.color = Color::Red;
    else if (col == "B")
        w.color = Color::Blue;
    else
        lr.fail("color must be R or B");
    w.power = k;
    for (long long i = 0; i < len; ++i) {
        std::istringstream line(lr.expect("vertex id"));
        int v = 0;
        if (!(line >> v)) lr.fail("expected a vertex id");
        w.vertices.push_back(v);
    }
    return w;
}

Witness read_witness_file(const std::string& path) {
    auto in = open_in(path);
    return read_witness(in, path);
}

void write_witness(const Witness& w, std::ostream& out) {
    out << "witness " << color_char(w.color) << " " << w.power << " " << w.vertices.size() << "\n";
    for (int v : w.vertices) out << v << "\n";
}

void write_witness_file(const Witness& w, const std::string& path) {
    auto out = open_out(path);
    write_witness(w, out);
}

std::vector<std::vector<int>> read_classes(std::istream& in, const std::string& source) {
    LineReader lr(in, source);
    std::vector<std::vector<int>> classes;
    std::string s;
    while (lr.next(s)) {
        std::istringstream line(s);
        std::vector<int> cls;
        int v;
        while (line >> v) cls.push_back(v);
        if (!line.eof()) lr.fail("expected vertex ids");
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<std::vector<int>> read_classes_file(const std::string& path) {
    auto in = open_in(path);
    return read_classes(in, path);
}

}  // namespace ppr
