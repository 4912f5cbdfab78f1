#include "stellar/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "stellar/error.hpp"

namespace stellar {

namespace {

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<Vertex> parse_labels(const std::string& text, const std::string& source,
                                 std::size_t line_no) {
    std::istringstream is(text);
    std::vector<Vertex> labels;
    std::string token;
    while (is >> token) {
        try {
            std::size_t pos = 0;
            const long value = std::stol(token, &pos);
            if (pos != token.size() || value < 1) throw std::invalid_argument(token);
            labels.push_back(static_cast<Vertex>(value));
        } catch (const std::exception&) {
            throw Error(Errc::parse_error, source + ":" + std::to_string(line_no) +
                                               ": bad vertex label '" + token + "'");
        }
    }
    return labels;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::io_error, "cannot read " + path.string());
    }
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(Errc::io_error, "cannot write " + path.string());
    }
    return out;
}

}  // namespace

ParsedComplex read_complex(std::istream& in, const std::string& source) {
    std::vector<Simplex> gens;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        auto labels = parse_labels(body, source, line_no);
        if (labels.empty()) continue;
        try {
            gens.push_back(Simplex(std::move(labels)));
        } catch (const std::exception& e) {
            throw Error(Errc::parse_error,
                        source + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }

    ParsedComplex parsed;
    parsed.complex = Complex(gens);
    if (parsed.complex.size() != gens.size()) {
        const std::size_t dropped = gens.size() - parsed.complex.size();
        parsed.warnings.push_back(source + ": " + std::to_string(dropped) +
                                  " generator(s) cancelled mod 2");
    }
    return parsed;
}

ParsedComplex read_complex_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_complex(in, path.string());
}

void write_complex(std::ostream& out, const Complex& k) {
    for (const Simplex& g : k.generators()) {
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            if (i > 0) out << ' ';
            out << g.vertex(i);
        }
        out << '\n';
    }
}

void write_complex_file(const std::filesystem::path& path, const Complex& k) {
    auto out = open_output(path);
    write_complex(out, k);
}

VertexEquivalence read_equivalence(std::istream& in, const std::string& source) {
    VertexEquivalence eq;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        const auto labels = parse_labels(body, source, line_no);
        if (labels.size() != 2) {
            throw Error(Errc::parse_error, source + ":" + std::to_string(line_no) +
                                               ": expected two labels per merge");
        }
        eq.merge(labels[0], labels[1]);
    }
    return eq;
}

VertexEquivalence read_equivalence_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_equivalence(in, path.string());
}

void write_equivalence(std::ostream& out, const VertexEquivalence& eq) {
    for (const auto& [rep, members] : eq.nontrivial_classes()) {
        for (Vertex v : members) {
            if (v != rep) out << rep << ' ' << v << '\n';
        }
    }
}

void write_equivalence_file(const std::filesystem::path& path, const VertexEquivalence& eq) {
    auto out = open_output(path);
    write_equivalence(out, eq);
}

namespace {

MoveRecord parse_relabel(const std::string& body, const std::string& source,
                         std::size_t line_no) {
    RelabelMove move;
    std::string text = body;
    // Accept both "->" and the UTF-8 arrow.
    for (std::string::size_type pos; (pos = text.find("→")) != std::string::npos;) {
        text.replace(pos, std::string("→").size(), "->");
    }
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto arrow = item.find("->");
        if (arrow == std::string::npos) {
            throw Error(Errc::parse_error, source + ":" + std::to_string(line_no) +
                                               ": bad relabel entry '" + item + "'");
        }
        const auto from = parse_labels(item.substr(0, arrow), source, line_no);
        const auto to = parse_labels(item.substr(arrow + 2), source, line_no);
        if (from.size() != 1 || to.size() != 1) {
            throw Error(Errc::parse_error, source + ":" + std::to_string(line_no) +
                                               ": bad relabel entry '" + item + "'");
        }
        move.mapping[from[0]] = to[0];
    }
    if (move.mapping.empty()) {
        throw Error(Errc::parse_error,
                    source + ":" + std::to_string(line_no) + ": empty relabel");
    }
    return move;
}

}  // namespace

std::vector<MoveRecord> read_trace(std::istream& in, const std::string& source) {
    std::vector<MoveRecord> moves;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream is(body);
        std::string kind;
        is >> kind;
        if (kind == "R") {
            std::string rest;
            std::getline(is, rest);
            moves.push_back(parse_relabel(rest, source, line_no));
            continue;
        }
        if (kind != "S" && kind != "W") {
            throw Error(Errc::parse_error, source + ":" + std::to_string(line_no) +
                                               ": unknown move kind '" + kind + "'");
        }
        std::string vertex_text, semi, rest;
        is >> vertex_text >> semi;
        if (semi != ";") {
            throw Error(Errc::parse_error,
                        source + ":" + std::to_string(line_no) + ": expected ';'");
        }
        std::getline(is, rest);
        const auto vertex = parse_labels(vertex_text, source, line_no);
        auto labels = parse_labels(rest, source, line_no);
        if (vertex.size() != 1 || labels.empty()) {
            throw Error(Errc::parse_error,
                        source + ":" + std::to_string(line_no) + ": malformed move");
        }
        try {
            Simplex at(std::move(labels));
            if (kind == "S") {
                moves.push_back(SubdivideMove{std::move(at), vertex[0]});
            } else {
                moves.push_back(WeldMove{std::move(at), vertex[0]});
            }
        } catch (const std::exception& e) {
            throw Error(Errc::parse_error,
                        source + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return moves;
}

std::vector<MoveRecord> read_trace_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_trace(in, path.string());
}

void write_trace(std::ostream& out, const std::vector<MoveRecord>& moves) {
    for (const MoveRecord& move : moves) {
        out << move_to_string(move) << '\n';
    }
}

void write_trace_file(const std::filesystem::path& path, const std::vector<MoveRecord>& moves) {
    auto out = open_output(path);
    write_trace(out, moves);
}

}  // namespace stellar
