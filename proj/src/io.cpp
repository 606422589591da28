#include "hdx/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hdx {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> split(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line, std::size_t col, const std::string& msg) {
    throw Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

// Returns the 1-based column of the first malformed UTF-8 byte, or 0.
std::size_t bad_utf8(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xe ? 3 : (c >> 3) == 0x1e ? 4 : 0;
        if (len == 0 || i + len > s.size()) return i + 1;
        for (std::size_t k = 1; k < len; ++k)
            if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return i + 1;
        i += len;
    }
    return 0;
}

template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        fn(no, line);
    }
}

bool is_comment_or_blank(const std::string& line) {
    const auto p = line.find_first_not_of(" \t");
    return p == std::string::npos || line[p] == '#';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadParam, "cannot write " + path.string());
    out << content;
    if (!out) throw Error(ErrorKind::BadParam, "failed writing " + path.string());
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::BadParam, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Complex parse_complex(const std::string& text, const std::string& source) {
    std::vector<std::vector<std::string>> faces;
    for_each_line(text, [&](std::size_t no, const std::string& line) {
        if (auto col = bad_utf8(line)) parse_error(source, no, col, "invalid UTF-8");
        if (is_comment_or_blank(line)) return;
        std::set<std::string> seen;
        std::vector<std::string> face;
        for (const auto& tok : split(line)) {
            if (tok.text.find('#') != std::string::npos)
                parse_error(source, no, tok.column, "'#' inside a vertex token");
            if (!seen.insert(tok.text).second)
                parse_error(source, no, tok.column, "vertex '" + tok.text + "' repeated in a face");
            face.push_back(tok.text);
        }
        faces.push_back(std::move(face));
    });
    if (faces.empty()) throw Error(ErrorKind::EmptyInput, source + ": no faces");
    return Complex::build(faces);
}

std::vector<int> parse_types(const Complex& X, const std::string& text, const std::string& source) {
    std::vector<int> types(X.num_vertices(), -1);
    for_each_line(text, [&](std::size_t no, const std::string& line) {
        if (is_comment_or_blank(line)) return;
        const auto toks = split(line);
        if (toks.size() != 2)
            parse_error(source, no, toks.size() > 2 ? toks[2].column : line.size() + 1,
                        "expected 'vertex_token type'");
        const auto v = X.find_vertex(toks[0].text);
        if (!v) parse_error(source, no, toks[0].column, "unknown vertex '" + toks[0].text + "'");
        int t = 0;
        const auto& s = toks[1].text;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
        if (ec != std::errc() || ptr != s.data() + s.size() || t < 0)
            parse_error(source, no, toks[1].column, "type must be a non-negative integer");
        auto& slot = types[static_cast<std::size_t>(*v)];
        if (slot >= 0 && slot != t) parse_error(source, no, toks[0].column, "vertex '" + toks[0].text + "' typed twice");
        slot = t;
    });
    for (std::size_t v = 0; v < types.size(); ++v)
        if (types[v] < 0)
            throw Error(ErrorKind::ParseError,
                        source + ": vertex '" + X.vertex_name(static_cast<VertexId>(v)) + "' has no type");
    return types;
}

std::string format_complex(const Complex& X) {
    std::string out = "# d=" + std::to_string(X.dim()) + " vertices=" + std::to_string(X.num_vertices()) +
                      " top_faces=" + std::to_string(X.num_faces(X.dim())) + "\n";
    for (const auto& f : X.top_faces_named()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ' ';
            out += f[i];
        }
        out += '\n';
    }
    return out;
}

std::string format_types(const Complex& X, const std::vector<int>& types) {
    std::string out;
    for (std::size_t v = 0; v < X.num_vertices(); ++v)
        out += X.vertex_name(static_cast<VertexId>(v)) + " " + std::to_string(types.at(v)) + "\n";
    return out;
}

Complex load_complex(const std::filesystem::path& path) { return parse_complex(read_file(path), path.string()); }

void save_complex(const Complex& X, const std::filesystem::path& path) { write_file(path, format_complex(X)); }

std::vector<int> load_types(const Complex& X, const std::filesystem::path& path) {
    return parse_types(X, read_file(path), path.string());
}

void save_types(const Complex& X, const std::vector<int>& types, const std::filesystem::path& path) {
    write_file(path, format_types(X, types));
}

std::filesystem::path types_sidecar(const std::filesystem::path& path) {
    auto p = path;
    p.replace_extension(".types");
    return p;
}

std::optional<std::vector<int>> load_sidecar_types(const Complex& X, const std::filesystem::path& path) {
    const auto side = types_sidecar(path);
    if (side == path || !std::filesystem::exists(side)) return std::nullopt;
    return load_types(X, side);
}

}  // namespace hdx
