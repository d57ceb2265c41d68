#include "zk/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zk/errors.hpp"

namespace zk {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer vertex label, got '" + std::string(token) + "'");
    return value;
}

}  // namespace

SimplicialComplex parse_facet_list(std::string_view text) {
    std::vector<std::vector<int>> facets;
    int header_m = -1;
    int max_label = 0;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.starts_with("vertices")) {
            std::string_view rest = trim(line.substr(8));
            if (!rest.starts_with(':')) throw ParseError(line_no, "expected 'vertices: m'");
            if (header_m != -1) throw ParseError(line_no, "duplicate vertices header");
            header_m = parse_int(trim(rest.substr(1)), line_no);
            if (header_m < 1) throw ParseError(line_no, "vertex count must be positive");
            continue;
        }

        std::vector<int> facet;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            if (j > i) {
                const int label = parse_int(line.substr(i, j - i), line_no);
                if (label < 1) {
                    throw VertexOutOfRange("line " + std::to_string(line_no) + ": vertex label " +
                                           std::to_string(label) + " (labels are 1-based)");
                }
                facet.push_back(label);
                max_label = std::max(max_label, label);
            }
            i = j;
        }
        facets.push_back(std::move(facet));
    }

    if (facets.empty()) throw EmptyFacetList("no facets in input");
    return build_complex(header_m == -1 ? max_label : header_m, facets);
}

SimplicialComplex parse_json(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top level must be an object");
    if (!doc.contains("vertices")) throw SchemaError("missing field \"vertices\"");
    if (!doc.contains("facets")) throw SchemaError("missing field \"facets\"");
    if (!doc["vertices"].is_number_integer()) throw SchemaError("\"vertices\" must be an integer");
    if (!doc["facets"].is_array()) throw SchemaError("\"facets\" must be an array");

    const long m = doc["vertices"].get<long>();
    if (m < 1 || m > kMaxVertices) {
        throw VertexOutOfRange("vertex count " + std::to_string(m) + " outside 1.." + std::to_string(kMaxVertices));
    }
    std::vector<std::vector<int>> facets;
    for (const auto& f : doc["facets"]) {
        if (!f.is_array()) throw SchemaError("each facet must be an array");
        std::vector<int> facet;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw SchemaError("vertex labels must be integers");
            const long label = v.get<long>();
            if (label < 1 || label > m) {
                throw VertexOutOfRange("vertex label " + std::to_string(label) + " outside 1.." + std::to_string(m));
            }
            facet.push_back(static_cast<int>(label));
        }
        facets.push_back(std::move(facet));
    }
    return build_complex(static_cast<int>(m), facets);
}

SimplicialComplex parse_complex(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_facet_list(text);
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str());
}

std::string emit_facet_list(const SimplicialComplex& k) {
    std::string out = "vertices: " + std::to_string(k.vertex_count()) + "\n";
    for (const VertexSet& f : k.facets()) {
        bool first = true;
        f.for_each([&](int v) {
            out += (first ? "" : " ") + std::to_string(v + 1);
            first = false;
        });
        out += '\n';
    }
    return out;
}

SimplicialComplex gen_polygon(int m) {
    if (m < 4) throw TooFewVertices("polygon needs at least 4 vertices, got " + std::to_string(m));
    if (m > kMaxVertices) throw BadParameters("polygon exceeds " + std::to_string(kMaxVertices) + " vertices");
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < m; ++i) facets.push_back({i, i + 1});
    facets.push_back({1, m});
    return build_complex(m, facets);
}

SimplicialComplex gen_cyclic_boundary(int m, int d) {
    if (d < 2 || d % 2 != 0) throw BadParameters("cyclic polytope dimension must be even and >= 2, got " +
                                                 std::to_string(d));
    if (m < d + 1 || m > kMaxVertices) {
        throw BadParameters("cyclic polytope C(" + std::to_string(m) + "," + std::to_string(d) +
                            ") needs d+1 <= m <= " + std::to_string(kMaxVertices));
    }
    std::vector<VertexSet> facets;
    for_each_k_subset(VertexSet::range(m), d, [&](VertexSet s) {
        // Gale evenness: between any two non-members lie evenly many members.
        int previous_gap = -1;
        int between = 0;
        bool even = true;
        for (int v = 0; v < m && even; ++v) {
            if (s.contains(v)) {
                ++between;
            } else {
                if (previous_gap >= 0 && between % 2 != 0) even = false;
                previous_gap = v;
                between = 0;
            }
        }
        if (even) facets.push_back(s);
    });
    return SimplicialComplex::build(m, std::move(facets));
}

SimplicialComplex gen_simplex_boundary(int m) {
    if (m < 2 || m > kMaxVertices) throw BadParameters("simplex boundary needs 2 <= m <= " + std::to_string(kMaxVertices));
    std::vector<VertexSet> facets;
    for (int v = 0; v < m; ++v) facets.push_back(VertexSet::range(m) - VertexSet::singleton(v));
    return SimplicialComplex::build(m, std::move(facets));
}

std::string content_hash(const SimplicialComplex& k) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : emit_facet_list(k)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace zk
