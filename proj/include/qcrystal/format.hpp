#pragma once

// Text literals, DOT and JSON renderings.
//
// Literals:
//   word       "1211"           bare digits when rank <= 9
//              "10.3.12"        '.'-separated integers when rank > 9
//              "-"              the empty word
//   tableau    "211/1"          rows top to bottom joined by '/'; leading
//                               ':' shift markers are ignored and ',' is
//                               accepted as a row separator when rank <= 9
//              "-"              the empty tableau
//   partition  "3,1"            comma-separated parts; "0" is empty

#include <nlohmann/json.hpp>
#include <sstream>
#include <string_view>

#include "decompose.hpp"

namespace qcrystal {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline int parse_int(std::string_view token, std::string_view what) {
    if (token.empty() || token.size() > 6 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("bad " + std::string(what) + " '" + std::string(token) + "'");
    }
    return std::stoi(std::string(token));
}

inline bool is_empty_literal(std::string_view text) { return text.empty() || text == "-"; }

}  // namespace detail

inline Word parse_word(int rank, std::string_view text) {
    check_rank(rank);
    Word w(rank);
    if (detail::is_empty_literal(text)) return w;
    std::vector<int> values;
    if (rank > 9 || text.find('.') != std::string_view::npos) {
        for (auto token : detail::split(text, '.')) values.push_back(detail::parse_int(token, "letter"));
    } else {
        for (char c : text) values.push_back(detail::parse_int(std::string_view(&c, 1), "letter"));
    }
    for (int x : values) {
        if (x < 1 || x > rank) {
            throw ParseError("letter " + std::to_string(x) + " out of range for rank " + std::to_string(rank));
        }
        w.push_back(static_cast<Letter>(x));
    }
    return w;
}

inline std::string format_word(const Word& w) {
    if (w.empty()) return "-";
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w.rank() > 9 && p > 0) out += '.';
        out += std::to_string(w[p]);
    }
    return out;
}

inline StrictPartition parse_partition(std::string_view text) {
    if (text.empty() || text == "0" || text == "-") return {};
    std::vector<int> parts;
    for (auto token : detail::split(text, ',')) parts.push_back(detail::parse_int(token, "part"));
    try {
        return StrictPartition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw ParseError("'" + std::string(text) + "' is not a strict partition");
    }
}

inline std::string format_partition(const StrictPartition& p) {
    if (p.empty()) return "0";
    std::string out;
    for (int k = 1; k <= p.length(); ++k) {
        if (k > 1) out += ',';
        out += std::to_string(p.part(k));
    }
    return out;
}

inline ShiftedTableau parse_tableau(int rank, std::string_view text) {
    check_rank(rank);
    if (detail::is_empty_literal(text)) return ShiftedTableau(rank);
    char sep = '/';
    if (rank <= 9 && text.find('/') == std::string_view::npos) sep = ',';
    std::vector<Word> rows;
    for (auto token : detail::split(text, sep)) {
        while (!token.empty() && token.front() == ':') token.remove_prefix(1);
        if (token.empty()) throw ParseError("empty row in tableau '" + std::string(text) + "'");
        rows.push_back(parse_word(rank, token));
    }
    try {
        return ShiftedTableau(rank, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline std::string format_tableau(const ShiftedTableau& t) {
    if (t.empty()) return "-";
    std::string out;
    for (int k = 1; k <= t.num_rows(); ++k) {
        if (k > 1) out += '/';
        out += format_word(t.row(k));
    }
    return out;
}

inline std::string format_weight(const WeightVec& mu) {
    std::string out = "(";
    for (int j = 1; j <= mu.rank(); ++j) {
        if (j > 1) out += ',';
        out += std::to_string(mu[j]);
    }
    return out + ")";
}

// "2" for even labels; odd labels carry a combining overline, or a '~'
// suffix in ASCII mode.
inline std::string format_label(OperatorLabel label, bool ascii = false) {
    std::string out = std::to_string(label.index);
    if (label.is_odd()) out += ascii ? "~" : "\xCC\x85";
    return out;
}

inline std::string vertex_literal(const CrystalGraph& g, std::size_t v) {
    return g.shape() ? format_tableau(g.tableau(v)) : format_word(g.vertex(v));
}

struct DotOptions {
    bool ascii = false;
    std::string name = "crystal";
};

// Nodes in canonical (lexicographic reading word) order, edges grouped by
// source in the same order.
inline std::string to_dot(const CrystalGraph& g, const DotOptions& options = {}) {
    std::ostringstream out;
    out << "digraph \"" << options.name << "\" {\n";
    out << "  node [shape=box];\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out << "  \"" << format_word(g.vertex(v)) << "\" [label=\"" << vertex_literal(g, v) << "\"];\n";
    }
    for (const CrystalEdge& e : g.edges()) {
        out << "  \"" << format_word(g.vertex(e.source)) << "\" -> \"" << format_word(g.vertex(e.target))
            << "\" [label=\"" << format_label(e.label, options.ascii) << "\"";
        if (e.label.is_odd()) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string to_text(const CrystalGraph& g, bool ascii = false) {
    std::ostringstream out;
    out << "vertices " << g.size() << "\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out << vertex_literal(g, v) << " " << format_weight(weight(g.vertex(v))) << "\n";
    }
    out << "edges " << g.edges().size() << "\n";
    for (const CrystalEdge& e : g.edges()) {
        out << vertex_literal(g, e.source) << " -" << format_label(e.label, ascii) << "-> "
            << vertex_literal(g, e.target) << "\n";
    }
    return out.str();
}

inline constexpr std::string_view crystal_format_tag = "qcrystal.crystal/1";
inline constexpr std::string_view lr_format_tag = "qcrystal.lr/1";
inline constexpr std::string_view insert_format_tag = "qcrystal.insert/1";
inline constexpr std::string_view hwv_format_tag = "qcrystal.hwv/1";

inline nlohmann::json partition_json(const StrictPartition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); }

inline nlohmann::json to_json(const CrystalGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto wt = weight(g.vertex(v));
        vertices.push_back({{"id", v},
                            {"literal", vertex_literal(g, v)},
                            {"word", format_word(g.vertex(v))},
                            {"weight", std::vector<int>(wt.counts().begin(), wt.counts().end())}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const CrystalEdge& e : g.edges()) {
        edges.push_back({{"source", e.source}, {"target", e.target}, {"label", format_label(e.label, true)}});
    }
    nlohmann::json out = {{"format", crystal_format_tag}, {"rank", g.rank()}};
    out["shape"] = g.shape() ? partition_json(*g.shape()) : nlohmann::json(nullptr);
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

}  // namespace qcrystal
