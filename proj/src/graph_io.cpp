#include "betapack/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "betapack/error.hpp"

namespace betapack {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6Max = 126;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
    std::size_t out = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw InputError("line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not a vertex index");
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> declared;
    std::vector<Edge> edges;
    std::size_t max_index_plus_one = 0;
    bool seen_content = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (!seen_content && tokens.size() == 1) {
            declared = parse_index(tokens[0], line_no);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if (tokens.size() != 2) {
            throw InputError("line " + std::to_string(line_no) + ": expected 'u v', got " +
                             std::to_string(tokens.size()) + " tokens");
        }
        const auto u = parse_index(tokens[0], line_no);
        const auto v = parse_index(tokens[1], line_no);
        if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        if (declared && (u >= *declared || v >= *declared)) {
            throw InputError("line " + std::to_string(line_no) + ": vertex index exceeds declared count " +
                             std::to_string(*declared));
        }
        max_index_plus_one = std::max({max_index_plus_one, u + 1, v + 1});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(declared.value_or(max_index_plus_one), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
    if (line.empty()) throw InputError("graph6: empty record");
    if (line.front() == ':' || line.front() == '&') throw InputError("graph6: sparse6/digraph6 records are not supported");
    for (char c : line) {
        const int code = static_cast<unsigned char>(c);
        if (code < kGraph6Bias || code > kGraph6Max) {
            throw InputError("graph6: character code " + std::to_string(code) + " outside 63..126");
        }
    }
    auto sextet = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(line[i]) - kGraph6Bias); };

    std::size_t n = 0;
    std::size_t pos = 0;
    if (sextet(0) < 63) {
        n = sextet(0);
        pos = 1;
    } else if (line.size() >= 2 && sextet(1) < 63) {
        if (line.size() < 4) throw InputError("graph6: truncated vertex count");
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else {
        if (line.size() < 8) throw InputError("graph6: truncated vertex count");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
        pos = 8;
    }

    const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (line.size() - pos < payload) throw InputError("graph6: truncated edge payload");
    if (line.size() - pos > payload) throw InputError("graph6: trailing characters after edge payload");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const auto word = sextet(pos + k / 6);
            if ((word >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    auto put = [&out](std::uint64_t v) { out.push_back(static_cast<char>(v + kGraph6Bias)); };
    if (n < 63) {
        put(n);
    } else if (n < (std::size_t{1} << 18)) {
        out.push_back(static_cast<char>(kGraph6Max));
        for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 0x3F);
    } else {
        out.append(2, static_cast<char>(kGraph6Max));
        for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 0x3F);
    }
    std::uint64_t acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                put(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) put(acc << (6 - filled));
    return out;
}

}  // namespace betapack
