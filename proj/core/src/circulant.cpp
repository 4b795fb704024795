#include "andrasfai/circulant.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "andrasfai/errors.hpp"

namespace andrasfai {

ConnectionSet::ConnectionSet(std::size_t n, std::vector<std::size_t> members)
    : n_(n), members_(std::move(members)) {
    if (n_ < 2) {
        throw ValidationError("connection set: group order must be at least 2, got " + std::to_string(n_));
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (std::size_t s : members_) {
        if (s == 0 || s >= n_) {
            throw ValidationError("connection set: residue " + std::to_string(s) + " is outside 1.." +
                                  std::to_string(n_ - 1));
        }
    }
    for (std::size_t s : members_) {
        if (!contains(n_ - s)) {
            throw ValidationError("connection set: residue " + std::to_string(s) + " has negation " +
                                  std::to_string(n_ - s) + " missing (not closed under negation mod " +
                                  std::to_string(n_) + ")");
        }
    }
}

bool ConnectionSet::contains(std::size_t residue) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), residue);
}

ConnectionSet andrasfai_connection_set(std::size_t k) {
    if (k == 0) {
        throw InvalidParameter("andrasfai: k must be at least 1");
    }
    const std::size_t n = 3 * k - 1;
    std::vector<std::size_t> members;
    members.reserve(k);
    for (std::size_t x = 1; x < n; x += 3) {
        members.push_back(x);
    }
    return ConnectionSet(n, std::move(members));
}

CirculantGraph::CirculantGraph(ConnectionSet connection, std::optional<std::size_t> k_param)
    : connection_(std::move(connection)), k_param_(k_param) {}

bool CirculantGraph::adjacent(std::size_t u, std::size_t v) const {
    const std::size_t order = n();
    if (u >= order || v >= order) {
        throw IndexError("vertex out of range");
    }
    return connection_.contains((v + order - u) % order);
}

std::vector<std::uint8_t> CirculantGraph::first_row() const {
    std::vector<std::uint8_t> row(n(), 0);
    for (std::size_t s : connection_.members()) {
        row[s] = 1;
    }
    return row;
}

std::vector<Edge> CirculantGraph::edges() const {
    const std::size_t order = n();
    std::vector<Edge> out;
    out.reserve(order * degree() / 2);
    for (std::size_t u = 0; u < order; ++u) {
        // v = u + s for s in the (sorted) set; keep v > u, which means s < order - u.
        for (std::size_t s : connection_.members()) {
            if (s < order - u) {
                out.emplace_back(u, u + s);
            }
        }
    }
    return out;
}

CirculantGraph build_circulant(std::size_t n, const ConnectionSet& connection) {
    if (connection.n() != n) {
        throw ValidationError("build_circulant: connection set is over Z_" + std::to_string(connection.n()) +
                              " but n = " + std::to_string(n));
    }
    return CirculantGraph(connection);
}

CirculantGraph andrasfai_graph(std::size_t k) {
    return CirculantGraph(andrasfai_connection_set(k), k);
}

bool AdjacencyMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

AdjacencyMatrix adjacency_matrix(const CirculantGraph& g) {
    const std::size_t n = g.n();
    AdjacencyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s : g.connection().members()) {
            m(i, (i + s) % n) = 1;
        }
    }
    return m;
}

bool is_connected(const CirculantGraph& g) {
    const std::size_t n = g.n();
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> frontier;
    seen[0] = true;
    frontier.push(0);
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t s : g.connection().members()) {
            const std::size_t v = (u + s) % n;
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == n;
}

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "dot") return GraphFormat::dot;
    if (name == "edge-list") return GraphFormat::edge_list;
    if (name == "json") return GraphFormat::json;
    throw InvalidParameter("unknown graph format '" + std::string(name) + "'");
}

namespace {

std::string graph_name(const CirculantGraph& g) {
    if (g.k_param()) {
        return "andrasfai_" + std::to_string(*g.k_param());
    }
    return "circulant_" + std::to_string(g.n());
}

}  // namespace

std::string export_graph(const CirculantGraph& g, GraphFormat format) {
    const auto edges = g.edges();
    std::ostringstream out;
    switch (format) {
        case GraphFormat::dot:
            out << "graph " << graph_name(g) << " {\n";
            if (edges.empty()) {
                for (std::size_t v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
            }
            for (const auto& [u, v] : edges) out << "  " << u << " -- " << v << ";\n";
            out << "}\n";
            break;
        case GraphFormat::edge_list: {
            std::string text;
            text.reserve(edges.size() * 12);
            char buf[48];
            for (const auto& [u, v] : edges) {
                char* p = std::to_chars(buf, buf + 20, u).ptr;
                *p++ = ' ';
                p = std::to_chars(p, p + 20, v).ptr;
                *p++ = '\n';
                text.append(buf, p);
            }
            return text;
        }
        case GraphFormat::json: {
            nlohmann::json doc;
            doc["n"] = g.n();
            doc["connection"] = std::vector<std::size_t>(g.connection().members().begin(),
                                                         g.connection().members().end());
            auto& list = doc["edges"] = nlohmann::json::array();
            for (const auto& [u, v] : edges) list.push_back({u, v});
            out << doc.dump() << '\n';
            break;
        }
    }
    return out.str();
}

CirculantGraph parse_edge_list(std::string_view text, std::size_t n) {
    std::vector<Edge> parsed;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        const auto bad_line = [&] {
            return ValidationError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        };
        std::size_t fields[2] = {0, 0};
        const char* p = line.data();
        const char* const stop = line.data() + line.size();
        for (auto& f : fields) {
            while (p != stop && (*p == ' ' || *p == '\t')) ++p;
            const auto [next, ec] = std::from_chars(p, stop, f);
            if (ec != std::errc{}) throw bad_line();
            p = next;
        }
        while (p != stop && (*p == ' ' || *p == '\t')) ++p;
        if (p != stop) throw bad_line();

        const auto [u, v] = fields;
        if (u >= n || v >= n || u == v) {
            throw ValidationError("edge list line " + std::to_string(line_no) + ": invalid edge " +
                                  std::to_string(u) + " " + std::to_string(v));
        }
        parsed.emplace_back(std::min(u, v), std::max(u, v));
    }

    std::vector<std::size_t> members;
    for (const auto& [u, v] : parsed) {
        if (u == 0) {
            members.push_back(v);
            members.push_back(n - v);
        }
    }
    CirculantGraph g(ConnectionSet(n, std::move(members)));

    std::sort(parsed.begin(), parsed.end());
    if (parsed != g.edges()) {
        throw ValidationError("edge list does not describe a circulant graph on " + std::to_string(n) +
                              " vertices");
    }
    return g;
}

}  // namespace andrasfai
