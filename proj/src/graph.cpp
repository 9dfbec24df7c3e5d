#include "tdc/graph.hpp"

#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tdc {

std::string_view to_string(ResidueModel m) {
    switch (m) {
        case ResidueModel::Torsion: return "torsion";
        case ResidueModel::Complex: return "complex";
        case ResidueModel::Explicit: return "explicit";
    }
    return "?";
}

ResidueModel parse_residue_model(std::string_view text) {
    if (text == "torsion") return ResidueModel::Torsion;
    if (text == "complex") return ResidueModel::Complex;
    if (text == "explicit") return ResidueModel::Explicit;
    throw std::invalid_argument("unknown residue model '" + std::string(text) + "'");
}

InputError::InputError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

bool is_valid_vertex_id(std::string_view id) {
    return !id.empty() && id.find_first_of(":=#") == std::string_view::npos;
}

bool is_valid_edge_id(std::string_view id) {
    return !id.empty() && id.find_first_of(":=#@") == std::string_view::npos;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

AugmentedMetricGraph::AugmentedMetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw InputError(0, "graph has no vertices");

    std::set<std::string_view> ids;
    for (const auto& v : vertices_) {
        if (!is_valid_vertex_id(v.id)) throw InputError(0, "invalid vertex id '" + v.id + "'");
        if (!ids.insert(v.id).second) throw InputError(0, "duplicate id '" + v.id + "'");
        if (v.genus == 0 && v.picrank != 0)
            throw InputError(0, "picrank on genus-0 vertex '" + v.id + "'");
    }
    for (const auto& e : edges_) {
        if (!is_valid_edge_id(e.id)) throw InputError(0, "invalid edge id '" + e.id + "'");
        if (!ids.insert(e.id).second) throw InputError(0, "duplicate id '" + e.id + "'");
        if (e.tail >= vertices_.size() || e.head >= vertices_.size())
            throw InputError(0, "edge '" + e.id + "' has an unknown endpoint");
        if (sgn(e.length) <= 0) throw InputError(0, "non-positive length on edge '" + e.id + "'");
    }

    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::size_t components = vertices_.size();
    for (const auto& e : edges_) {
        auto a = find_root(parent, e.tail), b = find_root(parent, e.head);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    if (components != 1) throw InputError(0, "disconnected graph (" + std::to_string(components) + " components)");
}

std::optional<std::size_t> AugmentedMetricGraph::find_vertex(std::string_view id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> AugmentedMetricGraph::find_edge(std::string_view id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return i;
    return std::nullopt;
}

std::size_t AugmentedMetricGraph::vertex_index(std::string_view id) const {
    if (auto i = find_vertex(id)) return *i;
    throw std::invalid_argument("unknown vertex '" + std::string(id) + "'");
}

std::size_t AugmentedMetricGraph::edge_index(std::string_view id) const {
    if (auto i = find_edge(id)) return *i;
    throw std::invalid_argument("unknown edge '" + std::string(id) + "'");
}

std::size_t AugmentedMetricGraph::valence(std::size_t v) const {
    std::size_t n = 0;
    for (const auto& e : edges_) n += (e.tail == v) + (e.head == v);
    return n;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

unsigned parse_unsigned(std::string_view s, std::size_t line, std::string_view what) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InputError(line, "invalid " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

// key=value; returns nullopt on other shapes
std::optional<std::pair<std::string_view, std::string_view>> split_key(std::string_view token) {
    auto eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0) return std::nullopt;
    return std::pair{token.substr(0, eq), token.substr(eq + 1)};
}

}  // namespace

Skeleton parse_skeleton(std::string_view text) {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::unordered_map<std::string, std::size_t> vertex_ids;
    std::set<std::string> all_ids;
    std::optional<ResidueModel> model;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = split_tokens(line);
        if (tok.empty()) continue;

        if (tok[0] == "residue") {
            if (tok.size() != 2) throw InputError(line_no, "expected 'residue <torsion|complex|explicit>'");
            if (model) throw InputError(line_no, "residue model given twice");
            try {
                model = parse_residue_model(tok[1]);
            } catch (const std::invalid_argument& e) {
                throw InputError(line_no, e.what());
            }
        } else if (tok[0] == "vertex") {
            if (tok.size() < 2) throw InputError(line_no, "expected 'vertex <id> [genus=g] [picrank=r]'");
            Vertex v;
            v.id = std::string(tok[1]);
            if (!is_valid_vertex_id(v.id)) throw InputError(line_no, "invalid vertex id '" + v.id + "'");
            for (std::size_t i = 2; i < tok.size(); ++i) {
                auto kv = split_key(tok[i]);
                if (!kv) throw InputError(line_no, "expected key=value, got '" + std::string(tok[i]) + "'");
                if (kv->first == "genus") v.genus = parse_unsigned(kv->second, line_no, "genus");
                else if (kv->first == "picrank") v.picrank = parse_unsigned(kv->second, line_no, "picrank");
                else throw InputError(line_no, "unknown vertex attribute '" + std::string(kv->first) + "'");
            }
            if (!all_ids.insert(v.id).second) throw InputError(line_no, "duplicate id '" + v.id + "'");
            if (v.genus == 0 && v.picrank != 0) throw InputError(line_no, "picrank on genus-0 vertex '" + v.id + "'");
            vertex_ids.emplace(v.id, vertices.size());
            vertices.push_back(std::move(v));
        } else if (tok[0] == "edge") {
            if (tok.size() != 5) throw InputError(line_no, "expected 'edge <id> <tail> <head> length=<l>'");
            Edge e;
            e.id = std::string(tok[1]);
            if (!is_valid_edge_id(e.id)) throw InputError(line_no, "invalid edge id '" + e.id + "'");
            for (int k = 0; k < 2; ++k) {
                auto it = vertex_ids.find(std::string(tok[2 + k]));
                if (it == vertex_ids.end())
                    throw InputError(line_no, "unknown vertex '" + std::string(tok[2 + k]) + "' (declare vertices before edges)");
                (k == 0 ? e.tail : e.head) = it->second;
            }
            auto kv = split_key(tok[4]);
            if (!kv || kv->first != "length") throw InputError(line_no, "expected length=<rational>");
            try {
                e.length = parse_rational(kv->second);
            } catch (const std::invalid_argument& err) {
                throw InputError(line_no, err.what());
            }
            if (sgn(e.length) <= 0) throw InputError(line_no, "non-positive length on edge '" + e.id + "'");
            if (!all_ids.insert(e.id).second) throw InputError(line_no, "duplicate id '" + e.id + "'");
            edges.push_back(std::move(e));
        } else {
            throw InputError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
        }
    }
    return Skeleton{AugmentedMetricGraph(std::move(vertices), std::move(edges)), model.value_or(ResidueModel::Torsion)};
}

std::string serialize(const Skeleton& s) {
    std::ostringstream out;
    out << "residue " << to_string(s.model) << '\n';
    const auto& g = s.graph;
    for (const auto& v : g.vertices()) {
        out << "vertex " << v.id << " genus=" << v.genus;
        if (v.picrank) out << " picrank=" << v.picrank;
        out << '\n';
    }
    for (const auto& e : g.edges()) {
        out << "edge " << e.id << ' ' << g.vertices()[e.tail].id << ' ' << g.vertices()[e.head].id
            << " length=" << to_string(e.length) << '\n';
    }
    return out.str();
}

std::size_t betti(const AugmentedMetricGraph& g) { return g.edge_count() + 1 - g.vertex_count(); }

std::vector<std::string> positive_genus_vertices(const AugmentedMetricGraph& g) {
    std::vector<std::string> out;
    for (const auto& v : g.vertices())
        if (v.genus > 0) out.push_back(v.id);
    return out;
}

Dim vertex_rank(const AugmentedMetricGraph& g, std::size_t v, ResidueModel m) {
    const Vertex& vx = g.vertices().at(v);
    switch (m) {
        case ResidueModel::Torsion: return 0;
        case ResidueModel::Complex: return vx.genus > 0 ? Dim::infinite() : Dim(0);
        case ResidueModel::Explicit: return vx.picrank;
    }
    return 0;
}

Dim s_dimension(const AugmentedMetricGraph& g, ResidueModel m) {
    Dim total = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) total += vertex_rank(g, v, m);
    return total;
}

}  // namespace tdc
