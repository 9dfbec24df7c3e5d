#pragma once

#include "tdc/dim.hpp"
#include "tdc/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tdc {

/// How residue curves of positive genus contribute to S_X.
///   Torsion:  residue field is an algebraic closure of a finite field; Pic^0 is torsion.
///   Complex:  residue field C; every positive-genus component has Pic^0 (x) R of infinite dimension.
///   Explicit: each vertex contributes its `picrank` datum.
enum class ResidueModel { Torsion, Complex, Explicit };

std::string_view to_string(ResidueModel m);
ResidueModel parse_residue_model(std::string_view text);

struct Vertex {
    std::string id;
    unsigned genus = 0;
    unsigned picrank = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;
    Rational length;

    bool is_loop() const { return tail == head; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Input error with the 1-based line it was found on (0 when it concerns the
/// whole input, e.g. connectivity).
class InputError : public std::runtime_error {
public:
    InputError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Dual graph of a semistable model: vertices carry the genus of their
/// component, edges carry positive lengths. Loops and parallel edges are
/// allowed. Immutable once constructed; the constructor validates.
class AugmentedMetricGraph {
public:
    AugmentedMetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::optional<std::size_t> find_vertex(std::string_view id) const;
    std::optional<std::size_t> find_edge(std::string_view id) const;
    std::size_t vertex_index(std::string_view id) const;  // throws std::invalid_argument
    std::size_t edge_index(std::string_view id) const;    // throws std::invalid_argument

    /// Number of edge ends at v; a loop counts twice.
    std::size_t valence(std::size_t v) const;

    friend bool operator==(const AugmentedMetricGraph&, const AugmentedMetricGraph&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

struct Skeleton {
    AugmentedMetricGraph graph;
    ResidueModel model = ResidueModel::Torsion;

    friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Reads the line-oriented skeleton format:
///
///     residue torsion            # or complex | explicit
///     vertex v1 genus=0
///     vertex v2 genus=1 picrank=2
///     edge e1 v1 v2 length=3/2
///
/// `residue` may be omitted (torsion). Throws InputError.
Skeleton parse_skeleton(std::string_view text);
std::string serialize(const Skeleton& s);

/// First Betti number E - V + 1 of a connected graph.
std::size_t betti(const AugmentedMetricGraph& g);

/// Ids of the vertices of positive genus, in input order.
std::vector<std::string> positive_genus_vertices(const AugmentedMetricGraph& g);

/// Contribution of one vertex to dim S_X under the model.
Dim vertex_rank(const AugmentedMetricGraph& g, std::size_t v, ResidueModel m);

/// dim S_X: sum of vertex ranks.
Dim s_dimension(const AugmentedMetricGraph& g, ResidueModel m);

bool is_valid_vertex_id(std::string_view id);
bool is_valid_edge_id(std::string_view id);

}  // namespace tdc
