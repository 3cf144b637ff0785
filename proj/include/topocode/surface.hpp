#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "topocode/chain.hpp"

namespace topocode {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// A dart is one end of one edge: 2*edge + end, where end 0 is the 'a'
/// endpoint and end 1 the 'b' endpoint. A loop owns two distinct darts at
/// the same vertex.
using Dart = std::uint32_t;

constexpr Dart make_dart(EdgeId e, int end) { return 2 * e + static_cast<Dart>(end); }
constexpr EdgeId dart_edge(Dart d) { return d >> 1; }
constexpr int dart_end(Dart d) { return d & 1; }
constexpr Dart opposite(Dart d) { return d ^ 1; }

struct Edge {
    VertexId a = 0;
    VertexId b = 0;
    bool twist = false;

    bool is_loop() const { return a == b; }
    bool operator==(const Edge&) const = default;
};

/// A graph together with a signed rotation system: a cyclic order of darts
/// at each vertex plus a twist sign per edge. This data determines a cell
/// embedding of the graph in a closed surface, orientable or not.
class EmbeddedGraph {
public:
    EmbeddedGraph(VertexId vertex_count, std::vector<Edge> edges,
                  std::vector<std::vector<Dart>> rotations);

    VertexId vertex_count() const { return vertex_count_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
    const std::vector<Dart>& rotation(VertexId v) const { return rotations_[v]; }

    VertexId dart_vertex(Dart d) const {
        const Edge& e = edges_[dart_edge(d)];
        return dart_end(d) == 0 ? e.a : e.b;
    }
    std::size_t degree(VertexId v) const { return rotations_[v].size(); }

    Dart rotation_next(Dart d) const;
    Dart rotation_prev(Dart d) const;

    bool is_connected() const;

    /// True iff some assignment of local vertex orientations removes every
    /// effective twist (checked by propagating signs over a spanning tree).
    bool is_orientable() const;

    bool operator==(const EmbeddedGraph&) const = default;

private:
    VertexId vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Dart>> rotations_;
    std::vector<std::size_t> dart_index_;  // position of each dart in its rotation
};

/// Classification data of the surface carrying an embedding.
struct SurfaceInfo {
    int chi = 0;
    bool orientable = true;
    int boundary_components = 0;

    bool closed() const { return boundary_components == 0; }

    /// Genus of the closed surface obtained by capping any boundary circles:
    /// handles if orientable, crosscaps if not.
    int genus() const;

    /// For a planar surface with boundary, the number of holes h of the
    /// h-holed disc D_h, i.e. 1 - chi. Empty otherwise.
    std::optional<int> planar_holes() const;

    std::string to_string() const;
};

/// An embedded graph together with its traced faces and an optional set of
/// faces marked open (deleted disc interiors, forming the boundary).
class CellEmbedding {
public:
    const EmbeddedGraph& graph() const { return graph_; }

    std::size_t face_count() const { return face_darts_.size(); }
    const std::vector<Dart>& face(std::size_t f) const { return face_darts_[f]; }
    const std::vector<std::uint8_t>& face_flags(std::size_t f) const { return face_flags_[f]; }
    std::size_t face_degree(std::size_t f) const { return face_darts_[f].size(); }

    const std::vector<std::uint32_t>& open_faces() const { return open_faces_; }
    bool is_open(std::size_t f) const;
    std::size_t interior_face_count() const { return face_count() - open_faces_.size(); }
    std::vector<std::uint32_t> interior_face_ids() const;

    /// V - E + F counting interior faces only.
    int euler_characteristic() const;

    SurfaceInfo surface_info() const;

    /// Same embedding with the given faces marked open. Indices refer to the
    /// canonical trace order. Throws on out-of-range or duplicate indices.
    CellEmbedding with_open_faces(std::vector<std::uint32_t> open) const;

    bool operator==(const CellEmbedding&) const = default;

private:
    friend CellEmbedding trace_faces(const EmbeddedGraph& g);

    EmbeddedGraph graph_{0, {}, {}};
    std::vector<std::vector<Dart>> face_darts_;
    std::vector<std::vector<std::uint8_t>> face_flags_;
    std::vector<std::uint32_t> open_faces_;
};

/// Traces the faces of a signed rotation system. Faces are the orbits of the
/// next-dart rule below, paired up between the two traversal senses; they are
/// numbered in order of their smallest dart. Throws if the graph is not
/// connected.
///
/// Rule: walk along a dart to the far end, flip the local orientation flag
/// when the edge is twisted, then continue with the next dart in the
/// rotation there (previous dart when the flag is reversed).
CellEmbedding trace_faces(const EmbeddedGraph& g);

/// Dual embedding of a closed surface: one vertex per face, one edge per
/// edge. Throws for surfaces with boundary.
CellEmbedding dual_embedding(const CellEmbedding& c);

int euler_characteristic(const CellEmbedding& c);

/// Connected sum along edges: each surface is cut open along the chosen edge
/// (the edge is doubled into a bigon whose interior is removed) and the two
/// bigon boundaries are identified. The identification is picked from a fixed
/// list of candidate orientations and every postcondition (connectivity,
/// V, E, F, Euler characteristic, orientability) is machine-checked.
CellEmbedding connected_sum(const CellEmbedding& c1, EdgeId e1, const CellEmbedding& c2,
                            EdgeId e2);

/// Doubles edge e: adds a parallel copy so that the two copies bound a new
/// bigon face. Returns the new graph, the new edge id, and asserts the bigon.
EmbeddedGraph insert_parallel_edge(const EmbeddedGraph& g, EdgeId e);

/// Parse failure for the embedding text format, carrying a 1-based line.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParsedEmbedding {
    CellEmbedding embedding;
    std::map<std::string, std::string> metadata;  // from leading "# key: value" lines
};

/// Line-oriented text format:
///   vertices <V>
///   edge <id> <va> <vb> [twist]
///   rotation <v>: <darts as edgeid.a / edgeid.b>
///   open-faces: <face indices under the canonical trace>
/// Comment lines start with '#'; "# key: value" comments are returned as
/// metadata. Serialization is canonical, so parse/serialize round-trip
/// bit-exactly.
ParsedEmbedding parse_embedding(std::istream& in);
ParsedEmbedding parse_embedding(const std::string& text);
std::string serialize_embedding(const CellEmbedding& c,
                                const std::map<std::string, std::string>& metadata = {});

/// True iff a and b are isomorphic as abstract multigraphs under the identity
/// bijection on edge ids composed with some vertex bijection.
bool isomorphic_with_edge_identity(const EmbeddedGraph& a, const EmbeddedGraph& b);

/// Backtracking multigraph isomorphism for small instances.
bool graphs_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b);

}  // namespace topocode
