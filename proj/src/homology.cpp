#include "topocode/homology.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace topocode {

BitMatrix vertex_edge_incidence(const EmbeddedGraph& g) {
    BitMatrix m(g.vertex_count(), g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (!edge.is_loop()) {
            m.set(edge.a, e);
            m.set(edge.b, e);
        }
    }
    return m;
}

BitMatrix face_edge_incidence(const CellEmbedding& c, bool interior_only) {
    const auto faces = interior_only ? c.interior_face_ids() : [&] {
        std::vector<std::uint32_t> all(c.face_count());
        for (std::uint32_t f = 0; f < c.face_count(); ++f) {
            all[f] = f;
        }
        return all;
    }();
    BitMatrix m(faces.size(), c.graph().edge_count());
    for (std::size_t row = 0; row < faces.size(); ++row) {
        for (Dart d : c.face(faces[row])) {
            m.row(row).flip(dart_edge(d));
        }
    }
    return m;
}

Chain face_boundary(const CellEmbedding& c, std::uint32_t f) {
    if (f >= c.face_count()) {
        throw std::invalid_argument("face_boundary: face index out of range");
    }
    if (c.is_open(f)) {
        throw std::invalid_argument("face_boundary: face is open");
    }
    Chain chain(c.graph().edge_count());
    for (Dart d : c.face(f)) {
        chain.edges.flip(dart_edge(d));
    }
    return chain;
}

Cochain vertex_coboundary(const CellEmbedding& c, VertexId v) {
    if (v >= c.graph().vertex_count()) {
        throw std::invalid_argument("vertex_coboundary: vertex out of range");
    }
    Cochain cochain(c.graph().edge_count());
    for (Dart d : c.graph().rotation(v)) {
        cochain.edges.flip(dart_edge(d));
    }
    return cochain;
}

HomologySummary homology_summary(const CellEmbedding& c) {
    const int edges = static_cast<int>(c.graph().edge_count());
    const int rank_incidence = static_cast<int>(rank(vertex_edge_incidence(c.graph())));
    const int rank_faces = static_cast<int>(rank(face_edge_incidence(c, true)));
    HomologySummary s;
    s.z1_dim = edges - rank_incidence;
    s.b1_dim = rank_faces;
    s.h1_dim = s.z1_dim - s.b1_dim;
    s.z1co_dim = edges - rank_faces;
    s.b1co_dim = rank_incidence;
    s.h1co_dim = s.z1co_dim - s.b1co_dim;
    return s;
}

bool is_cycle(const CellEmbedding& c, const Chain& ch) {
    if (ch.edges.size() != c.graph().edge_count()) {
        throw std::invalid_argument("is_cycle: chain length mismatch");
    }
    return vertex_edge_incidence(c.graph()).multiply(ch.edges).none();
}

bool is_boundary(const CellEmbedding& c, const Chain& ch) {
    if (!is_cycle(c, ch)) {
        throw std::invalid_argument("is_boundary: the chain is not a cycle");
    }
    return in_row_space(face_edge_incidence(c, true), ch.edges);
}

bool are_homologous(const CellEmbedding& c, const Chain& a, const Chain& b) {
    if (!is_cycle(c, a) || !is_cycle(c, b)) {
        throw std::invalid_argument("are_homologous: both chains must be cycles");
    }
    return is_boundary(c, a ^ b);
}

int cycle_space_dim(const CellEmbedding& c) {
    return static_cast<int>(c.graph().edge_count()) -
           static_cast<int>(rank(vertex_edge_incidence(c.graph())));
}

int cocycle_space_dim(const CellEmbedding& c) {
    return static_cast<int>(c.graph().edge_count()) -
           static_cast<int>(rank(face_edge_incidence(c, true)));
}

namespace {

// A multigraph over host edge ids, used both for the primal cycle search and
// for the dual/relative cocycle search.
struct SearchGraph {
    std::size_t vertex_count = 0;
    std::size_t host_edge_count = 0;
    // Per edge: endpoints (may be equal for loops) and the host edge id.
    struct SearchEdge {
        std::size_t u, v;
        EdgeId host;
    };
    std::vector<SearchEdge> edges;
};

// Least-weight simple cycle whose host edge set is outside the given space.
// Iterative deepening over the target weight; at each target, simple cycles
// anchored at their smallest edge are grown depth-first with a distance
// prune. This is exhaustive for the minimum because any even-degree set
// decomposes into simple cycles and the trivial sets form a subspace.
std::optional<std::pair<std::size_t, BitVec>> min_simple_cycle_not_in(const SearchGraph& g,
                                                                      const RowSpace& trivial) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(g.vertex_count);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        incident[e.u].emplace_back(i, e.v);
        if (e.u != e.v) {
            incident[e.v].emplace_back(i, e.u);
        }
    }

    std::optional<BitVec> found;
    const auto consider = [&](const std::vector<std::size_t>& cycle_edges) {
        BitVec set(g.host_edge_count);
        for (std::size_t i : cycle_edges) {
            set.flip(g.edges[i].host);
        }
        if (!trivial.contains(set)) {
            found = std::move(set);
        }
        return found.has_value();
    };

    std::vector<std::size_t> path_edges;
    std::vector<bool> on_path(g.vertex_count, false);
    std::vector<std::size_t> dist_to_start(g.vertex_count);
    const auto bfs_from = [&](std::size_t start) {
        std::fill(dist_to_start.begin(), dist_to_start.end(), SIZE_MAX);
        std::vector<std::size_t> queue{start};
        dist_to_start[start] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t v = queue[head];
            for (const auto& [edge, w] : incident[v]) {
                (void)edge;
                if (dist_to_start[w] == SIZE_MAX) {
                    dist_to_start[w] = dist_to_start[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    };

    for (std::size_t target = 1; target <= g.edges.size(); ++target) {
        for (std::size_t anchor = 0; anchor < g.edges.size() && !found; ++anchor) {
            const auto& ae = g.edges[anchor];
            if (ae.u == ae.v) {
                if (target == 1) {
                    consider({anchor});
                }
                continue;
            }
            if (target == 1) {
                continue;
            }
            bfs_from(ae.u);

            // Grow simple paths from ae.v back toward ae.u using larger
            // edges, closing only cycles of exactly the target weight
            // (shorter ones were ruled out in earlier rounds).
            const std::size_t start = ae.u;
            path_edges.assign(1, anchor);
            on_path.assign(g.vertex_count, false);
            on_path[ae.u] = true;
            on_path[ae.v] = true;

            const auto dfs = [&](auto&& self, std::size_t at) -> bool {
                for (const auto& [i, w] : incident[at]) {
                    if (i <= anchor || g.edges[i].u == g.edges[i].v) {
                        continue;
                    }
                    if (w == start) {
                        if (path_edges.size() + 1 == target) {
                            path_edges.push_back(i);
                            const bool done = consider(path_edges);
                            path_edges.pop_back();
                            if (done) {
                                return true;
                            }
                        }
                        continue;
                    }
                    if (on_path[w] || path_edges.size() + 1 >= target) {
                        continue;
                    }
                    if (dist_to_start[w] == SIZE_MAX ||
                        path_edges.size() + 1 + dist_to_start[w] > target) {
                        continue;
                    }
                    path_edges.push_back(i);
                    on_path[w] = true;
                    const bool done = self(self, w);
                    on_path[w] = false;
                    path_edges.pop_back();
                    if (done) {
                        return true;
                    }
                }
                return false;
            };
            dfs(dfs, ae.v);
        }
        if (found) {
            return std::make_pair(target, std::move(*found));
        }
    }
    return std::nullopt;
}

SearchGraph primal_search_graph(const CellEmbedding& c) {
    SearchGraph g;
    g.vertex_count = c.graph().vertex_count();
    g.host_edge_count = c.graph().edge_count();
    for (EdgeId e = 0; e < c.graph().edge_count(); ++e) {
        const Edge& edge = c.graph().edge(e);
        g.edges.push_back({edge.a, edge.b, e});
    }
    return g;
}

// Dual adjacency with all open faces merged into a single vertex. Cycles of
// this multigraph are exactly the cochains meeting every interior face
// boundary evenly.
SearchGraph dual_search_graph(const CellEmbedding& c) {
    SearchGraph g;
    g.host_edge_count = c.graph().edge_count();
    std::vector<std::size_t> face_vertex(c.face_count());
    std::size_t next = 0;
    for (std::uint32_t f = 0; f < c.face_count(); ++f) {
        if (!c.is_open(f)) {
            face_vertex[f] = next++;
        }
    }
    const bool has_boundary = !c.open_faces().empty();
    const std::size_t infinity = next;
    g.vertex_count = next + (has_boundary ? 1 : 0);
    for (std::uint32_t f = 0; f < c.face_count(); ++f) {
        if (c.is_open(f)) {
            face_vertex[f] = infinity;
        }
    }

    std::vector<std::vector<std::size_t>> sides(c.graph().edge_count());
    for (std::uint32_t f = 0; f < c.face_count(); ++f) {
        for (Dart d : c.face(f)) {
            sides[dart_edge(d)].push_back(face_vertex[f]);
        }
    }
    for (EdgeId e = 0; e < c.graph().edge_count(); ++e) {
        if (sides[e].size() != 2) {
            throw std::logic_error("dual_search_graph: edge not covered exactly twice");
        }
        g.edges.push_back({sides[e][0], sides[e][1], e});
    }
    return g;
}

void require_nontrivial_homology(const CellEmbedding& c) {
    if (homology_summary(c).h1_dim < 1) {
        throw std::domain_error("homology is trivial: no nontrivial cycle exists");
    }
}

}  // namespace

MinCycle min_nontrivial_cycle(const CellEmbedding& c) {
    require_nontrivial_homology(c);
    const RowSpace boundaries(face_edge_incidence(c, true));
    auto found = min_simple_cycle_not_in(primal_search_graph(c), boundaries);
    if (!found) {
        throw std::logic_error("min_nontrivial_cycle: search failed despite h1 >= 1");
    }
    return {found->first, Chain(std::move(found->second))};
}

MinCocycle min_nontrivial_cocycle(const CellEmbedding& c) {
    require_nontrivial_homology(c);
    const RowSpace coboundaries(vertex_edge_incidence(c.graph()));
    auto found = min_simple_cycle_not_in(dual_search_graph(c), coboundaries);
    if (!found) {
        throw std::logic_error("min_nontrivial_cocycle: search failed despite h1 >= 1");
    }
    return {found->first, Cochain(std::move(found->second))};
}

namespace {

// Gray-code scan of the span of `basis`, keeping the lightest vector outside
// `trivial`.
std::optional<std::pair<std::size_t, BitVec>> scan_span(const std::vector<BitVec>& basis,
                                                        const RowSpace& trivial,
                                                        std::size_t edge_count) {
    if (basis.size() > 20) {
        throw std::domain_error("enumeration oracle refuses: space dimension " +
                                std::to_string(basis.size()) + " exceeds 20");
    }
    std::size_t best_weight = SIZE_MAX;
    BitVec best;
    BitVec current(edge_count);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t step = 1; step < total; ++step) {
        // Gray code: bit flipped at step k is the 2-adic valuation of k.
        int bit = 0;
        while (!((step >> bit) & 1)) {
            ++bit;
        }
        current ^= basis[static_cast<std::size_t>(bit)];
        const std::size_t w = current.popcount();
        if (w < best_weight && !trivial.contains(current)) {
            best_weight = w;
            best = current;
        }
    }
    if (best_weight == SIZE_MAX) {
        return std::nullopt;
    }
    return std::make_pair(best_weight, std::move(best));
}

}  // namespace

MinCycle min_nontrivial_cycle_oracle(const CellEmbedding& c) {
    require_nontrivial_homology(c);
    const auto basis = kernel_basis(vertex_edge_incidence(c.graph()));
    const RowSpace boundaries(face_edge_incidence(c, true));
    auto found = scan_span(basis, boundaries, c.graph().edge_count());
    if (!found) {
        throw std::logic_error("cycle oracle: scan failed despite h1 >= 1");
    }
    return {found->first, Chain(std::move(found->second))};
}

MinCocycle min_nontrivial_cocycle_oracle(const CellEmbedding& c) {
    require_nontrivial_homology(c);
    const auto basis = kernel_basis(face_edge_incidence(c, true));
    const RowSpace coboundaries(vertex_edge_incidence(c.graph()));
    auto found = scan_span(basis, coboundaries, c.graph().edge_count());
    if (!found) {
        throw std::logic_error("cocycle oracle: scan failed despite h1 >= 1");
    }
    return {found->first, Cochain(std::move(found->second))};
}

}  // namespace topocode
