#include "topocode/surface.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace topocode {

namespace {

// Face-tracing state: a dart about to be walked plus the local orientation
// flag. Bit 0 holds the flag (0 = forward, 1 = reversed).
using TraceState = std::uint64_t;

constexpr TraceState make_state(Dart d, int flag) { return (TraceState{d} << 1) | flag; }
constexpr Dart state_dart(TraceState s) { return static_cast<Dart>(s >> 1); }
constexpr int state_flag(TraceState s) { return static_cast<int>(s & 1); }

}  // namespace

EmbeddedGraph::EmbeddedGraph(VertexId vertex_count, std::vector<Edge> edges,
                             std::vector<std::vector<Dart>> rotations)
    : vertex_count_(vertex_count), edges_(std::move(edges)), rotations_(std::move(rotations)) {
    if (rotations_.size() != vertex_count_) {
        throw std::invalid_argument("EmbeddedGraph: need one rotation per vertex");
    }
    for (const Edge& e : edges_) {
        if (e.a >= vertex_count_ || e.b >= vertex_count_) {
            throw std::invalid_argument("EmbeddedGraph: edge endpoint out of range");
        }
    }
    const std::size_t dart_count = 2 * edges_.size();
    dart_index_.assign(dart_count, static_cast<std::size_t>(-1));
    std::vector<bool> seen(dart_count, false);
    for (VertexId v = 0; v < vertex_count_; ++v) {
        // Normalize the cyclic order to start at the smallest dart so that
        // equal embeddings compare and serialize identically.
        auto& rot = rotations_[v];
        if (!rot.empty()) {
            auto smallest = std::min_element(rot.begin(), rot.end());
            std::rotate(rot.begin(), smallest, rot.end());
        }
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const Dart d = rot[i];
            if (d >= dart_count) {
                throw std::invalid_argument("EmbeddedGraph: dart out of range in rotation");
            }
            if (seen[d]) {
                throw std::invalid_argument("EmbeddedGraph: dart appears twice");
            }
            if (dart_vertex(d) != v) {
                throw std::invalid_argument("EmbeddedGraph: dart listed at the wrong vertex");
            }
            seen[d] = true;
            dart_index_[d] = i;
        }
    }
    for (std::size_t d = 0; d < dart_count; ++d) {
        if (!seen[d]) {
            throw std::invalid_argument("EmbeddedGraph: dart missing from rotations");
        }
    }
}

Dart EmbeddedGraph::rotation_next(Dart d) const {
    const auto& rot = rotations_[dart_vertex(d)];
    const std::size_t i = dart_index_[d];
    return rot[(i + 1) % rot.size()];
}

Dart EmbeddedGraph::rotation_prev(Dart d) const {
    const auto& rot = rotations_[dart_vertex(d)];
    const std::size_t i = dart_index_[d];
    return rot[(i + rot.size() - 1) % rot.size()];
}

bool EmbeddedGraph::is_connected() const {
    if (vertex_count_ == 0) {
        return false;
    }
    std::vector<bool> seen(vertex_count_, false);
    std::queue<VertexId> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    std::vector<std::vector<VertexId>> adjacency(vertex_count_);
    for (const Edge& e : edges_) {
        adjacency[e.a].push_back(e.b);
        adjacency[e.b].push_back(e.a);
    }
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        for (VertexId w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push(w);
            }
        }
    }
    return reached == vertex_count_;
}

bool EmbeddedGraph::is_orientable() const {
    // Twisted loops cannot be removed by vertex switchings.
    for (const Edge& e : edges_) {
        if (e.is_loop() && e.twist) {
            return false;
        }
    }
    std::vector<int> sign(vertex_count_, 0);
    std::vector<std::vector<std::pair<VertexId, bool>>> adjacency(vertex_count_);
    for (const Edge& e : edges_) {
        if (!e.is_loop()) {
            adjacency[e.a].emplace_back(e.b, e.twist);
            adjacency[e.b].emplace_back(e.a, e.twist);
        }
    }
    for (VertexId start = 0; start < vertex_count_; ++start) {
        if (sign[start] != 0) {
            continue;
        }
        sign[start] = 1;
        std::queue<VertexId> queue;
        queue.push(start);
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop();
            for (auto [w, twist] : adjacency[v]) {
                const int expected = twist ? -sign[v] : sign[v];
                if (sign[w] == 0) {
                    sign[w] = expected;
                    queue.push(w);
                } else if (sign[w] != expected) {
                    return false;
                }
            }
        }
    }
    return true;
}

CellEmbedding trace_faces(const EmbeddedGraph& g) {
    if (g.edge_count() == 0) {
        throw std::domain_error("trace_faces: embedding needs at least one edge");
    }
    if (!g.is_connected()) {
        throw std::domain_error("trace_faces: graph is not connected");
    }

    const std::size_t state_count = 4 * g.edge_count();
    const auto succ = [&g](TraceState s) {
        const Dart d = state_dart(s);
        const bool twist = g.edge(dart_edge(d)).twist;
        const int flag = state_flag(s) ^ (twist ? 1 : 0);
        const Dart arrived = opposite(d);
        const Dart next = (flag == 0) ? g.rotation_next(arrived) : g.rotation_prev(arrived);
        return make_state(next, flag);
    };
    // Reversal involution: the same step walked in the opposite sense.
    const auto reversal = [&g](TraceState s) {
        const Dart d = state_dart(s);
        const bool twist = g.edge(dart_edge(d)).twist;
        const int flag = state_flag(s) ^ (twist ? 0 : 1);
        return make_state(opposite(d), flag);
    };

    std::vector<std::uint32_t> orbit_of(state_count, UINT32_MAX);
    std::vector<std::vector<TraceState>> orbits;
    for (TraceState s0 = 0; s0 < state_count; ++s0) {
        if (orbit_of[s0] != UINT32_MAX) {
            continue;
        }
        const auto id = static_cast<std::uint32_t>(orbits.size());
        std::vector<TraceState> orbit;
        TraceState s = s0;
        do {
            orbit_of[s] = id;
            orbit.push_back(s);
            s = succ(s);
        } while (s != s0);
        orbits.push_back(std::move(orbit));
    }

    // Each face is traced once in each sense; the reversal map pairs the two
    // orbits and we keep the one discovered first.
    CellEmbedding cell;
    cell.graph_ = g;
    std::vector<bool> consumed(orbits.size(), false);
    for (std::uint32_t id = 0; id < orbits.size(); ++id) {
        if (consumed[id]) {
            continue;
        }
        const std::uint32_t partner = orbit_of[reversal(orbits[id].front())];
        if (partner == id || consumed[partner]) {
            throw std::logic_error("trace_faces: face orbits failed to pair");
        }
        consumed[id] = consumed[partner] = true;
        std::vector<Dart> darts;
        std::vector<std::uint8_t> flags;
        darts.reserve(orbits[id].size());
        for (TraceState s : orbits[id]) {
            darts.push_back(state_dart(s));
            flags.push_back(static_cast<std::uint8_t>(state_flag(s)));
        }
        cell.face_darts_.push_back(std::move(darts));
        cell.face_flags_.push_back(std::move(flags));
    }
    return cell;
}

bool CellEmbedding::is_open(std::size_t f) const {
    return std::binary_search(open_faces_.begin(), open_faces_.end(), f);
}

std::vector<std::uint32_t> CellEmbedding::interior_face_ids() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t f = 0; f < face_count(); ++f) {
        if (!is_open(f)) {
            out.push_back(f);
        }
    }
    return out;
}

int CellEmbedding::euler_characteristic() const {
    return static_cast<int>(graph_.vertex_count()) - static_cast<int>(graph_.edge_count()) +
           static_cast<int>(interior_face_count());
}

SurfaceInfo CellEmbedding::surface_info() const {
    SurfaceInfo info;
    info.chi = euler_characteristic();
    info.orientable = graph_.is_orientable();
    info.boundary_components = static_cast<int>(open_faces_.size());
    return info;
}

CellEmbedding CellEmbedding::with_open_faces(std::vector<std::uint32_t> open) const {
    std::sort(open.begin(), open.end());
    if (std::adjacent_find(open.begin(), open.end()) != open.end()) {
        throw std::invalid_argument("with_open_faces: duplicate face index");
    }
    if (!open.empty() && open.back() >= face_count()) {
        throw std::invalid_argument("with_open_faces: face index out of range");
    }
    CellEmbedding c = *this;
    c.open_faces_ = std::move(open);
    return c;
}

int SurfaceInfo::genus() const {
    const int capped = chi + boundary_components;
    return orientable ? (2 - capped) / 2 : 2 - capped;
}

std::optional<int> SurfaceInfo::planar_holes() const {
    if (boundary_components > 0 && orientable && genus() == 0) {
        return 1 - chi;
    }
    return std::nullopt;
}

std::string SurfaceInfo::to_string() const {
    std::ostringstream out;
    out << "chi=" << chi << " orientable=" << (orientable ? "yes" : "no");
    if (closed()) {
        out << " genus=" << genus();
    } else {
        out << " boundary-components=" << boundary_components;
        if (auto h = planar_holes()) {
            out << " planar-holes=" << *h;
        } else {
            out << " capped-genus=" << genus();
        }
    }
    return out.str();
}

int euler_characteristic(const CellEmbedding& c) {
    return c.euler_characteristic();
}

CellEmbedding dual_embedding(const CellEmbedding& c) {
    if (!c.open_faces().empty()) {
        throw std::domain_error(
            "dual_embedding: not defined for surfaces with boundary (dual vertices of open "
            "faces are erased)");
    }
    const EmbeddedGraph& g = c.graph();
    const EdgeId edge_count = g.edge_count();

    struct Occurrence {
        std::uint32_t face;
        Dart dart;
    };
    std::vector<std::vector<Occurrence>> occurrences(edge_count);
    for (std::uint32_t f = 0; f < c.face_count(); ++f) {
        for (Dart d : c.face(f)) {
            occurrences[dart_edge(d)].push_back({f, d});
        }
    }

    std::vector<Edge> dual_edges(edge_count);
    for (EdgeId e = 0; e < edge_count; ++e) {
        const auto& occ = occurrences[e];
        if (occ.size() != 2) {
            throw std::logic_error("dual_embedding: edge not covered exactly twice by faces");
        }
        // The two chosen face traversals cross the edge on its two sides;
        // when both ride the same dart the local face orientations disagree
        // and the dual edge picks up a twist.
        dual_edges[e] = Edge{occ[0].face, occ[1].face, occ[0].dart == occ[1].dart};
    }

    std::vector<std::vector<Dart>> dual_rotations(c.face_count());
    std::vector<int> occurrence_seen(edge_count, 0);
    for (std::uint32_t f = 0; f < c.face_count(); ++f) {
        dual_rotations[f].reserve(c.face_degree(f));
        for (Dart d : c.face(f)) {
            const EdgeId e = dart_edge(d);
            const int end = occurrence_seen[e]++;
            dual_rotations[f].push_back(make_dart(e, end));
        }
    }

    return trace_faces(EmbeddedGraph(static_cast<VertexId>(c.face_count()), std::move(dual_edges),
                                     std::move(dual_rotations)));
}

namespace {

// The two bigon corners created by insert_parallel_edge, as ordered pairs
// (p, q) with q the rotation successor of p.
struct BigonCorners {
    std::pair<Dart, Dart> at_a;
    std::pair<Dart, Dart> at_b;
};

BigonCorners bigon_corners(EdgeId e, EdgeId parallel, bool twist) {
    const Dart da = make_dart(e, 0), db = make_dart(e, 1);
    const Dart ha = make_dart(parallel, 0), hb = make_dart(parallel, 1);
    if (twist) {
        return {{da, ha}, {db, hb}};
    }
    return {{da, ha}, {hb, db}};
}

}  // namespace

EmbeddedGraph insert_parallel_edge(const EmbeddedGraph& g, EdgeId e) {
    if (e >= g.edge_count()) {
        throw std::invalid_argument("insert_parallel_edge: edge id out of range");
    }
    const Edge original = g.edge(e);
    std::vector<Edge> edges = g.edges();
    const EdgeId parallel = static_cast<EdgeId>(edges.size());
    edges.push_back(original);

    const Dart da = make_dart(e, 0), db = make_dart(e, 1);
    const Dart ha = make_dart(parallel, 0), hb = make_dart(parallel, 1);

    std::vector<std::vector<Dart>> rotations = g.rotations();
    const auto insert_after = [&rotations, &g](Dart anchor, Dart inserted) {
        auto& rot = rotations[g.dart_vertex(anchor)];
        const auto it = std::find(rot.begin(), rot.end(), anchor);
        rot.insert(it + 1, inserted);
    };
    const auto insert_before = [&rotations, &g](Dart anchor, Dart inserted) {
        auto& rot = rotations[g.dart_vertex(anchor)];
        const auto it = std::find(rot.begin(), rot.end(), anchor);
        rot.insert(it, inserted);
    };

    // Place the copy so the two edges bound a bigon; the twisted case needs
    // the opposite nesting at the b end.
    insert_after(da, ha);
    if (original.twist) {
        insert_after(db, hb);
    } else {
        insert_before(db, hb);
    }

    EmbeddedGraph doubled(g.vertex_count(), std::move(edges), std::move(rotations));

    // The bigon must actually appear in the trace.
    const CellEmbedding traced = trace_faces(doubled);
    bool found = false;
    for (std::size_t f = 0; f < traced.face_count(); ++f) {
        const auto& walk = traced.face(f);
        if (walk.size() == 2 && dart_edge(walk[0]) != dart_edge(walk[1]) &&
            (dart_edge(walk[0]) == e || dart_edge(walk[0]) == parallel) &&
            (dart_edge(walk[1]) == e || dart_edge(walk[1]) == parallel)) {
            found = true;
            break;
        }
    }
    if (!found) {
        throw std::logic_error("insert_parallel_edge: doubled edge did not bound a bigon");
    }
    return doubled;
}

namespace {

EmbeddedGraph mirror_rotations(const EmbeddedGraph& g) {
    std::vector<std::vector<Dart>> rotations = g.rotations();
    for (auto& rot : rotations) {
        std::reverse(rot.begin(), rot.end());
    }
    return EmbeddedGraph(g.vertex_count(), g.edges(), std::move(rotations));
}

struct SumCandidate {
    bool mirror;        // reverse every rotation of the second surface
    bool cross_arcs;    // identify e1 with f2 instead of e2
    bool swap_ends_x;   // reverse the dart-end pairing on the first glued edge
    bool swap_ends_y;   // and on the second
    bool twist_x;
    bool twist_y;
};

// One candidate identification of the two bigon boundaries. The glued
// successor permutation is the union of both surfaces' rotation transitions
// with each bigon's two cut corners removed and the second surface's bigon
// darts relabeled onto the first's; candidates whose union is not a clean
// permutation are rejected. Returns nullopt on any failure.
std::optional<CellEmbedding> try_glue(const EmbeddedGraph& g1, EdgeId e1, EdgeId f1,
                                      const EmbeddedGraph& g2, EdgeId e2, EdgeId f2,
                                      const SumCandidate& cand) try {
    const EmbeddedGraph g2m = cand.mirror ? mirror_rotations(g2) : g2;
    const BigonCorners c1 = bigon_corners(e1, f1, g1.edge(e1).twist);
    BigonCorners c2 = bigon_corners(e2, f2, g2.edge(e2).twist);
    if (cand.mirror) {
        std::swap(c2.at_a.first, c2.at_a.second);
        std::swap(c2.at_b.first, c2.at_b.second);
    }

    const EdgeId edges1 = g1.edge_count();
    const EdgeId edges2 = g2m.edge_count();
    const auto is_ghost = [&](Dart d2) {
        const EdgeId e = dart_edge(d2);
        return e == e2 || e == f2;
    };

    // Result edge ids: g1's edges keep theirs (e1 and f1 become the glued
    // edges), g2's surviving edges follow.
    const auto map_edge = [&](EdgeId e) {
        EdgeId out = edges1 + e;
        if (e > e2) {
            --out;
        }
        if (e > f2) {
            --out;
        }
        return out;
    };
    const EdgeId into_x = cand.cross_arcs ? f2 : e2;  // becomes edge e1
    const EdgeId into_y = cand.cross_arcs ? e2 : f2;  // becomes edge f1
    const auto relabel = [&](Dart d) -> Dart {
        const EdgeId e = dart_edge(d);
        if (e == into_x) {
            return make_dart(e1, dart_end(d) ^ (cand.swap_ends_x ? 1 : 0));
        }
        if (e == into_y) {
            return make_dart(f1, dart_end(d) ^ (cand.swap_ends_y ? 1 : 0));
        }
        return make_dart(map_edge(e), dart_end(d));
    };

    const std::size_t result_dart_count = 2 * (edges1 + edges2 - 2);
    std::vector<Dart> successor(result_dart_count, UINT32_MAX);
    bool valid = true;
    const auto link = [&](Dart from, Dart to) {
        if (successor[from] != UINT32_MAX) {
            valid = false;
            return;
        }
        successor[from] = to;
    };

    for (VertexId v = 0; v < g1.vertex_count() && valid; ++v) {
        for (Dart d : g1.rotation(v)) {
            if (d == c1.at_a.first || d == c1.at_b.first) {
                continue;  // cut corner
            }
            link(d, g1.rotation_next(d));
        }
    }
    for (VertexId v = 0; v < g2m.vertex_count() && valid; ++v) {
        for (Dart d : g2m.rotation(v)) {
            if (d == c2.at_a.first || d == c2.at_b.first) {
                continue;
            }
            link(relabel(d), relabel(g2m.rotation_next(d)));
        }
    }
    if (!valid) {
        return std::nullopt;
    }
    for (Dart d = 0; d < result_dart_count; ++d) {
        if (successor[d] == UINT32_MAX) {
            return std::nullopt;
        }
    }

    // Rebuild vertices as the cycles of the stitched successor permutation.
    std::vector<std::uint32_t> vertex_of(result_dart_count, UINT32_MAX);
    std::vector<std::vector<Dart>> rotations;
    for (Dart d0 = 0; d0 < result_dart_count; ++d0) {
        if (vertex_of[d0] != UINT32_MAX) {
            continue;
        }
        std::vector<Dart> cycle;
        Dart d = d0;
        do {
            if (d == UINT32_MAX || vertex_of[d] != UINT32_MAX) {
                return std::nullopt;  // successor not a clean permutation
            }
            vertex_of[d] = static_cast<std::uint32_t>(rotations.size());
            cycle.push_back(d);
            d = successor[d];
        } while (d != d0);
        rotations.push_back(std::move(cycle));
    }

    std::vector<Edge> edges(edges1 + edges2 - 2);
    for (EdgeId e = 0; e < edges1; ++e) {
        edges[e] = Edge{vertex_of[make_dart(e, 0)], vertex_of[make_dart(e, 1)],
                        g1.edge(e).twist};
    }
    edges[e1].twist = cand.twist_x;
    edges[f1].twist = cand.twist_y;
    for (EdgeId e = 0; e < edges2; ++e) {
        if (e == e2 || e == f2) {
            continue;
        }
        const EdgeId m = map_edge(e);
        edges[m] = Edge{vertex_of[make_dart(m, 0)], vertex_of[make_dart(m, 1)],
                        g2m.edge(e).twist};
    }

    const auto glued_vertex_count = static_cast<VertexId>(rotations.size());
    EmbeddedGraph glued(glued_vertex_count, std::move(edges), std::move(rotations));
    return trace_faces(glued);
} catch (const std::exception&) {
    return std::nullopt;
}

}  // namespace

CellEmbedding connected_sum(const CellEmbedding& c1, EdgeId e1, const CellEmbedding& c2,
                            EdgeId e2) {
    if (!c1.open_faces().empty() || !c2.open_faces().empty()) {
        throw std::domain_error("connected_sum: both surfaces must be closed");
    }
    if (e1 >= c1.graph().edge_count() || e2 >= c2.graph().edge_count()) {
        throw std::invalid_argument("connected_sum: edge id out of range");
    }
    // Cutting along a loop is cutting along a closed curve: it separates the
    // surface or leaves two boundary circles, never the single bigon
    // boundary this construction identifies.
    if (c1.graph().edge(e1).is_loop() || c2.graph().edge(e2).is_loop()) {
        throw std::invalid_argument("connected_sum: the cut edge must not be a loop");
    }

    const EmbeddedGraph g1 = insert_parallel_edge(c1.graph(), e1);
    const EmbeddedGraph g2 = insert_parallel_edge(c2.graph(), e2);
    const EdgeId f1 = g1.edge_count() - 1;
    const EdgeId f2 = g2.edge_count() - 1;

    const int expected_vertices = static_cast<int>(c1.graph().vertex_count()) +
                                  static_cast<int>(c2.graph().vertex_count()) - 2;
    const int expected_edges =
        static_cast<int>(c1.graph().edge_count()) + static_cast<int>(c2.graph().edge_count());
    const int expected_chi = c1.euler_characteristic() + c2.euler_characteristic() - 2;
    const int expected_faces =
        static_cast<int>(c1.face_count()) + static_cast<int>(c2.face_count());
    const bool expect_orientable = c1.graph().is_orientable() && c2.graph().is_orientable();

    for (int bits = 0; bits < 64; ++bits) {
        const SumCandidate cand{(bits & 1) != 0,  (bits & 2) != 0,  (bits & 4) != 0,
                                (bits & 8) != 0,  (bits & 16) != 0, (bits & 32) != 0};
        auto glued = try_glue(g1, e1, f1, g2, e2, f2, cand);
        if (!glued) {
            continue;
        }
        const auto& cell = *glued;
        if (static_cast<int>(cell.graph().vertex_count()) != expected_vertices ||
            static_cast<int>(cell.graph().edge_count()) != expected_edges ||
            static_cast<int>(cell.face_count()) != expected_faces ||
            cell.euler_characteristic() != expected_chi ||
            (expect_orientable && !cell.graph().is_orientable())) {
            continue;
        }
        return cell;
    }
    throw std::logic_error("connected_sum: no identification satisfied the postconditions");
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

std::string dart_to_text(Dart d) {
    return std::to_string(dart_edge(d)) + (dart_end(d) == 0 ? ".a" : ".b");
}

Dart dart_from_text(const std::string& token, std::size_t line, EdgeId edge_count) {
    const auto dot = token.find('.');
    if (dot == std::string::npos || dot + 2 != token.size() ||
        (token[dot + 1] != 'a' && token[dot + 1] != 'b')) {
        throw parse_error(line, "malformed dart '" + token + "' (expected <edge>.a or <edge>.b)");
    }
    std::size_t pos = 0;
    unsigned long e = 0;
    try {
        e = std::stoul(token.substr(0, dot), &pos);
    } catch (const std::exception&) {
        throw parse_error(line, "malformed dart '" + token + "'");
    }
    if (pos != dot) {
        throw parse_error(line, "malformed dart '" + token + "'");
    }
    if (e >= edge_count) {
        throw parse_error(line, "dart references edge " + std::to_string(e) + " out of range");
    }
    return make_dart(static_cast<EdgeId>(e), token[dot + 1] == 'a' ? 0 : 1);
}

long parse_number(const std::string& token, std::size_t line, const char* what) {
    try {
        std::size_t pos = 0;
        const long value = std::stol(token, &pos);
        if (pos != token.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw parse_error(line, std::string("expected ") + what + ", got '" + token + "'");
    }
}

}  // namespace

ParsedEmbedding parse_embedding(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    std::map<std::string, std::string> metadata;
    std::optional<VertexId> vertex_count;
    std::vector<Edge> edges;
    std::map<VertexId, std::vector<Dart>> rotations;
    std::optional<std::vector<std::uint32_t>> open_faces;
    std::size_t open_faces_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                std::string key = line.substr(1, colon - 1);
                std::string value = line.substr(colon + 1);
                const auto trim = [](std::string& s) {
                    const auto begin = s.find_first_not_of(" \t");
                    const auto end = s.find_last_not_of(" \t");
                    s = (begin == std::string::npos) ? "" : s.substr(begin, end - begin + 1);
                };
                trim(key);
                trim(value);
                if (!key.empty()) {
                    metadata[key] = value;
                }
            }
            continue;
        }

        std::istringstream tokens(line);
        std::string keyword;
        tokens >> keyword;

        if (keyword == "vertices") {
            if (vertex_count) {
                throw parse_error(line_no, "duplicate 'vertices' line");
            }
            std::string value;
            if (!(tokens >> value)) {
                throw parse_error(line_no, "missing vertex count");
            }
            const long v = parse_number(value, line_no, "vertex count");
            if (v <= 0) {
                throw parse_error(line_no, "vertex count must be positive");
            }
            vertex_count = static_cast<VertexId>(v);
        } else if (keyword == "edge") {
            if (!vertex_count) {
                throw parse_error(line_no, "'edge' before 'vertices'");
            }
            std::string id_text, a_text, b_text;
            if (!(tokens >> id_text >> a_text >> b_text)) {
                throw parse_error(line_no, "expected 'edge <id> <va> <vb> [twist]'");
            }
            const long id = parse_number(id_text, line_no, "edge id");
            if (id != static_cast<long>(edges.size())) {
                throw parse_error(line_no, "edge ids must be consecutive from 0 (expected " +
                                               std::to_string(edges.size()) + ")");
            }
            const long a = parse_number(a_text, line_no, "vertex id");
            const long b = parse_number(b_text, line_no, "vertex id");
            if (a < 0 || b < 0 || a >= static_cast<long>(*vertex_count) ||
                b >= static_cast<long>(*vertex_count)) {
                throw parse_error(line_no, "edge endpoint out of range");
            }
            bool twist = false;
            std::string extra;
            if (tokens >> extra) {
                if (extra != "twist") {
                    throw parse_error(line_no, "unexpected token '" + extra + "'");
                }
                twist = true;
            }
            edges.push_back(Edge{static_cast<VertexId>(a), static_cast<VertexId>(b), twist});
        } else if (keyword == "rotation") {
            if (!vertex_count) {
                throw parse_error(line_no, "'rotation' before 'vertices'");
            }
            std::string vertex_text;
            if (!(tokens >> vertex_text)) {
                throw parse_error(line_no, "expected 'rotation <v>: <darts>'");
            }
            if (vertex_text.empty() || vertex_text.back() != ':') {
                throw parse_error(line_no, "expected ':' after the vertex id");
            }
            vertex_text.pop_back();
            const long v = parse_number(vertex_text, line_no, "vertex id");
            if (v < 0 || v >= static_cast<long>(*vertex_count)) {
                throw parse_error(line_no, "rotation vertex out of range");
            }
            if (rotations.count(static_cast<VertexId>(v))) {
                throw parse_error(line_no,
                                  "duplicate rotation for vertex " + std::to_string(v));
            }
            std::vector<Dart> rot;
            std::string token;
            while (tokens >> token) {
                rot.push_back(
                    dart_from_text(token, line_no, static_cast<EdgeId>(edges.size())));
            }
            rotations[static_cast<VertexId>(v)] = std::move(rot);
        } else if (keyword == "open-faces:") {
            if (open_faces) {
                throw parse_error(line_no, "duplicate 'open-faces:' line");
            }
            std::vector<std::uint32_t> open;
            std::string token;
            while (tokens >> token) {
                const long f = parse_number(token, line_no, "face index");
                if (f < 0) {
                    throw parse_error(line_no, "face index must be non-negative");
                }
                open.push_back(static_cast<std::uint32_t>(f));
            }
            open_faces = std::move(open);
            open_faces_line = line_no;
        } else {
            throw parse_error(line_no, "unknown keyword '" + keyword + "'");
        }
    }

    if (!vertex_count) {
        throw parse_error(line_no ? line_no : 1, "missing 'vertices' line");
    }
    std::vector<std::vector<Dart>> rotation_list(*vertex_count);
    for (VertexId v = 0; v < *vertex_count; ++v) {
        const auto it = rotations.find(v);
        if (it == rotations.end()) {
            throw parse_error(line_no, "missing rotation for vertex " + std::to_string(v));
        }
        rotation_list[v] = it->second;
    }

    ParsedEmbedding out;
    try {
        EmbeddedGraph graph(*vertex_count, std::move(edges), std::move(rotation_list));
        out.embedding = trace_faces(graph);
    } catch (const std::invalid_argument& e) {
        throw parse_error(line_no, e.what());
    } catch (const std::domain_error& e) {
        throw parse_error(line_no, e.what());
    }
    if (open_faces) {
        try {
            out.embedding = out.embedding.with_open_faces(std::move(*open_faces));
        } catch (const std::invalid_argument& e) {
            throw parse_error(open_faces_line, e.what());
        }
    }
    out.metadata = std::move(metadata);
    return out;
}

ParsedEmbedding parse_embedding(const std::string& text) {
    std::istringstream in(text);
    return parse_embedding(in);
}

std::string serialize_embedding(const CellEmbedding& c,
                                const std::map<std::string, std::string>& metadata) {
    std::ostringstream out;
    for (const auto& [key, value] : metadata) {
        out << "# " << key << ": " << value << "\n";
    }
    const EmbeddedGraph& g = c.graph();
    out << "vertices " << g.vertex_count() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        out << "edge " << e << " " << edge.a << " " << edge.b;
        if (edge.twist) {
            out << " twist";
        }
        out << "\n";
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "rotation " << v << ":";
        for (Dart d : g.rotation(v)) {
            out << " " << dart_to_text(d);
        }
        out << "\n";
    }
    if (!c.open_faces().empty()) {
        out << "open-faces:";
        for (std::uint32_t f : c.open_faces()) {
            out << " " << f;
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Isomorphism helpers
// ---------------------------------------------------------------------------

bool isomorphic_with_edge_identity(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    if (a.edge_count() == 0) {
        return a.vertex_count() == b.vertex_count();
    }
    const VertexId n = a.vertex_count();
    std::vector<std::vector<EdgeId>> incident(n);
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
        incident[a.edge(e).a].push_back(e);
        if (!a.edge(e).is_loop()) {
            incident[a.edge(e).b].push_back(e);
        }
    }

    const auto attempt = [&](VertexId seed_a, VertexId seed_b) {
        std::vector<VertexId> map(n, UINT32_MAX);
        map[seed_a] = seed_b;
        std::queue<VertexId> queue;
        queue.push(seed_a);
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            for (EdgeId e : incident[u]) {
                const Edge& ea = a.edge(e);
                const Edge& eb = b.edge(e);
                const VertexId other = (ea.a == u) ? ea.b : ea.a;
                VertexId target;
                if (map[u] == eb.a) {
                    target = eb.b;
                } else if (map[u] == eb.b) {
                    target = eb.a;
                } else {
                    return false;
                }
                if (map[other] == UINT32_MAX) {
                    map[other] = target;
                    queue.push(other);
                } else if (map[other] != target) {
                    return false;
                }
            }
        }
        for (EdgeId e = 0; e < a.edge_count(); ++e) {
            const Edge& ea = a.edge(e);
            const Edge& eb = b.edge(e);
            const bool straight = map[ea.a] == eb.a && map[ea.b] == eb.b;
            const bool flipped = map[ea.a] == eb.b && map[ea.b] == eb.a;
            if (!straight && !flipped) {
                return false;
            }
        }
        return true;
    };

    const VertexId seed = a.edge(0).a;
    return attempt(seed, b.edge(0).a) || attempt(seed, b.edge(0).b);
}

namespace {

std::vector<std::vector<std::uint32_t>> adjacency_counts(const EmbeddedGraph& g) {
    const VertexId n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> counts(n, std::vector<std::uint32_t>(n, 0));
    for (const Edge& e : g.edges()) {
        counts[e.a][e.b] += 1;
        if (!e.is_loop()) {
            counts[e.b][e.a] += 1;
        }
    }
    return counts;
}

bool extend_isomorphism(const std::vector<std::vector<std::uint32_t>>& a,
                        const std::vector<std::vector<std::uint32_t>>& b,
                        const std::vector<std::size_t>& deg_a,
                        const std::vector<std::size_t>& deg_b, std::vector<VertexId>& map,
                        std::vector<bool>& used, std::size_t next) {
    const std::size_t n = a.size();
    if (next == n) {
        return true;
    }
    for (VertexId cand = 0; cand < n; ++cand) {
        if (used[cand] || deg_a[next] != deg_b[cand] || a[next][next] != b[cand][cand]) {
            continue;
        }
        bool ok = true;
        for (std::size_t prev = 0; prev < next; ++prev) {
            if (a[next][prev] != b[cand][map[prev]]) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        map[next] = cand;
        used[cand] = true;
        if (extend_isomorphism(a, b, deg_a, deg_b, map, used, next + 1)) {
            return true;
        }
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool graphs_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    const auto ca = adjacency_counts(a);
    const auto cb = adjacency_counts(b);
    std::vector<std::size_t> deg_a(a.vertex_count()), deg_b(b.vertex_count());
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        deg_a[v] = a.degree(v);
        deg_b[v] = b.degree(v);
    }
    auto sorted_a = deg_a;
    auto sorted_b = deg_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) {
        return false;
    }
    std::vector<VertexId> map(a.vertex_count(), UINT32_MAX);
    std::vector<bool> used(a.vertex_count(), false);
    return extend_isomorphism(ca, cb, deg_a, deg_b, map, used, 0);
}

}  // namespace topocode
