#pragma once

#include <cstdint>
#include <utility>

#include "topocode/chain.hpp"
#include "topocode/gf2.hpp"
#include "topocode/surface.hpp"

namespace topocode {

struct HomologySummary {
    int z1_dim = 0;
    int b1_dim = 0;
    int h1_dim = 0;
    int z1co_dim = 0;
    int b1co_dim = 0;
    int h1co_dim = 0;
};

/// Vertex-edge incidence over Z2; loop columns vanish.
BitMatrix vertex_edge_incidence(const EmbeddedGraph& g);

/// Face-edge incidence over Z2: entry (f, e) is the parity of the number of
/// times e appears in the walk of f. Interior faces only when requested.
BitMatrix face_edge_incidence(const CellEmbedding& c, bool interior_only);

/// Edges appearing an odd number of times in the walk of the interior face f.
Chain face_boundary(const CellEmbedding& c, std::uint32_t f);

/// Edges incident to v an odd number of times; loops at v cancel.
Cochain vertex_coboundary(const CellEmbedding& c, VertexId v);

/// Z1 = cycles, B1 = boundaries of interior faces, H1 = Z1/B1, plus the
/// cochain-side analogues. For the surfaces built here h1 equals 2 - chi
/// (closed) or 1 - chi (with boundary).
HomologySummary homology_summary(const CellEmbedding& c);

bool is_cycle(const CellEmbedding& c, const Chain& ch);

/// True iff the cycle ch is a sum of interior face boundaries. Throws when ch
/// is not a cycle.
bool is_boundary(const CellEmbedding& c, const Chain& ch);

/// True iff a and b are cycles differing by a boundary.
bool are_homologous(const CellEmbedding& c, const Chain& a, const Chain& b);

struct MinCycle {
    std::size_t weight = 0;
    Chain witness;
};

struct MinCocycle {
    std::size_t weight = 0;
    Cochain witness;
};

/// The least edge count among cycles that are not boundaries, with a witness.
/// Throws when the homology is trivial. The search grows simple cycles in
/// deterministic order, so the returned weight and witness are reproducible.
MinCycle min_nontrivial_cycle(const CellEmbedding& c);

/// Least weight among cocycles that are not coboundaries. On a surface with
/// boundary the cocycle space is taken relative to the open faces: cochains
/// meeting every interior face boundary evenly.
MinCocycle min_nontrivial_cocycle(const CellEmbedding& c);

/// Exhaustive reference: scans all of Z1 \ B1. Refuses when the cycle space
/// dimension exceeds 20.
MinCycle min_nontrivial_cycle_oracle(const CellEmbedding& c);
MinCocycle min_nontrivial_cocycle_oracle(const CellEmbedding& c);

/// Cycle space dimension E - rank(incidence), the cyclomatic number.
int cycle_space_dim(const CellEmbedding& c);
int cocycle_space_dim(const CellEmbedding& c);

}  // namespace topocode
