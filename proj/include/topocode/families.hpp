#pragma once

#include <map>
#include <string>

#include "topocode/rational.hpp"
#include "topocode/surface.hpp"

namespace topocode {

enum class Family {
    kitaev_toric,
    optimal_toric,
    complete_selfdual,
    planar_holed,
    connected_sum_chain,
};

struct FamilySpec {
    Family family = Family::kitaev_toric;
    int d = 0;      // target distance (kitaev, optimal, planar, chain)
    int s = 0;      // complete graph order
    int h = 0;      // number of holes
    int count = 0;  // summands in a connected-sum chain
};

/// d x d square lattice on the torus; the resulting code is [[2d^2, 2, d]].
CellEmbedding kitaev_toric(int d);

/// Square lattice of the plane quotiented by the sublattice spanned by
/// (a, b) and (-b, a) with a = (d+1)/2, b = (d-1)/2; d odd. Self-dual with
/// d^2+1 edges, giving [[d^2+1, 2, d]]. At d = 3 the graph is K5.
CellEmbedding optimal_toric(int d);

/// Embedding of the complete graph K_s with s vertices, s faces, on the
/// orientable surface of genus (s-1)(s-4)/4; needs s = 1 (mod 4). For prime
/// powers the rotation at vertex i lists i + g^k for a multiplicative
/// generator g of GF(s); otherwise a seeded bounded search over cyclic
/// rotation patterns runs and failure raises an unsupported-parameter error.
CellEmbedding complete_selfdual(int s);

/// Rectangular grid patch with h square holes of side ceil(d/2); the open
/// faces are the outer face and the holes. Encodes k = h qubits at distance
/// exactly d (machine-verified at construction for tractable sizes).
CellEmbedding planar_holed(int h, int d);

/// Iterated connected sum of `count` copies of optimal_toric(d).
CellEmbedding connected_sum_chain(int d, int count);

struct RatePoint {
    long long n = 0;
    long long k = 0;
    long long d = 0;
    long long t = 0;
    Rational t_over_n;
    Rational k_over_n;
};

RatePoint rate_point(const FamilySpec& spec);

struct FamilyResult {
    CellEmbedding embedding;
    std::map<std::string, std::string> metadata;
};

/// Builds the embedding together with the metadata comments the CLI writes
/// into embedding files (family name, declared distance, search seed).
FamilyResult build_family(const FamilySpec& spec);

/// True when the planar constructor verifies the distance at build time for
/// these parameters (it always does within this edge budget).
bool planar_distance_verified_at_construction(int h, int d);

}  // namespace topocode
