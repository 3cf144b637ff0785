#pragma once

#include "topocode/gf2.hpp"

namespace topocode {

/// Formal Z2 sum of edges of an embedded graph, indexed by edge id.
struct Chain {
    BitVec edges;

    Chain() = default;
    explicit Chain(BitVec support) : edges(std::move(support)) {}
    explicit Chain(std::size_t edge_count) : edges(edge_count) {}

    Chain& operator^=(const Chain& other) {
        edges ^= other.edges;
        return *this;
    }
    friend Chain operator^(Chain lhs, const Chain& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const Chain&) const = default;
};

/// Formal Z2 sum of dual edges, stored through the edge <-> dual edge bijection.
struct Cochain {
    BitVec edges;

    Cochain() = default;
    explicit Cochain(BitVec support) : edges(std::move(support)) {}
    explicit Cochain(std::size_t edge_count) : edges(edge_count) {}

    Cochain& operator^=(const Cochain& other) {
        edges ^= other.edges;
        return *this;
    }
    friend Cochain operator^(Cochain lhs, const Cochain& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const Cochain&) const = default;
};

}  // namespace topocode
