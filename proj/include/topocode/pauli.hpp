#pragma once

#include <string>
#include <string_view>

#include "topocode/chain.hpp"
#include "topocode/gf2.hpp"

namespace topocode {

/// An n-qubit Pauli operator represented projectively by its symplectic
/// vector (x|z). Global phases are not tracked: products compose by XOR and
/// only the commutation sign survives, which is all the stabilizer
/// construction needs.
class PauliElement {
public:
    PauliElement() = default;
    explicit PauliElement(std::size_t n) : x_(n), z_(n) {}
    PauliElement(BitVec x, BitVec z);

    static PauliElement parse(std::string_view text);

    std::size_t num_qubits() const { return x_.size(); }
    const BitVec& x() const { return x_; }
    const BitVec& z() const { return z_; }

    bool is_identity() const { return x_.none() && z_.none(); }

    PauliElement& operator*=(const PauliElement& other);
    friend PauliElement operator*(PauliElement lhs, const PauliElement& rhs) {
        lhs *= rhs;
        return lhs;
    }
    bool operator==(const PauliElement&) const = default;

    /// Rendering over {I,X,Y,Z}; round-trips exactly through parse().
    std::string to_string() const;

private:
    BitVec x_;
    BitVec z_;
};

/// u^t Omega v mod 2: 0 means the operators commute, 1 they anticommute.
int symplectic_product(const PauliElement& u, const PauliElement& v);

/// Number of qubits acted on nontrivially (union of the x and z supports).
std::size_t weight(const PauliElement& p);

/// Z-type operator sigma_c of a chain; acts with Z on each supported edge.
PauliElement chain_operator(const Chain& c);

/// X-type operator sigma_c of a cochain.
PauliElement cochain_operator(const Cochain& c);

}  // namespace topocode
