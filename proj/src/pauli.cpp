#include "topocode/pauli.hpp"

#include <stdexcept>

namespace topocode {

PauliElement::PauliElement(BitVec x, BitVec z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliElement: x and z must have equal length");
    }
}

PauliElement PauliElement::parse(std::string_view text) {
    BitVec x(text.size());
    BitVec z(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'I':
                break;
            case 'X':
                x.set(i);
                break;
            case 'Z':
                z.set(i);
                break;
            case 'Y':
                x.set(i);
                z.set(i);
                break;
            default:
                throw std::invalid_argument(
                    std::string("PauliElement::parse: unexpected character '") + text[i] +
                    "' at position " + std::to_string(i));
        }
    }
    return PauliElement(std::move(x), std::move(z));
}

PauliElement& PauliElement::operator*=(const PauliElement& other) {
    if (num_qubits() != other.num_qubits()) {
        throw std::invalid_argument("PauliElement product: qubit count mismatch");
    }
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

std::string PauliElement::to_string() const {
    std::string s(num_qubits(), 'I');
    for (std::size_t i = 0; i < num_qubits(); ++i) {
        const bool xb = x_.get(i);
        const bool zb = z_.get(i);
        if (xb && zb) {
            s[i] = 'Y';
        } else if (xb) {
            s[i] = 'X';
        } else if (zb) {
            s[i] = 'Z';
        }
    }
    return s;
}

int symplectic_product(const PauliElement& u, const PauliElement& v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw std::invalid_argument("symplectic_product: qubit count mismatch");
    }
    return (u.x().dot(v.z()) ^ u.z().dot(v.x())) ? 1 : 0;
}

std::size_t weight(const PauliElement& p) {
    return p.x().union_popcount(p.z());
}

PauliElement chain_operator(const Chain& c) {
    return PauliElement(BitVec(c.edges.size()), c.edges);
}

PauliElement cochain_operator(const Cochain& c) {
    return PauliElement(c.edges, BitVec(c.edges.size()));
}

}  // namespace topocode
