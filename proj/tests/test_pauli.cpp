#include <random>
#include <stdexcept>

#include "doctest.h"
#include "topocode/pauli.hpp"

using namespace topocode;

namespace {

PauliElement single(std::size_t n, std::size_t q, char kind) {
    std::string s(n, 'I');
    s[q] = kind;
    return PauliElement::parse(s);
}

PauliElement random_pauli(std::mt19937& rng, std::size_t n) {
    static const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
    std::string s(n, 'I');
    for (auto& ch : s) {
        ch = alphabet[rng() % 4];
    }
    return PauliElement::parse(s);
}

}  // namespace

TEST_CASE("symplectic product on single-qubit pairs") {
    CHECK(symplectic_product(single(1, 0, 'X'), single(1, 0, 'Z')) == 1);
    CHECK(symplectic_product(single(2, 0, 'X'), single(2, 1, 'Z')) == 0);

    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const PauliElement u = random_pauli(rng, 6);
        CHECK(symplectic_product(u, u) == 0);  // alternating over Z2
    }
    CHECK_THROWS_AS(symplectic_product(single(2, 0, 'X'), single(3, 0, 'X')),
                    std::invalid_argument);
}

TEST_CASE("symplectic product is bilinear") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const PauliElement u = random_pauli(rng, 8);
        const PauliElement w = random_pauli(rng, 8);
        const PauliElement v = random_pauli(rng, 8);
        CHECK(symplectic_product(u * w, v) ==
              (symplectic_product(u, v) ^ symplectic_product(w, v)));
    }
}

TEST_CASE("weight") {
    CHECK(weight(PauliElement(4)) == 0);
    CHECK(weight(single(5, 2, 'Y')) == 1);
    const PauliElement p(BitVec::from_string("110"), BitVec::from_string("011"));
    CHECK(weight(p) == 3);

    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        const PauliElement u = random_pauli(rng, 10);
        const PauliElement v = random_pauli(rng, 10);
        CHECK(weight(u * v) <= weight(u) + weight(v));
    }
}

TEST_CASE("chain and cochain operators") {
    Chain empty(3);
    CHECK(chain_operator(empty).is_identity());

    Chain c(3);
    c.edges.set(0);
    c.edges.set(1);
    const PauliElement zz = chain_operator(c);
    CHECK(zz.to_string() == "ZZI");
    CHECK(zz.x().none());

    Cochain co(3);
    co.edges.set(2);
    const PauliElement x = cochain_operator(co);
    CHECK(x.to_string() == "IIX");
    CHECK(x.z().none());

    // The commutator of an X-type and Z-type operator is the overlap parity.
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) {
        Chain a(9);
        Cochain b(9);
        for (std::size_t e = 0; e < 9; ++e) {
            if (rng() & 1) {
                a.edges.set(e);
            }
            if (rng() & 1) {
                b.edges.set(e);
            }
        }
        const std::size_t overlap = [&] {
            std::size_t n = 0;
            for (std::size_t e = 0; e < 9; ++e) {
                n += a.edges.get(e) && b.edges.get(e);
            }
            return n;
        }();
        CHECK(symplectic_product(cochain_operator(b), chain_operator(a)) ==
              static_cast<int>(overlap % 2));
    }
}

TEST_CASE("text round trip") {
    std::mt19937 rng(23);
    for (int i = 0; i < 40; ++i) {
        const PauliElement p = random_pauli(rng, 12);
        CHECK(PauliElement::parse(p.to_string()) == p);
    }
    CHECK_THROWS_AS(PauliElement::parse("XIQ"), std::invalid_argument);
}
