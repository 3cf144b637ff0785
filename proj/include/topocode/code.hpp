#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "topocode/gf2.hpp"
#include "topocode/homology.hpp"
#include "topocode/pauli.hpp"
#include "topocode/surface.hpp"

namespace topocode {

/// Stabilizer code of a cell embedding: one X generator per vertex (its
/// coboundary), one Z generator per interior face (its boundary), one qubit
/// per edge. The check matrix is block diagonal diag(H1, H2) with H1 the
/// vertex-edge and H2 the interior-face-edge incidence.
class StabilizerCode {
public:
    explicit StabilizerCode(CellEmbedding embedding);

    const CellEmbedding& embedding() const { return embedding_; }

    std::size_t num_qubits() const { return n_; }
    std::size_t num_logical_qubits() const { return k_; }
    std::size_t num_x_generators() const { return num_x_; }
    const std::vector<PauliElement>& generators() const { return generators_; }

    /// (V + F_int) x 2n block matrix [H1 | 0; 0 | H2].
    const BitMatrix& check_matrix() const { return check_; }
    BitMatrix x_block() const;  // H1
    BitMatrix z_block() const;  // H2

    /// Largest number of qubits any generator acts on.
    std::size_t connectivity() const { return connectivity_; }

    std::optional<std::size_t> cached_distance() const { return distance_; }

    /// Exact distance: the least weight over the symplectic dual of the
    /// stabilizer minus the stabilizer itself. Computed as the smaller of the
    /// minimum nontrivial cycle and cocycle weights; for n <= 20 the result
    /// is re-derived by direct enumeration over Pauli operators and the two
    /// answers are required to agree. Throws when k = 0.
    std::size_t distance();

    BitVec syndrome(const PauliElement& err) const;
    bool is_detectable(const PauliElement& err) const;
    bool corrects_t_errors(std::size_t t);

    /// 2^k. Throws std::overflow_error when k > 63.
    std::uint64_t ground_degeneracy() const;

private:
    CellEmbedding embedding_;
    std::size_t n_ = 0;
    std::size_t num_x_ = 0;
    std::size_t k_ = 0;
    std::size_t connectivity_ = 0;
    std::vector<PauliElement> generators_;
    BitMatrix check_;
    RowSpace stabilizer_space_;
    std::optional<std::size_t> distance_;
};

StabilizerCode from_embedding(const CellEmbedding& c);

/// Distance by direct enumeration of Pauli operators in order of weight;
/// independent of the homology route. Refuses n > 20.
std::size_t distance_oracle_symplectic(const StabilizerCode& code);

/// First undetectable nonidentity Pauli in weight order, with exhaustive
/// certification that nothing lighter is undetectable. Refuses n > 20.
PauliElement min_undetectable_pauli(const StabilizerCode& code);

/// Text form: header "n <n> rx <rows H1> rz <rows H2>" followed by the rows
/// of H1 then H2 as space-separated 0/1.
std::string export_check_matrix(const StabilizerCode& code);

struct CheckMatrixData {
    std::size_t n = 0;
    BitMatrix h1;
    BitMatrix h2;

    std::size_t logical_qubits() const;
};
CheckMatrixData parse_check_matrix(std::istream& in);
CheckMatrixData parse_check_matrix(const std::string& text);

}  // namespace topocode
