#include "topocode/code.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace topocode {

StabilizerCode::StabilizerCode(CellEmbedding embedding) : embedding_(std::move(embedding)) {
    const EmbeddedGraph& g = embedding_.graph();
    n_ = g.edge_count();
    num_x_ = g.vertex_count();
    const auto interior = embedding_.interior_face_ids();

    // Vertex generators first in vertex order, then interior face generators
    // in canonical face order; this fixes the syndrome bit layout.
    const BitMatrix h1 = vertex_edge_incidence(g);
    const BitMatrix h2 = face_edge_incidence(embedding_, true);

    check_ = BitMatrix(num_x_ + interior.size(), 2 * n_);
    for (VertexId v = 0; v < num_x_; ++v) {
        Cochain co = vertex_coboundary(embedding_, v);
        generators_.push_back(cochain_operator(co));
        for (std::size_t e : co.edges.support()) {
            check_.set(v, e);
        }
    }
    for (std::size_t i = 0; i < interior.size(); ++i) {
        Chain ch = face_boundary(embedding_, interior[i]);
        generators_.push_back(chain_operator(ch));
        for (std::size_t e : ch.edges.support()) {
            check_.set(num_x_ + i, n_ + e);
        }
    }

    k_ = n_ - (rank(h1) + rank(h2));
    connectivity_ = 0;
    for (const PauliElement& gen : generators_) {
        connectivity_ = std::max(connectivity_, weight(gen));
    }
    stabilizer_space_ = RowSpace(check_);
}

StabilizerCode from_embedding(const CellEmbedding& c) {
    return StabilizerCode(c);
}

BitMatrix StabilizerCode::x_block() const {
    return vertex_edge_incidence(embedding_.graph());
}

BitMatrix StabilizerCode::z_block() const {
    return face_edge_incidence(embedding_, true);
}

BitVec StabilizerCode::syndrome(const PauliElement& err) const {
    if (err.num_qubits() != n_) {
        throw std::invalid_argument("syndrome: operator acts on wrong number of qubits");
    }
    BitVec s(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (symplectic_product(generators_[i], err)) {
            s.set(i);
        }
    }
    return s;
}

namespace {

BitVec symplectic_vector(const PauliElement& p) {
    BitVec v(2 * p.num_qubits());
    for (std::size_t i : p.x().support()) {
        v.set(i);
    }
    for (std::size_t i : p.z().support()) {
        v.set(p.num_qubits() + i);
    }
    return v;
}

}  // namespace

bool StabilizerCode::is_detectable(const PauliElement& err) const {
    return syndrome(err).any() || stabilizer_space_.contains(symplectic_vector(err));
}

std::size_t StabilizerCode::distance() {
    if (distance_) {
        return *distance_;
    }
    if (k_ == 0) {
        throw std::domain_error("distance: the code has no logical qubits");
    }
    const MinCycle z_side = min_nontrivial_cycle(embedding_);
    const MinCocycle x_side = min_nontrivial_cocycle(embedding_);
    const std::size_t d = std::min(z_side.weight, x_side.weight);
    if (n_ <= 20) {
        const std::size_t direct = distance_oracle_symplectic(*this);
        if (direct != d) {
            throw std::logic_error("distance: homology route (" + std::to_string(d) +
                                   ") disagrees with symplectic enumeration (" +
                                   std::to_string(direct) + ")");
        }
    }
    distance_ = d;
    return d;
}

bool StabilizerCode::corrects_t_errors(std::size_t t) {
    return distance() > 2 * t;
}

std::uint64_t StabilizerCode::ground_degeneracy() const {
    if (k_ > 63) {
        throw std::overflow_error("ground_degeneracy: 2^k exceeds 64-bit range");
    }
    return std::uint64_t{1} << k_;
}

namespace {

// Visits every Pauli of the given weight in deterministic order; stops early
// when the callback returns true.
template <typename Callback>
bool for_each_pauli_of_weight(std::size_t n, std::size_t w, Callback&& cb) {
    std::vector<std::size_t> support(w);
    std::vector<int> kind(w, 0);  // 0 = X, 1 = Z, 2 = Y
    for (std::size_t i = 0; i < w; ++i) {
        support[i] = i;
    }
    while (true) {
        std::fill(kind.begin(), kind.end(), 0);
        while (true) {
            PauliElement p{[&] {
                BitVec x(n), z(n);
                for (std::size_t i = 0; i < w; ++i) {
                    if (kind[i] != 1) {
                        x.set(support[i]);
                    }
                    if (kind[i] != 0) {
                        z.set(support[i]);
                    }
                }
                return PauliElement(std::move(x), std::move(z));
            }()};
            if (cb(p)) {
                return true;
            }
            std::size_t pos = 0;
            while (pos < w && kind[pos] == 2) {
                kind[pos] = 0;
                ++pos;
            }
            if (pos == w) {
                break;
            }
            ++kind[pos];
        }
        // Next support combination in lexicographic order.
        std::size_t i = w;
        while (i > 0) {
            --i;
            if (support[i] != i + n - w) {
                ++support[i];
                for (std::size_t j = i + 1; j < w; ++j) {
                    support[j] = support[j - 1] + 1;
                }
                break;
            }
            if (i == 0) {
                return false;
            }
        }
        if (w == 0) {
            return false;
        }
    }
}

}  // namespace

std::size_t distance_oracle_symplectic(const StabilizerCode& code) {
    return weight(min_undetectable_pauli(code));
}

PauliElement min_undetectable_pauli(const StabilizerCode& code) {
    const std::size_t n = code.num_qubits();
    if (n > 20) {
        throw std::domain_error("symplectic enumeration refuses: n > 20");
    }
    if (code.num_logical_qubits() == 0) {
        throw std::domain_error("symplectic enumeration: the code has no logical qubits");
    }
    for (std::size_t w = 1; w <= n; ++w) {
        PauliElement found;
        const bool hit = for_each_pauli_of_weight(n, w, [&](const PauliElement& p) {
            if (!code.is_detectable(p)) {
                found = p;
                return true;
            }
            return false;
        });
        if (hit) {
            return found;
        }
    }
    throw std::logic_error("min_undetectable_pauli: no witness found up to weight n");
}

std::string export_check_matrix(const StabilizerCode& code) {
    const BitMatrix h1 = code.x_block();
    const BitMatrix h2 = code.z_block();
    std::ostringstream out;
    out << "n " << code.num_qubits() << " rx " << h1.rows() << " rz " << h2.rows() << "\n";
    const auto emit = [&out](const BitMatrix& m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (c) {
                    out << ' ';
                }
                out << (m.get(r, c) ? '1' : '0');
            }
            out << "\n";
        }
    };
    emit(h1);
    emit(h2);
    return out.str();
}

std::size_t CheckMatrixData::logical_qubits() const {
    return n - (topocode::rank(h1) + topocode::rank(h2));
}

CheckMatrixData parse_check_matrix(std::istream& in) {
    std::string tag_n, tag_rx, tag_rz;
    std::size_t n = 0, rx = 0, rz = 0;
    if (!(in >> tag_n >> n >> tag_rx >> rx >> tag_rz >> rz) || tag_n != "n" || tag_rx != "rx" ||
        tag_rz != "rz") {
        throw std::runtime_error("parse_check_matrix: malformed header");
    }
    const auto read_block = [&](std::size_t rows) {
        BitMatrix m(rows, n);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                int bit = 0;
                if (!(in >> bit) || (bit != 0 && bit != 1)) {
                    throw std::runtime_error("parse_check_matrix: expected 0/1 entries");
                }
                if (bit) {
                    m.set(r, c);
                }
            }
        }
        return m;
    };
    CheckMatrixData data;
    data.n = n;
    data.h1 = read_block(rx);
    data.h2 = read_block(rz);
    return data;
}

CheckMatrixData parse_check_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_check_matrix(in);
}

}  // namespace topocode
