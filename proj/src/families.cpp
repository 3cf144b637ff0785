#include "topocode/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "topocode/homology.hpp"

namespace topocode {

namespace {

// ---------------------------------------------------------------------------
// Quotients of the square lattice of the plane
// ---------------------------------------------------------------------------

struct Point {
    long x = 0;
    long y = 0;
    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

// The square lattice modulo the sublattice spanned by u and v. Cosets are
// keyed by a canonical representative (the L1-least member, ties broken
// lexicographically).
class LatticeQuotient {
public:
    LatticeQuotient(Point u, Point v) : u_(u), v_(v) {
        det_ = static_cast<long long>(u.x) * v.y - static_cast<long long>(u.y) * v.x;
        if (det_ == 0) {
            throw std::invalid_argument("LatticeQuotient: basis is singular");
        }
        index_ = det_ < 0 ? -det_ : det_;

        const long limit = static_cast<long>(
            std::max({std::abs(u.x) + std::abs(u.y), std::abs(v.x) + std::abs(v.y)}));
        for (long sy = 0; sy <= 2 * limit && ids_.size() < index_; ++sy) {
            for (long sx = 0; sx <= 2 * limit && ids_.size() < index_; ++sx) {
                const Point rep = canonical({sx, sy});
                if (!ids_.count(rep)) {
                    const auto id = static_cast<VertexId>(ids_.size());
                    ids_[rep] = id;
                    reps_.push_back(rep);
                }
            }
        }
        if (ids_.size() != index_) {
            throw std::logic_error("LatticeQuotient: coset enumeration failed");
        }
    }

    std::size_t size() const { return static_cast<std::size_t>(index_); }
    Point representative(VertexId id) const { return reps_[id]; }

    VertexId coset(Point p) const { return ids_.at(canonical(p)); }

private:
    Point canonical(Point p) const {
        // Rough reduction by the rounded basis coordinates, then an exact
        // local search for the L1-least representative.
        const double mr = (static_cast<double>(p.x) * v_.y - static_cast<double>(p.y) * v_.x) /
                          static_cast<double>(det_);
        const double nr = (static_cast<double>(u_.x) * p.y - static_cast<double>(u_.y) * p.x) /
                          static_cast<double>(det_);
        const long m0 = std::lround(mr);
        const long n0 = std::lround(nr);
        Point best;
        bool have = false;
        for (long i = -2; i <= 2; ++i) {
            for (long j = -2; j <= 2; ++j) {
                const long m = m0 + i;
                const long n = n0 + j;
                const Point cand{p.x - m * u_.x - n * v_.x, p.y - m * u_.y - n * v_.y};
                if (!have || key(cand) < key(best)) {
                    best = cand;
                    have = true;
                }
            }
        }
        return best;
    }

    static std::tuple<long, long, long> key(Point p) {
        return {std::abs(p.x) + std::abs(p.y), p.x, p.y};
    }

    Point u_, v_;
    long long det_ = 0;
    std::size_t index_ = 0;
    std::map<Point, VertexId> ids_;
    std::vector<Point> reps_;
};

// Torus lattice with one east and one north edge per vertex class. The
// rotation (east, north, west, south) makes every face a quadrilateral.
CellEmbedding square_lattice_quotient(Point u, Point v) {
    const LatticeQuotient q(u, v);
    const auto n = static_cast<VertexId>(q.size());

    std::vector<Edge> edges(2 * n);
    std::vector<VertexId> east(n), north(n);
    for (VertexId c = 0; c < n; ++c) {
        const Point r = q.representative(c);
        east[c] = q.coset({r.x + 1, r.y});
        north[c] = q.coset({r.x, r.y + 1});
        edges[2 * c] = Edge{c, east[c], false};
        edges[2 * c + 1] = Edge{c, north[c], false};
    }
    std::vector<VertexId> west(n), south(n);
    for (VertexId c = 0; c < n; ++c) {
        west[east[c]] = c;
        south[north[c]] = c;
    }

    std::vector<std::vector<Dart>> rotations(n);
    for (VertexId c = 0; c < n; ++c) {
        rotations[c] = {make_dart(2 * c, 0), make_dart(2 * c + 1, 0),
                        make_dart(2 * west[c], 1), make_dart(2 * south[c] + 1, 1)};
    }

    CellEmbedding cell =
        trace_faces(EmbeddedGraph(n, std::move(edges), std::move(rotations)));
    if (cell.face_count() != n || cell.euler_characteristic() != 0) {
        throw std::logic_error("square_lattice_quotient: trace did not give a torus grid");
    }
    for (std::size_t f = 0; f < cell.face_count(); ++f) {
        if (cell.face_degree(f) != 4) {
            throw std::logic_error("square_lattice_quotient: non-quadrilateral face");
        }
    }
    return cell;
}

// ---------------------------------------------------------------------------
// Small finite fields GF(p^e) for the complete-graph rotations
// ---------------------------------------------------------------------------

bool prime_power(int q, int* prime = nullptr, int* exponent = nullptr) {
    if (q < 2) {
        return false;
    }
    int base = q;
    for (int p = 2; p * p <= base; ++p) {
        if (base % p == 0) {
            int e = 0;
            while (base % p == 0) {
                base /= p;
                ++e;
            }
            if (base != 1) {
                return false;
            }
            if (prime) {
                *prime = p;
            }
            if (exponent) {
                *exponent = e;
            }
            return true;
        }
    }
    if (prime) {
        *prime = q;
    }
    if (exponent) {
        *exponent = 1;
    }
    return true;
}

// Elements are polynomials over Z_p encoded in base p; tables are small
// (q <= 100 in practice).
class SmallField {
public:
    explicit SmallField(int q) : q_(q) {
        if (!prime_power(q, &p_, &e_)) {
            throw std::invalid_argument("SmallField: order is not a prime power");
        }
        const std::vector<int> modulus = find_irreducible();
        mul_.assign(q_, std::vector<int>(q_));
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                mul_[a][b] = encode(reduce(poly_mul(decode(a), decode(b)), modulus));
            }
        }
    }

    int order() const { return q_; }

    int add(int a, int b) const {
        int out = 0;
        int scale = 1;
        for (int i = 0; i < e_; ++i) {
            out += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return out;
    }

    int mul(int a, int b) const { return mul_[a][b]; }

    /// Smallest generator of the multiplicative group.
    int generator() const {
        for (int g = 2; g < q_; ++g) {
            int x = g;
            int order = 1;
            while (x != 1) {
                x = mul(x, g);
                ++order;
            }
            if (order == q_ - 1) {
                return g;
            }
        }
        throw std::logic_error("SmallField: no generator found");
    }

private:
    std::vector<int> decode(int a) const {
        std::vector<int> c(e_);
        for (int i = 0; i < e_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    int encode(const std::vector<int>& c) const {
        int out = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            out = out * p_ + c[i];
        }
        return out;
    }

    std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
            }
        }
        return out;
    }

    std::vector<int> reduce(std::vector<int> a, const std::vector<int>& modulus) const {
        const int deg_m = static_cast<int>(modulus.size()) - 1;
        for (int i = static_cast<int>(a.size()) - 1; i >= deg_m; --i) {
            const int coeff = a[i];
            if (coeff == 0) {
                continue;
            }
            for (int j = 0; j <= deg_m; ++j) {
                a[i - deg_m + j] = ((a[i - deg_m + j] - coeff * modulus[j]) % p_ + p_) % p_;
            }
        }
        a.resize(std::max<std::size_t>(1, deg_m));
        a.resize(e_, 0);
        return a;
    }

    bool divides(const std::vector<int>& divisor, std::vector<int> poly) const {
        const int deg_d = static_cast<int>(divisor.size()) - 1;
        // divisor is monic
        for (int i = static_cast<int>(poly.size()) - 1; i >= deg_d; --i) {
            const int coeff = poly[i];
            if (coeff == 0) {
                continue;
            }
            for (int j = 0; j <= deg_d; ++j) {
                poly[i - deg_d + j] = ((poly[i - deg_d + j] - coeff * divisor[j]) % p_ + p_) % p_;
            }
        }
        for (int i = 0; i < deg_d; ++i) {
            if (poly[i] != 0) {
                return false;
            }
        }
        return true;
    }

    // Lexicographically least monic irreducible polynomial of degree e.
    std::vector<int> find_irreducible() const {
        if (e_ == 1) {
            return {0, 1};
        }
        std::vector<int> coeffs(e_, 0);
        while (true) {
            std::vector<int> candidate = coeffs;
            candidate.push_back(1);  // monic
            bool irreducible = candidate[0] != 0;  // no root at zero, cheap filter
            for (int deg = 1; irreducible && deg <= e_ / 2; ++deg) {
                std::vector<int> divisor(deg + 1, 0);
                divisor[deg] = 1;
                const auto next_divisor = [&] {
                    for (int i = 0; i < deg; ++i) {
                        if (++divisor[i] < p_) {
                            return true;
                        }
                        divisor[i] = 0;
                    }
                    return false;
                };
                do {
                    if (divides(divisor, candidate)) {
                        irreducible = false;
                        break;
                    }
                } while (next_divisor());
            }
            if (irreducible) {
                return candidate;
            }
            int i = 0;
            while (i < e_ && ++coeffs[i] == p_) {
                coeffs[i] = 0;
                ++i;
            }
            if (i == e_) {
                throw std::logic_error("SmallField: no irreducible polynomial found");
            }
        }
    }

    int q_, p_ = 0, e_ = 0;
    std::vector<std::vector<int>> mul_;
};

// ---------------------------------------------------------------------------
// Complete graphs with a cyclic rotation pattern
// ---------------------------------------------------------------------------

// K_s where vertex i's rotation visits neighbor(i, k) for k = 0..s-2.
template <typename Neighbor>
EmbeddedGraph complete_graph_rotation(int s, Neighbor&& neighbor) {
    std::vector<Edge> edges;
    std::vector<std::vector<EdgeId>> edge_id(s, std::vector<EdgeId>(s, 0));
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            edge_id[i][j] = edge_id[j][i] = static_cast<EdgeId>(edges.size());
            edges.push_back(Edge{static_cast<VertexId>(i), static_cast<VertexId>(j), false});
        }
    }
    std::vector<std::vector<Dart>> rotations(s);
    for (int i = 0; i < s; ++i) {
        rotations[i].reserve(s - 1);
        for (int k = 0; k + 1 < s; ++k) {
            const int j = neighbor(i, k);
            if (j < 0 || j >= s || j == i) {
                throw std::logic_error("complete_graph_rotation: bad neighbor");
            }
            rotations[i].push_back(make_dart(edge_id[i][j], i < j ? 0 : 1));
        }
    }
    return EmbeddedGraph(static_cast<VertexId>(s), std::move(edges), std::move(rotations));
}

constexpr unsigned kRotationSearchSeed = 0x1707C0DEu;
constexpr int kRotationSearchBudget = 20000;

}  // namespace

CellEmbedding kitaev_toric(int d) {
    if (d < 2) {
        throw std::invalid_argument("kitaev_toric: d must be at least 2");
    }
    return square_lattice_quotient({d, 0}, {0, d});
}

CellEmbedding optimal_toric(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("optimal_toric: d must be odd and at least 3");
    }
    const long a = (d + 1) / 2;
    const long b = (d - 1) / 2;
    return square_lattice_quotient({a, b}, {-b, a});
}

CellEmbedding complete_selfdual(int s) {
    if (s < 5 || s % 4 != 1) {
        throw std::invalid_argument("complete_selfdual: s must be 1 (mod 4) and at least 5");
    }
    const int expected_chi = 2 * s - s * (s - 1) / 2;

    if (prime_power(s)) {
        const SmallField field(s);
        const int g = field.generator();
        std::vector<int> offsets(s - 1);
        offsets[0] = g;
        for (int k = 1; k + 1 < s; ++k) {
            offsets[k] = field.mul(offsets[k - 1], g);
        }
        const CellEmbedding cell = trace_faces(complete_graph_rotation(
            s, [&](int i, int k) { return field.add(i, offsets[k]); }));
        if (static_cast<int>(cell.face_count()) != s ||
            cell.euler_characteristic() != expected_chi) {
            throw std::logic_error("complete_selfdual: field rotation gave the wrong surface");
        }
        return cell;
    }

    // No field of this order; look for a cyclic pattern over Z_s instead.
    std::mt19937 rng(kRotationSearchSeed);
    std::vector<int> pattern(s - 1);
    std::iota(pattern.begin(), pattern.end(), 1);
    for (int attempt = 0; attempt < kRotationSearchBudget; ++attempt) {
        std::shuffle(pattern.begin(), pattern.end(), rng);
        const CellEmbedding cell = trace_faces(complete_graph_rotation(
            s, [&](int i, int k) { return (i + pattern[k]) % s; }));
        if (static_cast<int>(cell.face_count()) == s &&
            cell.euler_characteristic() == expected_chi) {
            return cell;
        }
    }
    throw std::domain_error("complete_selfdual: unsupported parameter s=" + std::to_string(s) +
                            " (no cyclic rotation found within the search budget)");
}

bool planar_distance_verified_at_construction(int h, int d) {
    const int side = (d + 1) / 2;
    const int gap = d - 1;
    const long width = static_cast<long>(h) * side + static_cast<long>(h + 1) * gap;
    const long height = side + 2L * gap;
    const long edge_estimate = 2L * width * height + width + height;
    return edge_estimate <= 5000;
}

CellEmbedding planar_holed(int h, int d) {
    if (h < 1) {
        throw std::invalid_argument("planar_holed: h must be at least 1");
    }
    if (d < 2) {
        throw std::invalid_argument("planar_holed: d must be at least 2");
    }
    const int side = (d + 1) / 2;  // hole side ceil(d/2)
    const int gap = d - 1;         // cells between any two open regions
    const int width = h * side + (h + 1) * gap;
    const int height = side + 2 * gap;
    const int hole_y = gap;

    const auto hole_x = [&](int i) { return gap + i * (side + gap); };
    const auto inside_hole_interior = [&](int x, int y) {
        // strictly inside some hole block (removed vertices live here)
        for (int i = 0; i < h; ++i) {
            const int bx = hole_x(i);
            if (x > bx && x < bx + side && y > hole_y && y < hole_y + side) {
                return true;
            }
        }
        return false;
    };
    const auto in_hole_block = [&](int x0, int y0, int x1, int y1) {
        // edge strictly interior to some hole block
        for (int i = 0; i < h; ++i) {
            const int bx = hole_x(i);
            const int by = hole_y;
            if (x0 == x1) {  // vertical edge at x0 between y0 < y1
                if (x0 > bx && x0 < bx + side && y0 >= by && y1 <= by + side) {
                    return true;
                }
            } else {  // horizontal edge at y0 between x0 < x1
                if (y0 > by && y0 < by + side && x0 >= bx && x1 <= bx + side) {
                    return true;
                }
            }
        }
        return false;
    };

    std::vector<VertexId> vertex_id(static_cast<std::size_t>(width + 1) * (height + 1),
                                    UINT32_MAX);
    const auto slot = [&](int x, int y) { return static_cast<std::size_t>(x) * (height + 1) + y; };
    VertexId vertex_count = 0;
    for (int x = 0; x <= width; ++x) {
        for (int y = 0; y <= height; ++y) {
            if (!inside_hole_interior(x, y)) {
                vertex_id[slot(x, y)] = vertex_count++;
            }
        }
    }

    std::vector<Edge> edges;
    std::map<std::pair<std::size_t, std::size_t>, EdgeId> edge_of;  // by slot pair
    for (int x = 0; x <= width; ++x) {
        for (int y = 0; y <= height; ++y) {
            if (vertex_id[slot(x, y)] == UINT32_MAX) {
                continue;
            }
            if (x < width && vertex_id[slot(x + 1, y)] != UINT32_MAX &&
                !in_hole_block(x, y, x + 1, y)) {
                edge_of[{slot(x, y), slot(x + 1, y)}] = static_cast<EdgeId>(edges.size());
                edges.push_back(Edge{vertex_id[slot(x, y)], vertex_id[slot(x + 1, y)], false});
            }
            if (y < height && vertex_id[slot(x, y + 1)] != UINT32_MAX &&
                !in_hole_block(x, y, x, y + 1)) {
                edge_of[{slot(x, y), slot(x, y + 1)}] = static_cast<EdgeId>(edges.size());
                edges.push_back(Edge{vertex_id[slot(x, y)], vertex_id[slot(x, y + 1)], false});
            }
        }
    }

    // Counterclockwise rotations: east, north, west, south.
    std::vector<std::vector<Dart>> rotations(vertex_count);
    for (int x = 0; x <= width; ++x) {
        for (int y = 0; y <= height; ++y) {
            const VertexId v = vertex_id[slot(x, y)];
            if (v == UINT32_MAX) {
                continue;
            }
            auto& rot = rotations[v];
            const auto push = [&](int x2, int y2, bool outgoing) {
                if (x2 < 0 || y2 < 0 || x2 > width || y2 > height) {
                    return;
                }
                const auto key = outgoing ? std::pair{slot(x, y), slot(x2, y2)}
                                          : std::pair{slot(x2, y2), slot(x, y)};
                const auto it = edge_of.find(key);
                if (it != edge_of.end()) {
                    rot.push_back(make_dart(it->second, outgoing ? 0 : 1));
                }
            };
            push(x + 1, y, true);   // east
            push(x, y + 1, true);   // north
            push(x - 1, y, false);  // west
            push(x, y - 1, false);  // south
        }
    }

    CellEmbedding cell = trace_faces(
        EmbeddedGraph(vertex_count, std::move(edges), std::move(rotations)));

    // Open the outer face (the one through all four grid corners) and the
    // hole faces (matched by their boundary edge sets).
    std::vector<std::set<EdgeId>> hole_boundaries(h);
    for (int i = 0; i < h; ++i) {
        const int bx = hole_x(i);
        const int by = hole_y;
        for (int t = 0; t < side; ++t) {
            hole_boundaries[i].insert(edge_of.at({slot(bx + t, by), slot(bx + t + 1, by)}));
            hole_boundaries[i].insert(
                edge_of.at({slot(bx + t, by + side), slot(bx + t + 1, by + side)}));
            hole_boundaries[i].insert(edge_of.at({slot(bx, by + t), slot(bx, by + t + 1)}));
            hole_boundaries[i].insert(
                edge_of.at({slot(bx + side, by + t), slot(bx + side, by + t + 1)}));
        }
    }
    const std::set<VertexId> corners = {
        vertex_id[slot(0, 0)], vertex_id[slot(width, 0)], vertex_id[slot(0, height)],
        vertex_id[slot(width, height)]};

    std::vector<std::uint32_t> open;
    std::vector<bool> hole_found(h, false);
    for (std::uint32_t f = 0; f < cell.face_count(); ++f) {
        std::set<EdgeId> edge_set;
        std::set<VertexId> vertex_set;
        for (Dart dart : cell.face(f)) {
            edge_set.insert(dart_edge(dart));
            vertex_set.insert(cell.graph().dart_vertex(dart));
        }
        bool is_outer = true;
        for (VertexId corner : corners) {
            is_outer = is_outer && vertex_set.count(corner);
        }
        if (is_outer) {
            open.push_back(f);
            continue;
        }
        for (int i = 0; i < h; ++i) {
            if (!hole_found[i] && edge_set == hole_boundaries[i]) {
                hole_found[i] = true;
                open.push_back(f);
                break;
            }
        }
    }
    if (static_cast<int>(open.size()) != h + 1) {
        throw std::logic_error("planar_holed: failed to locate the outer face and every hole");
    }
    cell = cell.with_open_faces(std::move(open));

    if (cell.euler_characteristic() != 1 - h) {
        throw std::logic_error("planar_holed: Euler characteristic is not 1-h");
    }
    if (planar_distance_verified_at_construction(h, d)) {
        const auto cyc = min_nontrivial_cycle(cell);
        const auto cocyc = min_nontrivial_cocycle(cell);
        const std::size_t got = std::min(cyc.weight, cocyc.weight);
        if (got != static_cast<std::size_t>(d)) {
            throw std::logic_error("planar_holed: built distance " + std::to_string(got) +
                                   " instead of " + std::to_string(d));
        }
    }
    return cell;
}

CellEmbedding connected_sum_chain(int d, int count) {
    if (count < 1) {
        throw std::invalid_argument("connected_sum_chain: count must be at least 1");
    }
    CellEmbedding result = optimal_toric(d);
    for (int i = 1; i < count; ++i) {
        result = connected_sum(result, 0, optimal_toric(d), 0);
    }
    return result;
}

RatePoint rate_point(const FamilySpec& spec) {
    RatePoint point;
    switch (spec.family) {
        case Family::kitaev_toric: {
            if (spec.d < 2) {
                throw std::invalid_argument("rate_point: kitaev_toric needs d >= 2");
            }
            point.n = 2LL * spec.d * spec.d;
            point.k = 2;
            point.d = spec.d;
            break;
        }
        case Family::optimal_toric: {
            if (spec.d < 3 || spec.d % 2 == 0) {
                throw std::invalid_argument("rate_point: optimal_toric needs odd d >= 3");
            }
            point.n = 1LL * spec.d * spec.d + 1;
            point.k = 2;
            point.d = spec.d;
            break;
        }
        case Family::complete_selfdual: {
            if (spec.s < 5 || spec.s % 4 != 1) {
                throw std::invalid_argument("rate_point: complete_selfdual needs s = 1 mod 4");
            }
            point.n = 1LL * spec.s * (spec.s - 1) / 2;
            point.k = point.n - 2LL * (spec.s - 1);
            point.d = 3;
            break;
        }
        case Family::planar_holed: {
            const CellEmbedding cell = planar_holed(spec.h, spec.d);
            point.n = cell.graph().edge_count();
            point.k = spec.h;
            point.d = spec.d;
            break;
        }
        case Family::connected_sum_chain: {
            if (spec.count < 1) {
                throw std::invalid_argument("rate_point: chain needs count >= 1");
            }
            if (spec.d < 3 || spec.d % 2 == 0) {
                throw std::invalid_argument("rate_point: chain needs odd d >= 3");
            }
            point.n = spec.count * (1LL * spec.d * spec.d + 1);
            point.k = 2LL * spec.count;
            point.d = spec.d;
            break;
        }
    }
    point.t = (point.d - 1) / 2;
    point.t_over_n = Rational(point.t, point.n);
    point.k_over_n = Rational(point.k, point.n);
    return point;
}

FamilyResult build_family(const FamilySpec& spec) {
    FamilyResult result;
    switch (spec.family) {
        case Family::kitaev_toric:
            result.embedding = kitaev_toric(spec.d);
            result.metadata["family"] = "kitaev-toric d=" + std::to_string(spec.d);
            result.metadata["distance"] = std::to_string(spec.d) + " formula";
            break;
        case Family::optimal_toric:
            result.embedding = optimal_toric(spec.d);
            result.metadata["family"] = "optimal-toric d=" + std::to_string(spec.d);
            result.metadata["distance"] = std::to_string(spec.d) + " formula";
            break;
        case Family::complete_selfdual:
            result.embedding = complete_selfdual(spec.s);
            result.metadata["family"] = "complete s=" + std::to_string(spec.s);
            result.metadata["distance"] = "3 formula";
            if (!prime_power(spec.s)) {
                result.metadata["rotation-search"] =
                    "seed=" + std::to_string(kRotationSearchSeed) +
                    " budget=" + std::to_string(kRotationSearchBudget);
            }
            break;
        case Family::planar_holed:
            result.embedding = planar_holed(spec.h, spec.d);
            result.metadata["family"] =
                "planar holes=" + std::to_string(spec.h) + " d=" + std::to_string(spec.d);
            result.metadata["distance"] =
                std::to_string(spec.d) +
                (planar_distance_verified_at_construction(spec.h, spec.d) ? " verified"
                                                                          : " formula");
            break;
        case Family::connected_sum_chain:
            result.embedding = connected_sum_chain(spec.d, spec.count);
            result.metadata["family"] = "connected-sum-chain d=" + std::to_string(spec.d) +
                                        " count=" + std::to_string(spec.count);
            result.metadata["distance"] = std::to_string(spec.d) + " formula";
            break;
    }
    return result;
}

}  // namespace topocode
