#include "diagnet/topologies.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <fmt/format.h>

#include "diagnet/errors.hpp"

namespace diagnet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr int kMaxCubeDimension = 24;
constexpr int kMaxStarDimension = 9;
constexpr std::size_t kMaxNodes = std::size_t{1} << 24;

// Collects undirected edges, dropping loops and repeats. Small-parameter
// members of some families (CCC_2, EQ_{n,0}) would otherwise produce both.
class EdgeCollector {
public:
    void add(std::uint64_t u, std::uint64_t v) {
        if (u == v) return;
        if (u > v) std::swap(u, v);
        edges_.emplace(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    std::vector<Edge> take() const { return {edges_.begin(), edges_.end()}; }

private:
    std::set<Edge> edges_;
};

std::string bit_label(std::uint64_t x, int n) {
    std::string s;
    for (int i = n - 1; i >= 0; --i) s.push_back(((x >> i) & 1u) ? '1' : '0');
    return s;
}

std::vector<std::string> bit_labels(int n) {
    std::vector<std::string> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) out.push_back(bit_label(x, n));
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ParameterError(message);
}

void require_cube_dimension(int n, const char* family) {
    require(n >= 1 && n <= kMaxCubeDimension, fmt::format("{}: n must be in [1, {}], got {}", family, kMaxCubeDimension, n));
}

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
constexpr std::uint64_t low_mask(int bits) { return bits >= 64 ? ~std::uint64_t{0} : bit(bits) - 1; }

Graph hypercube(const Hypercube& p) {
    const std::uint64_t size = bit(p.n);
    EdgeCollector e;
    for (std::uint64_t x = 0; x < size; ++x)
        for (int i = 0; i < p.n; ++i) e.add(x, x ^ bit(i));
    return Graph(size, e.take(), display_name(p), bit_labels(p.n));
}

Graph enhanced_hypercube(const EnhancedHypercube& p) {
    const std::uint64_t size = bit(p.n);
    const std::uint64_t complement = low_mask(p.s + 1);
    EdgeCollector e;
    for (std::uint64_t x = 0; x < size; ++x) {
        for (int i = 0; i < p.n; ++i) e.add(x, x ^ bit(i));
        e.add(x, x ^ complement);
    }
    return Graph(size, e.take(), display_name(p), bit_labels(p.n));
}

int parity_upto(std::uint64_t x, int j) { return std::popcount(x & low_mask(j + 1)) & 1; }

Graph twisted_cube(const TwistedCube& p) {
    const std::uint64_t size = bit(p.n);
    EdgeCollector e;
    for (std::uint64_t x = 0; x < size; ++x) {
        // k = 0: the pair x_0 x_{-1} degenerates to x_0 alone.
        e.add(x, x ^ bit(0));
        for (int k = 1; 2 * k <= p.n - 1; ++k) {
            const int hi = 2 * k, lo = 2 * k - 1;
            e.add(x, x ^ bit(hi));
            if (parity_upto(x, 2 * k - 2) == 1)
                e.add(x, x ^ bit(lo));
            else
                e.add(x, x ^ bit(hi) ^ bit(lo));
        }
    }
    return Graph(size, e.take(), display_name(p), bit_labels(p.n));
}

Graph mobius_cube(const MobiusCube& p) {
    const std::uint64_t size = bit(p.n);
    EdgeCollector e;
    for (std::uint64_t x = 0; x < size; ++x) {
        for (int i = 0; i + 2 <= p.n; ++i) {
            // Bit i+1 is kept and selects between flipping x_i alone or x_i..x_0.
            if ((x >> (i + 1)) & 1u)
                e.add(x, x ^ low_mask(i + 1));
            else
                e.add(x, x ^ bit(i));
        }
        e.add(x, x ^ (p.variant == 0 ? bit(p.n - 1) : low_mask(p.n)));
    }
    return Graph(size, e.take(), display_name(p), bit_labels(p.n));
}

Graph crossed_cube(const CrossedCube& p) {
    const std::uint64_t size = bit(p.n);
    EdgeCollector e;
    for (std::uint64_t x = 0; x < size; ++x) {
        for (int m = 1; m <= p.n; ++m) {
            std::uint64_t y = x ^ bit(m - 1);
            // Pairs (x_{2i+1} x_{2i}) below the flipped bit: 01 <-> 11, 00 and 10 fixed.
            for (int i = 0; i < (m - 1) / 2; ++i)
                if ((x >> (2 * i)) & 1u) y ^= bit(2 * i + 1);
            e.add(x, y);
        }
    }
    return Graph(size, e.take(), display_name(p), bit_labels(p.n));
}

Graph cube_connected_cycles(const CubeConnectedCycles& p) {
    const std::uint64_t n = static_cast<std::uint64_t>(p.n);
    const std::uint64_t cubes = bit(p.n);
    auto id = [n](std::uint64_t x, std::uint64_t i) { return x * n + i; };
    EdgeCollector e;
    std::vector<std::string> labels;
    for (std::uint64_t x = 0; x < cubes; ++x)
        for (std::uint64_t i = 0; i < n; ++i) {
            e.add(id(x, i), id(x, (i + 1) % n));
            e.add(id(x, i), id(x, (i + n - 1) % n));
            e.add(id(x, i), id(x ^ bit(static_cast<int>(i)), i));
            labels.push_back(fmt::format("[{},{}]", bit_label(x, p.n), i));
        }
    return Graph(cubes * n, e.take(), display_name(p), std::move(labels));
}

Graph torus(const Torus& p) {
    std::uint64_t size = 1;
    for (int i = 0; i < p.n; ++i) size *= static_cast<std::uint64_t>(p.m);
    const auto m = static_cast<std::uint64_t>(p.m);
    EdgeCollector e;
    std::vector<std::string> labels;
    for (std::uint64_t x = 0; x < size; ++x) {
        std::uint64_t place = 1;
        std::string label;
        for (int i = 0; i < p.n; ++i, place *= m) {
            const std::uint64_t digit = (x / place) % m;
            const std::uint64_t base = x - digit * place;
            e.add(x, base + ((digit + 1) % m) * place);
            e.add(x, base + ((digit + m - 1) % m) * place);
            const std::string d = std::to_string(digit);
            label = (p.m > 10 && i > 0) ? d + "," + label : d + label;
        }
        labels.push_back(std::move(label));
    }
    return Graph(size, e.take(), display_name(p), std::move(labels));
}

Graph star(const Star& p) {
    std::vector<int> perm(static_cast<std::size_t>(p.n));
    std::iota(perm.begin(), perm.end(), 1);
    std::map<std::vector<int>, std::uint64_t> rank;
    std::vector<std::vector<int>> perms;
    do {
        rank.emplace(perm, perms.size());
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    EdgeCollector e;
    std::vector<std::string> labels;
    for (std::uint64_t u = 0; u < perms.size(); ++u) {
        std::string label;
        for (int d : perms[u]) label += std::to_string(d);
        labels.push_back(std::move(label));
        for (std::size_t k = 1; k < perms[u].size(); ++k) {
            auto v = perms[u];
            std::swap(v[0], v[k]);
            e.add(u, rank.at(v));
        }
    }
    return Graph(perms.size(), e.take(), display_name(p), std::move(labels));
}

}  // namespace

void validate(const TopologySpec& spec) {
    std::visit(overloaded{
                   [](const Hypercube& p) { require_cube_dimension(p.n, "hypercube"); },
                   [](const EnhancedHypercube& p) {
                       require_cube_dimension(p.n, "enhanced hypercube");
                       require(p.s >= 0 && p.s <= p.n - 1,
                               fmt::format("enhanced hypercube: s must be in [0, {}], got {}", p.n - 1, p.s));
                   },
                   [](const TwistedCube& p) {
                       require_cube_dimension(p.n, "twisted cube");
                       require(p.n >= 3 && p.n % 2 == 1, fmt::format("twisted cube: n must be odd and >= 3, got {}", p.n));
                   },
                   [](const MobiusCube& p) {
                       require_cube_dimension(p.n, "mobius cube");
                       require(p.variant == 0 || p.variant == 1,
                               fmt::format("mobius cube: variant must be 0 or 1, got {}", p.variant));
                   },
                   [](const CrossedCube& p) { require_cube_dimension(p.n, "crossed cube"); },
                   [](const CubeConnectedCycles& p) {
                       require(p.n >= 1 && p.n <= 20, fmt::format("cube-connected cycles: n must be in [1, 20], got {}", p.n));
                   },
                   [](const Torus& p) {
                       require(p.n >= 1, fmt::format("torus: n must be >= 1, got {}", p.n));
                       require(p.m >= 3, fmt::format("torus: m must be >= 3, got {}", p.m));
                       std::size_t size = 1;
                       for (int i = 0; i < p.n; ++i) {
                           size *= static_cast<std::size_t>(p.m);
                           require(size <= kMaxNodes, "torus: too many nodes");
                       }
                   },
                   [](const Star& p) {
                       require(p.n >= 2 && p.n <= kMaxStarDimension,
                               fmt::format("star graph: n must be in [2, {}], got {}", kMaxStarDimension, p.n));
                   },
               },
               spec);
}

std::string family_key(const TopologySpec& spec) {
    return std::visit(overloaded{
                          [](const Hypercube&) { return std::string("hypercube"); },
                          [](const EnhancedHypercube&) { return std::string("enhanced"); },
                          [](const TwistedCube&) { return std::string("twisted"); },
                          [](const MobiusCube&) { return std::string("mobius"); },
                          [](const CrossedCube&) { return std::string("crossed"); },
                          [](const CubeConnectedCycles&) { return std::string("ccc"); },
                          [](const Torus&) { return std::string("torus"); },
                          [](const Star&) { return std::string("star"); },
                      },
                      spec);
}

std::string display_name(const TopologySpec& spec) {
    return std::visit(overloaded{
                          [](const Hypercube& p) { return fmt::format("Q_{}", p.n); },
                          [](const EnhancedHypercube& p) { return fmt::format("EQ_{{{},{}}}", p.n, p.s); },
                          [](const TwistedCube& p) { return fmt::format("TQ_{}", p.n); },
                          [](const MobiusCube& p) { return fmt::format("{}-MQ_{}", p.variant, p.n); },
                          [](const CrossedCube& p) { return fmt::format("CQ_{}", p.n); },
                          [](const CubeConnectedCycles& p) { return fmt::format("CCC_{}", p.n); },
                          [](const Torus& p) { return fmt::format("T_{}({})", p.n, p.m); },
                          [](const Star& p) { return fmt::format("S_{}", p.n); },
                      },
                      spec);
}

Graph generate(const TopologySpec& spec) {
    validate(spec);
    return std::visit(overloaded{
                          [](const Hypercube& p) { return hypercube(p); },
                          [](const EnhancedHypercube& p) { return enhanced_hypercube(p); },
                          [](const TwistedCube& p) { return twisted_cube(p); },
                          [](const MobiusCube& p) { return mobius_cube(p); },
                          [](const CrossedCube& p) { return crossed_cube(p); },
                          [](const CubeConnectedCycles& p) { return cube_connected_cycles(p); },
                          [](const Torus& p) { return torus(p); },
                          [](const Star& p) { return star(p); },
                      },
                      spec);
}

Graph generate_exceptional(const ExceptionalKind& kind) {
    return std::visit(
        overloaded{
            [](const G8&) {
                // x_1..x_8 are nodes 0..7.
                std::vector<Edge> edges;
                for (NodeId i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
                for (NodeId j = 0; j < 4; ++j) edges.emplace_back(j, j + 4);
                std::vector<std::string> labels;
                for (int i = 1; i <= 8; ++i) labels.push_back(fmt::format("x{}", i));
                return Graph(8, edges, "G_8", std::move(labels));
            },
            [](const Crown& c) {
                require(c.n >= 2, fmt::format("crown graph: n must be >= 2, got {}", c.n));
                require(c.n <= (1 << 12), "crown graph: n too large");
                // x_i is node i-1, y_j is node n+j-1.
                const auto n = static_cast<NodeId>(c.n);
                std::vector<Edge> edges;
                for (NodeId i = 0; i < n; ++i)
                    for (NodeId j = 0; j < n; ++j)
                        if (i != j) edges.emplace_back(i, n + j);
                std::vector<std::string> labels;
                for (int i = 1; i <= c.n; ++i) labels.push_back(fmt::format("x{}", i));
                for (int i = 1; i <= c.n; ++i) labels.push_back(fmt::format("y{}", i));
                return Graph(2 * n, edges, fmt::format("G_{{{},{}}}", c.n, c.n), std::move(labels));
            },
            [](const G5&) {
                // z = 0, z_i = i (1..5), z_I = 6.. for I = {1,2}, {1,3}, ..., {4,5}.
                std::vector<std::pair<int, int>> pairs;
                for (int i = 1; i <= 5; ++i)
                    for (int j = i + 1; j <= 5; ++j) pairs.emplace_back(i, j);
                std::vector<Edge> edges;
                std::vector<std::string> labels{"z"};
                for (NodeId i = 1; i <= 5; ++i) {
                    edges.emplace_back(0, i);
                    labels.push_back(fmt::format("z{}", i));
                }
                for (std::size_t a = 0; a < pairs.size(); ++a) {
                    const auto za = static_cast<NodeId>(6 + a);
                    auto [i, j] = pairs[a];
                    labels.push_back(fmt::format("z{}{}", i, j));
                    edges.emplace_back(static_cast<NodeId>(i), za);
                    edges.emplace_back(static_cast<NodeId>(j), za);
                    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                        auto [k, l] = pairs[b];
                        if (i != k && i != l && j != k && j != l) edges.emplace_back(za, static_cast<NodeId>(6 + b));
                    }
                }
                return Graph(16, edges, "G_5", std::move(labels));
            },
        },
        kind);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges, fmt::format("G({}, {})", n, p));
}

}  // namespace diagnet
