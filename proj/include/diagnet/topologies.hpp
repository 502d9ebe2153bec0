#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include "diagnet/graph.hpp"

namespace diagnet {

/*
 * Network families. Node numbering is deterministic:
 *  - bit-string families: the string x_{n-1}...x_0 is node int(x), bit i = x_i;
 *  - CubeConnectedCycles: [x, i] is node x*n + i;
 *  - Torus: x_{n-1}...x_0 in [m]^n is node sum x_i m^i;
 *  - Star: permutations of 1..n are numbered by lexicographic rank.
 */
struct Hypercube {
    int n;
};
/// Hypercube plus one edge per node complementing bit positions s..0.
struct EnhancedHypercube {
    int n;
    int s;
};
/// n odd.
struct TwistedCube {
    int n;
};
/// variant 0: top dimension flips x_{n-1} only; variant 1: it flips every bit.
struct MobiusCube {
    int n;
    int variant = 0;
};
struct CrossedCube {
    int n;
};
struct CubeConnectedCycles {
    int n;
};
/// m-sided torus of n dimensions, m >= 3.
struct Torus {
    int n;
    int m;
};
/// Star graph on the permutations of 1..n.
struct Star {
    int n;
};

using TopologySpec =
    std::variant<Hypercube, EnhancedHypercube, TwistedCube, MobiusCube, CrossedCube, CubeConnectedCycles, Torus, Star>;

/// Validates parameters; throws ParameterError.
void validate(const TopologySpec& spec);

/// Short family key used on the command line ("hypercube", "torus", ...).
std::string family_key(const TopologySpec& spec);

/// Display name such as "Q_3", "EQ_{4,2}", "T_2(4)".
std::string display_name(const TopologySpec& spec);

Graph generate(const TopologySpec& spec);

/// K_{n,n} minus a perfect matching.
struct Crown {
    int n;
};
/// The 8-cycle with its four long diagonals.
struct G8 {};
/// The 16-node 5-regular graph on z, z_i and z_{ij}.
struct G5 {};

using ExceptionalKind = std::variant<G8, Crown, G5>;

Graph generate_exceptional(const ExceptionalKind& kind);

/// Erdos-Renyi G(n, p) helper for randomized tests.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace diagnet
