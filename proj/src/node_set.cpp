#include "diagnet/node_set.hpp"

namespace diagnet {

bool lexicographically_less(const NodeSet& a, const NodeSet& b) {
    auto ia = a.begin(), ea = a.end();
    auto ib = b.begin(), eb = b.end();
    for (; ia != ea && ib != eb; ++ia, ++ib)
        if (*ia != *ib) return *ia < *ib;
    return ia == ea && ib != eb;
}

}  // namespace diagnet
