#pragma once

#include <string>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/labeling.hpp"

namespace spanlab {

// MSO1 formulas as S-expressions over the operators
//   and, or, not, exists-vertex, forall-vertex, exists-set, in, adj, neq
// with and/or taking any number of arguments ((and) is true, (or) is false).
// The grammar is documented in docs/mso_grammar.md.

// The distance-exactly-2 predicate with free vertex variables u and w:
// distinct, non-adjacent, joined through some middle vertex.
std::string emit_dist2();

// The labeling formula for span k: set variables V0..Vk, a partition
// conjunct, and per-edge / per-distance-2-pair window exclusions of width p
// and q.  Window indices are clipped to [0,k].
std::string emit_phi(int k, PqParams params);

// Parsed formula; nodes live in a flat arena, node 0 is unused.
struct MsoNode {
    enum class Kind { And, Or, Not, ExistsVertex, ForallVertex, ExistsSet, In, Adj, Neq };
    Kind kind;
    std::string var;            // quantified variable name, if any
    std::vector<std::string> terms; // vertex/set names for in, adj, neq
    std::vector<int> children;
};

struct MsoFormula {
    std::vector<MsoNode> nodes;
    int root = -1;
};

MsoFormula parse_formula(const std::string& text);

// Brute-force truth of a closed formula of the emit_phi shape: leading
// exists-set quantifiers, then a body that forces the sets to partition V.
// Enumerates vertex-to-set maps with three-valued pruning.  Refuses n > 8 or
// more than 7 set variables.
bool naive_model_check(const Graph& g, const std::string& formula);

// Evaluates a set-free formula with free vertex variables u and w bound to
// the given vertices (the emit_dist2 shape).
bool naive_check_pair(const Graph& g, const std::string& formula, int u, int w);

} // namespace spanlab
