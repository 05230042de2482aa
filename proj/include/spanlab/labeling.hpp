#pragma once

#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

// A total labeling: labels[v] >= 0 for every vertex v.
using Labeling = std::vector<int>;

struct PqParams {
    int p = 2;
    int q = 1;
};

void validate_params(const PqParams& params);

struct Violation {
    int u = 0, v = 0;
    GapClass cls = GapClass::Dist1; // which distance class was violated
    int gap = 0;                    // |f(u) - f(v)| observed
};

struct Verdict {
    bool valid = true;
    std::vector<Violation> violations;
};

// Checks every adjacent pair against p and every distance-2 pair against q.
// Collects all violations instead of stopping at the first.
Verdict verify(const Graph& g, const Labeling& f, const PqParams& params);

// max(f) - min(f) + 1; zero for an empty graph.
int span_of(const Labeling& f);

// Largest label used; -1 for an empty graph.
int max_label(const Labeling& f);

// Multiplies every label by c >= 1.  Turns an L(1,1)-labeling into an
// L(c,c)-labeling, and more generally scales both gap classes.
Labeling scale_labeling(const Labeling& f, int c);

// Degree bound: Delta + p - 1, or 0 for edgeless graphs.  Valid for q = 1.
int lower_bound_lambda(const Graph& g, int p);

// For q = 1 and Delta >= 3: Delta^2 + (p-1)*Delta - 2.  Otherwise
// max(p,q)*Delta^2, except that for q = 1 and Delta <= 2 the smaller of the
// two formulas is used, clamped from below by lower_bound_lambda.
int upper_bound_lambda(const Graph& g, const PqParams& params);

// Always-correct search ceiling: max(p,q) * Delta^2 (and at least the lower
// bound).  upper_bound_lambda can undercut lambda for p = 1 on dense graphs,
// so the lambda_* drivers iterate up to this instead.
int lambda_search_ceiling(const Graph& g, const PqParams& params);

} // namespace spanlab
