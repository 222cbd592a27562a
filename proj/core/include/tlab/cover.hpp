#pragma once

#include <vector>

#include "tlab/family.hpp"
#include "tlab/measure.hpp"

namespace tlab {

// A certificate family G with F included in the union of the upper sets
// generated by its members. Construction verifies the covering condition.
struct Cover {
    UpperSetFamily target;
    SetFamily members;

    Cover(UpperSetFamily target_, SetFamily members_);

    // Sum over members of p^|S|.
    double cost_at(double p) const;
    // True if no member can be dropped without uncovering a minimal element.
    bool is_irredundant() const;
};

struct CoverCost {
    double cost;
    Cover certificate;
};

inline constexpr int kExactCoverCap = 16;

// Exact minimum of sum p^|S| over all covers of F, with an optimal
// certificate. Exponential in |F0| (subset DP); refuses |F0| above `cap`.
CoverCost min_cover_cost(const UpperSetFamily& f, Prob p, int cap = kExactCoverCap);

// Whether some cover has cost at most 1/2 at p (ties count as small).
bool is_p_small(const UpperSetFamily& f, Prob p, int cap = kExactCoverCap);

struct QThreshold {
    Prob q;
    Cover certificate;
};

// The largest p at which F is p-small, by bisection on the nondecreasing
// minimum-cost map; the certificate is the optimal cover at the returned q.
QThreshold q_threshold(const UpperSetFamily& f, double tol = 1e-12, int cap = kExactCoverCap);

// Greedy agglomerative cover; an upper bound on the exact minimum with no
// cap on |F0|. Certifies p-smallness when its cost is at most 1/2 but can
// never certify non-smallness.
CoverCost greedy_cover_cost(const UpperSetFamily& f, Prob p);

} // namespace tlab
