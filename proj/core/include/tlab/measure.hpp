#pragma once

#include <cstdint>
#include <vector>

#include "tlab/family.hpp"

namespace tlab {

// A probability value, validated to lie in [0,1].
struct Prob {
    double value = 0.0;

    Prob() = default;
    explicit Prob(double p);
};

std::uint64_t binomial(int n, int k);

// Counts N_k of family members per cardinality k. mu_p of a family depends
// on the family only through this profile:
//   mu_p(F) = sum_k N_k p^k (1-p)^(n-k)
// so a profile built once makes every p-sweep a polynomial evaluation.
class CardinalityProfile {
public:
    CardinalityProfile(int n, std::vector<std::uint64_t> counts);
    static CardinalityProfile of(const SetFamily& family);
    static CardinalityProfile of(const UpperSetFamily& upper);

    int n() const { return n_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t total() const;

    // Compensated (Kahan) sum of the defining polynomial at p.
    double eval(double p) const;

private:
    int n_;
    std::vector<std::uint64_t> counts_;
};

// mu_p(S) = p^|S| (1-p)^(n-|S|), with 0^0 = 1.
double mu_subset(const SubsetMask& s, Prob p);

double mu_family(const SetFamily& family, Prob p);
double mu_family(const UpperSetFamily& upper, Prob p);

// P(X_p in A | X_p in B) for A a subfamily of B.
double conditional(const SetFamily& a, const SetFamily& b, Prob p);
double conditional(const SetFamily& a, const UpperSetFamily& b, Prob p);

// r_{A,B}(p) = P(X_p in A | X_p in <A>) / P(X_p in B). Defined on (0,1)
// only; endpoints can be 0/0 and are refused (evaluate at p = 1e-9 or
// 1 - 1e-9 for one-sided limits).
double r_ratio(const SetFamily& a, const SetFamily& b, Prob p);

// The unique p with mu_p(F) = 1/2, located by bisection on [0,1]; the
// bracket is narrowed below `tol`.
Prob p_critical(const UpperSetFamily& upper, double tol = 1e-12);

// Checks P(X in <A>) == P(X in A | X in B) P(X in B) / P(X in A | X in <A>)
// by evaluating both sides independently; true iff they agree within 1e-12.
bool verify_fraction_identity(const SetFamily& a, const SetFamily& b, Prob p);

} // namespace tlab
