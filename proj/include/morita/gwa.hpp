#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morita/exact.hpp"
#include "morita/quiver.hpp"
#include "morita/weyl.hpp"

// Type A dictionary between cycle-quiver parameters and root tuples of
// generalized Weyl algebras, the explicit generator formulas in t-space,
// and the group-orbit Morita decision for root tuples.

namespace morita {

// Ordered tuple (t_0, ..., t_{m-1}); normalized means t_{m-1} = 1.
using GwaRoots = std::vector<GaussianRational>;

bool is_normalized(const GwaRoots& t);

// Distinctness of the entries: required for the Morita reading of a verdict,
// checked and reported rather than enforced.
bool has_distinct_entries(const GwaRoots& t);

/// t'_i = eps * t_{sigma(i)} + d_i + c.
struct GwaGroupElement {
    int eps = 1;  // +1 or -1
    Permutation sigma;
    std::vector<Integer> d;
    GaussianRational c;

    static GwaGroupElement identity(int m);
};

GwaRoots apply_group_element(const GwaGroupElement& g, const GwaRoots& t);
std::string format_group_element(const GwaGroupElement& g);
GwaGroupElement parse_group_element(const std::string& text, int m);

// lambda_0 = t_0, lambda_i = t_i - t_{i-1}; the result lives on the cycle
// quiver with m vertices and has level 1. Throws on non-normalized input.
ParamVector lambda_from_roots(const GwaRoots& t);

// Partial sums t_i = sum_{j<=i} lambda_j. Requires level exactly 1.
GwaRoots roots_from_lambda(const ParamVector& lambda);

enum class GwaGeneratorKind { Reflection, Rho, Tau };

// The t-space action of the cycle-quiver generators: r_i swaps t_{i-1},t_i
// for interior i; r_0 and r_{m-1} act by the boundary formulas; rho and tau
// are the rotation and the reversal. Input and output are normalized.
GwaRoots gwa_generator_in_t(GwaGeneratorKind kind, int index, const GwaRoots& t);

// The matching generator on the cycle-quiver side, for conjugation checks:
// rho is sigma(i) = i-1 mod m, tau is sigma(i) = m-1-i.
WeylLetter gwa_generator_on_quiver(const QuiverData& q, GwaGeneratorKind kind,
                                   int index);

struct NormalizedRoots {
    GwaRoots t;
    GwaGroupElement used;  // t = apply_group_element(used, input)
};

// Sort ascending by (re, im), then shift by c = 1 - max so the last
// coordinate is 1.
NormalizedRoots normalize_roots(const GwaRoots& multiset);

struct GwaDecision {
    bool equivalent = false;
    std::optional<GwaGroupElement> witness;  // maps left tuple to right tuple
    bool left_distinct = true;
    bool right_distinct = true;
    std::string reason;  // set when not equivalent
};

// Orbit membership under the group generated by integer translations,
// diagonal translations, permutations and the global sign change: verdict
// yes iff the residue multisets {t'_i mod Z} and {eps t_k + c mod Z} agree
// for some eps, c; candidates for c come from matching one fixed entry.
GwaDecision gwa_decide(const GwaRoots& left, const GwaRoots& right);

}  // namespace morita
