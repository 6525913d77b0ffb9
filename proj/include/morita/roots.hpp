#pragma once

#include <vector>

#include "morita/exact.hpp"
#include "morita/quiver.hpp"

// Root systems of the catalog diagrams and the parameter classification
// (commutative / regular / generic) that drives the Morita machinery.

namespace morita {

struct RootSet {
    std::vector<IntVector> roots;  // closed under negation, no duplicates
};

// Roots of the finite diagram obtained by deleting the extending vertex:
// all alpha with alpha_0 = 0 and (alpha, alpha) = 2, enumerated by closing
// the simple roots eps_i (i != 0) under the simple reflections.
RootSet finite_roots(const QuiverData& q);

// { alpha + k*delta : alpha finite root, |k| <= bound }.
RootSet affine_real_roots(const QuiverData& q, int bound);

struct ParamClass {
    GaussianRational level;
    bool commutative;  // level == 0
    bool regular;      // lambda . alpha != 0 for every finite root
    bool generic;      // lambda . alpha != 0 for every affine root
};

// Genericity over the infinitely many roots alpha + k*delta is decided
// exactly: lambda.(alpha + k delta) = lambda.alpha + k*level, so the test
// is whether lambda.alpha / level ever lands in Z.
ParamClass classify_parameter(const QuiverData& q, const ParamVector& lambda);

}  // namespace morita
