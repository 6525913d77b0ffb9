#include "morita/roots.hpp"

#include <set>
#include <stdexcept>

#include "morita/weyl.hpp"

namespace morita {

RootSet finite_roots(const QuiverData& q) {
    int n = q.vertex_count;
    std::set<IntVector> seen;
    std::vector<IntVector> queue;
    for (int i = 1; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVector alpha = queue.back();
        queue.pop_back();
        for (int i = 1; i < n; ++i) {
            IntVector beta = simple_reflection_s(q, i, alpha);
            if (seen.insert(beta).second) queue.push_back(beta);
        }
    }
    RootSet rs;
    rs.roots.assign(seen.begin(), seen.end());
    return rs;
}

RootSet affine_real_roots(const QuiverData& q, int bound) {
    if (bound < 0) throw std::invalid_argument("affine_real_roots: bound < 0");
    RootSet finite = finite_roots(q);
    RootSet rs;
    for (int k = -bound; k <= bound; ++k) {
        IntVector kdelta = scale(Integer(k), q.delta);
        for (const auto& alpha : finite.roots) rs.roots.push_back(add(alpha, kdelta));
    }
    return rs;
}

ParamClass classify_parameter(const QuiverData& q, const ParamVector& lambda) {
    ParamClass out;
    out.level = level(q, lambda);
    out.commutative = out.level.is_zero();
    out.regular = true;
    out.generic = !out.commutative;
    for (const auto& alpha : finite_roots(q).roots) {
        GaussianRational pairing = param_dot(lambda, alpha);
        if (pairing.is_zero()) {
            out.regular = false;
            out.generic = false;
        } else if (out.generic && (pairing / out.level).is_integer()) {
            out.generic = false;
        }
        if (!out.regular && !out.generic) break;
    }
    return out;
}

}  // namespace morita
