#include <doctest.h>

#include <random>
#include <set>

#include "morita/gwa.hpp"
#include "morita/roots.hpp"
#include "morita/weyl.hpp"

using namespace morita;

namespace {

// Independent oracle: box enumeration. Finite-root coefficients are bounded
// by the marks delta_i, so the box |alpha_i| <= delta_i with alpha_0 = 0
// covers everything.
std::set<IntVector> brute_force_finite_roots(const QuiverData& q) {
    int n = q.vertex_count;
    std::set<IntVector> out;
    IntVector alpha(n, Integer(0));
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (!is_zero(alpha) &&
                ringel_form(q, alpha, alpha).symmetrized == 2)
                out.insert(alpha);
            return;
        }
        long bound = q.delta[v].get_si();
        for (long x = -bound; x <= bound; ++x) {
            alpha[v] = x;
            self(self, v + 1);
        }
        alpha[v] = 0;
    };
    alpha[0] = 0;
    rec(rec, 1);
    return out;
}

ParamVector random_rational_params(const QuiverData& q, std::mt19937_64& rng) {
    ParamVector lambda(q.vertex_count);
    for (auto& x : lambda)
        x = GaussianRational(make_rational(static_cast<long>(rng() % 41) - 20,
                                           1 + static_cast<long>(rng() % 6)));
    return lambda;
}

}  // namespace

TEST_CASE("A3 finite roots are the six expected vectors") {
    QuiverData a3 = parse_quiver_name("A3");
    std::set<IntVector> expected = {{0, 1, 0},  {0, 0, 1},  {0, 1, 1},
                                    {0, -1, 0}, {0, 0, -1}, {0, -1, -1}};
    RootSet rs = finite_roots(a3);
    CHECK(std::set<IntVector>(rs.roots.begin(), rs.roots.end()) == expected);
}

TEST_CASE("reflection closure matches box enumeration") {
    for (const char* name : {"A2", "A3", "A4", "A5", "D4"}) {
        QuiverData q = parse_quiver_name(name);
        CAPTURE(name);
        RootSet rs = finite_roots(q);
        std::set<IntVector> closure(rs.roots.begin(), rs.roots.end());
        CHECK(closure == brute_force_finite_roots(q));
    }
}

TEST_CASE("finite root counts") {
    for (int m = 2; m <= 6; ++m) {
        QuiverData q = build_affine_quiver(QuiverFamily::A, m);
        CHECK(finite_roots(q).roots.size() == static_cast<size_t>(m * (m - 1)));
    }
    CHECK(finite_roots(parse_quiver_name("D4")).roots.size() == 24);
    CHECK(finite_roots(parse_quiver_name("E6")).roots.size() == 72);
    CHECK(finite_roots(parse_quiver_name("E7")).roots.size() == 126);
    CHECK(finite_roots(parse_quiver_name("E8")).roots.size() == 240);
}

TEST_CASE("finite roots are closed under negation and simple reflections") {
    QuiverData q = parse_quiver_name("D4");
    RootSet rs = finite_roots(q);
    std::set<IntVector> all(rs.roots.begin(), rs.roots.end());
    for (const auto& alpha : rs.roots) {
        CHECK(all.count(negate(alpha)) == 1);
        for (int i = 1; i < q.vertex_count; ++i)
            CHECK(all.count(simple_reflection_s(q, i, alpha)) == 1);
    }
}

TEST_CASE("affine slices") {
    QuiverData a3 = parse_quiver_name("A3");
    CHECK(affine_real_roots(a3, 0).roots.size() == 6);
    CHECK(affine_real_roots(a3, 1).roots.size() == 18);
    {
        RootSet rs = affine_real_roots(a3, 2);
        std::set<IntVector> all(rs.roots.begin(), rs.roots.end());
        for (const auto& alpha : rs.roots) {
            CHECK(all.count(negate(alpha)) == 1);
            CHECK(ringel_form(a3, alpha, alpha).symmetrized == 2);
        }
    }
    QuiverData d4 = parse_quiver_name("D4");
    CHECK(affine_real_roots(d4, 3).roots.size() == 24 * 7);
    std::set<IntVector> dedup;
    for (const auto& r : affine_real_roots(d4, 2).roots) dedup.insert(r);
    CHECK(dedup.size() == 24 * 5);
    CHECK_THROWS_AS(affine_real_roots(a3, -1), std::invalid_argument);
}

TEST_CASE("classification worked examples") {
    QuiverData a3 = parse_quiver_name("A3");

    ParamClass one = classify_parameter(a3, parse_param_vector("1,0,0"));
    CHECK(one.level == GaussianRational(Rational(1)));
    CHECK_FALSE(one.commutative);
    CHECK_FALSE(one.regular);  // lambda . eps_1 = 0
    CHECK_FALSE(one.generic);

    ParamClass reg = classify_parameter(a3, parse_param_vector("1/2,1/4,1/4"));
    CHECK(reg.regular);
    CHECK(reg.generic);

    ParamClass comm = classify_parameter(a3, parse_param_vector("1,-2,1"));
    CHECK(comm.commutative);
    CHECK_FALSE(comm.generic);
}

TEST_CASE("genericity is invariant under the group and lattice translations") {
    std::mt19937_64 rng(20240817);
    for (const char* name : {"A3", "D4"}) {
        QuiverData q = parse_quiver_name(name);
        auto autos = diagram_automorphisms(q);
        auto basis = translation_lattice_basis(q);
        for (int trial = 0; trial < 100; ++trial) {
            ParamVector lambda = random_rational_params(q, rng);
            bool generic = classify_parameter(q, lambda).generic;

            int i = static_cast<int>(rng() % q.vertex_count);
            CHECK(classify_parameter(q, dual_reflection_r(q, i, lambda)).generic ==
                  generic);

            const Permutation& sigma = autos[rng() % autos.size()];
            CHECK(classify_parameter(q, apply_automorphism(sigma, lambda)).generic ==
                  generic);

            // Adding d in Lambda is the group's translation action on the
            // level-1 slice, so the invariance statement lives there.
            ParamVector level_one = lambda;
            level_one[0] =
                level_one[0] + (GaussianRational(Rational(1)) - level(q, lambda));
            bool generic_one = classify_parameter(q, level_one).generic;
            const IntVector& d = basis[rng() % basis.size()];
            ParamVector translated = level_one;
            for (int v = 0; v < q.vertex_count; ++v)
                translated[v] = translated[v] + GaussianRational(Rational(d[v]));
            CHECK(classify_parameter(q, translated).generic == generic_one);
        }
    }
}

TEST_CASE("type A consistency with the partial-sum dictionary") {
    std::mt19937_64 rng(99);
    QuiverData a4 = parse_quiver_name("A4");
    for (int trial = 0; trial < 100; ++trial) {
        // Random level-1 parameter.
        ParamVector lambda(4);
        GaussianRational sum;
        for (int i = 0; i < 3; ++i) {
            lambda[i] = GaussianRational(
                make_rational(static_cast<long>(rng() % 21) - 10,
                              1 + static_cast<long>(rng() % 5)));
            sum = sum + lambda[i];
        }
        lambda[3] = GaussianRational(Rational(1)) - sum;
        GwaRoots t = roots_from_lambda(lambda);

        ParamClass pc = classify_parameter(a4, lambda);
        bool distinct = true;
        bool integer_free = true;
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j) {
                GaussianRational diff = t[i] - t[j];
                if (diff.is_zero()) distinct = false;
                if (diff.is_integer()) integer_free = false;
            }
        CHECK(pc.regular == distinct);
        CHECK(pc.generic == integer_free);
    }
}
