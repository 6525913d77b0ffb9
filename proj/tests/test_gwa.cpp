#include <doctest.h>

#include <algorithm>
#include <random>

#include "morita/gwa.hpp"
#include "morita/roots.hpp"

using namespace morita;

namespace {

GaussianRational grat(long num, long den = 1) {
    return GaussianRational(make_rational(num, den));
}

GwaRoots random_normalized(int m, std::mt19937_64& rng, bool complex_part,
                           bool distinct) {
    for (;;) {
        GwaRoots t(m);
        for (int i = 0; i < m - 1; ++i) {
            Rational re = make_rational(static_cast<long>(rng() % 33) - 16,
                                        1 + static_cast<long>(rng() % 6));
            Rational im = complex_part && rng() % 2
                              ? make_rational(static_cast<long>(rng() % 9) - 4,
                                              1 + static_cast<long>(rng() % 3))
                              : Rational(0);
            t[i] = GaussianRational(re, im);
        }
        t[m - 1] = grat(1);
        if (!distinct || has_distinct_entries(t)) return t;
    }
}

GwaGroupElement random_group_element(int m, std::mt19937_64& rng) {
    GwaGroupElement g = GwaGroupElement::identity(m);
    g.eps = rng() % 2 ? 1 : -1;
    for (int i = m - 1; i > 0; --i)
        std::swap(g.sigma[i], g.sigma[rng() % (i + 1)]);
    for (auto& d : g.d) d = static_cast<long>(rng() % 11) - 5;
    g.c = GaussianRational(make_rational(static_cast<long>(rng() % 17) - 8,
                                         1 + static_cast<long>(rng() % 4)),
                           rng() % 3 == 0
                               ? make_rational(static_cast<long>(rng() % 7) - 3, 2)
                               : Rational(0));
    return g;
}

}  // namespace

TEST_CASE("dictionary between parameters and root tuples") {
    GwaRoots t = {grat(1, 2), grat(3, 4), grat(1)};
    ParamVector lambda = lambda_from_roots(t);
    CHECK(lambda == parse_param_vector("1/2,1/4,1/4"));
    CHECK(roots_from_lambda(lambda) == t);

    GwaRoots two = {grat(0), grat(1)};
    CHECK(lambda_from_roots(two) == parse_param_vector("0,1"));

    CHECK(roots_from_lambda(parse_param_vector("1,0,0")) ==
          GwaRoots{grat(1), grat(1), grat(1)});
    CHECK(roots_from_lambda(parse_param_vector("0,0,1")) ==
          GwaRoots{grat(0), grat(0), grat(1)});

    CHECK_THROWS_AS(lambda_from_roots(GwaRoots{grat(0), grat(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(roots_from_lambda(parse_param_vector("1,0,1")),
                    std::invalid_argument);

    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        GwaRoots tuple = random_normalized(2 + rng() % 7, rng, trial % 2 == 0, false);
        CHECK(roots_from_lambda(lambda_from_roots(tuple)) == tuple);
    }
}

TEST_CASE("t-space generator formulas on small tuples") {
    // m = 3: r_1 swaps the first two coordinates.
    GwaRoots t = {grat(2, 5), grat(7, 3), grat(1)};
    CHECK(gwa_generator_in_t(GwaGeneratorKind::Reflection, 1, t) ==
          GwaRoots{grat(7, 3), grat(2, 5), grat(1)});

    // m = 3: r_2 maps (t0, t1, 1) to (t0 + 1 - t1, 2 - t1, 1).
    CHECK(gwa_generator_in_t(GwaGeneratorKind::Reflection, 2, t) ==
          GwaRoots{grat(2, 5) + grat(1) - grat(7, 3), grat(2) - grat(7, 3), grat(1)});

    // tau maps (t0, t1, 1) to (1 - t1, 1 - t0, 1).
    CHECK(gwa_generator_in_t(GwaGeneratorKind::Tau, 0, t) ==
          GwaRoots{grat(1) - grat(7, 3), grat(1) - grat(2, 5), grat(1)});

    // rho maps (t0, t1, 1) to (t1 - t0, 1 - t0, 1).
    CHECK(gwa_generator_in_t(GwaGeneratorKind::Rho, 0, t) ==
          GwaRoots{grat(7, 3) - grat(2, 5), grat(1) - grat(2, 5), grat(1)});
}

TEST_CASE("t-space formulas conjugate to the quiver-side generators") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 2 + static_cast<int>(rng() % 7);  // up to 8
        QuiverData q = build_affine_quiver(QuiverFamily::A, m);
        GwaRoots t = random_normalized(m, rng, trial % 3 == 0, false);
        ParamVector lambda = lambda_from_roots(t);

        std::vector<std::pair<GwaGeneratorKind, int>> gens;
        for (int i = 0; i < m; ++i) gens.push_back({GwaGeneratorKind::Reflection, i});
        gens.push_back({GwaGeneratorKind::Rho, 0});
        gens.push_back({GwaGeneratorKind::Tau, 0});

        for (auto [kind, index] : gens) {
            CAPTURE(m);
            CAPTURE(index);
            GwaRoots direct = gwa_generator_in_t(kind, index, t);
            WeylLetter letter = gwa_generator_on_quiver(q, kind, index);
            ParamVector moved = apply_word(q, {letter}, lambda);
            CHECK(direct == roots_from_lambda(moved));
        }
    }
}

TEST_CASE("group element application and serialization") {
    GwaGroupElement id = GwaGroupElement::identity(3);
    GwaRoots t = {grat(0), grat(1, 2), grat(1)};
    CHECK(apply_group_element(id, t) == t);

    GwaGroupElement g = GwaGroupElement::identity(3);
    g.eps = -1;
    g.d = {Integer(0), Integer(1), Integer(2)};
    g.c = grat(1, 2);
    CHECK(apply_group_element(g, t) == GwaRoots{grat(1, 2), grat(1), grat(3, 2)});

    // Diagonal translation renormalizes the last coordinate.
    GwaGroupElement shift = GwaGroupElement::identity(3);
    GwaRoots off = {grat(3, 2), grat(1, 2), grat(5, 2)};
    shift.c = grat(1) - off.back();
    CHECK(apply_group_element(shift, off).back() == grat(1));

    GwaGroupElement reparsed = parse_group_element(format_group_element(g), 3);
    CHECK(apply_group_element(reparsed, t) == apply_group_element(g, t));
    CHECK_THROWS_AS(parse_group_element("eps=1 sigma=(0 1) d=[0,0] c=x", 2),
                    std::invalid_argument);
}

TEST_CASE("normalization sorts and pins the last coordinate to 1") {
    NormalizedRoots n1 = normalize_roots({grat(1), grat(0), grat(1, 2)});
    CHECK(n1.t == GwaRoots{grat(0), grat(1, 2), grat(1)});
    CHECK(n1.used.c == grat(0));

    NormalizedRoots n2 = normalize_roots({grat(3, 2), grat(1, 2), grat(5, 2)});
    CHECK(n2.t == GwaRoots{grat(-1), grat(0), grat(1)});
    CHECK(n2.used.c == grat(-3, 2));

    // {i, 0}: lex order puts i after 0; the recorded shift is c = 1 - i and
    // applies to every coordinate.
    NormalizedRoots n3 =
        normalize_roots({GaussianRational(Rational(0), Rational(1)), grat(0)});
    CHECK(n3.used.c == GaussianRational(Rational(1), Rational(-1)));
    CHECK(n3.t == GwaRoots{GaussianRational(Rational(1), Rational(-1)), grat(1)});
    CHECK(is_normalized(n3.t));

    std::mt19937_64 rng(4444);
    for (int trial = 0; trial < 50; ++trial) {
        GwaRoots raw(2 + rng() % 6);
        for (auto& x : raw)
            x = GaussianRational(make_rational(static_cast<long>(rng() % 21) - 10, 2),
                                 make_rational(static_cast<long>(rng() % 5) - 2, 1));
        NormalizedRoots n = normalize_roots(raw);
        CHECK(is_normalized(n.t));
        CHECK(apply_group_element(n.used, raw) == n.t);
    }
}

TEST_CASE("gwa_decide worked examples") {
    GwaDecision yes = gwa_decide({grat(0), grat(1, 2), grat(1)},
                                 {grat(1, 2), grat(1), grat(5, 2)});
    CHECK(yes.equivalent);
    REQUIRE(yes.witness.has_value());
    CHECK(apply_group_element(*yes.witness, {grat(0), grat(1, 2), grat(1)}) ==
          GwaRoots{grat(1, 2), grat(1), grat(5, 2)});

    GwaDecision no = gwa_decide({grat(0), grat(1, 2), grat(1)},
                                {grat(0), grat(1, 3), grat(1)});
    CHECK_FALSE(no.equivalent);

    GwaRoots self = {grat(-2), grat(5, 7), grat(1)};
    GwaDecision refl = gwa_decide(self, self);
    CHECK(refl.equivalent);

    GwaDecision sizes = gwa_decide({grat(0), grat(1)}, {grat(0), grat(1), grat(2)});
    CHECK_FALSE(sizes.equivalent);
    CHECK_FALSE(sizes.reason.empty());

    GwaDecision repeated = gwa_decide({grat(0), grat(0)}, {grat(1), grat(1)});
    CHECK(repeated.equivalent);
    CHECK_FALSE(repeated.left_distinct);
    CHECK_FALSE(repeated.right_distinct);
}

TEST_CASE("gwa_decide accepts every group image and is symmetric") {
    std::mt19937_64 rng(60221023);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + static_cast<int>(rng() % 7);
        GwaRoots t = random_normalized(m, rng, trial % 4 == 0, false);
        GwaGroupElement g = random_group_element(m, rng);
        GwaRoots image = apply_group_element(g, t);

        GwaDecision d = gwa_decide(t, image);
        REQUIRE(d.equivalent);
        CHECK(apply_group_element(*d.witness, t) == image);

        GwaDecision back = gwa_decide(image, t);
        CHECK(back.equivalent);
    }
    // Symmetric negatives as well.
    for (int trial = 0; trial < 50; ++trial) {
        int m = 2 + static_cast<int>(rng() % 5);
        GwaRoots a = random_normalized(m, rng, false, false);
        GwaRoots b = random_normalized(m, rng, false, false);
        CHECK(gwa_decide(a, b).equivalent == gwa_decide(b, a).equivalent);
    }
}

TEST_CASE("near-miss complex pairs: residue decision vs canonical pairs") {
    // Scaling one imaginary part produces tuples that share every coarse
    // invariant yet sit in different orbits; both decision procedures must
    // agree on these adversarial negatives and on genuine positives.
    std::mt19937_64 rng(777777);
    int negatives = 0, positives = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int m = 2 + static_cast<int>(rng() % 3);  // up to 4
        QuiverData q = build_affine_quiver(QuiverFamily::A, m);
        GwaRoots t = random_normalized(m, rng, true, true);

        GwaRoots scaled = t;
        int k = static_cast<int>(rng() % (m - 1));
        Rational factor(2 + static_cast<long>(rng() % 3));
        scaled[k] = GaussianRational(scaled[k].re, scaled[k].im * factor);
        if (!has_distinct_entries(scaled)) continue;

        bool gwa_same = gwa_decide(t, scaled).equivalent;
        bool orbit_same =
            same_orbit(q, lambda_from_roots(t), lambda_from_roots(scaled)).equivalent;
        CHECK(gwa_same == orbit_same);
        (gwa_same ? positives : negatives)++;

        GwaRoots moved =
            normalize_roots(apply_group_element(random_group_element(m, rng), t)).t;
        bool gwa_pos = gwa_decide(t, moved).equivalent;
        bool orbit_pos =
            same_orbit(q, lambda_from_roots(t), lambda_from_roots(moved)).equivalent;
        CHECK(gwa_pos);
        CHECK(orbit_pos);
    }
    CHECK(negatives > 30);
}

TEST_CASE("gwa_decide agrees with the quiver-side orbit decision") {
    std::mt19937_64 rng(1729);
    int checked_equivalent = 0, checked_inequivalent = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int m = 2 + static_cast<int>(rng() % 5);  // up to 6
        bool complex_part = trial % 3 == 0;
        QuiverData q = build_affine_quiver(QuiverFamily::A, m);
        GwaRoots t = random_normalized(m, rng, complex_part, true);
        GwaRoots t2;
        if (trial % 2 == 0) {
            // Same orbit by construction, then renormalized.
            GwaRoots image = apply_group_element(random_group_element(m, rng), t);
            t2 = normalize_roots(image).t;
        } else {
            t2 = random_normalized(m, rng, complex_part, true);
        }
        if (!has_distinct_entries(t2)) continue;

        bool gwa_verdict = gwa_decide(t, t2).equivalent;
        bool orbit_verdict =
            same_orbit(q, lambda_from_roots(t), lambda_from_roots(t2)).equivalent;
        CHECK(gwa_verdict == orbit_verdict);
        (gwa_verdict ? checked_equivalent : checked_inequivalent)++;
    }
    CHECK(checked_equivalent > 20);
    CHECK(checked_inequivalent > 20);
}
