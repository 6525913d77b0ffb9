#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "morita/exact.hpp"
#include "morita/quiver.hpp"

// The extended affine Weyl group: reflections s_i / r_i, diagram
// automorphisms, K_0 bookkeeping, translation lattice, canonical forms and
// the orbit decision.

namespace morita {

// Vertex permutation as an image table: sigma[i] is the image of i. The
// action on vectors is (sigma.v)_{sigma(i)} = v_i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& sigma);
bool is_diagram_automorphism(const QuiverData& q, const Permutation& sigma);

/// One generator: either a reflection at a vertex or a diagram automorphism.
struct WeylLetter {
    std::variant<int, Permutation> value;

    static WeylLetter reflect(int i) { return {i}; }
    static WeylLetter automorphism(Permutation sigma) { return {std::move(sigma)}; }
    bool is_reflection() const { return std::holds_alternative<int>(value); }
    int vertex() const { return std::get<int>(value); }
    const Permutation& sigma() const { return std::get<Permutation>(value); }
};

// Words act right-to-left: the last letter is applied first.
using WeylWord = std::vector<WeylLetter>;

WeylWord inverse_word(const WeylWord& w);
WeylWord concat_words(const WeylWord& outer, const WeylWord& inner);
std::string format_word(const WeylWord& w);
WeylWord parse_word(const QuiverData& q, const std::string& text);

// s_i(alpha) = alpha - (alpha, eps_i) eps_i on dimension vectors.
IntVector simple_reflection_s(const QuiverData& q, int i, const IntVector& alpha);

// r_i(lambda)_j = lambda_j - (eps_i, eps_j) lambda_i, the dual action
// characterized by r_i(lambda) . alpha = lambda . s_i(alpha).
ParamVector dual_reflection_r(const QuiverData& q, int i, const ParamVector& lambda);

// Full automorphism group of the undirected diagram, multiplicities
// respected, deterministically ordered.
std::vector<Permutation> diagram_automorphisms(const QuiverData& q);

ParamVector apply_automorphism(const Permutation& sigma, const ParamVector& lambda);
IntVector apply_automorphism(const Permutation& sigma, const IntVector& alpha);

ParamVector apply_word(const QuiverData& q, const WeylWord& w, const ParamVector& lambda);
IntVector apply_word(const QuiverData& q, const WeylWord& w, const IntVector& alpha);

/// Square integer matrix acting on Z^I column vectors.
struct IntMatrix {
    int n = 0;
    std::vector<Integer> a;  // row-major

    static IntMatrix identity(int n);
    Integer& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Integer& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    IntMatrix operator*(const IntMatrix& o) const;
    IntVector apply(const IntVector& v) const;
    bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
};

// K_0 class of the reflection-functor composite along w. Formal mode
// (lambda absent): every reflect(i) contributes the matrix of s_i. With
// lambda, a reflect(i) letter contributes the identity exactly when the
// parameter reaching it has i-th entry 0, matching E_i = Id there; the
// parameter is threaded right to left.
IntMatrix k0_of_word(const QuiverData& q, const WeylWord& w,
                     const std::optional<ParamVector>& lambda = std::nullopt);

// Z-basis of Lambda = { xi in Z^I : xi . delta = 0 }: eps_i - delta_i eps_0
// for i = 1..|I|-1.
std::vector<IntVector> translation_lattice_basis(const QuiverData& q);

struct CanonicalForm {
    ParamVector canonical;
    WeylWord word;  // canonical = apply_word(word, input)
};

// Dominant representative (all entries >= 0) of the W_ext orbit, then the
// lexicographic minimum over its diagram-automorphism images. Requires all
// entries real and level > 0; throws std::domain_error otherwise.
CanonicalForm canonical_form(const QuiverData& q, const ParamVector& lambda);

struct CanonicalPair {
    ParamVector x0;  // canonical real part
    ParamVector y0;  // canonical imaginary part given x0
    WeylWord word;   // apply_word(word, input) = x0 + i*y0
};

// Orbit invariant for Gaussian-rational parameters with real positive
// level: reduce the real part, then canonicalize the imaginary part under
// the stabilizer of the reduced real part. Two parameters are equivalent
// iff their canonical pairs coincide.
CanonicalPair canonical_form_complex(const QuiverData& q, const ParamVector& lambda);

struct OrbitDecision {
    bool equivalent = false;
    std::optional<WeylWord> witness;  // maps lambda to lambda2 when equivalent
};

// W_ext orbit equality. Levels must be real; differing levels are an
// immediate "not equivalent". Level <= 0 is rejected with std::domain_error
// (dominance reduction needs positive level).
OrbitDecision same_orbit(const QuiverData& q, const ParamVector& lambda,
                         const ParamVector& lambda2);

struct QuiverParam {
    QuiverData quiver;
    ParamVector lambda;
};

// Orbit equality for parameters of product groups: a bijection matching
// quiver types under which each pair is same_orbit-equivalent.
bool decide_product(const std::vector<QuiverParam>& left,
                    const std::vector<QuiverParam>& right);

// Integer d with d . delta = 0 exactly and d = lambda2 - lambda (mod p),
// for mod-p parameters of level 1. Throws std::invalid_argument when the
// level precondition fails.
IntVector fp_translation_witness(const QuiverData& q, const IntVector& lambda,
                                 const IntVector& lambda2, const Integer& p);

}  // namespace morita
