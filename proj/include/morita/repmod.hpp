#pragma once

#include <optional>
#include <vector>

#include "morita/exact.hpp"
#include "morita/quiver.hpp"

// Finite-dimensional representations of the deformed preprojective algebra
// over Q or F_p, the defining-relation check, and the reflection functor
// realized concretely on matrices.

namespace morita {

/// Coefficient field: rationals when p == 0, integers mod p otherwise.
/// F_p elements are stored as integral Rationals in [0, p).
struct ExactField {
    unsigned long p = 0;

    bool is_rational() const { return p == 0; }
    // Embeds a/b into the field; throws std::domain_error when p | b.
    Rational reduce(const Rational& x) const;
    Rational add(const Rational& a, const Rational& b) const;
    Rational sub(const Rational& a, const Rational& b) const;
    Rational mul(const Rational& a, const Rational& b) const;
    Rational neg(const Rational& a) const;
    Rational inv(const Rational& a) const;  // throws on zero
    bool eq(const Rational& a, const Rational& b) const { return a == b; }
};

/// Dense matrix over an ExactField, row-major.
struct FMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    static FMatrix zero(int rows, int cols);
    static FMatrix identity(int n);
    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const {
        return a[static_cast<size_t>(i) * cols + j];
    }
    bool operator==(const FMatrix& o) const = default;
};

FMatrix fm_mul(const ExactField& f, const FMatrix& x, const FMatrix& y);
FMatrix fm_add(const ExactField& f, const FMatrix& x, const FMatrix& y);
FMatrix fm_sub(const ExactField& f, const FMatrix& x, const FMatrix& y);
FMatrix fm_scale(const ExactField& f, const Rational& k, const FMatrix& x);
bool fm_is_zero(const FMatrix& x);
// Columns form a basis of { v : x v = 0 }.
FMatrix fm_kernel(const ExactField& f, const FMatrix& x);
// Solves x * out = rhs for a consistent system; throws std::logic_error if
// inconsistent.
FMatrix fm_solve(const ExactField& f, const FMatrix& x, const FMatrix& rhs);
bool fm_invertible(const ExactField& f, const FMatrix& x);

/// Module over Pi^lambda(Q): one space per vertex, one matrix per doubled
/// arrow. fwd[a] : M_{t(a)} -> M_{h(a)}, rev[a] : M_{h(a)} -> M_{t(a)}.
struct RepModule {
    ExactField field;
    IntVector dims;
    std::vector<FMatrix> fwd;
    std::vector<FMatrix> rev;
};

RepModule zero_module(const QuiverData& q, const ExactField& field);

struct RelationReport {
    bool ok = true;
    std::vector<int> defects;  // vertices where the relation fails
};

// sum_{a: h(a)=i} M_a M_a* - sum_{a: t(a)=i} M_a* M_a = lambda_i Id on M_i,
// checked exactly at every vertex.
RelationReport check_relations(const QuiverData& q, const ParamVector& lambda,
                               const RepModule& m);

// One-dimensional module at vertex i, all maps zero. Exists iff lambda_i
// reduces to 0 in the field; throws std::domain_error otherwise.
RepModule simple_at(const QuiverData& q, const ParamVector& lambda,
                    const ExactField& field, int i);

struct ReflectResult {
    ParamVector lambda;  // r_i of the input parameter
    RepModule module;
};

// Reflection functor at vertex i. Returns nullopt when lambda_i = 0 in the
// field (the functor is the identity there). Throws std::invalid_argument
// when the input fails check_relations.
std::optional<ReflectResult> reflect_module(const QuiverData& q,
                                            const ParamVector& lambda, int i,
                                            const RepModule& m);

// Vertex-wise invertible intertwiner exists? Searches the intertwiner
// solution space for an invertible element.
bool module_iso(const QuiverData& q, const RepModule& m, const RepModule& n);

}  // namespace morita
