#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morita/exact.hpp"

// Catalog of affine ADE quivers: the diagrams underlying finite subgroups of
// SL2 via the McKay correspondence, with their bilinear forms and the
// minimal imaginary root delta.

namespace morita {

enum class QuiverFamily { A, D, E };

/// Affine ADE diagram with a fixed orientation. Vertex 0 is the extending
/// vertex: delta_0 = 1 and deleting it leaves the finite Dynkin diagram.
struct QuiverData {
    QuiverFamily family;
    int rank;  // A m>=2 (cycle length), D n>=4, E 6|7|8
    std::string name;
    int vertex_count;
    std::vector<std::pair<int, int>> arrows;  // (tail, head), one per edge
    std::vector<std::vector<int>> adjacency;  // symmetric edge multiplicities
    IntVector delta;

    // Symmetrized form on coordinate vectors: (eps_i, eps_j) = 2*[i==j] - A_ij.
    int cartan(int i, int j) const {
        return (i == j ? 2 : 0) - adjacency[i][j];
    }
};

// (A, m>=2): cycle with m vertices (m=2 is a doubled edge). (D, n>=4) and
// (E, 6|7|8): the standard extended Dynkin trees. delta is computed as the
// primitive integer kernel vector of the symmetrized form, not hard-coded.
// Throws std::invalid_argument for unsupported family/rank.
QuiverData build_affine_quiver(QuiverFamily family, int rank);

// "A3", "D4", "E6" ... used by the CLI.
QuiverData parse_quiver_name(const std::string& name);

struct RingelPairing {
    Integer pairing;      // <alpha, beta>
    Integer symmetrized;  // (alpha, beta)
};

// <a,b> = sum a_i b_i - sum_{arrows} a_tail b_head; (a,b) = <a,b> + <b,a>.
RingelPairing ringel_form(const QuiverData& q, const IntVector& alpha,
                          const IntVector& beta);

/// Deformation parameter: one exact scalar per vertex.
using ParamVector = std::vector<GaussianRational>;

GaussianRational param_dot(const ParamVector& lambda, const IntVector& alpha);

// lambda_i = f_i * delta_i, the passage from central elements to vertex
// parameters.
ParamVector params_from_central(const QuiverData& q, const ParamVector& f);

// The level lambda . delta, invariant under the whole extended Weyl group.
GaussianRational level(const QuiverData& q, const ParamVector& lambda);

bool all_real(const ParamVector& lambda);
ParamVector real_part(const ParamVector& lambda);
ParamVector imag_part(const ParamVector& lambda);
std::string format_param_vector(const ParamVector& lambda);
ParamVector parse_param_vector(const std::string& text);

// Lexicographic order on parameter vectors using the scalar (re, im) order.
int compare(const ParamVector& a, const ParamVector& b);

}  // namespace morita
