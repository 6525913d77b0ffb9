#include "morita/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace morita {

namespace {

// Primitive positive generator of the radical of the symmetrized form,
// found by exact Gaussian elimination over Q. The catalog diagrams all have
// a one-dimensional radical.
IntVector radical_generator(const QuiverData& q) {
    int n = q.vertex_count;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = q.cartan(i, j);

    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        Rational inv = m[row][col];
        for (int c = 0; c < n; ++c) m[row][c] /= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col[row] = col;
        ++row;
    }
    // Exactly one free column for an affine diagram.
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            if (free_col >= 0)
                throw std::logic_error("radical dimension > 1 for " + q.name);
            free_col = c;
        }
    if (free_col < 0) throw std::logic_error("nondegenerate form for " + q.name);

    std::vector<Rational> v(n, Rational(0));
    v[free_col] = 1;
    for (int r = 0; r < row; ++r) v[pivot_col[r]] = -m[r][free_col];

    Integer lcm_den = 1;
    for (const auto& x : v) lcm_den = lcm(lcm_den, Integer(x.get_den()));
    IntVector delta(n);
    for (int i = 0; i < n; ++i) {
        Rational scaled = v[i] * Rational(lcm_den);
        delta[i] = scaled.get_num();
    }
    Integer g = 0;
    for (const auto& x : delta) g = gcd(g, x);
    if (g != 0)
        for (auto& x : delta) x /= g;
    // Sign-normalize positive.
    bool negative = std::any_of(delta.begin(), delta.end(),
                                [](const Integer& x) { return x < 0; });
    if (negative)
        for (auto& x : delta) x = -x;
    for (const auto& x : delta)
        if (x <= 0) throw std::logic_error("radical vector not positive for " + q.name);
    return delta;
}

void add_edge(QuiverData& q, int tail, int head) {
    q.arrows.emplace_back(tail, head);
    q.adjacency[tail][head] += 1;
    q.adjacency[head][tail] += 1;
}

}  // namespace

QuiverData build_affine_quiver(QuiverFamily family, int rank) {
    QuiverData q;
    q.family = family;
    q.rank = rank;
    switch (family) {
        case QuiverFamily::A: {
            if (rank < 2) throw std::invalid_argument("affine A needs m >= 2");
            q.name = "A" + std::to_string(rank);
            q.vertex_count = rank;
            q.adjacency.assign(rank, std::vector<int>(rank, 0));
            for (int i = 0; i < rank; ++i) add_edge(q, i, (i + 1) % rank);
            break;
        }
        case QuiverFamily::D: {
            if (rank < 4) throw std::invalid_argument("affine D needs n >= 4");
            q.name = "D" + std::to_string(rank);
            int n = rank + 1;
            q.vertex_count = n;
            q.adjacency.assign(n, std::vector<int>(n, 0));
            // Leaves 0,1 fork from the first chain node, leaves 2,3 from the
            // last; the chain is 4..n-1.
            add_edge(q, 0, 4);
            add_edge(q, 1, 4);
            add_edge(q, 2, n - 1);
            add_edge(q, 3, n - 1);
            for (int i = 4; i + 1 < n; ++i) add_edge(q, i, i + 1);
            break;
        }
        case QuiverFamily::E: {
            if (rank < 6 || rank > 8)
                throw std::invalid_argument("affine E needs rank 6, 7 or 8");
            q.name = "E" + std::to_string(rank);
            int n = rank + 1;
            q.vertex_count = n;
            q.adjacency.assign(n, std::vector<int>(n, 0));
            if (rank == 6) {
                // Three arms of length 2 around center 6; tips 0, 2, 4.
                add_edge(q, 0, 1);
                add_edge(q, 1, 6);
                add_edge(q, 2, 3);
                add_edge(q, 3, 6);
                add_edge(q, 4, 5);
                add_edge(q, 5, 6);
            } else if (rank == 7) {
                // Path 0..6 with branch 7 at the middle vertex 3.
                for (int i = 0; i + 1 <= 6; ++i) add_edge(q, i, i + 1);
                add_edge(q, 3, 7);
            } else {
                // Path 0..7 with branch 8 at vertex 5.
                for (int i = 0; i + 1 <= 7; ++i) add_edge(q, i, i + 1);
                add_edge(q, 5, 8);
            }
            break;
        }
    }
    q.delta = radical_generator(q);
    if (q.delta[0] != 1)
        throw std::logic_error("extending vertex has delta != 1 for " + q.name);
    return q;
}

QuiverData parse_quiver_name(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("bad quiver name: " + name);
    QuiverFamily fam;
    switch (name[0]) {
        case 'A': fam = QuiverFamily::A; break;
        case 'D': fam = QuiverFamily::D; break;
        case 'E': fam = QuiverFamily::E; break;
        default: throw std::invalid_argument("bad quiver family: " + name);
    }
    int rank;
    try {
        size_t used = 0;
        rank = std::stoi(name.substr(1), &used);
        if (used + 1 != name.size()) throw std::invalid_argument(name);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad quiver rank: " + name);
    }
    return build_affine_quiver(fam, rank);
}

RingelPairing ringel_form(const QuiverData& q, const IntVector& alpha,
                          const IntVector& beta) {
    if (alpha.size() != static_cast<size_t>(q.vertex_count) ||
        beta.size() != static_cast<size_t>(q.vertex_count))
        throw std::invalid_argument("ringel_form: length mismatch");
    auto pairing = [&](const IntVector& a, const IntVector& b) {
        Integer s = 0;
        for (int i = 0; i < q.vertex_count; ++i) s += a[i] * b[i];
        for (auto [t, h] : q.arrows) s -= a[t] * b[h];
        return s;
    };
    RingelPairing r;
    r.pairing = pairing(alpha, beta);
    r.symmetrized = r.pairing + pairing(beta, alpha);
    return r;
}

GaussianRational param_dot(const ParamVector& lambda, const IntVector& alpha) {
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("param_dot: length mismatch");
    GaussianRational s;
    for (size_t i = 0; i < lambda.size(); ++i) {
        Rational k(alpha[i]);
        s = s + GaussianRational(lambda[i].re * k, lambda[i].im * k);
    }
    return s;
}

ParamVector params_from_central(const QuiverData& q, const ParamVector& f) {
    if (f.size() != static_cast<size_t>(q.vertex_count))
        throw std::invalid_argument("params_from_central: length mismatch");
    ParamVector lambda(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Rational k(q.delta[i]);
        lambda[i] = GaussianRational(f[i].re * k, f[i].im * k);
    }
    return lambda;
}

GaussianRational level(const QuiverData& q, const ParamVector& lambda) {
    return param_dot(lambda, q.delta);
}

bool all_real(const ParamVector& lambda) {
    return std::all_of(lambda.begin(), lambda.end(),
                       [](const GaussianRational& z) { return z.is_real(); });
}

ParamVector real_part(const ParamVector& lambda) {
    ParamVector x(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) x[i] = GaussianRational(lambda[i].re);
    return x;
}

ParamVector imag_part(const ParamVector& lambda) {
    ParamVector y(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) y[i] = GaussianRational(lambda[i].im);
    return y;
}

std::string format_param_vector(const ParamVector& lambda) {
    std::ostringstream os;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) os << ",";
        os << format_scalar(lambda[i]);
    }
    return os.str();
}

ParamVector parse_param_vector(const std::string& text) {
    ParamVector out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_scalar(item));
    if (out.empty()) throw std::invalid_argument("empty parameter vector");
    return out;
}

int compare(const ParamVector& a, const ParamVector& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace morita
