#include "morita/repmod.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "morita/weyl.hpp"

namespace morita {

Rational ExactField::reduce(const Rational& x) const {
    if (p == 0) return x;
    Integer den = x.get_den();
    Integer mod(p);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible mod p");
    Integer r = (x.get_num() % mod) * inv % mod;
    if (r < 0) r += mod;
    return Rational(r);
}

Rational ExactField::add(const Rational& a, const Rational& b) const {
    Rational r = a + b;
    return p == 0 ? r : reduce(r);
}

Rational ExactField::sub(const Rational& a, const Rational& b) const {
    Rational r = a - b;
    return p == 0 ? r : reduce(r);
}

Rational ExactField::mul(const Rational& a, const Rational& b) const {
    Rational r = a * b;
    return p == 0 ? r : reduce(r);
}

Rational ExactField::neg(const Rational& a) const {
    return p == 0 ? Rational(-a) : reduce(-a);
}

Rational ExactField::inv(const Rational& a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    if (p == 0) return Rational(1) / a;
    Integer mod(p);
    Integer v = a.get_num() % mod;
    if (v < 0) v += mod;
    Integer out;
    if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("field inverse of zero mod p");
    return Rational(out);
}

FMatrix FMatrix::zero(int rows, int cols) {
    FMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<size_t>(rows) * cols, Rational(0));
    return m;
}

FMatrix FMatrix::identity(int n) {
    FMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FMatrix fm_mul(const ExactField& f, const FMatrix& x, const FMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("fm_mul: shape mismatch");
    FMatrix r = FMatrix::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) += v * y.at(k, j);
        }
    if (f.p != 0)
        for (auto& v : r.a) v = f.reduce(v);
    return r;
}

FMatrix fm_add(const ExactField& f, const FMatrix& x, const FMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("fm_add: shape mismatch");
    FMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(r.a[i], y.a[i]);
    return r;
}

FMatrix fm_sub(const ExactField& f, const FMatrix& x, const FMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("fm_sub: shape mismatch");
    FMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(r.a[i], y.a[i]);
    return r;
}

FMatrix fm_scale(const ExactField& f, const Rational& k, const FMatrix& x) {
    FMatrix r = x;
    for (auto& v : r.a) v = f.mul(k, v);
    return r;
}

bool fm_is_zero(const FMatrix& x) {
    return std::all_of(x.a.begin(), x.a.end(), [](const Rational& v) { return v == 0; });
}

namespace {

// Row-reduces m in place; returns pivot columns.
std::vector<int> rref(const ExactField& f, FMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        Rational piv = f.inv(m.at(row, col));
        for (int c = 0; c < m.cols; ++c) m.at(row, c) = f.mul(piv, m.at(row, c));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational k = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(k, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

FMatrix fm_kernel(const ExactField& f, const FMatrix& x) {
    FMatrix m = x;
    std::vector<int> pivots = rref(f, m);
    std::vector<bool> is_pivot(x.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < x.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FMatrix k = FMatrix::zero(x.cols, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        k.at(fc, static_cast<int>(j)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], static_cast<int>(j)) = f.neg(m.at(static_cast<int>(r), fc));
    }
    return k;
}

FMatrix fm_solve(const ExactField& f, const FMatrix& x, const FMatrix& rhs) {
    if (x.rows != rhs.rows) throw std::invalid_argument("fm_solve: shape mismatch");
    FMatrix aug = FMatrix::zero(x.rows, x.cols + rhs.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) aug.at(i, j) = x.at(i, j);
        for (int j = 0; j < rhs.cols; ++j) aug.at(i, x.cols + j) = rhs.at(i, j);
    }
    std::vector<int> pivots = rref(f, aug);
    FMatrix out = FMatrix::zero(x.cols, rhs.cols);
    int row = 0;
    for (int c : pivots) {
        if (c >= x.cols)
            throw std::logic_error("fm_solve: inconsistent system");
        for (int j = 0; j < rhs.cols; ++j) out.at(c, j) = aug.at(row, x.cols + j);
        ++row;
    }
    // Rows past the pivot count must have zero right-hand side.
    for (int r = row; r < x.rows; ++r)
        for (int j = 0; j < rhs.cols; ++j)
            if (aug.at(r, x.cols + j) != 0)
                throw std::logic_error("fm_solve: inconsistent system");
    return out;
}

bool fm_invertible(const ExactField& f, const FMatrix& x) {
    if (x.rows != x.cols) return false;
    FMatrix m = x;
    return static_cast<int>(rref(f, m).size()) == x.rows;
}

RepModule zero_module(const QuiverData& q, const ExactField& field) {
    RepModule m;
    m.field = field;
    m.dims.assign(q.vertex_count, Integer(0));
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        m.fwd.push_back(FMatrix::zero(0, 0));
        m.rev.push_back(FMatrix::zero(0, 0));
    }
    return m;
}

namespace {

int dim_at(const RepModule& m, int v) { return static_cast<int>(m.dims[v].get_si()); }

void check_shapes(const QuiverData& q, const RepModule& m) {
    if (m.dims.size() != static_cast<size_t>(q.vertex_count) ||
        m.fwd.size() != q.arrows.size() || m.rev.size() != q.arrows.size())
        throw std::invalid_argument("module does not match quiver");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [t, h] = q.arrows[a];
        if (m.fwd[a].rows != dim_at(m, h) || m.fwd[a].cols != dim_at(m, t) ||
            m.rev[a].rows != dim_at(m, t) || m.rev[a].cols != dim_at(m, h))
            throw std::invalid_argument("arrow matrix shape mismatch");
    }
}

Rational field_scalar(const ExactField& f, const GaussianRational& z) {
    if (!z.is_real())
        throw std::invalid_argument("module parameters must be real scalars");
    return f.reduce(z.re);
}

}  // namespace

RelationReport check_relations(const QuiverData& q, const ParamVector& lambda,
                               const RepModule& m) {
    check_shapes(q, m);
    RelationReport report;
    for (int i = 0; i < q.vertex_count; ++i) {
        int d = dim_at(m, i);
        FMatrix acc = FMatrix::zero(d, d);
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            auto [t, h] = q.arrows[a];
            if (h == i) acc = fm_add(m.field, acc, fm_mul(m.field, m.fwd[a], m.rev[a]));
            if (t == i) acc = fm_sub(m.field, acc, fm_mul(m.field, m.rev[a], m.fwd[a]));
        }
        FMatrix target = fm_scale(m.field, field_scalar(m.field, lambda[i]),
                                  FMatrix::identity(d));
        if (!(acc == target)) {
            report.ok = false;
            report.defects.push_back(i);
        }
    }
    return report;
}

RepModule simple_at(const QuiverData& q, const ParamVector& lambda,
                    const ExactField& field, int i) {
    if (i < 0 || i >= q.vertex_count)
        throw std::invalid_argument("simple_at: bad vertex");
    if (field_scalar(field, lambda[i]) != 0)
        throw std::domain_error("no one-dimensional module at a vertex with lambda_i != 0");
    RepModule m = zero_module(q, field);
    m.dims[i] = 1;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [t, h] = q.arrows[a];
        m.fwd[a] = FMatrix::zero(dim_at(m, h), dim_at(m, t));
        m.rev[a] = FMatrix::zero(dim_at(m, t), dim_at(m, h));
    }
    return m;
}

std::optional<ReflectResult> reflect_module(const QuiverData& q,
                                            const ParamVector& lambda, int i,
                                            const RepModule& m) {
    if (i < 0 || i >= q.vertex_count)
        throw std::invalid_argument("reflect_module: bad vertex");
    RelationReport rel = check_relations(q, lambda, m);
    if (!rel.ok) throw std::invalid_argument("reflect_module: input module fails relations");

    const ExactField& f = m.field;
    Rational li = field_scalar(f, lambda[i]);
    if (li == 0) return std::nullopt;

    // Blocks of V = direct sum of M_{t(b)} over doubled arrows b with head i.
    struct Block {
        size_t arrow;
        bool reversed;  // true: the doubled arrow is a*, a out of i
        int vertex;     // the far end
        int offset;
        int size;
    };
    std::vector<Block> blocks;
    int total = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [t, h] = q.arrows[a];
        if (h == i) {
            blocks.push_back({a, false, t, total, dim_at(m, t)});
            total += dim_at(m, t);
        }
        if (t == i) {
            blocks.push_back({a, true, h, total, dim_at(m, h)});
            total += dim_at(m, h);
        }
    }

    int di = dim_at(m, i);
    FMatrix pi = FMatrix::zero(di, total);   // assembled map V -> M_i
    FMatrix nu = FMatrix::zero(total, di);   // section with pi * nu = lambda_i
    for (const Block& b : blocks) {
        const FMatrix& into = b.reversed ? m.rev[b.arrow] : m.fwd[b.arrow];
        const FMatrix& outof = b.reversed ? m.fwd[b.arrow] : m.rev[b.arrow];
        for (int r = 0; r < di; ++r)
            for (int c = 0; c < b.size; ++c) pi.at(r, b.offset + c) = into.at(r, c);
        for (int r = 0; r < b.size; ++r)
            for (int c = 0; c < di; ++c) {
                Rational v = outof.at(r, c);
                nu.at(b.offset + r, c) = b.reversed ? f.neg(v) : v;
            }
    }

    FMatrix kernel = fm_kernel(f, pi);  // columns = basis of the new M_i
    int dnew = kernel.cols;

    // Projector onto ker pi along im nu: rho = Id - nu pi / lambda_i.
    FMatrix rho = fm_sub(f, FMatrix::identity(total),
                         fm_scale(f, f.inv(li), fm_mul(f, nu, pi)));

    ReflectResult out;
    out.lambda = dual_reflection_r(q, i, lambda);
    out.module = m;
    out.module.dims[i] = dnew;

    Rational mli = f.neg(li);
    for (const Block& b : blocks) {
        // out_b = rows of the kernel basis in this block: new map out of i.
        FMatrix out_b = FMatrix::zero(b.size, dnew);
        for (int r = 0; r < b.size; ++r)
            for (int c = 0; c < dnew; ++c) out_b.at(r, c) = kernel.at(b.offset + r, c);
        // in_b = -lambda_i * sign(b) * (kernel coordinates of rho restricted
        // to this block): new map into i.
        FMatrix rho_b = FMatrix::zero(total, b.size);
        for (int r = 0; r < total; ++r)
            for (int c = 0; c < b.size; ++c) rho_b.at(r, c) = rho.at(r, b.offset + c);
        FMatrix coords = fm_solve(f, kernel, rho_b);
        Rational factor = b.reversed ? li : mli;
        FMatrix in_b = fm_scale(f, factor, coords);
        if (!b.reversed) {
            out.module.fwd[b.arrow] = in_b;    // t(a) -> new M_i
            out.module.rev[b.arrow] = out_b;   // new M_i -> t(a)
        } else {
            out.module.fwd[b.arrow] = out_b;   // new M_i -> h(a)
            out.module.rev[b.arrow] = in_b;    // h(a) -> new M_i
        }
    }
    return out;
}

bool module_iso(const QuiverData& q, const RepModule& m, const RepModule& n) {
    check_shapes(q, m);
    check_shapes(q, n);
    if (m.field.p != n.field.p)
        throw std::invalid_argument("module_iso: different fields");
    if (m.dims != n.dims) return false;
    const ExactField& f = m.field;

    // Unknowns: phi_v (dims_v x dims_v) per vertex; equations per doubled
    // arrow: phi_h M_a = N_a phi_t and phi_t M_a* = N_a* phi_h.
    std::vector<int> offset(q.vertex_count + 1, 0);
    for (int v = 0; v < q.vertex_count; ++v)
        offset[v + 1] = offset[v] + dim_at(m, v) * dim_at(m, v);
    int unknowns = offset[q.vertex_count];
    if (unknowns == 0) return true;  // zero module vs zero module

    auto var = [&](int v, int r, int c) { return offset[v] + r * dim_at(m, v) + c; };

    std::vector<std::vector<Rational>> rows;
    auto add_equations = [&](int tv, int hv, const FMatrix& ma, const FMatrix& na) {
        // phi_h * ma - na * phi_t = 0, entrywise (dims_h x dims_t).
        int dh = dim_at(m, hv), dt = dim_at(m, tv);
        for (int r = 0; r < dh; ++r)
            for (int c = 0; c < dt; ++c) {
                std::vector<Rational> row(unknowns, Rational(0));
                for (int k = 0; k < dh; ++k)
                    row[var(hv, r, k)] = f.add(row[var(hv, r, k)], ma.at(k, c));
                for (int k = 0; k < dt; ++k)
                    row[var(tv, k, c)] = f.sub(row[var(tv, k, c)], na.at(r, k));
                rows.push_back(std::move(row));
            }
    };
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [t, h] = q.arrows[a];
        add_equations(t, h, m.fwd[a], n.fwd[a]);
        add_equations(h, t, m.rev[a], n.rev[a]);
    }

    FMatrix sys = FMatrix::zero(static_cast<int>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < unknowns; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
    FMatrix basis = rows.empty() ? FMatrix::identity(unknowns) : fm_kernel(f, sys);
    if (basis.cols == 0) return false;

    auto all_invertible = [&](const std::vector<Rational>& combo) {
        for (int v = 0; v < q.vertex_count; ++v) {
            int d = dim_at(m, v);
            FMatrix phi = FMatrix::zero(d, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    Rational s(0);
                    for (int k = 0; k < basis.cols; ++k)
                        s = f.add(s, f.mul(combo[k], basis.at(var(v, r, c), k)));
                    phi.at(r, c) = s;
                }
            if (!fm_invertible(f, phi)) return false;
        }
        return true;
    };

    // Basis elements first, then seeded random combinations. Invertibility
    // is a Zariski-open condition, so random combinations find a witness
    // with overwhelming probability when one exists.
    std::vector<Rational> combo(basis.cols, Rational(0));
    for (int k = 0; k < basis.cols; ++k) {
        std::fill(combo.begin(), combo.end(), Rational(0));
        combo[k] = 1;
        if (all_invertible(combo)) return true;
    }
    std::mt19937_64 rng(0x5eed5eedULL);
    long span = f.p == 0 ? 1000003L : static_cast<long>(f.p);
    for (int attempt = 0; attempt < 400; ++attempt) {
        for (int k = 0; k < basis.cols; ++k) {
            Rational v(static_cast<long>(rng() % span));
            combo[k] = f.p == 0 ? v : f.reduce(v);
        }
        if (all_invertible(combo)) return true;
    }
    // Deterministic sweep for low-dimensional solution spaces.
    if (basis.cols <= 3) {
        long radius = 8;
        std::vector<long> idx(basis.cols, 0);
        for (;;) {
            for (int k = 0; k < basis.cols; ++k)
                combo[k] = f.reduce(Rational(idx[k] - radius));
            if (all_invertible(combo)) return true;
            int k = 0;
            while (k < basis.cols && ++idx[k] > 2 * radius) idx[k++] = 0;
            if (k == basis.cols) break;
        }
    }
    return false;
}

}  // namespace morita
