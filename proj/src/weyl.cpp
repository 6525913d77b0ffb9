#include "morita/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace morita {

namespace {

constexpr long kReductionCap = 1000000;

void check_vertex(const QuiverData& q, int i) {
    if (i < 0 || i >= q.vertex_count)
        throw std::invalid_argument("vertex index out of range: " + std::to_string(i));
}

}  // namespace

Permutation identity_permutation(int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Permutation inverse_permutation(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<int>(i);
    return inv;
}

bool is_diagram_automorphism(const QuiverData& q, const Permutation& sigma) {
    if (sigma.size() != static_cast<size_t>(q.vertex_count)) return false;
    std::vector<bool> hit(q.vertex_count, false);
    for (int img : sigma) {
        if (img < 0 || img >= q.vertex_count || hit[img]) return false;
        hit[img] = true;
    }
    for (int i = 0; i < q.vertex_count; ++i)
        for (int j = 0; j < q.vertex_count; ++j)
            if (q.adjacency[i][j] != q.adjacency[sigma[i]][sigma[j]]) return false;
    return true;
}

IntVector simple_reflection_s(const QuiverData& q, int i, const IntVector& alpha) {
    check_vertex(q, i);
    if (alpha.size() != static_cast<size_t>(q.vertex_count))
        throw std::invalid_argument("simple_reflection_s: length mismatch");
    Integer pairing = 0;
    for (int j = 0; j < q.vertex_count; ++j) pairing += q.cartan(i, j) * alpha[j];
    IntVector out = alpha;
    out[i] -= pairing;
    return out;
}

ParamVector dual_reflection_r(const QuiverData& q, int i, const ParamVector& lambda) {
    check_vertex(q, i);
    if (lambda.size() != static_cast<size_t>(q.vertex_count))
        throw std::invalid_argument("dual_reflection_r: length mismatch");
    ParamVector out = lambda;
    const GaussianRational& li = lambda[i];
    for (int j = 0; j < q.vertex_count; ++j) {
        int c = q.cartan(i, j);
        if (c == 0) continue;
        Rational k(c);
        out[j] = out[j] - GaussianRational(li.re * k, li.im * k);
    }
    return out;
}

std::vector<Permutation> diagram_automorphisms(const QuiverData& q) {
    int n = q.vertex_count;
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) degree[i] += q.adjacency[i][j];

    std::vector<Permutation> found;
    Permutation sigma(n, -1);
    std::vector<bool> used(n, false);

    auto consistent = [&](int v, int img) {
        if (degree[v] != degree[img]) return false;
        for (int u = 0; u < v; ++u)
            if (q.adjacency[v][u] != q.adjacency[img][sigma[u]]) return false;
        return true;
    };
    // DFS assigning images in increasing order; output is lex-sorted.
    auto search = [&](auto&& self, int v) -> void {
        if (v == n) {
            found.push_back(sigma);
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[img] || !consistent(v, img)) continue;
            sigma[v] = img;
            used[img] = true;
            self(self, v + 1);
            used[img] = false;
            sigma[v] = -1;
        }
    };
    search(search, 0);
    return found;
}

ParamVector apply_automorphism(const Permutation& sigma, const ParamVector& lambda) {
    ParamVector out(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) out[sigma[i]] = lambda[i];
    return out;
}

IntVector apply_automorphism(const Permutation& sigma, const IntVector& alpha) {
    IntVector out(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) out[sigma[i]] = alpha[i];
    return out;
}

ParamVector apply_word(const QuiverData& q, const WeylWord& w, const ParamVector& lambda) {
    ParamVector cur = lambda;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->is_reflection())
            cur = dual_reflection_r(q, it->vertex(), cur);
        else
            cur = apply_automorphism(it->sigma(), cur);
    }
    return cur;
}

IntVector apply_word(const QuiverData& q, const WeylWord& w, const IntVector& alpha) {
    IntVector cur = alpha;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->is_reflection())
            cur = simple_reflection_s(q, it->vertex(), cur);
        else
            cur = apply_automorphism(it->sigma(), cur);
    }
    return cur;
}

WeylWord inverse_word(const WeylWord& w) {
    WeylWord inv;
    inv.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->is_reflection())
            inv.push_back(*it);
        else
            inv.push_back(WeylLetter::automorphism(inverse_permutation(it->sigma())));
    }
    return inv;
}

WeylWord concat_words(const WeylWord& outer, const WeylWord& inner) {
    WeylWord w = outer;
    w.insert(w.end(), inner.begin(), inner.end());
    return w;
}

std::string format_word(const WeylWord& w) {
    if (w.empty()) return "id";
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << " ";
        const WeylLetter& l = w[k];
        if (l.is_reflection()) {
            os << "r" << l.vertex();
            continue;
        }
        const Permutation& sigma = l.sigma();
        os << "sigma";
        bool any = false;
        std::vector<bool> seen(sigma.size(), false);
        for (size_t i = 0; i < sigma.size(); ++i) {
            if (seen[i] || sigma[i] == static_cast<int>(i)) continue;
            os << "(";
            size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) os << ">";
                os << j;
                first = false;
                j = sigma[j];
            }
            os << ")";
            any = true;
        }
        if (!any) os << "()";
    }
    return os.str();
}

WeylWord parse_word(const QuiverData& q, const std::string& text) {
    WeylWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "id") continue;
        if (tok[0] == 'r') {
            int i;
            try {
                size_t used = 0;
                i = std::stoi(tok.substr(1), &used);
                if (used + 1 != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad word letter: " + tok);
            }
            check_vertex(q, i);
            w.push_back(WeylLetter::reflect(i));
            continue;
        }
        if (tok.rfind("sigma", 0) != 0)
            throw std::invalid_argument("bad word letter: " + tok);
        Permutation sigma = identity_permutation(q.vertex_count);
        size_t pos = 5;
        while (pos < tok.size()) {
            if (tok[pos] != '(')
                throw std::invalid_argument("bad automorphism letter: " + tok);
            size_t close = tok.find(')', pos);
            if (close == std::string::npos)
                throw std::invalid_argument("bad automorphism letter: " + tok);
            std::string cycle = tok.substr(pos + 1, close - pos - 1);
            if (!cycle.empty()) {
                std::vector<int> elems;
                std::istringstream cs(cycle);
                std::string num;
                while (std::getline(cs, num, '>')) elems.push_back(std::stoi(num));
                for (size_t k = 0; k < elems.size(); ++k) {
                    check_vertex(q, elems[k]);
                    sigma[elems[k]] = elems[(k + 1) % elems.size()];
                }
            }
            pos = close + 1;
        }
        if (!is_diagram_automorphism(q, sigma))
            throw std::invalid_argument("not a diagram automorphism: " + tok);
        w.push_back(WeylLetter::automorphism(std::move(sigma)));
    }
    return w;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix r;
    r.n = n;
    r.a.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Integer& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    IntVector r(n, Integer(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

IntMatrix reflection_matrix(const QuiverData& q, int i) {
    IntMatrix m = IntMatrix::identity(q.vertex_count);
    for (int j = 0; j < q.vertex_count; ++j) m.at(i, j) -= q.cartan(i, j);
    return m;
}

IntMatrix permutation_matrix(int n, const Permutation& sigma) {
    IntMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.at(sigma[i], i) = 1;
    return m;
}

}  // namespace

IntMatrix k0_of_word(const QuiverData& q, const WeylWord& w,
                     const std::optional<ParamVector>& lambda) {
    IntMatrix acc = IntMatrix::identity(q.vertex_count);
    std::optional<ParamVector> cur = lambda;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->is_reflection()) {
            int i = it->vertex();
            check_vertex(q, i);
            bool contributes = !cur || !(*cur)[i].is_zero();
            if (contributes) acc = reflection_matrix(q, i) * acc;
            if (cur) cur = dual_reflection_r(q, i, *cur);
        } else {
            acc = permutation_matrix(q.vertex_count, it->sigma()) * acc;
            if (cur) cur = apply_automorphism(it->sigma(), *cur);
        }
    }
    return acc;
}

std::vector<IntVector> translation_lattice_basis(const QuiverData& q) {
    std::vector<IntVector> basis;
    for (int i = 1; i < q.vertex_count; ++i) {
        IntVector b(q.vertex_count, 0);
        b[i] = 1;
        b[0] = -q.delta[i];
        basis.push_back(std::move(b));
    }
    return basis;
}

namespace {

void require_real_positive_level(const QuiverData& q, const ParamVector& lambda) {
    GaussianRational lv = level(q, lambda);
    if (!lv.is_real())
        throw std::domain_error("orbit reduction requires a real level");
    if (lv.re <= 0)
        throw std::domain_error("orbit reduction requires level > 0");
}

// Alcove walk: reflect at the most negative entry (ties -> smallest index)
// until dominant. Letters are returned in application order (first applied
// first); callers reverse into word order.
std::vector<int> reduce_to_dominant(const QuiverData& q, ParamVector& cur) {
    std::vector<int> applied;
    for (long step = 0; step < kReductionCap; ++step) {
        int worst = -1;
        for (int i = 0; i < q.vertex_count; ++i) {
            if (cur[i].re >= 0) continue;
            if (worst < 0 || compare(cur[i].re, cur[worst].re) < 0) worst = i;
        }
        if (worst < 0) return applied;
        cur = dual_reflection_r(q, worst, cur);
        applied.push_back(worst);
    }
    throw std::logic_error("alcove reduction exceeded iteration cap");
}

// Dominance under the finite parabolic generated by reflections at
// `support`: reflect while some supported entry is negative.
std::vector<int> reduce_to_dominant_parabolic(const QuiverData& q,
                                              const std::vector<int>& support,
                                              ParamVector& cur) {
    std::vector<int> applied;
    for (long step = 0; step < kReductionCap; ++step) {
        int worst = -1;
        for (int i : support) {
            if (cur[i].re >= 0) continue;
            if (worst < 0 || compare(cur[i].re, cur[worst].re) < 0) worst = i;
        }
        if (worst < 0) return applied;
        cur = dual_reflection_r(q, worst, cur);
        applied.push_back(worst);
    }
    throw std::logic_error("parabolic reduction exceeded iteration cap");
}

WeylWord word_from_applied(const std::vector<int>& applied) {
    WeylWord w;
    w.reserve(applied.size());
    for (auto it = applied.rbegin(); it != applied.rend(); ++it)
        w.push_back(WeylLetter::reflect(*it));
    return w;
}

}  // namespace

CanonicalForm canonical_form(const QuiverData& q, const ParamVector& lambda) {
    if (lambda.size() != static_cast<size_t>(q.vertex_count))
        throw std::invalid_argument("canonical_form: length mismatch");
    if (!all_real(lambda))
        throw std::domain_error("canonical_form: non-real entries, use the complex form");
    require_real_positive_level(q, lambda);

    ParamVector cur = lambda;
    WeylWord reduction = word_from_applied(reduce_to_dominant(q, cur));

    const std::vector<Permutation> autos = diagram_automorphisms(q);
    const Permutation* best_sigma = nullptr;
    ParamVector best;
    for (const auto& sigma : autos) {
        ParamVector image = apply_automorphism(sigma, cur);
        if (!best_sigma || compare(image, best) < 0) {
            best_sigma = &sigma;
            best = std::move(image);
        }
    }
    CanonicalForm out;
    out.canonical = best;
    out.word = concat_words({WeylLetter::automorphism(*best_sigma)}, reduction);
    return out;
}

CanonicalPair canonical_form_complex(const QuiverData& q, const ParamVector& lambda) {
    if (lambda.size() != static_cast<size_t>(q.vertex_count))
        throw std::invalid_argument("canonical_form_complex: length mismatch");
    require_real_positive_level(q, lambda);

    ParamVector x = real_part(lambda);
    ParamVector y = imag_part(lambda);
    CanonicalForm cx = canonical_form(q, x);
    ParamVector y1 = apply_word(q, cx.word, y);

    std::vector<int> support;
    for (int i = 0; i < q.vertex_count; ++i)
        if (cx.canonical[i].is_zero()) support.push_back(i);

    std::vector<Permutation> stabilizing;
    for (const auto& sigma : diagram_automorphisms(q))
        if (apply_automorphism(sigma, cx.canonical) == cx.canonical)
            stabilizing.push_back(sigma);

    bool have = false;
    CanonicalPair out;
    out.x0 = cx.canonical;
    for (const auto& omega : stabilizing) {
        ParamVector z = apply_automorphism(omega, y1);
        std::vector<int> applied = reduce_to_dominant_parabolic(q, support, z);
        if (!have || compare(z, out.y0) < 0) {
            have = true;
            out.y0 = z;
            WeylWord w = concat_words({WeylLetter::automorphism(omega)}, cx.word);
            out.word = concat_words(word_from_applied(applied), w);
        }
    }
    return out;
}

OrbitDecision same_orbit(const QuiverData& q, const ParamVector& lambda,
                         const ParamVector& lambda2) {
    GaussianRational lv1 = level(q, lambda);
    GaussianRational lv2 = level(q, lambda2);
    if (!lv1.is_real() || !lv2.is_real())
        throw std::domain_error("same_orbit: non-real level unsupported");
    if (lv1 != lv2) return {};
    if (lv1.re <= 0) throw std::domain_error("same_orbit: level <= 0 unsupported");

    OrbitDecision out;
    WeylWord witness;
    if (all_real(lambda) && all_real(lambda2)) {
        CanonicalForm c1 = canonical_form(q, lambda);
        CanonicalForm c2 = canonical_form(q, lambda2);
        if (c1.canonical != c2.canonical) return {};
        witness = concat_words(inverse_word(c2.word), c1.word);
    } else {
        CanonicalPair p1 = canonical_form_complex(q, lambda);
        CanonicalPair p2 = canonical_form_complex(q, lambda2);
        if (p1.x0 != p2.x0 || p1.y0 != p2.y0) return {};
        witness = concat_words(inverse_word(p2.word), p1.word);
    }
    if (apply_word(q, witness, lambda) != lambda2)
        throw std::logic_error("same_orbit: witness failed self-verification");
    out.equivalent = true;
    out.witness = std::move(witness);
    return out;
}

bool decide_product(const std::vector<QuiverParam>& left,
                    const std::vector<QuiverParam>& right) {
    if (left.size() != right.size()) return false;
    std::map<std::string, std::vector<size_t>> left_by_type, right_by_type;
    for (size_t k = 0; k < left.size(); ++k)
        left_by_type[left[k].quiver.name].push_back(k);
    for (size_t k = 0; k < right.size(); ++k)
        right_by_type[right[k].quiver.name].push_back(k);
    if (left_by_type.size() != right_by_type.size()) return false;

    for (const auto& [type, lidx] : left_by_type) {
        auto rit = right_by_type.find(type);
        if (rit == right_by_type.end() || rit->second.size() != lidx.size())
            return false;
        // same_orbit is an equivalence, so greedy matching is complete.
        std::vector<bool> taken(rit->second.size(), false);
        for (size_t li : lidx) {
            bool matched = false;
            for (size_t t = 0; t < rit->second.size(); ++t) {
                if (taken[t]) continue;
                const QuiverParam& l = left[li];
                const QuiverParam& r = right[rit->second[t]];
                if (same_orbit(l.quiver, l.lambda, r.lambda).equivalent) {
                    taken[t] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) return false;
        }
    }
    return true;
}

IntVector fp_translation_witness(const QuiverData& q, const IntVector& lambda,
                                 const IntVector& lambda2, const Integer& p) {
    if (lambda.size() != static_cast<size_t>(q.vertex_count) ||
        lambda2.size() != static_cast<size_t>(q.vertex_count))
        throw std::invalid_argument("fp_translation_witness: length mismatch");
    if (p < 2) throw std::invalid_argument("fp_translation_witness: bad prime");
    auto level_mod_p = [&](const IntVector& v) {
        Integer lv = dot(v, q.delta) % p;
        if (lv < 0) lv += p;
        return lv;
    };
    if (level_mod_p(lambda) != 1 || level_mod_p(lambda2) != 1)
        throw std::invalid_argument("fp_translation_witness: levels must be 1 mod p");

    IntVector target = sub(lambda2, lambda);
    auto basis = translation_lattice_basis(q);
    auto coeffs = integer_solve(basis, target, p);
    if (!coeffs)
        throw std::runtime_error("fp_translation_witness: lattice basis degenerate mod p");
    IntVector d(q.vertex_count, Integer(0));
    for (size_t k = 0; k < basis.size(); ++k)
        d = add(d, scale((*coeffs)[k], basis[k]));
    return d;
}

}  // namespace morita
