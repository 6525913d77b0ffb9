#include "morita/gwa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace morita {

namespace {

const GaussianRational kOne(Rational(1));

void require_normalized(const GwaRoots& t) {
    if (t.size() < 2) throw std::invalid_argument("root tuple needs m >= 2");
    if (!is_normalized(t))
        throw std::invalid_argument("root tuple not normalized (last coordinate != 1)");
}

Rational floor_rational(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(fl);
}

// Residue mod Z: real part reduced to [0,1), imaginary part kept.
GaussianRational frac_mod_z(const GaussianRational& z) {
    return {z.re - floor_rational(z.re), z.im};
}

}  // namespace

bool is_normalized(const GwaRoots& t) {
    return !t.empty() && t.back() == kOne;
}

bool has_distinct_entries(const GwaRoots& t) {
    GwaRoots sorted = t;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GwaGroupElement GwaGroupElement::identity(int m) {
    GwaGroupElement g;
    g.eps = 1;
    g.sigma = identity_permutation(m);
    g.d.assign(m, Integer(0));
    g.c = GaussianRational();
    return g;
}

GwaRoots apply_group_element(const GwaGroupElement& g, const GwaRoots& t) {
    if (g.sigma.size() != t.size() || g.d.size() != t.size())
        throw std::invalid_argument("apply_group_element: length mismatch");
    GwaRoots out(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        GaussianRational v = t[g.sigma[i]];
        if (g.eps < 0) v = -v;
        out[i] = v + GaussianRational(Rational(g.d[i])) + g.c;
    }
    return out;
}

std::string format_group_element(const GwaGroupElement& g) {
    std::ostringstream os;
    os << "eps=" << (g.eps < 0 ? "-1" : "1") << " sigma=(";
    for (size_t i = 0; i < g.sigma.size(); ++i) {
        if (i) os << " ";
        os << g.sigma[i];
    }
    os << ") d=[";
    for (size_t i = 0; i < g.d.size(); ++i) {
        if (i) os << ",";
        os << g.d[i];
    }
    os << "] c=" << format_scalar(g.c);
    return os.str();
}

GwaGroupElement parse_group_element(const std::string& text, int m) {
    GwaGroupElement g;
    std::istringstream is(text);
    std::string tok;
    bool have_eps = false, have_sigma = false, have_d = false, have_c = false;
    std::string pending;
    while (is >> tok) pending += (pending.empty() ? "" : " ") + tok;
    // Re-scan with explicit markers; sigma may contain spaces.
    auto grab = [&](const std::string& key) -> std::string {
        size_t at = pending.find(key + "=");
        if (at == std::string::npos)
            throw std::invalid_argument("group element missing " + key + ": " + text);
        size_t start = at + key.size() + 1;
        size_t end;
        if (start < pending.size() && (pending[start] == '(' || pending[start] == '[')) {
            char close = pending[start] == '(' ? ')' : ']';
            end = pending.find(close, start);
            if (end == std::string::npos)
                throw std::invalid_argument("unterminated group element: " + text);
            ++end;
        } else {
            end = pending.find(' ', start);
            if (end == std::string::npos) end = pending.size();
        }
        return pending.substr(start, end - start);
    };
    std::string eps = grab("eps");
    g.eps = (eps == "-1") ? -1 : 1;
    if (eps != "1" && eps != "-1" && eps != "+1")
        throw std::invalid_argument("bad eps: " + eps);
    have_eps = true;

    std::string sig = grab("sigma");
    if (sig.size() < 2 || sig.front() != '(' || sig.back() != ')')
        throw std::invalid_argument("bad sigma: " + sig);
    {
        std::istringstream ss(sig.substr(1, sig.size() - 2));
        int v;
        while (ss >> v) g.sigma.push_back(v);
    }
    have_sigma = true;

    std::string ds = grab("d");
    if (ds.size() < 2 || ds.front() != '[' || ds.back() != ']')
        throw std::invalid_argument("bad d: " + ds);
    if (ds.size() > 2) {
        for (const auto& x : parse_int_vector(ds.substr(1, ds.size() - 2)))
            g.d.push_back(x);
    }
    have_d = true;

    g.c = parse_scalar(grab("c"));
    have_c = true;

    if (!have_eps || !have_sigma || !have_d || !have_c ||
        g.sigma.size() != static_cast<size_t>(m) || g.d.size() != static_cast<size_t>(m))
        throw std::invalid_argument("bad group element: " + text);
    return g;
}

ParamVector lambda_from_roots(const GwaRoots& t) {
    require_normalized(t);
    ParamVector lambda(t.size());
    lambda[0] = t[0];
    for (size_t i = 1; i < t.size(); ++i) lambda[i] = t[i] - t[i - 1];
    return lambda;
}

GwaRoots roots_from_lambda(const ParamVector& lambda) {
    if (lambda.size() < 2) throw std::invalid_argument("cycle parameter needs m >= 2");
    GwaRoots t(lambda.size());
    GaussianRational sum;
    for (size_t i = 0; i < lambda.size(); ++i) {
        sum = sum + lambda[i];
        t[i] = sum;
    }
    if (t.back() != kOne)
        throw std::invalid_argument("roots_from_lambda: level must be exactly 1");
    return t;
}

GwaRoots gwa_generator_in_t(GwaGeneratorKind kind, int index, const GwaRoots& t) {
    require_normalized(t);
    int m = static_cast<int>(t.size());
    GwaRoots out = t;
    switch (kind) {
        case GwaGeneratorKind::Reflection: {
            if (index < 0 || index >= m)
                throw std::invalid_argument("gwa generator index out of range");
            if (index > 0 && index < m - 1) {
                std::swap(out[index - 1], out[index]);
            } else if (index == 0) {
                GaussianRational t0 = t[0];
                out[0] = -t0;
                for (int j = 1; j <= m - 2; ++j) out[j] = t[j] - t0;
            } else {  // index == m-1
                GaussianRational shift = kOne - t[m - 2];
                for (int j = 0; j <= m - 3; ++j) out[j] = t[j] + shift;
                out[m - 2] = GaussianRational(Rational(2)) - t[m - 2];
            }
            break;
        }
        case GwaGeneratorKind::Rho: {
            for (int j = 0; j <= m - 2; ++j) out[j] = t[j + 1] - t[0];
            break;
        }
        case GwaGeneratorKind::Tau: {
            for (int j = 0; j <= m - 2; ++j) out[j] = kOne - t[m - 2 - j];
            break;
        }
    }
    out[m - 1] = kOne;
    return out;
}

WeylLetter gwa_generator_on_quiver(const QuiverData& q, GwaGeneratorKind kind,
                                   int index) {
    int m = q.vertex_count;
    switch (kind) {
        case GwaGeneratorKind::Reflection:
            return WeylLetter::reflect(index);
        case GwaGeneratorKind::Rho: {
            Permutation sigma(m);
            for (int i = 0; i < m; ++i) sigma[i] = (i + m - 1) % m;
            return WeylLetter::automorphism(std::move(sigma));
        }
        case GwaGeneratorKind::Tau: {
            Permutation sigma(m);
            for (int i = 0; i < m; ++i) sigma[i] = m - 1 - i;
            return WeylLetter::automorphism(std::move(sigma));
        }
    }
    throw std::logic_error("unreachable");
}

NormalizedRoots normalize_roots(const GwaRoots& multiset) {
    if (multiset.empty()) throw std::invalid_argument("empty root tuple");
    int m = static_cast<int>(multiset.size());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return lex_less(multiset[a], multiset[b]);
    });
    NormalizedRoots out;
    out.used.eps = 1;
    out.used.sigma.assign(order.begin(), order.end());
    out.used.d.assign(m, Integer(0));
    out.used.c = kOne - multiset[order.back()];
    out.t.resize(m);
    for (int i = 0; i < m; ++i) out.t[i] = multiset[order[i]] + out.used.c;
    return out;
}

namespace {

struct ResidueKey {
    GaussianRational frac;
    GaussianRational value;
    int index;
};

std::vector<ResidueKey> residue_keys(const GwaRoots& values) {
    std::vector<ResidueKey> keys;
    keys.reserve(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        keys.push_back({frac_mod_z(values[i]), values[i], static_cast<int>(i)});
    std::sort(keys.begin(), keys.end(), [](const ResidueKey& a, const ResidueKey& b) {
        int c = compare(a.frac, b.frac);
        if (c != 0) return c < 0;
        c = compare(a.value, b.value);
        if (c != 0) return c < 0;
        return a.index < b.index;
    });
    return keys;
}

}  // namespace

GwaDecision gwa_decide(const GwaRoots& left, const GwaRoots& right) {
    GwaDecision out;
    out.left_distinct = has_distinct_entries(left);
    out.right_distinct = has_distinct_entries(right);
    if (left.size() != right.size()) {
        out.reason = "tuples have different sizes";
        return out;
    }
    int m = static_cast<int>(left.size());

    // Reference entry of the right tuple; c candidates pair it with each
    // eps * t_j, integer offsets being absorbed into d.
    int ref = 0;
    for (int i = 1; i < m; ++i)
        if (lex_less(right[i], right[ref])) ref = i;

    for (int eps : {1, -1}) {
        for (int j = 0; j < m; ++j) {
            GaussianRational tj = left[j];
            if (eps < 0) tj = -tj;
            GaussianRational c = right[ref] - tj;

            GwaRoots shifted(m);
            for (int k = 0; k < m; ++k) {
                GaussianRational v = left[k];
                if (eps < 0) v = -v;
                shifted[k] = v + c;
            }
            std::vector<ResidueKey> lk = residue_keys(shifted);
            std::vector<ResidueKey> rk = residue_keys(right);
            bool match = true;
            for (int k = 0; k < m; ++k)
                if (lk[k].frac != rk[k].frac) {
                    match = false;
                    break;
                }
            if (!match) continue;

            GwaGroupElement g;
            g.eps = eps;
            g.sigma.assign(m, 0);
            g.d.assign(m, Integer(0));
            g.c = c;
            for (int k = 0; k < m; ++k) {
                int target = rk[k].index;
                int source = lk[k].index;
                g.sigma[target] = source;
                GaussianRational diff = right[target] - shifted[source];
                // Equal residues force an integral real difference.
                g.d[target] = diff.re.get_num();
            }
            if (apply_group_element(g, left) != right)
                throw std::logic_error("gwa_decide: witness failed self-verification");
            out.equivalent = true;
            out.witness = std::move(g);
            return out;
        }
    }
    out.reason = "residue multisets differ for every eps and shift";
    return out;
}

}  // namespace morita
