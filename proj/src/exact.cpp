#include "morita/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace morita {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

int compare(const Rational& a, const Rational& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    // 1/(a+bi) = (a-bi)/(a^2+b^2)
    Rational n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

int compare(const GaussianRational& a, const GaussianRational& b) {
    int c = compare(a.re, b.re);
    if (c != 0) return c;
    return compare(a.im, b.im);
}

std::string format_rational(const Rational& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

std::string format_scalar(const GaussianRational& z) {
    if (z.im == 0) return format_rational(z.re);
    std::string s = format_rational(z.re);
    if (z.im >= 0) s += "+";
    s += format_rational(z.im);
    s += "i";
    return s;
}

namespace {

// One signed rational token starting at pos: [+-]? digits [/ digits].
Rational parse_rational_at(const std::string& t, size_t& pos) {
    bool neg = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        neg = (t[pos] == '-');
        ++pos;
    }
    size_t numstart = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == numstart) throw std::invalid_argument("malformed scalar: " + t);
    Integer num(t.substr(numstart, pos - numstart));
    if (neg) num = -num;
    Integer den = 1;
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        size_t denstart = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == denstart) throw std::invalid_argument("malformed scalar: " + t);
        den = Integer(t.substr(denstart, pos - denstart));
        if (den == 0) throw std::invalid_argument("zero denominator: " + t);
    }
    return make_rational(num, den);
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

}  // namespace

GaussianRational parse_scalar(const std::string& text) {
    std::string t = strip_spaces(text);
    if (t.empty()) throw std::invalid_argument("empty scalar");
    // Pure-imaginary conveniences "i" / "-i" / "+i".
    if (t == "i" || t == "+i") return {Rational(0), Rational(1)};
    if (t == "-i") return {Rational(0), Rational(-1)};

    size_t pos = 0;
    Rational first = parse_rational_at(t, pos);
    if (pos == t.size()) return {first};
    if (t[pos] == 'i' && pos + 1 == t.size()) return {Rational(0), first};
    if (t[pos] != '+' && t[pos] != '-')
        throw std::invalid_argument("malformed scalar: " + text);
    size_t imstart = pos;
    if (t.substr(imstart) == "+i") return {first, Rational(1)};
    if (t.substr(imstart) == "-i") return {first, Rational(-1)};
    Rational second = parse_rational_at(t, pos);
    if (pos >= t.size() || t[pos] != 'i' || pos + 1 != t.size())
        throw std::invalid_argument("malformed scalar: " + text);
    return {first, second};
}

Rational parse_rational(const std::string& text) {
    GaussianRational z = parse_scalar(text);
    if (!z.is_real())
        throw std::invalid_argument("expected a real rational: " + text);
    return z.re;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Integer s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector negate(const IntVector& a) {
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntVector scale(const Integer& k, const IntVector& a) {
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

bool is_zero(const IntVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

std::string format_int_vector(const IntVector& a) {
    std::ostringstream os;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    return os.str();
}

IntVector parse_int_vector(const std::string& text) {
    IntVector out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        std::string t = strip_spaces(item);
        if (!t.empty() && t[0] == '+') t = t.substr(1);
        if (t.empty()) throw std::invalid_argument("malformed integer vector: " + text);
        out.emplace_back(t);
    }
    if (out.empty()) throw std::invalid_argument("empty integer vector");
    return out;
}

int compare(const IntVector& a, const IntVector& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

namespace {

// Column-style Hermite reduction: returns (H, U) with H = B * U and U
// unimodular, H in column echelon form (pivot rows strictly increase
// left to right).
struct Echelon {
    std::vector<std::vector<Integer>> h;  // L x k, column-major access h[col][row]
    std::vector<std::vector<Integer>> u;  // k x k, u[col][row]
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col), in row order
};

Echelon column_echelon(const std::vector<IntVector>& basis, size_t len) {
    size_t k = basis.size();
    Echelon e;
    e.h.resize(k);
    e.u.assign(k, std::vector<Integer>(k, 0));
    for (size_t c = 0; c < k; ++c) {
        e.h[c].assign(len, 0);
        for (size_t r = 0; r < len; ++r) e.h[c][r] = basis[c][r];
        e.u[c][c] = 1;
    }
    size_t next = 0;
    for (size_t row = 0; row < len && next < k; ++row) {
        // Clear row `row` across columns next..k-1 down to one pivot via gcd
        // column operations; entries in earlier rows of those columns are
        // already zero.
        size_t nz = next;
        while (nz < k && e.h[nz][row] == 0) ++nz;
        if (nz == k) continue;
        std::swap(e.h[next], e.h[nz]);
        std::swap(e.u[next], e.u[nz]);
        for (size_t c = next + 1; c < k; ++c) {
            while (e.h[c][row] != 0) {
                Integer q = e.h[next][row] / e.h[c][row];  // truncated division
                for (size_t r = 0; r < len; ++r) e.h[next][r] -= q * e.h[c][r];
                for (size_t r = 0; r < k; ++r) e.u[next][r] -= q * e.u[c][r];
                std::swap(e.h[next], e.h[c]);
                std::swap(e.u[next], e.u[c]);
            }
        }
        e.pivots.emplace_back(row, next);
        ++next;
    }
    return e;
}

}  // namespace

std::optional<std::vector<Integer>> integer_solve(
    const std::vector<IntVector>& basis, const IntVector& target,
    const std::optional<Integer>& modulus) {
    if (basis.empty()) throw std::invalid_argument("integer_solve: empty basis");
    size_t len = target.size();
    for (const auto& b : basis)
        if (b.size() != len)
            throw std::invalid_argument("integer_solve: length mismatch");
    if (modulus && *modulus <= 0)
        throw std::invalid_argument("integer_solve: modulus must be positive");

    // B x = t mod m is solved as the exact system [B | m e_1 ... m e_len],
    // then the auxiliary coefficients are dropped.
    std::vector<IntVector> cols = basis;
    if (modulus) {
        for (size_t r = 0; r < len; ++r) {
            IntVector e(len, 0);
            e[r] = *modulus;
            cols.push_back(std::move(e));
        }
    }

    Echelon e = column_echelon(cols, len);
    size_t k = cols.size();
    std::vector<Integer> y(k, 0);
    IntVector residual = target;
    for (auto [row, col] : e.pivots) {
        if (residual[row] == 0) continue;
        Integer piv = e.h[col][row];
        if (residual[row] % piv != 0) return std::nullopt;
        Integer q = residual[row] / piv;
        y[col] = q;
        for (size_t r = 0; r < len; ++r) residual[r] -= q * e.h[col][r];
    }
    if (!is_zero(residual)) return std::nullopt;

    std::vector<Integer> x(basis.size(), 0);
    for (size_t c = 0; c < k; ++c) {
        if (y[c] == 0) continue;
        for (size_t i = 0; i < basis.size(); ++i) x[i] += y[c] * e.u[c][i];
    }
    if (modulus)
        for (auto& xi : x) {
            mpz_mod(xi.get_mpz_t(), xi.get_mpz_t(), modulus->get_mpz_t());
        }
    return x;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (long small : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    Integer d = n - 1;
    unsigned long s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        Integer x;
        Integer base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace morita
