#include "morita/cherednik.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace morita {

namespace {

constexpr int kMaxRank = 12;

void check_rank(int n) {
    if (n < 2) throw std::invalid_argument("cherednik rank needs n >= 2");
    if (n > kMaxRank)
        throw std::invalid_argument("cherednik rank capped at n <= 12 (n! overflow policy)");
}

Integer factorial(int n) {
    Integer f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// CRT combine x = r1 mod m1, x = r2 mod m2; nullopt when inconsistent.
std::optional<std::pair<Integer, Integer>> crt(const Integer& r1, const Integer& m1,
                                               const Integer& r2, const Integer& m2) {
    Integer g = gcd(m1, m2);
    if (mod_nonneg(r1 - r2, g) != 0) return std::nullopt;
    Integer lcm_m = m1 / g * m2;
    // r = r1 + m1 * t with t = (r2 - r1)/g * inv(m1/g) mod (m2/g).
    Integer m1g = m1 / g;
    Integer m2g = m2 / g;
    Integer inv;
    if (m2g == 1) return std::make_pair(mod_nonneg(r1, lcm_m), lcm_m);
    if (mpz_invert(inv.get_mpz_t(), m1g.get_mpz_t(), m2g.get_mpz_t()) == 0)
        return std::nullopt;
    Integer t = mod_nonneg((r2 - r1) / g * inv, m2g);
    return std::make_pair(mod_nonneg(r1 + m1 * t, lcm_m), lcm_m);
}

}  // namespace

std::vector<Rational> aspherical_set(int n) {
    check_rank(n);
    std::set<Rational> values;
    for (int d = 2; d <= n; ++d)
        for (int i = 1; i < d; ++i) values.insert(make_rational(-i, d));
    return {values.begin(), values.end()};
}

Integer reduce_mod_p(const Rational& q, const Integer& p) {
    if (p < 2) throw std::invalid_argument("reduce_mod_p: bad modulus");
    Integer den = q.get_den();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("reduce_mod_p: p divides the denominator");
    return mod_nonneg(q.get_num() * inv, p);
}

Integer find_witness_prime(int n, const Rational& c, const Rational& c2,
                           const Integer& p_min) {
    check_rank(n);
    Integer nfact = factorial(n);
    Integer l = c.get_den(), a = c.get_num();
    Integer l2 = c2.get_den(), a2 = c2.get_num();

    // p = 1 mod n!, p = -a mod l, p = -a' mod l'.
    std::pair<Integer, Integer> cls{1 % nfact, nfact};
    for (auto [r, m] : {std::pair<Integer, Integer>{mod_nonneg(-a, l), l},
                        std::pair<Integer, Integer>{mod_nonneg(-a2, l2), l2}}) {
        auto combined = crt(cls.first, cls.second, r, m);
        if (!combined) {
            std::ostringstream os;
            os << "find_witness_prime: congruences inconsistent (moduli " << cls.second
               << " and " << m << ")";
            throw std::domain_error(os.str());
        }
        cls = *combined;
    }

    Integer p = cls.first;
    if (p < 2) p += cls.second;
    while (p < p_min) p += cls.second;
    for (;;) {
        if (is_prime(p)) {
            // Both images must land in [0, (p-1)/n): n * image < p - 1.
            Integer x = reduce_mod_p(c, p);
            Integer x2 = reduce_mod_p(c2, p);
            if (n * x < p - 1 && n * x2 < p - 1) return p;
        }
        p += cls.second;
    }
}

bool same_component(int n, const Integer& p, const Integer& x, const Integer& x2) {
    check_rank(n);
    if (x < 0 || x >= p || x2 < 0 || x2 >= p)
        throw std::invalid_argument("same_component: images must lie in [0, p)");
    Integer lo = std::min(x, x2), hi = std::max(x, x2);
    for (const Rational& q : aspherical_set(n)) {
        Integer image = reduce_mod_p(q, p);
        if (image >= lo && image <= hi) return false;
    }
    return true;
}

std::string format_certificate(const CherednikCertificate& cert) {
    std::ostringstream os;
    os << "p=" << cert.p << " images=(" << cert.image_c << "," << cert.image_c2
       << ") aspherical=[";
    for (size_t i = 0; i < cert.aspherical_images.size(); ++i) {
        if (i) os << ",";
        os << cert.aspherical_images[i];
    }
    os << "] twist=" << (cert.sign_twisted ? "-c" : "c")
       << " c_used=" << format_rational(cert.c_used);
    return os.str();
}

CherednikDecision cherednik_decide(int n, const Rational& c, const Rational& c2) {
    check_rank(n);
    CherednikDecision out{CherednikVerdict::NotEquivalent, std::nullopt, {}};
    Integer nfact = factorial(n);
    Integer l = c.get_den(), l2 = c2.get_den();

    Integer g = gcd(Integer(l * l2), nfact);
    if (g != 1) {
        out.verdict = CherednikVerdict::HypothesesNotMet;
        out.diagnostics.push_back("gcd(l*l', n!) = " + g.get_str() + " != 1");
        return out;
    }
    // The l = l' branch asks for an integer alpha with a' = alpha*a mod l and
    // l < n*alpha; alpha can always be moved up by multiples of l, so the
    // condition reduces to the denominators being equal.
    if (Integer(gcd(l, l2)) != 1 && l != l2) {
        out.verdict = CherednikVerdict::HypothesesNotMet;
        out.diagnostics.push_back("denominators neither coprime nor equal");
        return out;
    }

    bool plus = is_integral(Rational(c2 - c));
    bool minus = is_integral(Rational(c2 + c));
    if (!plus && !minus) {
        out.diagnostics.push_back("c' - c = " + format_rational(Rational(c2 - c)) +
                                  " not an integer");
        out.diagnostics.push_back("c' + c = " + format_rational(Rational(c2 + c)) +
                                  " not an integer");
        return out;
    }

    out.verdict = CherednikVerdict::Equivalent;
    CherednikCertificate cert;
    cert.sign_twisted = !plus;
    cert.c_used = plus ? c : Rational(-c);
    cert.p = find_witness_prime(n, cert.c_used, c2, Integer(2));
    cert.image_c = reduce_mod_p(cert.c_used, cert.p);
    cert.image_c2 = reduce_mod_p(c2, cert.p);
    for (const Rational& q : aspherical_set(n))
        cert.aspherical_images.push_back(reduce_mod_p(q, cert.p));
    std::sort(cert.aspherical_images.begin(), cert.aspherical_images.end());
    if (!same_component(n, cert.p, cert.image_c, cert.image_c2))
        throw std::logic_error("cherednik_decide: certificate failed component check");
    out.certificate = std::move(cert);
    return out;
}

bool verify_certificate(int n, const Rational& c, const Rational& c2,
                        const CherednikCertificate& cert) {
    check_rank(n);
    if (!is_prime(cert.p)) return false;
    Rational used = cert.sign_twisted ? Rational(-c) : c;
    if (used != cert.c_used) return false;
    Integer nfact = factorial(n);
    if (mod_nonneg(cert.p, nfact) != 1 % nfact) return false;
    Integer l = used.get_den(), a = used.get_num();
    Integer l2 = c2.get_den(), a2 = c2.get_num();
    if (mod_nonneg(cert.p + a, l) != 0 || mod_nonneg(cert.p + a2, l2) != 0)
        return false;
    // Closed-form images (p+a)/l taken mod p: the quotient itself lies in
    // [0, p) whenever |a| < l, but integer parameters (l = 1) land above p.
    if (cert.image_c != mod_nonneg((cert.p + a) / l, cert.p)) return false;
    if (cert.image_c2 != mod_nonneg((cert.p + a2) / l2, cert.p)) return false;
    if (!(n * cert.image_c < cert.p - 1 && n * cert.image_c2 < cert.p - 1))
        return false;
    std::vector<Integer> expected;
    for (const Rational& q : aspherical_set(n))
        expected.push_back(reduce_mod_p(q, cert.p));
    std::sort(expected.begin(), expected.end());
    if (expected != cert.aspherical_images) return false;
    return same_component(n, cert.p, cert.image_c, cert.image_c2);
}

}  // namespace morita
