#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morita/exact.hpp"

// Type A rational Cherednik parameters: aspherical values, mod-p images,
// witness primes, and the +-c + Z Morita decision with an executable
// certificate mirroring the translation-functor chain.

namespace morita {

/// Rank n symmetric group, parameter c = a/l in lowest terms.
struct CherednikParam {
    int n;
    Rational c;
};

// { -i/d : 1 <= i < d, 2 <= d <= n } as a deduplicated sorted set.
// n is capped at 12 (factorial growth); throws std::invalid_argument beyond.
std::vector<Rational> aspherical_set(int n);

// a * l^{-1} mod p in [0, p); throws std::domain_error when p | l.
Integer reduce_mod_p(const Rational& q, const Integer& p);

// Smallest prime >= p_min with p = 1 mod n!, p = -a mod l, p = -a' mod l',
// large enough that both parameter images land in [0, (p-1)/n). Throws
// std::domain_error when the congruences are inconsistent.
Integer find_witness_prime(int n, const Rational& c, const Rational& c2,
                           const Integer& p_min);

// True iff no aspherical image mod p lies in the closed interval between x
// and x' (endpoints included).
bool same_component(int n, const Integer& p, const Integer& x, const Integer& x2);

struct CherednikCertificate {
    Integer p;
    Integer image_c;          // image of c_used
    Integer image_c2;         // image of c'
    std::vector<Integer> aspherical_images;  // sorted
    bool sign_twisted;        // certificate chains from -c instead of c
    Rational c_used;
};

std::string format_certificate(const CherednikCertificate& cert);

enum class CherednikVerdict { Equivalent, NotEquivalent, HypothesesNotMet };

struct CherednikDecision {
    CherednikVerdict verdict;
    std::optional<CherednikCertificate> certificate;
    std::vector<std::string> diagnostics;
};

// Under the hypotheses (l l', n!) = 1 and ((l, l') = 1 or l = l'):
// equivalent iff c' - c or c' + c is an integer. Certificates are produced
// in the equivalent case only.
CherednikDecision cherednik_decide(int n, const Rational& c, const Rational& c2);

// Re-checks a certificate against the parameters: congruences, closed-form
// images, interval bound and component membership.
bool verify_certificate(int n, const Rational& c, const Rational& c2,
                        const CherednikCertificate& cert);

}  // namespace morita
