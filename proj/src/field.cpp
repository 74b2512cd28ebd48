#include "springer/field.hpp"

#include <string>

namespace springer {

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

FieldSpec::FieldSpec(unsigned q) : q_(q) {
    if (!is_prime(q))
        throw std::invalid_argument("field modulus " + std::to_string(q) + " is not prime");
    if (q > 255)
        throw std::invalid_argument("field modulus " + std::to_string(q) + " exceeds 255");
}

Residue FieldSpec::inv(Residue a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    // extended Euclid on (a, q)
    long long r0 = q_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long t = r0 / r1;
        long long r2 = r0 - t * r1;
        long long s2 = s0 - t * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return reduce(s0);
}

} // namespace springer
