#pragma once

#include <cstdint>
#include <stdexcept>

namespace springer {

/// Element of a prime field, stored as its canonical representative in [0, q).
using Residue = std::uint8_t;

/// The prime field F_q. Only primes below 256 are supported so that every
/// residue fits a byte and products fit comfortably in 32 bits.
class FieldSpec {
public:
    explicit FieldSpec(unsigned q);

    unsigned q() const noexcept { return q_; }

    Residue reduce(long long value) const noexcept {
        long long r = value % static_cast<long long>(q_);
        return static_cast<Residue>(r < 0 ? r + q_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept {
        unsigned s = unsigned(a) + b;
        return static_cast<Residue>(s >= q_ ? s - q_ : s);
    }
    Residue sub(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(a >= b ? a - b : a + q_ - b);
    }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((unsigned(a) * b) % q_);
    }
    Residue neg(Residue a) const noexcept {
        return static_cast<Residue>(a == 0 ? 0 : q_ - a);
    }
    /// Multiplicative inverse; throws std::domain_error for zero.
    Residue inv(Residue a) const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    unsigned q_;
};

bool is_prime(unsigned n) noexcept;

} // namespace springer
