#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divlat/checked.hpp"

namespace divlat {

/// Nonnegative exponent list in any order; what most formulas consume.
using Exponents = std::span<const unsigned>;

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; empty for n = 1.
struct Factorization {
    std::vector<PrimePower> factors;

    std::vector<unsigned> exponents() const;
    std::uint64_t value() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Multiset of exponents written in descending order. The empty signature
/// is the signature of 1.
class PrimeSignature {
public:
    PrimeSignature() = default;

    /// Requires parts descending and all >= 1; throws InputError otherwise.
    explicit PrimeSignature(std::vector<unsigned> parts);

    /// Sorts arbitrary positive exponents into a signature.
    static PrimeSignature from_exponents(Exponents exponents);

    /// Parses "3.2.1"; "0" denotes the empty signature.
    static PrimeSignature parse(std::string_view text);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    unsigned big_omega() const noexcept;
    unsigned small_omega() const noexcept { return static_cast<unsigned>(parts_.size()); }

    /// Dot-joined parts, "0" for the empty signature.
    std::string to_string() const;
    /// "(3,2,1)" style, "(0)" for the empty signature.
    std::string to_tuple_string() const;

    operator Exponents() const noexcept { return parts_; }

    friend bool operator==(const PrimeSignature&, const PrimeSignature&) = default;
    friend auto operator<=>(const PrimeSignature&, const PrimeSignature&) = default;

private:
    std::vector<unsigned> parts_;
};

enum class SignatureOrder { GradedColex, Canonical };

/// Deterministic trial division. n must be in [1, bound].
Factorization factorize(std::uint64_t n, std::uint64_t bound = kDefaultIntegerBound);

PrimeSignature signature_of(std::uint64_t n, std::uint64_t bound = kDefaultIntegerBound);

/// All partitions of k, descending parts, in reverse-lexicographic order.
std::vector<PrimeSignature> partitions_of(unsigned k);

/// First `count` signatures of the requested order; index 0 is the empty
/// signature.
std::vector<PrimeSignature> enumerate_signatures(SignatureOrder order, std::size_t count);

/// Every signature with big_omega <= max_big_omega, graded-colex order.
std::vector<PrimeSignature> signatures_up_to_big_omega(unsigned max_big_omega);

/// Least n with the given signature: largest exponent on 2, next on 3, ...
std::uint64_t least_integer(const PrimeSignature& s, std::uint64_t bound = kDefaultIntegerBound);

/// The k-th prime, 0-based (2, 3, 5, ...).
std::uint64_t nth_prime(std::size_t k);

}  // namespace divlat
