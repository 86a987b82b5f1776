#include "divlat/signature.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <mutex>
#include <numeric>

namespace divlat {

std::vector<unsigned> Factorization::exponents() const {
    std::vector<unsigned> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.exponent);
    return out;
}

std::uint64_t Factorization::value() const {
    std::uint64_t n = 1;
    for (const auto& f : factors) {
        for (unsigned e = 0; e < f.exponent; ++e) n = checked_mul(n, f.prime, "factorization value");
    }
    return n;
}

PrimeSignature::PrimeSignature(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw InputError("signature parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i]) {
            throw InputError("signature parts must be in descending order");
        }
    }
}

PrimeSignature PrimeSignature::from_exponents(Exponents exponents) {
    std::vector<unsigned> parts(exponents.begin(), exponents.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return PrimeSignature(std::move(parts));
}

PrimeSignature PrimeSignature::parse(std::string_view text) {
    if (text == "0") return PrimeSignature();
    if (text.empty()) throw InputError("empty signature text (use \"0\" for the signature of 1)");
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (true) {
        const auto dot = text.find('.', pos);
        const auto token = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        unsigned value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw InputError("malformed signature \"" + std::string(text) + "\"");
        }
        parts.push_back(value);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return PrimeSignature(std::move(parts));
}

unsigned PrimeSignature::big_omega() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string PrimeSignature::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string PrimeSignature::to_tuple_string() const {
    if (parts_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Factorization factorize(std::uint64_t n, std::uint64_t bound) {
    if (n == 0 || n > bound) {
        throw RangeError("factorize: " + std::to_string(n) + " is outside [1, " + std::to_string(bound) + "]");
    }
    Factorization out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.factors.push_back({p, e});
    };
    strip(2);
    for (std::uint64_t p = 3; p <= n / p; p += 2) strip(p);
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

PrimeSignature signature_of(std::uint64_t n, std::uint64_t bound) {
    const auto exps = factorize(n, bound).exponents();
    return PrimeSignature::from_exponents(exps);
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                    std::vector<PrimeSignature>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<PrimeSignature> partitions_of(unsigned k) {
    std::vector<PrimeSignature> out;
    std::vector<unsigned> prefix;
    partitions_rec(k, k, prefix, out);
    return out;
}

std::vector<PrimeSignature> enumerate_signatures(SignatureOrder order, std::size_t count) {
    std::vector<PrimeSignature> out;
    out.reserve(count);
    for (unsigned k = 0; out.size() < count; ++k) {
        auto grade = partitions_of(k);  // already reverse-lexicographic
        if (order == SignatureOrder::GradedColex) {
            std::stable_sort(grade.begin(), grade.end(), [](const auto& a, const auto& b) {
                return a.small_omega() < b.small_omega();
            });
        }
        for (auto& s : grade) {
            if (out.size() == count) break;
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<PrimeSignature> signatures_up_to_big_omega(unsigned max_big_omega) {
    std::vector<PrimeSignature> out;
    for (unsigned k = 0; k <= max_big_omega; ++k) {
        auto grade = partitions_of(k);
        std::stable_sort(grade.begin(), grade.end(), [](const auto& a, const auto& b) {
            return a.small_omega() < b.small_omega();
        });
        std::move(grade.begin(), grade.end(), std::back_inserter(out));
    }
    return out;
}

std::uint64_t nth_prime(std::size_t k) {
    static std::mutex mutex;
    static std::vector<std::uint64_t> primes{2, 3};
    std::lock_guard lock(mutex);
    while (primes.size() <= k) {
        std::uint64_t candidate = primes.back() + 2;
        for (;; candidate += 2) {
            bool prime = true;
            for (std::uint64_t p : primes) {
                if (p * p > candidate) break;
                if (candidate % p == 0) {
                    prime = false;
                    break;
                }
            }
            if (prime) break;
        }
        primes.push_back(candidate);
    }
    return primes[k];
}

std::uint64_t least_integer(const PrimeSignature& s, std::uint64_t bound) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < s.parts().size(); ++i) {
        const auto p = nth_prime(i);
        for (unsigned e = 0; e < s.parts()[i]; ++e) n = checked_mul(n, p, "least integer", bound);
    }
    return n;
}

}  // namespace divlat
