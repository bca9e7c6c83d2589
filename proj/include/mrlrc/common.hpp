// Shared utilities: error types, deterministic RNG, combinatorics helpers,
// big-decimal strings and content digests used by the serialization layer.
#ifndef MRLRC_COMMON_HPP
#define MRLRC_COMMON_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrlrc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration budget exceeded; the CLI maps this to its own exit code.
struct CapExceeded : Error {
    using Error::Error;
};

constexpr std::uint64_t kDefaultEnumCap = 1'000'000;
constexpr std::uint64_t kDefaultFieldCap = 1u << 20;

// splitmix64: tiny, stable across platforms (std distributions are not).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

// Saturating helpers so pattern-count estimates never overflow silently.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t v = 1;
    while (exp--) v = sat_mul(v, base);
    return v;
}

inline std::uint64_t binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // r * (n-k+i) / i is always integral at each step
        std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

// Lexicographic rank <-> k-subset of {0..n-1} (combinadic).
std::vector<int> unrank_subset(unsigned n, unsigned k, std::uint64_t rank);
bool next_subset(std::vector<int>& s, int n);  // lex successor, false at end

bool is_prime_u64(std::uint64_t n);
// q = p^t for prime p; returns false if q is not a prime power.
bool factor_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& t);

// Nonnegative decimal strings of arbitrary size (big enough for q^degQ).
// Digits held in base-1e9 limbs, little endian.
struct BigDec {
    std::vector<std::uint32_t> limb;  // empty == 0
    bool is_zero() const { return limb.empty(); }
    void mul_add(std::uint32_t mul, std::uint32_t add);
    std::uint32_t divmod(std::uint32_t div);  // in place, returns remainder
    std::string str() const;
    static BigDec parse(const std::string& s);
};

// FNV-1a 64-bit, used as the artifact content digest.
struct Fnv1a {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    void feed(const void* data, std::size_t n) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ULL;
        }
    }
    void feed(const std::string& s) {
        feed(s.data(), s.size());
        feed("|", 1);
    }
    std::string hex() const;
};

}  // namespace mrlrc

#endif
