#include "mrlrc/common.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace mrlrc {

std::vector<int> unrank_subset(unsigned n, unsigned k, std::uint64_t rank) {
    std::vector<int> out;
    out.reserve(k);
    int x = 0;
    for (unsigned i = 0; i < k; ++i) {
        // advance x until the block of subsets starting with x covers `rank`
        for (;;) {
            std::uint64_t block = binom(n - 1 - x, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        out.push_back(x);
        ++x;
    }
    return out;
}

bool next_subset(std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool factor_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& t) {
    if (q < 2) return false;
    std::uint64_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    p = (d * d <= q) ? d : q;
    t = 0;
    std::uint64_t v = q;
    while (v > 1) {
        if (v % p != 0) return false;
        v /= p;
        ++t;
    }
    return true;
}

namespace {
constexpr std::uint32_t kLimbBase = 1'000'000'000u;
}

void BigDec::mul_add(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& l : limb) {
        std::uint64_t v = static_cast<std::uint64_t>(l) * mul + carry;
        l = static_cast<std::uint32_t>(v % kLimbBase);
        carry = v / kLimbBase;
    }
    while (carry) {
        limb.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
        carry /= kLimbBase;
    }
}

std::uint32_t BigDec::divmod(std::uint32_t div) {
    std::uint64_t rem = 0;
    for (auto it = limb.rbegin(); it != limb.rend(); ++it) {
        std::uint64_t v = rem * kLimbBase + *it;
        *it = static_cast<std::uint32_t>(v / div);
        rem = v % div;
    }
    while (!limb.empty() && limb.back() == 0) limb.pop_back();
    return static_cast<std::uint32_t>(rem);
}

std::string BigDec::str() const {
    if (limb.empty()) return "0";
    char buf[16];
    std::string s = std::to_string(limb.back());
    for (auto it = limb.rbegin() + 1; it != limb.rend(); ++it) {
        std::snprintf(buf, sizeof buf, "%09u", *it);
        s += buf;
    }
    return s;
}

BigDec BigDec::parse(const std::string& s) {
    if (s.empty()) throw Error("empty decimal string");
    BigDec v;
    for (char c : s) {
        if (c < '0' || c > '9') throw Error("bad decimal string: " + s);
        v.mul_add(10, static_cast<std::uint32_t>(c - '0'));
    }
    return v;
}

std::string Fnv1a::hex() const {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace mrlrc
