#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tcl {

// All randomized routines take any URBG that yields full-width 64-bit words
// (std::mt19937_64 in practice).  The helpers below avoid
// std::uniform_*_distribution on purpose: those are implementation-defined,
// and reproducibility across standard libraries is part of the contract.
using rng_t = std::mt19937_64;

// 64-bit FNV-1a over a label.  Stable across platforms; used to key
// per-component seed streams by name.
constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t hash = 1469598103934665603ull;
    for (char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash;
}

// splitmix64 finalizer.  Scrambles related inputs (seed, seed+1, ...) into
// uncorrelated outputs before they are used as engine seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic sub-seed: one master seed fans out into independent streams
// keyed by a stable component label, plus an index for per-run ensembles.
// Changing how one component consumes its stream never shifts another's.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                    std::uint64_t index = 0) noexcept {
    return mix64(mix64(master ^ fnv1a64(label)) + index);
}

inline rng_t make_rng(std::uint64_t master, std::string_view label, std::uint64_t index = 0) {
    return rng_t(derive_seed(master, label, index));
}

// Unbiased integer in [0, n).  Rejection on the top sliver of the 64-bit
// range, then a plain modulo: the raw-word -> result mapping stays obvious,
// which the scripted-engine tests lean on.  n must be nonzero.
template <class URBG>
std::uint64_t uniform_index(URBG& rng, std::uint64_t n) {
    static_assert(URBG::min() == 0 && URBG::max() == ~std::uint64_t{0},
                  "uniform_index needs a full-width 64-bit generator");
    const std::uint64_t tail = (0 - n) % n; // 2^64 mod n
    std::uint64_t word = rng();
    if (tail != 0) {
        const std::uint64_t limit = 0 - tail; // largest multiple of n that fits
        while (word >= limit) word = rng();
    }
    return word % n;
}

// Uniform double in [0, 1), 53 random bits.
template <class URBG>
double uniform_real01(URBG& rng) {
    static_assert(URBG::min() == 0 && URBG::max() == ~std::uint64_t{0},
                  "uniform_real01 needs a full-width 64-bit generator");
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Coin flip with success probability p.  Always consumes exactly one word so
// downstream draws stay aligned regardless of p.
template <class URBG>
bool bernoulli(URBG& rng, double p) {
    return uniform_real01(rng) < p;
}

} // namespace tcl
