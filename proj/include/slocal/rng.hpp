#pragma once

#include <cstdint>
#include <random>

namespace slocal {

// Deterministic random stream. All randomness in the library flows through
// this wrapper; distributions are derived from raw 64-bit draws so results
// do not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Stream for a specific node, independent of processing order.
    static Rng for_node(std::uint64_t seed, int node) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(node) + 1, std::uint64_t{0x9e3779b97f4a7c15}};
        Rng r(0);
        r.gen_.seed(seq);
        return r;
    }

    // Substream keyed by an arbitrary tag (cluster ids, retry counters, ...).
    static Rng sub(std::uint64_t seed, std::uint64_t tag) {
        std::seed_seq seq{seed, tag, std::uint64_t{0xb5297a4d1c9e3779}};
        Rng r(0);
        r.gen_.seed(seq);
        return r;
    }

    std::uint64_t next_u64() {
        ++draws_;
        return gen_();
    }

    // Uniform in [0, n), n >= 1. Rejection-free modulo is fine here; bias is
    // negligible for desk-scale n and keeps the draw count deterministic.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Fisher-Yates shuffle with deterministic draw count.
    template <typename Vec>
    void shuffle(Vec& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::uint64_t draws() const { return draws_; }

    void skip(std::uint64_t k) {
        for (std::uint64_t i = 0; i < k; ++i) next_u64();
    }

private:
    std::mt19937_64 gen_;
    std::uint64_t draws_ = 0;
};

}  // namespace slocal
