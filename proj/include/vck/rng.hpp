#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace vck {

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : gen_(mix(seed)) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t next() { return gen_(); }
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
    // failures before the first success
    std::size_t geometric(double p) { return std::geometric_distribution<std::size_t>(p)(gen_); }
    Rng fork() { return Rng(next()); }
    static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        return Rng(mix(seed ^ mix(a + 0x1234567ULL * (b + 1))));
    }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }
    template <class T>
    std::vector<T> sample(std::vector<T> v, std::size_t k) {
        k = std::min(k, v.size());
        for (std::size_t i = 0; i < k; ++i) std::swap(v[i], v[i + below(v.size() - i)]);
        v.resize(k);
        return v;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace vck
