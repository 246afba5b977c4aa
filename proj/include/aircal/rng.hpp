#pragma once

#include <cstdint>
#include <vector>

namespace aircal {

// splitmix64 generator. Every random draw in the project flows from one
// root seed through derive_rng() with a fixed stream id per consumer, so
// runs are reproducible bit-for-bit and consumers cannot perturb each
// other's streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // [0, 1) with 53-bit resolution
    double next_unit();

    double uniform(double lo, double hi);

    // standard normal via Box-Muller; consumes two uniforms per call
    double normal();

    // unbiased integer in [0, n)
    std::uint64_t below(std::uint64_t n);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

enum class Stream : std::uint64_t {
    model_init = 1,
    batch_source,
    batch_target_labeled,
    batch_target_unlabeled,
    synth_function,
    synth_source,
    synth_target,
    synth_noise,
};

Rng derive_rng(std::uint64_t root_seed, Stream stream, std::uint64_t salt = 0);

}  // namespace aircal
