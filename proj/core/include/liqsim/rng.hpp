#pragma once

#include <cstdint>
#include <random>

namespace liqsim {

// SplitMix64 mixer, used to key one independent engine per path so that
// path i depends on (seed, i) only, never on execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t path_stream_key(std::uint64_t seed, std::uint64_t path_index) {
    return splitmix64(splitmix64(seed) ^ (path_index + 1));
}

// Split-stream standard-normal source. Box-Muller with a fixed consumption
// of two uniforms per pair keeps the draw sequence a pure function of the
// stream key, independently of the platform's std::normal_distribution.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t key) : engine_(key) {}

    NormalStream(std::uint64_t seed, std::uint64_t path_index)
        : engine_(path_stream_key(seed, path_index)) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1], u2 in [0,1)
        const double u1 = ((engine_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = (engine_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace liqsim
