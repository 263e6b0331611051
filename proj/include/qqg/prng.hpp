#pragma once

#include <cstdint>
#include <string>

namespace qqg {

// SplitMix64.  Hand-rolled so that streams are identical across platforms
// and standard libraries; seeds for sub-tasks are derived by hashing the
// task id into the parent seed.
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [lo, hi], inclusive.  Modulo bias is irrelevant here.
    long range(long lo, long hi) {
        return lo + (long)(next() % (uint64_t)(hi - lo + 1));
    }

    static uint64_t derive(uint64_t seed, const std::string& tag) {
        uint64_t h = 0xcbf29ce484222325ULL ^ seed;
        for (char c : tag) {
            h ^= (uint8_t)c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    uint64_t state_;
};

}  // namespace qqg
