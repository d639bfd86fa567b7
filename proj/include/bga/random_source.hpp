#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bga {

// Injected deterministic random stream. Every stochastic operator receives
// one explicitly; same seed, same stream. Kept abstract so tests can script
// exact draw sequences.
class RandomSource {
  public:
    virtual ~RandomSource() = default;

    virtual bool bit() = 0;                              // uniform coin
    virtual std::uint64_t below(std::uint64_t bound) = 0;  // uniform in [0, bound)
    virtual double real01() = 0;                         // uniform in [0, 1)
    virtual std::string_view name() const = 0;
};

// mt19937_64-backed source. The bounded draw uses rejection sampling on the
// raw 64-bit output rather than std::uniform_int_distribution, whose mapping
// is implementation-defined; this keeps records identical across platforms.
class Mt19937Source final : public RandomSource {
  public:
    explicit Mt19937Source(std::uint64_t seed) : engine_(seed) {}

    bool bit() override { return (engine_() & 1u) != 0; }

    std::uint64_t below(std::uint64_t bound) override {
        // 2^64 mod bound values at the low end would be over-represented;
        // reject raw draws under that threshold.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    double real01() override {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::string_view name() const override { return "mt19937_64"; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace bga
