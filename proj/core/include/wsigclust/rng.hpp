#ifndef WSIGCLUST_RNG_HPP
#define WSIGCLUST_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace wsigclust {

/**
 * @brief Deterministic, splittable random stream.
 *
 * A stream is identified by a `(seed, stream_id)` pair. The pair is hashed
 * through SplitMix64 to seed a xoshiro256** generator, so two streams with
 * the same key reproduce the same draws regardless of which thread or in
 * what order they are consumed. Child streams are derived with
 * `substream()`, which hashes the parent key together with the child id.
 *
 * Satisfies `UniformRandomBitGenerator` so it can drive standard
 * distributions directly.
 */
class RngStream {
  public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    /// Independent child stream keyed by this stream's key and `id`.
    [[nodiscard]] RngStream substream(std::uint64_t id) const;

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }

    result_type operator()() noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Standard normal draw.
    double normal();

    /// Uniform integer in [0, n). Requires n > 0.
    std::size_t uniform_index(std::size_t n);

    /// Fair coin.
    bool coin() noexcept { return ((*this)() >> 63) != 0; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::array<std::uint64_t, 4> state_{};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace wsigclust

#endif
