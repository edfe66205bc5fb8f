#include "wsigclust/rng.hpp"

#include <stdexcept>

namespace wsigclust {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t& x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

__extension__ typedef unsigned __int128 uint128;

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t mix_key(std::uint64_t seed, std::uint64_t stream_id) noexcept {
    std::uint64_t a = seed;
    std::uint64_t h = splitmix64(a);
    std::uint64_t b = stream_id ^ 0xD1B54A32D192ED03ULL;
    h ^= splitmix64(b) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
    std::uint64_t x = mix_key(seed, stream_id);
    for (auto& s : state_) {
        s = splitmix64(x);
    }
}

RngStream RngStream::substream(std::uint64_t id) const {
    return RngStream(mix_key(seed_, stream_id_), id);
}

RngStream::result_type RngStream::operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    return normal_(*this);
}

std::size_t RngStream::uniform_index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index: n must be positive");
    }
    // Lemire's nearly-divisionless bounded draw.
    const auto bound = static_cast<std::uint64_t>(n);
    uint128 m = static_cast<uint128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<uint128>((*this)()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::size_t>(m >> 64);
}

} // namespace wsigclust
