#include "lmoam/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lmoam {

std::uint64_t mix_seed(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RngStream::next_u64()
{
    return engine_();
}

double RngStream::uniform()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

std::size_t RngStream::index(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("RngStream::index: empty range");
    }
    // Lemire's nearly-divisionless rejection method.
    const auto range = static_cast<std::uint64_t>(n);
    unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * range;
    auto low = static_cast<std::uint64_t>(product);
    if (low < range) {
        const std::uint64_t threshold = (0 - range) % range;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(next_u64()) * range;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::size_t>(product >> 64);
}

bool RngStream::bernoulli(double p)
{
    return uniform() < p;
}

double RngStream::exponential()
{
    return -std::log1p(-uniform());
}

RngStream RngStream::split()
{
    return RngStream(mix_seed(next_u64()));
}

} // namespace lmoam
