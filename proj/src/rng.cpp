#include "plgd/rng.hpp"

#include <cmath>

namespace plgd {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed & 0xffffffffu),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream_id & 0xffffffffu),
        static_cast<std::uint32_t>(stream_id >> 32),
    };
    engine_.seed(seq);
}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double RngStream::normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();  // log(0) guard; hit with probability 2^-53
    const double u2 = uniform01();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

Eigen::VectorXd RngStream::gaussian_vector(Eigen::Index dim) {
    Eigen::VectorXd g(dim);
    for (Eigen::Index i = 0; i < dim; ++i) g[i] = normal();
    return g;
}

}  // namespace plgd
