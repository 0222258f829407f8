#include "ramseylab/gnp.hpp"

#include "ramseylab/errors.hpp"

namespace ramseylab {

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return mix64(mix64(mix64(seed) ^ stream * 0xd6e8feb86659fd93ULL) ^
                 counter * 0xa0761d6478bd642fULL);
}

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(counter_rng(seed, stream, counter) >> 11) * 0x1.0p-53;
}

std::uint64_t pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t uu = static_cast<std::uint64_t>(u);
    return uu * un - uu * (uu + 1) / 2 + static_cast<std::uint64_t>(v - u - 1);
}

Graph sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t stream) {
    if (n < 0) throw DomainError("sample_gnp: negative n");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sample_gnp: p must lie in [0,1]");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (counter_uniform(seed, stream, pair_index(n, u, v)) < p) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

}  // namespace ramseylab
