#include "gkc/gkbuild.hpp"

namespace gkc {

Graph gk_altsym(AltSymKind kind, unsigned n) {
    if (n < 2) throw std::invalid_argument("gk_altsym: n must be at least 2");
    const auto primes = nt::primes_up_to(n);
    const unsigned two_shift = kind == AltSymKind::Sym ? 2 : 4;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const auto r = primes[i], s = primes[j];
            const bool adj = r == 2 ? two_shift + s <= n : r + s <= n;
            if (adj) edges.emplace_back(r, s);
        }
    return Graph::from_primes(primes, edges);
}

SplitPartition altsym_partition(unsigned n) {
    SplitPartition part;
    for (auto r : nt::primes_up_to(n)) (r <= n / 2 ? part.C : part.I).push_back(Label::of_prime(r));
    return part;
}

}  // namespace gkc
