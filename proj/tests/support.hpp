#pragma once

#include "brauer/io.hpp"

#include <numeric>
#include <random>

namespace brauer::support {

inline std::string fixture_path(const std::string& name) { return std::string(BRAUER_FIXTURE_DIR) + "/" + name; }

inline BrauerComplex fixture(const std::string& name) { return load_complex(fixture_path(name + ".json")); }

/// Uniformly random pairing and rotation on 2*edges darts, retried until
/// connected; vertex multiplicities uniform in 1..max_mult.
inline BrauerComplex random_complex(std::mt19937& rng, int edges, int max_mult) {
    const int n = 2 * edges;
    for (;;) {
        std::vector<Dart> darts(n), alpha(n), sigma(n);
        std::iota(darts.begin(), darts.end(), 0);
        std::shuffle(darts.begin(), darts.end(), rng);
        for (int i = 0; i < n; i += 2) {
            alpha[darts[i]] = darts[i + 1];
            alpha[darts[i + 1]] = darts[i];
        }
        std::shuffle(darts.begin(), darts.end(), rng);
        for (int i = 0; i < n; ++i) sigma[darts[i]] = darts[(i + 1) % n];
        // split the single cycle into vertices at random cut points
        std::vector<Dart> order = darts;
        std::uniform_int_distribution<int> coin(0, 2);
        std::size_t start = 0;
        for (int i = 1; i <= n; ++i) {
            if (i == n || coin(rng) == 0) {
                for (std::size_t k = start; k < static_cast<std::size_t>(i); ++k)
                    sigma[order[k]] = order[k + 1 < static_cast<std::size_t>(i) ? k + 1 : start];
                start = i;
            }
        }
        RibbonComplex c(alpha, sigma);
        if (!is_connected(c)) continue;
        std::uniform_int_distribution<int> mult(1, max_mult);
        std::vector<int> by_vertex(c.vertex_count());
        for (int& m : by_vertex) m = mult(rng);
        return BrauerComplex::with_vertex_mults(std::move(c), by_vertex);
    }
}

} // namespace brauer::support
