#pragma once

// Deliberately naive reference implementations, independent of the library's search code.
// Only for small graphs.

#include <p5w4/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle
{
    using p5w4::Graph;

    inline auto subset_is_clique(const Graph & g, std::uint64_t mask) -> bool
    {
        for (int u = 0; u < g.n(); ++u)
            if (mask >> u & 1)
                for (int v = u + 1; v < g.n(); ++v)
                    if ((mask >> v & 1) && ! g.adjacent(u, v))
                        return false;
        return true;
    }

    inline auto subset_is_stable(const Graph & g, std::uint64_t mask) -> bool
    {
        for (int u = 0; u < g.n(); ++u)
            if (mask >> u & 1)
                for (int v = u + 1; v < g.n(); ++v)
                    if ((mask >> v & 1) && g.adjacent(u, v))
                        return false;
        return true;
    }

    // largest clique inside `within`, by enumerating every subset
    inline auto omega(const Graph & g, std::uint64_t within) -> int
    {
        int best = 0;
        for (std::uint64_t m = within;; m = (m - 1) & within) {
            int c = __builtin_popcountll(m);
            if (c > best && subset_is_clique(g, m))
                best = c;
            if (m == 0)
                break;
        }
        return best;
    }

    inline auto omega(const Graph & g) -> int
    {
        return omega(g, (std::uint64_t{1} << g.n()) - 1);
    }

    inline auto alpha(const Graph & g) -> int
    {
        int best = 0;
        std::uint64_t all = (std::uint64_t{1} << g.n()) - 1;
        for (std::uint64_t m = all;; m = (m - 1) & all) {
            int c = __builtin_popcountll(m);
            if (c > best && subset_is_stable(g, m))
                best = c;
            if (m == 0)
                break;
        }
        return best;
    }

    // plain backtracking k-colourability, vertices in index order
    inline auto colourable(const Graph & g, int k) -> bool
    {
        std::vector<int> col(g.n(), -1);
        auto go = [&](auto & self, int v) -> bool {
            if (v == g.n())
                return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u = 0; u < v; ++u)
                    if (g.adjacent(u, v) && col[u] == c) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    col[v] = c;
                    if (self(self, v + 1))
                        return true;
                }
            }
            col[v] = -1;
            return false;
        };
        return go(go, 0);
    }

    inline auto chi(const Graph & g) -> int
    {
        int k = 0;
        while (! colourable(g, k))
            ++k;
        return k;
    }

    // does g have an induced subgraph isomorphic to h (every subset, every bijection)
    inline auto contains_induced(const Graph & g, const Graph & h) -> bool
    {
        int k = h.n(), n = g.n();
        if (k > n)
            return false;
        std::vector<int> perm(k);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            if (__builtin_popcountll(m) != k)
                continue;
            std::vector<int> vs;
            for (int v = 0; v < n; ++v)
                if (m >> v & 1)
                    vs.push_back(v);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool ok = true;
                for (int i = 0; i < k && ok; ++i)
                    for (int j = i + 1; j < k && ok; ++j)
                        if (h.adjacent(i, j) != g.adjacent(vs[perm[i]], vs[perm[j]]))
                            ok = false;
                if (ok)
                    return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return false;
    }

    inline auto components(const Graph & g, std::uint64_t within) -> int
    {
        int count = 0;
        std::uint64_t left = within;
        while (left) {
            ++count;
            std::uint64_t comp = left & -left, prev = 0;
            while (comp != prev) {
                prev = comp;
                for (int v = 0; v < g.n(); ++v)
                    if (comp >> v & 1)
                        for (int u = 0; u < g.n(); ++u)
                            if ((within >> u & 1) && g.adjacent(u, v))
                                comp |= std::uint64_t{1} << u;
            }
            left &= ~comp;
        }
        return count;
    }

    // some clique (possibly empty) whose removal leaves more components
    inline auto has_clique_cutset(const Graph & g) -> bool
    {
        std::uint64_t all = (std::uint64_t{1} << g.n()) - 1;
        int base = components(g, all);
        for (std::uint64_t m = 0; m <= all; ++m)
            if (m != all && subset_is_clique(g, m) && components(g, all & ~m) > base)
                return true;
        return false;
    }
}
