#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace p5w4
{
    inline constexpr int max_vertices = 128;

    // Fixed-width bitset over vertex indices [0, max_vertices).
    class VertexSet
    {
    public:
        using Word = std::uint64_t;
        static constexpr int words = max_vertices / 64;

        constexpr VertexSet() = default;

        VertexSet(std::initializer_list<int> vs)
        {
            for (int v : vs)
                insert(v);
        }

        static auto range(int n) -> VertexSet
        {
            VertexSet s;
            for (int w = 0; w < words; ++w) {
                int lo = w * 64;
                if (n >= lo + 64)
                    s._w[w] = ~Word{0};
                else if (n > lo)
                    s._w[w] = (Word{1} << (n - lo)) - 1;
            }
            return s;
        }

        static auto from_vector(const std::vector<int> & vs) -> VertexSet
        {
            VertexSet s;
            for (int v : vs)
                s.insert(v);
            return s;
        }

        constexpr auto contains(int v) const -> bool { return (_w[v >> 6] >> (v & 63)) & 1; }
        constexpr auto insert(int v) -> void { _w[v >> 6] |= Word{1} << (v & 63); }
        constexpr auto erase(int v) -> void { _w[v >> 6] &= ~(Word{1} << (v & 63)); }

        constexpr auto empty() const -> bool
        {
            for (auto w : _w)
                if (w)
                    return false;
            return true;
        }

        constexpr auto size() const -> int
        {
            int c = 0;
            for (auto w : _w)
                c += std::popcount(w);
            return c;
        }

        // least member, or -1
        constexpr auto first() const -> int
        {
            for (int w = 0; w < words; ++w)
                if (_w[w])
                    return w * 64 + std::countr_zero(_w[w]);
            return -1;
        }

        // least member greater than v, or -1
        constexpr auto next(int v) const -> int
        {
            ++v;
            if (v >= max_vertices)
                return -1;
            int w = v >> 6;
            Word cur = _w[w] & (~Word{0} << (v & 63));
            while (true) {
                if (cur)
                    return w * 64 + std::countr_zero(cur);
                if (++w == words)
                    return -1;
                cur = _w[w];
            }
        }

        constexpr auto pop_first() -> int
        {
            int v = first();
            if (v >= 0)
                erase(v);
            return v;
        }

        constexpr auto operator|=(const VertexSet & o) -> VertexSet &
        {
            for (int w = 0; w < words; ++w)
                _w[w] |= o._w[w];
            return *this;
        }
        constexpr auto operator&=(const VertexSet & o) -> VertexSet &
        {
            for (int w = 0; w < words; ++w)
                _w[w] &= o._w[w];
            return *this;
        }
        constexpr auto operator-=(const VertexSet & o) -> VertexSet &
        {
            for (int w = 0; w < words; ++w)
                _w[w] &= ~o._w[w];
            return *this;
        }

        friend constexpr auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend constexpr auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend constexpr auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
        friend constexpr auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

        // lexicographic on sorted member lists
        friend auto operator<(const VertexSet & a, const VertexSet & b) -> bool
        {
            return a.to_vector() < b.to_vector();
        }

        constexpr auto intersects(const VertexSet & o) const -> bool
        {
            for (int w = 0; w < words; ++w)
                if (_w[w] & o._w[w])
                    return true;
            return false;
        }

        constexpr auto subset_of(const VertexSet & o) const -> bool
        {
            for (int w = 0; w < words; ++w)
                if (_w[w] & ~o._w[w])
                    return false;
            return true;
        }

        auto to_vector() const -> std::vector<int>
        {
            std::vector<int> r;
            for (int v = first(); v >= 0; v = next(v))
                r.push_back(v);
            return r;
        }

        auto to_string() const -> std::string
        {
            std::string r = "{";
            bool first_one = true;
            for (int v = first(); v >= 0; v = next(v)) {
                if (! first_one)
                    r += ",";
                r += std::to_string(v);
                first_one = false;
            }
            return r + "}";
        }

        constexpr auto word(int w) const -> Word { return _w[w]; }

        template <typename F>
        constexpr auto for_each(F && f) const -> void
        {
            for (int w = 0; w < words; ++w) {
                Word cur = _w[w];
                while (cur) {
                    int b = std::countr_zero(cur);
                    cur &= cur - 1;
                    f(w * 64 + b);
                }
            }
        }

    private:
        std::array<Word, words> _w{};
    };
}
