#ifndef PCN_BITSET_HH
#define PCN_BITSET_HH

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pcn
{
    /// Dynamically sized bitset used for adjacency rows and candidate sets.
    /// Bits past size() are always zero.
    class Bitset
    {
        public:
            using Word = std::uint64_t;
            static constexpr int bits_per_word = 64;

            Bitset() = default;

            explicit Bitset(int size) :
                _size(size),
                _words((size + bits_per_word - 1) / bits_per_word, 0)
            {
            }

            auto size() const -> int { return _size; }

            auto set(int i) -> void { _words[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
            auto reset(int i) -> void { _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
            auto test(int i) const -> bool { return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1; }

            auto set_all() -> void
            {
                for (auto & w : _words)
                    w = ~Word{0};
                trim();
            }

            auto clear() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            auto count() const -> int
            {
                int result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto any() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return true;
                return false;
            }

            auto none() const -> bool { return ! any(); }

            /// Index of the lowest set bit at or after from, or -1.
            auto find_next(int from) const -> int
            {
                if (from >= _size)
                    return -1;
                auto wi = static_cast<std::size_t>(from / bits_per_word);
                Word w = _words[wi] & (~Word{0} << (from % bits_per_word));
                while (true) {
                    if (w)
                        return static_cast<int>(wi) * bits_per_word + std::countr_zero(w);
                    if (++wi == _words.size())
                        return -1;
                    w = _words[wi];
                }
            }

            auto find_first() const -> int { return find_next(0); }

            auto intersects(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            /// True if every bit of this is also set in other.
            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto intersection_count(const Bitset & other) const -> int
            {
                int result = 0;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & other._words[i]);
                return result;
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator|= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            /// this &= ~other
            auto subtract(const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            auto flip() -> Bitset &
            {
                for (auto & w : _words)
                    w = ~w;
                trim();
                return *this;
            }

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (std::size_t wi = 0 ; wi < _words.size() ; ++wi) {
                    Word w = _words[wi];
                    while (w) {
                        int bit = std::countr_zero(w);
                        f(static_cast<int>(wi) * bits_per_word + bit);
                        w &= w - 1;
                    }
                }
            }

            auto to_vector() const -> std::vector<int>
            {
                std::vector<int> result;
                result.reserve(count());
                for_each([&] (int v) { result.push_back(v); });
                return result;
            }

            auto operator== (const Bitset &) const -> bool = default;

        private:
            int _size = 0;
            std::vector<Word> _words;

            auto trim() -> void
            {
                if (_size % bits_per_word && ! _words.empty())
                    _words.back() &= (Word{1} << (_size % bits_per_word)) - 1;
            }
    };
}

#endif
