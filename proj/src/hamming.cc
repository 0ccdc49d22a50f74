#include <pcn/hamming.hh>
#include <pcn/errors.hh>

#include <algorithm>
#include <string>

namespace pcn
{
    namespace
    {
        auto params_text(const HammingParams & p) -> std::string
        {
            return "q=" + std::to_string(p.q) + ", m=" + std::to_string(p.m);
        }

        auto power(long long base, int exponent) -> long long
        {
            long long result = 1;
            for (int i = 0 ; i < exponent ; ++i)
                result *= base;
            return result;
        }
    }

    auto HammingParams::vertex_count() const -> long long
    {
        long long result = 1;
        for (int i = 0 ; i < m ; ++i) {
            if (result > (1LL << 40) / std::max(q, 1))
                return -1;
            result *= q;
        }
        return result;
    }

    auto HammingParams::validate(long long vertex_budget) const -> void
    {
        if (q < 2)
            throw Error(ErrorKind::InvalidArgument, "alphabet size q must be at least 2 (" + params_text(*this) + ")");
        if (m < 1)
            throw Error(ErrorKind::InvalidArgument, "word length m must be at least 1 (" + params_text(*this) + ")");
        auto count = vertex_count();
        if (count < 0 || count > vertex_budget)
            throw Error(ErrorKind::BudgetExceeded, "H_{" + std::to_string(q) + "," + std::to_string(m) + "} has more than "
                    + std::to_string(vertex_budget) + " vertices");
    }

    auto encode(const HammingParams & p, const Word & word) -> int
    {
        if (static_cast<int>(word.size()) != p.m)
            throw Error(ErrorKind::InvalidArgument, "word length " + std::to_string(word.size()) + " != m");
        int rank = 0;
        for (int c : word) {
            if (c < 0 || c >= p.q)
                throw Error(ErrorKind::InvalidArgument, "symbol " + std::to_string(c) + " outside alphabet");
            rank = rank * p.q + c;
        }
        return rank;
    }

    auto decode(const HammingParams & p, int rank) -> Word
    {
        Word word(p.m);
        for (int i = p.m - 1 ; i >= 0 ; --i) {
            word[i] = rank % p.q;
            rank /= p.q;
        }
        return word;
    }

    auto generate(const HammingParams & p, long long vertex_budget) -> Graph
    {
        p.validate(vertex_budget);
        const int n = static_cast<int>(p.vertex_count());
        std::vector<Bitset> rows(n, Bitset(n));
        for (int v = 0 ; v < n ; ++v) {
            int place = 1;
            for (int j = p.m - 1 ; j >= 0 ; --j) {
                const int digit = (v / place) % p.q;
                for (int c = 0 ; c < p.q ; ++c)
                    if (c != digit)
                        rows[v].set(v + (c - digit) * place);
                place *= p.q;
            }
        }
        return Graph::from_rows(std::move(rows));
    }

    auto hamming_distance_matrix(const HammingParams & p, long long vertex_budget) -> DistanceMatrix
    {
        p.validate(vertex_budget);
        const int n = static_cast<int>(p.vertex_count());
        std::vector<Word> words(n);
        for (int v = 0 ; v < n ; ++v)
            words[v] = decode(p, v);

        std::vector<DistanceMatrix::Distance> dist(static_cast<std::size_t>(n) * n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v) {
                int differing = 0;
                for (int j = 0 ; j < p.m ; ++j)
                    differing += words[u][j] != words[v][j];
                dist[static_cast<std::size_t>(u) * n + v] = static_cast<DistanceMatrix::Distance>(differing);
            }
        return DistanceMatrix(n, std::move(dist));
    }

    auto diagonal_stable_set(const HammingParams & p, long long vertex_budget) -> StableSet
    {
        p.validate(vertex_budget);
        const int n = static_cast<int>(p.vertex_count());
        std::vector<int> members;
        for (int v = 0 ; v < n ; ++v) {
            auto word = decode(p, v);
            int sum = 0;
            for (int c : word)
                sum += c;
            if (sum % p.q == 0)
                members.push_back(v);
        }

        // Two members never differ in exactly one coordinate.
        std::vector<char> in_set(n, 0);
        for (int v : members)
            in_set[v] = 1;
        bool stable = true;
        for (int v : members) {
            int place = 1;
            for (int j = 0 ; j < p.m ; ++j, place *= p.q) {
                const int digit = (v / place) % p.q;
                for (int c = 0 ; c < p.q ; ++c)
                    if (c != digit && in_set[v + (c - digit) * place])
                        stable = false;
            }
        }
        return StableSet{std::move(members), stable};
    }

    auto a_permutation(int q) -> std::vector<int>
    {
        if (q < 3)
            throw Error(ErrorKind::QTooSmall, "a_i permutation needs q >= 3, got q=" + std::to_string(q));

        std::vector<int> a(q);
        for (int i = 0 ; i < q ; ++i) {
            if (i < q / 2)
                a[i] = q - 2 * (i + 1);
            else
                a[i] = 2 * q - 2 * (i + 1) + (q % 2 == 0 ? 1 : 0);
        }

        std::vector<char> seen(q, 0);
        for (int i = 0 ; i < q ; ++i) {
            if (a[i] < 0 || a[i] >= q || seen[a[i]])
                throw Error(ErrorKind::InvalidArgument, "a_i sequence is not a permutation for q=" + std::to_string(q));
            seen[a[i]] = 1;
            if ((2 * i + a[i]) % q == 0)
                throw Error(ErrorKind::InvalidArgument, "2i + a_i vanishes mod q at i=" + std::to_string(i)
                        + " for q=" + std::to_string(q));
        }
        return a;
    }

    auto theorem4_layered_set(const HammingParams & p) -> LayeredStableSet
    {
        if (p.m != 3)
            throw Error(ErrorKind::OutOfTheoremRange, "layered construction needs m=3 (" + params_text(p) + ")");
        auto a = a_permutation(p.q);

        LayeredStableSet result;
        result.layers = {1, 2};
        for (int v : diagonal_stable_set(p, p.vertex_count()).members)
            result.members.push_back(LayeredVertex{v, 1});
        for (int i = 0 ; i < p.q ; ++i)
            result.members.push_back(LayeredVertex{encode(p, {i, i, a[i]}), 2});
        std::sort(result.members.begin(), result.members.end(), [] (const LayeredVertex & x, const LayeredVertex & y) {
            return std::pair(x.layer, x.vertex) < std::pair(y.layer, y.vertex);
        });
        return result;
    }

    auto lemma2_lower_bound(const HammingParams & p) -> long long
    {
        if (p.m < 1 || p.q < 2)
            throw Error(ErrorKind::InvalidArgument, "need q >= 2 and m >= 1 (" + params_text(p) + ")");
        long long sum = 0;
        for (int k = 1 ; k <= p.m - 1 ; ++k)
            sum += power(p.q, k);
        return p.m - 1 + power(p.q, p.m) - sum;
    }

    auto theorem4_value(const HammingParams & p) -> long long
    {
        const long long q = p.q;
        if (p.m == 2 && q >= 2)
            return 1 + q * q - q;
        if (p.m == 3 && q >= 3)
            return 2 + q * q * q - q * q - q;
        throw Error(ErrorKind::OutOfTheoremRange, "closed form known only for m=2 (q>=2) and m=3 (q>=3), got "
                + params_text(p));
    }

    auto alpha_upper_bound_propagation(const HammingParams & p, long long pcn_lower_prev) -> long long
    {
        if (p.m < 2)
            throw Error(ErrorKind::InvalidArgument, "propagation needs m >= 2 (" + params_text(p) + ")");
        const long long product_bound = p.q * pcn_lower_prev - static_cast<long long>(p.q - 1) * (p.m - 1);
        return p.m - 1 + power(p.q, p.m) - product_bound;
    }

    auto alpha_cap_from_lower_bound(const HammingParams & p) -> long long
    {
        return p.m - 1 + power(p.q, p.m) - lemma2_lower_bound(p);
    }
}
