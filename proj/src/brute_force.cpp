#include "cftp/oracle/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cftp {

std::vector<SignMatrix> brute_force_asms(int n) {
    std::vector<std::vector<int>> rows;
    std::vector<int> row(static_cast<std::size_t>(n));
    std::function<void(int, int)> gen_row = [&](int pos, int prefix) {
        if (pos == n) {
            if (prefix == 1) rows.push_back(row);
            return;
        }
        for (int v : {-1, 0, 1}) {
            const int next = prefix + v;
            if (next < 0 || next > 1) continue;
            row[static_cast<std::size_t>(pos)] = v;
            gen_row(pos + 1, next);
        }
    };
    gen_row(0, 0);

    std::vector<SignMatrix> out;
    SignMatrix m(n);
    std::vector<int> colsum(static_cast<std::size_t>(n), 0);
    std::function<void(int)> place = [&](int r) {
        if (r == n) {
            if (std::all_of(colsum.begin(), colsum.end(), [](int s) { return s == 1; })) out.push_back(m);
            return;
        }
        for (const auto& cand : rows) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                const int s = colsum[static_cast<std::size_t>(j)] + cand[static_cast<std::size_t>(j)];
                ok = s == 0 || s == 1;
            }
            if (!ok) continue;
            for (int j = 0; j < n; ++j) {
                colsum[static_cast<std::size_t>(j)] += cand[static_cast<std::size_t>(j)];
                m(r, j) = cand[static_cast<std::size_t>(j)];
            }
            place(r + 1);
            for (int j = 0; j < n; ++j) colsum[static_cast<std::size_t>(j)] -= cand[static_cast<std::size_t>(j)];
        }
    };
    place(0);
    return out;
}

std::vector<IndependentSetState> brute_force_independent_sets(const IndependentSetSystem& sys) {
    const std::size_t nb = sys.black_count(), nw = sys.white_count(), v = nb + nw;
    std::vector<IndependentSetState> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
        IndependentSetState s{std::vector<std::uint8_t>(nb), std::vector<std::uint8_t>(nw)};
        for (std::size_t i = 0; i < nb; ++i) s.black_members[i] = (mask >> i) & 1u;
        for (std::size_t i = 0; i < nw; ++i) s.white_members[i] = (mask >> (nb + i)) & 1u;
        if (sys.is_independent(s)) out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Domino>> brute_force_domino_tilings(const std::vector<Cell>& region) {
    std::set<Cell> free(region.begin(), region.end());
    std::vector<std::vector<Domino>> out;
    std::vector<Domino> current;
    std::function<void()> rec = [&]() {
        if (free.empty()) {
            auto t = current;
            std::sort(t.begin(), t.end());
            out.push_back(std::move(t));
            return;
        }
        const Cell c = *free.begin();  // smallest cell: its partner is larger
        free.erase(free.begin());
        for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}}) {
            auto it = free.find(n);
            if (it == free.end()) continue;
            free.erase(it);
            current.push_back(c < n ? Domino{c, n} : Domino{n, c});
            rec();
            current.pop_back();
            free.insert(n);
        }
        free.insert(c);
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PlanePartition> brute_force_plane_partitions(const BoxesParams& p) {
    std::vector<PlanePartition> out;
    PlanePartition pp(p.a, p.b);
    std::function<void(int)> rec = [&](int cell) {
        if (cell == p.a * p.b) {
            out.push_back(pp);
            return;
        }
        const int i = cell / p.b, j = cell % p.b;
        int cap = p.c;
        if (i > 0) cap = std::min(cap, pp(i - 1, j));
        if (j > 0) cap = std::min(cap, pp(i, j - 1));
        for (int v = 0; v <= cap; ++v) {
            pp(i, j) = v;
            rec(cell + 1);
        }
        pp(i, j) = 0;
    };
    rec(0);
    return out;
}

}  // namespace cftp
