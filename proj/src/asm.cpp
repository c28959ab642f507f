#include "cftp/families/asm.hpp"

#include <algorithm>

#include "cftp/error.hpp"

namespace cftp {

bool is_corner_sum_matrix(const CornerSumMatrix& c) {
    const int n = c.n;
    if (n < 1 || c.c.size() != static_cast<std::size_t>(n + 1) * (n + 1)) return false;
    for (int k = 0; k <= n; ++k)
        if (c(0, k) != 0 || c(k, 0) != 0 || c(n, k) != k || c(k, n) != k) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int dr = c(i, j) - c(i - 1, j), dc = c(i, j) - c(i, j - 1);
            if (dr < 0 || dr > 1 || dc < 0 || dc > 1) return false;
        }
    return true;
}

bool is_alternating_sign_matrix(const SignMatrix& m) {
    const int n = m.n;
    if (n < 1 || m.e.size() != static_cast<std::size_t>(n) * n) return false;
    for (int line = 0; line < n; ++line)
        for (bool by_row : {true, false}) {
            int expect = 1, sum = 0;
            for (int k = 0; k < n; ++k) {
                const int v = by_row ? m(line, k) : m(k, line);
                if (v < -1 || v > 1) return false;
                if (v == 0) continue;
                if (v != expect) return false;
                expect = -expect;
                sum += v;
            }
            if (sum != 1) return false;
        }
    return true;
}

SignMatrix corner_sum_to_asm(const CornerSumMatrix& c) {
    SignMatrix m(c.n);
    for (int i = 1; i <= c.n; ++i)
        for (int j = 1; j <= c.n; ++j) m(i - 1, j - 1) = c(i, j) - c(i - 1, j) - c(i, j - 1) + c(i - 1, j - 1);
    return m;
}

CornerSumMatrix asm_to_corner_sum(const SignMatrix& m) {
    CornerSumMatrix c(m.n);
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j) c(i, j) = m(i - 1, j - 1) + c(i - 1, j) + c(i, j - 1) - c(i - 1, j - 1);
    return c;
}

AsmSystem::AsmSystem(int n) : n_(n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "asm n must be >= 1");
    bottom_ = CornerSumMatrix(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) bottom_(i, j) = std::max(0, i + j - n);
}

CornerSumMatrix AsmSystem::bottom() const { return bottom_; }

CornerSumMatrix AsmSystem::top() const {
    CornerSumMatrix t(n_);
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= n_; ++j) t(i, j) = std::min(i, j);
    return t;
}

bool AsmSystem::leq(const State& a, const State& b) const noexcept {
    for (std::size_t k = 0; k < a.c.size(); ++k)
        if (a.c[k] > b.c[k]) return false;
    return true;
}

std::size_t AsmSystem::rank_of(const State& s) const noexcept {
    std::size_t r = 0;
    for (std::size_t k = 0; k < s.c.size(); ++k) r += static_cast<std::size_t>(s.c[k] - bottom_.c[k]);
    return r;
}

}  // namespace cftp
