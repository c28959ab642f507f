#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "cftp/toggle_system.hpp"

namespace cftp {

/// (n+1) x (n+1) corner-sum matrix of an n x n alternating-sign matrix:
/// c(i, j) = sum of A(i', j') over i' <= i, j' <= j (1-based A).
struct CornerSumMatrix {
    int n = 0;
    std::vector<int> c;  // row-major, (n+1)^2 entries

    CornerSumMatrix() = default;
    explicit CornerSumMatrix(int size) : n(size), c(static_cast<std::size_t>(size + 1) * (size + 1), 0) {}

    int& operator()(int i, int j) { return c[static_cast<std::size_t>(i) * (n + 1) + j]; }
    int operator()(int i, int j) const { return c[static_cast<std::size_t>(i) * (n + 1) + j]; }

    friend bool operator==(const CornerSumMatrix&, const CornerSumMatrix&) = default;
    friend auto operator<=>(const CornerSumMatrix& x, const CornerSumMatrix& y) { return x.c <=> y.c; }
};

/// n x n matrix over {-1, 0, 1}.
struct SignMatrix {
    int n = 0;
    std::vector<int> e;  // row-major

    SignMatrix() = default;
    explicit SignMatrix(int size) : n(size), e(static_cast<std::size_t>(size) * size, 0) {}

    int& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    int operator()(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
};

/// Boundary c(0,j) = c(i,0) = 0, c(n,j) = j, c(i,n) = i, and every row and
/// column step in {0, 1}.
bool is_corner_sum_matrix(const CornerSumMatrix& c);

/// Row and column sums 1, and the nonzero entries of every row and column
/// alternate in sign starting with +1.
bool is_alternating_sign_matrix(const SignMatrix& m);

/// M(i,j) = c(i,j) - c(i-1,j) - c(i,j-1) + c(i-1,j-1), 0-based on M.
SignMatrix corner_sum_to_asm(const CornerSumMatrix& c);
CornerSumMatrix asm_to_corner_sum(const SignMatrix& m);

/// Corner-sum matrices under componentwise order.  Sites are the interior
/// cells (1 <= i, j <= n-1), site s = (1 + s / (n-1), 1 + s % (n-1)); a move
/// tries c(i,j) +/- 1 and is blocked unless all four step constraints hold.
/// Cells of equal (i + j) parity never constrain each other.
class AsmSystem {
public:
    using State = CornerSumMatrix;

    explicit AsmSystem(int n);

    int n() const noexcept { return n_; }

    std::size_t site_count() const noexcept {
        return static_cast<std::size_t>(n_ - 1) * static_cast<std::size_t>(n_ - 1);
    }
    State bottom() const;
    State top() const;

    bool update(State& s, Site x, Coin coin) const {
        const int w = n_ - 1;
        const int i = 1 + static_cast<int>(x) / w, j = 1 + static_cast<int>(x) % w;
        const int v = s(i, j);
        if (coin == Coin::Up) {
            if (v + 1 - s(i - 1, j) > 1 || v + 1 - s(i, j - 1) > 1) return false;
            if (s(i + 1, j) < v + 1 || s(i, j + 1) < v + 1) return false;
            s(i, j) = v + 1;
        } else {
            if (v - 1 < s(i - 1, j) || v - 1 < s(i, j - 1)) return false;
            if (s(i + 1, j) - (v - 1) > 1 || s(i, j + 1) - (v - 1) > 1) return false;
            s(i, j) = v - 1;
        }
        return true;
    }

    bool leq(const State& a, const State& b) const noexcept;
    std::size_t rank_of(const State& s) const noexcept;

    std::optional<Parity> parity_of(Site x) const noexcept {
        const int w = n_ - 1;
        const int i = 1 + static_cast<int>(x) / w, j = 1 + static_cast<int>(x) % w;
        return (i + j) % 2 == 0 ? Parity::Even : Parity::Odd;
    }
    bool is_graded() const noexcept { return true; }
    std::string_view name() const noexcept { return "asm"; }

private:
    int n_;
    CornerSumMatrix bottom_;
};

inline AsmSystem asm_system(int n) { return AsmSystem(n); }

}  // namespace cftp
