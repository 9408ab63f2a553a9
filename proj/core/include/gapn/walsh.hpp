#pragma once

#include <cstdint>
#include <vector>

#include "gapn/cyclotomic.hpp"
#include "gapn/function.hpp"
#include "gapn/numeric.hpp"

namespace gapn {

// Full coefficient storage in WalshReport is kept only while
// p^n (p^n - 1) stays below this bound; the value set and the verdicts are
// always available.
inline constexpr std::uint64_t kWalshCoefficientLimit = 1u << 20;

// Component function f_b(x) = Tr(b f(x)), values in [0, p).
std::vector<std::uint32_t> component(const FunctionTable& f, Elem b);

// F(g) = sum_x zeta^{g(x)}, computed from the p-bin histogram of g.
CyclotomicInt fourier(std::span<const std::uint32_t> g, std::uint32_t p);

// W_f(a, b) = F(phi_a + f_b) by direct histogramming; the slow reference
// route, exact for any (a, b).
CyclotomicInt walsh_coefficient(const FunctionTable& f, Elem a, Elem b);

struct FourierSum {
    Int128 value = 0;
    Int128 threshold = 0; // p^{2n+1} (p^n - 1)
    bool equality = false;
};

struct WalshReport {
    FieldPtr field;
    std::vector<CyclotomicInt> value_set; // sorted, deduplicated, b != 0 only
    bool is_gab = false;
    bool has_coefficients = false;
    std::vector<CyclotomicInt> coefficients; // flat (b-1) * p^n + a
    FourierSum fourier;

    const CyclotomicInt& coefficient(Elem a, Elem b) const;
};

// All W_f(a, b) with b != 0, via an exact integer radix-p Walsh transform
// per component.
WalshReport walsh_report(const FunctionTable& f, unsigned threads = 1);

// GAB predicate: every W_f(a, b), b != 0, is zero or a conjugation-fixed
// value with W^2 = p^{n+1}; exactly membership in {0, +-p^{(n+1)/2}} among
// real algebraic values.
bool is_gab(const FunctionTable& f, unsigned threads = 1);

// Exact sum of |F((D_a f)_b)|^2 over a in F, b in F^x, as a rational
// integer, together with the GAPN equality threshold.
FourierSum gapn_fourier_sum(const FunctionTable& f, unsigned threads = 1);

// Number of solutions of x_1 + ... + x_m = a, f(x_1) + ... + f(x_m) = b.
std::uint64_t s_count(const FunctionTable& f, std::uint32_t m, Elem a, Elem b);

// GAB via the S^(3) solution-count pattern {p^n - p, (p+1) p^n - p},
// checked cell by cell over all (a, b).
bool gab_via_s3(const FunctionTable& f, unsigned threads = 1);

} // namespace gapn
