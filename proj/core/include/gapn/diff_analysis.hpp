#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gapn/function.hpp"

namespace gapn {

// Exhaustive differential data of f: for every a != 0 the histogram of the
// generalized derivative, the multiset of all nonzero counts, and the GAPN
// verdict (every count at most p).
struct SpectrumReport {
    FieldPtr field;
    // One row per a in F^x, sparse: only nonzero counts are kept.
    struct Row {
        Elem a;
        std::vector<std::pair<Elem, std::uint32_t>> counts; // (b, count), b ascending
    };
    std::vector<Row> rows;
    std::map<std::uint32_t, std::uint64_t> multiset; // count -> frequency over all rows
    std::uint32_t max_count = 0;
    bool is_gapn = false;
};

// x -> sum over i in F_p of f(x + i a).
FunctionTable d_tilde(const FunctionTable& f, Elem a);

// Number of x with d_tilde(f, a)(x) = b.
std::uint32_t n_tilde(const FunctionTable& f, Elem a, Elem b);

SpectrumReport spectrum(const FunctionTable& f, unsigned threads = 1);

// GAPN verdict with per-row early exit; no report is materialized.
bool is_gapn(const FunctionTable& f, unsigned threads = 1);

// B(x, a) = D_a f(x) - D_a f(0); agrees with the p-fold difference
// [f]^p(x, a, ..., a).
Elem b_tilde(const FunctionTable& f, Elem x, Elem a);

// GAPN criterion for degree <= p: the zero set of x -> B(x, a) is exactly
// the line F_p a, for every a != 0. Throws DegreeTooHighError otherwise.
bool gapn_kernel_test(const FunctionTable& f);

// GAPN criterion for degree <= p via translation structure: every nonzero
// row count equals the count at b = D_a f(0), and the verdict is that this
// count never exceeds p. Throws DegreeTooHighError when degree > p.
bool translation_criterion_test(const FunctionTable& f);

// Checks that a -> a^{p^i - 1} - a^{p^{n-i} - 1} is (p-1)-to-1 on F^x.
bool binomial_fold_test(const Field& field, std::uint32_t i);

} // namespace gapn
