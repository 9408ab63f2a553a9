#pragma once

#include <cstdint>
#include <map>

#include "gapn/diff_analysis.hpp"
#include "gapn/fp_matrix.hpp"
#include "gapn/function.hpp"
#include "gapn/rng.hpp"

namespace gapn {

// Affine map on F viewed as F_p^n: x -> L(digits x) + c, with L an n x n
// matrix over F_p. permutation holds exactly when L is invertible.
struct AffineMap {
    FieldPtr field;
    FpMatrix linear;
    Elem constant = 0;
    bool permutation = false;

    AffineMap(FieldPtr f, FpMatrix l, Elem c);

    Elem operator()(Elem x) const;

    static AffineMap identity(FieldPtr f);
};

// g = A1 o f o A2 + A0 with A1, A2 affine permutations.
struct EaTransform {
    AffineMap a1;
    AffineMap a2;
    AffineMap a0;

    EaTransform(AffineMap a1_, AffineMap a2_, AffineMap a0_);
};

FunctionTable apply(const EaTransform& t, const FunctionTable& f);

// Uniform invertible linear part by rejection on rank, uniform constant.
AffineMap random_affine_permutation(FieldPtr field, Rng& rng);
AffineMap random_affine_permutation(FieldPtr field, std::uint64_t seed);
// Arbitrary affine map (no invertibility requirement), for the A0 slot.
AffineMap random_affine_map(FieldPtr field, Rng& rng);
EaTransform random_ea_transform(FieldPtr field, Rng& rng);

struct InvarianceReport {
    bool spectrum_equal = false;
    std::map<std::uint32_t, std::uint64_t> multiset_f;
    std::map<std::uint32_t, std::uint64_t> multiset_g;
    bool degree_checked = false; // only meaningful when degree(f) >= 2
    bool degree_equal = false;
    std::uint32_t degree_f = 0;
    std::uint32_t degree_g = 0;
    bool gapn_f = false;
    bool gapn_g = false;

    bool all_ok() const
    {
        return spectrum_equal && (!degree_checked || degree_equal) && gapn_f == gapn_g;
    }
};

// Checks the EA invariants: equal spectrum multisets, equal GAPN verdicts,
// and equal algebraic degree when degree(f) >= 2.
InvarianceReport check_invariance(const FunctionTable& f, const EaTransform& t,
                                  unsigned threads = 1);

} // namespace gapn
