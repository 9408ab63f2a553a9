#pragma once

#include <vector>

#include "gapn/function.hpp"
#include "gapn/rng.hpp"

namespace gapn::test {

// F_3^5 presented with x^5 + 2x + 1, the field every worked example uses.
inline FieldPtr gf35()
{
    static FieldPtr f = make_field(3, 5, {1, 2, 0, 0, 0, 1});
    return f;
}

inline FunctionTable random_table(const FieldPtr& field, Rng& rng)
{
    std::vector<Elem> values(field->size());
    for (auto& v : values)
        v = rng.below(field->size());
    return FunctionTable(field, std::move(values));
}

// Random polynomial drawn from an exponent pool; retried until nonzero.
inline Polynomial random_poly(const FieldPtr& field, Rng& rng,
                              const std::vector<std::uint32_t>& pool)
{
    while (true) {
        Polynomial poly(field);
        for (std::uint32_t d : pool) {
            if (rng.below(2) == 0)
                poly.set(d, rng.below(field->size()));
        }
        if (!poly.is_zero())
            return poly;
    }
}

// Exponents d with p-weight at most w; odd d only when odd_only is set
// (for odd p, x^d is an odd function exactly when d is odd).
inline std::vector<std::uint32_t> exponents_of_weight(const FieldPtr& field,
                                                      std::uint32_t max_weight,
                                                      bool odd_only)
{
    std::vector<std::uint32_t> pool;
    for (std::uint32_t d = 1; d < field->size(); ++d) {
        if (p_weight(d, field->p()) > max_weight)
            continue;
        if (odd_only && d % 2 == 0)
            continue;
        pool.push_back(d);
    }
    return pool;
}

} // namespace gapn::test
