#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gapn/field.hpp"

namespace gapn {

// Guard for the 2^m subset enumeration in m_fold_difference.
inline constexpr std::uint32_t kMaxFoldOrder = 12;

// f: F -> F as a full lookup table, values[i] = f(element with index i).
struct FunctionTable {
    FieldPtr field;
    std::vector<Elem> values;

    FunctionTable() = default;
    FunctionTable(FieldPtr f, std::vector<Elem> v);

    Elem operator()(Elem x) const { return values[x]; }
    std::uint32_t size() const { return field->size(); }

    bool operator==(const FunctionTable& o) const { return values == o.values; }
};

// Sparse univariate polynomial over F with exponents below p^n; the unique
// reduced representation of a function F -> F.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field);
    Polynomial(FieldPtr field, std::map<std::uint32_t, Elem> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::map<std::uint32_t, Elem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void set(std::uint32_t d, Elem c);
    Elem coeff(std::uint32_t d) const;

    Elem eval(Elem x) const;

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    FieldPtr field_;
    std::map<std::uint32_t, Elem> coeffs_;
};

FunctionTable tabulate(const Polynomial& poly);

// Unique polynomial of degree < p^n reproducing the table.
Polynomial interpolate(const FunctionTable& table);

// Sum of base-p digits of d.
std::uint32_t p_weight(std::uint64_t d, std::uint32_t p);

// m-fold finite difference: sum over subsets I of [m] of
// (-1)^{m-|I|} f(sum_{i in I} x_i). Empty tuple gives f(0).
Elem m_fold_difference(const FunctionTable& f, std::span<const Elem> xs);

// Largest m with nonzero m-fold difference. Computed as the maximal
// p-weight over exponents of the reduced polynomial, then confirmed by
// an explicit nonzero witness of the m-fold form.
std::uint32_t algebraic_degree(const Polynomial& poly);
std::uint32_t algebraic_degree(const FunctionTable& table);

Polynomial make_monomial(FieldPtr field, std::uint32_t d, Elem c = 1);
// x^{p^n - 2}, the inverse permutation with the 0 -> 0 convention.
Polynomial make_inverse(FieldPtr field);
// x^{p^i + p - 1}, i > 0, gcd(i, n) = 1.
Polynomial make_gold(FieldPtr field, std::uint32_t i);

struct GeneralGold {
    Polynomial poly;
    // Whether {x : x + x^{p^{i_2}} + ... + x^{p^{i_p}} = 0} = F_p, checked
    // by exhaustive solve; a sufficient hypothesis for GAPN-ness.
    bool kernel_is_prime_field;
};
// x^{1 + p^{i_2} + ... + p^{i_p}} from p-1 exponent indices, not all zero.
GeneralGold make_general_gold(FieldPtr field, std::span<const std::uint32_t> exps);

// x^{p^i + p - 1} - x^{p^{n-i} + p - 1}, p odd, n odd, gcd(i, n) = 1.
Polynomial make_binomial(FieldPtr field, std::uint32_t i);

bool is_permutation(const FunctionTable& f);
// Throws NotPermutationError when f is not bijective.
FunctionTable invert_permutation(const FunctionTable& f);

} // namespace gapn
