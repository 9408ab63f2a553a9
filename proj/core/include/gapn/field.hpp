#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "gapn/errors.hpp"

namespace gapn {

// Element of F_{p^n}, encoded as the integer index sum(d_i * p^i) of its
// digit vector (d_0..d_{n-1}) in the polynomial basis 1, a, ..., a^{n-1}
// for the modulus root a.
using Elem = std::uint32_t;

// Hard cap on p^n for exhaustive analysis.
inline constexpr std::uint64_t kMaxFieldSize = 1u << 24;
// Log/antilog multiplication tables are built up to this size; beyond it
// multiplication reduces modulo the defining polynomial on the fly.
inline constexpr std::uint64_t kMulTableLimit = 1u << 16;
// Flat size*size addition table, built lazily for hot exhaustive loops.
inline constexpr std::uint64_t kAddTableLimit = 1u << 12;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^n} with an explicit monic irreducible modulus (ascending
// coefficients c_0..c_n, c_n = 1). Immutable after construction and safe
// to share across threads.
class Field {
public:
    Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t size() const { return size_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    // Throws DivisionByZeroError on inv(0).
    Elem inv(Elem x) const;
    // inv with the 0 -> 0 convention used by the inverse permutation.
    Elem inv0(Elem x) const { return x == 0 ? 0 : inv(x); }
    // x^e with e reduced mod p^n - 1 for nonzero x; pow(0, 0) = 1.
    Elem pow(Elem x, std::uint64_t e) const;

    // Scalar c in [0, p) acting on x (x added to itself c times).
    Elem scalar_mul(std::uint32_t c, Elem x) const;
    // Embedding of F_p into F: c -> element with digit vector (c, 0, ...).
    Elem from_base(std::uint32_t c) const { return c % p_; }

    // Absolute trace Tr(x) = sum of x^{p^i}, as an element of F_p.
    std::uint32_t trace(Elem x) const;
    // x^{p^i}.
    Elem frobenius(Elem x, std::uint32_t i) const;

    // Generator of the multiplicative group, smallest by element index.
    Elem primitive_element() const { return primitive_; }

    std::uint32_t digit(Elem x, std::uint32_t i) const
    {
        return (x / p_pows_[i]) % p_;
    }
    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(std::span<const std::uint32_t> d) const;

    // Root of the modulus polynomial (the basis element a); for n = 1 this
    // is the root -c_0 in F_p.
    Elem modulus_root() const { return root_; }

    bool has_mul_tables() const { return !log_.empty(); }

    // Flat row-major table t[x*size+y] = x + y, or nullptr when the field
    // is too large for it. Built on first request.
    const Elem* add_table() const;

    // Multiplicative order of a nonzero element.
    std::uint64_t element_order(Elem x) const;

    // "p=3,n=5,mod=1,2,0,0,0,1"
    std::string to_string() const;
    static FieldPtr parse(const std::string& text);

    // Monic irreducible of degree n whose ascending coefficient vector
    // (c_0..c_{n-1}) is lexicographically smallest.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n);

private:
    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> p_pows_;       // p^0..p^n
    std::vector<Elem> reduction_;             // a^{n+k} as digit-vector indexes, k in [0, n-1)
    std::vector<Elem> exp_;                   // gamma^k, k in [0, size-1)
    std::vector<std::uint32_t> log_;          // log base gamma, defined on nonzero
    Elem primitive_ = 0;
    Elem root_ = 0;
    std::vector<std::uint32_t> basis_traces_; // Tr(a^i) in F_p
    std::vector<std::uint64_t> order_factors_; // distinct primes of size-1

    mutable std::once_flag add_once_;
    mutable std::vector<Elem> add_tab_;

    Elem mul_slow(Elem x, Elem y) const;
    Elem pow_slow(Elem x, std::uint64_t e) const;
};

FieldPtr make_field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);
FieldPtr make_field(std::uint32_t p, std::uint32_t n); // default modulus

// Human-readable polynomial rendering of an element, e.g. "2a^4+a+1".
std::string element_to_string(const Field& f, Elem x);

} // namespace gapn
