#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gapn/fp_matrix.hpp"
#include "gapn/function.hpp"

namespace gapn {

// The two bilinearizing (mu, nu) families: mu_a(x) = a^d x with
// nu(a) = a^{-1} for monomial functions x^d, and mu_a(x) = a^{2-p} x with
// nu(a) = a for the generalized Gold functions.
struct MuNuConfig {
    enum class Kind { MonomialInverse, GoldIdentity };
    Kind kind;
    std::uint32_t exponent = 0; // the monomial degree d, MonomialInverse only

    static MuNuConfig monomial_inverse(std::uint32_t d)
    {
        return MuNuConfig{Kind::MonomialInverse, d};
    }
    static MuNuConfig gold_identity() { return MuNuConfig{Kind::GoldIdentity, 0}; }
};

Elem nu_of(const Field& f, const MuNuConfig& cfg, Elem a);

// B(x, a) = (mu_a o B_f)(x, nu(a)), 0 when a = 0.
Elem b_tilde_mu_nu(const FunctionTable& f, const MuNuConfig& cfg, Elem x, Elem a);

// Exhaustive bilinearity: additive in each slot over all of F x F
// (additivity over the group already gives F_p-homogeneity in
// characteristic p).
bool check_bilinear(const FunctionTable& f, const MuNuConfig& cfg, unsigned threads = 1);

// Whether distinct a, b, c lie on one F_p-line: a - b = i (a - c) for some
// nonzero scalar i.
bool collinear(const Field& f, Elem a, Elem b, Elem c);

// Greedy cap set (no three elements on a line) over a seeded shuffle of F;
// the result is verified by an exhaustive triple check before returning.
std::vector<Elem> greedy_cap_set(const Field& f, std::uint64_t seed);

// The n-dimensional subspace X(a) = {(x, B(x, a))} of F_p^{2n}, stored as
// a row basis over the field basis together with its canonical form.
struct SubspaceBasis {
    Elem a = 0;
    FpMatrix rows;      // n x 2n: (digits of a^k | digits of B(a^k, a))
    FpMatrix canonical; // reduced row echelon basis
    std::uint32_t rank = 0;

    SubspaceBasis() : rows(2, 0, 0), canonical(2, 0, 0) {}
};

// One subspace per a in M. Verifies every hypothesis first (GAPN, degree
// p, bilinearity, cap-set M, n >= 2) and throws HypothesisFailedError
// naming the first failure.
std::vector<SubspaceBasis> build_arc(const FunctionTable& f, const MuNuConfig& cfg,
                                     const std::vector<Elem>& m_set,
                                     unsigned threads = 1);

struct ArcReport {
    std::vector<Elem> m_set;
    bool pairwise_ok = false; // dim(X and Y) = 1 for every pair, all distinct
    bool triples_ok = false;  // triple intersections are zero
    std::optional<std::string> first_failure;
    // |S| that a dual hyperoval would have, for reference alongside |m_set|.
    std::uint64_t hyperoval_cardinality = 0;
};

ArcReport verify_dual_arc(const Field& f, const std::vector<SubspaceBasis>& arc);

} // namespace gapn
