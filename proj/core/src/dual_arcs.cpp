#include "gapn/dual_arcs.hpp"

#include <atomic>

#include "gapn/diff_analysis.hpp"
#include "gapn/numeric.hpp"
#include "gapn/parallel.hpp"
#include "gapn/rng.hpp"

namespace gapn {

namespace {

// Scalar multiplier realizing mu_a.
Elem mu_scalar(const Field& f, const MuNuConfig& cfg, Elem a)
{
    switch (cfg.kind) {
    case MuNuConfig::Kind::MonomialInverse:
        return f.pow(a, cfg.exponent);
    case MuNuConfig::Kind::GoldIdentity: {
        // a^{2-p} with the exponent taken mod p^n - 1
        std::uint64_t e = (f.size() - 1 + 2 - f.p()) % (f.size() - 1);
        return f.pow(a, e);
    }
    }
    throw BadParametersError("unknown mu/nu kind");
}

// One column x -> B(x, a) of the modified form, exhaustively.
void form_column(const FunctionTable& f, const MuNuConfig& cfg, Elem a,
                 std::vector<Elem>& col)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    col.assign(q, 0);
    if (a == 0)
        return;
    Elem na = nu_of(fd, cfg, a);
    Elem scale = mu_scalar(fd, cfg, a);
    FunctionTable der = d_tilde(f, na);
    const Elem base = der(0);
    for (Elem x = 0; x < q; ++x)
        col[x] = fd.mul(scale, fd.sub(der(x), base));
}

// Whether col equals its own F_p-linear extension from the basis values,
// i.e. whether x -> col[x] is additive. Additivity over (F, +) already
// forces F_p-homogeneity in characteristic p.
bool column_is_linear(const Field& fd, const std::vector<Elem>& col)
{
    const std::uint32_t q = fd.size();
    const std::uint32_t p = fd.p();
    if (col[0] != 0)
        return false;
    std::vector<Elem> lin(q, 0);
    for (Elem x = 1; x < q; ++x) {
        std::uint32_t k = 0;
        Elem rest = x;
        std::uint32_t pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            ++k;
        }
        const std::uint32_t d = rest % p;
        const Elem lower = x - d * pk;
        lin[x] = fd.add(lin[lower], fd.scalar_mul(d, col[pk]));
        if (lin[x] != col[x])
            return false;
    }
    return true;
}

} // namespace

Elem nu_of(const Field& f, const MuNuConfig& cfg, Elem a)
{
    switch (cfg.kind) {
    case MuNuConfig::Kind::MonomialInverse:
        return f.inv0(a);
    case MuNuConfig::Kind::GoldIdentity:
        return a;
    }
    throw BadParametersError("unknown mu/nu kind");
}

Elem b_tilde_mu_nu(const FunctionTable& f, const MuNuConfig& cfg, Elem x, Elem a)
{
    if (a == 0)
        return 0;
    const Field& fd = *f.field;
    return fd.mul(mu_scalar(fd, cfg, a), b_tilde(f, x, nu_of(fd, cfg, a)));
}

bool check_bilinear(const FunctionTable& f, const MuNuConfig& cfg, unsigned threads)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    if (static_cast<std::uint64_t>(q) * q > kMaxFieldSize)
        throw GuardExceededError("p^{2n} beyond the exhaustive guard");

    // Full q x q table of the form, column-major in a.
    std::vector<Elem> table(static_cast<std::size_t>(q) * q);
    std::atomic<bool> ok{true};
    parallel_for(0, q, threads, [&](Elem a) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        std::vector<Elem> col;
        form_column(f, cfg, a, col);
        if (!column_is_linear(fd, col)) {
            ok.store(false, std::memory_order_relaxed);
            return;
        }
        std::copy(col.begin(), col.end(),
                  table.begin() + static_cast<std::size_t>(a) * q);
    });
    if (!ok.load())
        return false;

    // additivity in the a slot, for every fixed x
    std::vector<Elem> row(q);
    for (Elem x = 0; x < q; ++x) {
        for (Elem a = 0; a < q; ++a)
            row[a] = table[static_cast<std::size_t>(a) * q + x];
        if (!column_is_linear(fd, row))
            return false;
    }
    return true;
}

bool collinear(const Field& f, Elem a, Elem b, Elem c)
{
    if (a == b || a == c || b == c)
        throw NotDistinctError("collinearity needs three distinct points");
    const Elem ab = f.sub(a, b);
    const Elem ac = f.sub(a, c);
    for (std::uint32_t i = 1; i < f.p(); ++i) {
        if (ab == f.scalar_mul(i, ac))
            return true;
    }
    return false;
}

std::vector<Elem> greedy_cap_set(const Field& f, std::uint64_t seed)
{
    const std::uint32_t q = f.size();
    std::vector<Elem> order(q);
    for (Elem x = 0; x < q; ++x)
        order[x] = x;
    Rng rng(seed);
    for (std::uint32_t i = q - 1; i > 0; --i) {
        std::uint32_t j = rng.below(i + 1);
        std::swap(order[i], order[j]);
    }
    std::vector<Elem> chosen;
    for (Elem e : order) {
        bool fits = true;
        for (std::size_t u = 0; u < chosen.size() && fits; ++u) {
            for (std::size_t v = u + 1; v < chosen.size(); ++v) {
                if (collinear(f, e, chosen[u], chosen[v])) {
                    fits = false;
                    break;
                }
            }
        }
        if (fits)
            chosen.push_back(e);
    }
    // exhaustive confirmation
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
            for (std::size_t k = j + 1; k < chosen.size(); ++k)
                if (collinear(f, chosen[i], chosen[j], chosen[k]))
                    throw VerificationFailedError("greedy cap set has a collinear triple");
    return chosen;
}

std::vector<SubspaceBasis> build_arc(const FunctionTable& f, const MuNuConfig& cfg,
                                     const std::vector<Elem>& m_set, unsigned threads)
{
    const Field& fd = *f.field;
    const std::uint32_t n = fd.n();
    const std::uint32_t p = fd.p();
    const std::uint32_t q = fd.size();

    if (n < 2)
        throw HypothesisFailedError("dual arc construction needs n >= 2");
    if (!is_gapn(f, threads))
        throw HypothesisFailedError("function is not GAPN");
    if (algebraic_degree(f) != p)
        throw HypothesisFailedError("function does not have algebraic degree p");
    if (!check_bilinear(f, cfg, threads))
        throw HypothesisFailedError("modified form is not bilinear for this mu/nu");

    std::vector<bool> seen(q, false);
    for (Elem a : m_set) {
        if (a >= q)
            throw HypothesisFailedError("m-set element out of range");
        if (seen[a])
            throw HypothesisFailedError("m-set elements must be distinct");
        seen[a] = true;
    }
    for (std::size_t i = 0; i < m_set.size(); ++i)
        for (std::size_t j = i + 1; j < m_set.size(); ++j)
            for (std::size_t k = j + 1; k < m_set.size(); ++k)
                if (collinear(fd, m_set[i], m_set[j], m_set[k]))
                    throw HypothesisFailedError("m-set contains a collinear triple");

    std::vector<SubspaceBasis> arc(m_set.size());
    parallel_for(0, static_cast<std::uint32_t>(m_set.size()), threads, [&](std::uint32_t idx) {
        const Elem a = m_set[idx];
        SubspaceBasis& sub = arc[idx];
        sub.a = a;
        sub.rows = FpMatrix(p, n, 2 * n);
        std::uint32_t pk = 1;
        for (std::uint32_t k = 0; k < n; ++k) {
            sub.rows.at(k, k) = 1; // digits of a^k
            Elem img = b_tilde_mu_nu(f, cfg, pk, a);
            for (std::uint32_t s = 0; s < n; ++s)
                sub.rows.at(k, n + s) = fd.digit(img, s);
            pk *= p;
        }
        sub.canonical = sub.rows.row_basis();
        sub.rank = static_cast<std::uint32_t>(sub.canonical.rows());
    });
    for (const auto& sub : arc) {
        if (sub.rank != n)
            throw VerificationFailedError("graph subspace has rank below n at a="
                                          + std::to_string(sub.a));
    }
    return arc;
}

ArcReport verify_dual_arc(const Field& f, const std::vector<SubspaceBasis>& arc)
{
    const std::uint32_t n = f.n();
    ArcReport rep;
    rep.pairwise_ok = true;
    rep.triples_ok = true;
    rep.hyperoval_cardinality =
        (pow_u64(f.p(), n) - f.p()) / (f.p() - 1) + 1;
    for (const auto& sub : arc)
        rep.m_set.push_back(sub.a);

    auto fail = [&](const std::string& what) {
        if (!rep.first_failure)
            rep.first_failure = what;
    };

    for (std::size_t i = 0; i < arc.size() && rep.pairwise_ok; ++i) {
        for (std::size_t j = i + 1; j < arc.size(); ++j) {
            if (arc[i].canonical == arc[j].canonical) {
                rep.pairwise_ok = false;
                fail("subspaces coincide at pair (" + std::to_string(arc[i].a) + ","
                     + std::to_string(arc[j].a) + ")");
                break;
            }
            FpMatrix stack = FpMatrix::vstack(arc[i].canonical, arc[j].canonical);
            if (stack.rank() != 2 * n - 1) {
                rep.pairwise_ok = false;
                fail("pair (" + std::to_string(arc[i].a) + "," + std::to_string(arc[j].a)
                     + ") does not meet in dimension 1");
                break;
            }
        }
    }

    for (std::size_t i = 0; i < arc.size() && rep.triples_ok; ++i) {
        for (std::size_t j = i + 1; j < arc.size() && rep.triples_ok; ++j) {
            FpMatrix inter =
                FpMatrix::row_space_intersection(arc[i].canonical, arc[j].canonical);
            for (std::size_t k = j + 1; k < arc.size(); ++k) {
                // dim((X^Y) ^ Z) = dim(X^Y) + n - dim((X^Y) + Z)
                FpMatrix stack = FpMatrix::vstack(inter, arc[k].canonical);
                if (stack.rank() != inter.rows() + n) {
                    rep.triples_ok = false;
                    fail("triple (" + std::to_string(arc[i].a) + ","
                         + std::to_string(arc[j].a) + "," + std::to_string(arc[k].a)
                         + ") has a nonzero common point");
                    break;
                }
            }
        }
    }
    return rep;
}

} // namespace gapn
