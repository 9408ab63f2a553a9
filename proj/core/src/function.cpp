#include "gapn/function.hpp"

#include <algorithm>
#include <bit>
#include <iostream>

#include "gapn/numeric.hpp"
#include "gapn/rng.hpp"

namespace gapn {

FunctionTable::FunctionTable(FieldPtr f, std::vector<Elem> v)
    : field(std::move(f)), values(std::move(v))
{
    if (values.size() != field->size())
        throw BadParametersError("lookup table must have exactly p^n entries");
    for (Elem e : values) {
        if (e >= field->size())
            throw BadParametersError("lookup table value out of range");
    }
}

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::map<std::uint32_t, Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first >= field_->size())
            throw BadParametersError("exponent out of range");
        if (it->second >= field_->size())
            throw BadParametersError("coefficient out of range");
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

void Polynomial::set(std::uint32_t d, Elem c)
{
    if (d >= field_->size())
        throw BadParametersError("exponent out of range");
    if (c == 0)
        coeffs_.erase(d);
    else
        coeffs_[d] = c;
}

Elem Polynomial::coeff(std::uint32_t d) const
{
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? 0 : it->second;
}

Elem Polynomial::eval(Elem x) const
{
    const Field& f = *field_;
    Elem acc = 0;
    for (const auto& [d, c] : coeffs_)
        acc = f.add(acc, f.mul(c, f.pow(x, d)));
    return acc;
}

FunctionTable tabulate(const Polynomial& poly)
{
    const Field& f = *poly.field();
    std::vector<Elem> values(f.size());
    for (Elem x = 0; x < f.size(); ++x)
        values[x] = poly.eval(x);
    return FunctionTable(poly.field(), std::move(values));
}

Polynomial interpolate(const FunctionTable& table)
{
    const Field& f = *table.field;
    const std::uint32_t q = f.size();
    // c_0 = f(0), c_{q-1} = -sum_x f(x), and for 0 < d < q-1
    // c_d = -sum_{x != 0} f(x) x^{-d}  (orthogonality of power characters).
    std::map<std::uint32_t, Elem> coeffs;
    if (table(0) != 0)
        coeffs[0] = table(0);

    if (q > 2) {
        std::vector<Elem> sums(q, 0);
        for (Elem x = 1; x < q; ++x) {
            Elem fx = table(x);
            if (fx == 0)
                continue;
            Elem u = f.inv(x);
            Elem acc = 1;
            for (std::uint32_t d = 1; d <= q - 2; ++d) {
                acc = f.mul(acc, u);
                sums[d] = f.add(sums[d], f.mul(fx, acc));
            }
        }
        for (std::uint32_t d = 1; d <= q - 2; ++d) {
            Elem c = f.neg(sums[d]);
            if (c != 0)
                coeffs[d] = c;
        }
    }

    Elem total = 0;
    for (Elem x = 0; x < q; ++x)
        total = f.add(total, table(x));
    Elem top = f.neg(total);
    if (top != 0)
        coeffs[q - 1] = top;

    return Polynomial(table.field, std::move(coeffs));
}

std::uint32_t p_weight(std::uint64_t d, std::uint32_t p)
{
    std::uint32_t w = 0;
    while (d > 0) {
        w += static_cast<std::uint32_t>(d % p);
        d /= p;
    }
    return w;
}

namespace {

Elem m_fold_unchecked(const FunctionTable& f, std::span<const Elem> xs)
{
    const Field& fd = *f.field;
    std::size_t m = xs.size();
    if (m == 0)
        return f(0);
    Elem acc = 0;
    const std::uint64_t top = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        Elem s = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::uint64_t{1} << i))
                s = fd.add(s, xs[i]);
        }
        Elem v = f(s);
        if ((m - std::popcount(mask)) % 2 == 1)
            acc = fd.sub(acc, v);
        else
            acc = fd.add(acc, v);
    }
    return acc;
}

// True if the symmetric form [f]^m has a nonzero value on some tuple of
// basis elements with non-decreasing indices. At m = max p-weight the form
// is F_p-multilinear and symmetric, so this scan is a complete zero test.
bool basis_scan_nonzero(const FunctionTable& f, std::uint32_t m)
{
    const Field& fd = *f.field;
    const std::uint32_t n = fd.n();
    std::vector<Elem> tuple(m);
    std::vector<std::uint32_t> idx(m, 0);
    while (true) {
        for (std::uint32_t i = 0; i < m; ++i)
            tuple[i] = fd.pow(fd.modulus_root(), idx[i]);
        if (m_fold_unchecked(f, tuple) != 0)
            return true;
        std::uint32_t k = m;
        while (k > 0 && idx[k - 1] == n - 1)
            --k;
        if (k == 0)
            return false;
        std::uint32_t v = idx[k - 1] + 1;
        for (std::uint32_t i = k - 1; i < m; ++i)
            idx[i] = v;
    }
}

double basis_scan_cost(std::uint32_t n, std::uint32_t m)
{
    // C(n+m-1, m) tuples, 2^m evaluations each
    double c = 1.0;
    for (std::uint32_t i = 1; i <= m; ++i)
        c = c * (n + m - i) / i;
    return c * static_cast<double>(std::uint64_t{1} << std::min(m, 62u));
}

bool fold_nonzero_witness(const FunctionTable& f, std::uint32_t m)
{
    const Field& fd = *f.field;
    Rng rng(0x5eedULL * fd.size() + m);
    std::vector<Elem> xs(m);
    for (int trial = 0; trial < 64; ++trial) {
        for (auto& x : xs)
            x = rng.below(fd.size());
        if (m_fold_unchecked(f, xs) != 0)
            return true;
    }
    if (basis_scan_cost(fd.n(), m) <= double(1u << 26))
        return basis_scan_nonzero(f, m);
    return false;
}

} // namespace

Elem m_fold_difference(const FunctionTable& f, std::span<const Elem> xs)
{
    if (xs.size() > kMaxFoldOrder)
        throw GuardExceededError("m-fold difference limited to m <= 12");
    return m_fold_unchecked(f, xs);
}

namespace {

std::uint32_t degree_from_weights(const Polynomial& poly)
{
    std::uint32_t m = 0;
    for (const auto& [d, c] : poly.coeffs()) {
        if (d > 0)
            m = std::max(m, p_weight(d, poly.field()->p()));
    }
    return m;
}

std::uint32_t degree_checked(const Polynomial& poly, const FunctionTable& table)
{
    if (poly.is_zero())
        throw ZeroFunctionError("algebraic degree of the zero function is undefined");
    std::uint32_t m = degree_from_weights(poly);
    if (m == 0)
        return 0; // nonzero constant
    const Field& fd = *table.field;
    if (fold_nonzero_witness(table, m))
        return m;
    // The p-weight bound failed to witness; search downward exhaustively.
    std::cerr << "gapn: degree witness missing at m=" << m
              << ", falling back to exhaustive descent\n";
    for (std::uint32_t mm = m - 1; mm >= 1; --mm) {
        double tuples = 1.0;
        for (std::uint32_t i = 0; i < mm; ++i)
            tuples *= fd.size();
        if (tuples * static_cast<double>(std::uint64_t{1} << mm) > double(1u << 28))
            throw GuardExceededError("exhaustive degree descent too large");
        std::vector<Elem> xs(mm, 0);
        while (true) {
            if (m_fold_unchecked(table, xs) != 0)
                return mm;
            std::uint32_t k = 0;
            while (k < mm && ++xs[k] == fd.size()) {
                xs[k] = 0;
                ++k;
            }
            if (k == mm)
                break;
        }
    }
    return 0;
}

} // namespace

std::uint32_t algebraic_degree(const Polynomial& poly)
{
    return degree_checked(poly, tabulate(poly));
}

std::uint32_t algebraic_degree(const FunctionTable& table)
{
    return degree_checked(interpolate(table), table);
}

Polynomial make_monomial(FieldPtr field, std::uint32_t d, Elem c)
{
    Polynomial poly(field);
    poly.set(d, c);
    return poly;
}

Polynomial make_inverse(FieldPtr field)
{
    if (field->size() < 3)
        throw BadParametersError("inverse permutation needs p^n >= 3");
    const std::uint32_t d = field->size() - 2;
    return make_monomial(std::move(field), d);
}

Polynomial make_gold(FieldPtr field, std::uint32_t i)
{
    const std::uint32_t n = field->n();
    const std::uint32_t p = field->p();
    if (i == 0)
        throw BadParametersError("gold exponent index must be positive");
    if (gcd_u64(i, n) != 1)
        throw BadParametersError("gold construction needs gcd(i, n) = 1");
    std::uint64_t e = pow_u64(p, i % n) + p - 1;
    if (e >= field->size())
        e = (e - 1) % (field->size() - 1) + 1;
    return make_monomial(std::move(field), static_cast<std::uint32_t>(e));
}

GeneralGold make_general_gold(FieldPtr field, std::span<const std::uint32_t> exps)
{
    const Field& f = *field;
    const std::uint32_t p = f.p();
    if (exps.size() != p - 1)
        throw BadParametersError("expected p-1 Frobenius indices i_2..i_p");
    bool all_zero = true;
    std::uint64_t d = 1;
    for (std::uint32_t i : exps) {
        std::uint32_t r = i % f.n();
        if (r != 0)
            all_zero = false;
        d += pow_u64(p, r);
    }
    if (all_zero)
        throw BadParametersError("Frobenius indices must not all vanish");

    // Hypothesis of the GAPN criterion: the kernel of
    // x + x^{p^{i_2}} + ... + x^{p^{i_p}} is exactly F_p.
    bool kernel_ok = true;
    std::uint32_t zeros = 0;
    for (Elem x = 0; x < f.size(); ++x) {
        Elem s = x;
        for (std::uint32_t i : exps)
            s = f.add(s, f.frobenius(x, i));
        if (s == 0) {
            ++zeros;
            if (x >= p)
                kernel_ok = false;
        }
    }
    kernel_ok = kernel_ok && zeros == p;

    return GeneralGold{make_monomial(std::move(field), static_cast<std::uint32_t>(d)),
                       kernel_ok};
}

Polynomial make_binomial(FieldPtr field, std::uint32_t i)
{
    const std::uint32_t p = field->p();
    const std::uint32_t n = field->n();
    if (p == 2)
        throw BadParametersError("binomial construction needs odd p");
    if (n % 2 == 0)
        throw BadParametersError("binomial construction needs odd n");
    if (i == 0 || i >= n)
        throw BadParametersError("binomial construction needs 0 < i < n");
    if (gcd_u64(i, n) != 1)
        throw BadParametersError("binomial construction needs gcd(i, n) = 1");
    std::uint32_t e1 = static_cast<std::uint32_t>(pow_u64(p, i)) + p - 1;
    std::uint32_t e2 = static_cast<std::uint32_t>(pow_u64(p, n - i)) + p - 1;
    Polynomial poly(field);
    poly.set(e1, 1);
    poly.set(e2, p - 1);
    return poly;
}

bool is_permutation(const FunctionTable& f)
{
    std::vector<bool> seen(f.size(), false);
    for (Elem v : f.values) {
        if (seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

FunctionTable invert_permutation(const FunctionTable& f)
{
    if (!is_permutation(f))
        throw NotPermutationError("function is not a bijection");
    std::vector<Elem> inv(f.size());
    for (Elem x = 0; x < f.size(); ++x)
        inv[f(x)] = x;
    return FunctionTable(f.field, std::move(inv));
}

} // namespace gapn
