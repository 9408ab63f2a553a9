#include "gapn/diff_analysis.hpp"

#include <algorithm>
#include <atomic>

#include "gapn/numeric.hpp"
#include "gapn/parallel.hpp"

namespace gapn {

namespace {

// Derivative table for one a, written into out (size p^n).
void d_tilde_into(const FunctionTable& f, Elem a, std::vector<Elem>& out)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    out.assign(q, 0);
    const Elem* add = fd.add_table();
    Elem ia = 0;
    for (std::uint32_t i = 0; i < fd.p(); ++i) {
        if (add != nullptr) {
            const Elem* shift = add + static_cast<std::size_t>(ia) * q;
            for (Elem x = 0; x < q; ++x)
                out[x] = add[static_cast<std::size_t>(out[x]) * q + f(shift[x])];
        } else {
            for (Elem x = 0; x < q; ++x)
                out[x] = fd.add(out[x], f(fd.add(x, ia)));
        }
        ia = fd.add(ia, a);
    }
}

std::uint32_t degree_gate(const FunctionTable& f)
{
    std::uint32_t deg = algebraic_degree(f);
    if (deg > f.field->p())
        throw DegreeTooHighError("criterion requires algebraic degree <= p, got "
                                 + std::to_string(deg));
    return deg;
}

} // namespace

FunctionTable d_tilde(const FunctionTable& f, Elem a)
{
    std::vector<Elem> out;
    d_tilde_into(f, a, out);
    return FunctionTable(f.field, std::move(out));
}

std::uint32_t n_tilde(const FunctionTable& f, Elem a, Elem b)
{
    std::vector<Elem> der;
    d_tilde_into(f, a, der);
    return static_cast<std::uint32_t>(std::count(der.begin(), der.end(), b));
}

SpectrumReport spectrum(const FunctionTable& f, unsigned threads)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    SpectrumReport rep;
    rep.field = f.field;
    rep.rows.resize(q - 1);

    parallel_for(1, q, threads, [&](Elem a) {
        std::vector<Elem> der;
        d_tilde_into(f, a, der);
        std::vector<std::uint32_t> hist(q, 0);
        for (Elem x = 0; x < q; ++x)
            ++hist[der[x]];
        auto& row = rep.rows[a - 1];
        row.a = a;
        for (Elem b = 0; b < q; ++b) {
            if (hist[b] != 0)
                row.counts.emplace_back(b, hist[b]);
        }
    });

    for (const auto& row : rep.rows) {
        for (const auto& [b, c] : row.counts) {
            ++rep.multiset[c];
            rep.max_count = std::max(rep.max_count, c);
        }
    }
    rep.is_gapn = rep.max_count <= fd.p();
    return rep;
}

bool is_gapn(const FunctionTable& f, unsigned threads)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    const std::uint32_t p = fd.p();
    std::atomic<bool> ok{true};
    parallel_for(1, q, threads, [&](Elem a) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        std::vector<Elem> der;
        d_tilde_into(f, a, der);
        std::vector<std::uint32_t> hist(q, 0);
        for (Elem x = 0; x < q; ++x) {
            if (++hist[der[x]] > p) {
                ok.store(false, std::memory_order_relaxed);
                return;
            }
        }
    });
    return ok.load();
}

Elem b_tilde(const FunctionTable& f, Elem x, Elem a)
{
    const Field& fd = *f.field;
    Elem at_x = 0;
    Elem at_0 = 0;
    Elem ia = 0;
    for (std::uint32_t i = 0; i < fd.p(); ++i) {
        at_x = fd.add(at_x, f(fd.add(x, ia)));
        at_0 = fd.add(at_0, f(ia));
        ia = fd.add(ia, a);
    }
    return fd.sub(at_x, at_0);
}

bool gapn_kernel_test(const FunctionTable& f)
{
    degree_gate(f);
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    const std::uint32_t p = fd.p();
    std::vector<Elem> der;
    std::vector<bool> on_line(q, false);
    for (Elem a = 1; a < q; ++a) {
        d_tilde_into(f, a, der);
        const Elem base = der[0];
        // mark the line F_p a
        Elem ia = 0;
        for (std::uint32_t i = 0; i < p; ++i) {
            on_line[ia] = true;
            ia = fd.add(ia, a);
        }
        std::uint32_t zeros = 0;
        bool good = true;
        for (Elem x = 0; x < q; ++x) {
            if (der[x] == base) {
                ++zeros;
                if (!on_line[x]) {
                    good = false;
                    break;
                }
            }
        }
        ia = 0;
        for (std::uint32_t i = 0; i < p; ++i) {
            on_line[ia] = false;
            ia = fd.add(ia, a);
        }
        if (!good || zeros != p)
            return false;
    }
    return true;
}

bool translation_criterion_test(const FunctionTable& f)
{
    degree_gate(f);
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    std::vector<Elem> der;
    bool verdict = true;
    for (Elem a = 1; a < q; ++a) {
        d_tilde_into(f, a, der);
        std::vector<std::uint32_t> hist(q, 0);
        for (Elem x = 0; x < q; ++x)
            ++hist[der[x]];
        const std::uint32_t base_count = hist[der[0]];
        for (Elem b = 0; b < q; ++b) {
            if (hist[b] != 0 && hist[b] != base_count)
                throw Error("translation structure violated despite degree <= p");
        }
        if (base_count > fd.p())
            verdict = false;
    }
    return verdict;
}

bool binomial_fold_test(const Field& field, std::uint32_t i)
{
    const std::uint32_t p = field.p();
    const std::uint32_t n = field.n();
    if (p == 2)
        throw BadParametersError("fold test needs odd p");
    if (n % 2 == 0)
        throw BadParametersError("fold test needs odd n");
    if (i == 0 || i >= n || gcd_u64(i, n) != 1)
        throw BadParametersError("fold test needs 0 < i < n with gcd(i, n) = 1");

    const std::uint32_t q = field.size();
    const std::uint64_t e1 = pow_u64(p, i) - 1;
    const std::uint64_t e2 = pow_u64(p, n - i) - 1;
    std::vector<std::uint32_t> hist(q, 0);
    for (Elem a = 1; a < q; ++a) {
        Elem v = field.sub(field.pow(a, e1), field.pow(a, e2));
        ++hist[v];
    }
    for (Elem v = 0; v < q; ++v) {
        if (hist[v] != 0 && hist[v] != p - 1)
            return false;
    }
    return true;
}

} // namespace gapn
