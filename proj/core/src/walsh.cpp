#include "gapn/walsh.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "gapn/diff_analysis.hpp"
#include "gapn/parallel.hpp"

namespace gapn {

namespace {

// Radix-p Walsh transform over F_p^n on vectors of Z[zeta_p] coordinates:
// out[a] = sum_x zeta^{<a, x>} in[x], with <a, x> the digit dot product.
// Coordinates are raw (not canonicalized) int64 vectors, flat [x * p + j].
void wht_in_place(std::vector<std::int64_t>& a, std::uint32_t q, std::uint32_t p,
                  std::uint32_t n)
{
    std::vector<std::int64_t> group(static_cast<std::size_t>(p) * p);
    std::uint32_t stride = 1;
    for (std::uint32_t stage = 0; stage < n; ++stage) {
        const std::uint32_t block = stride * p;
        for (std::uint32_t base = 0; base < q; base += block) {
            for (std::uint32_t off = 0; off < stride; ++off) {
                const std::uint32_t idx0 = base + off;
                for (std::uint32_t j = 0; j < p; ++j) {
                    const std::int64_t* src =
                        a.data() + static_cast<std::size_t>(idx0 + j * stride) * p;
                    std::copy(src, src + p, group.begin() + static_cast<std::size_t>(j) * p);
                }
                for (std::uint32_t t = 0; t < p; ++t) {
                    std::int64_t* dst =
                        a.data() + static_cast<std::size_t>(idx0 + t * stride) * p;
                    std::fill(dst, dst + p, 0);
                    for (std::uint32_t j = 0; j < p; ++j) {
                        const std::uint32_t rot = (t * j) % p;
                        const std::int64_t* src =
                            group.data() + static_cast<std::size_t>(j) * p;
                        for (std::uint32_t c = 0; c < p; ++c) {
                            std::uint32_t k = c + rot;
                            if (k >= p)
                                k -= p;
                            dst[k] += src[c];
                        }
                    }
                }
            }
        }
        stride = block;
    }
}

// tau[b] = index whose digit vector is (Tr(b a^s))_s: the reindexing that
// turns the digit-dot-product transform into the trace pairing Tr(bx).
// A bijection, because the trace form is nondegenerate.
std::vector<Elem> trace_index_map(const Field& f)
{
    const std::uint32_t n = f.n();
    const std::uint32_t q = f.size();
    std::vector<Elem> basis_img(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> d(n);
        for (std::uint32_t s = 0; s < n; ++s)
            d[s] = f.trace(f.pow(f.modulus_root(), i + s));
        basis_img[i] = f.from_digits(d);
    }
    std::vector<Elem> tau(q, 0);
    for (Elem x = 1; x < q; ++x) {
        std::uint32_t k = 0;
        Elem rest = x;
        std::uint32_t d = rest % f.p();
        while (d == 0) {
            rest /= f.p();
            ++k;
            d = rest % f.p();
        }
        Elem lower = x - d * static_cast<Elem>(pow_u64(f.p(), k));
        tau[x] = f.add(tau[lower], f.scalar_mul(d, basis_img[k]));
    }
    return tau;
}

// Canonical coordinates (c_{p-1} subtracted out) of one transform slot.
void canonical_coords(const std::int64_t* raw, std::uint32_t p,
                      std::vector<std::int64_t>& out)
{
    out.assign(raw, raw + p);
    std::int64_t t = out[p - 1];
    if (t != 0) {
        for (auto& v : out)
            v -= t;
    }
}

// Membership in {0, +-p^{(n+1)/2}}: zero, or fixed by conjugation with
// square equal to p^{n+1}.
bool gab_value_ok(const std::vector<std::int64_t>& c, std::uint32_t p,
                  std::int64_t p_n_plus_1)
{
    bool zero = true;
    for (auto v : c)
        if (v != 0) {
            zero = false;
            break;
        }
    if (zero)
        return true;
    // conjugate, canonicalized
    std::int64_t shift = c[1]; // conj moves c_1 to slot p-1
    for (std::uint32_t j = 0; j < p; ++j) {
        std::int64_t conj_j = c[(p - j) % p] - shift;
        if (conj_j != c[j])
            return false;
    }
    // square must be the rational p^{n+1}: convolution of c with itself
    std::vector<std::int64_t> sq(p, 0);
    for (std::uint32_t i = 0; i < p; ++i) {
        if (c[i] == 0)
            continue;
        for (std::uint32_t j = 0; j < p; ++j) {
            std::uint32_t k = i + j;
            if (k >= p)
                k -= p;
            sq[k] += c[i] * c[j];
        }
    }
    std::int64_t t = sq[p - 1];
    for (std::uint32_t j = 1; j < p; ++j) {
        if (sq[j] - t != 0)
            return false;
    }
    return sq[0] - t == p_n_plus_1;
}

std::int64_t pow_i64(std::int64_t b, std::uint32_t e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

std::vector<std::uint32_t> component(const FunctionTable& f, Elem b)
{
    const Field& fd = *f.field;
    std::vector<std::uint32_t> out(fd.size());
    for (Elem x = 0; x < fd.size(); ++x)
        out[x] = fd.trace(fd.mul(b, f(x)));
    return out;
}

CyclotomicInt fourier(std::span<const std::uint32_t> g, std::uint32_t p)
{
    std::vector<std::uint64_t> hist(p, 0);
    for (std::uint32_t v : g)
        ++hist[v % p];
    return CyclotomicInt::from_histogram(p, hist);
}

CyclotomicInt walsh_coefficient(const FunctionTable& f, Elem a, Elem b)
{
    const Field& fd = *f.field;
    const std::uint32_t p = fd.p();
    std::vector<std::uint64_t> hist(p, 0);
    for (Elem x = 0; x < fd.size(); ++x) {
        std::uint32_t t = fd.trace(fd.mul(a, x)) + fd.trace(fd.mul(b, f(x)));
        ++hist[t % p];
    }
    return CyclotomicInt::from_histogram(p, hist);
}

const CyclotomicInt& WalshReport::coefficient(Elem a, Elem b) const
{
    if (!has_coefficients)
        throw Error("walsh report was built without full coefficient storage");
    if (b == 0)
        throw BadParametersError("the b = 0 column is trivial and not stored");
    return coefficients[static_cast<std::size_t>(b - 1) * field->size() + a];
}

namespace {

struct PerComponent {
    std::vector<std::vector<std::int64_t>> values; // canonical, one per a
    bool gab_ok = true;
};

// Runs fn(b, raw_transform) for every b in F^x; raw_transform[x*p+j] holds
// the transform of zeta^{Tr(b f(x))}, indexed so that slot tau[a] is
// W_f(a, b).
template <typename Fn>
void for_each_component_transform(const FunctionTable& f, unsigned threads, Fn&& fn)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    const std::uint32_t p = fd.p();
    const std::uint32_t n = fd.n();
    parallel_for(1, q, threads, [&](Elem b) {
        std::vector<std::int64_t> arr(static_cast<std::size_t>(q) * p, 0);
        for (Elem x = 0; x < q; ++x)
            arr[static_cast<std::size_t>(x) * p + fd.trace(fd.mul(b, f(x)))] = 1;
        wht_in_place(arr, q, p, n);
        fn(b, arr);
    });
}

} // namespace

WalshReport walsh_report(const FunctionTable& f, unsigned threads)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    const std::uint32_t p = fd.p();
    const std::vector<Elem> tau = trace_index_map(fd);
    const std::int64_t pn1 = pow_i64(p, fd.n() + 1);

    WalshReport rep;
    rep.field = f.field;
    rep.has_coefficients =
        static_cast<std::uint64_t>(q) * (q - 1) <= kWalshCoefficientLimit;
    if (rep.has_coefficients)
        rep.coefficients.resize(static_cast<std::size_t>(q) * (q - 1), CyclotomicInt(p));

    std::vector<PerComponent> parts(q - 1);
    for_each_component_transform(f, threads, [&](Elem b, const std::vector<std::int64_t>& arr) {
        PerComponent& part = parts[b - 1];
        std::set<std::vector<std::int64_t>> seen;
        std::vector<std::int64_t> c;
        for (Elem a = 0; a < q; ++a) {
            canonical_coords(arr.data() + static_cast<std::size_t>(tau[a]) * p, p, c);
            if (!gab_value_ok(c, p, pn1))
                part.gab_ok = false;
            seen.insert(c);
            if (rep.has_coefficients)
                rep.coefficients[static_cast<std::size_t>(b - 1) * q + a] =
                    CyclotomicInt::from_coords(p, c);
        }
        part.values.assign(seen.begin(), seen.end());
    });

    std::set<std::vector<std::int64_t>> all;
    bool gab = true;
    for (const auto& part : parts) {
        gab = gab && part.gab_ok;
        all.insert(part.values.begin(), part.values.end());
    }
    rep.is_gab = gab;
    for (const auto& c : all)
        rep.value_set.push_back(CyclotomicInt::from_coords(p, c));
    std::sort(rep.value_set.begin(), rep.value_set.end());

    rep.fourier = gapn_fourier_sum(f, threads);
    return rep;
}

bool is_gab(const FunctionTable& f, unsigned threads)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    const std::uint32_t p = fd.p();
    const std::vector<Elem> tau = trace_index_map(fd);
    const std::int64_t pn1 = pow_i64(p, fd.n() + 1);

    std::atomic<bool> ok{true};
    parallel_for(1, q, threads, [&](Elem b) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        std::vector<std::int64_t> arr(static_cast<std::size_t>(q) * p, 0);
        for (Elem x = 0; x < q; ++x)
            arr[static_cast<std::size_t>(x) * p + fd.trace(fd.mul(b, f(x)))] = 1;
        wht_in_place(arr, q, p, fd.n());
        std::vector<std::int64_t> c;
        for (Elem a = 0; a < q; ++a) {
            canonical_coords(arr.data() + static_cast<std::size_t>(tau[a]) * p, p, c);
            if (!gab_value_ok(c, p, pn1)) {
                ok.store(false, std::memory_order_relaxed);
                return;
            }
        }
    });
    return ok.load();
}

FourierSum gapn_fourier_sum(const FunctionTable& f, unsigned threads)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    const std::uint32_t p = fd.p();
    const std::uint32_t n = fd.n();
    const std::vector<Elem> tau = trace_index_map(fd);

    // Per a: histogram of D_a f, transform it, and add |W|^2 = W conj(W)
    // for every b != 0, all in exact integer arithmetic.
    std::vector<std::vector<Int128>> per_a(q, std::vector<Int128>(p, 0));
    parallel_for(0, q, threads, [&](Elem a) {
        std::vector<Int128>& acc = per_a[a];

        std::vector<Elem> der;
        {
            FunctionTable tmp = d_tilde(f, a);
            der = std::move(tmp.values);
        }
        std::vector<std::int64_t> arr(static_cast<std::size_t>(q) * p, 0);
        for (Elem x = 0; x < q; ++x)
            arr[static_cast<std::size_t>(der[x]) * p] += 1;
        wht_in_place(arr, q, p, n);
        for (Elem b = 1; b < q; ++b) {
            const std::int64_t* w = arr.data() + static_cast<std::size_t>(tau[b]) * p;
            for (std::uint32_t i = 0; i < p; ++i) {
                if (w[i] == 0)
                    continue;
                for (std::uint32_t j = 0; j < p; ++j) {
                    std::uint32_t k = (i + p - j) % p;
                    acc[k] += static_cast<Int128>(w[i]) * w[j];
                }
            }
        }
    });

    std::vector<Int128> total(p, 0);
    for (const auto& part : per_a)
        for (std::uint32_t k = 0; k < p; ++k)
            total[k] += part[k];
    // canonicalize and demand rationality
    Int128 t = total[p - 1];
    for (std::uint32_t k = 1; k < p; ++k) {
        if (total[k] - t != 0)
            throw NonRationalSumError("fourier power sum is not a rational integer");
    }
    FourierSum out;
    out.value = total[0] - t;
    Int128 th = 1;
    for (std::uint32_t i = 0; i < 2 * n + 1; ++i)
        th *= p;
    th *= (static_cast<Int128>(q) - 1);
    out.threshold = th;
    out.equality = out.value == out.threshold;
    return out;
}

std::uint64_t s_count(const FunctionTable& f, std::uint32_t m, Elem a, Elem b)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    switch (m) {
    case 1:
        return f(a) == b ? 1 : 0;
    case 2: {
        std::uint64_t cnt = 0;
        for (Elem x1 = 0; x1 < q; ++x1) {
            Elem x2 = fd.sub(a, x1);
            if (fd.add(f(x1), f(x2)) == b)
                ++cnt;
        }
        return cnt;
    }
    case 3: {
        if (static_cast<std::uint64_t>(q) * q > kMaxFieldSize)
            throw GuardExceededError("p^{2n} beyond the exhaustive guard");
        std::uint64_t cnt = 0;
        for (Elem x1 = 0; x1 < q; ++x1) {
            Elem a1 = fd.sub(a, x1);
            Elem f1 = f(x1);
            for (Elem x2 = 0; x2 < q; ++x2) {
                Elem x3 = fd.sub(a1, x2);
                if (fd.add(fd.add(f1, f(x2)), f(x3)) == b)
                    ++cnt;
            }
        }
        return cnt;
    }
    default:
        throw GuardExceededError("s_count supports m in {1, 2, 3}");
    }
}

bool gab_via_s3(const FunctionTable& f, unsigned threads)
{
    const Field& fd = *f.field;
    const std::uint32_t q = fd.size();
    const std::uint32_t p = fd.p();
    if (static_cast<std::uint64_t>(q) * q > kMaxFieldSize)
        throw GuardExceededError("p^{2n} beyond the exhaustive guard");
    const Elem* add = fd.add_table();
    if (add == nullptr)
        throw GuardExceededError("field too large for the pair-count table");

    // S^(2) over F + F: s2[(x1+x2) * q + (f(x1)+f(x2))]
    std::vector<std::uint32_t> s2(static_cast<std::size_t>(q) * q, 0);
    for (Elem x1 = 0; x1 < q; ++x1) {
        const Elem* srow = add + static_cast<std::size_t>(x1) * q;
        const Elem* trow = add + static_cast<std::size_t>(f(x1)) * q;
        for (Elem x2 = 0; x2 < q; ++x2)
            ++s2[static_cast<std::size_t>(srow[x2]) * q + trow[f(x2)]];
    }

    const std::uint32_t miss = q - p;
    const std::uint32_t hit = (p + 1) * q - p;
    std::atomic<bool> ok{true};
    parallel_for(0, q, threads, [&](Elem a) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        std::vector<std::uint32_t> row(q, 0);
        for (Elem x3 = 0; x3 < q; ++x3) {
            Elem r = add[static_cast<std::size_t>(a) * q + fd.neg(x3)];
            const std::uint32_t* srow = s2.data() + static_cast<std::size_t>(r) * q;
            const Elem* crow = add + static_cast<std::size_t>(f(x3)) * q;
            for (Elem t = 0; t < q; ++t)
                row[crow[t]] += srow[t];
        }
        const Elem fa = f(a);
        for (Elem b = 0; b < q; ++b) {
            if (row[b] != (fa == b ? hit : miss)) {
                ok.store(false, std::memory_order_relaxed);
                return;
            }
        }
    });
    return ok.load();
}

} // namespace gapn
