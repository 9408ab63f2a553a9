#include "gapn/field.hpp"

#include <algorithm>
#include <sstream>

#include "gapn/numeric.hpp"

namespace gapn {

namespace {

// Dense polynomials over F_p, ascending coefficients, for the
// irreducibility test. Degree of the zero polynomial is -1.
using Poly = std::vector<std::uint32_t>;

int poly_deg(const Poly& f)
{
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i] != 0)
            return i;
    }
    return -1;
}

void poly_trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Poly poly_mul_mod(const Poly& f, const Poly& g, const Poly& m, std::uint32_t p)
{
    Poly prod(f.size() + g.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(f[i]) * g[j]) % p;
        }
    }
    int dm = poly_deg(m);
    for (int d = static_cast<int>(prod.size()) - 1; d >= dm; --d) {
        if (prod[d] == 0)
            continue;
        std::uint32_t c = prod[d]; // m is monic
        for (int k = 0; k <= dm; ++k) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * m[k] % p;
            prod[d - dm + k] = static_cast<std::uint32_t>((prod[d - dm + k] + p - sub) % p);
        }
    }
    prod.resize(dm);
    return prod;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p)
{
    Poly r = {1};
    r.resize(std::max<std::size_t>(1, poly_deg(m)), 0);
    while (e > 0) {
        if (e & 1u)
            r = poly_mul_mod(r, base, m, p);
        base = poly_mul_mod(base, base, m, p);
        e >>= 1u;
    }
    return r;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p)
{
    return static_cast<std::uint32_t>(pow_mod_u64(a, p - 2, p));
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p)
{
    poly_trim(a);
    poly_trim(b);
    while (poly_deg(b) >= 0) {
        // a mod b
        std::uint32_t lead_inv = inv_mod_p(b[poly_deg(b)], p);
        int db = poly_deg(b);
        while (poly_deg(a) >= db) {
            int da = poly_deg(a);
            std::uint32_t c = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(a[da]) * lead_inv % p);
            for (int k = 0; k <= db; ++k) {
                std::uint64_t sub = static_cast<std::uint64_t>(c) * b[k] % p;
                a[da - db + k] =
                    static_cast<std::uint32_t>((a[da - db + k] + p - sub) % p);
            }
            poly_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p, std::uint32_t n)
{
    if (n == 1)
        return true;
    // x^{p^j} mod m for j = 1..n by iterated p-th powers.
    Poly x = {0, 1};
    std::vector<Poly> frob(n + 1);
    frob[0] = x;
    frob[0].resize(n, 0);
    for (std::uint32_t j = 1; j <= n; ++j)
        frob[j] = poly_pow_mod(frob[j - 1], p, m, p);
    Poly xn = frob[n];
    Poly xr = x;
    xr.resize(xn.size(), 0);
    if (xn != xr)
        return false;
    for (std::uint64_t q : prime_factors(n)) {
        Poly diff = frob[n / q];
        for (std::size_t k = 0; k < xr.size(); ++k)
            diff[k] = (diff[k] + p - xr[k]) % p;
        Poly g = poly_gcd(diff, m, p);
        if (poly_deg(g) > 0)
            return false;
    }
    return true;
}

} // namespace

Field::Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus))
{
    if (!is_prime(p_))
        throw NotPrimeError("field characteristic " + std::to_string(p_) + " is not prime");
    if (n_ == 0)
        throw BadParametersError("field degree must be positive");
    if (modulus_.size() != n_ + 1)
        throw BadParametersError("modulus must have exactly n+1 coefficients");
    for (std::uint32_t c : modulus_) {
        if (c >= p_)
            throw BadParametersError("modulus coefficient out of range");
    }
    if (modulus_.back() != 1)
        throw BadParametersError("modulus must be monic");

    std::uint64_t sz = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        sz *= p_;
        if (sz > kMaxFieldSize)
            throw TooLargeError("p^n exceeds the exhaustive-analysis guard 2^24");
    }
    size_ = static_cast<std::uint32_t>(sz);

    if (!is_irreducible(modulus_, p_, n_))
        throw ReducibleError("modulus is reducible over F_p");

    p_pows_.resize(n_ + 1);
    p_pows_[0] = 1;
    for (std::uint32_t i = 1; i <= n_; ++i)
        p_pows_[i] = p_pows_[i - 1] * p_;

    // a^{n+k} expressed in the basis, for reducing products of degree < 2n-1.
    if (n_ >= 2) {
        reduction_.resize(n_ - 1);
        // a^n = -(c_0 + c_1 a + ... + c_{n-1} a^{n-1})
        std::vector<std::uint32_t> cur(n_);
        for (std::uint32_t i = 0; i < n_; ++i)
            cur[i] = (p_ - modulus_[i]) % p_;
        for (std::uint32_t k = 0; k + 1 < n_; ++k) {
            Elem idx = 0;
            for (std::uint32_t i = 0; i < n_; ++i)
                idx += cur[i] * p_pows_[i];
            reduction_[k] = idx;
            if (k + 2 < n_) {
                // multiply by a
                std::uint32_t top = cur[n_ - 1];
                for (std::uint32_t i = n_ - 1; i > 0; --i)
                    cur[i] = cur[i - 1];
                cur[0] = 0;
                if (top != 0) {
                    for (std::uint32_t i = 0; i < n_; ++i) {
                        std::uint64_t sub =
                            static_cast<std::uint64_t>(top) * modulus_[i] % p_;
                        cur[i] = static_cast<std::uint32_t>((cur[i] + p_ - sub) % p_);
                    }
                }
            }
        }
    }

    root_ = (n_ >= 2) ? p_ : (p_ - modulus_[0]) % p_;

    order_factors_ = prime_factors(size_ - 1);

    // Smallest-index generator of F^x.
    for (Elem cand = 1; cand < size_; ++cand) {
        bool ok = true;
        for (std::uint64_t q : order_factors_) {
            if (pow_slow(cand, (size_ - 1) / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive_ = cand;
            break;
        }
    }

    if (size_ <= kMulTableLimit) {
        exp_.resize(size_ - 1);
        log_.assign(size_, 0);
        Elem cur = 1;
        for (std::uint32_t k = 0; k < size_ - 1; ++k) {
            exp_[k] = cur;
            log_[cur] = k;
            cur = mul_slow(cur, primitive_);
        }
    }

    basis_traces_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        Elem basis = (i == 0) ? 1 : (n_ >= 2 ? p_pows_[i] : root_);
        Elem acc = 0;
        Elem t = basis;
        for (std::uint32_t j = 0; j < n_; ++j) {
            acc = add(acc, t);
            t = pow(t, p_);
        }
        basis_traces_[i] = acc % p_; // trace lies in F_p, digit 0 carries it
    }
}

std::vector<std::uint32_t> Field::digits(Elem x) const
{
    std::vector<std::uint32_t> d(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const
{
    Elem idx = 0;
    for (std::uint32_t i = 0; i < n_ && i < d.size(); ++i)
        idx += (d[i] % p_) * p_pows_[i];
    return idx;
}

Elem Field::add(Elem x, Elem y) const
{
    if (p_ == 2)
        return x ^ y;
    Elem r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint32_t s = x % p_ + y % p_;
        if (s >= p_)
            s -= p_;
        r += s * p_pows_[i];
        x /= p_;
        y /= p_;
    }
    return r;
}

Elem Field::neg(Elem x) const
{
    if (p_ == 2)
        return x;
    Elem r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint32_t d = x % p_;
        if (d != 0)
            r += (p_ - d) * p_pows_[i];
        x /= p_;
    }
    return r;
}

Elem Field::sub(Elem x, Elem y) const
{
    return add(x, neg(y));
}

Elem Field::mul_slow(Elem x, Elem y) const
{
    if (x == 0 || y == 0)
        return 0;
    // digit convolution, then fold degrees >= n through the reduction rows
    std::vector<std::uint32_t> conv(2 * n_ - 1, 0);
    std::vector<std::uint32_t> xd = digits(x);
    std::vector<std::uint32_t> yd = digits(y);
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (xd[i] == 0)
            continue;
        for (std::uint32_t j = 0; j < n_; ++j)
            conv[i + j] = (conv[i + j] + xd[i] * yd[j]) % p_;
    }
    Elem acc = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
        acc += conv[i] * p_pows_[i];
    for (std::uint32_t k = 0; k + 1 < n_; ++k) {
        std::uint32_t c = conv[n_ + k];
        if (c != 0)
            acc = add(acc, scalar_mul(c, reduction_[k]));
    }
    return acc;
}

Elem Field::mul(Elem x, Elem y) const
{
    if (x == 0 || y == 0)
        return 0;
    if (!exp_.empty()) {
        std::uint64_t k = log_[x] + log_[y];
        if (k >= size_ - 1)
            k -= size_ - 1;
        return exp_[k];
    }
    return mul_slow(x, y);
}

Elem Field::scalar_mul(std::uint32_t c, Elem x) const
{
    c %= p_;
    if (c == 0 || x == 0)
        return 0;
    if (c == 1)
        return x;
    Elem r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        r += (x % p_ * c) % p_ * p_pows_[i];
        x /= p_;
    }
    return r;
}

Elem Field::pow_slow(Elem x, std::uint64_t e) const
{
    if (x == 0)
        return e == 0 ? 1 : 0;
    e %= size_ - 1;
    Elem r = 1;
    Elem b = x;
    while (e > 0) {
        if (e & 1u)
            r = mul_slow(r, b);
        b = mul_slow(b, b);
        e >>= 1u;
    }
    return r;
}

Elem Field::pow(Elem x, std::uint64_t e) const
{
    if (x == 0)
        return e == 0 ? 1 : 0;
    e %= size_ - 1;
    if (!exp_.empty()) {
        std::uint64_t k = (static_cast<std::uint64_t>(log_[x]) * (e % (size_ - 1))) % (size_ - 1);
        return exp_[k];
    }
    Elem r = 1;
    Elem b = x;
    while (e > 0) {
        if (e & 1u)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1u;
    }
    return r;
}

Elem Field::inv(Elem x) const
{
    if (x == 0)
        throw DivisionByZeroError("inverse of zero");
    if (!exp_.empty()) {
        std::uint32_t k = log_[x];
        return k == 0 ? 1 : exp_[size_ - 1 - k];
    }
    return pow(x, size_ - 2);
}

std::uint32_t Field::trace(Elem x) const
{
    std::uint32_t acc = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        acc += x % p_ * basis_traces_[i];
        x /= p_;
    }
    return acc % p_;
}

Elem Field::frobenius(Elem x, std::uint32_t i) const
{
    i %= n_;
    if (i == 0)
        return x;
    return pow(x, p_pows_[i]);
}

std::uint64_t Field::element_order(Elem x) const
{
    if (x == 0)
        throw DivisionByZeroError("order of zero");
    std::uint64_t ord = size_ - 1;
    for (std::uint64_t q : order_factors_) {
        while (ord % q == 0 && pow(x, ord / q) == 1)
            ord /= q;
    }
    return ord;
}

const Elem* Field::add_table() const
{
    if (size_ > kAddTableLimit)
        return nullptr;
    std::call_once(add_once_, [this] {
        add_tab_.resize(static_cast<std::size_t>(size_) * size_);
        for (Elem x = 0; x < size_; ++x) {
            Elem* row = add_tab_.data() + static_cast<std::size_t>(x) * size_;
            for (Elem y = 0; y < size_; ++y)
                row[y] = add(x, y);
        }
    });
    return add_tab_.data();
}

std::string Field::to_string() const
{
    std::ostringstream os;
    os << "p=" << p_ << ",n=" << n_ << ",mod=";
    for (std::uint32_t i = 0; i <= n_; ++i) {
        if (i > 0)
            os << ',';
        os << modulus_[i];
    }
    return os.str();
}

FieldPtr Field::parse(const std::string& text)
{
    auto fail = [&](const std::string& why) -> FieldPtr {
        throw gapn::ParseError("bad field spec \"" + text + "\": " + why);
    };
    std::uint32_t p = 0, n = 0;
    std::vector<std::uint32_t> mod;
    std::size_t pos = 0;
    auto expect = [&](const char* key) {
        std::size_t len = std::string(key).size();
        if (text.compare(pos, len, key) != 0)
            fail(std::string("expected \"") + key + "\"");
        pos += len;
    };
    auto read_u32 = [&]() -> std::uint32_t {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == start)
            fail("expected a number");
        return static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start)));
    };
    expect("p=");
    p = read_u32();
    expect(",n=");
    n = read_u32();
    if (pos < text.size()) {
        expect(",mod=");
        while (true) {
            mod.push_back(read_u32());
            if (pos >= text.size())
                break;
            expect(",");
        }
    } else {
        mod = default_modulus(p, n);
    }
    return make_field(p, n, std::move(mod));
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, std::uint32_t n)
{
    if (!is_prime(p))
        throw NotPrimeError("field characteristic " + std::to_string(p) + " is not prime");
    if (n == 0)
        throw BadParametersError("field degree must be positive");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        count *= p;
        if (count > kMaxFieldSize)
            throw TooLargeError("p^n exceeds the exhaustive-analysis guard 2^24");
    }
    // Enumerate (c_0..c_{n-1}) in lexicographic order, c_0 compared first.
    std::vector<std::uint32_t> cand(n + 1, 0);
    cand[n] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (std::uint32_t i = n; i-- > 0;) {
            cand[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible(cand, p, n))
            return cand;
    }
    throw ReducibleError("no irreducible polynomial found"); // unreachable
}

FieldPtr make_field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
{
    return std::make_shared<Field>(p, n, std::move(modulus));
}

FieldPtr make_field(std::uint32_t p, std::uint32_t n)
{
    return std::make_shared<Field>(p, n, Field::default_modulus(p, n));
}

std::string element_to_string(const Field& f, Elem x)
{
    if (x == 0)
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = f.n(); i-- > 0;) {
        std::uint32_t d = f.digit(x, i);
        if (d == 0)
            continue;
        if (!first)
            os << '+';
        first = false;
        if (i == 0) {
            os << d;
        } else {
            if (d != 1)
                os << d;
            os << 'a';
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

} // namespace gapn
