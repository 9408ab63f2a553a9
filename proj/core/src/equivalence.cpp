#include "gapn/equivalence.hpp"

namespace gapn {

AffineMap::AffineMap(FieldPtr f, FpMatrix l, Elem c)
    : field(std::move(f)), linear(std::move(l)), constant(c)
{
    if (linear.rows() != field->n() || linear.cols() != field->n())
        throw BadParametersError("linear part must be n x n");
    if (linear.p() != field->p())
        throw SpecMismatchError("matrix characteristic differs from the field");
    permutation = linear.invertible();
}

Elem AffineMap::operator()(Elem x) const
{
    const Field& fd = *field;
    std::vector<std::uint32_t> d = fd.digits(x);
    std::vector<std::uint32_t> image = linear.mul_vec(d);
    return fd.add(fd.from_digits(image), constant);
}

AffineMap AffineMap::identity(FieldPtr f)
{
    const std::uint32_t n = f->n();
    const std::uint32_t p = f->p();
    return AffineMap(std::move(f), FpMatrix::identity(p, n), 0);
}

EaTransform::EaTransform(AffineMap a1_, AffineMap a2_, AffineMap a0_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a0(std::move(a0_))
{
    if (a1.field->to_string() != a2.field->to_string()
        || a1.field->to_string() != a0.field->to_string())
        throw SpecMismatchError("transform parts live in different fields");
    if (!a1.permutation || !a2.permutation)
        throw BadParametersError("A1 and A2 must be affine permutations");
}

FunctionTable apply(const EaTransform& t, const FunctionTable& f)
{
    if (t.a1.field->to_string() != f.field->to_string())
        throw SpecMismatchError("transform and function live in different fields");
    const Field& fd = *f.field;
    std::vector<Elem> out(fd.size());
    for (Elem x = 0; x < fd.size(); ++x)
        out[x] = fd.add(t.a1(f(t.a2(x))), t.a0(x));
    return FunctionTable(f.field, std::move(out));
}

AffineMap random_affine_map(FieldPtr field, Rng& rng)
{
    const std::uint32_t n = field->n();
    const std::uint32_t p = field->p();
    FpMatrix m(p, n, n);
    for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t c = 0; c < n; ++c)
            m.at(r, c) = rng.below(p);
    Elem constant = rng.below(field->size());
    return AffineMap(std::move(field), std::move(m), constant);
}

AffineMap random_affine_permutation(FieldPtr field, Rng& rng)
{
    while (true) {
        AffineMap m = random_affine_map(field, rng);
        if (m.permutation)
            return m;
    }
}

AffineMap random_affine_permutation(FieldPtr field, std::uint64_t seed)
{
    Rng rng(seed);
    return random_affine_permutation(std::move(field), rng);
}

EaTransform random_ea_transform(FieldPtr field, Rng& rng)
{
    AffineMap a1 = random_affine_permutation(field, rng);
    AffineMap a2 = random_affine_permutation(field, rng);
    AffineMap a0 = random_affine_map(field, rng);
    return EaTransform(std::move(a1), std::move(a2), std::move(a0));
}

InvarianceReport check_invariance(const FunctionTable& f, const EaTransform& t,
                                  unsigned threads)
{
    InvarianceReport rep;
    FunctionTable g = apply(t, f);

    SpectrumReport sf = spectrum(f, threads);
    SpectrumReport sg = spectrum(g, threads);
    rep.multiset_f = sf.multiset;
    rep.multiset_g = sg.multiset;
    rep.spectrum_equal = sf.multiset == sg.multiset;
    rep.gapn_f = sf.is_gapn;
    rep.gapn_g = sg.is_gapn;

    rep.degree_f = algebraic_degree(f);
    rep.degree_g = algebraic_degree(g);
    if (rep.degree_f >= 2) {
        rep.degree_checked = true;
        rep.degree_equal = rep.degree_f == rep.degree_g;
    }
    return rep;
}

} // namespace gapn
