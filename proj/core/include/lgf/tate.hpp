#pragma once

#include "lgf/local_field.hpp"
#include "lgf/rational_qs.hpp"

namespace lgf {

struct GaussConstant {
    Coeff value;    // fourth root of unity (after normalization by sqrt(q)^a)
    int conductor;  // a(chi)
};

/// Target field of a character: F itself or a quadratic extension. Everything
/// the Tate factors need is the residue degree f, whether E/F is ramified, and
/// the square-class quadratic part relative to that field.
struct TateField {
    int f = 1;
    bool ramified = false;
    /// square class of F generating E; SQ1 for the base field itself
    SquareClass d = SQ1;

    static TateField base() { return {1, false, SQ1}; }
    static TateField ext(const QuadExtInfo& e) { return {e.f, e.ramified, e.d}; }
};

/// Character values computed with the Hilbert symbol of the target field
/// (MultChar::eval is hardwired to the base field). The element is given by
/// its valuation in the target field and the Legendre parity of its unit part.
Coeff char_value(const LocalFieldCtx& ctx, const MultChar& chi,
                 const TateField& fld, long val, int upar);
Coeff char_at_uniformizer(const LocalFieldCtx& ctx, const MultChar& chi,
                          const TateField& fld);
Coeff char_at_minus_one(const LocalFieldCtx& ctx, const MultChar& chi,
                        const TateField& fld);

/// psi composed with the trace of E/F, as an additive character of E.
/// For unramified E the level is unchanged; for tamely ramified E it is
/// 2 n + 1 (the inverse different is generated by the uniformizer of E).
int addchar_level_over(const TateField& fld, const AddChar& psi);

/// Exact normalized epsilon constant of a quadratic (or unramified) character.
/// For a ramified quadratic chi over a field with residue cardinality p^m the
/// residue Gauss sum is evaluated by Gauss's sign theorem lifted through
/// Hasse-Davenport: g / sqrt(p^m) = -(-g_1/sqrt(p))^m with g_1/sqrt(p) = 1 for
/// p = 1 mod 4 and i for p = 3 mod 4, twisted by the Legendre symbol of the
/// character seed of psi and by chi at the uniformizer.
GaussConstant gauss_constant(const LocalFieldCtx& ctx, const MultChar& chi,
                             const AddChar& psi,
                             const TateField& fld = TateField::base());

RationalQS tate_L(const LocalFieldCtx& ctx, const MultChar& chi,
                  const TateField& fld = TateField::base());

/// epsilon(s, chi, psi) = iota0 * chi(pi)^{n(psi)} * q'^{(a(chi)+n(psi))(1/2-s)}
RationalQS tate_eps(const LocalFieldCtx& ctx, const MultChar& chi,
                    const AddChar& psi,
                    const TateField& fld = TateField::base());

/// gamma = eps * L(1-s, chi^{-1}) / L(s, chi)
RationalQS tate_gamma(const LocalFieldCtx& ctx, const MultChar& chi,
                      const AddChar& psi,
                      const TateField& fld = TateField::base());

/// Numeric residue-field Gauss sum sum_{x != 0} Legendre(x) zeta_p^{Tr(cx)}
/// over an explicitly constructed GF(p^m); oracle for gauss_constant.
std::complex<double> numeric_gauss_sum(int p, int m, int seed_in_prime_field);

}  // namespace lgf
