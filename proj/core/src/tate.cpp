#include "lgf/tate.hpp"

#include <cmath>
#include <stdexcept>

namespace lgf {

namespace {

// Tame Hilbert symbol over a field whose residue Legendre symbol at -1 is
// legm1: (a, b) = legm1^{v(a) v(b)} Leg(a_u)^{v(b)} Leg(b_u)^{v(a)}.
int tame_hilbert(int legm1, SquareClass a, SquareClass b) {
    int s = 1;
    if ((a.vpar & b.vpar) && legm1 == -1) s = -s;
    if ((a.upar & b.vpar) ^ (b.upar & a.vpar)) s = -s;
    return s;
}

// -1 is always a square in the quadratic residue extension GF(q^2).
int legm1_of(const LocalFieldCtx& ctx, const TateField& fld) {
    return fld.f == 2 ? 1 : ctx.leg_minus_one();
}

long q_res(const LocalFieldCtx& ctx, const TateField& fld) {
    return fld.f == 2 ? ctx.q() * ctx.q() : ctx.q();
}

}  // namespace

Coeff char_value(const LocalFieldCtx& ctx, const MultChar& chi,
                 const TateField& fld, long val, int upar) {
    SquareClass cls{static_cast<int>(((val % 2) + 2) % 2), upar};
    Coeff v(tame_hilbert(legm1_of(ctx, fld), chi.d, cls));
    return v * chi.z.pow(val);
}

Coeff char_at_uniformizer(const LocalFieldCtx& ctx, const MultChar& chi,
                          const TateField& fld) {
    return char_value(ctx, chi, fld, 1, 0);
}

Coeff char_at_minus_one(const LocalFieldCtx& ctx, const MultChar& chi,
                        const TateField& fld) {
    int upar = legm1_of(ctx, fld) == 1 ? 0 : 1;
    return char_value(ctx, chi, fld, 0, upar);
}

int addchar_level_over(const TateField& fld, const AddChar& psi) {
    return fld.ramified ? 2 * psi.level + 1 : psi.level;
}

GaussConstant gauss_constant(const LocalFieldCtx& ctx, const MultChar& chi,
                             const AddChar& psi, const TateField& fld) {
    if (chi.fdeg != fld.f)
        throw std::invalid_argument("character/field residue degree mismatch");
    if (chi.conductor() == 0) return {Coeff(1), 0};

    const ResidueField& rf = ctx.res();
    int p = rf.p();
    int m = rf.k() * fld.f;

    // Legendre symbol of the effective residue seed of psi over the target
    // field. Over the unramified extension every base-field unit is a square.
    // Over a ramified extension E = F(sqrt(d_u * pi)) the character psi o Tr
    // has level 2n + 1 and its residue seed at that level is
    // 2 * seed * d_u^{-(n+1)}.
    int legseed;
    if (fld.f == 2) {
        legseed = 1;
    } else if (!fld.ramified) {
        legseed = rf.legendre(psi.seed);
    } else {
        int two = rf.add(1, 1);
        legseed = rf.legendre(two) * rf.legendre(psi.seed);
        if (fld.d.upar && ((psi.level + 1) % 2)) legseed = -legseed;
    }

    // Normalized residue Gauss sum over GF(p^m) with seed 1: by Gauss's sign
    // theorem and Hasse-Davenport, g / sqrt(p^m) = -(-eta)^m with eta = 1 for
    // p = 1 mod 4 and eta = i for p = 3 mod 4.
    Coeff eta = (p % 4 == 1) ? Coeff(1) : Coeff::i_unit();
    Coeff core = eta.pow(m);
    if (m % 2 == 0) core = -core;

    Coeff iota = char_at_uniformizer(ctx, chi, fld) * Coeff(legseed) * core;
    return {iota, 1};
}

RationalQS tate_L(const LocalFieldCtx& ctx, const MultChar& chi,
                  const TateField& fld) {
    if (chi.fdeg != fld.f)
        throw std::invalid_argument("character/field residue degree mismatch");
    if (chi.conductor() != 0) return RationalQS::one(ctx.q());
    Coeff cpi = char_at_uniformizer(ctx, chi, fld);
    return RationalQS::from_laurent(ctx.q(), {{0, Coeff(1)}},
                                    {{0, Coeff(1)}, {fld.f, -cpi}});
}

RationalQS tate_eps(const LocalFieldCtx& ctx, const MultChar& chi,
                    const AddChar& psi, const TateField& fld) {
    GaussConstant gc = gauss_constant(ctx, chi, psi, fld);
    long n = addchar_level_over(fld, psi);
    long e = gc.conductor + n;
    Coeff cpi = char_at_uniformizer(ctx, chi, fld);
    Coeff val =
        gc.value * cpi.pow(n) * Coeff::q_pow_half(ctx.q(), fld.f * e);
    return RationalQS::monomial(val, fld.f * e);
}

RationalQS tate_gamma(const LocalFieldCtx& ctx, const MultChar& chi,
                      const AddChar& psi, const TateField& fld) {
    RationalQS eps = tate_eps(ctx, chi, psi, fld);
    if (chi.conductor() != 0) return eps;
    Coeff cpi = char_at_uniformizer(ctx, chi, fld);
    Coeff qE_inv = Coeff::make(ctx.q(), Rat(1, q_res(ctx, fld)));
    // L(s, chi)^{-1} over L(1 - s, chi^{-1})^{-1}
    RationalQS ratio = RationalQS::from_laurent(
        ctx.q(), {{0, Coeff(1)}, {fld.f, -cpi}},
        {{0, Coeff(1)}, {-fld.f, -cpi.inv() * qE_inv}});
    return eps * ratio;
}

std::complex<double> numeric_gauss_sum(int p, int m, int seed_in_prime_field) {
    ResidueField rf(p, m);
    if (seed_in_prime_field <= 0 || seed_in_prime_field >= p)
        throw std::invalid_argument("seed must be a nonzero prime-field digit");
    std::complex<double> total(0.0, 0.0);
    const double two_pi = 8.0 * std::atan(1.0);
    for (long x = 1; x < rf.q(); ++x) {
        int tr = rf.trace(rf.mul(seed_in_prime_field, static_cast<int>(x)));
        double angle = two_pi * tr / p;
        double sign = rf.legendre(static_cast<int>(x));
        total += sign * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return total;
}

}  // namespace lgf
