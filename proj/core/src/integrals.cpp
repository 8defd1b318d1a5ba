#include "lgf/integrals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lgf {

namespace {

/// smallest valuation M with c x^e admissible on pi^M O against t = pi^k:
/// e ord(x) + cval >= -k, so M = ceil((-k - cval) / e)
long inner_floor(const ShellInner& in, long k) {
    if (in.xpow == 1) return -k - in.cval;
    long s = k + in.cval;
    return s >= 0 ? -(s / 2) : ((-s) + 1) / 2;
}

bool psi_alive(const ShellInner& in, long k, const AddChar& psi) {
    return inner_floor(in, k) + in.dval >= -psi.level;
}

RationalQS term_at(const LocalFieldCtx& ctx, const ShellIntegrand& ig,
                   const AddChar& psi, long k, bool* killed) {
    long q = ctx.q();
    Coeff c = Coeff::q_pow_half(q, -k * ig.w_half);
    for (const auto& in : ig.inner) {
        if (in.has_psi && !psi_alive(in, k, psi)) {
            *killed = true;
            return RationalQS::zero(q);
        }
        c *= Coeff::q_pow_half(q, -2 * inner_floor(in, k));
    }
    *killed = false;
    return RationalQS::monomial(c, k * ig.w_s);
}

}  // namespace

RationalQS eval_shell_integral(const LocalFieldCtx& ctx,
                               const ShellIntegrand& ig, const AddChar& psi) {
    long q = ctx.q();
    bool any_psi = false;
    for (const auto& in : ig.inner) any_psi |= in.has_psi;

    RationalQS shell = RationalQS::zero(q);
    if (any_psi) {
        // the admissible disc shrinks with k, so once the psi factor kills a
        // term it kills all later ones
        for (long k = 0;; ++k) {
            bool killed = false;
            RationalQS t = term_at(ctx, ig, psi, k, &killed);
            if (killed) break;
            shell += t;
        }
    } else {
        // two-step geometric: inner volumes grow by exactly one digit per
        // two shells
        bool killed = false;
        RationalQS t0 = term_at(ctx, ig, psi, 0, &killed);
        RationalQS t1 = term_at(ctx, ig, psi, 1, &killed);
        RationalQS t2 = term_at(ctx, ig, psi, 2, &killed);
        RationalQS ratio2 = t2 / t0;
        shell = (t0 + t1) * (RationalQS::one(q) - ratio2).inv();
    }

    RationalQS out = ig.prefactor.is_zero() ? shell : ig.prefactor * shell;
    if (!ig.addend.is_zero()) out += ig.addend;
    return out;
}

std::complex<double> numeric_shell_integral(const LocalFieldCtx& ctx,
                                            const ShellIntegrand& ig,
                                            const AddChar& psi,
                                            std::complex<double> s,
                                            int depth) {
    const ResidueField& rf = ctx.res();
    double q = static_cast<double>(ctx.q());
    double lq = std::log(q);

    // average of the root of unity over one free constrained digit
    std::complex<double> digit_avg(0.0, 0.0);
    for (int d = 0; d < ctx.q(); ++d)
        digit_avg += psi.digit_value(rf, d);
    digit_avg /= q;

    std::complex<double> shell(0.0, 0.0);
    for (long k = 0; k <= depth; ++k) {
        std::complex<double> term =
            std::exp(-(0.5 * k * ig.w_half) * lq - s * (double(k * ig.w_s) * lq));
        for (const auto& in : ig.inner) {
            long M = inner_floor(in, k);
            term *= std::pow(q, static_cast<double>(-M));
            if (in.has_psi) {
                // psi(pi^{dval} x) constrains the digit of x at
                // -level - 1 - dval when that position is free in pi^M O
                long j0 = -psi.level - 1 - in.dval;
                if (j0 >= M) term *= digit_avg;
            }
        }
        shell += term;
    }

    std::complex<double> out = shell;
    if (!ig.prefactor.is_zero()) out *= ig.prefactor.eval(s);
    if (!ig.addend.is_zero()) out += ig.addend.eval(s);
    return out;
}

namespace {

RationalQS zeta_2s1_inv(long q) {
    // 1 / zeta_F(2 s + 1) = 1 - q^{-1} X^2
    return RationalQS::from_laurent(
        q, {{0, Coeff(1)}, {2, -Coeff::make(q, Rat(1, q))}}, {{0, Coeff(1)}});
}

RationalQS one_plus(long q, long half_pow, long xexp) {
    // 1 + q^{half_pow/2} X^{xexp}
    return RationalQS::from_laurent(
        q, {{0, Coeff(1)}, {xexp, Coeff::q_pow_half(q, half_pow)}},
        {{0, Coeff(1)}});
}

}  // namespace

RationalQS whittaker_minimal(const LocalFieldCtx& ctx, const HermSpace& space,
                             const AddChar& psi) {
    if (psi.level != 0)
        throw std::invalid_argument("whittaker route needs a level-0 psi");
    long q = ctx.q();
    MinimalTag tag = classify_minimal(ctx, space);
    switch (tag) {
        case MinimalTag::SOa2:
        case MinimalTag::Qm1n1:
        case MinimalTag::U1: {
            SquareClass a =
                tag == MinimalTag::U1 ? space.ext->d : space.disc;
            ShellIntegrand ig;
            ig.inner = {{0, 1, true, 0}};
            if (a.vpar == 0) {
                ig.w_half = 2;
                ig.w_s = 2;
                return zeta_2s1_inv(q) * eval_shell_integral(ctx, ig, psi);
            }
            ig.w_half = 1;
            ig.w_s = 1;
            RationalQS pre = RationalQS::monomial(Coeff::q_pow_half(q, 1), -1);
            ig.prefactor = pre;
            ig.addend = -(pre * one_plus(q, -1, 1).inv());
            return zeta_2s1_inv(q) * eval_shell_integral(ctx, ig, psi);
        }
        case MinimalTag::Q1n1: {
            ShellIntegrand ig;
            ig.w_half = 3;
            ig.w_s = 1;
            ig.inner = {{0, 2, true, 0}, {1, 2, false, 0}, {1, 2, false, 0}};
            return RationalQS::zeta(q).shift_half(3).inv() *
                   eval_shell_integral(ctx, ig, psi);
        }
        default:
            throw std::invalid_argument(
                "whittaker route covers the rank-one-type minimal cases");
    }
}

RationalQS gamma_via_whittaker(const LocalFieldCtx& ctx,
                               const HermSpace& space, const AddChar& psi) {
    RationalQS l = whittaker_minimal(ctx, space, psi);
    RationalQS big_gamma = l * l.subst_neg_s().inv();

    MinimalTag tag = classify_minimal(ctx, space);
    SquareClass a;
    switch (tag) {
        case MinimalTag::SOa2:
        case MinimalTag::Qm1n1:
            a = space.disc;
            break;
        case MinimalTag::U1:
            a = space.ext->d;
            break;
        case MinimalTag::Q1n1:
            a = space.quat->a;
            break;
        default:
            throw std::invalid_argument("unsupported whittaker case");
    }
    // the nilpotent datum of the model has N_V(A) = -a^{-1}
    DoublingNilpotent A;
    A.nv = FElem{-static_cast<long>(a.vpar),
                 (ctx.class_minus_one() * a).upar};

    MultChar triv = trivial_char();
    if (space.tag == CaseTag::U)
        triv.fdeg = ctx.classify_quad_ext(space.ext->d).f;
    RationalQS R = correction_R(ctx, space, OmegaSpec{triv, std::nullopt}, A,
                                psi);
    return (big_gamma * R).shift_half(-1);
}

namespace {

constexpr long kInfVal = std::numeric_limits<long>::max();

struct LaurentPoly {
    long base = 0;  // valuation of slot 0
    std::vector<int> c;

    long valuation() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) return base + static_cast<long>(i);
        return kInfVal;
    }
};

}  // namespace

long check_quat_indicator(const LocalFieldCtx& ctx, SquareClass a,
                          SquareClass b, int half_depth, int digits) {
    if (a.vpar != 0 || b.vpar != 1)
        throw std::invalid_argument("expect ord(a) = 0 and ord(b) = 1");
    if (ctx.hilbert(a, b) != -1)
        throw std::invalid_argument("(a, b) must be a division pair");
    const ResidueField& rf = ctx.res();
    long q = ctx.q();
    int M = half_depth, D = digits;

    long count_vectors = 1;
    for (int i = 0; i < D; ++i) count_vectors *= q;

    int au = ctx.unit_rep(a);
    int bu = ctx.unit_rep(SquareClass{0, b.upar});
    int abu = rf.mul(au, bu);

    // squares of all digit vectors (positions -M .. -M+D-1), scaled by the
    // three coefficients: a at offset 0, b and ab at offset 1
    int L = 2 * D;  // slots for the square, plus one for the odd offsets
    auto square_scaled = [&](long code, int unit, int offset) {
        std::vector<int> x(D);
        for (int i = 0; i < D; ++i) {
            x[i] = static_cast<int>(code % q);
            code /= q;
        }
        LaurentPoly p;
        p.base = -2 * M;  // common base; the offset shifts within the array
        p.c.assign(L + 1, 0);
        for (int i = 0; i < D; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < D; ++j) {
                if (x[j] == 0) continue;
                p.c[i + j + offset] =
                    rf.add(p.c[i + j + offset], rf.mul(x[i], x[j]));
            }
        }
        for (int i = 0; i <= L; ++i) p.c[i] = rf.mul(p.c[i], unit);
        return p;
    };

    std::vector<LaurentPoly> ax2(count_vectors), by2(count_vectors),
        abz2(count_vectors);
    std::vector<long> vax(count_vectors), vby(count_vectors),
        vabz(count_vectors);
    for (long code = 0; code < count_vectors; ++code) {
        ax2[code] = square_scaled(code, au, 0);
        by2[code] = square_scaled(code, bu, 1);
        abz2[code] = square_scaled(code, rf.neg(abu), 1);
        vax[code] = ax2[code].valuation();
        vby[code] = by2[code].valuation();
        vabz[code] = abz2[code].valuation();
    }

    long checked = 0;
    std::vector<int> sum(L + 1);
    for (long ix = 0; ix < count_vectors; ++ix) {
        for (long iy = 0; iy < count_vectors; ++iy) {
            for (long iz = 0; iz < count_vectors; ++iz) {
                long vmin = std::min({vax[ix], vby[iy], vabz[iz]});
                if (vmin == kInfVal) continue;  // x = y = z = 0
                // anisotropy must forbid any cancellation at the bottom:
                // v(a x^2 + b y^2 - a b z^2) = min of the three valuations,
                // which is exactly the shellwise indicator factorization
                long vsum = kInfVal;
                for (int i = 0; i <= L; ++i) {
                    int v = rf.add(rf.add(ax2[ix].c[i], by2[iy].c[i]),
                                   abz2[iz].c[i]);
                    if (v != 0) {
                        vsum = -2 * M + i;
                        break;
                    }
                }
                if (vsum != vmin)
                    throw std::runtime_error(
                        "indicator factorization counterexample");
                ++checked;
            }
        }
    }
    return checked;
}

}  // namespace lgf
