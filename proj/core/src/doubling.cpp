#include "lgf/doubling.hpp"

#include <sstream>
#include <stdexcept>

namespace lgf {

namespace {

TateField coeff_field(const LocalFieldCtx& ctx, const HermSpace& space) {
    if (has_quadratic_ext(space.tag) && space.ext && !space.ext->split)
        return TateField::ext(ctx.classify_quad_ext(space.ext->d));
    return TateField::base();
}

/// (valuation, unit Legendre parity) of an F-element inside the target field
std::pair<long, int> embed_elem(const TateField& fld, FElem a) {
    if (fld.f == 2) return {a.val, 0};  // every F-unit is a square in E
    if (fld.ramified) {
        int up = a.upar;
        if (((a.val % 2) + 2) % 2) up ^= fld.d.upar;
        return {2 * a.val, up};
    }
    return {a.val, a.upar};
}

Coeff omega_value(const LocalFieldCtx& ctx, const MultChar& w,
                  const TateField& fld, FElem a) {
    auto [v, u] = embed_elem(fld, a);
    return char_value(ctx, w, fld, v, u);
}

/// omega_s(x)^{-1} = w(x)^{-1} |x|^{-s} as a monomial in X = q^{-s}
RationalQS omega_s_inv(const LocalFieldCtx& ctx, const MultChar& w,
                       const TateField& fld, FElem x) {
    auto [v, u] = embed_elem(fld, x);
    return RationalQS::monomial(char_value(ctx, w, fld, v, u).inv(),
                                -fld.f * v);
}

Coeff eps_at_half(const LocalFieldCtx& ctx, const MultChar& chi,
                  const AddChar& psi) {
    Coeff c;
    long e = 0;
    if (!tate_eps(ctx, chi, psi).is_monomial(&c, &e))
        throw std::logic_error("epsilon factor is not a monomial");
    return c * Coeff::q_pow_half(ctx.q(), -e);
}

MultChar trivial_over(const TateField& fld) {
    return MultChar{SQ1, Coeff(1), fld.f};
}

std::pair<MultChar, MultChar> omega_pair(const HermSpace& space,
                                         const OmegaSpec& omega) {
    if (omega_is_pair(space.tag)) {
        if (!omega.w2)
            throw std::invalid_argument("case requires a pair omega");
        return {omega.w1, *omega.w2};
    }
    if (omega.w2) {
        if (!(space.ext && space.ext->split) &&
            !(space.quat && space.quat->split))
            throw std::invalid_argument("case takes a single omega");
        return {omega.w1, *omega.w2};
    }
    return {omega.w1, omega.w1};
}

Coeff quad_value(const LocalFieldCtx& ctx, SquareClass d, FElem a) {
    return quad_char(d).eval(ctx, a.val, SquareClass{0, a.upar});
}

}  // namespace

int ReprDescriptor::consumed_rank() const {
    int c = 0;
    for (const auto& b : tower) c += b.m;
    switch (space.tag) {
        case CaseTag::GL:
        case CaseTag::qGL:
        case CaseTag::QGL:
            return c;
        default:
            return 2 * c;
    }
}

RationalQS omega_half_power(const LocalFieldCtx& ctx, const MultChar& w,
                            const TateField& fld, FElem a, long power) {
    auto [v, u] = embed_elem(fld, a);
    Coeff val = char_value(ctx, w, fld, v, u) *
                Coeff::q_pow_half(ctx.q(), fld.f * v);
    return RationalQS::monomial(val, fld.f * v).pow(power);
}

RationalQS t_monomial(const LocalFieldCtx& ctx, const HermSpace& space,
                      const OmegaSpec& omega, FElem a) {
    long N = std_dimension(space);
    TateField base = TateField::base();
    switch (space.tag) {
        case CaseTag::GL:
        case CaseTag::QGL: {
            auto [w1, w2] = omega_pair(space, omega);
            return omega_half_power(ctx, w1, base, a, N / 2) *
                   omega_half_power(ctx, w2, base, a, N / 2);
        }
        case CaseTag::qGL: {
            if (space.ext && space.ext->split) {
                auto [w1, w2] = omega_pair(space, omega);
                return omega_half_power(ctx, w1, base, a, N / 2) *
                       omega_half_power(ctx, w2, base, a, N / 2);
            }
            return omega_half_power(ctx, omega.w1, coeff_field(ctx, space), a,
                                    N / 2);
        }
        case CaseTag::Sp:
        case CaseTag::Q1:
            return omega_half_power(ctx, omega.w1, base, a, N);
        case CaseTag::U: {
            if (space.ext && space.ext->split) {
                auto [w1, w2] = omega_pair(space, omega);
                return omega_half_power(ctx, w1, base, a, N / 2) *
                       omega_half_power(ctx, w2, base, a, N / 2);
            }
            RationalQS t =
                omega_half_power(ctx, omega.w1, coeff_field(ctx, space), a,
                                 N / 2);
            if ((N / 2) % 2 && space.ext && !space.ext->split)
                t *= RationalQS::constant(
                    quad_value(ctx, space.ext->d, a));
            return t;
        }
        case CaseTag::SO:
        case CaseTag::Qm1:
            return omega_half_power(ctx, omega.w1, base, a, N) *
                   RationalQS::constant(quad_value(ctx, space.disc, a));
    }
    return RationalQS::one(ctx.q());
}

GammaResult psi_rescale(const LocalFieldCtx& ctx, const GammaResult& base,
                        const HermSpace& space, const OmegaSpec& omega,
                        FElem a) {
    RationalQS t = t_monomial(ctx, space, omega, a);
    GammaResult out = base;
    out.gamma = base.gamma * t;
    out.eps = base.eps * t;
    out.trace.push_back("psi-rescale by " + t.str());
    return out;
}

RationalQS correction_R(const LocalFieldCtx& ctx, const HermSpace& space,
                        const OmegaSpec& omega, const DoublingNilpotent& A,
                        const AddChar& psi) {
    TateField base = TateField::base();
    switch (space.tag) {
        case CaseTag::GL:
        case CaseTag::QGL: {
            auto [w1, w2] = omega_pair(space, omega);
            return omega_s_inv(ctx, w1, base, A.nv_half) *
                   omega_s_inv(ctx, w2, base, A.nv_mhalf);
        }
        case CaseTag::qGL: {
            TateField fld = coeff_field(ctx, space);
            return omega_s_inv(ctx, omega.w1, fld, A.nv_half) *
                   omega_s_inv(ctx, omega.w1, fld, A.nv_mhalf);
        }
        case CaseTag::Sp:
        case CaseTag::Q1: {
            SquareClass discA =
                disc_of_nilpotent(ctx, space.n, A.nv.cls());
            return omega_s_inv(ctx, omega.w1, base, A.nv) *
                   tate_gamma(ctx, omega.w1.times(quad_char(discA)), psi)
                       .shift_half(1) *
                   RationalQS::constant(
                       eps_at_half(ctx, quad_char(discA), psi).inv());
        }
        case CaseTag::SO:
            if (space.n % 2)
                return omega_s_inv(ctx, omega.w1, base, A.nv_line) *
                       RationalQS::constant(Coeff(space.hasse));
            return omega_s_inv(ctx, omega.w1, base, A.nv) *
                   RationalQS::constant(
                       eps_at_half(ctx, quad_char(space.disc), psi));
        case CaseTag::Qm1:
            return omega_s_inv(ctx, omega.w1, base, A.nv) *
                   RationalQS::constant(
                       eps_at_half(ctx, quad_char(space.disc), psi));
        case CaseTag::U: {
            TateField fld = coeff_field(ctx, space);
            // F-normalized valuation exponent, omega evaluated through E
            RationalQS os = RationalQS::monomial(
                omega_value(ctx, omega.w1, fld, A.nv).inv(), -A.nv.val);
            return os * RationalQS::constant(Coeff(space.eps));
        }
    }
    return RationalQS::one(ctx.q());
}

namespace {

/// zeta(-s + h/2) / zeta(s + h/2)
RationalQS zeta_ratio(long q, long h, int f = 1) {
    RationalQS z = RationalQS::zeta(q, f).shift_half(h);
    return z.subst_neg_s() * z.inv();
}

GammaResult finish_with_parameter(const LocalFieldCtx& ctx,
                                  const StdParameter& par, RationalQS gamma,
                                  const AddChar& psi) {
    GammaResult out;
    out.gamma = std::move(gamma);
    out.L = L_of_parameter(ctx, par);
    StdParameter dual = par;
    for (auto& s : dual.summands) s.chi = s.chi.inverse();
    out.eps = out.gamma * out.L / L_of_parameter(ctx, dual).reflect();
    (void)psi;
    return out;
}

}  // namespace

GammaResult gamma_minimal(const LocalFieldCtx& ctx, const HermSpace& space,
                          const AddChar& psi) {
    MinimalTag tag = classify_minimal(ctx, space);
    if (tag == MinimalTag::NotMinimal)
        throw std::invalid_argument("gamma_minimal needs a minimal space");
    long q = ctx.q();
    AddChar psi0{0, psi.seed};
    StdParameter par = principal_parameter(ctx, space);

    RationalQS g = RationalQS::one(q);
    bool level_handled = false;
    switch (tag) {
        case MinimalTag::Trivial:
            if (space.tag == CaseTag::Sp || space.tag == CaseTag::Q1) {
                g = tate_gamma(ctx, trivial_char(), psi);
                level_handled = true;
            }
            break;
        case MinimalTag::SOa2:
        case MinimalTag::Qm1n1: {
            QuadExtInfo e = ctx.classify_quad_ext(space.disc);
            g = zeta_ratio(q, 1, e.f) *
                tate_eps(ctx, quad_char(space.disc), psi0).shift_half(1);
            break;
        }
        case MinimalTag::SOa3:
            g = zeta_ratio(q, 0) * zeta_ratio(q, 2);
            break;
        case MinimalTag::SOa4:
            g = zeta_ratio(q, 3) * zeta_ratio(q, 1).pow(2) * zeta_ratio(q, -1);
            break;
        case MinimalTag::Q1n1:
            g = zeta_ratio(q, 3) * zeta_ratio(q, 1) * zeta_ratio(q, -1);
            break;
        case MinimalTag::U1: {
            QuadExtInfo e = ctx.classify_quad_ext(space.ext->d);
            g = zeta_ratio(q, 1, e.f) *
                tate_eps(ctx, quad_char(space.ext->d), psi0).shift_half(1);
            break;
        }
        case MinimalTag::Ura2: {
            RationalQS a = tate_gamma(ctx, trivial_char(), psi0);
            RationalQS b = tate_gamma(ctx, quad_char(space.ext->d), psi0);
            g = a * b * a.shift_half(2) * b.shift_half(2);
            break;
        }
        case MinimalTag::NotMinimal:
            break;
    }

    GammaResult out;
    if (level_handled) {
        out = finish_with_parameter(ctx, par, g, psi);
    } else {
        // closed forms live at s + 1/2 with a level-0 psi; move to the
        // gamma factor's own variable and restore the level covariantly
        g = g.shift_half(-1);
        if (psi.level != 0 && tag != MinimalTag::Trivial) {
            OmegaSpec triv{trivial_over(coeff_field(ctx, space)),
                           std::nullopt};
            g *= t_monomial(ctx, space, triv, FElem{psi.level, 0});
        }
        out = finish_with_parameter(ctx, par, g, psi);
    }
    out.trace.push_back(std::string("minimal case ") + minimal_label(tag));
    if (psi.level != 0 && !level_handled)
        out.trace.push_back("psi level folded through the covariance monomial");
    return out;
}

namespace {

GammaResult unit_result(long q) {
    GammaResult r;
    r.gamma = RationalQS::one(q);
    r.L = RationalQS::one(q);
    r.eps = RationalQS::one(q);
    return r;
}

/// gamma/L/eps of the (possibly omega-twisted) trivial representation of a
/// minimal base space
GammaResult leaf_gamma(const LocalFieldCtx& ctx, const HermSpace& base,
                       const MultChar& w, const AddChar& psi) {
    long q = ctx.q();
    MinimalTag tag = classify_minimal(ctx, base);
    GammaResult out = unit_result(q);
    switch (tag) {
        case MinimalTag::Trivial:
            if (base.tag == CaseTag::Sp || base.tag == CaseTag::Q1) {
                out.gamma = tate_gamma(ctx, w, psi);
                out.L = tate_L(ctx, w);
                out.eps = tate_eps(ctx, w, psi);
            }
            out.trace.push_back("leaf trivial");
            return out;
        case MinimalTag::SOa2:
        case MinimalTag::SOa3:
        case MinimalTag::SOa4:
        case MinimalTag::Q1n1:
        case MinimalTag::Qm1n1: {
            StdParameter par = principal_parameter(ctx, base);
            for (const auto& s : par.summands) {
                MultChar c = s.chi.times(w);
                for (int j = 0; j < s.m; ++j) {
                    long h = s.m - 1 - 2 * j;
                    out.gamma *= tate_gamma(ctx, c, psi).shift_half(h);
                    out.L *= tate_L(ctx, c).shift_half(h);
                    out.eps *= tate_eps(ctx, c, psi).shift_half(h);
                }
            }
            out.trace.push_back(std::string("leaf ") + minimal_label(tag));
            return out;
        }
        case MinimalTag::U1: {
            TateField fld = coeff_field(ctx, base);
            // inductive transfer constant of E/F at psi; the s-dependence of
            // the three epsilon monomials cancels
            RationalQS lambda =
                tate_eps(ctx, trivial_char(), psi) *
                tate_eps(ctx, quad_char(base.ext->d), psi) /
                tate_eps(ctx, trivial_over(fld), psi, fld);
            out.gamma = tate_gamma(ctx, w, psi, fld) * lambda;
            out.L = tate_L(ctx, w, fld);
            out.eps = tate_eps(ctx, w, psi, fld) * lambda;
            out.trace.push_back("leaf U1 (transfer constant folded)");
            return out;
        }
        case MinimalTag::Ura2: {
            if (!(w.quad_trivial() && w.z.is_one()))
                throw std::invalid_argument(
                    "omega twist of the ramified binary unitary leaf is not "
                    "supported");
            out = gamma_minimal(ctx, base, psi);
            out.trace.push_back("leaf Ura2");
            return out;
        }
        case MinimalTag::NotMinimal:
            break;
    }
    throw std::invalid_argument("tower base is not minimal");
}

GammaResult unramified_leaf_gamma(const LocalFieldCtx& ctx,
                                  const HermSpace& base,
                                  const UnramifiedLeaf& leaf,
                                  const MultChar& w, const AddChar& psi) {
    TateField fld = base.tag == CaseTag::U ? coeff_field(ctx, base)
                                           : TateField::base();
    size_t expected = base.tag == CaseTag::U
                          ? static_cast<size_t>(base.n)
                          : static_cast<size_t>(std_dimension(base));
    if (leaf.satake.size() != expected)
        throw std::invalid_argument("satake multiset has the wrong length");
    GammaResult out = unit_result(ctx.q());
    for (const Coeff& z : leaf.satake) {
        MultChar c = w.times(MultChar{SQ1, z, fld.f});
        out.gamma *= tate_gamma(ctx, c, psi, fld);
        out.L *= tate_L(ctx, c, fld);
        out.eps *= tate_eps(ctx, c, psi, fld);
    }
    out.trace.push_back("leaf unramified (satake)");
    return out;
}

void validate_tower(const LocalFieldCtx& ctx, const ReprDescriptor& desc) {
    const HermSpace& sp = desc.space;
    if ((sp.ext && sp.ext->split) || (sp.quat && sp.quat->split))
        throw std::invalid_argument(
            "split coefficient data: use split_rewrite");
    TateField fld = coeff_field(ctx, sp);
    int blk_fdeg = (sp.tag == CaseTag::qGL || sp.tag == CaseTag::U) ? fld.f : 1;
    int w_fdeg = omega_is_pair(sp.tag) ? 1 : blk_fdeg;
    if (desc.omega.w1.fdeg != w_fdeg)
        throw std::invalid_argument("omega has the wrong residue degree");
    for (const auto& b : desc.tower)
        if (!b.abstract_gj && b.chi.fdeg != blk_fdeg)
            throw std::invalid_argument("block character over the wrong field");
}

}  // namespace

namespace {

RationalQS block_product(const LocalFieldCtx& ctx, const TateField& fld,
                         bool quaternionic, const GLBlock& block,
                         const MultChar& w1, const MultChar& w2,
                         const AddChar& psi, RationalQS* L_out,
                         RationalQS* eps_out) {
    long q = ctx.q();
    if (block.abstract_gj) {
        if (!(w1.quad_trivial() && w1.z.is_one() && w2.quad_trivial() &&
              w2.z.is_one()))
            throw std::invalid_argument(
                "abstract blocks only support the trivial omega");
        if (L_out) *L_out *= RationalQS::one(q);
        if (eps_out) *eps_out *= RationalQS::one(q);
        return block.gj;
    }
    int d = block.m * (quaternionic ? 2 : 1);
    MultChar c1 = block.chi.times(w1);
    MultChar c2 = block.chi.inverse().times(w2);
    RationalQS g = RationalQS::one(q);
    for (int j = 0; j < d; ++j) {
        long h = d - 1 - 2 * j;
        g *= tate_gamma(ctx, c1, psi, fld).shift_half(h);
        g *= tate_gamma(ctx, c2, psi, fld).shift_half(h);
        if (L_out) {
            *L_out *= tate_L(ctx, c1, fld).shift_half(h);
            *L_out *= tate_L(ctx, c2, fld).shift_half(h);
        }
        if (eps_out) {
            *eps_out *= tate_eps(ctx, c1, psi, fld).shift_half(h);
            *eps_out *= tate_eps(ctx, c2, psi, fld).shift_half(h);
        }
    }
    return g;
}

}  // namespace

RationalQS gamma_gl_block(const LocalFieldCtx& ctx, const HermSpace& space,
                          const GLBlock& block, const OmegaSpec& omega,
                          const AddChar& psi) {
    auto [w1, w2] = omega_pair(space, omega);
    TateField fld = (space.tag == CaseTag::qGL || space.tag == CaseTag::U)
                        ? coeff_field(ctx, space)
                        : TateField::base();
    return block_product(ctx, fld, is_quaternionic(space.tag), block, w1, w2,
                         psi, nullptr, nullptr);
}

GammaResult gamma_of_tower(const LocalFieldCtx& ctx,
                           const ReprDescriptor& desc, const AddChar& psi) {
    validate_tower(ctx, desc);
    const HermSpace& sp = desc.space;
    long q = ctx.q();
    auto [w1, w2] = omega_pair(sp, desc.omega);
    TateField blk_fld = (sp.tag == CaseTag::qGL || sp.tag == CaseTag::U)
                            ? coeff_field(ctx, sp)
                            : TateField::base();
    bool quat = is_quaternionic(sp.tag);

    GammaResult out = unit_result(q);
    for (const auto& b : desc.tower) {
        out.gamma *=
            block_product(ctx, blk_fld, quat, b, w1, w2, psi, &out.L, &out.eps);
        std::ostringstream os;
        os << "block m=" << b.m
           << (b.abstract_gj ? std::string(" [") + b.label + "]" : "");
        out.trace.push_back(os.str());
    }

    bool gl_type = sp.tag == CaseTag::GL || sp.tag == CaseTag::qGL ||
                   sp.tag == CaseTag::QGL;
    if (gl_type) {
        if (desc.leaf != LeafKind::TrivialGroup)
            throw std::invalid_argument("linear cases end in the trivial group");
        if (desc.consumed_rank() != sp.n)
            throw std::invalid_argument("tower does not exhaust the rank");
        return out;
    }

    int planes = 0;
    for (const auto& b : desc.tower) planes += b.m;
    HermSpace base = witt_descend(ctx, sp, planes);
    GammaResult lg;
    switch (desc.leaf) {
        case LeafKind::MinimalTrivial:
            lg = leaf_gamma(ctx, base, w1, psi);
            break;
        case LeafKind::Unramified:
            lg = unramified_leaf_gamma(ctx, base, desc.unram, w1, psi);
            break;
        case LeafKind::TrivialGroup:
            throw std::invalid_argument(
                "formed cases end in a minimal or unramified leaf");
    }
    out.gamma *= lg.gamma;
    out.L *= lg.L;
    out.eps *= lg.eps;
    for (auto& t : lg.trace) out.trace.push_back(std::move(t));
    return out;
}

GammaResult gamma_unramified(const LocalFieldCtx& ctx,
                             const ReprDescriptor& desc, const AddChar& psi) {
    validate_tower(ctx, desc);
    if (psi.level != 0)
        throw std::invalid_argument("unramified route needs a level-0 psi");
    const HermSpace& sp = desc.space;
    long q = ctx.q();
    auto [w1, w2] = omega_pair(sp, desc.omega);
    TateField fld = (sp.tag == CaseTag::qGL || sp.tag == CaseTag::U)
                        ? coeff_field(ctx, sp)
                        : TateField::base();
    if (fld.ramified)
        throw std::invalid_argument("unramified route needs unramified data");
    bool quat = is_quaternionic(sp.tag);

    std::vector<Coeff> eigen;
    auto push_char = [&](const MultChar& c, long half_shift) {
        if (c.conductor() != 0)
            throw std::invalid_argument("unramified route needs unramified "
                                        "characters");
        eigen.push_back(char_at_uniformizer(ctx, c, fld) *
                        Coeff::q_pow_half(q, fld.f * half_shift));
    };
    for (const auto& b : desc.tower) {
        if (b.abstract_gj)
            throw std::invalid_argument("unramified route needs concrete data");
        int d = b.m * (quat ? 2 : 1);
        for (int j = 0; j < d; ++j) {
            push_char(b.chi.times(w1), d - 1 - 2 * j);
            push_char(b.chi.inverse().times(w2), d - 1 - 2 * j);
        }
    }

    bool gl_type = sp.tag == CaseTag::GL || sp.tag == CaseTag::qGL ||
                   sp.tag == CaseTag::QGL;
    if (!gl_type) {
        int planes = 0;
        for (const auto& b : desc.tower) planes += b.m;
        HermSpace base = witt_descend(ctx, sp, planes);
        if (desc.leaf == LeafKind::Unramified) {
            size_t expected = base.tag == CaseTag::U
                                  ? static_cast<size_t>(base.n)
                                  : static_cast<size_t>(std_dimension(base));
            if (desc.unram.satake.size() != expected)
                throw std::invalid_argument("satake multiset length");
            for (const Coeff& z : desc.unram.satake)
                push_char(w1.times(MultChar{SQ1, z, fld.f}), 0);
        } else {
            switch (classify_minimal(ctx, base)) {
                case MinimalTag::Trivial:
                    if (base.tag == CaseTag::Sp || base.tag == CaseTag::Q1)
                        push_char(w1, 0);
                    break;
                case MinimalTag::SOa2:
                    push_char(w1, 0);
                    push_char(w1.times(quad_char(base.disc)), 0);
                    break;
                case MinimalTag::U1:
                    push_char(w1, 0);
                    break;
                default:
                    throw std::invalid_argument(
                        "base has no unramified trivial representation");
            }
        }
    } else if (desc.consumed_rank() != sp.n) {
        throw std::invalid_argument("tower does not exhaust the rank");
    }

    // L as one folded polynomial; gamma as the ratio of the reflected dual
    // polynomial and the polynomial itself
    RationalQS P = RationalQS::one(q);
    RationalQS Pd = RationalQS::one(q);
    for (const Coeff& e : eigen) {
        P *= RationalQS::from_laurent(q, {{0, Coeff(1)}, {fld.f, -e}},
                                      {{0, Coeff(1)}});
        Pd *= RationalQS::from_laurent(q, {{0, Coeff(1)}, {fld.f, -e.inv()}},
                                       {{0, Coeff(1)}});
    }
    GammaResult out = unit_result(q);
    out.gamma = P * Pd.reflect().inv();
    out.L = P.inv();
    out.eps = RationalQS::one(q);
    out.trace.push_back("unramified eigenvalue route");
    return out;
}

ReprDescriptor dual_descriptor(const ReprDescriptor& desc) {
    ReprDescriptor d = desc;
    for (auto& b : d.tower) {
        if (b.abstract_gj)
            std::swap(b.gj, b.gj_dual);
        else
            b.chi = b.chi.inverse();
    }
    d.omega = desc.omega.inverse();
    for (auto& z : d.unram.satake) z = z.inv();
    return d;
}

FEVerdict check_functional_equation(const LocalFieldCtx& ctx,
                                    const ReprDescriptor& desc,
                                    const AddChar& psi) {
    GammaResult g1 = gamma_of_descriptor(ctx, desc, psi);
    GammaResult g2 =
        gamma_of_descriptor(ctx, dual_descriptor(desc), psi.inverse(ctx));
    FEVerdict v;
    v.residual = g1.gamma * g2.gamma.reflect();
    v.pass = v.residual == RationalQS::one(ctx.q());
    return v;
}

GammaResult split_rewrite(const LocalFieldCtx& ctx, const ReprDescriptor& desc,
                          const AddChar& psi) {
    const HermSpace& sp = desc.space;
    bool ext_split = sp.ext && sp.ext->split;
    bool quat_split = sp.quat && sp.quat->split;
    if (!ext_split && !quat_split)
        throw std::invalid_argument("descriptor has no split data");
    for (const auto& b : desc.tower)
        if (!b.abstract_gj && b.chi.fdeg != 1)
            throw std::invalid_argument(
                "split coefficient characters live over F");

    auto base_rank_is_zero = [&]() {
        if (desc.leaf != LeafKind::MinimalTrivial)
            throw std::invalid_argument("split rewrite needs a trivial leaf");
        if (desc.consumed_rank() != sp.n)
            throw std::invalid_argument(
                "split rewrite needs a fully consumed rank");
    };

    switch (sp.tag) {
        case CaseTag::U: {
            base_rank_is_zero();
            if (!desc.omega.w2)
                throw std::invalid_argument(
                    "split E omega is a pair of F-characters");
            ReprDescriptor nd;
            nd.space = HermSpace{CaseTag::GL, sp.n};
            for (const auto& b : desc.tower) {
                nd.tower.push_back(b);
                GLBlock inv = b;
                inv.chi = b.chi.inverse();
                nd.tower.push_back(inv);
            }
            nd.leaf = LeafKind::TrivialGroup;
            nd.omega = desc.omega;
            GammaResult out = gamma_of_tower(ctx, nd, psi);
            out.trace.insert(out.trace.begin(), "split U -> GL rewrite");
            return out;
        }
        case CaseTag::qGL: {
            ReprDescriptor nd;
            nd.space = HermSpace{CaseTag::GL, sp.n};
            nd.tower = desc.tower;
            nd.leaf = LeafKind::TrivialGroup;
            if (!desc.omega.w2)
                throw std::invalid_argument(
                    "split E omega is a pair of F-characters");
            nd.omega = desc.omega;
            GammaResult r1 = gamma_of_tower(ctx, nd, psi);
            std::swap(nd.omega.w1, *nd.omega.w2);
            GammaResult r2 = gamma_of_tower(ctx, nd, psi);
            GammaResult out;
            out.gamma = r1.gamma * r2.gamma;
            out.L = r1.L * r2.L;
            out.eps = r1.eps * r2.eps;
            out.trace.push_back("split qGL -> GL x GL rewrite");
            return out;
        }
        case CaseTag::QGL: {
            ReprDescriptor nd;
            nd.space = HermSpace{CaseTag::GL, 2 * sp.n};
            for (const auto& b : desc.tower) {
                GLBlock nb = b;
                nb.m = 2 * b.m;
                nd.tower.push_back(nb);
            }
            nd.leaf = LeafKind::TrivialGroup;
            nd.omega = desc.omega;
            GammaResult out = gamma_of_tower(ctx, nd, psi);
            out.trace.insert(out.trace.begin(), "split QGL -> GL rewrite");
            return out;
        }
        case CaseTag::Q1: {
            ReprDescriptor nd;
            nd.space = HermSpace{CaseTag::Sp, 2 * sp.n};
            for (const auto& b : desc.tower) {
                GLBlock nb = b;
                nb.m = 2 * b.m;
                nd.tower.push_back(nb);
            }
            nd.leaf = desc.leaf;
            nd.unram = desc.unram;
            nd.omega = desc.omega;
            GammaResult out = gamma_of_tower(ctx, nd, psi);
            out.trace.insert(out.trace.begin(), "split Q1 -> Sp rewrite");
            return out;
        }
        case CaseTag::Qm1: {
            ReprDescriptor nd;
            nd.space = HermSpace{CaseTag::SO, 2 * sp.n};
            nd.space.disc = sp.disc;
            for (const auto& b : desc.tower) {
                GLBlock nb = b;
                nb.m = 2 * b.m;
                nd.tower.push_back(nb);
            }
            nd.leaf = desc.leaf;
            nd.unram = desc.unram;
            nd.omega = desc.omega;
            GammaResult out = gamma_of_tower(ctx, nd, psi);
            out.trace.insert(out.trace.begin(), "split Q-1 -> SO rewrite");
            return out;
        }
        default:
            throw std::invalid_argument("split rewrite does not apply");
    }
}

GammaResult gamma_of_descriptor(const LocalFieldCtx& ctx,
                                const ReprDescriptor& desc,
                                const AddChar& psi) {
    if ((desc.space.ext && desc.space.ext->split) ||
        (desc.space.quat && desc.space.quat->split))
        return split_rewrite(ctx, desc, psi);
    return gamma_of_tower(ctx, desc, psi);
}

std::string GammaResult::json() const {
    std::ostringstream os;
    os << "{\"gamma\":" << gamma.json() << ",\"L\":" << L.json()
       << ",\"eps\":" << eps.json() << ",\"trace\":[";
    for (size_t i = 0; i < trace.size(); ++i) {
        if (i) os << ",";
        os << "\"" << trace[i] << "\"";
    }
    os << "]}";
    return os.str();
}

}  // namespace lgf
