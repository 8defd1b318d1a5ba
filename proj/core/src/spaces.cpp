#include "lgf/spaces.hpp"

#include <sstream>
#include <stdexcept>

namespace lgf {

const char* case_label(CaseTag tag) {
    switch (tag) {
        case CaseTag::GL: return "GL";
        case CaseTag::SO: return "SO";
        case CaseTag::Sp: return "Sp";
        case CaseTag::qGL: return "qGL";
        case CaseTag::U: return "U";
        case CaseTag::QGL: return "QGL";
        case CaseTag::Q1: return "Q1";
        case CaseTag::Qm1: return "Q-1";
    }
    return "?";
}

std::optional<CaseTag> case_from_label(const std::string& s) {
    if (s == "GL") return CaseTag::GL;
    if (s == "SO") return CaseTag::SO;
    if (s == "Sp") return CaseTag::Sp;
    if (s == "qGL") return CaseTag::qGL;
    if (s == "U") return CaseTag::U;
    if (s == "QGL") return CaseTag::QGL;
    if (s == "Q1") return CaseTag::Q1;
    if (s == "Q-1") return CaseTag::Qm1;
    return std::nullopt;
}

int std_dimension(const HermSpace& space) {
    int n = space.n;
    switch (space.tag) {
        case CaseTag::GL:
        case CaseTag::U:
        case CaseTag::Qm1:
            return 2 * n;
        case CaseTag::SO:
            return 2 * (n / 2);
        case CaseTag::Sp:
            return n + 1;
        case CaseTag::qGL:
        case CaseTag::QGL:
            return 4 * n;
        case CaseTag::Q1:
            return 2 * n + 1;
    }
    return 0;
}

namespace {

SquareClass pow_class(SquareClass c, int e) {
    return (e % 2) ? c : SQ1;
}

void validate_coeff_data(CaseTag tag, const std::optional<ExtData>& ext,
                         const std::optional<QuatData>& quat) {
    if (has_quadratic_ext(tag) && !ext)
        throw std::invalid_argument("case requires quadratic extension data");
    if (is_quaternionic(tag) && !quat)
        throw std::invalid_argument("case requires quaternion algebra data");
    if (!has_quadratic_ext(tag) && ext)
        throw std::invalid_argument("extension data not meaningful for case");
    if (!is_quaternionic(tag) && quat)
        throw std::invalid_argument("quaternion data not meaningful for case");
}

/// normalization factor disc / det as a square class
SquareClass disc_normalizer(const LocalFieldCtx& ctx, CaseTag tag, int n) {
    SquareClass m1 = ctx.class_minus_one();
    switch (tag) {
        case CaseTag::SO:
        case CaseTag::Sp:
            return pow_class(m1, n * (n - 1) / 2) *
                   pow_class(ctx.class_of_int(2), n);
        case CaseTag::U:
            return pow_class(m1, n * (n - 1) / 2);
        case CaseTag::Q1:
        case CaseTag::Qm1:
            return pow_class(m1, n);
        default:
            return SQ1;
    }
}

}  // namespace

SquareClass det_class(const LocalFieldCtx& ctx, const HermSpace& space) {
    return space.disc * disc_normalizer(ctx, space.tag, space.n);
}

SquareClass disc_from_det(const LocalFieldCtx& ctx, CaseTag tag, int n,
                          SquareClass det) {
    return det * disc_normalizer(ctx, tag, n);
}

bool compute_anisotropic(const LocalFieldCtx& ctx, const HermSpace& space) {
    SquareClass m1 = ctx.class_minus_one();
    switch (space.tag) {
        case CaseTag::GL:
        case CaseTag::qGL:
        case CaseTag::QGL:
        case CaseTag::Sp:
            return false;
        case CaseTag::SO: {
            SquareClass d = det_class(ctx, space);
            switch (space.n) {
                case 0: return false;
                case 1: return true;
                case 2: return !(m1 * d).is_one();
                case 3: return space.hasse != ctx.hilbert(m1, m1 * d);
                case 4: return d.is_one() && space.hasse != ctx.hilbert(m1, m1);
                default: return false;
            }
        }
        case CaseTag::U: {
            if (space.ext->split || space.n == 0 || space.n >= 3) return false;
            if (space.n == 1) return true;
            return ctx.hilbert(space.ext->d, space.disc) == -1;
        }
        case CaseTag::Q1:
        case CaseTag::Qm1: {
            if (space.quat->split || space.n == 0) return false;
            if (space.n == 1)
                return ctx.hilbert(space.quat->a, space.quat->b) == -1;
            return false;
        }
    }
    return false;
}

HermSpace from_diagonal(const LocalFieldCtx& ctx, CaseTag tag,
                        const std::vector<SquareClass>& entries,
                        std::optional<ExtData> ext,
                        std::optional<QuatData> quat) {
    validate_coeff_data(tag, ext, quat);
    HermSpace space;
    space.tag = tag;
    space.n = static_cast<int>(entries.size());
    space.ext = ext;
    space.quat = quat;

    SquareClass det = SQ1;
    for (SquareClass e : entries) det = det * e;
    space.disc = disc_from_det(ctx, tag, space.n, det);

    if (tag == CaseTag::SO) {
        int h = 1;
        for (size_t i = 0; i < entries.size(); ++i)
            for (size_t j = i + 1; j < entries.size(); ++j)
                h *= ctx.hilbert(entries[i], entries[j]);
        space.hasse = h;
    }
    if (tag == CaseTag::U && !ext->split)
        space.eps = ctx.hilbert(ext->d, space.disc);

    space.anisotropic = compute_anisotropic(ctx, space);
    return space;
}

const char* minimal_label(MinimalTag tag) {
    switch (tag) {
        case MinimalTag::Trivial: return "trivial";
        case MinimalTag::SOa2: return "SOa2";
        case MinimalTag::SOa3: return "SOa3";
        case MinimalTag::SOa4: return "SOa4";
        case MinimalTag::U1: return "U1";
        case MinimalTag::Ura2: return "Ura2";
        case MinimalTag::Q1n1: return "Q1n1";
        case MinimalTag::Qm1n1: return "Qm1n1";
        case MinimalTag::NotMinimal: return "not-minimal";
    }
    return "?";
}

MinimalTag classify_minimal(const LocalFieldCtx& ctx, const HermSpace& space) {
    switch (space.tag) {
        case CaseTag::SO:
            if (space.n <= 1) return MinimalTag::Trivial;
            if (!compute_anisotropic(ctx, space)) return MinimalTag::NotMinimal;
            if (space.n == 2) return MinimalTag::SOa2;
            if (space.n == 3) return MinimalTag::SOa3;
            if (space.n == 4) return MinimalTag::SOa4;
            return MinimalTag::NotMinimal;
        case CaseTag::Sp:
            return space.n == 0 ? MinimalTag::Trivial : MinimalTag::NotMinimal;
        case CaseTag::U:
            if (space.n == 0) return MinimalTag::Trivial;
            if (space.ext->split) return MinimalTag::NotMinimal;
            if (space.n == 1) return MinimalTag::U1;
            if (space.n == 2 && ctx.classify_quad_ext(space.ext->d).ramified &&
                compute_anisotropic(ctx, space))
                return MinimalTag::Ura2;
            return MinimalTag::NotMinimal;
        case CaseTag::Q1:
            if (space.n == 0) return MinimalTag::Trivial;
            if (space.n == 1 && compute_anisotropic(ctx, space))
                return MinimalTag::Q1n1;
            return MinimalTag::NotMinimal;
        case CaseTag::Qm1:
            if (space.n == 0) return MinimalTag::Trivial;
            if (space.n == 1 && compute_anisotropic(ctx, space))
                return MinimalTag::Qm1n1;
            return MinimalTag::NotMinimal;
        default:
            return MinimalTag::NotMinimal;
    }
}

SquareClass disc_of_nilpotent(const LocalFieldCtx& ctx, int n,
                              SquareClass nv) {
    if (n == 0) return SQ1;
    return pow_class(ctx.class_minus_one(), n) * nv;
}

HermSpace witt_descend(const LocalFieldCtx& ctx, const HermSpace& space,
                       int k) {
    if (k == 0) return space;
    HermSpace base = space;
    SquareClass m1 = ctx.class_minus_one();
    switch (space.tag) {
        case CaseTag::GL:
        case CaseTag::qGL:
        case CaseTag::QGL:
            if (k > space.n) throw std::invalid_argument("rank underflow");
            base.n = space.n - k;
            return base;
        case CaseTag::SO: {
            if (2 * k > space.n) throw std::invalid_argument("rank underflow");
            base.n = space.n - 2 * k;
            // det V = det K * (-1)^k; Hasse: c(K + H^k) =
            // c(K) c(H^k) (det K, det H^k) with c(H^k) = (-1,-1)^{k(k-1)/2}
            SquareClass detK = det_class(ctx, space) * pow_class(m1, k);
            base.disc = disc_from_det(ctx, space.tag, base.n, detK);
            int h = space.hasse;
            if ((k * (k - 1) / 2) % 2) h *= ctx.hilbert(m1, m1);
            if (k % 2) h *= ctx.hilbert(detK, m1);
            base.hasse = h;
            base.anisotropic = compute_anisotropic(ctx, base);
            return base;
        }
        case CaseTag::Sp: {
            if (2 * k > space.n) throw std::invalid_argument("rank underflow");
            base.n = space.n - 2 * k;
            base.anisotropic = false;
            return base;
        }
        case CaseTag::U: {
            if (2 * k > space.n) throw std::invalid_argument("rank underflow");
            base.n = space.n - 2 * k;
            SquareClass detK = det_class(ctx, space) * pow_class(m1, k);
            base.disc = disc_from_det(ctx, space.tag, base.n, detK);
            if (!space.ext->split)
                base.eps = ctx.hilbert(space.ext->d, base.disc);
            base.anisotropic = compute_anisotropic(ctx, base);
            return base;
        }
        case CaseTag::Q1:
        case CaseTag::Qm1: {
            if (2 * k > space.n) throw std::invalid_argument("rank underflow");
            base.n = space.n - 2 * k;
            // reduced norms of hyperbolic entries pair into squares
            base.disc = space.disc * pow_class(m1, 2 * k);
            base.anisotropic = compute_anisotropic(ctx, base);
            return base;
        }
    }
    return base;
}

std::string HermSpace::json() const {
    std::ostringstream os;
    os << "{\"case\":\"" << case_label(tag) << "\",\"n\":" << n;
    if (ext) {
        os << ",\"ext\":{\"split\":" << (ext->split ? "true" : "false");
        if (!ext->split) os << ",\"d\":\"" << ext->d.label() << "\"";
        os << "}";
    }
    if (quat) {
        os << ",\"quat\":{\"split\":" << (quat->split ? "true" : "false");
        if (!quat->split)
            os << ",\"a\":\"" << quat->a.label() << "\",\"b\":\""
               << quat->b.label() << "\"";
        os << "}";
    }
    os << ",\"disc\":\"" << disc.label() << "\",\"hasse\":" << hasse
       << ",\"eps\":" << eps
       << ",\"anisotropic\":" << (anisotropic ? "true" : "false") << "}";
    return os.str();
}

}  // namespace lgf
