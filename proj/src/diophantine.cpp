#include "pqcurves/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"
#include "pqcurves/torsion.hpp"

namespace pqcurves {

namespace {

bool is_unit_value(const GaussianInt& u) { return u.norm() == 1; }

std::string delta_str(const GaussianInt& delta) {
    if (delta == GaussianInt(1)) return "";
    if (delta == GaussianInt(-1)) return "-";
    if (delta == GaussianInt::i()) return "i*";
    return "-i*";
}

}  // namespace

std::string EquationInstance::equation_str() const {
    std::string lhs = "x^4 " + std::string(sign_pq >= 0 ? "+" : "-") + " " +
                      coefficient().get_str() + "*y^4";
    std::string rhs = delta_str(delta);
    if (two_exp > 0) rhs += "2^" + std::to_string(two_exp) + "*";
    rhs += "z^2";
    return lhs + " = " + rhs;
}

CanonicalizeResult canonicalize(const EquationInstance& inst) {
    if (!is_unit_value(inst.delta))
        throw std::invalid_argument("canonicalize: delta must be a unit");
    CanonicalizeResult res;
    res.canonical = inst;
    res.canonical.two_exp = 0;
    res.z_pow2 = inst.two_exp / 2;
    res.z_lambda = inst.two_exp % 2 == 1;
    if (res.z_lambda) {
        // 2 = -i*(1+i)^2, so delta*2^(2k+1) = (delta*-i) * ((1+i)*2^k)^2
        res.canonical.delta = inst.delta * GaussianInt(0, -1);
    }
    std::string factor;
    if (res.z_lambda) factor += "(1+i)*";
    if (res.z_pow2 > 0) factor += "2^" + std::to_string(res.z_pow2) + "*";
    res.z_transform = "z' = " + (factor.empty() ? std::string() : factor) + "z";
    return res;
}

GaussianInt transform_z(const CanonicalizeResult& c, const GaussianInt& z) {
    GaussianInt out = z;
    if (c.z_lambda) out = out * GaussianInt::lambda();
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, c.z_pow2);
    return out * two_k;
}

namespace {

GaussianInt instance_rhs(const EquationInstance& inst, const GaussianInt& z) {
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, inst.two_exp);
    return inst.delta * (z * z) * two_n;
}

GaussianInt instance_lhs(const EquationInstance& inst, const GaussianInt& x,
                         const GaussianInt& y) {
    GaussianInt x2 = x * x, y2 = y * y;
    return x2 * x2 + (y2 * y2) * (inst.coefficient() * inst.sign_pq);
}

}  // namespace

bool is_trivial_solution(const GaussianInt& x, const GaussianInt& y, const GaussianInt& z,
                         const EquationInstance& inst) {
    if (instance_lhs(inst, x, y) != instance_rhs(inst, z))
        throw std::invalid_argument("is_trivial_solution: not a solution of the instance");
    return (x * y).is_zero();
}

namespace {

// first-quadrant representatives (plus zero) of norm <= bound, in
// (norm, re, im) order
std::vector<GaussianInt> canonical_reps(long bound) {
    std::vector<GaussianInt> out;
    out.push_back(GaussianInt(0));
    for (long a = 1; a * a <= bound; ++a)
        for (long b = 0; a * a + b * b <= bound; ++b) out.push_back(GaussianInt(mpz_class(a), mpz_class(b)));
    std::sort(out.begin(), out.end(), [](const GaussianInt& u, const GaussianInt& v) {
        mpz_class nu = u.norm(), nv = v.norm();
        if (nu != nv) return nu < nv;
        return u < v;
    });
    return out;
}

std::vector<GaussianInt> unit_orbit(const GaussianInt& g) {
    if (g.is_zero()) return {g};
    std::vector<GaussianInt> out;
    for (const auto& u : GaussianInt::units()) out.push_back(g * u);
    return out;
}

}  // namespace

std::vector<SolutionRecord> brute_force_search(const EquationInstance& inst,
                                               long norm_bound) {
    if (norm_bound < 1) throw std::invalid_argument("brute_force_search: bound must be >= 1");
    if (!is_unit_value(inst.delta))
        throw std::invalid_argument("brute_force_search: delta must be a unit");
    const std::vector<GaussianInt> reps = canonical_reps(norm_bound);
    const mpz_class coeff = inst.coefficient() * inst.sign_pq;
    std::vector<GaussianInt> fourth(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) {
        GaussianInt sq = reps[i] * reps[i];
        fourth[i] = sq * sq;
    }
    const GaussianInt delta_inv = inst.delta.conj();  // unit inverse
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, inst.two_exp);

    std::vector<size_t> indices(reps.size());
    for (size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    auto shard = [&](size_t xi) {
        std::vector<SolutionRecord> found;
        for (size_t yi = 0; yi < reps.size(); ++yi) {
            GaussianInt t = fourth[xi] + fourth[yi] * coeff;
            GaussianInt zz = t * delta_inv;
            if (inst.two_exp > 0) {
                if (!mpz_divisible_p(zz.re().get_mpz_t(), two_n.get_mpz_t()) ||
                    !mpz_divisible_p(zz.im().get_mpz_t(), two_n.get_mpz_t()))
                    continue;
                zz = GaussianInt(zz.re() / two_n, zz.im() / two_n);
            }
            auto z = sqrt_exact(zz);
            if (!z) continue;
            for (const auto& x : unit_orbit(reps[xi]))
                for (const auto& y : unit_orbit(reps[yi]))
                    found.push_back({x, y, *z, (x * y).is_zero()});
        }
        return found;
    };
    auto per_shard = detail::parallel_map(indices, shard);
    std::vector<SolutionRecord> out;
    for (auto& chunk : per_shard)
        out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

CurveAB reduction_curve(const EquationInstance& inst) {
    mpz_class pq = inst.coefficient();
    bool delta_real = inst.delta.im() == 0;
    // real delta keeps the sign of pq; imaginary delta flips it
    mpz_class B = delta_real ? inst.sign_pq * pq : -inst.sign_pq * pq;
    return CurveAB(0, B);
}

CurvePoint solution_to_point(const GaussianInt& x, const GaussianInt& y,
                             const GaussianInt& z, const EquationInstance& inst) {
    if (inst.two_exp != 0)
        throw std::invalid_argument("solution_to_point: instance must be canonical (n = 0)");
    if (is_trivial_solution(x, y, z, inst))
        throw std::invalid_argument("solution_to_point: trivial solution has no point");
    QiRational a = QiRational(x) / QiRational(y);
    QiRational b = QiRational(z) / (QiRational(y) * QiRational(y));
    QiRational X, Y;
    const QiRational iu{mpq_class(0), mpq_class(1)};
    if (inst.delta == GaussianInt(1)) {
        X = a * a;
        Y = a * b;
    } else if (inst.delta == GaussianInt(-1)) {
        X = a * a;
        Y = iu * a * b;
    } else if (inst.delta == GaussianInt::i()) {
        X = iu * a * a;
        Y = a * b;
    } else {
        X = -(iu * a * a);
        Y = a * b;
    }
    CurvePoint P{X, Y};
    CurveAB curve = reduction_curve(inst);
    if (!is_on_curve(curve, P))
        throw std::logic_error("solution_to_point: constructed point is off the curve");
    if (X.is_zero())
        throw std::logic_error("solution_to_point: nontrivial solution produced X = 0");
    return P;
}

bool VerificationReport::all_variants_trivial() const {
    return std::all_of(variants.begin(), variants.end(),
                       [](const VariantResult& v) { return v.pass(); });
}

VerificationReport verify_theorem_instance(const PrimePair& pair, long norm_bound) {
    if (auto bad = validate_prime_pair(pair.p, pair.q))
        throw std::invalid_argument("verify_theorem_instance: " + *bad);
    VerificationReport rep;
    rep.pair = pair;
    rep.norm_bound = norm_bound;
    std::vector<EquationInstance> insts;
    for (unsigned n : {0u, 1u, 2u, 3u, 4u})
        for (int sign : {+1, -1})
            for (const auto& delta : GaussianInt::units())
                insts.push_back({pair.p, pair.q, sign, delta, n});
    for (const auto& inst : insts) {
        VariantResult vr;
        vr.instance = inst;
        for (auto& rec : brute_force_search(inst, norm_bound)) {
            if (rec.trivial)
                ++vr.trivial_count;
            else
                vr.nontrivial.push_back(rec);
        }
        rep.variants.push_back(std::move(vr));
    }
    mpz_class pq = mpz_class(pair.p) * pair.q;
    rep.rank_qi_plus = rank_over_qi(CurveAB(0, pq));
    rep.rank_qi_minus = rank_over_qi(CurveAB(0, -pq));
    rep.torsion_z2 = verify_torsion_z2(pair);
    return rep;
}

}  // namespace pqcurves
