// Two-descent on y^2 = x^3 + A*x^2 + B*x over Q.
//
// A squarefree divisor class A1 of B lies in the image of the descent
// homomorphism iff
//
//     V^2 = A1*U^4 + A*U^2*W^2 + (B/A1)*W^4
//
// has an integer solution with U, V, W pairwise coprime, UW != 0 and
// gcd(A1, W) = gcd(B/A1, U) = 1. The class of 1 (from the point at
// infinity) and the class of B (from (0,0)) are members by definition.
//
// Membership of each remaining class is resolved by, in order:
//   1. negativity of the right-hand side over R,
//   2. insolubility modulo one of a fixed list of prime and 2-power
//      moduli, under the residue side conditions the global constraints
//      impose,
//   3. a brute-force search for a witness triple,
//   4. subgroup closure in Q*/Q*^2 against classes already resolved.
//
// |a(E)| * |abar(Ebar)| = 2^(rank+2) then converts image sizes into rank
// bounds. Every exclusion carries a replayable certificate and every
// confirmation carries a triple plus the curve point it induces.

#include "pqcurves/descent.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "parallel.hpp"
#include "pqcurves/intmath.hpp"
#include "pqcurves/residues.hpp"

namespace pqcurves {

size_t DescentReport::undecided_count() const {
    auto count = [](const std::vector<DescentClass>& t) {
        size_t n = 0;
        for (const auto& c : t)
            if (c.status == ClassStatus::Undecided) ++n;
        return n;
    };
    return count(trace_a) + count(trace_abar);
}

CurveAB isogenous_curve(const CurveAB& c) {
    return CurveAB(-2 * c.A, c.A * c.A - 4 * c.B);
}

std::vector<mpz_class> candidate_classes(const mpz_class& B) {
    if (B == 0) throw std::invalid_argument("candidate_classes: B must be nonzero");
    std::vector<mpz_class> primes;
    for (const auto& [p, e] : factor_integer(B)) primes.push_back(p);
    std::vector<mpz_class> divs{1};
    for (const auto& p : primes) {
        size_t n = divs.size();
        for (size_t i = 0; i < n; ++i) divs.push_back(divs[i] * p);
    }
    std::sort(divs.begin(), divs.end());
    std::vector<mpz_class> out;
    out.reserve(2 * divs.size());
    for (const auto& d : divs) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

std::vector<mpz_class> obstruction_moduli(const mpz_class& B, long moduli_bound) {
    std::vector<mpz_class> odd_b;
    for (const auto& [p, e] : factor_integer(B))
        if (p != 2) odd_b.push_back(p);
    std::vector<mpz_class> out = odd_b;
    out.insert(out.end(), {8, 16, 32, 64});
    for (long p = 3; p <= moduli_bound; p += 2) {
        mpz_class mp(p);
        if (!is_prime(mp)) continue;
        if (std::find(odd_b.begin(), odd_b.end(), mp) != odd_b.end()) continue;
        out.push_back(mp);
    }
    return out;
}

namespace {

mpz_class quotient_class(const mpz_class& a1, const mpz_class& B) {
    if (a1 == 0 || !mpz_divisible_p(B.get_mpz_t(), a1.get_mpz_t()))
        throw std::invalid_argument("descent: a1 must be a nonzero divisor of B");
    return B / a1;
}

long mod_long(const mpz_class& v, long m) {
    return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

// Exhaustive residue check of V^2 = a1*U^4 + A*U^2*W^2 + (B/a1)*W^4 over
// Z/m, m a prime or a power of 2. The side conditions of the global
// statement reduce mod the underlying prime P: no two of U, V, W both
// divisible by P, W a unit if P | a1, U a unit if P | B/a1.
bool locally_solvable(const mpz_class& a1, const mpz_class& A, const mpz_class& Ba1,
                      long m) {
    const long P = (m % 2 == 0) ? 2 : m;
    const long alpha = mod_long(a1, m);
    const long beta = mod_long(A, m);
    const long gamma = mod_long(Ba1, m);
    const bool u_must_be_unit = mpz_divisible_ui_p(Ba1.get_mpz_t(), P) != 0;
    const bool w_must_be_unit = mpz_divisible_ui_p(a1.get_mpz_t(), P) != 0;

    std::vector<char> sq_any(m, 0), sq_unit(m, 0);
    for (long v = 0; v < m; ++v) {
        long r = v * v % m;
        sq_any[r] = 1;
        if (v % P != 0) sq_unit[r] = 1;
    }
    std::vector<long> pow2(m), pow4(m);
    for (long u = 0; u < m; ++u) {
        pow2[u] = u * u % m;
        pow4[u] = pow2[u] * pow2[u] % m;
    }
    for (long u = 0; u < m; ++u) {
        bool pu = (u % P == 0);
        if (pu && u_must_be_unit) continue;
        for (long w = 0; w < m; ++w) {
            bool pw = (w % P == 0);
            if (pw && (pu || w_must_be_unit)) continue;
            long rhs = (alpha * pow4[u] % m + beta * (pow2[u] * pow2[w] % m) % m +
                        gamma * pow4[w] % m) %
                       m;
            if ((pu || pw) ? sq_unit[rhs] : sq_any[rhs]) return true;
        }
    }
    return false;
}

std::string obstruction_reason(const mpz_class& a1, const mpz_class& A,
                               const mpz_class& Ba1, const mpz_class& m) {
    if (m % 2 == 0)
        return "mod " + m.get_str() + ": no admissible residues (U,V,W) solve the quartic";
    mpz_class alpha = a1 % m, gamma = Ba1 % m, beta = A % m;
    if (beta == 0 && gamma == 0 && alpha != 0 && legendre(a1, m) == -1)
        return "mod " + m.get_str() + ": V^2 = " + a1.get_str() +
               "*U^4 with U prime to " + m.get_str() + " requires (" + a1.get_str() + "/" +
               m.get_str() + ") = 1, but the symbol is -1";
    if (beta == 0 && alpha == 0 && gamma != 0 && legendre(Ba1, m) == -1)
        return "mod " + m.get_str() + ": V^2 = " + Ba1.get_str() +
               "*W^4 with W prime to " + m.get_str() + " requires (" + Ba1.get_str() + "/" +
               m.get_str() + ") = 1, but the symbol is -1";
    return "mod " + m.get_str() + ": no admissible residues (U,V,W) solve the quartic";
}

}  // namespace

std::optional<Obstruction> real_place_obstruction(const mpz_class& a1, const mpz_class& A,
                                                  const mpz_class& B) {
    mpz_class Ba1 = quotient_class(a1, B);
    if (a1 > 0) return std::nullopt;
    bool definite = (A * A - 4 * B < 0) || (Ba1 < 0 && A <= 0);
    if (!definite) return std::nullopt;
    return Obstruction{0,
                       "real place: A1 < 0 and B/A1 < 0 make the right-hand side negative "
                       "for every nonzero (U, W)"};
}

std::optional<Obstruction> quartic_obstruction(const mpz_class& a1, const mpz_class& A,
                                               const mpz_class& B,
                                               const std::vector<mpz_class>& moduli) {
    mpz_class Ba1 = quotient_class(a1, B);
    for (const auto& m : moduli) {
        if (m <= 2) continue;
        if (m > 20000) continue;  // residue sweep is quadratic in m
        if (!locally_solvable(a1, A, Ba1, m.get_si()))
            return Obstruction{m, obstruction_reason(a1, A, Ba1, m)};
    }
    return std::nullopt;
}

std::optional<QuarticWitness> quartic_global_search(const mpz_class& a1, const mpz_class& A,
                                                    const mpz_class& B, long height) {
    mpz_class Ba1 = quotient_class(a1, B);
    for (long u = 1; u <= height; ++u) {
        mpz_class U(u), U2 = U * U, U4 = U2 * U2;
        if (gcd(mpz_class(abs(Ba1)), U) != 1) continue;
        for (long w = 1; w <= height; ++w) {
            mpz_class W(w);
            if (gcd(U, W) != 1) continue;
            if (gcd(mpz_class(abs(a1)), W) != 1) continue;
            mpz_class W2 = W * W;
            mpz_class t = a1 * U4 + A * U2 * W2 + Ba1 * W2 * W2;
            if (t < 0) continue;
            if (!mpz_perfect_square_p(t.get_mpz_t())) continue;
            mpz_class V;
            mpz_sqrt(V.get_mpz_t(), t.get_mpz_t());
            if (V == 0 && (u != 1 || w != 1)) continue;  // V = 0 forces U = W = 1
            return QuarticWitness{U, V, W};
        }
    }
    return std::nullopt;
}

CurvePoint witness_point(const CurveAB& c, const mpz_class& a1, const QuarticWitness& w) {
    QiRational U{mpq_class(w.U), mpq_class(0)}, V{mpq_class(w.V), mpq_class(0)},
        W{mpq_class(w.W), mpq_class(0)}, A1{mpq_class(a1), mpq_class(0)};
    QiRational W2 = W * W;
    QiRational X = A1 * U * U / W2;
    QiRational Y = A1 * U * V / (W2 * W);
    CurvePoint P{X, Y};
    if (!is_on_curve(c, P))
        throw std::logic_error("witness_point: derived point is off the curve");
    return P;
}

namespace {

// Recovers a quartic witness from a rational point with X != 0 whose
// descent class is a1. Returns nullopt when the induced triple fails the
// side conditions (possible only when B is not squarefree).
std::optional<QuarticWitness> witness_from_point(const CurveAB& c, const mpz_class& a1,
                                                 const CurvePoint& P) {
    if (P.is_infinity() || P.x().is_zero()) return std::nullopt;
    if (P.x().im() != 0 || P.y().im() != 0) return std::nullopt;
    mpq_class t = P.x().re() / mpq_class(a1);
    if (t <= 0) return std::nullopt;
    mpz_class num = t.get_num(), den = t.get_den(), U, W;
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_sqrt(U.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(W.get_mpz_t(), den.get_mpz_t());
    mpq_class v = P.y().re() * mpq_class(W * W * W) / (mpq_class(a1) * mpq_class(U));
    if (v.get_den() != 1) return std::nullopt;
    if (v == 0 && (U != 1 || W != 1)) return std::nullopt;  // V = 0 forces U = W = 1
    QuarticWitness wit{U, abs(v.get_num()), W};
    mpz_class Ba1 = c.B / a1;
    if (gcd(wit.U, wit.W) != 1) return std::nullopt;
    if (gcd(mpz_class(abs(a1)), wit.W) != 1) return std::nullopt;
    if (gcd(mpz_class(abs(Ba1)), wit.U) != 1) return std::nullopt;
    mpz_class check = a1 * wit.U * wit.U * wit.U * wit.U +
                      c.A * wit.U * wit.U * wit.W * wit.W +
                      Ba1 * wit.W * wit.W * wit.W * wit.W;
    if (check != wit.V * wit.V) return std::nullopt;
    return wit;
}

DescentClass resolve_class(const CurveAB& c, const mpz_class& a1, const mpz_class& b_class,
                           long height, const std::vector<mpz_class>& moduli) {
    DescentClass cls;
    cls.a1 = a1;
    if (a1 == 1) {
        cls.status = ClassStatus::Confirmed;
        cls.definitional = true;
        cls.note = "definitional: class of the point at infinity";
        cls.point = CurvePoint::infinity();
        return cls;
    }
    if (a1 == b_class) {
        cls.status = ClassStatus::Confirmed;
        cls.definitional = true;
        cls.note = "definitional: class of B from the 2-torsion point (0,0)";
        cls.point = CurvePoint{QiRational(0), QiRational(0)};
        return cls;
    }
    if (auto real = real_place_obstruction(a1, c.A, c.B)) {
        cls.status = ClassStatus::Excluded;
        cls.obstruction = real;
        return cls;
    }
    if (auto obs = quartic_obstruction(a1, c.A, c.B, moduli)) {
        cls.status = ClassStatus::Excluded;
        cls.obstruction = obs;
        return cls;
    }
    if (auto wit = quartic_global_search(a1, c.A, c.B, height)) {
        cls.status = ClassStatus::Confirmed;
        cls.witness = wit;
        cls.point = witness_point(c, a1, *wit);
        cls.note = "quartic witness found by search";
        return cls;
    }
    return cls;  // Undecided
}

// Subgroup closure in Q*/Q*^2: for x unresolved and cls confirmed, the
// status of squarefree(x * cls) transfers to x. Runs to a fixpoint.
void closure_pass(const CurveAB& c, std::vector<DescentClass>& classes) {
    std::map<mpz_class, size_t> index;
    for (size_t i = 0; i < classes.size(); ++i) index[classes[i].a1] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& cls : classes) {
            if (cls.status != ClassStatus::Undecided) continue;
            for (const auto& conf : classes) {
                if (conf.status != ClassStatus::Confirmed) continue;
                mpz_class prod = squarefree_part(cls.a1 * conf.a1);
                auto it = index.find(prod);
                if (it == index.end()) continue;
                const DescentClass& target = classes[it->second];
                if (target.status == ClassStatus::Excluded) {
                    cls.status = ClassStatus::Excluded;
                    cls.note = "subgroup closure: " + cls.a1.get_str() + " = (" +
                               prod.get_str() + ")*(" + conf.a1.get_str() +
                               ") mod squares with " + prod.get_str() + " excluded";
                    changed = true;
                    break;
                }
                if (target.status == ClassStatus::Confirmed && target.point && conf.point) {
                    cls.status = ClassStatus::Confirmed;
                    cls.note = "subgroup closure: " + cls.a1.get_str() + " = (" +
                               prod.get_str() + ")*(" + conf.a1.get_str() + ") mod squares";
                    CurvePoint sum = add(c, *target.point, *conf.point);
                    if (!sum.is_infinity() && !sum.x().is_zero()) {
                        cls.point = sum;
                        cls.witness = witness_from_point(c, cls.a1, sum);
                    }
                    changed = true;
                    break;
                }
            }
        }
    }
}

int log2_exact(const mpz_class& n) {
    assert(n > 0 && mpz_popcount(n.get_mpz_t()) == 1);
    return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
}

// Size of the subgroup of Q*/Q*^2 generated by the given squarefree reps.
size_t generated_subgroup_size(std::vector<mpz_class> gens) {
    std::vector<mpz_class> elems{1};
    for (const auto& g : gens) {
        if (std::find(elems.begin(), elems.end(), g) != elems.end()) continue;
        size_t n = elems.size();
        for (size_t i = 0; i < n; ++i) elems.push_back(squarefree_part(elems[i] * g));
    }
    return elems.size();
}

}  // namespace

std::vector<DescentClass> descent_image(const CurveAB& c, long height, long moduli_bound) {
    const std::vector<mpz_class> cands = candidate_classes(c.B);
    const std::vector<mpz_class> moduli = obstruction_moduli(c.B, moduli_bound);
    const mpz_class b_class = squarefree_part(c.B);
    auto classes = detail::parallel_map(cands, [&](const mpz_class& a1) {
        return resolve_class(c, a1, b_class, height, moduli);
    });
    closure_pass(c, classes);
    return classes;
}

DescentReport rank_bounds(const CurveAB& c, long height, long moduli_bound) {
    DescentReport rep{c, isogenous_curve(c)};
    rep.trace_a = descent_image(rep.curve, height, moduli_bound);
    rep.trace_abar = descent_image(rep.isogenous, height, moduli_bound);
    auto collect = [](const std::vector<DescentClass>& t, ClassStatus want) {
        std::vector<mpz_class> out;
        for (const auto& cls : t)
            if (cls.status == want) out.push_back(cls.a1);
        return out;
    };
    rep.image_a = collect(rep.trace_a, ClassStatus::Confirmed);
    rep.image_abar = collect(rep.trace_abar, ClassStatus::Confirmed);
    mpz_class lower_prod = mpz_class(rep.image_a.size()) * mpz_class(rep.image_abar.size());
    rep.rank_lower = log2_exact(lower_prod) - 2;
    auto upper_size = [&collect](const std::vector<DescentClass>& t) {
        auto gens = collect(t, ClassStatus::Confirmed);
        auto und = collect(t, ClassStatus::Undecided);
        gens.insert(gens.end(), und.begin(), und.end());
        return generated_subgroup_size(std::move(gens));
    };
    mpz_class upper_prod =
        mpz_class(upper_size(rep.trace_a)) * mpz_class(upper_size(rep.trace_abar));
    rep.rank_upper = log2_exact(upper_prod) - 2;
    return rep;
}

RankRange rank_over_qi(const CurveAB& c, long height, long moduli_bound) {
    DescentReport base = rank_bounds(c, height, moduli_bound);
    CurveAB twist(-c.A, c.B);
    if (twist == c) return {2 * base.rank_lower, 2 * base.rank_upper};
    DescentReport tw = rank_bounds(twist, height, moduli_bound);
    return {base.rank_lower + tw.rank_lower, base.rank_upper + tw.rank_upper};
}

DescentReport descent_trace(const CurveAB& c) { return rank_bounds(c); }

}  // namespace pqcurves
