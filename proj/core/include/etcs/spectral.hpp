#pragma once

#include <functional>
#include <tuple>
#include <vector>

#include "etcs/error.hpp"
#include "etcs/matrix.hpp"
#include "etcs/poly.hpp"

namespace etcs {

// Divides p by (x - r) as often as it divides evenly; returns the multiplicity.
template <class F>
unsigned strip_linear_root(Poly<F>& p, const F& r) {
    unsigned mult = 0;
    const Poly<F> lin({F(0) - r, F(1)});
    while (p.degree() >= 1 && sgn(p(r)) == 0) {
        p = divmod(p, lin).first;
        ++mult;
    }
    return mult;
}

template <class F>
bool is_palindromic(const Poly<F>& p) {
    const int d = p.degree();
    if (d < 0) return false;
    for (int i = 0; 2 * i <= d; ++i)
        if (!(p.coeff(i) == p.coeff(d - i))) return false;
    return true;
}

// For palindromic p of even degree 2m, the polynomial q with
// q((x + 1/x)/2) = p(x) / x^m, via p(x)/x^m = a_m + sum a_{m+i} (x^i + x^-i)
// and x^i + x^-i = 2 T_i((x + 1/x)/2). Roots e^{+-i theta} of p on the unit
// circle correspond to roots cos(theta) of q.
template <class F>
Poly<F> halved_palindrome(const Poly<F>& p) {
    const int d = p.degree();
    if (d < 0 || d % 2 != 0) fail_math("halved palindrome needs even degree");
    const int m = d / 2;
    Poly<F> q = Poly<F>::constant(p.coeff(m));
    for (int i = 1; i <= m; ++i)
        q = q + chebyshev_t<F>(static_cast<unsigned>(i)) * F(p.coeff(m + i) * F(2));
    return q;
}

// One squarefree cluster of rotation eigenvalues: the factor s whose roots
// are the cosines, its multiplicity in the characteristic polynomial, and
// isolating intervals for its real roots (all in (-1, 1)).
template <class F>
struct RotationCluster {
    Poly<F> factor;
    unsigned multiplicity = 0;
    std::vector<RootInterval> cosines;
};

template <class F>
struct UnitCircleSplit {
    unsigned mult_plus_one = 0;  // eigenvalue +1
    unsigned mult_minus_one = 0; // eigenvalue -1
    std::vector<RotationCluster<F>> rotations;
};

// Splits the characteristic polynomial of an isometry into eigenvalue 1,
// eigenvalue -1, and conjugate pairs e^{+-i theta}; errors if any root is off
// the unit circle or the factor structure is inconsistent with an isometry.
template <class F>
UnitCircleSplit<F> split_unit_circle(Poly<F> p, const char* who) {
    UnitCircleSplit<F> out;
    if (p.degree() < 0) fail_math(std::string(who) + ": zero polynomial");
    out.mult_plus_one = strip_linear_root(p, F(1));
    out.mult_minus_one = strip_linear_root(p, F(Rat(-1)));
    if (p.degree() == 0) return out;
    if (p.degree() % 2 != 0 || !is_palindromic(p))
        fail_math(std::string(who) + ": eigenvalues leave the unit circle");
    const unsigned m = static_cast<unsigned>(p.degree() / 2);
    const Poly<F> q = halved_palindrome(p);
    unsigned found = 0;
    for (auto& [s, mult] : squarefree_decomposition(q)) {
        RotationCluster<F> cluster;
        cluster.factor = s;
        cluster.multiplicity = mult;
        for (auto& r : isolate_real_roots(s)) {
            // each cosine must lie strictly inside (-1, 1); +-1 were stripped
            const Rat one(1);
            RootInterval iv = r;
            if (iv.exact) {
                if (rat_abs(*iv.exact) >= one)
                    fail_math(std::string(who) + ": eigenvalues leave the unit circle");
            } else {
                while (!iv.exact && !(Rat(-1) < iv.lo && iv.hi < one)) {
                    if (iv.sup() <= Rat(-1) || iv.inf() >= one)
                        fail_math(std::string(who) + ": eigenvalues leave the unit circle");
                    refine_root(s, iv);
                }
                if (iv.exact && rat_abs(*iv.exact) >= one)
                    fail_math(std::string(who) + ": eigenvalues leave the unit circle");
            }
            cluster.cosines.push_back(iv);
            found += mult;
        }
        if (!cluster.cosines.empty()) out.rotations.push_back(std::move(cluster));
    }
    if (found != m)
        fail_math(std::string(who) + ": eigenvalues leave the unit circle");
    return out;
}

// Lifts a factor s of the halved palindrome back to the unit circle:
// S(x) = x^d s((x + 1/x)/2) 2^d, whose roots are the e^{+-i phi} with
// cos phi running over the roots of s.
template <typename F>
Poly<F> unhalved_factor(const Poly<F>& s) {
    const int d = s.degree();
    const Poly<F> x2p1({F(1), F(0), F(1)});
    const Poly<F> twox({F(0), F(Rat(2))});
    Poly<F> out;
    for (int i = 0; i <= d; ++i)
        out = out + poly_pow(x2p1, static_cast<unsigned>(i)) *
                        poly_pow(twox, static_cast<unsigned>(d - i)) * s.coeff(i);
    return out;
}

// Per-root signature splitting. base is a symmetric bilinear form on a space
// where the self-adjoint operator T acts with minimal polynomial dividing the
// squarefree `factor`; the space splits into base-orthogonal eigenspaces of T,
// one per real root c_j of factor (given as isolated intervals, ascending).
// The signature of base restricted to the c_j eigenspace is returned in
// delta[j]. Letting h_m run over products of (x - t) for separators t placed
// between consecutive roots, sig(base * h_m(T)) = sum_j sgn(h_m(c_j)) delta_j,
// and the sign matrix over m = 0..d-1 is unit triangular up to column flips,
// hence invertible: delta is solved exactly from the d measured signatures.
// Every measured form must be symmetric and nonsingular (inertia_fn reports
// zero index 0); otherwise the hypotheses fail and an error is thrown.
template <typename F>
std::vector<int> per_root_signatures(const Mat<F>& base, const Mat<F>& T,
                                     const Poly<F>& factor,
                                     std::vector<RootInterval> cosines,
                                     const std::function<Inertia(const Mat<F>&)>& inertia_fn,
                                     const char* who) {
    const size_t d = cosines.size();
    if (d == 0) return {};
    std::vector<Rat> seps = root_separators(factor, cosines);
    // sigma[m] = signature of base * h_m(T), h_0 = 1
    std::vector<Rat> sigma(d);
    Mat<F> h = Mat<F>::identity(base.n);
    for (size_t m = 0; m < d; ++m) {
        if (m > 0) {
            // h *= (T - t_{m-1})
            Mat<F> shift = T;
            for (size_t i = 0; i < shift.n; ++i) shift(i, i) = shift(i, i) - F(seps[m - 1]);
            h = h * shift;
        }
        const Mat<F> form = base * h;
        if (!form.is_symmetric()) fail_math(std::string(who) + ": decomposition hypothesis violated");
        const Inertia in = inertia_fn(form);
        if (in.zero != 0) fail_math(std::string(who) + ": decomposition hypothesis violated");
        sigma[m] = Rat(in.signature());
    }
    // sgn(h_m(c_j)): roots above the first m separators contribute +1, the
    // j-th root sits below separators t_{j+1}.. so picks up (-1)^(m-j) ... the
    // closed form is: sign = +1 for j >= m, (-1)^(m-j) for j < m.
    RatMat C(d, d);
    for (size_t m = 0; m < d; ++m)
        for (size_t j = 0; j < d; ++j)
            C(m, j) = (j >= m) ? Rat(1) : Rat(((m - j) % 2 == 0) ? 1 : -1);
    RatMat rhs(d, 1);
    for (size_t m = 0; m < d; ++m) rhs(m, 0) = sigma[m];
    const RatMat sol = solve_exact(C, rhs);
    std::vector<int> delta(d);
    for (size_t j = 0; j < d; ++j) {
        if (!is_integral(sol(j, 0))) fail_math(std::string(who) + ": decomposition hypothesis violated");
        delta[j] = static_cast<int>(rat_num(sol(j, 0)).get_si());
    }
    return delta;
}

} // namespace etcs
