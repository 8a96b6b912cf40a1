#ifndef BPP_SYMEXPAND_HPP
#define BPP_SYMEXPAND_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bpp/combinat.hpp"
#include "bpp/polyring.hpp"

namespace bpp::symexpand {

using combinat::Partition;
using polyring::MultiPoly;

// Coefficients of a symmetric polynomial on the Schur basis of X_n.
struct SchurExpansion {
    int n = 0;
    std::map<Partition, Int> terms;  // graded-lex partition order, no zeros

    Int coeff(const Partition& lam) const {
        auto it = terms.find(lam);
        return it == terms.end() ? Int(0) : it->second;
    }
    bool operator==(const SchurExpansion& o) const {
        return n == o.n && terms == o.terms;
    }
    // All coefficients nonnegative?  On failure reports the first offender
    // in partition order.
    bool is_positive(Partition* bad = nullptr, Int* bad_coeff = nullptr) const;
    Int coefficient_sum() const;
    // Sum c_lambda * s_lambda(X_n); reconstructs the expanded polynomial.
    MultiPoly reconstruct() const;
};

// Coefficients a_{lambda,mu} on products s_lambda(X_n) s_mu(Y_m).
struct DoubleSchurExpansion {
    int n = 0, m = 0;
    std::map<std::pair<Partition, Partition>, Int> terms;

    Int coeff(const Partition& lam, const Partition& mu) const {
        auto it = terms.find({lam, mu});
        return it == terms.end() ? Int(0) : it->second;
    }
    bool operator==(const DoubleSchurExpansion& o) const {
        return n == o.n && m == o.m && terms == o.terms;
    }
    bool is_positive(std::pair<Partition, Partition>* bad = nullptr,
                     Int* bad_coeff = nullptr) const;
};

// Schur polynomial s_lambda(X_n), computed by the bialternant
// (antisymmetrize the staircase-shifted monomial, then divide by the
// Vandermonde).  Zero when length(lambda) > n.  Memoized per (lambda, n);
// the memo is guarded for concurrent use.
MultiPoly schur_poly(const Partition& lam, int n);

// A_n(f) = (1/Delta_n) sum_w sign(w) w.f, computed exactly; the signed sum
// is always divisible by Delta_n.
MultiPoly antisymmetrize(const MultiPoly& f, int n);

// Invariance under all adjacent transpositions of the X (resp. Y) alphabet.
bool is_symmetric(const MultiPoly& f);
bool is_symmetric_y(const MultiPoly& f);

// Schur expansion of a symmetric q-free polynomial over X_n by leading-term
// peeling.  Coefficients may be negative; throws on non-symmetric input.
SchurExpansion schur_expand(const MultiPoly& f);

// Per-q-grade Schur expansion of a q-graded symmetric polynomial.
std::map<int, SchurExpansion> schur_expand_by_q(const MultiPoly& f);

// Coefficients a_{lambda,mu} with f = sum a * s_lambda(X) s_mu(Y); input
// must be symmetric in X and in Y separately.
DoubleSchurExpansion double_schur_expand(const MultiPoly& f);

// Gessel fundamental quasisymmetric polynomial F_S of degree n in n
// variables: sum over 1 <= i_1 <= ... <= i_n <= n, strict at positions in S.
MultiPoly fundamental_qsym(const std::set<int>& s, int n);

// Cached permutations of [n] with signs, used by the alternant routines.
const std::vector<std::pair<std::vector<int>, int>>& perms_with_signs(int n);

// Cached Vandermonde for the X alphabet.
const MultiPoly& cached_vandermonde(int n);

}  // namespace bpp::symexpand

#endif
