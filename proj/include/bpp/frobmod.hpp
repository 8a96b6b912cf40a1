#ifndef BPP_FROBMOD_HPP
#define BPP_FROBMOD_HPP

#include <vector>

#include "bpp/combinat.hpp"
#include "bpp/schurbasis.hpp"

namespace bpp::frobmod {

using combinat::Partition;
using combinat::Permutation;
using schurbasis::GradedSchurSeries;
using schurbasis::SchurVector;

// Length-n word with j copies of 0 and one copy each of 1..n-j.
struct Positroid {
    std::vector<int> word;

    int n() const { return static_cast<int>(word.size()); }
    int zeros() const;
    bool valid() const;
    bool operator==(const Positroid& o) const { return word == o.word; }
    bool operator<(const Positroid& o) const { return word < o.word; }
    std::string to_string() const;
};

// Dense polynomial in t with exact integer coefficients.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<Int> coeffs);
    static TPoly zero() { return TPoly(); }
    static TPoly one() { return TPoly({Int(1)}); }
    static TPoly power(int k);  // t^k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    TPoly operator+(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    bool operator==(const TPoly& o) const { return c_ == o.c_; }
    Int evaluate(const Int& t) const;
    std::string to_string() const;

private:
    std::vector<Int> c_;
    void trim();
};

// Gaussian binomial [a choose b]_t; the zero polynomial when b < 0 or b > a.
TPoly t_binomial(int a, int b);

// All positroids of size n, grouped by zero count then lexicographic.
std::vector<Positroid> positroid_enumerate(int n);

// Apply w through a fixed adjacent-transposition factorization; the sign
// flips each time two zeros swap.  Returns the image word and the sign.
std::pair<Positroid, int> positroid_act(const Permutation& w,
                                        const Positroid& v);

// Frobenius characteristic of the signed S_n action on C[P_n], computed
// from first principles via characters and the Murnaghan-Nakayama rule.
SchurVector positroid_frobenius(int n);

// Signed trace of w on the positroid basis of size n.
Int positroid_character(const Permutation& w, int n);

// sum over SYT(n) of t^maj s_shape — the graded Frobenius image of the
// coinvariant algebra.
GradedSchurSeries coinvariant_grfrob(int n);

// sum_j q^j e_j * [sum over SYT(n-j) of t^maj s_shape], fully Schur-expanded.
GradedSchurSeries superspace_grfrob(int n);

// sum a_lambda s_lambda with a_lambda the number of standard tableaux of
// shape lambda whose smallest ascent is even; requires n >= 2.
SchurVector reiner_webb(int n);

// sum over derangements w of F_{D(w)} equals the n-variable restriction of
// the q = -1 specialization.
bool derangement_qsym_check(int n);

// Graded Frobenius image of the Haglund-Rhoades-Shimozono quotient, via the
// tableau formula; requires r <= k <= n.
GradedSchurSeries hrs_grfrob(int n, int k, int r);

enum class UndefinedTerms { kSkip, kError };

struct HrsSuperspaceResult {
    GradedSchurSeries series;
    std::vector<int> skipped_j;  // q-degrees whose term was undefined
};

// sum_j q^j e_j * grFrob of the (n-j, k, r-j) quotient.  j is capped at r.
// Terms outside the HRS parameter regime reduce to the classical coinvariant
// algebra when r-j = n-j and k >= n-j (the ideal coincides); otherwise they
// are undefined and handled per policy.
HrsSuperspaceResult hrs_superspace(int n, int k, int r,
                                   UndefinedTerms policy = UndefinedTerms::kSkip);

}  // namespace bpp::frobmod

#endif
