#ifndef BPP_POLYRING_HPP
#define BPP_POLYRING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bpp/bigint.hpp"
#include "bpp/combinat.hpp"

namespace bpp::polyring {

/* Sparse exact multivariate polynomial arithmetic over one or two named
 * alphabets (X and Y) with an optional formal q-grading on terms.
 * MultiPoly values are immutable once built; all operations are pure. */

// Exponent layout of one term: [q | x_1..x_nx | y_1..y_ny], packed into a
// fixed inline buffer.  Lexicographic comparison over this layout is the
// canonical term order.
class Mono {
public:
    static constexpr int kMaxSlots = 33;  // q + up to 32 variables

    Mono() : len_(0) { e_.fill(0); }
    explicit Mono(int slots) : len_(static_cast<uint8_t>(slots)) { e_.fill(0); }

    int slots() const { return len_; }
    uint16_t operator[](int i) const { return e_[i]; }
    uint16_t& operator[](int i) { return e_[i]; }

    bool operator==(const Mono& o) const {
        if (len_ != o.len_) return false;
        for (int i = 0; i < len_; ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }
    // lexicographic, first slot most significant
    bool lex_less(const Mono& o) const {
        int m = std::min<int>(len_, o.len_);
        for (int i = 0; i < m; ++i)
            if (e_[i] != o.e_[i]) return e_[i] < o.e_[i];
        return len_ < o.len_;
    }
    Mono operator*(const Mono& o) const {
        Mono r(len_);
        for (int i = 0; i < len_; ++i)
            r.e_[i] = static_cast<uint16_t>(e_[i] + o.e_[i]);
        return r;
    }
    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < len_; ++i) {
            h ^= e_[i];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }

private:
    uint8_t len_;
    std::array<uint16_t, kMaxSlots> e_;
};

struct MonoHash {
    size_t operator()(const Mono& m) const { return m.hash(); }
};
struct MonoLexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return b.lex_less(a); }
};

// One term in exploded form, used for iteration and serialization.
struct Term {
    int q = 0;
    std::vector<int> x;
    std::vector<int> y;  // empty when the polynomial has no Y alphabet
    Int coeff;
};

class MultiPoly {
public:
    using TermMap = std::unordered_map<Mono, Int, MonoHash>;

    MultiPoly() : nx_(0), ny_(0) {}
    MultiPoly(int nx, int ny);

    static MultiPoly zero(int nx, int ny = 0) { return MultiPoly(nx, ny); }
    static MultiPoly constant(const Int& c, int nx, int ny = 0);
    static MultiPoly one(int nx, int ny = 0) { return constant(1, nx, ny); }
    // x_i / y_j with 1-based variable index
    static MultiPoly var_x(int i, int nx, int ny = 0);
    static MultiPoly var_y(int j, int nx, int ny = 0);
    // monomial q^q xexp yexp (vectors sized nx / ny)
    static MultiPoly monomial(const Int& c, int q, const std::vector<int>& xexp,
                              const std::vector<int>& yexp, int nx, int ny);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    bool has_y() const { return ny_ > 0; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // max over terms of x+y degree (q excluded); -1 for 0
    int max_q_power() const;

    // Builder: adds c to the coefficient of the monomial, dropping zeros.
    void add_term(const Mono& m, const Int& c);
    void add_term(int q, const std::vector<int>& xexp,
                  const std::vector<int>& yexp, const Int& c);

    const TermMap& raw_terms() const { return terms_; }
    Int coeff(int q, const std::vector<int>& xexp,
              const std::vector<int>& yexp) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Int& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Sum of coefficients with all variables set to 1 and q set to q_value.
    Int evaluate_all_ones(const Int& q_value = 1) const;
    // Substitute an exact integer for q, collapsing the grading.
    MultiPoly specialize_q(const Int& q_value) const;
    // Extract the coefficient of q^k as a q-free polynomial.
    MultiPoly q_coefficient(int k) const;
    // Substitute 0 for every y variable; result has no Y alphabet.
    MultiPoly set_y_zero() const;
    // Relabel x variables by w: x_i -> x_{w(i)}.
    MultiPoly permute_x(const combinat::Permutation& w) const;
    MultiPoly permute_y(const combinat::Permutation& w) const;

    // Terms in ascending lexicographic order of (q, x, y).
    std::vector<Term> sorted_terms() const;
    Term decode(const Mono& m, const Int& c) const;
    std::string to_string() const;

    int slots() const { return 1 + nx_ + ny_; }
    Mono make_mono(int q, const std::vector<int>& xexp,
                   const std::vector<int>& yexp) const;

private:
    int nx_, ny_;
    TermMap terms_;

    void check_compatible(const MultiPoly& o) const;
};

// Product of the given forms (any polynomials); the empty product is 1.
// Multiplies incrementally with like-term combination after each factor.
// May split the factor list across threads (see set_thread_count); the
// result is identical either way.
MultiPoly expand_linear_forms(std::span<const MultiPoly> forms, int nx,
                              int ny = 0);

// Exact quotient p / d; throws std::domain_error when d does not divide p
// over the integers.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d);

// Vandermonde product prod_{i<j} (x_i - x_j) in n variables.
MultiPoly vandermonde(int n);

// Fraction-free exact determinant of an integer matrix (Bareiss).
Int bareiss_det(std::vector<std::vector<Int>> m);

// Worker threads used by expand_linear_forms for large products (default 1).
void set_thread_count(int threads);
int thread_count();

}  // namespace bpp::polyring

#endif
