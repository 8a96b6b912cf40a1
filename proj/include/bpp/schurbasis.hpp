#ifndef BPP_SCHURBASIS_HPP
#define BPP_SCHURBASIS_HPP

#include <map>
#include <optional>
#include <tuple>

#include "bpp/combinat.hpp"
#include "bpp/polyring.hpp"

namespace bpp::schurbasis {

using combinat::Partition;
using polyring::MultiPoly;

// Element of the ring of symmetric functions written on the Schur basis.
// May mix degrees; no zero coefficients are stored.
class SchurVector {
public:
    SchurVector() = default;
    static SchurVector single(const Partition& lam, const Int& c = 1);

    const std::map<Partition, Int>& terms() const { return terms_; }
    Int coeff(const Partition& lam) const;
    bool is_zero() const { return terms_.empty(); }
    void add(const Partition& lam, const Int& c);

    SchurVector operator+(const SchurVector& o) const;
    SchurVector operator-(const SchurVector& o) const;
    SchurVector scaled(const Int& c) const;
    bool operator==(const SchurVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const SchurVector& o) const { return !(*this == o); }

    bool is_positive(Partition* bad = nullptr, Int* bad_coeff = nullptr) const;
    Int coefficient_sum() const;
    // sum_lambda c_lambda * f^lambda — the dimension of the module the
    // vector encodes.
    Int dimension() const;
    std::string to_string() const;

private:
    std::map<Partition, Int> terms_;
};

// Schur-basis element graded by powers of q and t.
class GradedSchurSeries {
public:
    using Key = std::tuple<int, int, Partition>;  // (q-degree, t-degree, shape)

    GradedSchurSeries() = default;

    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(int q, int t, const Partition& lam, const Int& c);
    void add_vector(int q, int t, const SchurVector& v);

    GradedSchurSeries operator+(const GradedSchurSeries& o) const;
    bool operator==(const GradedSchurSeries& o) const {
        return terms_ == o.terms_;
    }
    bool operator!=(const GradedSchurSeries& o) const { return !(*this == o); }

    // Slice at a fixed q-degree, keeping the t-grading.
    GradedSchurSeries q_slice(int q) const;
    int max_q() const;
    int max_t() const;
    std::string to_string() const;

private:
    std::map<Key, Int> terms_;
};

// v * h_r: each s_mu is replaced by the sum of s_lambda over horizontal
// strip extensions of size r.
SchurVector pieri_h(const SchurVector& v, int r);

// v * e_r via vertical strips of size r (dual Pieri rule).
SchurVector pieri_e(const SchurVector& v, int r);

// Schur expansion of e_j * h_1^k.
SchurVector e_h_product(int j, int k);

// sum c_lambda * s_lambda(X_n), dropping shapes longer than n.
MultiPoly restrict_to_vars(const SchurVector& v, int n);

// Substitute exact integers for q and/or t ("keep" = nullopt); substituted
// gradings collapse to degree 0.
GradedSchurSeries series_specialize(const GradedSchurSeries& g,
                                    std::optional<Int> q_value,
                                    std::optional<Int> t_value);

// Collapse a series whose gradings were fully specialized.
SchurVector as_vector(const GradedSchurSeries& g);

// Both substitutions at once.
SchurVector specialize_to_vector(const GradedSchurSeries& g, const Int& q_value,
                                 const Int& t_value);

}  // namespace bpp::schurbasis

#endif
