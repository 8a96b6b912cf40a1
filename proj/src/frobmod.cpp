#include "bpp/frobmod.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bpp/boolprod.hpp"
#include "bpp/symexpand.hpp"

namespace bpp::frobmod {

int Positroid::zeros() const {
    return static_cast<int>(std::count(word.begin(), word.end(), 0));
}

bool Positroid::valid() const {
    int j = zeros();
    std::vector<char> seen(n() + 1, 0);
    for (int v : word) {
        if (v == 0) continue;
        if (v < 1 || v > n() - j || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::string Positroid::to_string() const {
    std::ostringstream os;
    for (int v : word) os << v;
    return os.str();
}

TPoly::TPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly TPoly::power(int k) {
    std::vector<Int> c(k + 1, 0);
    c[k] = 1;
    return TPoly(std::move(c));
}

const Int& TPoly::coeff(int k) const {
    static const Int kZero = 0;
    if (k < 0 || k > degree()) return kZero;
    return c_[k];
}

TPoly TPoly::operator+(const TPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return TPoly(std::move(c));
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return TPoly(std::move(c));
}

Int TPoly::evaluate(const Int& t) const {
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i].str();
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

TPoly t_binomial(int a, int b) {
    if (b < 0 || b > a) return TPoly::zero();
    // Pascal recurrence [a,b] = [a-1,b-1] + t^b [a-1,b]; stays integral.
    std::vector<TPoly> row{TPoly::one()};  // [0 choose 0]
    for (int i = 1; i <= a; ++i) {
        std::vector<TPoly> next(std::min(i, b) + 1);
        for (int j = 0; j <= std::min(i, b); ++j) {
            TPoly v;
            if (j > 0) v = v + row[j - 1];
            if (j < static_cast<int>(row.size()))
                v = v + TPoly::power(j) * row[j];
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row[b];
}

std::vector<Positroid> positroid_enumerate(int n) {
    if (n < 0) throw std::invalid_argument("positroid_enumerate: n < 0");
    std::vector<Positroid> out;
    for (int j = 0; j <= n; ++j) {
        std::vector<int> word;
        for (int i = 0; i < j; ++i) word.push_back(0);
        for (int v = 1; v <= n - j; ++v) word.push_back(v);
        std::sort(word.begin(), word.end());
        do {
            out.push_back(Positroid{word});
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return out;
}

std::pair<Positroid, int> positroid_act(const Permutation& w,
                                        const Positroid& v) {
    if (w.n() != v.n())
        throw std::invalid_argument("positroid_act: size mismatch");
    Positroid cur = v;
    int sign = 1;
    for (int i : w.adjacent_transposition_word()) {
        if (cur.word[i - 1] == 0 && cur.word[i] == 0) sign = -sign;
        std::swap(cur.word[i - 1], cur.word[i]);
    }
    return {cur, sign};
}

Int positroid_character(const Permutation& w, int n) {
    Int trace = 0;
    for (const Positroid& v : positroid_enumerate(n)) {
        auto [img, sign] = positroid_act(w, v);
        if (img == v) trace += sign;
    }
    return trace;
}

SchurVector positroid_frobenius(int n) {
    if (n < 1) throw std::invalid_argument("positroid_frobenius: n < 1");
    // chi(w) depends only on the cycle type; sum over conjugacy classes.
    Int nfact = factorial(n);
    std::vector<std::pair<Partition, Int>> classes;  // (rho, chi on class)
    for (const Partition& rho : combinat::partitions_of(n))
        classes.emplace_back(
            rho, positroid_character(combinat::permutation_with_cycle_type(rho), n));
    SchurVector out;
    for (const Partition& lam : combinat::partitions_of(n)) {
        Int sum = 0;
        for (const auto& [rho, chi] : classes) {
            Int class_size = nfact / combinat::centralizer_order(rho);
            sum += class_size * chi * combinat::mn_character(lam, rho);
        }
        if (sum % nfact != 0)
            throw std::logic_error("positroid_frobenius: non-integral multiplicity");
        out.add(lam, sum / nfact);
    }
    return out;
}

GradedSchurSeries coinvariant_grfrob(int n) {
    if (n < 1) throw std::invalid_argument("coinvariant_grfrob: n < 1");
    GradedSchurSeries g;
    for (const auto& info : combinat::syt_enumerate(n))
        g.add(0, info.maj, info.tableau.shape, 1);
    return g;
}

GradedSchurSeries superspace_grfrob(int n) {
    if (n < 1) throw std::invalid_argument("superspace_grfrob: n < 1");
    GradedSchurSeries g;
    for (int j = 0; j <= n; ++j) {
        for (const auto& info : combinat::syt_enumerate(n - j)) {
            SchurVector expanded =
                schurbasis::pieri_e(SchurVector::single(info.tableau.shape), j);
            g.add_vector(j, info.maj, expanded);
        }
    }
    return g;
}

SchurVector reiner_webb(int n) {
    if (n < 2) throw std::invalid_argument("reiner_webb: requires n >= 2");
    SchurVector out;
    for (const auto& info : combinat::syt_enumerate(n))
        if (combinat::smallest_ascent(info.tableau) % 2 == 0)
            out.add(info.tableau.shape, 1);
    return out;
}

bool derangement_qsym_check(int n) {
    if (n < 1) throw std::invalid_argument("derangement_qsym_check: n < 1");
    polyring::MultiPoly lhs = polyring::MultiPoly::zero(n);
    for (const Permutation& w : combinat::derangements(n)) {
        std::set<int> des;
        for (int d : w.descent_set()) des.insert(d);
        lhs = lhs + symexpand::fundamental_qsym(des, n);
    }
    SchurVector rhs_vec =
        n >= 2 ? reiner_webb(n)
               : schurbasis::specialize_to_vector(boolprod::boolean_q_abstract(n),
                                                  -1, 1);
    return lhs == schurbasis::restrict_to_vars(rhs_vec, n);
}

GradedSchurSeries hrs_grfrob(int n, int k, int r) {
    if (!(r <= k && k <= n) || r < 0)
        throw std::invalid_argument("hrs_grfrob: requires 0 <= r <= k <= n");
    GradedSchurSeries g;
    if (n == 0) {
        // no variables: the quotient is the trivial module
        g.add(0, 0, Partition(), 1);
        return g;
    }
    auto syts = combinat::syt_enumerate(n);
    for (int m = 0; m <= k - r; ++m) {
        TPoly prefix = TPoly::power(m * (n - k + m)) * t_binomial(k - r, m);
        if (prefix.is_zero()) continue;
        for (const auto& info : syts) {
            TPoly factor = t_binomial(n - info.des() - 1, n - k + m);
            if (factor.is_zero()) continue;
            TPoly full = prefix * TPoly::power(info.maj) * factor;
            for (int d = 0; d <= full.degree(); ++d)
                g.add(0, d, info.tableau.shape, full.coeff(d));
        }
    }
    return g;
}

HrsSuperspaceResult hrs_superspace(int n, int k, int r, UndefinedTerms policy) {
    if (!(r <= k && k <= n) || r < 0)
        throw std::invalid_argument("hrs_superspace: requires 0 <= r <= k <= n");
    HrsSuperspaceResult result;
    for (int j = 0; j <= r; ++j) {
        int np = n - j, rp = r - j;
        GradedSchurSeries term;
        if (rp <= k && k <= np) {
            term = hrs_grfrob(np, k, rp);
        } else if (rp == np && k >= np) {
            // The ideal contains every elementary symmetric polynomial in
            // n-j variables, so x_i^k is redundant and the quotient is the
            // classical coinvariant algebra (the trivial module when np = 0).
            term = np >= 1 ? coinvariant_grfrob(np) : GradedSchurSeries();
            if (np == 0) term.add(0, 0, Partition(), 1);
        } else {
            if (policy == UndefinedTerms::kError)
                throw std::domain_error(
                    "hrs_superspace: term outside the HRS parameter regime");
            result.skipped_j.push_back(j);
            continue;
        }
        for (const auto& [key, c] : term.terms()) {
            auto [tq, tt, lam] = key;
            SchurVector expanded =
                schurbasis::pieri_e(SchurVector::single(lam, c), j);
            result.series.add_vector(j + tq, tt, expanded);
        }
    }
    return result;
}

}  // namespace bpp::frobmod
