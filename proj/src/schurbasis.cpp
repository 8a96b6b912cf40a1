#include "bpp/schurbasis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bpp/symexpand.hpp"

namespace bpp::schurbasis {

SchurVector SchurVector::single(const Partition& lam, const Int& c) {
    SchurVector v;
    v.add(lam, c);
    return v;
}

Int SchurVector::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Int(0) : it->second;
}

void SchurVector::add(const Partition& lam, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SchurVector SchurVector::operator+(const SchurVector& o) const {
    SchurVector r = *this;
    for (const auto& [lam, c] : o.terms_) r.add(lam, c);
    return r;
}

SchurVector SchurVector::operator-(const SchurVector& o) const {
    SchurVector r = *this;
    for (const auto& [lam, c] : o.terms_) r.add(lam, -c);
    return r;
}

SchurVector SchurVector::scaled(const Int& c) const {
    SchurVector r;
    if (c == 0) return r;
    for (const auto& [lam, v] : terms_) r.terms_.emplace(lam, v * c);
    return r;
}

bool SchurVector::is_positive(Partition* bad, Int* bad_coeff) const {
    for (const auto& [lam, c] : terms_) {
        if (c < 0) {
            if (bad) *bad = lam;
            if (bad_coeff) *bad_coeff = c;
            return false;
        }
    }
    return true;
}

Int SchurVector::coefficient_sum() const {
    Int s = 0;
    for (const auto& [lam, c] : terms_) s += c;
    return s;
}

Int SchurVector::dimension() const {
    Int s = 0;
    for (const auto& [lam, c] : terms_) s += c * combinat::syt_count(lam);
    return s;
}

std::string SchurVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.str() << "*";
        os << "s" << lam.to_string();
    }
    return os.str();
}

void GradedSchurSeries::add(int q, int t, const Partition& lam, const Int& c) {
    if (c == 0) return;
    Key k{q, t, lam};
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedSchurSeries::add_vector(int q, int t, const SchurVector& v) {
    for (const auto& [lam, c] : v.terms()) add(q, t, lam, c);
}

GradedSchurSeries GradedSchurSeries::operator+(const GradedSchurSeries& o) const {
    GradedSchurSeries r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = r.terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

GradedSchurSeries GradedSchurSeries::q_slice(int q) const {
    GradedSchurSeries r;
    for (const auto& [k, c] : terms_)
        if (std::get<0>(k) == q) r.terms_.emplace(Key{0, std::get<1>(k), std::get<2>(k)}, c);
    return r;
}

int GradedSchurSeries::max_q() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::get<0>(k));
    return m;
}

int GradedSchurSeries::max_t() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::get<1>(k));
    return m;
}

std::string GradedSchurSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        auto [q, t, lam] = k;
        if (c != 1) os << c.str() << "*";
        if (q > 0) { os << "q"; if (q > 1) os << "^" << q; }
        if (t > 0) { os << "t"; if (t > 1) os << "^" << t; }
        os << "s" << lam.to_string();
    }
    return os.str();
}

namespace {

// All lambda containing mu with lambda/mu a horizontal strip of size r
// (at most one box per column; equivalently the interleaving condition).
std::vector<Partition> horizontal_strip_extensions(const Partition& mu, int r) {
    std::vector<Partition> out;
    int rows = mu.length() + 1;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int rem, int upper) -> void {
        if (row == rows) {
            if (rem == 0) out.push_back(Partition(cur));
            return;
        }
        // lambda_row ranges over [mu_row, min(upper, mu_row + rem)];
        // the strip condition needs lambda_{row+1} <= mu_row, enforced by
        // passing mu_row as the next upper bound.
        int lo = mu.part(row);
        int hi = std::min(upper, mu.part(row) + rem);
        for (int v = lo; v <= hi; ++v) {
            if (v > 0) cur.push_back(v);
            self(self, row + 1, rem - (v - lo), mu.part(row));
            if (v > 0) cur.pop_back();
        }
    };
    rec(rec, 0, r, mu.part(0) + r);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SchurVector pieri_h(const SchurVector& v, int r) {
    if (r < 0) throw std::invalid_argument("pieri_h: r < 0");
    if (r == 0) return v;
    SchurVector out;
    for (const auto& [mu, c] : v.terms())
        for (const Partition& lam : horizontal_strip_extensions(mu, r))
            out.add(lam, c);
    return out;
}

SchurVector pieri_e(const SchurVector& v, int r) {
    if (r < 0) throw std::invalid_argument("pieri_e: r < 0");
    if (r == 0) return v;
    SchurVector out;
    for (const auto& [mu, c] : v.terms()) {
        // Generous bound: each existing row may grow by one box and up to r
        // new rows of width one may appear.
        std::vector<int> bound;
        for (int i = 0; i < mu.length(); ++i) bound.push_back(mu.part(i) + 1);
        for (int i = 0; i < r; ++i) bound.push_back(1);
        for (const Partition& lam :
             combinat::vertical_strip_extensions(mu, r, Partition(bound)))
            out.add(lam, c);
    }
    return out;
}

SchurVector e_h_product(int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("e_h_product: negative arg");
    SchurVector v = SchurVector::single(Partition());
    v = pieri_e(v, j);
    for (int i = 0; i < k; ++i) v = pieri_h(v, 1);
    return v;
}

MultiPoly restrict_to_vars(const SchurVector& v, int n) {
    MultiPoly f = MultiPoly::zero(n);
    for (const auto& [lam, c] : v.terms()) {
        if (lam.length() > n) continue;
        f = f + symexpand::schur_poly(lam, n).scaled(c);
    }
    return f;
}

GradedSchurSeries series_specialize(const GradedSchurSeries& g,
                                    std::optional<Int> q_value,
                                    std::optional<Int> t_value) {
    GradedSchurSeries r;
    for (const auto& [k, c] : g.terms()) {
        auto [q, t, lam] = k;
        Int factor = 1;
        int nq = q, nt = t;
        if (q_value) {
            factor *= int_pow(*q_value, q);
            nq = 0;
        }
        if (t_value) {
            factor *= int_pow(*t_value, t);
            nt = 0;
        }
        r.add(nq, nt, lam, c * factor);
    }
    return r;
}

SchurVector as_vector(const GradedSchurSeries& g) {
    SchurVector v;
    for (const auto& [k, c] : g.terms()) {
        if (std::get<0>(k) != 0 || std::get<1>(k) != 0)
            throw std::invalid_argument("as_vector: series still graded");
        v.add(std::get<2>(k), c);
    }
    return v;
}

SchurVector specialize_to_vector(const GradedSchurSeries& g, const Int& q_value,
                                 const Int& t_value) {
    return as_vector(series_specialize(g, q_value, t_value));
}

}  // namespace bpp::schurbasis
