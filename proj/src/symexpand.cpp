#include "bpp/symexpand.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace bpp::symexpand {

using polyring::Mono;
using polyring::MonoLexGreater;

bool SchurExpansion::is_positive(Partition* bad, Int* bad_coeff) const {
    for (const auto& [lam, c] : terms) {
        if (c < 0) {
            if (bad) *bad = lam;
            if (bad_coeff) *bad_coeff = c;
            return false;
        }
    }
    return true;
}

Int SchurExpansion::coefficient_sum() const {
    Int s = 0;
    for (const auto& [lam, c] : terms) s += c;
    return s;
}

MultiPoly SchurExpansion::reconstruct() const {
    MultiPoly f = MultiPoly::zero(n);
    for (const auto& [lam, c] : terms) f = f + schur_poly(lam, n).scaled(c);
    return f;
}

bool DoubleSchurExpansion::is_positive(std::pair<Partition, Partition>* bad,
                                       Int* bad_coeff) const {
    for (const auto& [key, c] : terms) {
        if (c < 0) {
            if (bad) *bad = key;
            if (bad_coeff) *bad_coeff = c;
            return false;
        }
    }
    return true;
}

const std::vector<std::pair<std::vector<int>, int>>& perms_with_signs(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::pair<std::vector<int>, int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<std::vector<int>, int>> v;
    for (const auto& w : combinat::Permutation::all(n))
        v.emplace_back(w.word(), w.sign());
    return cache.emplace(n, std::move(v)).first->second;
}

const MultiPoly& cached_vandermonde(int n) {
    static std::mutex mu;
    static std::map<int, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, polyring::vandermonde(n)).first->second;
}

namespace {

// Alternant sum_w sign(w) x^{w.beta} for strictly decreasing beta.
MultiPoly alternant(const std::vector<int>& beta, int n) {
    MultiPoly a = MultiPoly::zero(n);
    std::vector<int> exp(n);
    for (const auto& [w, s] : perms_with_signs(n)) {
        for (int i = 0; i < n; ++i) exp[w[i] - 1] = beta[i];
        a.add_term(0, exp, {}, s);
    }
    return a;
}

std::vector<int> shifted_exponents(const Partition& lam, int n) {
    std::vector<int> beta(n);
    for (int i = 0; i < n; ++i) beta[i] = lam.part(i) + (n - 1 - i);
    return beta;
}

}  // namespace

MultiPoly schur_poly(const Partition& lam, int n) {
    if (lam.length() > n) return MultiPoly::zero(n);
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, int>, MultiPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({lam.parts(), n});
        if (it != memo.end()) return it->second;
    }
    MultiPoly s =
        polyring::exact_divide(alternant(shifted_exponents(lam, n), n),
                               cached_vandermonde(n));
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(std::make_pair(lam.parts(), n), std::move(s))
        .first->second;
}

MultiPoly antisymmetrize(const MultiPoly& f, int n) {
    if (f.nx() != n) throw std::invalid_argument("antisymmetrize: wrong alphabet");
    if (f.has_y())
        throw std::invalid_argument("antisymmetrize: Y alphabet unsupported");
    MultiPoly acc = MultiPoly::zero(n, 0);
    for (const auto& [w, s] : perms_with_signs(n)) {
        for (const auto& [m, c] : f.raw_terms()) {
            Mono t = m;
            for (int i = 1; i <= n; ++i) t[w[i - 1]] = m[i];
            acc.add_term(t, s > 0 ? c : -c);
        }
    }
    return polyring::exact_divide(acc, cached_vandermonde(n));
}

bool is_symmetric(const MultiPoly& f) {
    int n = f.nx();
    for (int i = 1; i < n; ++i) {
        for (const auto& [m, c] : f.raw_terms()) {
            if (m[i] == m[i + 1]) continue;
            Mono t = m;
            std::swap(t[i], t[i + 1]);
            auto it = f.raw_terms().find(t);
            if (it == f.raw_terms().end() || it->second != c) return false;
        }
    }
    return true;
}

bool is_symmetric_y(const MultiPoly& f) {
    int off = f.nx(), m_ = f.ny();
    for (int j = 1; j < m_; ++j) {
        for (const auto& [m, c] : f.raw_terms()) {
            if (m[off + j] == m[off + j + 1]) continue;
            Mono t = m;
            std::swap(t[off + j], t[off + j + 1]);
            auto it = f.raw_terms().find(t);
            if (it == f.raw_terms().end() || it->second != c) return false;
        }
    }
    return true;
}

SchurExpansion schur_expand(const MultiPoly& f) {
    if (f.has_y())
        throw std::invalid_argument("schur_expand: two-alphabet input");
    if (f.max_q_power() > 0)
        throw std::invalid_argument("schur_expand: q-graded input");
    int n = f.nx();
    SchurExpansion out;
    out.n = n;
    if (f.is_zero()) return out;
    if (!is_symmetric(f))
        throw std::invalid_argument("schur_expand: input is not symmetric");

    // Peel leading terms in the alternant picture: multiplying by the
    // Vandermonde turns c * s_lambda into c * a_{lambda+delta}, whose n!
    // signed monomials are cheap to subtract.
    MultiPoly g = f * cached_vandermonde(n);
    std::map<Mono, Int, MonoLexGreater> rem(g.raw_terms().begin(),
                                            g.raw_terms().end());
    const auto& perms = perms_with_signs(n);
    while (!rem.empty()) {
        Mono m = rem.begin()->first;
        Int c = rem.begin()->second;
        std::vector<int> lam_parts(n);
        for (int i = 0; i < n; ++i) {
            int v = m[1 + i] - (n - 1 - i);
            if (v < 0 || (i > 0 && v > lam_parts[i - 1]))
                throw std::logic_error(
                    "schur_expand: leading exponent is not a shifted partition");
            lam_parts[i] = v;
        }
        Partition lam(lam_parts);
        out.terms.emplace(lam, c);
        for (const auto& [w, s] : perms) {
            Mono t = m;
            for (int i = 1; i <= n; ++i) t[w[i - 1]] = m[i];
            Int delta = (s > 0) ? c : -c;
            auto it = rem.find(t);
            if (it == rem.end()) {
                rem.emplace(t, -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return out;
}

std::map<int, SchurExpansion> schur_expand_by_q(const MultiPoly& f) {
    std::map<int, SchurExpansion> out;
    for (int k = 0; k <= f.max_q_power(); ++k) {
        MultiPoly g = f.q_coefficient(k);
        if (!g.is_zero()) out.emplace(k, schur_expand(g));
    }
    return out;
}

DoubleSchurExpansion double_schur_expand(const MultiPoly& f) {
    if (!f.has_y())
        throw std::invalid_argument("double_schur_expand: needs two alphabets");
    if (f.max_q_power() > 0)
        throw std::invalid_argument("double_schur_expand: q-graded input");
    int n = f.nx(), m_ = f.ny();
    DoubleSchurExpansion out;
    out.n = n;
    out.m = m_;
    if (f.is_zero()) return out;
    if (!is_symmetric(f) || !is_symmetric_y(f))
        throw std::invalid_argument("double_schur_expand: not bisymmetric");

    MultiPoly vy(n, m_);
    {
        std::vector<MultiPoly> forms;
        for (int i = 1; i <= m_; ++i)
            for (int j = i + 1; j <= m_; ++j)
                forms.push_back(MultiPoly::var_y(i, n, m_) -
                                MultiPoly::var_y(j, n, m_));
        vy = polyring::expand_linear_forms(forms, n, m_);
    }
    MultiPoly vx(n, m_);
    {
        std::vector<MultiPoly> forms;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                forms.push_back(MultiPoly::var_x(i, n, m_) -
                                MultiPoly::var_x(j, n, m_));
        vx = polyring::expand_linear_forms(forms, n, m_);
    }

    MultiPoly g = f * vx * vy;
    std::map<Mono, Int, MonoLexGreater> rem(g.raw_terms().begin(),
                                            g.raw_terms().end());
    const auto& perms_x = perms_with_signs(n);
    const auto& perms_y = perms_with_signs(m_);
    while (!rem.empty()) {
        Mono m = rem.begin()->first;
        Int c = rem.begin()->second;
        std::vector<int> lp(n), mp(m_);
        for (int i = 0; i < n; ++i) {
            int v = m[1 + i] - (n - 1 - i);
            if (v < 0 || (i > 0 && v > lp[i - 1]))
                throw std::logic_error("double_schur_expand: bad leading term");
            lp[i] = v;
        }
        for (int j = 0; j < m_; ++j) {
            int v = m[1 + n + j] - (m_ - 1 - j);
            if (v < 0 || (j > 0 && v > mp[j - 1]))
                throw std::logic_error("double_schur_expand: bad leading term");
            mp[j] = v;
        }
        out.terms.emplace(std::make_pair(Partition(lp), Partition(mp)), c);
        for (const auto& [wx, sx] : perms_x) {
            Mono tx = m;
            for (int i = 1; i <= n; ++i) tx[wx[i - 1]] = m[i];
            for (const auto& [wy, sy] : perms_y) {
                Mono t = tx;
                for (int j = 1; j <= m_; ++j) t[n + wy[j - 1]] = tx[n + j];
                Int delta = (sx * sy > 0) ? c : -c;
                auto it = rem.find(t);
                if (it == rem.end()) {
                    rem.emplace(t, -delta);
                } else {
                    it->second -= delta;
                    if (it->second == 0) rem.erase(it);
                }
            }
        }
    }
    return out;
}

MultiPoly fundamental_qsym(const std::set<int>& s, int n) {
    for (int v : s)
        if (v < 1 || v > n - 1)
            throw std::invalid_argument("fundamental_qsym: S not inside [n-1]");
    MultiPoly out = MultiPoly::zero(n);
    if (n == 0) return MultiPoly::one(0);
    std::vector<int> exp(n, 0);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == n) {
            out.add_term(0, exp, {}, 1);
            return;
        }
        for (int i = lo; i <= n; ++i) {
            ++exp[i - 1];
            // next index must strictly exceed i when pos+1 lies in S
            self(self, pos + 1, s.count(pos + 1) ? i + 1 : i);
            --exp[i - 1];
        }
    };
    rec(rec, 0, 1);
    return out;
}

}  // namespace bpp::symexpand
