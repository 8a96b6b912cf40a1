#include "bpp/polyring.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bpp::polyring {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int threads) { g_threads = std::max(1, threads); }
int thread_count() { return g_threads.load(); }

MultiPoly::MultiPoly(int nx, int ny) : nx_(nx), ny_(ny) {
    if (nx < 0 || ny < 0 || 1 + nx + ny > Mono::kMaxSlots)
        throw std::invalid_argument("MultiPoly: unsupported alphabet sizes");
}

MultiPoly MultiPoly::constant(const Int& c, int nx, int ny) {
    MultiPoly p(nx, ny);
    if (c != 0) p.terms_.emplace(Mono(p.slots()), c);
    return p;
}

MultiPoly MultiPoly::var_x(int i, int nx, int ny) {
    if (i < 1 || i > nx) throw std::invalid_argument("var_x: index out of range");
    MultiPoly p(nx, ny);
    Mono m(p.slots());
    m[i] = 1;
    p.terms_.emplace(m, 1);
    return p;
}

MultiPoly MultiPoly::var_y(int j, int nx, int ny) {
    if (j < 1 || j > ny) throw std::invalid_argument("var_y: index out of range");
    MultiPoly p(nx, ny);
    Mono m(p.slots());
    m[nx + j] = 1;
    p.terms_.emplace(m, 1);
    return p;
}

Mono MultiPoly::make_mono(int q, const std::vector<int>& xexp,
                          const std::vector<int>& yexp) const {
    if (static_cast<int>(xexp.size()) != nx_ ||
        static_cast<int>(yexp.size()) != ny_)
        throw std::invalid_argument("make_mono: exponent vector length mismatch");
    Mono m(slots());
    if (q < 0) throw std::invalid_argument("make_mono: negative q power");
    m[0] = static_cast<uint16_t>(q);
    for (int i = 0; i < nx_; ++i) {
        if (xexp[i] < 0) throw std::invalid_argument("make_mono: negative exponent");
        m[1 + i] = static_cast<uint16_t>(xexp[i]);
    }
    for (int j = 0; j < ny_; ++j) {
        if (yexp[j] < 0) throw std::invalid_argument("make_mono: negative exponent");
        m[1 + nx_ + j] = static_cast<uint16_t>(yexp[j]);
    }
    return m;
}

MultiPoly MultiPoly::monomial(const Int& c, int q, const std::vector<int>& xexp,
                              const std::vector<int>& yexp, int nx, int ny) {
    MultiPoly p(nx, ny);
    p.add_term(q, xexp, yexp, c);
    return p;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (int i = 1; i < slots(); ++i) d += m[i];
        best = std::max(best, d);
    }
    return best;
}

int MultiPoly::max_q_power() const {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max<int>(best, m[0]);
    return best;
}

void MultiPoly::add_term(const Mono& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::add_term(int q, const std::vector<int>& xexp,
                         const std::vector<int>& yexp, const Int& c) {
    add_term(make_mono(q, xexp, yexp), c);
}

Int MultiPoly::coeff(int q, const std::vector<int>& xexp,
                     const std::vector<int>& yexp) const {
    auto it = terms_.find(make_mono(q, xexp, yexp));
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nx_ != o.nx_ || ny_ != o.ny_)
        throw std::invalid_argument("MultiPoly: alphabet mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nx_, ny_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const Int& c) const {
    MultiPoly r(nx_, ny_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(nx_, ny_);
    if (terms_.empty() || o.terms_.empty()) return r;
    // exponents are stored in 16-bit slots
    if (total_degree() + o.total_degree() > 65000 ||
        max_q_power() + o.max_q_power() > 65000)
        throw std::domain_error("MultiPoly: degree exceeds the representable bound");
    const MultiPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const MultiPoly& large = terms_.size() <= o.terms_.size() ? o : *this;
    r.terms_.reserve(large.terms_.size() * 2);
    for (const auto& [ms, cs] : small.terms_)
        for (const auto& [ml, cl] : large.terms_) r.add_term(ms * ml, cs * cl);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (nx_ != o.nx_ || ny_ != o.ny_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

Int MultiPoly::evaluate_all_ones(const Int& q_value) const {
    Int total = 0;
    for (const auto& [m, c] : terms_) total += c * int_pow(q_value, m[0]);
    return total;
}

MultiPoly MultiPoly::specialize_q(const Int& q_value) const {
    MultiPoly r(nx_, ny_);
    for (const auto& [m, c] : terms_) {
        Mono flat = m;
        flat[0] = 0;
        r.add_term(flat, c * int_pow(q_value, m[0]));
    }
    return r;
}

MultiPoly MultiPoly::q_coefficient(int k) const {
    MultiPoly r(nx_, ny_);
    for (const auto& [m, c] : terms_) {
        if (m[0] != k) continue;
        Mono flat = m;
        flat[0] = 0;
        r.terms_.emplace(flat, c);
    }
    return r;
}

MultiPoly MultiPoly::set_y_zero() const {
    MultiPoly r(nx_, 0);
    for (const auto& [m, c] : terms_) {
        bool pure = true;
        for (int j = 0; j < ny_; ++j)
            if (m[1 + nx_ + j] != 0) { pure = false; break; }
        if (!pure) continue;
        Mono t(r.slots());
        for (int i = 0; i <= nx_; ++i) t[i] = m[i];
        r.terms_.emplace(t, c);
    }
    return r;
}

MultiPoly MultiPoly::permute_x(const combinat::Permutation& w) const {
    if (w.n() != nx_) throw std::invalid_argument("permute_x: size mismatch");
    MultiPoly r(nx_, ny_);
    for (const auto& [m, c] : terms_) {
        Mono t = m;
        for (int i = 1; i <= nx_; ++i) t[w(i)] = m[i];
        r.terms_.emplace(t, c);
    }
    return r;
}

MultiPoly MultiPoly::permute_y(const combinat::Permutation& w) const {
    if (w.n() != ny_) throw std::invalid_argument("permute_y: size mismatch");
    MultiPoly r(nx_, ny_);
    for (const auto& [m, c] : terms_) {
        Mono t = m;
        for (int j = 1; j <= ny_; ++j) t[nx_ + w(j)] = m[nx_ + j];
        r.terms_.emplace(t, c);
    }
    return r;
}

Term MultiPoly::decode(const Mono& m, const Int& c) const {
    Term t;
    t.q = m[0];
    t.x.resize(nx_);
    t.y.resize(ny_);
    for (int i = 0; i < nx_; ++i) t.x[i] = m[1 + i];
    for (int j = 0; j < ny_; ++j) t.y[j] = m[1 + nx_ + j];
    t.coeff = c;
    return t;
}

std::vector<Term> MultiPoly::sorted_terms() const {
    std::vector<std::pair<Mono, Int>> entries(terms_.begin(), terms_.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first.lex_less(b.first); });
    std::vector<Term> out;
    out.reserve(entries.size());
    for (const auto& [m, c] : entries) out.push_back(decode(m, c));
    return out;
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : sorted_terms()) {
        Int c = t.coeff;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit = (c == 1);
        std::ostringstream vars;
        if (t.q > 0) { vars << "q"; if (t.q > 1) vars << "^" << t.q; }
        for (size_t i = 0; i < t.x.size(); ++i)
            if (t.x[i] > 0) {
                vars << "x" << i + 1;
                if (t.x[i] > 1) vars << "^" << t.x[i];
            }
        for (size_t j = 0; j < t.y.size(); ++j)
            if (t.y[j] > 0) {
                vars << "y" << j + 1;
                if (t.y[j] > 1) vars << "^" << t.y[j];
            }
        std::string v = vars.str();
        if (v.empty()) {
            os << c.str();
        } else {
            if (!unit) os << c.str() << "*";
            os << v;
        }
    }
    return os.str();
}

namespace {

MultiPoly product_range(std::span<const MultiPoly> forms, int nx, int ny,
                        int depth) {
    if (forms.empty()) return MultiPoly::one(nx, ny);
    if (forms.size() == 1) return forms[0];
    if (depth > 0 && forms.size() >= 8) {
        size_t half = forms.size() / 2;
        auto right = std::async(std::launch::async, [&] {
            return product_range(forms.subspan(half), nx, ny, depth - 1);
        });
        MultiPoly left = product_range(forms.first(half), nx, ny, depth - 1);
        return left * right.get();
    }
    MultiPoly acc = forms[0];
    for (size_t i = 1; i < forms.size(); ++i) acc = acc * forms[i];
    return acc;
}

}  // namespace

MultiPoly expand_linear_forms(std::span<const MultiPoly> forms, int nx, int ny) {
    for (const MultiPoly& f : forms)
        if (f.nx() != nx || f.ny() != ny)
            throw std::invalid_argument("expand_linear_forms: alphabet mismatch");
    int threads = thread_count();
    int depth = 0;
    while ((1 << depth) < threads) ++depth;
    return product_range(forms, nx, ny, depth);
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d) {
    if (p.nx() != d.nx() || p.ny() != d.ny())
        throw std::invalid_argument("exact_divide: alphabet mismatch");
    if (d.is_zero()) throw std::domain_error("exact_divide: division by zero");
    MultiPoly q(p.nx(), p.ny());
    if (p.is_zero()) return q;

    // remainder ordered lex-descending; lead term of d
    std::map<Mono, Int, MonoLexGreater> rem(p.raw_terms().begin(),
                                            p.raw_terms().end());
    Mono dlead;
    bool first = true;
    for (const auto& [m, c] : d.raw_terms())
        if (first || dlead.lex_less(m)) { dlead = m; first = false; }
    const Int& dlc = d.raw_terms().at(dlead);

    int ns = p.slots();
    while (!rem.empty()) {
        const auto& [rm, rc] = *rem.begin();
        Mono qm(ns);
        bool divisible = true;
        for (int i = 0; i < ns; ++i) {
            if (rm[i] < dlead[i]) { divisible = false; break; }
            qm[i] = static_cast<uint16_t>(rm[i] - dlead[i]);
        }
        if (!divisible || rc % dlc != 0)
            throw std::domain_error("exact_divide: non-exact division");
        Int qc = rc / dlc;
        q.add_term(qm, qc);
        for (const auto& [dm, dc] : d.raw_terms()) {
            Mono t = qm * dm;
            auto it = rem.find(t);
            Int delta = qc * dc;
            if (it == rem.end()) {
                rem.emplace(t, -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return q;
}

MultiPoly vandermonde(int n) {
    std::vector<MultiPoly> forms;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            forms.push_back(MultiPoly::var_x(i, n) - MultiPoly::var_x(j, n));
    return expand_linear_forms(forms, n, 0);
}

Int bareiss_det(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_det: not square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace bpp::polyring
