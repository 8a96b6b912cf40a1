#include "bpp/chern.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bpp::chern {

BundlePtr BundleExpr::base(std::string name, int rank) {
    if (rank < 1) throw std::invalid_argument("bundle rank must be positive");
    auto e = std::make_shared<BundleExpr>();
    e->kind = Kind::kBase;
    e->name = std::move(name);
    e->base_rank = rank;
    return e;
}

BundlePtr BundleExpr::sum(BundlePtr a, BundlePtr b) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = Kind::kSum;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

BundlePtr BundleExpr::tensor(BundlePtr a, BundlePtr b) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = Kind::kTensor;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

BundlePtr BundleExpr::schur(Partition lam, BundlePtr child) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = Kind::kSchur;
    e->lam = std::move(lam);
    e->a = std::move(child);
    return e;
}

BundlePtr BundleExpr::wedge(int k, BundlePtr child) {
    if (k < 1) throw std::invalid_argument("wedge power must be positive");
    return schur(Partition(std::vector<int>(k, 1)), std::move(child));
}

BundlePtr BundleExpr::sym(int k, BundlePtr child) {
    if (k < 1) throw std::invalid_argument("sym power must be positive");
    return schur(Partition({k}), std::move(child));
}

std::string BundleExpr::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::kBase:
            os << name << ":" << base_rank;
            break;
        case Kind::kSum:
            os << "oplus(" << a->to_string() << ", " << b->to_string() << ")";
            break;
        case Kind::kTensor:
            os << "tensor(" << a->to_string() << ", " << b->to_string() << ")";
            break;
        case Kind::kSchur: {
            os << "schur([";
            const auto& p = lam.parts();
            for (size_t i = 0; i < p.size(); ++i) {
                if (i) os << ",";
                os << p[i];
            }
            os << "], " << a->to_string() << ")";
            break;
        }
    }
    return os.str();
}

LinForm LinForm::operator+(const LinForm& o) const {
    LinForm r = *this;
    for (size_t i = 0; i < o.x.size(); ++i) r.x[i] += o.x[i];
    for (size_t j = 0; j < o.y.size(); ++j) r.y[j] += o.y[j];
    return r;
}

MultiPoly LinForm::to_poly(int nx, int ny) const {
    MultiPoly p = MultiPoly::zero(nx, ny);
    std::vector<int> xe(nx, 0), ye(ny, 0);
    for (int i = 0; i < nx; ++i) {
        if (x[i] == 0) continue;
        xe[i] = 1;
        p.add_term(0, xe, ye, Int(x[i]));
        xe[i] = 0;
    }
    for (int j = 0; j < ny; ++j) {
        if (y[j] == 0) continue;
        ye[j] = 1;
        p.add_term(0, xe, ye, Int(y[j]));
        ye[j] = 0;
    }
    return p;
}

std::string LinForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](long c, const char* var, size_t idx) {
        if (c == 0) return;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        long a = std::abs(c);
        if (a != 1) os << a << "*";
        os << var << idx + 1;
    };
    for (size_t i = 0; i < x.size(); ++i) emit(x[i], "x", i);
    for (size_t j = 0; j < y.size(); ++j) emit(y[j], "y", j);
    if (first) os << "0";
    return os.str();
}

namespace {

// Assign base alphabets: first distinct name is X, second Y; reject a third
// or inconsistent ranks for the same name.
void collect_bases(const BundlePtr& e,
                   std::vector<std::pair<std::string, int>>& bases) {
    if (!e) throw std::invalid_argument("chern: null bundle expression");
    switch (e->kind) {
        case BundleExpr::Kind::kBase: {
            for (auto& [name, rank] : bases) {
                if (name == e->name) {
                    if (rank != e->base_rank)
                        throw std::invalid_argument(
                            "chern: inconsistent rank for bundle " + e->name);
                    return;
                }
            }
            if (bases.size() == 2)
                throw std::invalid_argument(
                    "chern: at most two distinct base bundles supported");
            bases.emplace_back(e->name, e->base_rank);
            return;
        }
        case BundleExpr::Kind::kSum:
        case BundleExpr::Kind::kTensor:
            collect_bases(e->a, bases);
            collect_bases(e->b, bases);
            return;
        case BundleExpr::Kind::kSchur:
            collect_bases(e->a, bases);
            return;
    }
}

std::vector<LinForm> roots_rec(const BundlePtr& e, int nx, int ny,
                               const std::string& xname, int max_roots) {
    std::vector<LinForm> out;
    switch (e->kind) {
        case BundleExpr::Kind::kBase: {
            bool is_x = (e->name == xname);
            for (int i = 0; i < e->base_rank; ++i) {
                LinForm f(nx, ny);
                if (is_x)
                    f.x[i] = 1;
                else
                    f.y[i] = 1;
                out.push_back(std::move(f));
            }
            break;
        }
        case BundleExpr::Kind::kSum: {
            out = roots_rec(e->a, nx, ny, xname, max_roots);
            auto rb = roots_rec(e->b, nx, ny, xname, max_roots);
            out.insert(out.end(), rb.begin(), rb.end());
            break;
        }
        case BundleExpr::Kind::kTensor: {
            auto ra = roots_rec(e->a, nx, ny, xname, max_roots);
            auto rb = roots_rec(e->b, nx, ny, xname, max_roots);
            if (static_cast<long>(ra.size()) * static_cast<long>(rb.size()) >
                max_roots)
                throw std::domain_error("chern: rank bound exceeded");
            for (const auto& fa : ra)
                for (const auto& fb : rb) out.push_back(fa + fb);
            break;
        }
        case BundleExpr::Kind::kSchur: {
            auto rc = roots_rec(e->a, nx, ny, xname, max_roots);
            int r = static_cast<int>(rc.size());
            auto tabs = combinat::ssyt_enumerate(e->lam, r);
            if (static_cast<long>(tabs.size()) > max_roots)
                throw std::domain_error("chern: rank bound exceeded");
            for (const auto& t : tabs) {
                LinForm f(nx, ny);
                auto mult = t.content(r);
                for (int entry = 1; entry <= r; ++entry)
                    for (int rep = 0; rep < mult[entry - 1]; ++rep)
                        f = f + rc[entry - 1];
                out.push_back(std::move(f));
            }
            break;
        }
    }
    if (static_cast<long>(out.size()) > max_roots)
        throw std::domain_error("chern: rank bound exceeded");
    return out;
}

}  // namespace

RootMultiset chern_roots(const BundlePtr& e, int max_roots) {
    std::vector<std::pair<std::string, int>> bases;
    collect_bases(e, bases);
    RootMultiset r;
    r.nx = bases.empty() ? 0 : bases[0].second;
    r.ny = bases.size() > 1 ? bases[1].second : 0;
    std::string xname = bases.empty() ? "" : bases[0].first;
    r.forms = roots_rec(e, r.nx, r.ny, xname, max_roots);
    return r;
}

namespace {

// e_0..e_d at the roots: incremental product of (1 + z t).
std::vector<MultiPoly> elementary_table(int d, const RootMultiset& roots) {
    std::vector<MultiPoly> e;
    e.reserve(d + 1);
    e.push_back(MultiPoly::one(roots.nx, roots.ny));
    for (int j = 1; j <= d; ++j) e.push_back(MultiPoly::zero(roots.nx, roots.ny));
    int seen = 0;
    for (const LinForm& f : roots.forms) {
        MultiPoly z = f.to_poly(roots.nx, roots.ny);
        ++seen;
        for (int j = std::min(d, seen); j >= 1; --j)
            e[j] = e[j] + e[j - 1] * z;
    }
    return e;
}

std::vector<MultiPoly> homogeneous_table(int d, const RootMultiset& roots) {
    auto e = elementary_table(std::min<int>(d, roots.rank()), roots);
    std::vector<MultiPoly> h;
    h.push_back(MultiPoly::one(roots.nx, roots.ny));
    for (int k = 1; k <= d; ++k) {
        MultiPoly acc = MultiPoly::zero(roots.nx, roots.ny);
        for (int i = 1; i <= k && i <= roots.rank(); ++i) {
            MultiPoly term = e[i] * h[k - i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        h.push_back(std::move(acc));
    }
    return h;
}

// Determinant of a square MultiPoly matrix by Laplace expansion with
// column-subset memoization.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m, int nx, int ny) {
    int n = static_cast<int>(m.size());
    std::map<unsigned, MultiPoly> memo;
    auto rec = [&](auto&& self, unsigned cols, int row) -> MultiPoly {
        if (row == n) return MultiPoly::one(nx, ny);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        MultiPoly acc = MultiPoly::zero(nx, ny);
        int sign = 1;
        for (int c = 0; c < n; ++c) {
            if (cols & (1u << c)) continue;
            if (!m[row][c].is_zero()) {
                MultiPoly sub = self(self, cols | (1u << c), row + 1);
                MultiPoly term = m[row][c] * sub;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        return memo.emplace(cols, std::move(acc)).first->second;
    };
    return rec(rec, 0u, 0);
}

}  // namespace

MultiPoly pleth_e(int d, const RootMultiset& roots) {
    if (d < 0) throw std::invalid_argument("pleth_e: d < 0");
    if (d > roots.rank()) return MultiPoly::zero(roots.nx, roots.ny);
    if (d == roots.rank()) {
        // product of all roots
        std::vector<MultiPoly> forms;
        for (const LinForm& f : roots.forms)
            forms.push_back(f.to_poly(roots.nx, roots.ny));
        return polyring::expand_linear_forms(forms, roots.nx, roots.ny);
    }
    return elementary_table(d, roots)[d];
}

MultiPoly pleth_h(int d, const RootMultiset& roots) {
    if (d < 0) throw std::invalid_argument("pleth_h: d < 0");
    return homogeneous_table(d, roots)[d];
}

MultiPoly pleth_p(int d, const RootMultiset& roots) {
    if (d < 1) throw std::invalid_argument("pleth_p: d < 1");
    MultiPoly acc = MultiPoly::zero(roots.nx, roots.ny);
    for (const LinForm& f : roots.forms) {
        MultiPoly z = f.to_poly(roots.nx, roots.ny);
        MultiPoly pw = MultiPoly::one(roots.nx, roots.ny);
        for (int i = 0; i < d; ++i) pw = pw * z;
        acc = acc + pw;
    }
    return acc;
}

MultiPoly pleth_s(const Partition& lam, const RootMultiset& roots) {
    if (lam.empty()) return MultiPoly::one(roots.nx, roots.ny);
    Partition conj = lam.conjugate();
    // Use the smaller Jacobi-Trudi matrix: h-version of size length(lam) or
    // e-version of size length(lam').
    bool use_h = lam.length() <= conj.length();
    const Partition& rows = use_h ? lam : conj;
    int n = rows.length();
    int maxidx = rows.part(0) + n - 1;
    std::vector<MultiPoly> table =
        use_h ? homogeneous_table(maxidx, roots)
              : elementary_table(std::min<int>(maxidx, roots.rank()), roots);
    auto entry = [&](int idx) -> MultiPoly {
        if (idx < 0) return MultiPoly::zero(roots.nx, roots.ny);
        if (!use_h && idx > roots.rank())
            return MultiPoly::zero(roots.nx, roots.ny);
        if (idx >= static_cast<int>(table.size()))
            return MultiPoly::zero(roots.nx, roots.ny);
        return table[idx];
    };
    std::vector<std::vector<MultiPoly>> m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[i - 1].push_back(entry(rows.part(i - 1) - i + j));
    return poly_det(m, roots.nx, roots.ny);
}

MultiPoly pleth(const SchurVector& f, const RootMultiset& roots) {
    MultiPoly acc = MultiPoly::zero(roots.nx, roots.ny);
    for (const auto& [lam, c] : f.terms()) acc = acc + pleth_s(lam, roots).scaled(c);
    return acc;
}

MultiPoly chern_plethysm(const SchurVector& f, const BundlePtr& e,
                         int max_roots) {
    return pleth(f, chern_roots(e, max_roots));
}

MultiPoly total_chern(const BundlePtr& e, int max_roots) {
    RootMultiset roots = chern_roots(e, max_roots);
    std::vector<MultiPoly> forms;
    for (const LinForm& f : roots.forms)
        forms.push_back(MultiPoly::one(roots.nx, roots.ny) +
                        f.to_poly(roots.nx, roots.ny));
    return polyring::expand_linear_forms(forms, roots.nx, roots.ny);
}

PragaczResult pragacz_check(const Partition& lam, const BundlePtr& e,
                            int max_roots) {
    RootMultiset roots = chern_roots(e, max_roots);
    MultiPoly p = pleth_s(lam, roots);
    PragaczResult r;
    r.two_alphabets = roots.ny > 0;
    if (!r.two_alphabets) {
        r.single = symexpand::schur_expand(p);
        Partition bad;
        Int bad_coeff;
        r.positive = r.single.is_positive(&bad, &bad_coeff);
        if (!r.positive) {
            std::ostringstream os;
            os << "coefficient " << bad_coeff.str() << " on s" << bad.to_string();
            r.violation = os.str();
        }
    } else {
        r.dual = symexpand::double_schur_expand(p);
        std::pair<Partition, Partition> bad;
        Int bad_coeff;
        r.positive = r.dual.is_positive(&bad, &bad_coeff);
        if (!r.positive) {
            std::ostringstream os;
            os << "coefficient " << bad_coeff.str() << " on s"
               << bad.first.to_string() << "*s" << bad.second.to_string();
            r.violation = os.str();
        }
    }
    return r;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    BundlePtr parse() {
        BundlePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("end of input");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        std::ostringstream os;
        os << "bundle parse error at offset " << pos_ << ": expected "
           << expected;
        throw std::invalid_argument(os.str());
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("'") + c + "'");
    }
    int integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_ || (pos_ - start == 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("an integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("an identifier");
        return s_.substr(start, pos_ - start);
    }
    Partition partition() {
        expect('[');
        std::vector<int> parts;
        skip_ws();
        if (!eat(']')) {
            parts.push_back(integer());
            while (eat(',')) parts.push_back(integer());
            expect(']');
        }
        try {
            return Partition(std::move(parts));
        } catch (const std::invalid_argument&) {
            fail("a weakly decreasing list of positive parts");
        }
    }
    BundlePtr expr() {
        skip_ws();
        size_t mark = pos_;
        std::string id = ident();
        if (id == "wedge" || id == "sym") {
            expect('(');
            int k = integer();
            expect(',');
            BundlePtr child = expr();
            expect(')');
            return id == "wedge" ? BundleExpr::wedge(k, child)
                                 : BundleExpr::sym(k, child);
        }
        if (id == "schur") {
            expect('(');
            Partition lam = partition();
            expect(',');
            BundlePtr child = expr();
            expect(')');
            return BundleExpr::schur(std::move(lam), child);
        }
        if (id == "tensor" || id == "oplus") {
            expect('(');
            BundlePtr x = expr();
            expect(',');
            BundlePtr y = expr();
            expect(')');
            return id == "tensor" ? BundleExpr::tensor(x, y)
                                  : BundleExpr::sum(x, y);
        }
        // base bundle NAME:RANK
        if (!eat(':')) {
            pos_ = mark;
            fail("'wedge', 'sym', 'schur', 'tensor', 'oplus', or NAME:RANK");
        }
        int rank = integer();
        return BundleExpr::base(id, rank);
    }
};

}  // namespace

BundlePtr parse_bundle(const std::string& text) { return Parser(text).parse(); }

}  // namespace bpp::chern
