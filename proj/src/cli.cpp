#include "bpp/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bpp/boolprod.hpp"
#include "bpp/chern.hpp"
#include "bpp/frobmod.hpp"
#include "bpp/lascoux.hpp"
#include "bpp/serialize.hpp"
#include "bpp/symexpand.hpp"
#include "bpp/verify.hpp"

namespace bpp::cli {

using combinat::Partition;
using polyring::MultiPoly;
using schurbasis::GradedSchurSeries;
using schurbasis::SchurVector;
using serialize::Format;

namespace {

Partition parse_partition_arg(const std::string& text) {
    std::vector<int> parts;
    std::string s = text;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw CLI::ValidationError("partition", "missing closing ']'");
        s = s.substr(1, s.size() - 2);
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::exception& e) {
        throw CLI::ValidationError("partition", e.what());
    }
}

void print_expansion(const symexpand::SchurExpansion& e, Format fmt,
                     std::ostream& out) {
    switch (fmt) {
        case Format::kJson:
            out << serialize::schur_expansion_json(e).dump() << "\n";
            break;
        case Format::kLatex:
            out << serialize::latex_schur_expansion(e) << "\n";
            break;
        case Format::kPlain:
            if (e.terms.empty()) {
                out << "0\n";
                return;
            }
            for (const auto& [lam, c] : e.terms)
                out << std::setw(8) << c.str() << "  s" << lam.to_string()
                    << "\n";
            break;
    }
}

void print_vector(const SchurVector& v, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::kJson:
            out << serialize::schur_vector_json(v).dump() << "\n";
            break;
        case Format::kLatex:
            out << serialize::latex_schur_vector(v) << "\n";
            break;
        case Format::kPlain:
            if (v.is_zero()) {
                out << "0\n";
                return;
            }
            for (const auto& [lam, c] : v.terms())
                out << std::setw(8) << c.str() << "  s" << lam.to_string()
                    << "\n";
            break;
    }
}

void print_series(const GradedSchurSeries& g, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::kJson:
            out << serialize::graded_series_json(g).dump() << "\n";
            break;
        case Format::kLatex:
            out << serialize::latex_graded_series(g) << "\n";
            break;
        case Format::kPlain:
            if (g.is_zero()) {
                out << "0\n";
                return;
            }
            for (const auto& [key, c] : g.terms()) {
                auto [q, t, lam] = key;
                out << std::setw(8) << c.str() << "  q^" << q << " t^" << t
                    << " s" << lam.to_string() << "\n";
            }
            break;
    }
}

void print_poly(const MultiPoly& p, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::kJson:
            out << serialize::multipoly_json(p).dump() << "\n";
            break;
        case Format::kLatex:
            out << serialize::latex_multipoly(p) << "\n";
            break;
        case Format::kPlain:
            out << p.to_string() << "\n";
            break;
    }
}

struct Options {
    std::string format = "plain";
    int threads = 1;
};

int lascoux_verify(int n, std::ostream& out) {
    bool all_ok = true;
    Partition stair = Partition::staircase(n - 1);
    Int total = 0;
    bool counts_ok = true;
    for (const Partition& mu : combinat::partitions_inside(stair)) {
        Int fills = Int(lascoux::rff_enumerate(mu, n).size());
        total += fills;
        Int bdet = lascoux::binomial_det(mu, n);
        Int paths = Int(lascoux::gv_enumerate(mu, n).size());
        Int num = int_pow(2, mu.size()) * lascoux::lascoux_det(stair, mu, n);
        Int den = int_pow(2, n * (n - 1) / 2);
        if (!(fills == bdet && bdet == paths && num % den == 0 &&
              num / den == fills)) {
            counts_ok = false;
            out << "FAIL three-way count at mu=" << mu.to_string() << "\n";
        }
    }
    if (counts_ok) out << "three-way counts (fillings = dets = paths): OK\n";
    all_ok = all_ok && counts_ok;

    Int asmn = lascoux::asm_count(n);
    bool asm_ok = total == asmn;
    out << "sum of r_mu = " << total.str() << (asm_ok ? " = " : " != ")
        << "ASM(" << n << ") = " << asmn.str() << (asm_ok ? ": OK" : ": FAIL")
        << "\n";
    all_ok = all_ok && asm_ok;

    auto wedge_formula = lascoux::lascoux_wedge_expansion(n);
    auto wedge_peeled =
        symexpand::schur_expand(lascoux::wedge_product_poly(n));
    SchurVector wp;
    for (const auto& [lam, c] : wedge_peeled.terms) wp.add(lam, c);
    bool wedge_ok = wedge_formula == wp;
    out << "wedge expansion matches peeled product: "
        << (wedge_ok ? "OK" : "FAIL") << "\n";
    all_ok = all_ok && wedge_ok;

    auto sym_formula = lascoux::lascoux_sym_expansion(n);
    auto sym_peeled = symexpand::schur_expand(lascoux::sym_product_poly(n));
    SchurVector sp;
    for (const auto& [lam, c] : sym_peeled.terms) sp.add(lam, c);
    bool sym_ok = sym_formula == sp;
    out << "sym expansion matches peeled product: " << (sym_ok ? "OK" : "FAIL")
        << "\n";
    all_ok = all_ok && sym_ok;

    out << "f(" << n << ") = " << sym_formula.coefficient_sum().str() << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact computations with Boolean product polynomials"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: plain|json|latex")
        ->check(CLI::IsMember({"plain", "json", "latex"}));
    app.add_option("--threads", opt.threads,
                   "worker threads for large products (results identical)")
        ->check(CLI::PositiveNumber);

    // ---- boolean ----
    auto* boolean = app.add_subcommand("boolean", "Boolean product polynomials");
    boolean->require_subcommand(1);
    int bn = 0, bk = 0, bm = 0, bl = 0;
    auto* bexpand = boolean->add_subcommand("expand", "Schur expansion of B_{n,k}");
    bexpand->add_option("n", bn)->required();
    bexpand->add_option("k", bk)->required();
    auto* btotal = boolean->add_subcommand("total", "Schur expansion of B_n");
    btotal->add_option("n", bn)->required();
    auto* bq = boolean->add_subcommand("q", "q-analogue of B_{n,n-1}, by q-grade");
    bq->add_option("n", bn)->required();
    auto* bbiv =
        boolean->add_subcommand("bivariate", "two-alphabet Boolean product");
    bbiv->add_option("n", bn)->required();
    bbiv->add_option("k", bk)->required();
    bbiv->add_option("m", bm)->required();
    bbiv->add_option("l", bl)->required();

    // ---- lascoux ----
    auto* lasc = app.add_subcommand("lascoux", "staircase product expansions");
    lasc->require_subcommand(1);
    int ln = 0;
    std::string lshape;
    auto* lwedge = lasc->add_subcommand("wedge", "expansion of prod_{i<j}(1+x_i+x_j)");
    lwedge->add_option("n", ln)->required();
    auto* lsym = lasc->add_subcommand("sym", "expansion of prod_{i<=j}(1+x_i+x_j)");
    lsym->add_option("n", ln)->required();
    auto* lrff = lasc->add_subcommand("rff", "reverse flagged fillings");
    lrff->add_option("n", ln)->required();
    lrff->add_option("--shape", lshape, "restrict to one shape, e.g. [2,1]");
    auto* lverify = lasc->add_subcommand("verify", "check the module identities");
    lverify->add_option("n", ln)->required();

    // ---- frob ----
    auto* frob = app.add_subcommand("frob", "graded Frobenius characteristics");
    frob->require_subcommand(1);
    int fn = 0, fk = 0, fr = 0;
    std::string undef = "skip";
    auto* fcoinv = frob->add_subcommand("coinvariant", "coinvariant algebra");
    fcoinv->add_option("n", fn)->required();
    auto* fsuper = frob->add_subcommand("superspace", "divergence-free quotient");
    fsuper->add_option("n", fn)->required();
    auto* fhrs = frob->add_subcommand("hrs", "Haglund-Rhoades-Shimozono quotient");
    fhrs->add_option("n", fn)->required();
    fhrs->add_option("k", fk)->required();
    fhrs->add_option("r", fr)->required();
    fhrs->add_option("--undefined-terms", undef, "skip|error")
        ->check(CLI::IsMember({"skip", "error"}));
    auto* fpos = frob->add_subcommand("positroid", "positroid module Frobenius");
    fpos->add_option("n", fn)->required();
    auto* frw = frob->add_subcommand("reiner-webb", "smallest-ascent expansion");
    frw->add_option("n", fn)->required();
    auto* fder =
        frob->add_subcommand("derangement-check", "quasisymmetric identity");
    fder->add_option("n", fn)->required();

    // ---- chern ----
    auto* chern_cmd = app.add_subcommand("chern", "Chern plethysm");
    chern_cmd->footer(
        "Bundle expression grammar:\n"
        "  expr     := NAME ':' RANK          base bundle (at most two names;\n"
        "                                     first name = X, second = Y)\n"
        "            | 'wedge' '(' k ',' expr ')'\n"
        "            | 'sym' '(' k ',' expr ')'\n"
        "            | 'schur' '(' '[' parts ']' ',' expr ')'\n"
        "            | 'oplus' '(' expr ',' expr ')'\n"
        "            | 'tensor' '(' expr ',' expr ')'\n"
        "Examples: E:3   wedge(2, E:4)   tensor(sym(2, E:3), F:2)");
    chern_cmd->require_subcommand(1);
    std::string cexpr, cfun, clam;
    int cbound = chern::kDefaultRootBound;
    auto* croots = chern_cmd->add_subcommand("roots", "Chern roots of a bundle");
    croots->add_option("expr", cexpr, "bundle expression, e.g. wedge(2, E:4)")
        ->required();
    croots->add_option("--max-roots", cbound)->check(CLI::PositiveNumber);
    auto* cpleth = chern_cmd->add_subcommand("pleth", "evaluate F at the roots");
    cpleth->add_option("F", cfun, "e:d | h:d | p:d | s:[lambda]")->required();
    cpleth->add_option("expr", cexpr)->required();
    cpleth->add_option("--max-roots", cbound)->check(CLI::PositiveNumber);
    auto* ctotal = chern_cmd->add_subcommand("total", "total Chern class");
    ctotal->add_option("expr", cexpr)->required();
    ctotal->add_option("--max-roots", cbound)->check(CLI::PositiveNumber);
    auto* cprag = chern_cmd->add_subcommand("pragacz", "positivity of s_lambda(E)");
    cprag->add_option("lambda", clam, "partition, e.g. [2,1]")->required();
    cprag->add_option("expr", cexpr)->required();
    cprag->add_option("--max-roots", cbound)->check(CLI::PositiveNumber);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "acceptance identities");
    verify_cmd->require_subcommand(1);
    int vmax = -1;
    auto* vall = verify_cmd->add_subcommand("all", "run every identity");
    vall->add_option("--max-n", vmax, "cap the per-identity ranges");

    // global options (--format, --threads) may appear after any subcommand
    auto enable_fallthrough = [](CLI::App* a, auto&& self) -> void {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; }))
            self(sub, self);
    };
    enable_fallthrough(&app, enable_fallthrough);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    polyring::set_thread_count(opt.threads);
    Format fmt = serialize::parse_format(opt.format);

    try {
        if (bexpand->parsed()) {
            print_expansion(symexpand::schur_expand(boolprod::boolean_product(bn, bk)),
                            fmt, out);
            return 0;
        }
        if (btotal->parsed()) {
            if (bn >= 6)
                err << "warning: B_n for n >= 6 is past desk scale; this may "
                       "take a very long time\n";
            auto res = boolprod::check_schur_positive(boolprod::boolean_total(bn));
            print_expansion(res.expansion, fmt, out);
            if (!res.positive) {
                err << "not Schur positive: coefficient "
                    << res.violation_coeff.str() << " on s"
                    << res.violation_shape.to_string() << "\n";
                return 1;
            }
            return 0;
        }
        if (bq->parsed()) {
            auto grades = symexpand::schur_expand_by_q(boolprod::boolean_q(bn));
            for (const auto& [j, expansion] : grades) {
                if (fmt == Format::kPlain) out << "q^" << j << ":\n";
                print_expansion(expansion, fmt, out);
            }
            return 0;
        }
        if (bbiv->parsed()) {
            auto exp = symexpand::double_schur_expand(
                boolprod::bivariate_boolean(bn, bk, bm, bl));
            if (fmt == Format::kJson) {
                out << serialize::double_schur_expansion_json(exp).dump() << "\n";
            } else if (fmt == Format::kLatex) {
                out << serialize::latex_double_expansion(exp) << "\n";
            } else {
                for (const auto& [key, c] : exp.terms)
                    out << std::setw(8) << c.str() << "  s"
                        << key.first.to_string() << " * s"
                        << key.second.to_string() << "\n";
            }
            std::pair<Partition, Partition> bad;
            Int bad_coeff;
            if (!exp.is_positive(&bad, &bad_coeff)) {
                err << "not Schur positive in the product basis\n";
                return 1;
            }
            return 0;
        }
        if (lwedge->parsed()) {
            print_vector(lascoux::lascoux_wedge_expansion(ln), fmt, out);
            return 0;
        }
        if (lsym->parsed()) {
            print_vector(lascoux::lascoux_sym_expansion(ln), fmt, out);
            return 0;
        }
        if (lrff->parsed()) {
            std::vector<Partition> shapes;
            if (!lshape.empty()) {
                shapes.push_back(parse_partition_arg(lshape));
            } else {
                shapes = combinat::partitions_inside(Partition::staircase(ln - 1));
            }
            for (const Partition& mu : shapes) {
                auto fills = lascoux::rff_enumerate(mu, ln);
                if (fmt == Format::kJson) {
                    serialize::ordered_json j;
                    j["shape"] = serialize::partition_json(mu);
                    j["count"] = fills.size();
                    auto arr = serialize::ordered_json::array();
                    for (const auto& t : fills) arr.push_back(t.rows);
                    j["fillings"] = std::move(arr);
                    out << j.dump() << "\n";
                } else {
                    out << "shape " << mu.to_string() << ": " << fills.size()
                        << " filling(s)\n";
                    for (const auto& t : fills) {
                        out << "  ";
                        for (size_t i = 0; i < t.rows.size(); ++i) {
                            if (i) out << " / ";
                            for (size_t j2 = 0; j2 < t.rows[i].size(); ++j2) {
                                if (j2) out << " ";
                                out << t.rows[i][j2];
                            }
                        }
                        out << "\n";
                    }
                }
            }
            return 0;
        }
        if (lverify->parsed()) return lascoux_verify(ln, out);
        if (fcoinv->parsed()) {
            print_series(frobmod::coinvariant_grfrob(fn), fmt, out);
            return 0;
        }
        if (fsuper->parsed()) {
            print_series(frobmod::superspace_grfrob(fn), fmt, out);
            return 0;
        }
        if (fhrs->parsed()) {
            auto res = frobmod::hrs_superspace(fn, fk, fr,
                                               undef == "skip"
                                                   ? frobmod::UndefinedTerms::kSkip
                                                   : frobmod::UndefinedTerms::kError);
            print_series(res.series, fmt, out);
            for (int j : res.skipped_j)
                err << "note: skipped undefined term at q-degree " << j << "\n";
            return 0;
        }
        if (fpos->parsed()) {
            print_vector(frobmod::positroid_frobenius(fn), fmt, out);
            return 0;
        }
        if (frw->parsed()) {
            print_vector(frobmod::reiner_webb(fn), fmt, out);
            return 0;
        }
        if (fder->parsed()) {
            bool ok = frobmod::derangement_qsym_check(fn);
            out << (ok ? "derangement quasisymmetric identity holds"
                       : "derangement quasisymmetric identity FAILS")
                << " at n=" << fn << "\n";
            return ok ? 0 : 1;
        }
        if (croots->parsed()) {
            auto roots = chern::chern_roots(chern::parse_bundle(cexpr), cbound);
            if (fmt == Format::kJson) {
                serialize::ordered_json j;
                j["nx"] = roots.nx;
                j["ny"] = roots.ny;
                j["rank"] = roots.rank();
                auto arr = serialize::ordered_json::array();
                for (const auto& f : roots.forms) {
                    serialize::ordered_json r;
                    r["x"] = f.x;
                    if (roots.ny > 0) r["y"] = f.y;
                    arr.push_back(std::move(r));
                }
                j["roots"] = std::move(arr);
                out << j.dump() << "\n";
            } else {
                out << "rank " << roots.rank() << "\n";
                for (const auto& f : roots.forms) out << "  " << f.to_string() << "\n";
            }
            return 0;
        }
        if (cpleth->parsed()) {
            auto roots = chern::chern_roots(chern::parse_bundle(cexpr), cbound);
            MultiPoly p(roots.nx, roots.ny);
            auto colon = cfun.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("F", "expected e:d, h:d, p:d or s:[..]");
            std::string head = cfun.substr(0, colon);
            std::string tail = cfun.substr(colon + 1);
            if (head == "s") {
                p = chern::pleth_s(parse_partition_arg(tail), roots);
            } else {
                int d = std::stoi(tail);
                if (head == "e")
                    p = chern::pleth_e(d, roots);
                else if (head == "h")
                    p = chern::pleth_h(d, roots);
                else if (head == "p")
                    p = chern::pleth_p(d, roots);
                else
                    throw CLI::ValidationError("F", "unknown basis " + head);
            }
            print_poly(p, fmt, out);
            return 0;
        }
        if (ctotal->parsed()) {
            print_poly(chern::total_chern(chern::parse_bundle(cexpr), cbound), fmt,
                       out);
            return 0;
        }
        if (cprag->parsed()) {
            auto res = chern::pragacz_check(parse_partition_arg(clam),
                                            chern::parse_bundle(cexpr), cbound);
            if (res.two_alphabets) {
                if (fmt == Format::kJson)
                    out << serialize::double_schur_expansion_json(res.dual).dump()
                        << "\n";
                else if (fmt == Format::kLatex)
                    out << serialize::latex_double_expansion(res.dual) << "\n";
                else
                    for (const auto& [key, c] : res.dual.terms)
                        out << std::setw(8) << c.str() << "  s"
                            << key.first.to_string() << " * s"
                            << key.second.to_string() << "\n";
            } else {
                print_expansion(res.single, fmt, out);
            }
            if (!res.positive) {
                err << "POSITIVITY FAILURE (Schur plethysms of bundle "
                       "expressions must be positive): "
                    << res.violation << "\n";
                return 1;
            }
            out << "Schur positive\n";
            return 0;
        }
        if (vall->parsed()) {
            auto checks = verify::run_all(vmax);
            bool all_ok = true;
            for (const auto& c : checks) {
                out << (c.pass ? "[PASS]" : "[FAIL]") << " " << std::setw(2)
                    << c.id << ". " << c.name;
                if (c.vacuous) out << " (vacuous under cap)";
                out << " — " << c.detail << " (" << std::fixed
                    << std::setprecision(2) << c.seconds << "s)\n";
                all_ok = all_ok && c.pass;
            }
            return all_ok ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no subcommand executed\n";
    return 2;
}

}  // namespace bpp::cli
