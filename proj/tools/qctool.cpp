#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qc/bounds.hpp"
#include "qc/convolutional.hpp"
#include "qc/counting.hpp"
#include "qc/crt.hpp"
#include "qc/duality.hpp"
#include "qc/io.hpp"
#include "qc/selftest.hpp"

namespace {

using namespace qc;

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string ext_nat_json(const ExtNat& v) {
    return v.is_infinite() ? "\"inf\"" : std::to_string(v.value());
}

std::uint64_t enumeration_budget() {
    if (const char* env = std::getenv("QC_BUDGET")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw CLI::ValidationError("QC_BUDGET", "must be a positive integer");
    }
    return LinearCode::kDefaultBudget;
}

std::string field_name(const FieldPtr& f) {
    std::string s = "GF(" + std::to_string(f->p());
    if (f->degree() > 1) s += "^" + std::to_string(f->degree());
    return s + ")";
}

int cmd_factor(std::uint64_t q, unsigned m, bool json) {
    auto fac = factor_xm1(Field::of_order(q), m);
    if (json) {
        std::cout << "{\"q\": " << q << ", \"m\": " << m << ", \"factors\": [";
        for (size_t i = 0; i < fac.size(); ++i) {
            const auto& f = fac.factors[i];
            std::cout << (i ? ", " : "") << "{\"poly\": \"" << f.poly.coeff_list()
                      << "\", \"leader\": " << f.leader << ", \"coset\": [";
            for (size_t j = 0; j < f.coset.size(); ++j)
                std::cout << (j ? ", " : "") << f.coset[j];
            std::cout << "], \"self_reciprocal\": " << (f.self_reciprocal ? "true" : "false")
                      << "}";
        }
        std::cout << "]}\n";
    } else {
        std::cout << "x^" << m << " - 1 over " << field_name(fac.base) << ": " << fac.size()
                  << " irreducible factors\n";
        for (const auto& f : fac.factors) {
            std::cout << "  " << std::left << std::setw(24) << f.poly.str() << " coset {";
            for (size_t j = 0; j < f.coset.size(); ++j) std::cout << (j ? "," : "") << f.coset[j];
            std::cout << "}" << (f.self_reciprocal ? " self-reciprocal" : "") << "\n";
        }
    }
    return 0;
}

int cmd_decompose(const std::string& file, bool json) {
    QCCode c = read_qc_file(file);
    auto dec = decompose(c);
    if (json) {
        std::cout << "{\"constituents\": [";
        for (size_t i = 0; i < dec.parts.size(); ++i) {
            const auto& p = dec.parts[i];
            std::cout << (i ? ", " : "") << "{\"factor\": \""
                      << dec.fac.factors[i].poly.coeff_list() << "\", \"u\": " << p.leader
                      << ", \"field\": \"" << field_name(p.field) << "\", \"dim\": "
                      << p.code.dim() << ", \"basis\": [";
            for (size_t r = 0; r < p.code.basis().size(); ++r) {
                std::cout << (r ? ", " : "") << "[";
                for (size_t j = 0; j < p.code.basis()[r].size(); ++j)
                    std::cout << (j ? ", " : "") << p.code.basis()[r][j];
                std::cout << "]";
            }
            std::cout << "]}";
        }
        std::cout << "]}\n";
    } else {
        for (const auto& p : dec.parts) {
            std::cout << "factor=" << dec.fac.factors[p.index].poly.str() << " u=" << p.leader
                      << " field=" << field_name(p.field) << "\n";
            if (p.code.basis().empty()) std::cout << "  (zero constituent)\n";
            for (const auto& row : p.code.basis()) {
                std::cout << " ";
                for (auto v : row) std::cout << " " << v;
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int cmd_groebner(const std::string& file, bool json) {
    QCCode c = read_qc_file(file);
    const auto& g = c.groebner();
    if (json) {
        std::cout << "{\"dim\": " << c.dimension() << ", \"rows\": [";
        for (size_t i = 0; i < g.ell(); ++i) {
            std::cout << (i ? ", " : "") << "[";
            for (size_t j = 0; j < g.ell(); ++j)
                std::cout << (j ? ", " : "") << "\"" << g.at(i, j).coeff_list() << "\"";
            std::cout << "]";
        }
        std::cout << "]}\n";
    } else {
        std::cout << "reduced Groebner basis (POT), dim = " << c.dimension() << "\n";
        for (size_t i = 0; i < g.ell(); ++i) {
            for (size_t j = 0; j < g.ell(); ++j)
                std::cout << (j ? " | " : "  ") << std::left << std::setw(18)
                          << g.at(i, j).str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_bounds(const std::string& file, bool with_exact, std::uint64_t budget, bool json) {
    QCCode c = read_qc_file(file);
    BoundReport rep = best_bounds(c, with_exact, budget);
    if (json) {
        std::cout << "{\"length\": " << rep.length << ", \"dim\": " << rep.dim
                  << ", \"bounds\": {";
        for (size_t i = 0; i < rep.bounds.size(); ++i)
            std::cout << (i ? ", " : "") << "\"" << rep.bounds[i].first
                      << "\": {\"value\": " << ext_nat_json(rep.bounds[i].second.value)
                      << ", \"witness\": \"" << json_escape(rep.bounds[i].second.witness)
                      << "\"}";
        std::cout << "}, \"exact\": " << (rep.exact ? ext_nat_json(*rep.exact) : "null")
                  << "}\n";
    } else {
        std::cout << "[" << rep.length << ", " << rep.dim << "] code\n";
        for (const auto& [name, entry] : rep.bounds)
            std::cout << "  " << std::left << std::setw(14) << name << " " << std::setw(5)
                      << entry.value.str() << " " << entry.witness << "\n";
        if (rep.exact) std::cout << "  exact distance " << rep.exact->str() << "\n";
    }
    return 0;
}

int cmd_distance(const std::string& file, std::uint64_t budget, bool json) {
    QCCode c = read_qc_file(file);
    ExtNat d = c.expand().min_distance_exact(budget);
    if (json)
        std::cout << "{\"length\": " << c.length() << ", \"dim\": " << c.dimension()
                  << ", \"distance\": " << ext_nat_json(d) << "}\n";
    else
        std::cout << "[" << c.length() << ", " << c.dimension() << ", " << d.str()
                  << "] (exact)\n";
    return 0;
}

int cmd_check(const std::string& file, bool self_dual, bool lcd, bool json) {
    QCCode c = read_qc_file(file);
    DualityVerdict v = self_dual ? is_self_dual(c) : is_lcd(c);
    const char* prop = self_dual ? "self-dual" : "LCD";
    (void)lcd;
    if (json)
        std::cout << "{\"property\": \"" << prop << "\", \"holds\": "
                  << (v.holds ? "true" : "false") << ", \"detail\": \"" << json_escape(v.detail)
                  << "\"}\n";
    else
        std::cout << prop << ": " << (v.holds ? "yes" : "no")
                  << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
    return v.holds ? 0 : 1;
}

int cmd_construct(const std::string& c1_file, const std::string& c2_file,
                  const std::string& out_file, bool json) {
    LinearCode c1 = read_linear_file(c1_file);
    LinearCode c2 = read_linear_file(c2_file);
    QCCode c = cubic_construction(c1, c2);
    if (out_file.empty())
        write_qc(std::cout, c);
    else
        write_qc_file(out_file, c);
    if (json)
        std::cout << "{\"length\": " << c.length() << ", \"dim\": " << c.dimension() << "}\n";
    else if (!out_file.empty())
        std::cout << "wrote [" << c.length() << ", " << c.dimension() << "] code to "
                  << out_file << "\n";
    return 0;
}

int cmd_conv_bound(const std::string& gen_file, unsigned m, unsigned cap, std::uint64_t budget,
                   bool json) {
    ConvolutionalCode c = read_encoder_file(gen_file);
    DfreeBound lower = dfree_lower_bound(c, m, budget);
    std::uint64_t upper = dfree_search(c, cap, budget);
    if (json)
        std::cout << "{\"m\": " << m << ", \"lower\": " << ext_nat_json(lower.value)
                  << ", \"lower_exact_projection\": " << (lower.exact ? "true" : "false")
                  << ", \"search_cap\": " << cap << ", \"search\": " << upper << "}\n";
    else {
        std::cout << "d_free lower bound (m=" << m << "): " << lower.value.str() << " ["
                  << lower.witness << "]\n";
        std::cout << "d_free search (degree cap " << cap << "): " << upper << "\n";
    }
    return 0;
}

int cmd_asymptotics(unsigned ell, bool type2, bool json) {
    if (type2 && ell % 8 != 0)
        throw CLI::ValidationError("--type2", "requires a length divisible by 8");
    CountReport r = mass_formulas(ell);
    if (json) {
        std::cout << r.json();
        std::cout << "\n";
    } else {
        std::cout << "self-dual binary codes of length " << ell << ": " << r.n2
                  << " (through a fixed word: " << r.m2 << ")\n";
        std::cout << "Hermitian self-dual quaternary codes: " << r.n4 << " (through: " << r.m4
                  << ")\n";
        if (r.t2)
            std::cout << "Type II: " << *r.t2 << " (through: " << *r.s2 << ")\n";
        std::cout << "guaranteed self-dual QC distance at length " << 3 * ell << ": "
                  << r.d_selfdual << "\n";
        if (r.d_type2) std::cout << "guaranteed Type II QC distance: " << *r.d_type2 << "\n";
    }
    return 0;
}

int cmd_selftest(bool json) {
    SelftestReport r = run_selftest();
    if (json)
        std::cout << r.json();
    else
        for (const auto& c : r.criteria)
            std::cout << (c.passed ? "pass" : "FAIL") << "  " << std::left << std::setw(24)
                      << c.name << " " << c.detail << "\n";
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-cyclic code toolbox"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    std::uint64_t q = 2;
    unsigned m = 7, ell = 2, cap = 6;
    std::string file, gen_file, c1_file, c2_file, out_file;
    bool with_exact = false, self_dual = false, lcd = false, type2 = false;
    std::optional<std::uint64_t> budget_flag;

    auto* factor = app.add_subcommand("factor", "factor x^m - 1 over GF(q)");
    factor->add_option("-q", q, "field order")->required();
    factor->add_option("-m", m, "exponent m")->required();

    auto* dec = app.add_subcommand("decompose", "constituent decomposition of a QC code");
    dec->add_option("--file", file, "QC code file")->required();

    auto* gro = app.add_subcommand("groebner", "reduced Groebner generator matrix");
    gro->add_option("--file", file, "QC code file")->required();

    auto* bnd = app.add_subcommand("bounds", "minimum-distance lower bounds");
    bnd->add_option("--file", file, "QC code file")->required();
    bnd->add_flag("--exact", with_exact, "also run the exact enumeration oracle");
    bnd->add_option("--budget", budget_flag, "enumeration budget override");

    auto* dist = app.add_subcommand("distance", "exact minimum distance");
    dist->add_option("--file", file, "QC code file")->required();
    dist->add_option("--budget", budget_flag, "enumeration budget override");

    auto* chk = app.add_subcommand("check", "verify a duality property (exit 1 when it fails)");
    chk->add_option("--file", file, "QC code file")->required();
    chk->add_flag("--self-dual", self_dual, "check self-duality");
    chk->add_flag("--lcd", lcd, "check linear complementary duality");

    auto* con = app.add_subcommand("construct", "cubic construction from C1 (binary) and C2 "
                                                "(quaternary)");
    con->add_option("--c1", c1_file, "binary linear code file")->required();
    con->add_option("--c2", c2_file, "quaternary linear code file")->required();
    con->add_option("-o,--out", out_file, "output QC code file (default: stdout)");

    auto* cnv = app.add_subcommand("conv-bound", "free-distance bound via QC projection");
    cnv->add_option("--gen", gen_file, "encoder file")->required();
    cnv->add_option("--m", m, "projection modulus")->required();
    cnv->add_option("--cap", cap, "message degree cap for the search");
    cnv->add_option("--budget", budget_flag, "enumeration budget override");

    auto* asy = app.add_subcommand("asymptotics", "self-dual mass formulas and existence "
                                                  "distances");
    asy->add_option("--ell", ell, "even index (length is 3*ell)")->required();
    asy->add_flag("--type2", type2, "require the Type II (8 | ell) quantities");

    auto* st = app.add_subcommand("selftest", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::uint64_t budget = budget_flag.value_or(enumeration_budget());
        if (factor->parsed()) return cmd_factor(q, m, json);
        if (dec->parsed()) return cmd_decompose(file, json);
        if (gro->parsed()) return cmd_groebner(file, json);
        if (bnd->parsed()) return cmd_bounds(file, with_exact, budget, json);
        if (dist->parsed()) return cmd_distance(file, budget, json);
        if (chk->parsed()) {
            if (self_dual == lcd)
                throw CLI::ValidationError("check", "pass exactly one of --self-dual, --lcd");
            return cmd_check(file, self_dual, lcd, json);
        }
        if (con->parsed()) return cmd_construct(c1_file, c2_file, out_file, json);
        if (cnv->parsed()) return cmd_conv_bound(gen_file, m, cap, budget, json);
        if (asy->parsed()) return cmd_asymptotics(ell, type2, json);
        if (st->parsed()) return cmd_selftest(json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "malformed input file: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "enumeration budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
