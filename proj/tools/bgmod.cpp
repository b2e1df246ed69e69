#include "bgmod/a1.hpp"
#include "bgmod/bg.hpp"
#include "bgmod/dump.hpp"
#include "bgmod/margolis.hpp"
#include "bgmod/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::ordered_json;
using namespace bgmod;

namespace {

int g_exit = 0;

void check_weight(std::uint64_t n) {
    if (n > 64) throw std::invalid_argument("weights above 64 are not supported here");
}

/* Q(n, m) snapshots round-trip through the dump format, so an optional
 * directory can serve as a cache across runs. */
ModulePtr q_module_cached(std::uint64_t n, std::uint64_t m) {
    const char* dir = std::getenv("BGMOD_CACHE_DIR");
    if (!dir)
        return build_q_module(n, m).module;
    std::string path =
        std::string(dir) + "/q_" + std::to_string(n) + "_" + std::to_string(m) + ".txt";
    {
        std::ifstream in(path);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            return parse_module(ss.str());
        }
    }
    ModulePtr mod = build_q_module(n, m).module;
    std::ofstream out(path);
    if (out) out << dump_module(*mod);
    return mod;
}

void cmd_basis(std::uint64_t n, bool as_json) {
    check_weight(n);
    const WeightModule& w = weight_module(n);
    if (as_json) {
        ordered_json j;
        j["n"] = n;
        j["dim"] = w.mod->total_dim();
        j["lo"] = w.lo();
        j["hi"] = w.hi();
        ordered_json ds = ordered_json::array();
        for (int d = w.lo(); d <= w.hi(); ++d)
            ds.push_back({{"d", d}, {"basis", w.mod->labels(d)}});
        j["degrees"] = std::move(ds);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << w.mod->name << ": dim " << w.mod->total_dim() << ", degrees " << w.lo()
              << ".." << w.hi() << "\n";
    for (int d = w.lo(); d <= w.hi(); ++d) {
        std::cout << "  " << d << ":";
        for (const auto& l : w.mod->labels(d)) std::cout << " " << l;
        std::cout << "\n";
    }
}

void cmd_sq(int i, const std::string& poly, bool as_json) {
    Poly p = Poly::parse(poly);
    Poly out = sq(std::uint32_t(i), p);
    if (as_json) {
        ordered_json j{{"i", i}, {"input", p.str()}, {"result", out.str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.str() << "\n";
    }
}

void cmd_qm(int m, const std::string& poly, bool as_json) {
    Poly p = Poly::parse(poly);
    Poly out = qm(m, p);
    if (as_json) {
        ordered_json j{{"m", m}, {"input", p.str()}, {"result", out.str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.str() << "\n";
    }
}

void cmd_margolis(std::uint64_t n, int m, bool as_json) {
    check_weight(n);
    const WeightModule& w = weight_module(n);
    MargolisReport rep = margolis(*w.mod, m);
    if (as_json) {
        ordered_json j;
        j["n"] = n;
        j["milnor"] = m;
        j["total"] = rep.total_homology;
        j["acyclic"] = rep.acyclic;
        ordered_json ds = ordered_json::array();
        for (const auto& md : rep.degrees) {
            if (md.dim_homology == 0) continue;
            std::vector<std::string> reps;
            for (const auto& r : md.reps) reps.push_back(label_combo(*w.mod, md.d, r));
            ds.push_back({{"d", md.d}, {"dim", md.dim_homology}, {"reps", reps}});
        }
        j["degrees"] = std::move(ds);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << margolis_text(*w.mod, rep);
}

void cmd_qmodule(std::uint64_t n, std::uint64_t m, bool as_json, bool as_dump) {
    check_weight(m);
    ModulePtr mod = q_module_cached(n, m);
    if (as_dump) {
        std::cout << dump_module(*mod);
        return;
    }
    A1Decomposition dec = a1_free_decomposition(*mod);
    std::vector<int> gens;
    for (const auto& g : dec.generators) gens.push_back(g.degree);
    if (as_json) {
        ordered_json j;
        j["n"] = n;
        j["m"] = m;
        j["dim"] = mod->total_dim();
        j["lo"] = mod->lo();
        j["hi"] = mod->hi();
        std::vector<int> dims;
        for (int d = mod->lo(); d <= mod->hi(); ++d) dims.push_back(mod->dim(d));
        j["dims"] = dims;
        j["a1_free"] = dec.free;
        if (dec.free) j["generator_degrees"] = gens;
        else j["reason"] = dec.reason;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "dim " << mod->total_dim() << "; degrees " << mod->lo() << ".."
              << mod->hi() << ":";
    for (int d = mod->lo(); d <= mod->hi(); ++d) std::cout << " " << mod->dim(d);
    if (dec.free) {
        std::cout << "; A(1)-free on degrees [";
        for (std::size_t k = 0; k < gens.size(); ++k)
            std::cout << (k ? ", " : "") << gens[k];
        std::cout << "]\n";
    } else {
        std::cout << "; not A(1)-free (" << dec.reason << ")\n";
    }
}

void cmd_scan(std::uint64_t n_max, std::uint64_t m_max, int jobs, bool as_json) {
    check_weight(m_max);
    ScanReport rep = scan_main_theorem(n_max, m_max, jobs);
    std::size_t predicted = 0, acyclic = 0, free_ok = 0;
    for (const auto& r : rep.records) {
        predicted += r.predicted;
        acyclic += r.oracle;
        free_ok += r.free_checked && r.free_ok;
    }
    if (as_json) {
        ordered_json j;
        j["n_max"] = n_max;
        j["m_max"] = m_max;
        j["pairs"] = rep.records.size();
        j["predicted"] = predicted;
        j["acyclic"] = acyclic;
        j["free"] = free_ok;
        ordered_json ms = ordered_json::array();
        for (std::size_t i : rep.mismatches) {
            const auto& r = rep.records[i];
            ms.push_back({{"n", r.n},
                          {"m", r.m},
                          {"predicted", r.predicted},
                          {"oracle", r.oracle},
                          {"free_checked", r.free_checked},
                          {"free_ok", r.free_ok},
                          {"witness", r.witness}});
        }
        j["mismatches"] = std::move(ms);
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i : rep.mismatches) {
            const auto& r = rep.records[i];
            std::cout << "mismatch n=" << r.n << " m=" << r.m << " predicted=" << r.predicted
                      << " oracle=" << r.oracle;
            if (r.free_checked) std::cout << " free=" << r.free_ok;
            if (!r.witness.empty()) std::cout << " witness: " << r.witness;
            std::cout << "\n";
        }
        std::cout << "pairs " << rep.records.size() << "\n";
        std::cout << "predicted " << predicted << "\n";
        std::cout << "acyclic " << acyclic << "\n";
        std::cout << "free " << free_ok << "\n";
        std::cout << rep.mismatches.size() << " mismatches\n";
    }
    std::cerr << "scan wall time: " << rep.seconds << "s\n";
    if (!rep.mismatches.empty()) g_exit = 2;
}

void cmd_table(int m, std::uint64_t n_max, bool as_json) {
    KTable t = k_tables(m, n_max);
    if (as_json) {
        ordered_json j;
        j["m"] = m;
        j["ranks"] = t.ranks;
        j["closed_form"] = t.closed_form;
        j["series"] = t.series;
        j["notes"] = t.notes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n rank closed series\n";
        for (std::size_t n = 0; n < t.ranks.size(); ++n)
            std::cout << n << " " << t.ranks[n] << " " << t.closed_form[n] << " "
                      << t.series[n] << "\n";
        if (t.notes.empty()) {
            std::cout << "agreement\n";
        } else {
            for (const auto& s : t.notes) std::cout << "note: " << s << "\n";
            g_exit = 2;
        }
    }
}

void cmd_diagram(std::uint64_t n, std::int64_t m) {
    check_weight(n);
    if (m < 0) {
        std::cout << module_dot(*weight_module(n).mod);
    } else {
        check_weight(std::uint64_t(m));
        std::cout << module_dot(*q_module_cached(n, std::uint64_t(m)));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual Brown-Gitler module calculator over the mod 2 Steenrod algebra"};
    app.require_subcommand(1);

    std::uint64_t n = 0, m2 = 0, n_max = 0, m_max = 0;
    std::int64_t m_opt = -1;
    int i = 0, mil = 0, jobs = 1;
    std::string poly;
    bool as_json = false, as_dump = false;

    auto* basis = app.add_subcommand("basis", "list the basis of J(n) by degree");
    basis->add_option("n", n, "weight")->required();
    basis->add_flag("--json", as_json, "emit JSON");
    basis->callback([&] { cmd_basis(n, as_json); });

    auto* sqc = app.add_subcommand("sq", "apply a Steenrod square to a polynomial");
    sqc->add_option("i", i, "square index")->required()->check(CLI::NonNegativeNumber);
    sqc->add_option("poly", poly, "polynomial, e.g. 'x0^2*x2 + x1^3'")->required();
    sqc->add_flag("--json", as_json, "emit JSON");
    sqc->callback([&] { cmd_sq(i, poly, as_json); });

    auto* qmc = app.add_subcommand("qm", "apply a Milnor primitive to a polynomial");
    qmc->add_option("m", mil, "Milnor index")->required()->check(CLI::NonNegativeNumber);
    qmc->add_option("poly", poly, "polynomial")->required();
    qmc->add_flag("--json", as_json, "emit JSON");
    qmc->callback([&] { cmd_qm(mil, poly, as_json); });

    auto* marg = app.add_subcommand("margolis", "Margolis homology H(J(n); Q_m)");
    marg->add_option("n", n, "weight")->required();
    marg->add_option("m", mil, "Milnor index")->required()->check(CLI::NonNegativeNumber);
    marg->add_flag("--json", as_json, "emit JSON");
    marg->callback([&] { cmd_margolis(n, mil, as_json); });

    auto* qmod = app.add_subcommand("qmodule", "build Q(n, m) and test A(1)-freeness");
    qmod->add_option("n", n, "lower weight")->required();
    qmod->add_option("m", m2, "upper weight")->required();
    qmod->add_flag("--json", as_json, "emit JSON");
    qmod->add_flag("--dump", as_dump, "print the module snapshot instead");
    qmod->callback([&] { cmd_qmodule(n, m2, as_json, as_dump); });

    auto* scan = app.add_subcommand("scan", "compare the acyclicity criterion with the oracle");
    scan->add_option("n_max", n_max, "largest n")->required();
    scan->add_option("m_max", m_max, "largest m")->required();
    scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    scan->add_flag("--json", as_json, "emit JSON");
    scan->callback([&] { cmd_scan(n_max, m_max, jobs, as_json); });

    auto* table = app.add_subcommand("table", "Margolis ranks of J(n) against the closed forms");
    table->add_option("m", mil, "Milnor index, 0..2")->required();
    std::uint64_t tn = 24;
    table->add_option("--n-max", tn, "largest weight (default 24)");
    table->add_flag("--json", as_json, "emit JSON");
    table->callback([&] { cmd_table(mil, tn, as_json); });

    auto* diag = app.add_subcommand("diagram", "Graphviz drawing of J(n) or of Q(n, m)");
    diag->add_option("n", n, "weight")->required();
    diag->add_option("m", m_opt, "upper weight of Q(n, m)");
    diag->callback([&] { cmd_diagram(n, m_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const TheoryError& e) {
        std::cerr << "theory error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
