#include "bgmod/dump.hpp"

#include <sstream>
#include <stdexcept>

namespace bgmod {

std::string dump_module(const FiniteGradedModule& m) {
    std::ostringstream os;
    os << "module " << (m.name.empty() ? "?" : m.name) << "\n";
    os << "range " << m.lo() << " " << m.hi() << " complete " << (m.complete() ? 1 : 0)
       << "\n";
    for (int d = m.lo(); d <= m.hi(); ++d) {
        os << "degree " << d << " dim " << m.dim(d) << "\n";
        for (const auto& l : m.labels(d)) os << "  " << l << "\n";
    }
    for (int i = 1; i <= m.span(); ++i) {
        for (int d = m.lo(); d + i <= m.hi(); ++d) {
            const F2Matrix* b = m.sq(i, d);
            if (!b || b->is_zero()) continue;
            os << "sq " << i << " from " << d << " rows " << b->rows() << " cols "
               << b->cols() << "\n";
            for (std::size_t r = 0; r < b->rows(); ++r) {
                for (std::size_t c = 0; c < b->cols(); ++c) os << (b->get(r, c) ? '1' : '0');
                os << "\n";
            }
        }
    }
    os << "end\n";
    return os.str();
}

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("module parse: " + what);
}

bool next_line(std::istringstream& in, std::string& line) {
    return bool(std::getline(in, line));
}

}  // namespace

ModulePtr parse_module(const std::string& text) {
    std::istringstream in(text);
    std::string line;

    if (!next_line(in, line) || line.rfind("module ", 0) != 0) bad("missing module line");
    std::string name = line.substr(7);

    if (!next_line(in, line)) bad("missing range line");
    int lo = 0, hi = 0, comp = 0;
    {
        std::istringstream ls(line);
        std::string w1, w2;
        if (!(ls >> w1 >> lo >> hi >> w2 >> comp) || w1 != "range" || w2 != "complete")
            bad("malformed range line");
    }
    if (hi < lo) bad("empty range");

    auto mod = std::make_shared<FiniteGradedModule>(lo, hi, comp != 0);
    mod->name = (name == "?") ? std::string() : name;

    bool ended = false;
    while (next_line(in, line)) {
        if (line == "end") { ended = true; break; }
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "degree") {
            int d = 0, k = 0;
            std::string w;
            if (!(ls >> d >> w >> k) || w != "dim") bad("malformed degree line");
            if (d < lo || d > hi) bad("degree outside range");
            std::vector<std::string> labels;
            for (int j = 0; j < k; ++j) {
                if (!next_line(in, line) || line.rfind("  ", 0) != 0) bad("missing label");
                labels.push_back(line.substr(2));
            }
            mod->set_labels(d, std::move(labels));
        } else if (kw == "sq") {
            int i = 0, d = 0;
            std::size_t r = 0, c = 0;
            std::string w1, w2, w3;
            if (!(ls >> i >> w1 >> d >> w2 >> r >> w3 >> c) || w1 != "from" ||
                w2 != "rows" || w3 != "cols")
                bad("malformed sq line");
            if (int(r) != mod->dim(d + i) || int(c) != mod->dim(d))
                bad("sq block shape disagrees with the degree dims");
            F2Matrix b(r, c);
            for (std::size_t rr = 0; rr < r; ++rr) {
                if (!next_line(in, line) || line.size() != c) bad("malformed sq row");
                for (std::size_t cc = 0; cc < c; ++cc) {
                    if (line[cc] == '1') b.set(rr, cc, true);
                    else if (line[cc] != '0') bad("sq row has a character besides 0/1");
                }
            }
            mod->set_sq(i, d, std::move(b));
        } else {
            bad("unexpected line: " + line);
        }
    }
    if (!ended) bad("missing end line");
    mod->validate();
    return mod;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace

std::string module_dot(const FiniteGradedModule& m) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(m.name.empty() ? "module" : m.name) << "\" {\n";
    os << "  rankdir=BT;\n  node [shape=box];\n";
    for (int d = m.lo(); d <= m.hi(); ++d) {
        if (m.dim(d) == 0) continue;
        os << "  { rank=same;";
        for (int j = 0; j < m.dim(d); ++j) os << " d" << d << "_" << j << ";";
        os << " }\n";
        for (int j = 0; j < m.dim(d); ++j)
            os << "  d" << d << "_" << j << " [label=\""
               << dot_escape(m.labels(d)[std::size_t(j)]) << "\"];\n";
    }
    for (int i = 1; i <= m.span(); i *= 2) {
        for (int d = m.lo(); d + i <= m.hi(); ++d) {
            const F2Matrix* b = m.sq(i, d);
            if (!b) continue;
            for (std::size_t c = 0; c < b->cols(); ++c)
                for (std::size_t r = 0; r < b->rows(); ++r)
                    if (b->get(r, c))
                        os << "  d" << d << "_" << c << " -> d" << (d + i) << "_" << r
                           << " [label=\"sq" << i << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string margolis_text(const FiniteGradedModule& m, const MargolisReport& rep) {
    std::ostringstream os;
    os << "H(" << (m.name.empty() ? "M" : m.name) << "; Q" << rep.m << ") on degrees "
       << rep.verdict_lo << ".." << rep.verdict_hi;
    if (!rep.whole_module)
        os << " (top " << rep.op_degree << " degrees of the window left unjudged)";
    os << ": total " << rep.total_homology << (rep.acyclic ? ", acyclic" : "") << "\n";
    for (const auto& md : rep.degrees) {
        if (md.dim_homology == 0) continue;
        os << "  degree " << md.d << ": dim " << md.dim_homology << "\n";
        for (const auto& r : md.reps) os << "    " << label_combo(m, md.d, r) << "\n";
    }
    return os.str();
}

}  // namespace bgmod
