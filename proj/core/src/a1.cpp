#include "bgmod/a1.hpp"

#include <sstream>

namespace bgmod {

const std::vector<std::vector<int>>& a1_words() {
    static const std::vector<std::vector<int>> words = [] {
        std::vector<std::vector<int>> out;
        out.push_back({});
        std::size_t head = 0;
        while (head < out.size()) {
            std::vector<int> w = out[head++];
            int sum = 0;
            for (int a : w) sum += a;
            for (int a : {1, 2})
                if (sum + a <= 6) {
                    w.push_back(a);
                    out.push_back(w);
                    w.pop_back();
                }
        }
        return out;
    }();
    return words;
}

A1Decomposition a1_free_decomposition(const FiniteGradedModule& m) {
    if (!m.complete())
        throw std::invalid_argument("freeness needs the whole module");

    int lo = m.lo(), hi = m.hi();
    std::vector<F2Span> covered;
    for (int d = lo; d <= hi; ++d) covered.emplace_back(std::size_t(m.dim(d)));

    /* orbit of v (degree d) under every word, applied right to left */
    auto orbit = [&](int d, const F2Vec& v) {
        std::vector<std::pair<int, F2Vec>> out;
        for (const auto& w : a1_words()) {
            int dd = d;
            F2Vec x = v;
            bool alive = true;
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                if (dd + *it > hi) { alive = false; break; }
                x = m.apply_sq(*it, dd, x);
                dd += *it;
                if (x.is_zero()) { alive = false; break; }
            }
            if (alive && !x.is_zero()) out.emplace_back(dd, std::move(x));
        }
        return out;
    };

    A1Decomposition dec;
    for (int d = lo; d <= hi; ++d) {
        while (covered[std::size_t(d - lo)].dim() < std::size_t(m.dim(d))) {
            int pick = -1;
            for (int c = 0; c < m.dim(d); ++c) {
                F2Vec e(std::size_t(m.dim(d)));
                e.set(std::size_t(c), true);
                if (!covered[std::size_t(d - lo)].contains(e)) { pick = c; break; }
            }
            if (pick < 0)
                throw TheoryError("freeness scan: dimension bookkeeping is off");

            F2Vec gen(std::size_t(m.dim(d)));
            gen.set(std::size_t(pick), true);
            auto orb = orbit(d, gen);

            std::vector<F2Span> alone;
            for (int x = lo; x <= hi; ++x) alone.emplace_back(std::size_t(m.dim(x)));
            int orbit_dim = 0;
            for (const auto& [dd, v] : orb)
                if (alone[std::size_t(dd - lo)].insert(v)) ++orbit_dim;
            int added = 0;
            for (const auto& [dd, v] : orb)
                if (covered[std::size_t(dd - lo)].insert(v)) ++added;

            std::string label = m.labels(d).empty() ? "?" : m.labels(d)[std::size_t(pick)];
            if (orbit_dim != 8 || added != 8) {
                dec.free = false;
                dec.witness_degree = d;
                dec.witness_label = label;
                dec.orbit_dim = orbit_dim;
                dec.added_dim = added;
                std::ostringstream os;
                if (orbit_dim != 8)
                    os << "orbit of " << label << " (degree " << d << ") has dimension "
                       << orbit_dim << ", not 8";
                else
                    os << "orbit of " << label << " (degree " << d
                       << ") meets the span of earlier generators ("
                       << added << " of 8 new)";
                dec.reason = os.str();
                return dec;
            }
            dec.generators.push_back({d, pick, label});
        }
    }
    dec.free = true;
    return dec;
}

}  // namespace bgmod
