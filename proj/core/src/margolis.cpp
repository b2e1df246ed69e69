#include "bgmod/margolis.hpp"

#include <sstream>

namespace bgmod {

namespace {

F2Matrix sq_or_zero(const FiniteGradedModule& m, int i, int d) {
    const F2Matrix* b = m.sq(i, d);
    if (b) return *b;
    return F2Matrix(std::size_t(m.dim(d + i)), std::size_t(m.dim(d)));
}

void add_into(F2Matrix& acc, const F2Matrix& x) {
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
            if (x.get(r, c)) acc.flip(r, c);
}

}  // namespace

std::vector<F2Matrix> qm_blocks(const FiniteGradedModule& m, int milnor_m) {
    if (milnor_m < 0) throw std::invalid_argument("qm_blocks: m must be >= 0");
    int lo = m.lo(), hi = m.hi();
    /* prev[d - lo] = Q_{j-1} out of degree d */
    std::vector<F2Matrix> prev;
    int gprev = 1;
    for (int d = lo; d + 1 <= hi; ++d) prev.push_back(sq_or_zero(m, 1, d));
    for (int j = 1; j <= milnor_m; ++j) {
        int s = 1 << j;           // Sq^{2^j}
        int g = 2 * s - 1;        // |Q_j| = 2^{j+1} - 1
        std::vector<F2Matrix> cur;
        for (int d = lo; d + g <= hi; ++d) {
            F2Matrix blk = prev[std::size_t(d + s - lo)].multiply(sq_or_zero(m, s, d));
            add_into(blk, sq_or_zero(m, s, d + gprev).multiply(prev[std::size_t(d - lo)]));
            cur.push_back(std::move(blk));
        }
        prev = std::move(cur);
        gprev = g;
    }
    return prev;
}

const MargolisDegree* MargolisReport::at(int d) const {
    if (d < verdict_lo || d > verdict_hi) return nullptr;
    return &degrees[std::size_t(d - verdict_lo)];
}

MargolisReport margolis(const FiniteGradedModule& m, int milnor_m) {
    MargolisReport rep;
    rep.m = milnor_m;
    rep.op_degree = (1 << (milnor_m + 1)) - 1;
    rep.lo = m.lo();
    rep.hi = m.hi();
    rep.whole_module = m.complete();
    int g = rep.op_degree;

    std::vector<F2Matrix> q = qm_blocks(m, milnor_m);
    auto q_at = [&](int d) -> F2Matrix {
        if (d + g <= m.hi() && d >= m.lo())
            return q[std::size_t(d - m.lo())];
        return F2Matrix(std::size_t(m.dim(d + g)), std::size_t(m.dim(d)));
    };

    /* differential property, wherever both arrows are visible */
    for (int d = m.lo(); d + 2 * g <= m.hi(); ++d) {
        if (m.dim(d) == 0) continue;
        if (!q_at(d + g).multiply(q_at(d)).is_zero()) {
            std::ostringstream os;
            os << "Q_" << milnor_m << " does not square to zero out of degree " << d
               << " on " << m.name;
            throw TheoryError(os.str());
        }
    }

    rep.verdict_lo = m.lo();
    rep.verdict_hi = m.complete() ? m.hi() : m.hi() - g;
    for (int d = rep.verdict_lo; d <= rep.verdict_hi; ++d) {
        MargolisDegree md;
        md.d = d;
        std::vector<F2Vec> ker;
        if (d + g <= m.hi()) {
            ker = f2_kernel_basis(q_at(d));
        } else {
            /* complete module: the target degree vanishes, Q_m is zero here */
            ker.reserve(std::size_t(m.dim(d)));
            for (int c = 0; c < m.dim(d); ++c) {
                F2Vec e(std::size_t(m.dim(d)));
                e.set(std::size_t(c), true);
                ker.push_back(std::move(e));
            }
        }
        md.dim_kernel = int(ker.size());

        F2Span img(std::size_t(m.dim(d)));
        if (d - g >= m.lo() && m.dim(d - g) > 0) {
            const F2Matrix in = q_at(d - g);
            for (std::size_t c = 0; c < in.cols(); ++c) img.insert(in.column(c));
        }
        md.dim_image_in = int(img.dim());

        for (auto& v : ker) {
            F2Vec r = img.reduce(v);
            if (!r.is_zero()) {
                /* the image must already sit inside the kernel */
                md.reps.push_back(r);
                img.insert(std::move(r));
            }
        }
        md.dim_homology = int(md.reps.size());
        if (md.dim_homology != md.dim_kernel - md.dim_image_in) {
            std::ostringstream os;
            os << "Q_" << milnor_m << " image escapes the kernel in degree " << d
               << " on " << m.name;
            throw TheoryError(os.str());
        }
        rep.total_homology += md.dim_homology;
        rep.degrees.push_back(std::move(md));
    }
    rep.acyclic = (rep.total_homology == 0);
    return rep;
}

InducedMargolis induced_on_margolis(const ModuleMap& f, int milnor_m,
                                    const MargolisReport& src_h,
                                    const MargolisReport& tgt_h) {
    const auto& src = *f.source;
    const auto& tgt = *f.target;
    if (!src.complete() || !tgt.complete())
        throw std::invalid_argument("induced map on homology needs complete modules");
    int g = (1 << (milnor_m + 1)) - 1;

    std::vector<F2Matrix> qs = qm_blocks(src, milnor_m);
    std::vector<F2Matrix> qt = qm_blocks(tgt, milnor_m);
    auto q_of = [g](const FiniteGradedModule& m, const std::vector<F2Matrix>& q,
                    int d) -> F2Matrix {
        if (d >= m.lo() && d + g <= m.hi()) return q[std::size_t(d - m.lo())];
        return F2Matrix(std::size_t(m.dim(d + g)), std::size_t(m.dim(d)));
    };

    /* chain map check: f Q = Q f degreewise */
    for (int d = src.lo(); d <= src.hi(); ++d) {
        if (src.dim(d) == 0) continue;
        F2Matrix lhs(std::size_t(tgt.dim(d + g)), std::size_t(src.dim(d)));
        if (src.dim(d + g) > 0 && tgt.dim(d + g) > 0)
            lhs = f.block(d + g).multiply(q_of(src, qs, d));
        F2Matrix rhs(std::size_t(tgt.dim(d + g)), std::size_t(src.dim(d)));
        if (tgt.dim(d) > 0 && tgt.dim(d + g) > 0)
            rhs = q_of(tgt, qt, d).multiply(f.block(d));
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "map " << f.name << " does not commute with Q_" << milnor_m
               << " out of degree " << d;
            throw TheoryError(os.str());
        }
    }

    InducedMargolis ind;
    ind.m = milnor_m;
    ind.lo = std::min(src_h.verdict_lo, tgt_h.verdict_lo);
    int hi = std::max(src_h.verdict_hi, tgt_h.verdict_hi);
    ind.iso = true;
    for (int d = ind.lo; d <= hi; ++d) {
        const MargolisDegree* sd = src_h.at(d);
        const MargolisDegree* td = tgt_h.at(d);
        std::size_t sdim = sd ? sd->reps.size() : 0;
        std::size_t tdim = td ? td->reps.size() : 0;
        F2Matrix blk(tdim, sdim);
        if (sdim > 0) {
            F2Span img(std::size_t(tgt.dim(d)));
            const F2Matrix in = q_of(tgt, qt, d - g);
            for (std::size_t c = 0; c < in.cols(); ++c) img.insert(in.column(c));
            for (std::size_t c = 0; c < sdim; ++c) {
                F2Vec w = f.apply(d, sd->reps[c]);
                F2Vec r = img.reduce(w);
                /* peel off the target representatives (mutually reduced rows) */
                for (std::size_t t = 0; t < tdim; ++t) {
                    std::size_t piv = td->reps[t].first_set();
                    if (piv != F2Vec::npos && r.size() > piv && r.get(piv)) {
                        blk.set(t, c, true);
                        r ^= td->reps[t];
                    }
                }
                if (!r.is_zero())
                    throw TheoryError("induced map: image class escapes the homology basis");
            }
        }
        if (tdim != sdim || f2_rank(blk) != sdim) ind.iso = false;
        ind.blocks.push_back(std::move(blk));
    }
    return ind;
}

InducedMargolis induced_on_margolis(const ModuleMap& f, int milnor_m) {
    MargolisReport sh = margolis(*f.source, milnor_m);
    MargolisReport th = margolis(*f.target, milnor_m);
    return induced_on_margolis(f, milnor_m, sh, th);
}

}  // namespace bgmod
