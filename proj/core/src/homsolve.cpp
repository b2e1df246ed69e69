#include "bgmod/homsolve.hpp"

#include <sstream>

namespace bgmod {

SourceView view_of(const ModulePtr& m) {
    SourceView v;
    v.lo = m->lo();
    v.hi = m->hi();
    v.name = m->name;
    v.dim = [m](int d) { return m->dim(d); };
    v.sq_columns = [m](int i, int d) {
        std::vector<std::vector<std::uint32_t>> cols(std::size_t(m->dim(d)));
        if (const F2Matrix* b = m->sq(i, d))
            for (std::size_t c = 0; c < cols.size(); ++c)
                cols[c] = b->column(c).set_bits();
        return cols;
    };
    v.label = [m](int d, int idx) { return m->labels(d)[std::size_t(idx)]; };
    return v;
}

const F2Matrix& HomSolveResult::block(int d) const {
    static const F2Matrix empty;
    if (d < target_lo || std::size_t(d - target_lo) >= blocks.size()) return empty;
    return blocks[std::size_t(d - target_lo)];
}

namespace {

F2Matrix j_sq(const WeightModule& w, int i, int d) {
    const F2Matrix* b = w.mod->sq(i, d);
    if (b) return *b;
    return F2Matrix(std::size_t(w.mod->dim(d + i)), std::size_t(w.mod->dim(d)));
}

}  // namespace

HomSolveResult hom_solve(const SourceView& src, std::uint64_t l, const F2Vec& phi) {
    const WeightModule& w = weight_module(l);
    int li = int(l);
    if (src.hi < li)
        throw std::invalid_argument("hom_solve: source window ends below the target top");

    HomSolveResult res;
    res.l = l;
    res.target_lo = w.lo();
    res.blocks.assign(std::size_t(li - w.lo() + 1), F2Matrix());
    auto blk = [&](int d) -> F2Matrix& { return res.blocks[std::size_t(d - w.lo())]; };

    int sl = src.dim(li);
    if (phi.size() != std::size_t(sl))
        throw std::invalid_argument("hom_solve: functional size mismatch");
    if (w.mod->dim(li) != 1)
        throw TheoryError("weight module top degree is not one dimensional");
    {
        F2Matrix top(1, std::size_t(sl));
        top.set_row(0, phi);
        blk(li) = std::move(top);
    }

    res.unique = true;
    for (int d = li - 1; d >= w.lo(); --d) {
        int td = w.mod->dim(d);
        int sd = src.dim(d);
        if (td == 0 || sd == 0) {
            blk(d) = F2Matrix(std::size_t(td), std::size_t(sd));
            continue;
        }
        /* stack the power-of-two constraints: rows of A are target rows of
         * Sq^{2^a} out of degree d in J(l); G carries f_{d+2^a} Sq^{2^a} */
        std::vector<int> powers;
        int rtot = 0;
        for (int a = 0; d + (1 << a) <= li; ++a) {
            powers.push_back(1 << a);
            rtot += w.mod->dim(d + (1 << a));
        }
        F2Matrix aug(std::size_t(rtot), std::size_t(td + sd));
        int roff = 0;
        for (int i : powers) {
            int ti = w.mod->dim(d + i);
            if (ti == 0) continue;
            F2Matrix sj = j_sq(w, i, d);
            for (int r = 0; r < ti; ++r)
                for (int c = 0; c < td; ++c)
                    if (sj.get(std::size_t(r), std::size_t(c)))
                        aug.set(std::size_t(roff + r), std::size_t(c), true);
            /* columns of f_{d+i} become rows after transposition, so each
             * sparse entry costs one word xor */
            F2Matrix fupT = blk(d + i).transposed();
            auto cols = src.sq_columns(i, d);
            for (int c = 0; c < sd; ++c) {
                F2Vec g{std::size_t(ti)};
                for (auto idx : cols[std::size_t(c)]) fupT.xor_row_onto(idx, g);
                for (auto b : g.set_bits())
                    aug.set(std::size_t(roff) + b, std::size_t(td + c), true);
            }
            roff += ti;
        }

        F2Rref rr = f2_rref(std::move(aug));
        int apivots = 0;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            if (int(rr.pivots[r]) >= td) {
                std::ostringstream os;
                os << "hom into J(" << l << "): constraints inconsistent in degree "
                   << d << " (source " << src.name << ", column "
                   << (int(rr.pivots[r]) - td) << ")";
                throw TheoryError(os.str());
            }
            ++apivots;
        }
        if (apivots < td) {
            res.unique = false;
            std::ostringstream os;
            os << "hom into J(" << l << "): degree " << d
               << " is underdetermined (rank " << apivots << " of " << td
               << "); maps into a weight module must be pinned by the top functional";
            throw TheoryError(os.str());
        }
        F2Matrix x{std::size_t(td), std::size_t(sd)};
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            int p = int(rr.pivots[r]);
            for (int c = 0; c < sd; ++c)
                if (rr.mat.get(r, std::size_t(td + c)))
                    x.set(std::size_t(p), std::size_t(c), true);
        }
        blk(d) = std::move(x);
    }

    /* full certificate: every Sq^i, every degree, including degrees below
     * the target bottom where the solved map must kill the image */
    for (int d = src.lo; d < li; ++d) {
        int sd = src.dim(d);
        if (sd == 0) continue;
        for (int i = 1; d + i <= li; ++i) {
            int ti = w.mod->dim(d + i);
            int td = (d >= w.lo()) ? w.mod->dim(d) : 0;
            if (ti == 0) {
                /* nothing to land on; constraint is vacuous since J(l)
                 * vanishes there and the rhs is zero likewise */
                continue;
            }
            F2Matrix lhs{std::size_t(ti), std::size_t(sd)};
            {
                F2Matrix fupT = blk(d + i).transposed();
                auto cols = src.sq_columns(i, d);
                for (int c = 0; c < sd; ++c) {
                    F2Vec g{std::size_t(ti)};
                    for (auto idx : cols[std::size_t(c)]) fupT.xor_row_onto(idx, g);
                    for (auto b : g.set_bits()) lhs.set(b, std::size_t(c), true);
                }
            }
            F2Matrix rhs{std::size_t(ti), std::size_t(sd)};
            if (td > 0) rhs = j_sq(w, i, d).multiply(blk(d));
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "hom into J(" << l << "): certificate failed at Sq^" << i
                   << " out of degree " << d << " (source " << src.name << ")";
                throw TheoryError(os.str());
            }
        }
    }
    res.verified = true;
    return res;
}

ModuleMap hom_solver(const ModulePtr& src, std::uint64_t l, const F2Vec& phi) {
    HomSolveResult hs = hom_solve(view_of(src), l, phi);
    const WeightModule& w = weight_module(l);
    ModuleMap f;
    f.source = src;
    f.target = w.mod;
    {
        std::ostringstream os;
        os << src->name << " -> J(" << l << ")";
        f.name = os.str();
    }
    for (int d = src->lo(); d <= src->hi(); ++d) {
        if (d >= w.lo() && d <= int(l))
            f.blocks.push_back(hs.block(d));
        else
            f.blocks.emplace_back(std::size_t(w.mod->dim(d)), std::size_t(src->dim(d)));
    }
    f.a_linear = hs.verified;
    return f;
}

}  // namespace bgmod
