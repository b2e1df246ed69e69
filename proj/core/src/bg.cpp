#include "bgmod/bg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace bgmod {

ModuleMap mu_map(std::uint64_t n1, std::uint64_t n2) {
    const WeightModule& wa = weight_module(n1);
    const WeightModule& wb = weight_module(n2);
    const WeightModule& wt = weight_module(n1 + n2);
    ModuleMap f;
    f.source = tensor(wa.mod, wb.mod);
    f.target = wt.mod;
    {
        std::ostringstream os;
        os << "mu(" << n1 << "," << n2 << ")";
        f.name = os.str();
    }
    for (int d = f.source->lo(); d <= f.source->hi(); ++d) {
        F2Matrix blk(std::size_t(wt.mod->dim(d)), std::size_t(f.source->dim(d)));
        int c = 0;
        for (int da = wa.lo(); da <= wa.hi(); ++da) {
            int db = d - da;
            for (const auto& a : wa.at(da)) {
                for (const auto& b : wb.at(db)) {
                    int r = wt.index_of(a * b);
                    if (r < 0) throw TheoryError("mu: product left the weight basis");
                    blk.set(std::size_t(r), std::size_t(c), true);
                    ++c;
                }
            }
        }
        f.blocks.push_back(std::move(blk));
    }
    return f;
}

ModuleMap halving_map(std::uint64_t n) {
    const WeightModule& ws = weight_module(2 * n);
    const WeightModule& wt = weight_module(n);
    ModuleMap f;
    f.source = ws.mod;
    f.target = wt.mod;
    {
        std::ostringstream os;
        os << "J(" << 2 * n << ") -> J(" << n << ")";
        f.name = os.str();
    }
    for (int d = ws.lo(); d <= ws.hi(); ++d) {
        const auto& bd = ws.at(d);
        F2Matrix blk(std::size_t(wt.mod->dim(d)), bd.size());
        for (std::size_t c = 0; c < bd.size(); ++c) {
            if (bd[c].exp(0) != 0) continue;
            std::vector<std::uint32_t> e = bd[c].exps();
            e.erase(e.begin());
            int r = wt.index_of(Monomial(std::move(e)));
            if (r < 0) throw TheoryError("halving: shifted monomial missing");
            blk.set(std::size_t(r), c, true);
        }
        f.blocks.push_back(std::move(blk));
    }
    f.verify_a_linear(f.source->span());
    return f;
}

ModuleMap x0_mult_map(std::uint64_t w) {
    const WeightModule& ws = weight_module(w);
    const WeightModule& wt = weight_module(w + 1);
    ModuleMap f;
    f.source = suspend(ws.mod, 1);
    f.target = wt.mod;
    {
        std::ostringstream os;
        os << "x0 . : S J(" << w << ") -> J(" << w + 1 << ")";
        f.name = os.str();
    }
    for (int d = f.source->lo(); d <= f.source->hi(); ++d) {
        const auto& bd = ws.at(d - 1);
        F2Matrix blk(std::size_t(wt.mod->dim(d)), bd.size());
        for (std::size_t c = 0; c < bd.size(); ++c) {
            int r = wt.index_of(Monomial::generator(0) * bd[c]);
            if (r < 0) throw TheoryError("x0 mult: product missing from the basis");
            blk.set(std::size_t(r), c, true);
        }
        f.blocks.push_back(std::move(blk));
    }
    return f;
}

ModuleMap pk_map(int k, int window_hi) {
    if (k < 0 || window_hi < 1)
        throw std::invalid_argument("pk_map: need k >= 0 and a nonempty window");
    const WeightModule& wt = weight_module(std::uint64_t(1) << k);
    ModuleMap f;
    f.source = t_family_module(TFamily::F1, 0, 1, window_hi);
    f.target = wt.mod;
    {
        std::ostringstream os;
        os << "p_" << k;
        f.name = os.str();
    }
    for (int d = 1; d <= window_hi; ++d) {
        F2Matrix blk(std::size_t(wt.mod->dim(d)), std::size_t(f.source->dim(d)));
        if (f.source->dim(d) == 1) {
            int i = 0;
            while ((1 << i) < d) ++i;
            if (i <= k) {
                int r = wt.index_of(Monomial::generator(std::uint32_t(k - i),
                                                        std::uint32_t(1) << i));
                if (r < 0) throw TheoryError("pk: power missing from the basis");
                blk.set(std::size_t(r), 0, true);
            }
        }
        f.blocks.push_back(std::move(blk));
    }
    return f;
}

ModuleMap p_map(std::uint64_t n, std::uint64_t l) {
    const WeightModule& w = weight_module(n);
    std::ostringstream os;
    os << "p(" << n << "," << l << ")";
    if (l > n) {
        ModuleMap z = zero_map(w.mod, weight_module(l).mod);
        z.name = os.str();
        return z;
    }
    F2Vec ones(std::size_t(w.mod->dim(int(l))));
    for (std::size_t i = 0; i < ones.size(); ++i) ones.set(i, true);
    ModuleMap f = hom_solver(w.mod, l, ones);
    f.name = os.str();
    return f;
}

/* ---- sparse squares ---- */

SparseSq::SparseSq(const WeightModule& w) {
    lo_ = w.lo();
    hi_ = w.hi();
    int span = hi_ - lo_;
    r_.resize(std::size_t(span));
    for (int i = 1; i <= span; ++i) {
        auto& ri = r_[std::size_t(i - 1)];
        ri.resize(std::size_t(span - i + 1));
        for (int d = lo_; d + i <= hi_; ++d) {
            auto& rd = ri[std::size_t(d - lo_)];
            rd.resize(std::size_t(w.mod->dim(d)));
            if (const F2Matrix* b = w.mod->sq(i, d))
                for (std::size_t c = 0; c < rd.size(); ++c)
                    rd[c] = b->column(c).set_bits();
        }
    }
}

const std::vector<std::uint32_t>& SparseSq::rows(int i, int d, int c) const {
    static const std::vector<std::uint32_t> none;
    if (i < 1 || i > int(r_.size()) || d < lo_ || d + i > hi_) return none;
    const auto& rd = r_[std::size_t(i - 1)][std::size_t(d - lo_)];
    if (c < 0 || c >= int(rd.size())) return none;
    return rd[std::size_t(c)];
}

const SparseSq& sparse_sq(std::uint64_t n) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<SparseSq>> cache;
    const WeightModule& w = weight_module(n);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<SparseSq>(w)).first;
    return *it->second;
}

/* ---- symbolic tensor with the augmentation ideal of Z/2[t] ---- */

IdealTensor::IdealTensor(std::uint64_t n, int cap)
    : n_(n), cap_(cap), w_(&weight_module(n)), sp_(&sparse_sq(n)) {
    lo_ = w_->lo() + 1;
    if (cap_ < lo_) throw std::invalid_argument("tensor cap below the bottom degree");
    prefix_.resize(std::size_t(w_->hi() - w_->lo() + 2), 0);
    for (int d = w_->lo(); d <= w_->hi(); ++d)
        prefix_[std::size_t(d - w_->lo() + 1)] =
            prefix_[std::size_t(d - w_->lo())] + w_->mod->dim(d);
}

int IdealTensor::dim(int d) const {
    if (d < lo_ || d > cap_) return 0;
    int top = std::min(d - 1, w_->hi());
    return prefix_[std::size_t(top - w_->lo() + 1)];
}

int IdealTensor::offset(int da) const {
    return prefix_[std::size_t(da - w_->lo())];
}

F2Vec IdealTensor::embed(int da, const F2Vec& w, int j) const {
    if (j < 1 || da + j > cap_)
        throw std::out_of_range("embed: exponent outside the truncation");
    F2Vec out(std::size_t(dim(da + j)));
    int base = offset(da);
    for (auto b : w.set_bits()) out.set(std::size_t(base) + b, true);
    return out;
}

std::vector<std::vector<std::uint32_t>> IdealTensor::sq_columns(int i, int d) const {
    std::vector<std::vector<std::uint32_t>> cols(std::size_t(dim(d)));
    if (d + i > cap_) return cols;
    int top = std::min(d - 1, w_->hi());
    for (int da = w_->lo(); da <= top; ++da) {
        std::int64_t j = d - da;
        int base = offset(da);
        int nda = w_->mod->dim(da);
        for (int c = 0; c < nda; ++c) {
            auto& out = cols[std::size_t(base + c)];
            for (int u = 0; u <= i; ++u) {
                if (!binom_mod2(j, std::int64_t(i - u))) continue;
                if (da + u > w_->hi()) break;
                int tbase = offset(da + u);
                if (u == 0) {
                    out.push_back(std::uint32_t(tbase + c));
                    continue;
                }
                for (auto r : sp_->rows(u, da, c))
                    out.push_back(std::uint32_t(tbase) + r);
            }
        }
    }
    return cols;
}

std::string IdealTensor::label(int d, int idx) const {
    int top = std::min(d - 1, w_->hi());
    for (int da = w_->lo(); da <= top; ++da) {
        int base = offset(da);
        int nda = w_->mod->dim(da);
        if (idx < base + nda) {
            std::ostringstream os;
            os << w_->at(da)[std::size_t(idx - base)].str() << " (x) t^" << (d - da);
            return os.str();
        }
    }
    throw std::out_of_range("tensor label: index outside the degree");
}

SourceView IdealTensor::view() const {
    SourceView v;
    v.lo = lo_;
    v.hi = cap_;
    {
        std::ostringstream os;
        os << "J(" << n_ << ") (x) (t)";
        v.name = os.str();
    }
    IdealTensor self = *this;
    v.dim = [self](int d) { return self.dim(d); };
    v.sq_columns = [self](int i, int d) { return self.sq_columns(i, d); };
    v.label = [self](int d, int idx) { return self.label(d, idx); };
    return v;
}

/* ---- q ---- */

QMap q_map(std::uint64_t n, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("q_map: target weight must be positive");
    QMap q;
    q.n = n;
    q.m = m;
    q.src = IdealTensor(n, int(m));
    F2Vec ones(std::size_t(q.src.dim(int(m))));
    for (std::size_t i = 0; i < ones.size(); ++i) ones.set(i, true);
    q.sol = hom_solve(q.src.view(), m, ones);
    return q;
}

F2Vec QMap::apply_elem(int da, const F2Vec& w, int j) const {
    return apply(da + j, src.embed(da, w, j));
}

F2Vec QMap::apply(int d, const F2Vec& v) const {
    if (d < sol.target_lo || d > int(m))
        return F2Vec(std::size_t(weight_module(m).mod->dim(d)));
    return sol.block(d).apply(v);
}

Poly QMap::value(const Monomial& a, int j) const {
    const WeightModule& wn = weight_module(n);
    int da = int(a.degree());
    int idx = wn.index_of(a);
    if (idx < 0) throw std::invalid_argument("q value: monomial has the wrong weight");
    F2Vec e(std::size_t(wn.mod->dim(da)));
    e.set(std::size_t(idx), true);
    F2Vec img = apply_elem(da, e, j);
    const WeightModule& wm = weight_module(m);
    std::vector<Monomial> terms;
    for (auto b : img.set_bits()) terms.push_back(wm.at(da + j)[b]);
    return Poly::from_terms(std::move(terms));
}

ModuleMap q_map_dense(std::uint64_t n, std::uint64_t m) {
    ModulePtr t = t_family_module(TFamily::IdealT, 0, 1, int(m));
    ModulePtr src = tensor(weight_module(n).mod, t, int(m));
    F2Vec ones(std::size_t(src->dim(int(m))));
    for (std::size_t i = 0; i < ones.size(); ++i) ones.set(i, true);
    ModuleMap f = hom_solver(src, m, ones);
    {
        std::ostringstream os;
        os << "q(" << n << "," << m << ")";
        f.name = os.str();
    }
    return f;
}

/* ---- the pushout module ---- */

int QModule::desusp_dim(int d) const {
    return weight_module(n).mod->dim(d + 1);
}

int QModule::index_in_q(const Monomial& x) const {
    int idx = weight_module(n).index_of(x);
    if (idx < 0) throw std::invalid_argument("index_in_q: monomial has the wrong weight");
    return idx;
}

F2Vec QModule::class_of(const Monomial& x) const {
    int d = int(x.degree()) - 1;
    F2Vec v(std::size_t(module->dim(d)));
    v.set(std::size_t(index_in_q(x)), true);
    return v;
}

QModule build_q_module(std::uint64_t n, std::uint64_t m) {
    if (n < 2 || m <= n)
        throw std::invalid_argument("build_q_module: need 2 <= n < m");
    const WeightModule& wn = weight_module(n);
    const WeightModule& wm = weight_module(m);
    const SparseSq& spn = sparse_sq(n);
    const SparseSq& spm = sparse_sq(m);
    QMap q = q_map(n, m);

    /* transposed q blocks make sparse application one word xor per entry */
    std::vector<F2Matrix> qt;
    for (const auto& b : q.sol.blocks) qt.push_back(b.transposed());
    auto q_rows = [&](int d) -> const F2Matrix& {
        return qt[std::size_t(d - q.sol.target_lo)];
    };

    int lo = std::min(wm.lo(), wn.lo() - 1);
    int hi = int(m);
    auto mod = std::make_shared<FiniteGradedModule>(lo, hi, true);
    {
        std::ostringstream os;
        os << "Q(" << n << "," << m << ")";
        mod->name = os.str();
    }

    auto sdim = [&](int d) { return wn.mod->dim(d + 1); };
    for (int d = lo; d <= hi; ++d) {
        std::vector<std::string> ls;
        for (const auto& mon : wn.at(d + 1)) ls.push_back("s^-1 " + mon.str());
        for (const auto& l : wm.mod->labels(d)) ls.push_back(l);
        mod->set_labels(d, std::move(ls));
    }

    for (int i = 1; i <= hi - lo; ++i) {
        for (int d = lo; d + i <= hi; ++d) {
            int ss = sdim(d), sm_ = wm.mod->dim(d);
            int ts = sdim(d + i), tm = wm.mod->dim(d + i);
            if (ss + sm_ == 0 || ts + tm == 0) continue;
            F2Matrix blk(std::size_t(ts + tm), std::size_t(ss + sm_));
            /* s^-1 a columns: Sq^i passes through the desuspension and picks
             * up the relation terms q(Sq^u a (x) t^{i-1-u}) */
            for (int c = 0; c < ss; ++c) {
                if (d + 1 + i <= wn.hi())
                    for (auto r : spn.rows(i, d + 1, c))
                        blk.set(r, std::size_t(c), true);
                if (tm == 0) continue;
                F2Vec g{std::size_t(tm)};
                const F2Matrix& qr = q_rows(d + i);
                for (int u = 0; u + 2 <= i; ++u) {
                    if (d + 1 + u > wn.hi()) break;
                    int base = q.src.offset(d + 1 + u);
                    if (u == 0) {
                        qr.xor_row_onto(std::size_t(base + c), g);
                        continue;
                    }
                    for (auto r : spn.rows(u, d + 1, c))
                        qr.xor_row_onto(std::size_t(base) + r, g);
                }
                for (auto b : g.set_bits()) blk.set(std::size_t(ts) + b, std::size_t(c), true);
            }
            /* J(m) columns act as in J(m) */
            for (int c = 0; c < sm_; ++c)
                for (auto r : spm.rows(i, d, c))
                    blk.set(std::size_t(ts) + r, std::size_t(ss + c), true);
            mod->set_sq(i, d, std::move(blk));
        }
    }
    mod->validate();

    QModule out;
    out.n = n;
    out.m = m;
    out.module = mod;
    out.desusp = suspend(wn.mod, -1);

    out.inclusion.source = wm.mod;
    out.inclusion.target = mod;
    out.inclusion.name = "J -> Q";
    for (int d = wm.lo(); d <= wm.hi(); ++d) {
        F2Matrix blk(std::size_t(mod->dim(d)), std::size_t(wm.mod->dim(d)));
        for (int r = 0; r < wm.mod->dim(d); ++r)
            blk.set(std::size_t(sdim(d) + r), std::size_t(r), true);
        out.inclusion.blocks.push_back(std::move(blk));
    }

    out.projection.source = mod;
    out.projection.target = out.desusp;
    out.projection.name = "Q -> s^-1 J";
    for (int d = lo; d <= hi; ++d) {
        F2Matrix pr(std::size_t(out.desusp->dim(d)), std::size_t(mod->dim(d)));
        for (int r = 0; r < out.desusp->dim(d); ++r)
            pr.set(std::size_t(r), std::size_t(r), true);
        out.projection.blocks.push_back(std::move(pr));
    }

    out.desusp_section.source = out.desusp;
    out.desusp_section.target = mod;
    out.desusp_section.name = "s^-1 J -> Q";
    for (int d = out.desusp->lo(); d <= out.desusp->hi(); ++d) {
        F2Matrix sec(std::size_t(mod->dim(d)), std::size_t(out.desusp->dim(d)));
        for (int c = 0; c < out.desusp->dim(d); ++c)
            sec.set(std::size_t(c), std::size_t(c), true);
        out.desusp_section.blocks.push_back(std::move(sec));
    }

    /* certificates */
    out.inclusion.verify_a_linear(mod->span());
    out.projection.verify_a_linear(mod->span());
    if (mod->total_dim() != wm.mod->total_dim() + wn.mod->total_dim())
        throw TheoryError("Q: dimension is not the sum of the two halves");
    {
        ModuleMap z = compose(out.projection, out.inclusion);
        for (const auto& b : z.blocks)
            if (!b.is_zero()) throw TheoryError("Q: projection does not kill J(m)");
        ModuleMap one = compose(out.projection, out.desusp_section);
        ModuleMap id = identity_map(out.desusp);
        for (int d = out.desusp->lo(); d <= out.desusp->hi(); ++d)
            if (!(one.block(d) == id.block(d)))
                throw TheoryError("Q: section does not split the projection");
    }
    return out;
}

std::pair<Poly, Poly> q1_representatives(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("q1_representatives: weight must be at least 2");
    std::uint64_t half = n / 2;
    std::uint32_t e = std::uint32_t(n % 2);
    auto squares_times = [](std::uint64_t v, std::uint32_t e0, std::uint32_t e1) {
        std::vector<std::uint32_t> exps;
        for (int k = 0; v >> k; ++k) {
            if (!((v >> k) & 1)) continue;
            if (int(exps.size()) <= k) exps.resize(std::size_t(k + 1), 0);
            exps[std::size_t(k)] += 2;
        }
        if (e0) {
            if (exps.empty()) exps.resize(1, 0);
            exps[0] += e0;
        }
        if (e1) {
            if (exps.size() < 2) exps.resize(2, 0);
            exps[1] += e1;
        }
        return Monomial(std::move(exps));
    };
    return {Poly(squares_times(half, e, 0)), Poly(squares_times(half - 1, e, 1))};
}

}  // namespace bgmod
