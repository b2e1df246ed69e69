#include "bgmod/graded.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace bgmod {

FiniteGradedModule::FiniteGradedModule(int lo, int hi, bool complete)
    : lo_(lo), hi_(hi), complete_(complete) {
    if (hi < lo) throw std::invalid_argument("graded module: hi < lo");
    std::size_t width = std::size_t(hi - lo + 1);
    labels_.resize(width);
    int span = hi - lo;
    sq_.resize(std::size_t(span));
    has_.resize(std::size_t(span));
    for (int i = 1; i <= span; ++i) {
        sq_[std::size_t(i - 1)].resize(width);
        has_[std::size_t(i - 1)].assign(width, false);
    }
}

int FiniteGradedModule::total_dim() const {
    int t = 0;
    for (int d = lo_; d <= hi_; ++d) t += dim(d);
    return t;
}

const std::vector<std::string>& FiniteGradedModule::labels(int d) const {
    static const std::vector<std::string> none;
    if (d < lo_ || d > hi_) return none;
    return labels_[std::size_t(d - lo_)];
}

void FiniteGradedModule::set_labels(int d, std::vector<std::string> ls) {
    if (d < lo_ || d > hi_) throw std::out_of_range("set_labels: degree outside window");
    labels_[std::size_t(d - lo_)] = std::move(ls);
}

const F2Matrix* FiniteGradedModule::sq(int i, int d) const {
    if (i < 1 || i > span() || d < lo_ || d + i > hi_) return nullptr;
    if (!has_[std::size_t(i - 1)][std::size_t(d - lo_)]) return nullptr;
    return &sq_[std::size_t(i - 1)][std::size_t(d - lo_)];
}

void FiniteGradedModule::set_sq(int i, int d, F2Matrix m) {
    if (i < 1 || d < lo_ || d + i > hi_)
        throw std::out_of_range("set_sq: block outside window");
    if (m.rows() != std::size_t(dim(d + i)) || m.cols() != std::size_t(dim(d)))
        throw std::invalid_argument("set_sq: block shape mismatch");
    sq_[std::size_t(i - 1)][std::size_t(d - lo_)] = std::move(m);
    has_[std::size_t(i - 1)][std::size_t(d - lo_)] = true;
}

F2Vec FiniteGradedModule::apply_sq(int i, int d, const F2Vec& v) const {
    if (v.size() != std::size_t(dim(d)))
        throw std::invalid_argument("apply_sq: vector size mismatch");
    if (i == 0) return v;
    const F2Matrix* b = sq(i, d);
    if (!b) return F2Vec(std::size_t(dim(d + i)));
    return b->apply(v);
}

namespace {

F2Matrix block_or_zero(const FiniteGradedModule& m, int i, int d) {
    const F2Matrix* b = m.sq(i, d);
    if (b) return *b;
    return F2Matrix(std::size_t(m.dim(d + i)), std::size_t(m.dim(d)));
}

}  // namespace

void FiniteGradedModule::validate() const {
    for (int d = lo_; d + 2 <= hi_; ++d) {
        if (dim(d) == 0) continue;
        F2Matrix c = block_or_zero(*this, 1, d + 1).multiply(block_or_zero(*this, 1, d));
        if (!c.is_zero()) {
            std::ostringstream os;
            os << "module " << name << ": Sq1 Sq1 != 0 out of degree " << d;
            throw TheoryError(os.str());
        }
    }
    for (int d = lo_; d + 3 <= hi_; ++d) {
        if (dim(d) == 0) continue;
        F2Matrix lhs = block_or_zero(*this, 1, d + 2).multiply(block_or_zero(*this, 2, d));
        if (!(lhs == block_or_zero(*this, 3, d))) {
            std::ostringstream os;
            os << "module " << name << ": Adem Sq1Sq2 != Sq3 out of degree " << d;
            throw TheoryError(os.str());
        }
    }
}

/* ---- maps ---- */

const F2Matrix& ModuleMap::block(int d) const {
    static const F2Matrix empty;
    if (!source || d < source->lo() || d > source->hi()) return empty;
    return blocks[std::size_t(d - source->lo())];
}

F2Vec ModuleMap::apply(int d, const F2Vec& v) const {
    if (d < source->lo() || d > source->hi()) {
        if (!v.is_zero()) throw std::invalid_argument("map apply: nonzero vector outside window");
        return F2Vec(std::size_t(target->dim(d)));
    }
    return block(d).apply(v);
}

void ModuleMap::verify_a_linear(int imax) {
    const auto& src = *source;
    const auto& tgt = *target;
    for (int i = 1; i <= imax; ++i) {
        for (int d = src.lo(); d <= src.hi(); ++d) {
            if (src.dim(d) == 0) continue;
            bool src_known = (d + i <= src.hi()) || src.complete();
            bool tgt_known = (d + i <= tgt.hi()) || tgt.complete();
            if (!src_known || !tgt_known) continue;
            F2Matrix lhs(std::size_t(tgt.dim(d + i)), std::size_t(src.dim(d)));
            if (d + i <= src.hi() && tgt.dim(d + i) > 0)
                lhs = block(d + i).multiply(block_or_zero(src, i, d));
            F2Matrix rhs(std::size_t(tgt.dim(d + i)), std::size_t(src.dim(d)));
            if (d + i <= tgt.hi() && tgt.dim(d) > 0 && tgt.dim(d + i) > 0)
                rhs = block_or_zero(tgt, i, d).multiply(block(d));
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "map " << name << ": Sq^" << i
                   << " does not commute out of degree " << d;
                throw TheoryError(os.str());
            }
        }
    }
    a_linear = true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (g.source != f.target)
        throw std::invalid_argument("compose: middle modules differ");
    ModuleMap r;
    r.source = f.source;
    r.target = g.target;
    r.name = g.name + " . " + f.name;
    r.a_linear = g.a_linear && f.a_linear;
    for (int d = f.source->lo(); d <= f.source->hi(); ++d) {
        if (f.target->dim(d) == 0) {
            r.blocks.emplace_back(std::size_t(g.target->dim(d)),
                                  std::size_t(f.source->dim(d)));
        } else {
            r.blocks.push_back(g.block(d).multiply(f.block(d)));
        }
    }
    return r;
}

ModuleMap identity_map(const ModulePtr& m) {
    ModuleMap r;
    r.source = r.target = m;
    r.name = "id";
    r.a_linear = true;
    for (int d = m->lo(); d <= m->hi(); ++d)
        r.blocks.push_back(F2Matrix::identity(std::size_t(m->dim(d))));
    return r;
}

ModuleMap zero_map(const ModulePtr& src, const ModulePtr& tgt) {
    ModuleMap r;
    r.source = src;
    r.target = tgt;
    r.name = "0";
    r.a_linear = true;
    for (int d = src->lo(); d <= src->hi(); ++d)
        r.blocks.emplace_back(std::size_t(tgt->dim(d)), std::size_t(src->dim(d)));
    return r;
}

std::string label_combo(const FiniteGradedModule& m, int d, const F2Vec& v) {
    std::string out;
    for (auto b : v.set_bits()) {
        if (!out.empty()) out += " + ";
        out += m.labels(d)[b];
    }
    return out.empty() ? "0" : out;
}

Poincare poincare(const FiniteGradedModule& m) {
    Poincare p;
    p.lo = m.lo();
    for (int d = m.lo(); d <= m.hi(); ++d) p.dims.push_back(m.dim(d));
    while (!p.dims.empty() && p.dims.back() == 0) p.dims.pop_back();
    while (!p.dims.empty() && p.dims.front() == 0) {
        p.dims.erase(p.dims.begin());
        ++p.lo;
    }
    return p;
}

std::vector<int> Poincare::from_zero() const {
    if (lo < 0) throw std::logic_error("poincare: negative bottom degree");
    std::vector<int> v(std::size_t(lo), 0);
    v.insert(v.end(), dims.begin(), dims.end());
    return v;
}

/* ---- weight modules ---- */

const std::vector<Monomial>& WeightModule::at(int d) const {
    static const std::vector<Monomial> none;
    if (d < lo() || d > hi()) return none;
    return basis[std::size_t(d - lo())];
}

int WeightModule::index_of(const Monomial& m) const {
    int d = int(m.degree());
    const auto& b = at(d);
    auto it = std::lower_bound(b.begin(), b.end(), m);
    if (it == b.end() || !(*it == m)) return -1;
    return int(it - b.begin());
}

WeightModule build_weight_module(std::uint64_t n) {
    std::vector<Monomial> mons = weight_monomials(n);
    int lo = int(mons.front().degree());
    int hi = int(mons.back().degree());
    auto mod = std::make_shared<FiniteGradedModule>(lo, hi, true);
    {
        std::ostringstream os;
        os << "J(" << n << ")";
        mod->name = os.str();
    }

    WeightModule w;
    w.n = n;
    w.basis.resize(std::size_t(hi - lo + 1));
    for (const auto& m : mons) w.basis[m.degree() - std::uint64_t(lo)].push_back(m);
    for (int d = lo; d <= hi; ++d) {
        std::vector<std::string> ls;
        for (const auto& m : w.basis[std::size_t(d - lo)]) ls.push_back(m.str());
        mod->set_labels(d, std::move(ls));
    }

    /* one Cartan expansion per monomial fills a column of every Sq^i block */
    std::vector<std::vector<F2Matrix>> blocks(std::size_t(hi - lo));
    for (int i = 1; i < hi - lo + 1; ++i)
        for (int d = lo; d + i <= hi; ++d)
            blocks[std::size_t(i - 1)].emplace_back(std::size_t(mod->dim(d + i)),
                                                    std::size_t(mod->dim(d)));
    for (int d = lo; d <= hi; ++d) {
        const auto& bd = w.basis[std::size_t(d - lo)];
        for (std::size_t c = 0; c < bd.size(); ++c) {
            std::vector<Poly> tab = sq_table(bd[c]);
            for (std::size_t i = 1; i < tab.size(); ++i) {
                if (tab[i].is_zero()) continue;
                if (d + int(i) > hi)
                    throw TheoryError("weight module: square left the window");
                auto& blk = blocks[i - 1][std::size_t(d - lo)];
                for (const auto& t : tab[i].terms()) {
                    int r = -1;
                    {
                        const auto& tb = w.basis[t.degree() - std::uint64_t(lo)];
                        auto it = std::lower_bound(tb.begin(), tb.end(), t);
                        if (it != tb.end() && *it == t) r = int(it - tb.begin());
                    }
                    if (r < 0) throw TheoryError("weight module: image term not in basis");
                    blk.set(std::size_t(r), c, true);
                }
            }
        }
    }
    for (int i = 1; i < hi - lo + 1; ++i)
        for (int d = lo; d + i <= hi; ++d)
            mod->set_sq(i, d, std::move(blocks[std::size_t(i - 1)][std::size_t(d - lo)]));

    mod->validate();
    w.mod = mod;
    return w;
}

const WeightModule& weight_module(std::uint64_t n) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<WeightModule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<WeightModule>(build_weight_module(n))).first;
    return *it->second;
}

/* ---- tensor, suspension, truncation ---- */

ModulePtr tensor(const ModulePtr& a, const ModulePtr& b, int cap) {
    int lo = a->lo() + b->lo();
    int hi = a->hi() + b->hi();
    bool cut = cap < hi;
    if (cut) hi = cap;
    if (hi < lo) throw std::invalid_argument("tensor: empty window");
    bool complete = a->complete() && b->complete() && !cut;
    auto mod = std::make_shared<FiniteGradedModule>(lo, hi, complete);
    mod->name = a->name + " (x) " + b->name;

    /* per degree: offset of the (deg a = da) group */
    auto offset = [&](int d, int da) {
        int off = 0;
        for (int x = a->lo(); x < da; ++x) off += a->dim(x) * b->dim(d - x);
        return off;
    };
    for (int d = lo; d <= hi; ++d) {
        std::vector<std::string> ls;
        for (int da = a->lo(); da <= a->hi(); ++da)
            for (int ia = 0; ia < a->dim(da); ++ia)
                for (int ib = 0; ib < b->dim(d - da); ++ib)
                    ls.push_back(a->labels(da)[std::size_t(ia)] + " (x) " +
                                 b->labels(d - da)[std::size_t(ib)]);
        mod->set_labels(d, std::move(ls));
    }

    for (int i = 1; i <= hi - lo; ++i) {
        for (int d = lo; d + i <= hi; ++d) {
            if (mod->dim(d) == 0 || mod->dim(d + i) == 0) continue;
            F2Matrix blk(std::size_t(mod->dim(d + i)), std::size_t(mod->dim(d)));
            int c = 0;
            for (int da = a->lo(); da <= a->hi(); ++da) {
                int db = d - da;
                for (int ia = 0; ia < a->dim(da); ++ia) {
                    for (int ib = 0; ib < b->dim(db); ++ib, ++c) {
                        for (int u = 0; u <= i; ++u) {
                            int v = i - u;
                            if (da + u > a->hi()) {
                                if (a->complete()) continue;
                                throw std::invalid_argument("tensor: left factor window too small");
                            }
                            if (db + v > b->hi()) {
                                if (b->complete()) continue;
                                throw std::invalid_argument("tensor: right factor window too small");
                            }
                            /* columns of Sq^u on a, Sq^v on b */
                            F2Vec ca(std::size_t(a->dim(da + u)));
                            if (u == 0) ca.set(std::size_t(ia), true);
                            else if (const F2Matrix* m = a->sq(u, da)) ca = m->column(std::size_t(ia));
                            F2Vec cb(std::size_t(b->dim(db + v)));
                            if (v == 0) cb.set(std::size_t(ib), true);
                            else if (const F2Matrix* m = b->sq(v, db)) cb = m->column(std::size_t(ib));
                            if (ca.is_zero() || cb.is_zero()) continue;
                            int base = offset(d + i, da + u);
                            int dimb = b->dim(db + v);
                            for (auto ra : ca.set_bits())
                                for (auto rb : cb.set_bits())
                                    blk.flip(std::size_t(base) + std::size_t(ra) * std::size_t(dimb) + rb, std::size_t(c));
                        }
                    }
                }
            }
            mod->set_sq(i, d, std::move(blk));
        }
    }
    return mod;
}

ModulePtr suspend(const ModulePtr& m, int s) {
    if (s == 0) return m;
    auto r = std::make_shared<FiniteGradedModule>(m->lo() + s, m->hi() + s, m->complete());
    {
        std::ostringstream os;
        os << "S^" << s << " " << m->name;
        r->name = os.str();
    }
    for (int d = m->lo(); d <= m->hi(); ++d) r->set_labels(d + s, m->labels(d));
    for (int i = 1; i <= m->span(); ++i)
        for (int d = m->lo(); d + i <= m->hi(); ++d)
            if (const F2Matrix* b = m->sq(i, d)) r->set_sq(i, d + s, *b);
    return r;
}

ModulePtr truncate(const ModulePtr& m, int d) {
    if (d >= m->hi()) return m;
    int hi = std::max(d, m->lo());
    bool empty_tail = d < m->lo();
    auto r = std::make_shared<FiniteGradedModule>(m->lo(), hi, false);
    r->name = m->name + " cut";
    if (!empty_tail) {
        for (int x = m->lo(); x <= hi; ++x) r->set_labels(x, m->labels(x));
        for (int i = 1; i <= hi - m->lo(); ++i)
            for (int x = m->lo(); x + i <= hi; ++x)
                if (const F2Matrix* b = m->sq(i, x)) r->set_sq(i, x, *b);
    }
    return r;
}

ModulePtr t_family_module(TFamily f, int d_param, int window_lo, int window_hi) {
    auto mod = std::make_shared<FiniteGradedModule>(window_lo, window_hi, false);
    mod->name = tfamily_name(f);
    for (int d = window_lo; d <= window_hi; ++d) {
        if (tfamily_supports(f, d_param, d)) {
            TElement e{f, d_param, d};
            mod->set_labels(d, {e.str()});
        }
    }
    for (int d = window_lo; d <= window_hi; ++d) {
        if (mod->dim(d) == 0) continue;
        TElement e{f, d_param, d};
        for (int i = 1; d + i <= window_hi; ++i) {
            auto img = t_sq(std::uint32_t(i), e);
            if (img.empty()) continue;
            if (mod->dim(d + i) != 1)
                throw TheoryError("t module: image outside the window basis");
            F2Matrix blk(1, 1);
            blk.set(0, 0, true);
            mod->set_sq(i, d, std::move(blk));
        }
    }
    return mod;
}

/* ---- pushout ---- */

ModulePtr pushout(const ModuleMap& f, const ModuleMap& g) {
    if (f.source != g.source)
        throw std::invalid_argument("pushout: maps must share a source");
    const auto& m = *f.source;
    const auto& p = *f.target;
    const auto& n = *g.target;

    int lo = std::min(p.lo(), n.lo());
    int hi = std::max(p.hi(), n.hi());
    bool complete = m.complete() && p.complete() && n.complete();

    /* per degree: ambient [N | P], relation space in reduced echelon form */
    struct DegreeData {
        int dim_n = 0, dim_p = 0;
        F2Span rel{0};
        std::vector<int> free_coords;           // ambient coords of the basis
        std::vector<int> coord_to_idx;          // ambient -> basis index or -1
    };
    std::vector<DegreeData> deg(std::size_t(hi - lo + 1));

    for (int d = lo; d <= hi; ++d) {
        auto& dd = deg[std::size_t(d - lo)];
        dd.dim_n = n.dim(d);
        dd.dim_p = p.dim(d);
        std::size_t amb = std::size_t(dd.dim_n + dd.dim_p);
        dd.rel = F2Span(amb);
        for (int c = 0; c < m.dim(d); ++c) {
            F2Vec x(std::size_t(m.dim(d)));
            x.set(std::size_t(c), true);
            F2Vec gn = g.apply(d, x);
            F2Vec fp = f.apply(d, x);
            if (gn.is_zero() && !fp.is_zero())
                throw TheoryError("pushout: right leg not injective on a relation");
            F2Vec row(amb);
            for (auto b : gn.set_bits()) row.set(b, true);
            for (auto b : fp.set_bits()) row.set(std::size_t(dd.dim_n) + b, true);
            dd.rel.insert(std::move(row));
        }
        if (dd.rel.dim() != std::size_t(m.dim(d)))
            throw TheoryError("pushout: right leg not injective");
        dd.coord_to_idx.assign(amb, -1);
        std::size_t pi = 0;
        const auto& piv = dd.rel.pivots();
        for (std::size_t c = 0; c < amb; ++c) {
            if (pi < piv.size() && piv[pi] == c) { ++pi; continue; }
            dd.coord_to_idx[c] = int(dd.free_coords.size());
            dd.free_coords.push_back(int(c));
        }
    }

    auto mod = std::make_shared<FiniteGradedModule>(lo, hi, complete);
    mod->name = "pushout(" + p.name + ", " + n.name + ")";
    for (int d = lo; d <= hi; ++d) {
        auto& dd = deg[std::size_t(d - lo)];
        std::vector<std::string> ls;
        for (int c : dd.free_coords) {
            if (c < dd.dim_n) ls.push_back("n:" + n.labels(d)[std::size_t(c)]);
            else ls.push_back("p:" + p.labels(d)[std::size_t(c - dd.dim_n)]);
        }
        mod->set_labels(d, std::move(ls));
    }

    /* Sq^i in ambient coordinates, acting componentwise on [N | P] */
    auto ambient_sq = [&](int i, int d, const F2Vec& v) {
        const auto& sd = deg[std::size_t(d - lo)];
        const auto& td = deg[std::size_t(d + i - lo)];
        F2Vec out(std::size_t(td.dim_n + td.dim_p));
        F2Vec vn(std::size_t(sd.dim_n)), vp(std::size_t(sd.dim_p));
        for (auto b : v.set_bits()) {
            if (int(b) < sd.dim_n) vn.set(b, true);
            else vp.set(b - std::size_t(sd.dim_n), true);
        }
        if (sd.dim_n) {
            F2Vec w = (d + i <= n.hi()) ? n.apply_sq(i, d, vn)
                                        : F2Vec(std::size_t(n.dim(d + i)));
            if (d + i > n.hi() && !n.complete() && !vn.is_zero())
                throw std::invalid_argument("pushout: N window too small");
            for (auto b : w.set_bits()) out.set(b, true);
        }
        if (sd.dim_p) {
            F2Vec w = (d + i <= p.hi()) ? p.apply_sq(i, d, vp)
                                        : F2Vec(std::size_t(p.dim(d + i)));
            if (d + i > p.hi() && !p.complete() && !vp.is_zero())
                throw std::invalid_argument("pushout: P window too small");
            for (auto b : w.set_bits()) out.set(std::size_t(td.dim_n) + b, true);
        }
        return out;
    };

    for (int i = 1; i <= hi - lo; ++i) {
        for (int d = lo; d + i <= hi; ++d) {
            const auto& sd = deg[std::size_t(d - lo)];
            const auto& td = deg[std::size_t(d + i - lo)];
            /* the relation space must be closed under Sq^i, otherwise the
             * induced action depends on representatives */
            for (const auto& row : sd.rel.basis()) {
                F2Vec img = td.rel.reduce(ambient_sq(i, d, row));
                if (!img.is_zero())
                    throw TheoryError("pushout: relations not closed under Sq^" +
                                      std::to_string(i));
            }
            if (sd.free_coords.empty() || td.free_coords.empty()) continue;
            F2Matrix blk(td.free_coords.size(), sd.free_coords.size());
            for (std::size_t c = 0; c < sd.free_coords.size(); ++c) {
                F2Vec e(std::size_t(sd.dim_n + sd.dim_p));
                e.set(std::size_t(sd.free_coords[c]), true);
                F2Vec img = td.rel.reduce(ambient_sq(i, d, e));
                for (auto b : img.set_bits()) {
                    int idx = td.coord_to_idx[b];
                    if (idx < 0) throw TheoryError("pushout: residue hit a pivot coordinate");
                    blk.set(std::size_t(idx), c, true);
                }
            }
            mod->set_sq(i, d, std::move(blk));
        }
    }
    mod->validate();
    return mod;
}

}  // namespace bgmod
