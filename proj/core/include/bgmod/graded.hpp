#pragma once

#include "bgmod/f2.hpp"
#include "bgmod/poly.hpp"
#include "bgmod/tmod.hpp"

#include <memory>
#include <string>
#include <vector>

namespace bgmod {

/* A finite graded F2 vector space M^lo .. M^hi with Steenrod squares stored
 * as dense blocks Sq^i : M^d -> M^{d+i}.  An absent block is the zero map.
 *
 * `complete` records whether the window provably contains the whole module;
 * a truncation of an infinite module is incomplete, and consumers must not
 * read anything into actions that would leave the window. */
class FiniteGradedModule {
public:
    FiniteGradedModule(int lo, int hi, bool complete);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int span() const { return hi_ - lo_; }
    bool complete() const { return complete_; }

    int dim(int d) const {
        return (d < lo_ || d > hi_) ? 0 : int(labels_[std::size_t(d - lo_)].size());
    }
    int total_dim() const;

    const std::vector<std::string>& labels(int d) const;
    void set_labels(int d, std::vector<std::string> ls);

    /* nullptr means the zero map (out of range, or never set) */
    const F2Matrix* sq(int i, int d) const;
    void set_sq(int i, int d, F2Matrix m);

    /* Sq^i applied to a coordinate vector in degree d */
    F2Vec apply_sq(int i, int d, const F2Vec& v) const;

    /* Composite consistency on every degree where the composites stay in
     * the window: Sq^1 Sq^1 = 0 and Sq^1 Sq^2 = Sq^3.
     * Throws TheoryError on failure. */
    void validate() const;

    std::string name;

private:
    int lo_, hi_;
    bool complete_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<F2Matrix>> sq_;   // [i-1][d-lo]
    std::vector<std::vector<bool>> has_;
};

using ModulePtr = std::shared_ptr<const FiniteGradedModule>;

/* A degreewise linear map f : source -> target (same internal degree). */
struct ModuleMap {
    ModulePtr source, target;
    std::vector<F2Matrix> blocks;   // [d - source->lo()]: target.dim(d) x source.dim(d)
    bool a_linear = false;
    std::string name;

    const F2Matrix& block(int d) const;
    F2Vec apply(int d, const F2Vec& v) const;

    /* Check f Sq^i = Sq^i f for 1 <= i <= imax on every degree where both
     * sides are determined by the windows; throws TheoryError with a witness
     * on failure, sets a_linear on success. */
    void verify_a_linear(int imax);
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);   // g after f
ModuleMap identity_map(const ModulePtr& m);
ModuleMap zero_map(const ModulePtr& src, const ModulePtr& tgt);

/* Render a coordinate vector in degree d through the module's labels,
 * terms joined with " + "; zero renders as "0". */
std::string label_combo(const FiniteGradedModule& m, int d, const F2Vec& v);

struct Poincare {
    int lo = 0;
    std::vector<int> dims;   // dims[k] = dim M^{lo+k}
    bool operator==(const Poincare&) const = default;
    /* dims re-based at degree 0; lo must be >= 0 */
    std::vector<int> from_zero() const;
};
Poincare poincare(const FiniteGradedModule& m);

/* ---- constructions ---- */

/* The weight-n part of Z/2[x_0, x_1, ...] as a finite unstable module:
 * basis the weight-n monomials, squares from the Cartan expansion.
 * Degrees run alpha2(n) .. n (degree 0 for n = 0). */
struct WeightModule {
    std::uint64_t n = 0;
    ModulePtr mod;
    std::vector<std::vector<Monomial>> basis;   // [d - lo()]
    int lo() const { return mod->lo(); }
    int hi() const { return mod->hi(); }
    const std::vector<Monomial>& at(int d) const;
    /* index within degree |m|; -1 when absent */
    int index_of(const Monomial& m) const;
};
WeightModule build_weight_module(std::uint64_t n);

/* Process-wide cache of weight modules (single-writer, mutex guarded). */
const WeightModule& weight_module(std::uint64_t n);

/* Graded tensor product up to degree cap.  Basis of (A (x) B)^d: pairs
 * (a, b) ordered by (deg a ascending, index of a, index of b); squares by
 * the Cartan rule.  When a factor is incomplete its window must still cover
 * every Cartan contribution the capped window needs, otherwise this throws:
 * widen the factor window instead of guessing. */
ModulePtr tensor(const ModulePtr& a, const ModulePtr& b,
                 int cap = 1 << 30);

/* Degree shift: (suspend(M, s))^{d+s} = M^d, same blocks and labels. */
ModulePtr suspend(const ModulePtr& m, int s);

/* Discard degrees above D and zero every action landing above D.
 * The result is complete only when D >= hi of a complete module. */
ModulePtr truncate(const ModulePtr& m, int d);

/* One-variable t-modules over a degree window as graded modules. */
ModulePtr t_family_module(TFamily f, int d_param, int window_lo, int window_hi);

/* Pushout of P <-f- M -g-> N with g degreewise injective.  Coordinates per
 * degree are [N | P]; the subspace U = {(g(x), f(x))} is put in reduced
 * echelon form and the non-pivot coordinates give the canonical basis.
 * Squares are induced and certified: Sq^i(U) c U is checked for every i up
 * to the span (independence of representative); TheoryError otherwise. */
ModulePtr pushout(const ModuleMap& f, const ModuleMap& g);

}  // namespace bgmod
