#pragma once

#include "bgmod/graded.hpp"

#include <functional>
#include <vector>

namespace bgmod {

/* A graded source presented through callbacks, so large tensor products can
 * be solved against without materializing dense blocks.  sq_columns(i, d)
 * returns, for every basis element of degree d, the list of target basis
 * indices (degree d + i) appearing in its Sq^i image.  The window must cover
 * every degree a solve will touch. */
struct SourceView {
    int lo = 0, hi = -1;
    std::function<int(int)> dim;
    std::function<std::vector<std::vector<std::uint32_t>>(int, int)> sq_columns;
    std::function<std::string(int, int)> label;   // optional, for messages
    std::string name;
};

SourceView view_of(const ModulePtr& m);

/* A map f : Src -> J(l) pinned down by its top functional.
 *
 * Maps into a weight module are in bijection with functionals on the
 * degree-l part of the source: f_l is the given functional, and each lower
 * block is the unique solution of the stacked constraints
 *   Sq^{2^a} f_d = f_{d+2^a} Sq^{2^a}   (all a with d + 2^a <= l),
 * solved top-down.  A rank-deficient or inconsistent degree contradicts
 * that bijection and raises TheoryError.
 *
 * The certificate is independent of the solve: after construction every
 * identity f_{d+i} Sq^i = Sq^i f_d is re-checked for all i >= 1, not just
 * the powers of two the solver consumed. */
struct HomSolveResult {
    std::uint64_t l = 0;
    int target_lo = 0;                 // bottom degree of J(l)
    std::vector<F2Matrix> blocks;      // [d - target_lo], d in [target_lo .. l]
    bool unique = false;               // full column rank at every solved degree
    bool verified = false;             // all-i commutation certificate passed

    const F2Matrix& block(int d) const;
};

HomSolveResult hom_solve(const SourceView& src, std::uint64_t l, const F2Vec& phi);

/* Same, for a materialized source; the result is wrapped as a ModuleMap
 * with zero blocks outside the target window. */
ModuleMap hom_solver(const ModulePtr& src, std::uint64_t l, const F2Vec& phi);

}  // namespace bgmod
