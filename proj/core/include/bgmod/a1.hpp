#pragma once

#include "bgmod/graded.hpp"

#include <string>
#include <vector>

namespace bgmod {

/* Free decomposition over the subalgebra generated by Sq^1 and Sq^2
 * (dimension 8, top degree 6), by greedy peeling: repeatedly take the
 * lowest degree not yet covered, pick the first uncovered standard basis
 * vector there, and demand that its orbit under all Sq^1/Sq^2 words of
 * degree sum <= 6 be 8-dimensional and meet the prior span trivially.
 * The subalgebra is self-injective, so on a genuinely free module the
 * greedy choice can never paint itself into a corner; the first failed
 * orbit is an honest witness of non-freeness. */

struct A1Generator {
    int degree = 0;
    int index = 0;          // standard basis index within the degree
    std::string label;
};

struct A1Decomposition {
    bool free = false;
    std::vector<A1Generator> generators;
    /* on failure: */
    int witness_degree = 0;
    std::string witness_label;
    int orbit_dim = 0;      // dimension of the failing orbit on its own
    int added_dim = 0;      // how much of it was new against the prior span
    std::string reason;
};

A1Decomposition a1_free_decomposition(const FiniteGradedModule& m);

/* The 33 words over {1, 2} with degree sum <= 6, shortlex; the empty word
 * first.  Applied right to left. */
const std::vector<std::vector<int>>& a1_words();

}  // namespace bgmod
