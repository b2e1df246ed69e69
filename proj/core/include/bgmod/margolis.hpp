#pragma once

#include "bgmod/graded.hpp"

#include <vector>

namespace bgmod {

/* Milnor primitive Q_m on a finite window, one matrix per degree, built by
 * the commutator recursion on blocks:
 *   Q_0 = Sq^1,  Q_m = Q_{m-1} Sq^{2^m} + Sq^{2^m} Q_{m-1}.
 * Entry [d - lo] maps M^d -> M^{d + 2^{m+1} - 1}; only degrees whose image
 * stays inside the window are present. */
std::vector<F2Matrix> qm_blocks(const FiniteGradedModule& m, int milnor_m);

struct MargolisDegree {
    int d = 0;
    int dim_kernel = 0;
    int dim_image_in = 0;     // image of Q_m arriving from degree d - |Q_m|
    int dim_homology = 0;
    std::vector<F2Vec> reps;  // kernel residues modulo the image, mutually reduced
};

/* Margolis homology H(M; Q_m) over the verdict range.
 *
 * Window policy: the window's lower edge is the true bottom of the module.
 * When the window is incomplete at the top, homology in the top |Q_m|
 * degrees depends on invisible incoming/outgoing arrows, so the verdict
 * range stops at hi - |Q_m|; a complete module is judged everywhere. */
struct MargolisReport {
    int m = 0;
    int op_degree = 0;            // |Q_m| = 2^{m+1} - 1
    int lo = 0, hi = 0;
    bool whole_module = false;    // verdict covers the whole module
    int verdict_lo = 0, verdict_hi = -1;
    std::vector<MargolisDegree> degrees;   // [d - verdict_lo]
    int total_homology = 0;
    bool acyclic = false;

    const MargolisDegree* at(int d) const;
};

MargolisReport margolis(const FiniteGradedModule& m, int milnor_m);

/* Map induced by f on Q_m-homology, per degree; both endpoints must be
 * complete.  Verifies f Q_m = Q_m f first and that f sends kernels into
 * kernel + image; TheoryError otherwise.  iso means every degreewise block
 * is square and invertible. */
struct InducedMargolis {
    int m = 0;
    int lo = 0;
    std::vector<F2Matrix> blocks;  // [d - lo]: H(tgt)^d x H(src)^d
    bool iso = false;
};

InducedMargolis induced_on_margolis(const ModuleMap& f, int milnor_m,
                                    const MargolisReport& src_h,
                                    const MargolisReport& tgt_h);
InducedMargolis induced_on_margolis(const ModuleMap& f, int milnor_m);

}  // namespace bgmod
