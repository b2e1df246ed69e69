#pragma once

#include "bgmod/graded.hpp"
#include "bgmod/margolis.hpp"

#include <string>

namespace bgmod {

/* Plain-text snapshot of a finite graded module: name, window, labels per
 * degree, then every nonzero square block as 0/1 rows.  Deterministic byte
 * for byte, so snapshots diff cleanly and serve as cache files. */
std::string dump_module(const FiniteGradedModule& m);

/* Inverse of dump_module; throws std::invalid_argument on malformed text. */
ModulePtr parse_module(const std::string& text);

/* Graphviz digraph: one node per basis element (id d<degree>_<index>),
 * same-degree nodes ranked together, one edge per matrix entry of the
 * power-of-two squares, labeled sq1, sq2, sq4, ... */
std::string module_dot(const FiniteGradedModule& m);

/* Human-readable homology summary with labeled representatives. */
std::string margolis_text(const FiniteGradedModule& m, const MargolisReport& rep);

}  // namespace bgmod
