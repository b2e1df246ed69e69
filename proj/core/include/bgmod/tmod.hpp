#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bgmod {

/* One-variable modules on the generator t, |t| = 1, with
 * Sq^i t^j = binom(j, i) t^{j+i} and family-specific supports:
 *
 *   PolyT   : t^j, j >= 0                  (the full polynomial algebra)
 *   IdealT  : t^j, j >= 1                  (the augmentation ideal (t))
 *   F1      : t^{2^k}, k >= 0              (free on one unstable generator;
 *             the binomial rule leaves only Sq^{2^k} t^{2^k} = t^{2^{k+1}})
 *   PD      : t^j, j >= d (d may be negative; negative binomials apply)
 *   PTilde  : t^{-1} and t^j, j >= 1; no t^0.  Quotient model: the binomial
 *             rule with every t^0 term dropped.  Q_1 t^j = t^{j+3} for odd j
 *             (including j = -1), so the module is Q_1-acyclic.
 */
enum class TFamily { PolyT, IdealT, F1, PD, PTilde };

std::string tfamily_name(TFamily f);

struct TElement {
    TFamily family = TFamily::PolyT;
    int d = 0;        // lower bound parameter, used by PD only
    std::int64_t j = 0;

    std::string str() const;   // "t^j"
};

bool tfamily_supports(TFamily f, int d, std::int64_t j);

/* Sq^i t^j within the family; at most one term survives (possibly none).
 * Throws when the input exponent is not in the family's support. */
std::vector<TElement> t_sq(std::uint32_t i, const TElement& e);

}  // namespace bgmod
