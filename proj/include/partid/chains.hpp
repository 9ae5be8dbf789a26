#pragma once

#include <utility>
#include <vector>

#include "partid/partition.hpp"
#include "partid/stockhofe.hpp"

namespace partid {

/* Replace each part by m-1 copies of itself. Weight becomes (m-1)|p| and
 * the m-alternating-sum type is reversed. */
Partition duplicate(const Partition& p, int m);

/* For tuple size t = 2r+1 (odd, >= 3): removes, for each part value, the
 * unique number of t-tuples leaving a residual multiplicity in
 * {0, 2, ..., 2(t-1)}. Unique because no two members of that set are
 * congruent mod t. Requires that no multiplicity lies in {1, 3, ..., t-2}.
 * Returns the reduced partition and the removed (value, tuple count) list. */
std::pair<Partition, std::vector<std::pair<int, int>>> strip_tuples(const Partition& p, int t);

/* Full record of one run of the composed bijection. */
struct ChainTrace {
    Partition lambda;  // parts even or == 2r+1 (mod 4r+2)
    Partition mu;      // halved even-class parts; (2r+1)-regular
    Partition nu;      // image of mu under phi; multiplicities <= 2r
    Partition pi;      // nu with every part doubled
    Partition rho;     // pi plus each leftover part (2r+1)i expanded to i^(2r+1)
    Partition tau;     // conjugate of rho; the difference-condition side
    int r = 1;
    bool forward = true;
};

/* The mod-6 identity chain (r = 1).
 * forward requires every part of lambda == 0, 2, 3 or 4 (mod 6); tau comes
 * out sequence-avoiding with no part 1, carrying m1 parts == 2 (mod 6) to
 * m1 parts == 2 (mod 3) and m2 parts == 4 (mod 6) to m2 parts == 1 (mod 3).
 * inverse accepts exactly those tau and is a two-sided inverse. */
ChainTrace macmahon_forward(const Partition& lambda);
ChainTrace macmahon_inverse(const Partition& tau);

/* The general chain. forward requires every part even or == 2r+1
 * (mod 4r+2); tau satisfies: consecutive-part differences avoid
 * {1, 3, ..., 2r-1} and every odd part is >= 2r+1. m_i parts == 2i
 * (mod 4r+2) become m_i parts == 2i (mod 2r+1). r = 1 coincides with the
 * mod-6 chain. */
ChainTrace andrews_forward(const Partition& lambda, int r);
ChainTrace andrews_inverse(const Partition& tau, int r);

}  // namespace partid
