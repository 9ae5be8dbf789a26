#pragma once

#include <vector>

#include "partid/partition.hpp"

namespace partid {

/* phi maps m-regular partitions onto partitions with every multiplicity
 * < m, preserving the weight and carrying the m-length type to the
 * m-alternating-sum type. It is built from a regular -> flat map followed
 * by conjugation (the conjugates of the m-flat partitions are exactly the
 * multiplicity-< m ones, and conjugation exchanges the two type
 * statistics).
 *
 * The regular -> flat map:
 *   1. split lambda = f + m*d, where f is the unique m-flat partition with
 *      the same length and part residues and d is a nonincreasing surplus
 *      (computed bottom-up: each f_j is the unique value congruent to
 *      lambda_j inside the flat window above f_{j+1});
 *   2. insert the parts of conj(d), largest first, as parts divisible by m.
 *      An insertion slot is described on the residue walk of the flat
 *      partition (part residues read smallest part -> largest); inserting a
 *      0-visit at a slot costs, in units of m, the quotient of the new part
 *      plus the number of positions above the slot that get raised by m
 *      (a slot between residues u below and v above raises everything
 *      above exactly when v >= u). Each required cost is realized by
 *      exactly one slot, which makes the map invertible: the inverse
 *      repeatedly removes the part divisible by m whose removal cost is
 *      minimal.
 */

/* Optional record of the internal steps, for CLI tracing. */
struct PhiTrace {
    Partition flat;               // the m-flat skeleton f
    std::vector<int> surplus;     // d, nonincreasing, aligned with f's parts
    std::vector<int> costs;       // insertion costs = conj(d), largest first
    std::vector<Partition> stages;  // flat partition after each insertion
};

/* Requires p m-regular. */
Partition phi(const Partition& p, int m, PhiTrace* trace = nullptr);

/* Requires max_multiplicity(q) < m. Exact inverse of phi. */
Partition phi_inv(const Partition& q, int m, PhiTrace* trace = nullptr);

/* The two halves of phi, exposed for tests: regular -> flat and back,
 * both preserving the m-length type. */
Partition regular_to_flat(const Partition& p, int m, PhiTrace* trace = nullptr);
Partition flat_to_regular(const Partition& f, int m, PhiTrace* trace = nullptr);

}  // namespace partid
