#pragma once

#include <functional>
#include <string>
#include <vector>

#include "partid/partition.hpp"

namespace partid {

/* A part with one of 2r+1 colors. Colors are indexed 1..2r+1; for r = 1
 * the three colors carry the letters a, b, c with a = 1, b = 3, c = 2
 * (the letters sort a < b < c, the indices come from the general-r value
 * map below). */
struct ColoredPart {
    int value = 0;
    int color = 1;
    bool operator==(const ColoredPart&) const = default;
    auto operator<=>(const ColoredPart&) const = default;
};

struct ColoredPartition {
    int r = 1;
    std::vector<ColoredPart> parts;  // canonical order, largest first

    i64 weight() const;  // sum of values, ignoring color
    int color_count(int color) const;
    bool operator==(const ColoredPartition&) const = default;
};

char color_letter(int color);  // r = 1 only
int letter_color(char letter);

/* Membership in the colored family: none of the forbidden pairs
 *   {j_i, (j+1)_l} for i <= 2r, l < i
 *   {j_i, j_{2r+1}} for i <= 2r
 * occurs among the distinct parts. For r = 1 these are exactly
 * {j_a, j_b}, {j_b, j_c} and {j_c, (j+1)_a}. */
bool in_colored_family(const ColoredPartition& cp);

/* Value map between the difference-condition side and colors:
 *   (2r+1)(k-1) + 2i <-> k_i   (1 <= i <= 2r)
 *   (2r+1)k          <-> k_{2r+1}
 * For r = 1: 3k-1 <-> k_a, 3k <-> k_b, 3k+1 <-> k_c. to_colored requires
 * its input to satisfy the difference-side conditions; the image then
 * avoids all forbidden pairs. */
ColoredPartition to_colored(const Partition& tau, int r);
Partition colored_to_tau(const ColoredPartition& cp);

/* The mod-6 dilation (r = 1): k_a -> 3k-2, k_b -> 3k, k_c -> 3k+2. Maps
 * the colored family onto the no-2, difference-rule family (preset C2);
 * a-parts lose 1 and c-parts gain 1 relative to colored_to_tau. */
Partition colored_to_mod6(const ColoredPartition& cp);
ColoredPartition mod6_to_colored(const Partition& p);

/* Text format: value then color letter for r = 1 ("3a+2b+1c"), value '#'
 * color index otherwise ("7#2+3#5"). */
std::string format_colored(const ColoredPartition& cp);
ColoredPartition parse_colored(const std::string& text, int r);

/* Visits every member of the colored family with the given uncolored
 * weight, in a fixed deterministic order. */
void for_each_in_colored_family(int weight, int r,
                                const std::function<bool(const ColoredPartition&)>& visit);

}  // namespace partid
