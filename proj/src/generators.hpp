#pragma once

#include <optional>
#include <string>

#include "drawing.hpp"

namespace onep {

// Extremal families, each returned with an explicit crossing specification
// realized into a validated witness drawing of the stated class.
struct FamilyInstance {
    Graph graph;      // the family member itself
    Drawing witness;  // drawing of the graph joined with its small factor
    std::string claim;
    std::optional<Drawing> self_witness;  // drawing of the member alone, when the
                                          // construction provides one
};

// Cycle v1..vk with chords v1v3 (inside) and v4v6 (outside): k vertices,
// k+2 edges, max degree 3. Witness: C0-drawing of G_k + 2P1 with two
// crossings, one apex fan per big face. Tight for |E| <= |V|+2. k >= 6.
FamilyInstance gen_cycle_two_chords(int k);

// G_k minus v3v4: k+1 edges. Witness: C0-drawing of G_k^- + P2, the apex
// edge routed through the v3v4 gap. Tight for |E| <= |V|+1. k >= 6.
FamilyInstance gen_cycle_two_chords_minus(int k);

// Two-path ladder on 2k-1 vertices with (9(2k-1)-11)/4 edges; witness is
// the C0-drawing of G + P1, the new apex edge to a_{k-1} crossing
// b_{k-1}a_k. Tight for 4|E| <= 9|V|-11. k >= 4, even.
FamilyInstance gen_ladderlike_c0_p1(int k);

// Cycle on 4l vertices with l inner and l outer chords: 6l = 1.5 * 4l
// edges. Witness: C1-drawing of G + 2P1 with 2l crossings (every pair of
// same-side crossings shares exactly its apex). The join has 14l edges,
// above the C0 edge bound 13l + 1/2, so no C0-drawing exists. l >= 2.
FamilyInstance gen_4l_cycle_c1(int l);

}  // namespace onep
