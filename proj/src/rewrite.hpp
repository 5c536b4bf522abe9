#pragma once

#include "drawing.hpp"

namespace onep {

// One application of the overlap-3 elimination: for false vertices c1, c2
// with |N(c1) ∩ N(c2)| >= 3, the pair at c2 contains an edge xz with both
// endpoints in N(c1); that edge is rerouted through the face at the corner
// of c1 where its x- and z-segments meet, c2 disappears and its partner
// edge becomes crossing-free. Exactly one crossing fewer; base graph,
// genus 0 and all other crossings are preserved.
//
// When several such configurations exist the lexicographically smallest
// (c1, c2, edge) triple is rewritten. Throws Error when no overlap >= 3
// pair exists, or when the input does not validate (class aside).
Drawing eliminate_overlap3(const Drawing& d);

// Iterates eliminate_overlap3 to its fixpoint (max pairwise overlap <= 2).
// Terminates in at most |spec| steps. steps, if non-null, receives the
// number of rewrites applied.
Drawing normalize_drawing(const Drawing& d, int* steps = nullptr);

// Removes one adjacent crossing (a pair sharing an endpoint, raw drawings
// only): the four segments at the crossing are spliced into the two
// rerouted edges, reconnecting each shared-endpoint segment with the far
// segment of the other edge. Identity when no adjacent crossing exists.
Drawing eliminate_adjacent_crossing(const Drawing& raw);

// Iterates until no adjacent crossings remain; the result validates
// strictly.
Drawing eliminate_adjacent_crossings(const Drawing& raw, int* steps = nullptr);

}  // namespace onep
