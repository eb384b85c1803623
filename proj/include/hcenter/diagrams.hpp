#pragma once

#include <map>
#include <vector>

#include "hcenter/characters.hpp"
#include "hcenter/shifted.hpp"

namespace hcenter {

// Strand orientations on a horizontal boundary, left to right. Upward
// strands are '+', downward strands are '-'.
enum class Sign { Plus, Minus };
using SignSequence = std::vector<Sign>;

// Primitive slices, each acting at a position in the current boundary:
//   CupCW   inserts (+,-) at pos; zero in a region labeled 0
//   CupCCW  inserts (-,+) at pos
//   CapCW   consumes (+,-) at pos, pos+1
//   CapCCW  consumes (-,+) at pos, pos+1
//   Cross   crosses the two upward strands at pos, pos+1
//   Dot     places a dot on the upward strand at pos
enum class SliceKind { CupCW, CupCCW, CapCW, CapCCW, Cross, Dot };

struct Slice {
    SliceKind kind;
    int pos;
    bool operator==(const Slice& o) const { return kind == o.kind && pos == o.pos; }
};

// A diagram presented as a word of slices read bottom to top. validate()
// replays the boundary, checks every slice against its required signs,
// checks the declared top, and fills the dot, crossing and component
// counts (components of the underlying 1-manifold, closed loops included).
struct DiagramWord {
    SignSequence bottom;
    SignSequence top;
    std::vector<Slice> slices;
    int dots = 0;
    int crossings = 0;
    int components = 0;
    bool validated = false;
};

DiagramWord validate(DiagramWord w);  // throws DiagramError

// Closed curl diagrams: c_k is the clockwise circle with k dots, c~_k the
// anticlockwise circle with k dots.
DiagramWord make_c(int k);
DiagramWord make_c_tilde(int k);

// alpha_mu: the closure of t_mu by nested clockwise cups and caps; its
// image under F_n is the normalized class sum A_{mu,n}.
DiagramWord make_alpha(const Partition& mu);

// Closure of an arbitrary g in S_k with dots[j] dots on position j
// (0-based) above the crossing block.
DiagramWord close_permutation(const Permutation& g, const std::vector<int>& dots);

// Horizontal juxtaposition (a left of b) and vertical stacking (lower
// first, then upper; requires lower.top == upper.bottom).
DiagramWord tensor(const DiagramWord& a, const DiagramWord& b);
DiagramWord compose(const DiagramWord& upper, const DiagramWord& lower);

// Crossings with downward strands are not primitive; they expand to a
// (+,+) crossing rotated by cups and caps. ud: (+,-) -> (-,+);
// du: (-,+) -> (+,-); dd: (-,-) -> (-,-).
std::vector<Slice> mixed_cross_ud(int p);
std::vector<Slice> mixed_cross_du(int p);
std::vector<Slice> mixed_cross_dd(int p);
// Curls on an upward strand: the right curl equals a dot, the left curl
// is the zero endomorphism.
std::vector<Slice> right_curl(int p);
std::vector<Slice> left_curl(int p);

// A diagram with a rational prefactor; the involution I fixes the diagram
// and multiplies by (-1)^{dots + crossings}.
struct ScaledDiagram {
    DiagramWord word;
    Rational scalar = 1;
};
ScaledDiagram involution_I(ScaledDiagram d);

// Heuristic degree bound dots + crossings + components used to seed the
// phi interpolation; phi always verifies the interpolant beyond the bound.
int degree_bound(const DiagramWord& w);

// Value of the closed diagram w under the bimodule functor F_n, as an
// element of Z(Q[S_n]).
CentralElement f_n_evaluate(const DiagramWord& w, int n);

// The shifted symmetric function with [phi(w)](lambda) =
// chihat^lambda(F_n(w)) for every lambda, |lambda| = n. Interpolates at
// sizes up to the degree bound, verifies at the two next sizes, retries
// once with the bound doubled, then reports failure naming a partition
// where verification broke.
ShiftedSymFn phi(const DiagramWord& w);
ShiftedSymFn phi(const ScaledDiagram& d);

// Image of a central element under closing each class sum as a diagram:
// sum_mu c_mu |C_mu| phi(alpha_mu). Every alpha_mu is swept through the
// functor; nothing is taken from the closed formula it is known to equal.
ShiftedSymFn closure_of_central(const CentralElement& x);

// Sweep machinery, exposed for the relation suites. Regions are labeled
// right to left starting from the base: labels[m] = base and an upward
// strand increments leftward. A state is a rational combination of
// normal-form tuples (f_0; f_1, ..., f_m): f_0 ranges over S_{labels[0]},
// f_i is the minimal-length representative of a right coset of
// S_{labels[i-1]} in S_{max(labels[i-1], labels[i])}; on upward strands
// the only representative is the identity.
std::vector<int> region_labels(const SignSequence& signs, int base);

using BasisTuple = std::vector<Permutation>;

struct SweepState {
    SignSequence signs;
    int base = 0;
    std::vector<int> labels;
    std::map<BasisTuple, Rational> terms;
};

SweepState basis_state(const SignSequence& signs, int base, BasisTuple t);
void apply_slice(SweepState& s, const Slice& slice);
void apply_word(SweepState& s, const std::vector<Slice>& slices);

// All normal-form basis tuples of F_n applied to the sequence; empty when
// some region label is negative (the zero bimodule).
std::vector<BasisTuple> enumerate_basis(const SignSequence& signs, int base);

}  // namespace hcenter
