#pragma once

#include <vector>

#include "monodromy/surface.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

/// Disk-with-bands model of a bordered surface.
///
/// The surface is a disk D with one band per fundamental-group generator
/// attached to ∂D.  Band k meets ∂D in two slots: the positive traversal of
/// the based loop γ_k leaves the basepoint, enters the band at slot A_k and
/// exits at slot B_k.  The cyclic arrangement of slots around ∂D (basepoint
/// last) is chosen so that the traced boundary word starting at the
/// basepoint is exactly
///
///   b_g^-1 ... b_1^-1 (a_1 b_1 a_1^-1) ... (a_g b_g a_g^-1)        (one boundary)
///
/// and, for two boundary components, that word followed by d2, with the far
/// boundary reading d2.  Every loop decomposes as band traversals joined by
/// chords in D, so its class is the sequence of band letters in traversal
/// order; twists about embedded band curves are computed combinatorially
/// from chord crossings.
struct BandSurface {
  SurfaceKind kind;
  int nbands = 0;
  int nslots = 0;
  std::vector<int> posA;  // slot position of A_k, indexed by band id (1-based)
  std::vector<int> posB;  // slot position of B_k

  // Fine positions: each slot carries up to three strand layers (-1, 0, +1)
  // ordered counterclockwise; the basepoint sits after the last slot.
  int key_modulus() const { return 8 * (nslots + 1); }
  int key_slot(int pos, int layer) const { return 8 * pos + 4 + layer; }
  int key_star() const { return 8 * nslots + 4; }
  // Point on the far boundary (inside the gap between the two d2 slots).
  int key_far_point() const;
};

BandSurface make_band_surface(const SurfaceKind& kind);

/// Embedded curve in the band model: a cyclic sequence of signed band
/// traversals, using each band at most once, joined by chords in the disk.
struct BandCurve {
  std::vector<std::pair<int, int>> letters;  // (band id, ±1)

  Word word() const;
};

// Standard curves realized directly in the model.
BandCurve band_curve_a(const SurfaceKind& kind, int i);
BandCurve band_curve_b(const SurfaceKind& kind, int i);
/// Chain curve A_k: A_1 = a_1, A_{2h} = b_h, A_{2h+1} = a_h a_{h+1}^{-1};
/// on the two-boundary model k = 2g+1 is allowed and is a_g d2^{-1}.
BandCurve band_curve_chain(const SurfaceKind& kind, int k);

/// Boundary circle traced in the model; component 0 contains the basepoint,
/// component 1 (two-boundary surfaces) is the far circle.
Word boundary_word(const BandSurface& bs, int component);

/// Images of all generators (and of the reference arc to the far boundary,
/// when present) under the twist t_c^e, e = ±1, about an embedded band
/// curve.  The arc transforms as tau -> arc_prefix * tau.
struct TwistImages {
  std::vector<Word> images;  // indexed by generator id - 1
  Word arc_prefix;
};

TwistImages twist_images(const BandSurface& bs, const BandCurve& c, int e);

}  // namespace monodromy
