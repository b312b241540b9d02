#include "monodromy/band_model.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace monodromy {

namespace {

// Right-handed twists insert the curve circuit with this global sign.
// Calibrated once against relators of the mapping class group that are
// sensitive to handedness (the Matsumoto-Korkmaz words and the twisted-curve
// identities phi_n(B) = u * B): the positive twist satisfies
// t_{a1}: b1 -> a1 b1 on the torus, and with the basis pairing
// <a_i, b_i> = +1 its homology action is x -> x - <x, c> c.
constexpr int kHandedness = +1;

bool in_open_arc(int p, int x, int q, int modulus) {
  const int dx = ((x - p) % modulus + modulus) % modulus;
  const int dq = ((q - p) % modulus + modulus) % modulus;
  return 0 < dx && dx < dq;
}

}  // namespace

int BandSurface::key_far_point() const {
  if (kind.boundary != 2) throw std::logic_error("band model: surface has no far boundary");
  // Between the layers of the d2 entry slot and those of the d2 exit slot.
  return 8 * posA[static_cast<std::size_t>(kind.d2())] + 7;
}

BandSurface make_band_surface(const SurfaceKind& kind) {
  if (!kind.valid() || kind.boundary == 0)
    throw std::invalid_argument("band model: requires a bordered surface");
  const int g = kind.genus;
  BandSurface bs;
  bs.kind = kind;
  bs.nbands = kind.pi1_rank();
  bs.nslots = 2 * bs.nbands;
  bs.posA.assign(static_cast<std::size_t>(bs.nbands) + 1, -1);
  bs.posB.assign(static_cast<std::size_t>(bs.nbands) + 1, -1);
  for (int i = 1; i <= g; ++i) {
    bs.posB[static_cast<std::size_t>(kind.b(i))] = 3 * (g - i);
    bs.posB[static_cast<std::size_t>(kind.a(i))] = 3 * (g - i) + 1;
    bs.posA[static_cast<std::size_t>(kind.b(i))] = 3 * (g - i) + 2;
    bs.posA[static_cast<std::size_t>(kind.a(i))] = 3 * g + (i - 1);
  }
  if (kind.boundary == 2) {
    bs.posA[static_cast<std::size_t>(kind.d2())] = 4 * g;
    bs.posB[static_cast<std::size_t>(kind.d2())] = 4 * g + 1;
  }
  return bs;
}

Word BandCurve::word() const {
  std::vector<Letter> ls;
  ls.reserve(letters.size());
  for (auto [band, sign] : letters) ls.push_back(sign > 0 ? band : -band);
  return Word(ls);
}

BandCurve band_curve_a(const SurfaceKind& kind, int i) { return BandCurve{{{kind.a(i), +1}}}; }

BandCurve band_curve_b(const SurfaceKind& kind, int i) { return BandCurve{{{kind.b(i), +1}}}; }

BandCurve band_curve_chain(const SurfaceKind& kind, int k) {
  const int g = kind.genus;
  if (k < 1 || k > 2 * g + (kind.boundary == 2 ? 1 : 0))
    throw std::out_of_range("band model: chain curve index out of range");
  if (k == 1) return band_curve_a(kind, 1);
  if (k % 2 == 0) return band_curve_b(kind, k / 2);
  const int h = (k - 1) / 2;  // k = 2h+1: a_h a_{h+1}^{-1}
  if (h == g) return BandCurve{{{kind.a(g), +1}, {kind.d2(), -1}}};
  return BandCurve{{{kind.a(h), +1}, {kind.a(h + 1), -1}}};
}

Word boundary_word(const BandSurface& bs, int component) {
  if (component < 0 || component >= bs.kind.boundary)
    throw std::out_of_range("band model: no such boundary component");
  std::vector<int> slot_band(static_cast<std::size_t>(bs.nslots), 0);
  std::vector<bool> slot_is_A(static_cast<std::size_t>(bs.nslots), false);
  for (int k = 1; k <= bs.nbands; ++k) {
    slot_band[static_cast<std::size_t>(bs.posA[static_cast<std::size_t>(k)])] = k;
    slot_is_A[static_cast<std::size_t>(bs.posA[static_cast<std::size_t>(k)])] = true;
    slot_band[static_cast<std::size_t>(bs.posB[static_cast<std::size_t>(k)])] = k;
  }
  // Walk the boundary counterclockwise on virtual positions 0..nslots, where
  // position nslots is the basepoint.  The far point (component 1) sits
  // between the two adjacent d2 slots.  From just past a position, the next
  // feature met is the next position; at a slot the walk jumps through the
  // band and continues past the partner slot.
  const bool far = component == 1;
  const int start = far ? bs.posA[static_cast<std::size_t>(bs.kind.d2())] : bs.nslots;
  const auto reenters_gap = [&](int cursor) {
    return far && cursor == start;  // the far point lies just past pos(A_d2)
  };
  std::vector<bool> hit(static_cast<std::size_t>(bs.nslots), false);
  std::vector<Letter> out;
  int cursor = start;
  while (true) {
    const int p = (cursor + 1) % (bs.nslots + 1);
    if (p == bs.nslots) {
      if (far) throw std::logic_error("band model: far boundary trace reached the basepoint");
      break;  // reached the basepoint again
    }
    const int band = slot_band[static_cast<std::size_t>(p)];
    if (band == 0) throw std::logic_error("band model: unassigned slot");
    if (hit[static_cast<std::size_t>(p)]) throw std::logic_error("band model: boundary trace revisits a slot");
    hit[static_cast<std::size_t>(p)] = true;
    out.push_back(slot_is_A[static_cast<std::size_t>(p)] ? band : -band);
    cursor = slot_is_A[static_cast<std::size_t>(p)] ? bs.posB[static_cast<std::size_t>(band)]
                                                    : bs.posA[static_cast<std::size_t>(band)];
    if (reenters_gap(cursor)) break;
  }
  return Word(out);
}

TwistImages twist_images(const BandSurface& bs, const BandCurve& c, int e) {
  if (e != 1 && e != -1) throw std::invalid_argument("twist_images: exponent must be ±1");
  const std::size_t m = c.letters.size();
  if (m == 0) throw std::invalid_argument("twist_images: empty curve");
  std::vector<bool> used(static_cast<std::size_t>(bs.nbands) + 1, false);
  for (auto [band, sign] : c.letters) {
    if (band < 1 || band > bs.nbands) throw std::invalid_argument("twist_images: bad band id");
    if (sign != 1 && sign != -1) throw std::invalid_argument("twist_images: bad traversal sign");
    if (used[static_cast<std::size_t>(band)])
      throw std::invalid_argument("twist_images: curve traverses a band twice");
    used[static_cast<std::size_t>(band)] = true;
  }

  const int M = bs.key_modulus();
  // Directed chords of c: from the exit point of letter t to the entry point
  // of letter t+1 (cyclically), all at layer 0.
  const auto entry_key = [&](std::size_t t) {
    auto [band, sign] = c.letters[t];
    const int pos = sign > 0 ? bs.posA[static_cast<std::size_t>(band)] : bs.posB[static_cast<std::size_t>(band)];
    return bs.key_slot(pos, 0);
  };
  const auto exit_key = [&](std::size_t t) {
    auto [band, sign] = c.letters[t];
    const int pos = sign > 0 ? bs.posB[static_cast<std::size_t>(band)] : bs.posA[static_cast<std::size_t>(band)];
    return bs.key_slot(pos, 0);
  };
  struct Chord {
    int from, to;
  };
  std::vector<Chord> chords(m);
  for (std::size_t t = 0; t < m; ++t) chords[t] = {exit_key(t), entry_key((t + 1) % m)};

  // Circuit words of c starting just after chord t (i.e. at letter t+1).
  std::vector<Word> forward(m);
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<Letter> ls;
    ls.reserve(m);
    for (std::size_t s = 1; s <= m; ++s) {
      auto [band, sign] = c.letters[(t + s) % m];
      ls.push_back(sign > 0 ? band : -band);
    }
    forward[t] = Word(ls);
  }

  // Insertion word along a directed chord (p -> q) of the traversed loop.
  const auto insertions = [&](int p, int q) {
    struct Hit {
      int dist;
      std::size_t t;
      int sign;
    };
    std::vector<Hit> hits;
    for (std::size_t t = 0; t < m; ++t) {
      const int r = chords[t].from, s = chords[t].to;
      const bool r_in = in_open_arc(p, r, q, M);
      const bool s_in = in_open_arc(p, s, q, M);
      if (r_in == s_in) continue;  // 0 or 2 endpoints on the near side: no crossing
      const int endpoint = r_in ? r : s;
      const int dist = ((endpoint - p) % M + M) % M;
      hits.push_back({dist, t, r_in ? +1 : -1});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.dist < y.dist; });
    Word w;
    for (const auto& h : hits) {
      const int dir = h.sign * kHandedness * e;
      w = w * (dir > 0 ? forward[h.t] : forward[h.t].inverse());
    }
    return w;
  };

  TwistImages out;
  out.images.resize(static_cast<std::size_t>(bs.nbands));
  for (int j = 1; j <= bs.nbands; ++j) {
    const bool shared = used[static_cast<std::size_t>(j)];
    const int in_key = bs.key_slot(bs.posA[static_cast<std::size_t>(j)], shared ? +1 : 0);
    const int out_key = bs.key_slot(bs.posB[static_cast<std::size_t>(j)], shared ? -1 : 0);
    const Word pre = insertions(bs.key_star(), in_key);
    const Word post = insertions(out_key, bs.key_star());
    out.images[static_cast<std::size_t>(j - 1)] = pre * Word::gen(j) * post;
  }
  if (bs.kind.boundary == 2) out.arc_prefix = insertions(bs.key_star(), bs.key_far_point());
  return out;
}

}  // namespace monodromy
