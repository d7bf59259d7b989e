#pragma once

#include <stdexcept>
#include <vector>

#include "s2g/group.hpp"
#include "s2g/rng.hpp"

namespace s2g {

// ---------------------------------------------------------------------------
// Half-space patches covering SU(2): 1:x>=0, 2:x<0, 3:y>=0, 4:y<0,
// 5:z>=0, 6:z<0, 7:w>=0, 8:w<0.  Sharp predicates, no epsilon fuzzing.
// ---------------------------------------------------------------------------
inline bool patch_member(const SU2& g, int i) {
  switch (i) {
    case 1: return g.x >= 0.0;
    case 2: return g.x < 0.0;
    case 3: return g.y >= 0.0;
    case 4: return g.y < 0.0;
    case 5: return g.z >= 0.0;
    case 6: return g.z < 0.0;
    case 7: return g.w >= 0.0;
    case 8: return g.w < 0.0;
    default: throw std::out_of_range("patch index must be 1..8");
  }
}

inline int minimal_patch(const SU2& g) {
  for (int i = 1; i <= 8; ++i)
    if (patch_member(g, i)) return i;
  throw std::logic_error("patches do not cover point");  // unreachable
}

// ---------------------------------------------------------------------------
// Points of the nerve: level p holds a p-tuple of group elements; level 0 is
// the single point *.
// ---------------------------------------------------------------------------
struct Nerve {
  std::vector<SU2> g;

  int level() const { return static_cast<int>(g.size()); }
};

// Face conventions: f_0 drops the first slot, f_p drops the last slot, the
// inner f_i merges adjacent entries g_i g_{i+1} (1-based: g_{i-1} g_i).
inline Nerve face(const Nerve& s, int i) {
  int p = s.level();
  if (p < 1 || i < 0 || i > p) throw std::out_of_range("face index");
  Nerve r;
  r.g.reserve(static_cast<std::size_t>(p - 1));
  if (i == 0) {
    r.g.assign(s.g.begin() + 1, s.g.end());
  } else if (i == p) {
    r.g.assign(s.g.begin(), s.g.end() - 1);
  } else {
    r.g.assign(s.g.begin(), s.g.end());
    SU2 m = mul(r.g[static_cast<std::size_t>(i - 1)], r.g[static_cast<std::size_t>(i)]);
    r.g[static_cast<std::size_t>(i - 1)] = m;
    r.g.erase(r.g.begin() + i);
  }
  return r;
}

// Degeneracy s_i inserts the group identity after slot i; s_0(*) = 1_G.
inline Nerve degeneracy(const Nerve& s, int i) {
  int p = s.level();
  if (i < 0 || i > p) throw std::out_of_range("degeneracy index");
  Nerve r = s;
  r.g.insert(r.g.begin() + i, su2_identity());
  return r;
}

// ---------------------------------------------------------------------------
// Simplicial multi-indices: a level-1 index is a base patch label; a level-p
// index is a (p+1)-tuple of level-(p-1) indices, one per face.  Level 0 is
// the unique index of the point *.
// ---------------------------------------------------------------------------
struct SIndex {
  int level = 0;
  int base = 0;               // meaningful at level 1
  std::vector<SIndex> sub;    // meaningful at level >= 2; size level+1

  static SIndex star() { return SIndex{0, 0, {}}; }
  static SIndex base1(int b) { return SIndex{1, b, {}}; }
};

inline bool operator==(const SIndex& a, const SIndex& b) {
  if (a.level != b.level) return false;
  if (a.level == 0) return true;
  if (a.level == 1) return a.base == b.base;
  for (std::size_t m = 0; m < a.sub.size(); ++m)
    if (!(a.sub[m] == b.sub[m])) return false;
  return true;
}

inline bool operator!=(const SIndex& a, const SIndex& b) { return !(a == b); }

// Strict total lexicographic order within a level.
inline bool index_less(const SIndex& a, const SIndex& b) {
  if (a.level != b.level) throw std::invalid_argument("index level mismatch");
  if (a.level == 0) return false;
  if (a.level == 1) return a.base < b.base;
  for (std::size_t m = 0; m < a.sub.size(); ++m) {
    if (index_less(a.sub[m], b.sub[m])) return true;
    if (index_less(b.sub[m], a.sub[m])) return false;
  }
  return false;
}

inline SIndex face_index(const SIndex& J, int i) {
  if (J.level < 1 || i < 0 || i > J.level) throw std::out_of_range("face_index");
  if (J.level == 1) return SIndex::star();
  return J.sub[static_cast<std::size_t>(i)];
}

// Degeneracy on indices via the simplicial identities, with the level-0 base
// case picking the minimal patch containing 1_G.
inline SIndex degeneracy_index(const SIndex& J, int i) {
  if (i < 0 || i > J.level) throw std::out_of_range("degeneracy_index");
  if (J.level == 0) return SIndex::base1(1);
  SIndex r;
  r.level = J.level + 1;
  r.sub.resize(static_cast<std::size_t>(r.level + 1));
  for (int m = 0; m <= r.level; ++m) {
    if (m < i)
      r.sub[static_cast<std::size_t>(m)] = degeneracy_index(face_index(J, m), i - 1);
    else if (m == i || m == i + 1)
      r.sub[static_cast<std::size_t>(m)] = J;
    else
      r.sub[static_cast<std::size_t>(m)] = degeneracy_index(face_index(J, m - 1), i);
  }
  return r;
}

inline bool index_member(const Nerve& s, const SIndex& J) {
  if (s.level() != J.level) return false;
  if (J.level == 0) return true;
  if (J.level == 1) return patch_member(s.g[0], J.base);
  for (int m = 0; m <= J.level; ++m)
    if (!index_member(face(s, m), J.sub[static_cast<std::size_t>(m)])) return false;
  return true;
}

// Blockwise-minimal member index; membership factorizes over faces, so this
// is also the lexicographic minimum.
inline SIndex minimal_index(const Nerve& s) {
  int p = s.level();
  if (p == 0) return SIndex::star();
  if (p == 1) return SIndex::base1(minimal_patch(s.g[0]));
  SIndex r;
  r.level = p;
  r.sub.resize(static_cast<std::size_t>(p + 1));
  for (int m = 0; m <= p; ++m) r.sub[static_cast<std::size_t>(m)] = minimal_index(face(s, m));
  return r;
}

// Assembles the index tree from one patch label per edge (a,b) of the
// simplex; trees of this shape are exactly the ones compatible with the
// simplicial identities on faces.
inline SIndex index_from_edge_labels(const std::vector<int>& verts,
                                     const std::vector<std::vector<int>>& label) {
  std::size_t n = verts.size();
  if (n <= 1) return SIndex::star();
  if (n == 2)
    return SIndex::base1(label[static_cast<std::size_t>(verts[0])][static_cast<std::size_t>(verts[1])]);
  SIndex r;
  r.level = static_cast<int>(n) - 1;
  r.sub.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<int> sub_verts;
    for (std::size_t v = 0; v < n; ++v)
      if (v != m) sub_verts.push_back(verts[v]);
    r.sub[m] = index_from_edge_labels(sub_verts, label);
  }
  return r;
}

inline SIndex random_member_index(const Nerve& s, Rng& rng) {
  int p = s.level();
  if (p == 0) return SIndex::star();
  // edge (a, b) of the p-simplex carries the partial product g_{a+1} ... g_b
  std::vector<std::vector<int>> label(static_cast<std::size_t>(p + 1),
                                      std::vector<int>(static_cast<std::size_t>(p + 1), 0));
  for (int a = 0; a < p; ++a) {
    SU2 prod = su2_identity();
    for (int b = a + 1; b <= p; ++b) {
      prod = mul(prod, s.g[static_cast<std::size_t>(b - 1)]);
      std::vector<int> mem;
      for (int i = 1; i <= 8; ++i)
        if (patch_member(prod, i)) mem.push_back(i);
      label[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          mem[std::uniform_int_distribution<std::size_t>(0, mem.size() - 1)(rng)];
    }
  }
  std::vector<int> verts(static_cast<std::size_t>(p + 1));
  for (int v = 0; v <= p; ++v) verts[static_cast<std::size_t>(v)] = v;
  return index_from_edge_labels(verts, label);
}

// ---------------------------------------------------------------------------
// Cover points and the preferred sections / horn fillers.
// ---------------------------------------------------------------------------
struct CoverPoint {
  Nerve pt;
  SIndex idx;

  int level() const { return pt.level(); }
};

inline CoverPoint face(const CoverPoint& v, int i) {
  return CoverPoint{face(v.pt, i), face_index(v.idx, i)};
}

inline CoverPoint degeneracy(const CoverPoint& v, int i) {
  return CoverPoint{degeneracy(v.pt, i), degeneracy_index(v.idx, i)};
}

inline SU2 pi1(const CoverPoint& v) {
  if (v.level() != 1) throw std::invalid_argument("pi1 wants a level-1 point");
  return v.pt.g[0];
}

inline CoverPoint phi1(const SU2& g) {
  return CoverPoint{Nerve{{g}}, SIndex::base1(minimal_patch(g))};
}

inline CoverPoint unit_object() { return phi1(su2_identity()); }

// Strictified product of objects.
inline CoverPoint otimes(const CoverPoint& v0, const CoverPoint& v1) {
  return phi1(mul(pi1(v0), pi1(v1)));
}

// Horn filler over (v0, v1): faces (g1, g0 g1, g0) carry the given patches
// and the minimal patch of the product.
inline CoverPoint phi2(const CoverPoint& v0, const CoverPoint& v1) {
  SU2 g0 = pi1(v0), g1 = pi1(v1);
  SU2 g01 = mul(g0, g1);
  SIndex J;
  J.level = 2;
  J.sub = {v1.idx, SIndex::base1(minimal_patch(g01)), v0.idx};
  return CoverPoint{Nerve{{g0, g1}}, J};
}

inline CoverPoint phi3(const CoverPoint& v0, const CoverPoint& v1, const CoverPoint& v2) {
  SU2 g0 = pi1(v0), g1 = pi1(v1), g2 = pi1(v2);
  SIndex J;
  J.level = 3;
  J.sub.resize(4);
  // One patch label per edge of the 3-simplex: the prescribed faces fix all
  // six labels, so the remaining face is the induced one (and the filler with
  // the lowest position is unique).
  J.sub[0] = phi2(v1, v2).idx;
  J.sub[1] = phi2(otimes(v0, v1), v2).idx;
  J.sub[2] = phi2(v0, otimes(v1, v2)).idx;
  J.sub[3] = phi2(v0, v1).idx;
  return CoverPoint{Nerve{{g0, g1, g2}}, J};
}

inline CoverPoint phi4(const CoverPoint& v0, const CoverPoint& v1, const CoverPoint& v2,
                       const CoverPoint& v3) {
  SIndex J;
  J.level = 4;
  J.sub.resize(5);
  J.sub[0] = phi3(v1, v2, v3).idx;
  J.sub[1] = phi3(otimes(v0, v1), v2, v3).idx;
  J.sub[2] = phi3(v0, otimes(v1, v2), v3).idx;
  J.sub[3] = phi3(v0, v1, otimes(v2, v3)).idx;
  J.sub[4] = phi3(v0, v1, v2).idx;
  return CoverPoint{Nerve{{pi1(v0), pi1(v1), pi1(v2), pi1(v3)}}, J};
}

inline CoverPoint random_object(Rng& rng) {
  SU2 g = random_su2(rng);
  return CoverPoint{Nerve{{g}}, random_member_index(Nerve{{g}}, rng)};
}

}  // namespace s2g
