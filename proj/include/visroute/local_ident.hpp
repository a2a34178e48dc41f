#pragma once

// One-local identification of the constrained half-theta edges incident to a
// vertex, given only its visibility neighborhood.
//
// Positive side: u selects, per subcone of its three positive regions, the
// visible neighbor with the projection closest to u.  That needs nothing
// beyond the packet.
//
// Negative side: an edge (w, u) with w seen from u in a negative region was
// chosen by w inside the opposite (positive) cone of w.  Whether u won that
// selection is decidable from u's packet alone: every competitor v that beats
// u is visible to u as well (the segment vw stays inside the cone of w
// containing both u and v, and a constraint blocking vw from u's side would
// be incident to w or cross uw/uv).  Concretely, u reconstructs w's candidate
// set as the packet members lying in w's cone that contains u and whose
// segment to w is not properly crossed by a constraint incident to u, then
// checks whether u has the closest projection.
//
// When uv itself is a constraint, u lies on one of w's splitting rays and
// competes in the two adjacent closed subcones separately: competitors
// strictly on one side of the ray uw only compete in that side's subcone, so
// u wins the edge if it wins either side.

#include "visroute/cones.hpp"
#include "visroute/visibility.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace visroute {

namespace detail {

// Is segment (a, b) properly crossed by any constraint incident to the packet
// owner?  Constraints are given as packet indices of the owner's partners.
inline bool crossed_by_incident_constraint(const Neighborhood& nb, const Vec2I& a,
                                           const Vec2I& b,
                                           const std::vector<std::size_t>& constraint_idx) {
  for (std::size_t ci : constraint_idx) {
    if (properly_intersects(a, b, nb.iself, nb.inbrs[ci])) return true;
  }
  return false;
}

}  // namespace detail

// Half-theta edges incident to the packet owner, as (owner id, neighbor id)
// pairs in packet order of discovery, deduplicated.
inline std::vector<std::pair<std::int64_t, std::int64_t>> local_half_theta6_edges(
    const Neighborhood& nb) {
  validate_neighborhood(nb);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::size_t deg = nb.nbrs.size();

  std::vector<std::size_t> constraint_idx;
  std::vector<Vec2I> partner_pos;
  for (std::size_t k = 0; k < deg; ++k) {
    if (nb.nbrs[k].constraint) {
      constraint_idx.push_back(k);
      partner_pos.push_back(nb.inbrs[k]);
    }
  }

  // Cache each neighbor's region around the owner.
  std::vector<int> region(deg);
  for (std::size_t k = 0; k < deg; ++k) region[k] = cone_of6(nb.inbrs[k] - nb.iself);

  // --- positive side: u's own selections ---------------------------------
  const ConeDecomposition6<Int> dec = decompose_cones6(nb.self_id, nb.iself, partner_pos);
  std::array<std::vector<int>, 6> winner;
  for (int r = 0; r < 6; r += 2) winner[r].assign(dec.subcone_count(r), -1);
  for (std::size_t k = 0; k < deg; ++k) {
    if (!positive_region(region[k])) continue;
    const Vec2I d = nb.inbrs[k] - nb.iself;
    int subs[2];
    int nsubs = 0;
    subcones_of6(dec, d, region[k], subs, &nsubs);
    for (int j = 0; j < nsubs; ++j) {
      int& best = winner[region[k]][subs[j]];
      if (best < 0) {
        best = int(k);
        continue;
      }
      const int cmp =
          sign_of(bisector_projection6(region[k], nb.inbrs[k] - nb.inbrs[best]));
      if (cmp == 0) throw std::domain_error("projection tie in local edge selection");
      if (cmp < 0) best = int(k);
    }
  }
  std::vector<bool> taken(deg, false);  // dedup winners sitting on a splitting ray
  for (int r = 0; r < 6; r += 2)
    for (int best : winner[r])
      if (best >= 0 && !taken[best]) {
        taken[best] = true;
        out.emplace_back(nb.self_id, nb.nbrs[best].id);
      }

  // --- negative side: selections made by the neighbors -------------------
  for (std::size_t w = 0; w < deg; ++w) {
    if (positive_region(region[w])) continue;
    const int wcone = (region[w] + 3) % 6;  // w's cone containing u; positive
    const Vec2I dw = nb.iself - nb.inbrs[w];

    // u always belongs to w's candidate set for this cone.
    const bool uv_constraint = nb.nbrs[w].constraint;
    // Side of the split ray (w -> u): only meaningful for constraint edges.
    // side > 0: candidate strictly counterclockwise of the ray; < 0 clockwise.
    bool wins_plain = true;   // non-constraint: u must beat every candidate
    bool wins_ccw = true;     // constraint: u must win one closed side
    bool wins_cw = true;

    for (std::size_t v = 0; v < deg; ++v) {
      if (v == w) continue;
      const Vec2I dv = nb.inbrs[v] - nb.inbrs[w];
      if (cone_of6(dv) != wcone) continue;
      if (detail::crossed_by_incident_constraint(nb, nb.inbrs[v], nb.inbrs[w],
                                                 constraint_idx))
        continue;  // v cannot be one of w's visible candidates via u's view
      const int cmp = sign_of(bisector_projection6(wcone, dv - dw));
      if (cmp == 0) throw std::domain_error("projection tie in local edge selection");
      if (cmp > 0) continue;  // u still closer than v
      // v beats u somewhere in this cone.
      wins_plain = false;
      if (!uv_constraint) break;
      const int side = sign_of(cross(dw, dv));
      if (side >= 0) wins_ccw = false;  // on-ray competitors hit both sides
      if (side <= 0) wins_cw = false;
      if (!wins_ccw && !wins_cw) break;
    }

    const bool won = uv_constraint ? (wins_ccw || wins_cw) : wins_plain;
    if (won) out.emplace_back(nb.self_id, nb.nbrs[w].id);
  }
  return out;
}

}  // namespace visroute
