#ifndef REXLAB_CONSTRUCTIONS_HPP
#define REXLAB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "rexlab/field.hpp"
#include "rexlab/graph.hpp"
#include "rexlab/numtheory.hpp"

namespace rexlab {

/// Product of cyclic groups Z_{m_1} x ... x Z_{m_r}.  Elements are
/// indexed lexicographically, first coordinate most significant.
struct AbelianGroup {
  std::vector<std::int64_t> orders;

  std::int64_t size() const {
    std::int64_t s = 1;
    for (auto m : orders) s *= m;
    return s;
  }
  std::vector<std::int64_t> element(std::int64_t idx) const;
  std::int64_t index(const std::vector<std::int64_t>& e) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
};

/// Cayley sum graph: vertices are the group elements, x ~ y (x != y) iff
/// x + y lies in S; with keep_loops, x carries a loop iff 2x lies in S.
/// Loop-inclusive degrees all equal |S| when keep_loops is set.
Graph cayley_sum(const AbelianGroup& G, const std::vector<std::int64_t>& S,
                 bool keep_loops);

/// Bipartite graph with parts X = Y = Z_M and x ~ y iff x + y == a (mod M)
/// for some a in A.  A must come from a certified DifferenceSet whose
/// modulus is at most floor(M/2) (residue 0 is read as the modulus value,
/// placing A inside {1, ..., floor(M/2)}).  |A|-regular; C4-free when the
/// provenance is Sidon, K_{2,2t+1}-free when its bound is t.
Graph bipartite_sum(std::int64_t M, const std::vector<std::int64_t>& A,
                    const DifferenceSet& provenance);

/// The K_{2,t+1}-free graph on Z_{(p-1)/t} x F_p with connection set
/// {(a mod (p-1)/t, theta^a mod p) : a in Z_{p-1}}.  Loopless; its p-1
/// absolute points (degree p-2) are recorded.
Graph h_graph(std::int64_t p, int t);

/// h_graph plus an apex joined to every absolute point: (p-1)-regular on
/// p(p-1)/t + 1 vertices, K_{2,2t+1}-free.  The apex is the last vertex.
Graph h_star(std::int64_t p, int t);

/// Brown graph on F_p^3: (x,y,z) ~ (a,b,c) iff the squared distance is
/// alpha, alpha the least non-residue-adjusted value with
/// eta(alpha) = -eta(-1).  (p^2-p)-regular, K_{3,3}-free.
Graph brown(std::int64_t p);

/// Norm graph on F_{p^s}: a ~ b iff N(a+b) = 1.  With loops it is
/// (p^s-1)/(p-1)-regular counting each loop once; loopless, the
/// (p^s-1)/(p-1) absolute points (N(2a) = 1) lose one degree.
/// K_{s,s!+1}-free.  p odd, s in {2,3}, p^s <= 2000.
Graph norm_graph(std::int64_t p, int s, bool with_loops);

struct PolarityGraphs {
  Graph er;  // Erdos-Renyi polarity graph on q^2+q+1 projective points
  Graph r1;  // C(q+1,2) vertices, (q-1)/2-regular, C4-free
  Graph r2;  // C(q,2) vertices, (q+1)/2-regular, C4-free
};

/// ER_q together with the two Parsons induced subgraphs.  Both subgraphs
/// are re-verified (regularity and C4-freeness) before being returned.
PolarityGraphs er_polarity(std::int64_t q);

}  // namespace rexlab

#endif
