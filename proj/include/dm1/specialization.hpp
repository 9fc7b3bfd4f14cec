#pragma once

// Constructive specialization chains between minimal words of comparable
// Newton polygons.  For a saturated pair zeta < xi with xi two-segment and
// slopes straddling 1/2, the chain is built by the minus-squared recursion:
// A_xi and minus(A_xi) are appended whole, minus^2(A_xi) splits off a simple
// summand A_rho, and the remainder recurses as minus(A_xi') for a smaller
// mixed xi'.  Every produced step carries an elementary-move witness that is
// re-checkable without trusting the construction.

#include <string>
#include <vector>

#include "dm1/moves.hpp"
#include "dm1/newton.hpp"

namespace dm1 {

enum class CaseTag { I, II, III, IV, V, VI, BaseH2 };
const char* case_name(CaseTag tag);

// True iff xi has exactly two segments with slopes straddling 1/2
// (n1 > m1 and n2 < m2 in canonical steepest-first order).
bool mixed_two_segment(const NewtonPolygon& xi);

// Six-case split of a mixed two-segment xi (plus the h = 2 base case);
// exactly one case must match or the exhaustiveness claim is violated.
CaseTag classify_case(const NewtonPolygon& xi);

// The split-off segment rho = (a, b): cases I/II/III solve a*n1 - b*m1 = 1
// with 0 <= a <= m1, 1 <= b <= n1; case IV solves b*m2 - a*n2 = 1 with
// 0 <= a <= m2, 1 <= b <= n2.  Unique in range; case II always yields (1,1).
Segment rho_segment(const NewtonPolygon& xi, CaseTag tag);

struct DecompositionResult {
  NewtonPolygon xi_prime;
  Segment rho;
  Word left_word;  // = minus(minimal_word(xi_prime))
  Word rho_word;   // = simple_word(rho)
  CaseTag tag = CaseTag::I;
};

// minus^2(A_xi) = minus(A_xi') (+) A_rho, for cases I-IV.  All claimed
// identities are re-derived and violations abort loudly.
DecompositionResult minus_square_decompose(const NewtonPolygon& xi);

struct BaseDecomposition {
  std::vector<Segment> segments;  // canonical descending-slope order
  Word word;                      // minus(A_xi) for BaseH2, else minus^2(A_xi)
  CaseTag tag = CaseTag::V;
};

// Terminal cases: BaseH2 -> [(1,1)]; V -> [(1,1),(m2-1,1)];
// VI -> [(1,n1-1),(1,1)].  The word is asserted equal to the merge of the
// simple words of the returned segments.
BaseDecomposition prop3_decompose(const NewtonPolygon& xi);

struct ChainStep {
  std::vector<MoveWitness> moves;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

enum class ChainMethod { Constructive, Search };
const char* method_name(ChainMethod m);

struct Chain {
  NewtonPolygon zeta;
  NewtonPolygon xi;
  std::vector<Word> words;       // words[0] = A_zeta, ..., words.back() = A_xi
  std::vector<ChainStep> steps;  // steps[i] descends words[i+1] -> words[i]
  ChainMethod method = ChainMethod::Constructive;
  friend bool operator==(const Chain&, const Chain&) = default;
};

// Chain for a saturated pair with two-segment xi.  Mixed slopes run the
// constructive recursion; non-mixed slopes fall back to a graded
// elementary-move search (method = Search).  Steps always number exactly
// c_value(zeta, xi), one elementary move each.
Chain chain_saturated_two_segment(const NewtonPolygon& zeta, const NewtonPolygon& xi);
Chain chain_saturated_two_segment(const NewtonPolygon& zeta, const NewtonPolygon& xi,
                                  MoveCache& cache);

// Chain for any zeta preceding xi: walks a saturated polygon chain, splits
// the common segment multiset off each cover step, solves the two-segment
// window, and lifts back by merging with the common part.
Chain chain_general(const NewtonPolygon& zeta, const NewtonPolygon& xi);

// Full independent re-check: endpoints, word/step linkage, every move
// witness, strict ell decrease per move, and the constructive step count.
CheckResult verify_chain(const Chain& ch);

}  // namespace dm1
