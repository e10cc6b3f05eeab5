/*
 * rank3.hpp
 * ---------
 * Arrow-count evolution of a rank-3 quiver under the alternating mutation
 * sequence 1,2,1,2,... and the almost-cyclic / acyclic classification of
 * such sequences.
 *
 * The quiver is encoded as a signed triple: r >= 0 arrows 1->2, omega
 * arrows 2->3 and xi arrows 3->1, where a negative count means the arrows
 * point the other way.  After n mutations the triple is reported in the
 * same normalized shape, with the 1-2 arrows reversed when n is odd.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "clusteralg/chebyshev.hpp"

namespace clusteralg {

struct ArrowTriple {
  long r;      // arrows 1 -> 2, must be >= 0
  long xi;     // arrows 3 -> 1 (negative = reversed)
  long omega;  // arrows 2 -> 3 (negative = reversed)
};

/// The signed count c_{n+1}*xi - c_n*omega driving the case analysis: while
/// it stays positive the quivers along the sequence remain cyclically
/// oriented.
Coeff signed_arrow_count(const ArrowTriple& q, long n);

struct EvolvedArrows {
  long xi;
  long omega;
  bool reversed;  // n odd: the r arrows point 2 -> 1
};

/// One mutation step on the normalized pair: (xi, omega) -> ([r*xi]_+ - omega, xi).
/// This is what mutating at the next alternating direction does to the triple.
std::pair<long, long> step_arrows(long r, long xi, long omega);

/// Arrow counts after n alternating mutations starting in direction 1.
/// Uses the closed form where the sign pattern of the signed arrow counts
/// allows it and falls back to iterating step_arrows (only needed for
/// r <= 1, where the sequence is periodic and the signs resurface).
EvolvedArrows evolve_arrows(const ArrowTriple& q0, long n);

enum class SeqType { kAlmostCyclic, kAcyclic };

struct SeqClass {
  SeqType type;
  int condition;  // 1..5 almost cyclic, 6..7 acyclic
};

/// Thrown for sequences the classification leaves undefined
/// (r = 1 with more than two mutations after the period-5 reduction).
class UnclassifiedSequence : public std::runtime_error {
 public:
  explicit UnclassifiedSequence(const std::string& what) : std::runtime_error(what) {}
};

/// Classifies the sequence of m mutations starting at q0.  For r = 1 the
/// length is first reduced modulo the period-5 recurrence of the quiver
/// sequence; lengths that remain above 2 are not classified and throw.
SeqClass classify_sequence(const ArrowTriple& q0, long m);

/// classify_sequence that reports the gap instead of throwing.
std::optional<SeqClass> try_classify_sequence(const ArrowTriple& q0, long m);

}  // namespace clusteralg
