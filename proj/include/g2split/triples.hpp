#ifndef G2SPLIT_TRIPLES_HPP
#define G2SPLIT_TRIPLES_HPP

#include <map>
#include <string>
#include <vector>

#include "g2split/rational.hpp"

namespace g2split {

// (d, d') with d, d' class-number-1 labels, d not in {3,4}; two primes
// split in M = Q(sqrt(-d)), inert in M' = Q(sqrt(-d')), of common trace a.
struct PrimeTriple {
    Int d, dprime;
    Int p1, p2;
    Int a;
};

enum class QVerdict { True, False, Inconclusive };

struct QReport {
    QVerdict verdict = QVerdict::Inconclusive;
    std::string reason;
};

struct ObstructionVerdict {
    PrimeTriple triple;
    bool hypothesis_i = false;
    std::map<long, QReport> hypothesis_ii;  // per prime divisor q of a
    bool pair_excluded() const;
};

// hypothesis i: both primes split in M, inert in M', normalized trace = a
bool verify_hypothesis_i(const PrimeTriple& t);

// hypothesis ii: for every prime q | a, the mod-q torsion modules of CM
// curves for d and d' can never be isomorphic; decided for q in {2,3},
// anything else reports inconclusive
std::map<long, QReport> verify_hypothesis_ii(const PrimeTriple& t);

ObstructionVerdict verify_triple(const PrimeTriple& t);

// all qualifying triples up to the bound, ordered by (a, p1, p2)
std::vector<PrimeTriple> find_triples(const Int& d, const Int& dprime, const Int& prime_bound);

struct PairClassification {
    Int d, dprime;
    bool excluded = false;
    std::string status;  // "pair_excluded" or "inconclusive"
    std::vector<ObstructionVerdict> certificates;
};

// every ordered pair (d > d') from the class-number-1 list; pairs with
// d in {3,4} are inconclusive by the trace-lemma hypothesis
std::vector<PairClassification> classify_all_pairs(const Int& prime_bound);

// the 33 published triples, row order preserved
const std::vector<PrimeTriple>& table2_triples();

}  // namespace g2split

#endif
