#pragma once

#include <set>
#include <string>
#include <vector>

#include "tgp/arrow.hpp"
#include "tgp/poly.hpp"

namespace tgp {

// Edge-level surgeries. All pure; inputs are never modified.

// Remove both arrows of every edge in `drop`; circles are retained.
ArrowPresentation delete_edges(const ArrowPresentation& ap, const std::set<std::string>& drop);

// Splice rule: remove the two e-arrows and the arcs they cover, joining
// head to opposite tail on both sides. Applies uniformly to loops.
ArrowPresentation contract(const ArrowPresentation& ap, const std::string& e);

// Flip the direction of exactly one arrow of every edge in A.
ArrowPresentation partial_petrial(const ArrowPresentation& ap, const std::set<std::string>& A);

// Single-edge duality splice, composed over A for |A| > 1 (ascending label
// order; composition order is immaterial up to fingerprint).
ArrowPresentation partial_dual(const ArrowPresentation& ap, const std::set<std::string>& A);

ArrowPresentation geometric_dual(const ArrowPresentation& ap);
ArrowPresentation petrial(const ArrowPresentation& ap);

struct TwistedAtom {
    enum class Op { Delta, Tau };
    Op op;
    std::set<std::string> edges;
};
using TwistedWord = std::vector<TwistedAtom>;

// Atoms applied left to right.
ArrowPresentation twisted_dual(const ArrowPresentation& ap, const TwistedWord& word);

// Equivalence-test surrogate: numeric invariants plus the full transition
// polynomial. Equal presentations (up to relabelling, rotation, reflection,
// whole-edge double flips) have equal fingerprints; the converse is used as a
// working assumption, not a theorem.
struct Fingerprint {
    RibbonInvariants inv;
    MultiPoly q;  // over {alpha,beta,gamma,t}, with edge labels forgotten
    bool operator==(const Fingerprint&) const = default;
};

inline constexpr int kDefaultFingerprintBound = 10;

Fingerprint fingerprint(const ArrowPresentation& ap, int max_edges = kDefaultFingerprintBound);

}  // namespace tgp
