// Idempotents, nilpotents, nil clean elements and the ring classification
// predicates built on them.
#ifndef NILGRAPH_NILCLEAN_HPP
#define NILGRAPH_NILCLEAN_HPP

#include <optional>
#include <vector>

#include "nilgraph/bitset.hpp"
#include "nilgraph/ring.hpp"

namespace nilgraph {

using ElementSet = Bitset;

// {e : e*e = e}
ElementSet idempotent_set(const Ring& r);

// {x : x^m = 0 for some m}, by power iteration with cycle detection.
ElementSet nilpotent_set(const Ring& r);

// {e + n : e idempotent, n nilpotent}
ElementSet nil_clean_set(const Ring& r);

struct NilCleanWitness {
    Index e;  // idempotent
    Index n;  // nilpotent, with e + n = the element
};

struct NilCleanProfile {
    ElementSet idempotents;
    ElementSet nilpotents;
    ElementSet nilclean;
    bool is_nil_clean_ring = false;
    bool is_weak_nil_clean_ring = false;
    bool is_field = false;
    // witness[x] is the first (e, n) pair in lexicographic carrier order, when
    // x is nil clean.
    std::vector<std::optional<NilCleanWitness>> witness;
};

NilCleanProfile compute_profile(const Ring& r);

// Every element is n + e or n - e.
bool is_weak_nil_clean(const Ring& r);

// Every nonzero element has a two-sided multiplicative inverse.
bool is_field(const Ring& r);

// Every idempotent coset of R/nil(R) contains an idempotent of R.
// Throws NoncommutativeError for noncommutative input.
bool idempotent_lifting_check(const Ring& r);

}  // namespace nilgraph

#endif
