// Finite rings behind one carrier-indexed interface.
//
// Every ring is an indexed carrier 0..order-1 with total add/mul/neg and
// distinguished zero and one. Canonical index orderings:
//   Zn        index = residue
//   GF(p^k)   index = sum c_i p^i over modulus-polynomial coefficients
//             (constant term least significant)
//   products  lexicographic by factor, first factor most significant
//   matrices  row-major entries as base-n digits, entry (0,0) least significant
//   quotients cosets sorted by their minimal base representative
#ifndef NILGRAPH_RING_HPP
#define NILGRAPH_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nilgraph/ring_spec.hpp"

namespace nilgraph {

using Index = std::uint32_t;

class Ring {
public:
    virtual ~Ring() = default;

    std::size_t order() const { return order_; }
    Index zero() const { return zero_; }
    Index one() const { return one_; }
    bool commutative() const { return commutative_; }
    const RingSpec& spec() const { return spec_; }
    std::string spec_string() const { return spec_.str(); }
    const std::string& label(Index a) const { return labels_[a]; }

    Index add(Index a, Index b) const {
        return add_table_.empty() ? add_impl(a, b)
                                  : static_cast<Index>(add_table_[a * order_ + b]);
    }
    Index mul(Index a, Index b) const {
        return mul_table_.empty() ? mul_impl(a, b)
                                  : static_cast<Index>(mul_table_[a * order_ + b]);
    }
    Index neg(Index a) const { return neg_table_[a]; }
    Index sub(Index a, Index b) const { return add(a, neg(b)); }

protected:
    virtual Index add_impl(Index a, Index b) const = 0;
    virtual Index mul_impl(Index a, Index b) const = 0;
    virtual Index neg_impl(Index a) const = 0;

    // Called once by every constructor after ops are ready.
    void finish(std::size_t order, Index zero, Index one, bool commutative, RingSpec spec,
                std::vector<std::string> labels);

    std::size_t order_ = 0;
    Index zero_ = 0;
    Index one_ = 0;
    bool commutative_ = true;
    RingSpec spec_;
    std::vector<std::string> labels_;
    std::vector<std::uint16_t> add_table_, mul_table_;  // filled when order <= kMemoLimit
    std::vector<Index> neg_table_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Full operation tables are memoized up to this order.
inline constexpr std::size_t kMemoLimit = 4096;

// Builds the ring described by spec. Throws SpecError on invalid parameters
// (n < 2, non-prime p, reducible modulus, fewer than two product factors,
// matrix base not some Zn) and NoncommutativeError for Q(...) of a
// noncommutative base.
RingPtr build_ring(const RingSpec& spec);

struct CosetMap {
    std::vector<Index> projection;  // base index -> quotient index
    std::vector<Index> section;     // quotient index -> representative base index
};

// Quotient of a commutative ring by its nilradical, with the projection map.
std::pair<RingPtr, CosetMap> build_quotient_by_nilradical(const RingPtr& base);

// Smallest m >= 1 with m*1 = 0.
std::uint64_t characteristic(const Ring& r);

struct AxiomReport {
    bool ok = true;
    std::string failure;  // first violated law, with witnesses
};

// Checks the ring laws: exhaustively up to `exhaustive_limit`, by fixed-seed
// sampling above it. Also checks that the commutative flag is truthful.
AxiomReport check_ring_axioms(const Ring& r, std::size_t exhaustive_limit = 256,
                              std::size_t samples = 20000);

// --- helpers shared by the GF construction, matrix paths and tests ---

bool is_prime(std::uint64_t n);

// Irreducibility over Z_p of a monic polynomial given as c0..ck, by exhaustive
// trial division against all lower-degree monic polynomials.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint64_t p);

// First irreducible monic polynomial of degree k over Z_p in canonical
// coefficient order (constant term least significant).
std::vector<std::uint32_t> default_gf_poly(std::uint64_t p, unsigned k);

// Entry vectors of matrix-ring elements (row-major), per the canonical index order.
std::vector<Index> matrix_entries(const RingSpec& mspec, Index v);
Index matrix_index(const RingSpec& mspec, const std::vector<Index>& entries);

}  // namespace nilgraph

#endif
