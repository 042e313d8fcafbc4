// Ring descriptions and their compact text grammar.
//
// Grammar (round-trips through str()):
//   Z6                 integers mod 6
//   GF(5,2)            field of order 5^2, default modulus polynomial
//   GF(5,2;[1,1,1])    explicit monic modulus, coefficients constant-first
//   Z4xZ3              direct product (any atoms, two or more factors)
//   M2(Z2)             2x2 matrices over Z2 (base must be some Zn)
//   Q(Z12)             quotient by the nilradical
#ifndef NILGRAPH_RING_SPEC_HPP
#define NILGRAPH_RING_SPEC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nilgraph {

struct RingSpec {
    enum class Kind { Zn, GF, Product, Matrix, Quotient };

    Kind kind = Kind::Zn;
    std::uint64_t n = 0;               // Zn modulus
    std::uint64_t p = 0;               // GF characteristic
    unsigned k = 0;                    // GF extension degree
    std::vector<std::uint32_t> poly;   // GF modulus c0..ck (monic); empty = default
    unsigned dim = 0;                  // Matrix dimension
    std::vector<RingSpec> sub;         // Product factors; [base] for Matrix/Quotient

    static RingSpec zn(std::uint64_t n);
    static RingSpec gf(std::uint64_t p, unsigned k);
    static RingSpec gf(std::uint64_t p, unsigned k, std::vector<std::uint32_t> poly);
    static RingSpec product(std::vector<RingSpec> factors);  // flattens nested products
    static RingSpec matrix(RingSpec base, unsigned dim);
    static RingSpec quotient_by_nil(RingSpec base);

    bool operator==(const RingSpec&) const;
    // Structural order: kind rank, then parameters (numeric, so Z2 < Z10).
    bool operator<(const RingSpec&) const;

    std::string str() const;

    // Carrier size, before any quotient collapses (quotients report the base order;
    // the true order is only known after construction).
    std::uint64_t order_bound() const;
};

RingSpec parse_ring_spec(std::string_view text);                  // throws ParseError
std::vector<RingSpec> parse_ring_spec_list(std::string_view csv); // comma-separated

}  // namespace nilgraph

#endif
