#include "nilgraph/nilclean.hpp"

#include "nilgraph/errors.hpp"

namespace nilgraph {

ElementSet idempotent_set(const Ring& r) {
    ElementSet s(r.order());
    for (Index e = 0; e < r.order(); ++e)
        if (r.mul(e, e) == e) s.set(e);
    return s;
}

ElementSet nilpotent_set(const Ring& r) {
    const std::size_t n = r.order();
    ElementSet s(n);
    Bitset visited(n);
    for (Index x = 0; x < n; ++x) {
        visited.clear_all();
        Index y = x;
        bool nil = false;
        for (std::size_t step = 0; step <= n; ++step) {
            if (y == r.zero()) {
                nil = true;
                break;
            }
            if (visited.test(y)) break;  // entered a nonzero cycle
            visited.set(y);
            y = r.mul(y, x);
        }
        if (nil) s.set(x);
    }
    return s;
}

ElementSet nil_clean_set(const Ring& r) {
    ElementSet idem = idempotent_set(r);
    ElementSet nil = nilpotent_set(r);
    ElementSet nc(r.order());
    idem.for_each([&](std::size_t e) {
        nil.for_each(
            [&](std::size_t n) { nc.set(r.add(static_cast<Index>(e), static_cast<Index>(n))); });
    });
    return nc;
}

NilCleanProfile compute_profile(const Ring& r) {
    const std::size_t n = r.order();
    NilCleanProfile p;
    p.idempotents = idempotent_set(r);
    p.nilpotents = nilpotent_set(r);
    p.nilclean = ElementSet(n);
    p.witness.assign(n, std::nullopt);
    p.idempotents.for_each([&](std::size_t e) {
        p.nilpotents.for_each([&](std::size_t nn) {
            Index x = r.add(static_cast<Index>(e), static_cast<Index>(nn));
            if (!p.nilclean.test(x)) {
                p.nilclean.set(x);
                p.witness[x] = NilCleanWitness{static_cast<Index>(e), static_cast<Index>(nn)};
            }
        });
    });
    p.is_nil_clean_ring = p.nilclean.count() == n;
    // weak: also allow n - e
    if (p.is_nil_clean_ring) {
        p.is_weak_nil_clean_ring = true;
    } else {
        ElementSet weak = p.nilclean;
        p.idempotents.for_each([&](std::size_t e) {
            p.nilpotents.for_each([&](std::size_t nn) {
                weak.set(r.sub(static_cast<Index>(nn), static_cast<Index>(e)));
            });
        });
        p.is_weak_nil_clean_ring = weak.count() == n;
    }
    p.is_field = is_field(r);
    return p;
}

bool is_weak_nil_clean(const Ring& r) {
    ElementSet idem = idempotent_set(r);
    ElementSet nil = nilpotent_set(r);
    ElementSet covered(r.order());
    idem.for_each([&](std::size_t e) {
        nil.for_each([&](std::size_t n) {
            covered.set(r.add(static_cast<Index>(e), static_cast<Index>(n)));
            covered.set(r.sub(static_cast<Index>(n), static_cast<Index>(e)));
        });
    });
    return covered.count() == r.order();
}

bool is_field(const Ring& r) {
    const std::size_t n = r.order();
    for (Index x = 0; x < n; ++x) {
        if (x == r.zero()) continue;
        bool unit = false;
        for (Index y = 0; y < n; ++y)
            if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) {
                unit = true;
                break;
            }
        if (!unit) return false;
    }
    return true;
}

bool idempotent_lifting_check(const Ring& r) {
    if (!r.commutative())
        throw NoncommutativeError("idempotent lifting requires a commutative ring (" +
                                  r.spec_string() + " is not)");
    // Rebuild the quotient locally from the nilradical.
    ElementSet nil = nilpotent_set(r);
    const std::size_t n = r.order();
    std::vector<Index> rep(n, 0);
    std::vector<bool> seen(n, false);
    for (Index x = 0; x < n; ++x) {
        if (seen[x]) continue;
        nil.for_each([&](std::size_t ni) {
            Index y = r.add(x, static_cast<Index>(ni));
            if (!seen[y]) {
                seen[y] = true;
                rep[y] = x;
            }
        });
    }
    // A coset xbar is idempotent iff x*x lies in the same coset as x.
    for (Index x = 0; x < n; ++x) {
        if (rep[x] != x) continue;  // one check per coset
        if (rep[r.mul(x, x)] != x) continue;
        bool lifted = false;
        for (Index y = 0; y < n && !lifted; ++y)
            if (rep[y] == x && r.mul(y, y) == y) lifted = true;
        if (!lifted) return false;
    }
    return true;
}

}  // namespace nilgraph
