#include "nilgraph/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "nilgraph/errors.hpp"
#include "nilgraph/nilclean.hpp"

namespace nilgraph {

void Ring::finish(std::size_t order, Index zero, Index one, bool commutative, RingSpec spec,
                  std::vector<std::string> labels) {
    order_ = order;
    zero_ = zero;
    one_ = one;
    commutative_ = commutative;
    spec_ = std::move(spec);
    labels_ = std::move(labels);
    neg_table_.resize(order_);
    for (Index a = 0; a < order_; ++a) neg_table_[a] = neg_impl(a);
    if (order_ <= kMemoLimit) {
        add_table_.resize(order_ * order_);
        mul_table_.resize(order_ * order_);
        for (Index a = 0; a < order_; ++a)
            for (Index b = 0; b < order_; ++b) {
                add_table_[a * order_ + b] = static_cast<std::uint16_t>(add_impl(a, b));
                mul_table_[a * order_ + b] = static_cast<std::uint16_t>(mul_impl(a, b));
            }
    }
}

namespace {

class ZnRing final : public Ring {
public:
    explicit ZnRing(std::uint64_t n) : n_(n) {
        std::vector<std::string> labels(n);
        for (std::uint64_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
        finish(n, 0, 1, true, RingSpec::zn(n), std::move(labels));
    }

protected:
    Index add_impl(Index a, Index b) const override {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Index>(s >= n_ ? s - n_ : s);
    }
    Index mul_impl(Index a, Index b) const override {
        return static_cast<Index>((std::uint64_t{a} * b) % n_);
    }
    Index neg_impl(Index a) const override { return a == 0 ? 0 : static_cast<Index>(n_ - a); }

private:
    std::uint64_t n_;
};

std::string gf_label(const std::vector<std::uint32_t>& digits) {
    // Polynomial in alpha, highest power first, e.g. "3α+2", "α^2+1".
    std::string s;
    for (std::size_t d = digits.size(); d-- > 0;) {
        std::uint32_t c = digits[d];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (d == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += "α";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s.empty() ? "0" : s;
}

class GFRing final : public Ring {
public:
    GFRing(std::uint64_t p, unsigned k, std::vector<std::uint32_t> poly) : p_(p), k_(k) {
        std::uint64_t order = 1;
        for (unsigned i = 0; i < k; ++i) order *= p;
        // reduction_[j] = x^(k+j) mod f; products of two degree-<k polynomials
        // have degree at most 2k-2, so j ranges over [0, k-1).
        std::vector<std::uint64_t> cur(k_, 0);
        for (unsigned i = 0; i < k_; ++i) cur[i] = (p_ - poly[i] % p_) % p_;  // x^k mod f
        for (unsigned j = 0; j + 1 < k_; ++j) {
            reduction_.push_back(cur);
            std::vector<std::uint64_t> nxt(k_, 0);
            std::uint64_t top = cur[k_ - 1];
            for (unsigned i = 1; i < k_; ++i) nxt[i] = cur[i - 1];
            for (unsigned i = 0; i < k_; ++i)
                nxt[i] = (nxt[i] + top * ((p_ - poly[i] % p_) % p_)) % p_;
            cur = std::move(nxt);
        }
        poly_ = std::move(poly);
        std::vector<std::string> labels(order);
        for (std::uint64_t v = 0; v < order; ++v) labels[v] = gf_label(digits(static_cast<Index>(v)));
        finish(order, 0, 1, true, RingSpec::gf(p, k, poly_), std::move(labels));
    }

    std::vector<std::uint32_t> digits(Index v) const {
        std::vector<std::uint32_t> d(k_);
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = static_cast<std::uint32_t>(v % p_);
            v = static_cast<Index>(v / p_);
        }
        return d;
    }
    Index from_digits(const std::vector<std::uint64_t>& d) const {
        std::uint64_t v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * p_ + d[i] % p_;
        return static_cast<Index>(v);
    }

protected:
    Index add_impl(Index a, Index b) const override {
        std::uint64_t v = 0, pw = 1;
        for (unsigned i = 0; i < k_; ++i) {
            v += ((a % p_ + b % p_) % p_) * pw;
            a = static_cast<Index>(a / p_);
            b = static_cast<Index>(b / p_);
            pw *= p_;
        }
        return static_cast<Index>(v);
    }
    Index mul_impl(Index a, Index b) const override {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint64_t> conv(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (!da[i]) continue;
            for (unsigned j = 0; j < k_; ++j) conv[i + j] += std::uint64_t{da[i]} * db[j];
        }
        std::vector<std::uint64_t> res(k_, 0);
        for (unsigned i = 0; i < k_; ++i) res[i] = conv[i] % p_;
        for (unsigned j = 0; j + 1 < k_; ++j) {
            std::uint64_t c = conv[k_ + j] % p_;
            if (!c) continue;
            for (unsigned i = 0; i < k_; ++i) res[i] = (res[i] + c * reduction_[j][i]) % p_;
        }
        return from_digits(res);
    }
    Index neg_impl(Index a) const override {
        std::uint64_t v = 0, pw = 1;
        for (unsigned i = 0; i < k_; ++i) {
            v += ((p_ - a % p_) % p_) * pw;
            a = static_cast<Index>(a / p_);
            pw *= p_;
        }
        return static_cast<Index>(v);
    }

private:
    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint32_t> poly_;
    std::vector<std::vector<std::uint64_t>> reduction_;
};

class ProductRing final : public Ring {
public:
    explicit ProductRing(std::vector<RingPtr> factors, RingSpec spec)
        : factors_(std::move(factors)) {
        strides_.resize(factors_.size());
        std::uint64_t order = 1;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            strides_[i] = order;
            order *= factors_[i]->order();
        }
        bool comm = true;
        for (const auto& f : factors_) comm = comm && f->commutative();
        std::vector<std::string> labels(order);
        for (std::uint64_t v = 0; v < order; ++v) {
            std::string s = "(";
            auto parts = decode(static_cast<Index>(v));
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) s += ",";
                s += factors_[i]->label(parts[i]);
            }
            labels[v] = s + ")";
        }
        Index one = 0, zero = 0;
        {
            std::vector<Index> ones, zeros;
            for (const auto& f : factors_) {
                ones.push_back(f->one());
                zeros.push_back(f->zero());
            }
            one = encode(ones);
            zero = encode(zeros);
        }
        finish(order, zero, one, comm, std::move(spec), std::move(labels));
    }

    std::vector<Index> decode(Index v) const {
        std::vector<Index> parts(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            parts[i] = static_cast<Index>((v / strides_[i]) % factors_[i]->order());
        }
        return parts;
    }
    Index encode(const std::vector<Index>& parts) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) v += parts[i] * strides_[i];
        return static_cast<Index>(v);
    }

protected:
    Index add_impl(Index a, Index b) const override { return zip(a, b, /*mul=*/false); }
    Index mul_impl(Index a, Index b) const override { return zip(a, b, /*mul=*/true); }
    Index neg_impl(Index a) const override {
        auto parts = decode(a);
        for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = factors_[i]->neg(parts[i]);
        return encode(parts);
    }

private:
    Index zip(Index a, Index b, bool mul) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            Index ai = static_cast<Index>((a / strides_[i]) % factors_[i]->order());
            Index bi = static_cast<Index>((b / strides_[i]) % factors_[i]->order());
            v += (mul ? factors_[i]->mul(ai, bi) : factors_[i]->add(ai, bi)) * strides_[i];
        }
        return static_cast<Index>(v);
    }

    std::vector<RingPtr> factors_;
    std::vector<std::uint64_t> strides_;
};

class MatrixRing final : public Ring {
public:
    MatrixRing(std::uint64_t m, unsigned d, RingSpec spec) : m_(m), d_(d) {
        std::uint64_t order = 1;
        for (unsigned i = 0; i < d * d; ++i) order *= m;
        std::vector<std::string> labels(order);
        for (std::uint64_t v = 0; v < order; ++v) {
            auto e = entries(static_cast<Index>(v));
            std::string s = "[";
            for (unsigned r = 0; r < d_; ++r) {
                if (r) s += ",";
                s += "[";
                for (unsigned c = 0; c < d_; ++c) {
                    if (c) s += ",";
                    s += std::to_string(e[r * d_ + c]);
                }
                s += "]";
            }
            labels[v] = s + "]";
        }
        std::vector<Index> id(d * d, 0);
        for (unsigned i = 0; i < d; ++i) id[i * d + i] = 1;
        Index one = from_entries(id);
        // d = 1 is plain Zn in disguise; for d >= 2 the elementary matrices
        // E01, E00 never commute (axiom check re-verifies the flag by scan).
        finish(order, 0, one, /*commutative=*/d_ == 1, std::move(spec), std::move(labels));
    }

    std::vector<Index> entries(Index v) const {
        std::vector<Index> e(d_ * d_);
        for (unsigned i = 0; i < d_ * d_; ++i) {
            e[i] = static_cast<Index>(v % m_);
            v = static_cast<Index>(v / m_);
        }
        return e;
    }
    Index from_entries(const std::vector<Index>& e) const {
        std::uint64_t v = 0;
        for (unsigned i = d_ * d_; i-- > 0;) v = v * m_ + e[i] % m_;
        return static_cast<Index>(v);
    }

protected:
    Index add_impl(Index a, Index b) const override {
        std::uint64_t v = 0, pw = 1;
        for (unsigned i = 0; i < d_ * d_; ++i) {
            v += ((a % m_ + b % m_) % m_) * pw;
            a = static_cast<Index>(a / m_);
            b = static_cast<Index>(b / m_);
            pw *= m_;
        }
        return static_cast<Index>(v);
    }
    Index mul_impl(Index a, Index b) const override {
        auto ea = entries(a), eb = entries(b);
        std::vector<Index> ec(d_ * d_, 0);
        for (unsigned i = 0; i < d_; ++i)
            for (unsigned kk = 0; kk < d_; ++kk) {
                std::uint64_t aik = ea[i * d_ + kk];
                if (!aik) continue;
                for (unsigned j = 0; j < d_; ++j)
                    ec[i * d_ + j] =
                        static_cast<Index>((ec[i * d_ + j] + aik * eb[kk * d_ + j]) % m_);
            }
        return from_entries(ec);
    }
    Index neg_impl(Index a) const override {
        std::uint64_t v = 0, pw = 1;
        for (unsigned i = 0; i < d_ * d_; ++i) {
            v += ((m_ - a % m_) % m_) * pw;
            a = static_cast<Index>(a / m_);
            pw *= m_;
        }
        return static_cast<Index>(v);
    }

private:
    std::uint64_t m_;
    unsigned d_;
};

class QuotientRing final : public Ring {
public:
    QuotientRing(RingPtr base, CosetMap map, RingSpec spec) : base_(std::move(base)), map_(std::move(map)) {
        std::size_t order = map_.section.size();
        std::vector<std::string> labels(order);
        for (std::size_t c = 0; c < order; ++c) labels[c] = base_->label(map_.section[c]);
        finish(order, map_.projection[base_->zero()], map_.projection[base_->one()], true,
               std::move(spec), std::move(labels));
    }

protected:
    Index add_impl(Index a, Index b) const override {
        return map_.projection[base_->add(map_.section[a], map_.section[b])];
    }
    Index mul_impl(Index a, Index b) const override {
        return map_.projection[base_->mul(map_.section[a], map_.section[b])];
    }
    Index neg_impl(Index a) const override {
        return map_.projection[base_->neg(map_.section[a])];
    }

private:
    RingPtr base_;
    CosetMap map_;
};

void validate_spec(const RingSpec& spec) {
    switch (spec.kind) {
        case RingSpec::Kind::Zn:
            if (spec.n < 2) throw SpecError("Zn requires n >= 2, got n=" + std::to_string(spec.n));
            break;
        case RingSpec::Kind::GF: {
            if (!is_prime(spec.p))
                throw SpecError("GF requires a prime p, got p=" + std::to_string(spec.p));
            if (spec.k < 1) throw SpecError("GF requires k >= 1");
            if (!spec.poly.empty()) {
                if (spec.poly.size() != spec.k + 1)
                    throw SpecError("GF modulus must have degree k (k+1 coefficients)");
                if (spec.poly.back() != 1) throw SpecError("GF modulus must be monic");
                for (auto c : spec.poly)
                    if (c >= spec.p) throw SpecError("GF modulus coefficient out of range");
                if (!is_irreducible_mod_p(spec.poly, spec.p))
                    throw SpecError("GF modulus is reducible over Z_" + std::to_string(spec.p));
            }
            break;
        }
        case RingSpec::Kind::Product:
            if (spec.sub.size() < 2) throw SpecError("product requires at least two factors");
            for (const auto& f : spec.sub) validate_spec(f);
            break;
        case RingSpec::Kind::Matrix:
            if (spec.dim < 1) throw SpecError("matrix dimension must be >= 1");
            if (spec.sub[0].kind != RingSpec::Kind::Zn)
                throw SpecError("matrix base must be some Zn");
            validate_spec(spec.sub[0]);
            break;
        case RingSpec::Kind::Quotient:
            validate_spec(spec.sub[0]);
            break;
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// poly % div over Z_p; both monic-friendly dense coefficient vectors, c0 first.
std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> r,
                                    const std::vector<std::uint64_t>& div, std::uint64_t p) {
    std::size_t dd = div.size() - 1;  // div monic of degree dd
    while (r.size() > dd) {
        std::uint64_t lead = r.back() % p;
        std::size_t shift = r.size() - 1 - dd;
        if (lead) {
            for (std::size_t i = 0; i <= dd; ++i)
                r[shift + i] = (r[shift + i] + (p - (lead * div[i]) % p)) % p;
        }
        r.pop_back();
    }
    return r;
}

bool divides(const std::vector<std::uint64_t>& div, const std::vector<std::uint32_t>& poly,
             std::uint64_t p) {
    std::vector<std::uint64_t> r(poly.begin(), poly.end());
    r = poly_mod(std::move(r), div, p);
    for (auto c : r)
        if (c % p) return false;
    return true;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint64_t p) {
    unsigned k = static_cast<unsigned>(poly.size() - 1);
    if (k == 0) return false;
    if (k == 1) return true;
    for (unsigned d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::vector<std::uint64_t> div(d + 1, 0);
            std::uint64_t v = c;
            for (unsigned i = 0; i < d; ++i) {
                div[i] = v % p;
                v /= p;
            }
            div[d] = 1;
            if (divides(div, poly, p)) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_gf_poly(std::uint64_t p, unsigned k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
        std::vector<std::uint32_t> poly(k + 1, 0);
        std::uint64_t v = c;
        for (unsigned i = 0; i < k; ++i) {
            poly[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        poly[k] = 1;
        if (is_irreducible_mod_p(poly, p)) return poly;
    }
    throw SpecError("no irreducible polynomial found");  // unreachable for prime p
}

RingPtr build_ring(const RingSpec& spec) {
    validate_spec(spec);
    switch (spec.kind) {
        case RingSpec::Kind::Zn:
            return std::make_shared<ZnRing>(spec.n);
        case RingSpec::Kind::GF: {
            auto poly = spec.poly.empty() ? default_gf_poly(spec.p, spec.k) : spec.poly;
            return std::make_shared<GFRing>(spec.p, spec.k, std::move(poly));
        }
        case RingSpec::Kind::Product: {
            std::vector<RingPtr> factors;
            factors.reserve(spec.sub.size());
            for (const auto& f : spec.sub) factors.push_back(build_ring(f));
            return std::make_shared<ProductRing>(std::move(factors), spec);
        }
        case RingSpec::Kind::Matrix:
            return std::make_shared<MatrixRing>(spec.sub[0].n, spec.dim, spec);
        case RingSpec::Kind::Quotient: {
            RingPtr base = build_ring(spec.sub[0]);
            return build_quotient_by_nilradical(base).first;
        }
    }
    throw SpecError("unknown ring kind");
}

std::pair<RingPtr, CosetMap> build_quotient_by_nilradical(const RingPtr& base) {
    if (!base->commutative())
        throw NoncommutativeError("quotient by nilradical requires a commutative ring (" +
                                  base->spec_string() + " is not)");
    Bitset nil = nilpotent_set(*base);
    const std::size_t n = base->order();
    CosetMap map;
    map.projection.assign(n, 0);
    std::vector<Index> rep_of(n, 0);  // element -> minimal representative of its coset
    std::vector<bool> seen(n, false);
    std::vector<Index> reps;
    for (Index x = 0; x < n; ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        nil.for_each([&](std::size_t ni) {
            Index y = base->add(x, static_cast<Index>(ni));
            if (!seen[y]) {
                seen[y] = true;
                rep_of[y] = x;
            }
        });
    }
    // reps were found in ascending order, so coset indices are already canonical
    for (std::size_t c = 0; c < reps.size(); ++c) map.section.push_back(reps[c]);
    std::vector<Index> rep_to_coset(n, 0);
    for (std::size_t c = 0; c < reps.size(); ++c) rep_to_coset[reps[c]] = static_cast<Index>(c);
    for (Index x = 0; x < n; ++x) map.projection[x] = rep_to_coset[rep_of[x]];
    RingSpec qspec = RingSpec::quotient_by_nil(base->spec());
    auto ring = std::make_shared<QuotientRing>(base, map, std::move(qspec));
    return {ring, std::move(map)};
}

std::uint64_t characteristic(const Ring& r) {
    Index x = r.one();
    std::uint64_t m = 1;
    while (x != r.zero()) {
        x = r.add(x, r.one());
        ++m;
    }
    return m;
}

namespace {

struct AxiomChecker {
    const Ring& r;
    AxiomReport report;

    void fail(const std::string& what) {
        if (report.ok) {
            report.ok = false;
            report.failure = what;
        }
    }

    void check_pair(Index a, Index b) {
        if (r.add(a, b) != r.add(b, a)) fail("a+b != b+a at (" + r.label(a) + "," + r.label(b) + ")");
        if (r.commutative() && r.mul(a, b) != r.mul(b, a))
            fail("flagged commutative but ab != ba at (" + r.label(a) + "," + r.label(b) + ")");
    }
    void check_triple(Index a, Index b, Index c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("(a+b)+c != a+(b+c)");
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("(ab)c != a(bc)");
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("a(b+c) != ab+ac");
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) fail("(a+b)c != ac+bc");
    }
    void check_unary(Index a) {
        if (r.add(a, r.zero()) != a) fail("a+0 != a at " + r.label(a));
        if (r.add(a, r.neg(a)) != r.zero()) fail("a+(-a) != 0 at " + r.label(a));
        if (r.mul(a, r.one()) != a) fail("a*1 != a at " + r.label(a));
        if (r.mul(r.one(), a) != a) fail("1*a != a at " + r.label(a));
    }
};

}  // namespace

AxiomReport check_ring_axioms(const Ring& r, std::size_t exhaustive_limit, std::size_t samples) {
    AxiomChecker ck{r, {}};
    const std::size_t n = r.order();
    for (Index a = 0; a < n && ck.report.ok; ++a) ck.check_unary(a);
    if (n <= exhaustive_limit) {
        for (Index a = 0; a < n && ck.report.ok; ++a)
            for (Index b = 0; b < n && ck.report.ok; ++b) {
                ck.check_pair(a, b);
                for (Index c = 0; c < n && ck.report.ok; ++c) ck.check_triple(a, b, c);
            }
        if (!r.commutative()) {
            bool found = false;
            for (Index a = 0; a < n && !found; ++a)
                for (Index b = 0; b < n && !found; ++b)
                    if (r.mul(a, b) != r.mul(b, a)) found = true;
            if (!found) ck.fail("flagged noncommutative but no noncommuting pair exists");
        }
    } else {
        std::mt19937_64 rng(0x6e696c677261ULL);
        std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
        for (std::size_t s = 0; s < samples && ck.report.ok; ++s) {
            Index a = static_cast<Index>(dist(rng));
            Index b = static_cast<Index>(dist(rng));
            Index c = static_cast<Index>(dist(rng));
            ck.check_pair(a, b);
            ck.check_triple(a, b, c);
        }
    }
    return ck.report;
}

std::vector<Index> matrix_entries(const RingSpec& mspec, Index v) {
    if (mspec.kind != RingSpec::Kind::Matrix) throw SpecError("matrix_entries: not a matrix spec");
    std::uint64_t m = mspec.sub[0].n;
    unsigned cells = mspec.dim * mspec.dim;
    std::vector<Index> e(cells);
    for (unsigned i = 0; i < cells; ++i) {
        e[i] = static_cast<Index>(v % m);
        v = static_cast<Index>(v / m);
    }
    return e;
}

Index matrix_index(const RingSpec& mspec, const std::vector<Index>& entries) {
    if (mspec.kind != RingSpec::Kind::Matrix) throw SpecError("matrix_index: not a matrix spec");
    std::uint64_t m = mspec.sub[0].n;
    std::uint64_t v = 0;
    for (std::size_t i = entries.size(); i-- > 0;) v = v * m + entries[i] % m;
    return static_cast<Index>(v);
}

}  // namespace nilgraph
