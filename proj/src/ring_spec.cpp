#include "nilgraph/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <utility>

#include "nilgraph/errors.hpp"

namespace nilgraph {

RingSpec RingSpec::zn(std::uint64_t n) {
    RingSpec s;
    s.kind = Kind::Zn;
    s.n = n;
    return s;
}

RingSpec RingSpec::gf(std::uint64_t p, unsigned k) {
    RingSpec s;
    s.kind = Kind::GF;
    s.p = p;
    s.k = k;
    return s;
}

RingSpec RingSpec::gf(std::uint64_t p, unsigned k, std::vector<std::uint32_t> poly) {
    RingSpec s = gf(p, k);
    s.poly = std::move(poly);
    return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
    RingSpec s;
    s.kind = Kind::Product;
    for (auto& f : factors) {
        if (f.kind == Kind::Product)
            for (auto& g : f.sub) s.sub.push_back(std::move(g));
        else
            s.sub.push_back(std::move(f));
    }
    return s;
}

RingSpec RingSpec::matrix(RingSpec base, unsigned dim) {
    RingSpec s;
    s.kind = Kind::Matrix;
    s.dim = dim;
    s.sub.push_back(std::move(base));
    return s;
}

RingSpec RingSpec::quotient_by_nil(RingSpec base) {
    RingSpec s;
    s.kind = Kind::Quotient;
    s.sub.push_back(std::move(base));
    return s;
}

bool RingSpec::operator==(const RingSpec& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Zn: return n == o.n;
        case Kind::GF: return p == o.p && k == o.k && poly == o.poly;
        case Kind::Product: return sub == o.sub;
        case Kind::Matrix: return dim == o.dim && sub == o.sub;
        case Kind::Quotient: return sub == o.sub;
    }
    return false;
}

bool RingSpec::operator<(const RingSpec& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    switch (kind) {
        case Kind::Zn: return n < o.n;
        case Kind::GF: return std::tie(p, k, poly) < std::tie(o.p, o.k, o.poly);
        case Kind::Product: return sub < o.sub;
        case Kind::Matrix: return std::tie(sub, dim) < std::tie(o.sub, o.dim);
        case Kind::Quotient: return sub < o.sub;
    }
    return false;
}

std::string RingSpec::str() const {
    switch (kind) {
        case Kind::Zn: return "Z" + std::to_string(n);
        case Kind::GF: {
            std::string s = "GF(" + std::to_string(p) + "," + std::to_string(k);
            if (!poly.empty()) {
                s += ";[";
                for (std::size_t i = 0; i < poly.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(poly[i]);
                }
                s += "]";
            }
            return s + ")";
        }
        case Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < sub.size(); ++i) {
                if (i) s += "x";
                s += sub[i].str();
            }
            return s;
        }
        case Kind::Matrix: return "M" + std::to_string(dim) + "(" + sub[0].str() + ")";
        case Kind::Quotient: return "Q(" + sub[0].str() + ")";
    }
    return {};
}

std::uint64_t RingSpec::order_bound() const {
    switch (kind) {
        case Kind::Zn: return n;
        case Kind::GF: {
            std::uint64_t r = 1;
            for (unsigned i = 0; i < k; ++i) r *= p;
            return r;
        }
        case Kind::Product: {
            std::uint64_t r = 1;
            for (const auto& f : sub) r *= f.order_bound();
            return r;
        }
        case Kind::Matrix: {
            std::uint64_t r = 1;
            for (unsigned i = 0; i < dim * dim; ++i) r *= sub[0].order_bound();
            return r;
        }
        case Kind::Quotient: return sub[0].order_bound();
    }
    return 0;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bad ring spec \"" + std::string(text) + "\": " + what +
                         " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (std::uint64_t{1} << 40)) fail("integer too large");
            ++pos;
        }
        return v;
    }

    RingSpec atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected ring");
        char c = text[pos];
        if (c == 'Z') {
            ++pos;
            return RingSpec::zn(integer());
        }
        if (c == 'G') {
            if (text.substr(pos, 2) != "GF") fail("expected GF");
            pos += 2;
            expect('(');
            std::uint64_t p = integer();
            expect(',');
            std::uint64_t k = integer();
            std::vector<std::uint32_t> poly;
            bool has_poly = false;
            if (eat(';')) {
                has_poly = true;
                expect('[');
                poly.push_back(static_cast<std::uint32_t>(integer()));
                while (eat(',')) poly.push_back(static_cast<std::uint32_t>(integer()));
                expect(']');
            }
            expect(')');
            if (k == 0 || k > 64) fail("GF degree out of range");
            return has_poly ? RingSpec::gf(p, static_cast<unsigned>(k), std::move(poly))
                            : RingSpec::gf(p, static_cast<unsigned>(k));
        }
        if (c == 'M') {
            ++pos;
            std::uint64_t d = integer();
            expect('(');
            RingSpec base = spec();
            expect(')');
            if (d == 0 || d > 16) fail("matrix dimension out of range");
            return RingSpec::matrix(std::move(base), static_cast<unsigned>(d));
        }
        if (c == 'Q') {
            ++pos;
            expect('(');
            RingSpec base = spec();
            expect(')');
            return RingSpec::quotient_by_nil(std::move(base));
        }
        fail("expected Z, GF, M or Q");
    }

    RingSpec spec() {
        std::vector<RingSpec> factors;
        factors.push_back(atom());
        while (peek() == 'x') {
            ++pos;
            factors.push_back(atom());
        }
        if (factors.size() == 1) return std::move(factors[0]);
        return RingSpec::product(std::move(factors));
    }

    RingSpec run() {
        RingSpec s = spec();
        skip_ws();
        if (pos != text.size()) fail("trailing characters");
        return s;
    }
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
    Parser p{text};
    return p.run();
}

std::vector<RingSpec> parse_ring_spec_list(std::string_view csv) {
    std::vector<RingSpec> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        // Commas inside GF(...) belong to the spec, not the list: resynchronize by
        // trying progressively longer slices.
        std::string_view piece;
        std::size_t end = comma;
        while (true) {
            piece = csv.substr(start, (end == std::string_view::npos ? csv.size() : end) - start);
            bool balanced = std::count(piece.begin(), piece.end(), '(') ==
                                std::count(piece.begin(), piece.end(), ')') &&
                            std::count(piece.begin(), piece.end(), '[') ==
                                std::count(piece.begin(), piece.end(), ']');
            if (balanced || end == std::string_view::npos) break;
            end = csv.find(',', end + 1);
        }
        if (!piece.empty() || !out.empty() || end != std::string_view::npos)
            if (!piece.empty()) out.push_back(parse_ring_spec(piece));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw ParseError("empty ring spec list");
    return out;
}

}  // namespace nilgraph
