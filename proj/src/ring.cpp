#include "blanchfield/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace blanchfield {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

Ring promote(Ring a, Ring b) {
    if (a == Ring::Any) return b;
    if (b == Ring::Any) return a;
    if (a != b) fail("ring mismatch: " + ring_name(a) + " vs " + ring_name(b));
    return a;
}

bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::Any: return "any";
        case Ring::Integers: return "integers";
        case Ring::Rationals: return "rationals";
        case Ring::Laurent: return "laurent";
    }
    return "?";
}

void RingElement::trim() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

RingElement RingElement::integer(Int v) {
    RingElement e;
    e.ring_ = Ring::Integers;
    e.value_ = Rat(std::move(v));
    return e;
}

RingElement RingElement::rational(Rat v) {
    RingElement e;
    e.ring_ = Ring::Rationals;
    e.value_ = std::move(v);
    return e;
}

RingElement RingElement::laurent(std::map<int, Rat> coeffs) {
    RingElement e;
    e.ring_ = Ring::Laurent;
    e.coeffs_ = std::move(coeffs);
    e.trim();
    return e;
}

RingElement RingElement::laurent_term(int exp, Rat coeff) {
    return laurent({{exp, std::move(coeff)}});
}

RingElement RingElement::zero(Ring r) {
    switch (r) {
        case Ring::Integers: return integer(0);
        case Ring::Rationals: return rational(0);
        case Ring::Laurent: return laurent({});
        default: return RingElement();
    }
}

RingElement RingElement::one(Ring r) {
    switch (r) {
        case Ring::Integers: return integer(1);
        case Ring::Rationals: return rational(1);
        case Ring::Laurent: return laurent_term(0, 1);
        default: fail("one(): ring required");
    }
}

bool RingElement::is_zero() const {
    if (ring_ == Ring::Any) return true;
    if (ring_ == Ring::Laurent) return coeffs_.empty();
    return value_ == 0;
}

bool RingElement::is_one() const {
    if (ring_ == Ring::Laurent)
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
    return ring_ != Ring::Any && value_ == 1;
}

bool RingElement::is_unit() const {
    switch (ring_) {
        case Ring::Any: return false;
        case Ring::Integers: return value_ == 1 || value_ == -1;
        case Ring::Rationals: return value_ != 0;
        case Ring::Laurent: return coeffs_.size() == 1;
    }
    return false;
}

int RingElement::lo_exp() const {
    return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int RingElement::hi_exp() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

RingElement RingElement::operator+(const RingElement& o) const {
    Ring r = promote(ring_, o.ring_);
    if (r == Ring::Any) return RingElement();
    if (is_zero()) {
        RingElement out = o;
        return out;
    }
    if (o.is_zero()) return *this;
    if (r == Ring::Laurent) {
        std::map<int, Rat> c = coeffs_;
        for (const auto& [k, v] : o.coeffs_) c[k] += v;
        return laurent(std::move(c));
    }
    RingElement out = *this;
    out.ring_ = r;
    out.value_ = value_ + o.value_;
    return out;
}

RingElement RingElement::operator-() const {
    RingElement out = *this;
    out.value_ = -out.value_;
    for (auto& [k, v] : out.coeffs_) v = -v;
    return out;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    Ring r = promote(ring_, o.ring_);
    if (r == Ring::Any) return RingElement();
    if (is_zero() || o.is_zero()) return zero(r);
    if (r == Ring::Laurent) {
        std::map<int, Rat> c;
        for (const auto& [ka, va] : coeffs_)
            for (const auto& [kb, vb] : o.coeffs_) c[ka + kb] += va * vb;
        return laurent(std::move(c));
    }
    RingElement out;
    out.ring_ = r;
    out.value_ = value_ * o.value_;
    return out;
}

bool RingElement::operator==(const RingElement& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (ring_ != o.ring_) return false;
    if (ring_ == Ring::Laurent) return coeffs_ == o.coeffs_;
    return value_ == o.value_;
}

RingElement conj(const RingElement& a) {
    if (a.ring() != Ring::Laurent) return a;
    std::map<int, Rat> c;
    for (const auto& [k, v] : a.coeffs()) c[-k] = v;
    return RingElement::laurent(std::move(c));
}

Int RingElement::euclidean_norm() const {
    switch (ring_) {
        case Ring::Integers: return boost::multiprecision::abs(boost::multiprecision::numerator(value_));
        case Ring::Rationals: return value_ == 0 ? Int(0) : Int(1);
        case Ring::Laurent: return is_zero() ? Int(0) : Int(hi_exp() - lo_exp() + 1);
        default: return 0;
    }
}

RingElement RingElement::inverse() const {
    if (!is_unit()) fail("inverse of a non-unit");
    switch (ring_) {
        case Ring::Integers: return *this;
        case Ring::Rationals: return rational(Rat(1) / value_);
        case Ring::Laurent: {
            auto [k, c] = *coeffs_.begin();
            return laurent_term(-k, Rat(1) / c);
        }
        default: fail("inverse of untagged zero");
    }
}

std::pair<RingElement, RingElement> euclidean_divmod(const RingElement& a,
                                                     const RingElement& b) {
    Ring r = promote(a.ring(), b.ring());
    if (b.is_zero()) fail("euclidean_divmod: division by zero");
    switch (r) {
        case Ring::Integers: {
            Int n = boost::multiprecision::numerator(a.scalar());
            Int d = boost::multiprecision::numerator(b.scalar());
            Int q = n / d;
            Int rem = n - q * d;
            // keep |rem| < |d| with rem of the same sign as n (C++ semantics ok)
            return {RingElement::integer(q), RingElement::integer(rem)};
        }
        case Ring::Rationals:
            return {RingElement::rational(a.scalar() / b.scalar()), RingElement::rational(0)};
        case Ring::Laurent: {
            // divide as ordinary polynomials after shifting both to exponent 0
            if (a.is_zero()) return {RingElement::zero(r), RingElement::zero(r)};
            int sa = a.lo_exp(), sb = b.lo_exp();
            std::map<int, Rat> ra;
            for (const auto& [k, v] : a.coeffs()) ra[k - sa] = v;
            std::map<int, Rat> rb;
            for (const auto& [k, v] : b.coeffs()) rb[k - sb] = v;
            std::map<int, Rat> q;
            int db = rb.rbegin()->first;
            Rat lead = rb.rbegin()->second;
            while (!ra.empty() && ra.rbegin()->first >= db) {
                int k = ra.rbegin()->first - db;
                Rat c = ra.rbegin()->second / lead;
                q[k] += c;
                for (const auto& [kb, vb] : rb) {
                    ra[kb + k] -= c * vb;
                    if (ra[kb + k] == 0) ra.erase(kb + k);
                }
            }
            RingElement qq = RingElement::laurent(std::move(q)) *
                             RingElement::laurent_term(sa - sb, 1);
            RingElement rr = a - qq * b;
            return {qq, rr};
        }
        default: fail("euclidean_divmod: unsupported ring");
    }
}

RingElement gcd(const RingElement& a, const RingElement& b) {
    RingElement x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = euclidean_divmod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return canonical_unit(x) * x;
}

RingElement canonical_unit(const RingElement& a) {
    if (a.is_zero()) return RingElement::one(a.ring() == Ring::Any ? Ring::Integers : a.ring());
    switch (a.ring()) {
        case Ring::Integers:
            return RingElement::integer(a.scalar() < 0 ? -1 : 1);
        case Ring::Rationals:
            return RingElement::rational(Rat(1) / a.scalar());
        case Ring::Laurent: {
            // shift the low end to exponent 0 and make the top coefficient 1
            Rat lead = a.coeffs().rbegin()->second;
            return RingElement::laurent_term(-a.lo_exp(), Rat(1) / lead);
        }
        default: return RingElement::integer(1);
    }
}

std::string RingElement::to_string() const {
    switch (ring_) {
        case Ring::Any: return "0";
        case Ring::Integers: return boost::multiprecision::numerator(value_).str();
        case Ring::Rationals: {
            std::ostringstream os;
            os << value_;
            return os.str();
        }
        case Ring::Laurent: {
            if (coeffs_.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            // print high degree first
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
                Rat c = it->second;
                int k = it->first;
                if (first) {
                    if (c < 0) { os << "-"; c = -c; }
                } else {
                    os << (c < 0 ? " - " : " + ");
                    if (c < 0) c = -c;
                }
                if (k == 0) {
                    os << c;
                } else {
                    if (c != 1) os << c << "*";
                    os << "t";
                    if (k != 1) os << "^" << k;
                }
                first = false;
            }
            return os.str();
        }
    }
    return "?";
}

// --- parser for the textual syntax: "2*t^-1 + 1 - t^3", "3/2", "5" ---
namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& text) : s(text) {}
    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eof() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    Int integer() {
        skip();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == digits) fail("ring parse: expected integer in '" + s + "'");
        return Int(s.substr(start, i - start));
    }
    Rat rational() {
        Int n = integer();
        if (eat('/')) {
            Int d = integer();
            if (d == 0) fail("ring parse: zero denominator");
            return Rat(n, d);
        }
        return Rat(n);
    }
};

}  // namespace

RingElement RingElement::parse(const std::string& text, Ring expected) {
    Parser p(text);
    std::map<int, Rat> coeffs;
    Rat scalar = 0;
    bool saw_t = false;
    bool any_term = false;
    while (!p.eof()) {
        int sign = 1;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            sign = -1;
        } else if (any_term) {
            fail("ring parse: expected '+'/'-' in '" + text + "'");
        }
        any_term = true;
        Rat coeff = 1;
        bool have_coeff = false;
        char c = p.peek();
        if (std::isdigit((unsigned char)c)) {
            coeff = p.rational();
            have_coeff = true;
        }
        p.eat('*');
        int exp = 0;
        bool have_t = false;
        if (p.peek() == 't') {
            p.eat('t');
            have_t = true;
            saw_t = true;
            exp = 1;
            if (p.eat('^')) exp = (int)p.integer();
        }
        if (!have_coeff && !have_t) fail("ring parse: empty term in '" + text + "'");
        Rat value = coeff * sign;
        if (have_t)
            coeffs[exp] += value;
        else
            coeffs[0] += value, scalar += value;
    }
    if (expected == Ring::Laurent || (expected == Ring::Any && saw_t))
        return laurent(std::move(coeffs));
    Rat total = 0;
    for (auto& [k, v] : coeffs) {
        if (k != 0) fail("ring parse: 't' not allowed in " + ring_name(expected));
        total += v;
    }
    if (expected == Ring::Integers) {
        if (!is_integer(total)) fail("ring parse: non-integer over Z: '" + text + "'");
        return integer(boost::multiprecision::numerator(total));
    }
    return rational(total);
}

// ----------------------------------------------------------------------

Fraction::Fraction(RingElement num, RingElement den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail("Fraction: zero denominator");
    promote(num_.ring(), den_.ring());
    if (num_.ring() == Ring::Any) num_ = RingElement::zero(den_.ring());
    if (den_.ring() == Ring::Any) den_ = RingElement::one(num_.ring());
    canonicalize();
}

Fraction Fraction::from_ring(const RingElement& r) {
    Ring rg = r.ring() == Ring::Any ? Ring::Integers : r.ring();
    return Fraction(r, RingElement::one(rg));
}

void Fraction::canonicalize() {
    if (num_.is_zero()) {
        den_ = RingElement::one(den_.ring());
        return;
    }
    RingElement g = gcd(num_, den_);
    if (!g.is_unit() || !g.is_one()) {
        num_ = euclidean_divmod(num_, g).first;
        den_ = euclidean_divmod(den_, g).first;
    }
    RingElement u = canonical_unit(den_);
    num_ = u * num_;
    den_ = u * den_;
}

bool Fraction::is_integral() const {
    return euclidean_divmod(num_, den_).second.is_zero();
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator-() const {
    Fraction f = *this;
    f.num_ = -f.num_;
    return f;
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

bool Fraction::operator==(const Fraction& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

Fraction conj(const Fraction& f) {
    return Fraction(conj(f.num()), conj(f.den()));
}

std::string Fraction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const RingElement& e) {
        std::string s = e.to_string();
        if (s.find_first_of("+- ") != std::string::npos && !(s.size() && s[0] == '-' &&
            s.find_first_of("+- ", 1) == std::string::npos))
            return "(" + s + ")";
        return s;
    };
    return wrap(num_) + " / " + wrap(den_);
}

// ----------------------------------------------------------------------

TorsionValue::TorsionValue(const Fraction& f) {
    if (f.ring() == Ring::Laurent) {
        // Reduce the numerator into the exponent window [0, deg den).  The
        // canonical denominator is a monic polynomial with nonzero constant
        // term, so both the top and the bottom of the window can be cleared.
        const RingElement& d = f.den();
        int degd = d.hi_exp();          // lo_exp == 0 after canonicalization
        Rat ctail = d.coeffs().begin()->second;
        RingElement n = f.num();
        while (!n.is_zero() && (n.hi_exp() >= degd || n.lo_exp() < 0)) {
            if (n.hi_exp() >= degd) {
                Rat c = n.coeffs().rbegin()->second;
                n = n - RingElement::laurent_term(n.hi_exp() - degd, c) * d;
            } else {
                Rat c = n.coeffs().begin()->second;
                n = n - RingElement::laurent_term(n.lo_exp(), c / ctail) * d;
            }
        }
        rep_ = Fraction(n, d);
        return;
    }
    auto [q, r] = euclidean_divmod(f.num(), f.den());
    rep_ = Fraction(r, f.den());
    // normalise negative integer representatives into [0, den)
    if (rep_.ring() == Ring::Integers && rep_.num().scalar() < 0)
        rep_ = Fraction(rep_.num() + rep_.den(), rep_.den());
}

TorsionValue mod_ring(const Fraction& f) { return TorsionValue(f); }

TorsionValue TorsionValue::operator+(const TorsionValue& o) const {
    return TorsionValue(rep_ + o.rep_);
}

TorsionValue TorsionValue::operator-(const TorsionValue& o) const {
    return TorsionValue(rep_ - o.rep_);
}

TorsionValue TorsionValue::operator-() const { return TorsionValue(-rep_); }

TorsionValue operator*(const RingElement& r, const TorsionValue& v) {
    return TorsionValue(Fraction::from_ring(r) * v.rep());
}

TorsionValue operator*(const TorsionValue& v, const RingElement& r) {
    return TorsionValue(v.rep() * Fraction::from_ring(r));
}

bool TorsionValue::operator==(const TorsionValue& o) const {
    return (rep_ - o.rep_).is_integral();
}

TorsionValue conj(const TorsionValue& v) { return TorsionValue(conj(v.rep())); }

std::string TorsionValue::to_string() const { return rep_.to_string(); }

}  // namespace blanchfield
