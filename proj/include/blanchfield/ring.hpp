#pragma once

// Rings with involution: Z, Q and the Laurent polynomial ring Q[t,t^-1].
// All coefficients are exact; there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace blanchfield {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Ring {
    Any,        // tag of a default-constructed zero; promotes on contact
    Integers,
    Rationals,
    Laurent,    // Q[t, t^-1]
};

std::string ring_name(Ring r);

class RingElement {
  public:
    RingElement() : ring_(Ring::Any) {}

    static RingElement integer(Int v);
    static RingElement rational(Rat v);
    // Laurent element from exponent -> coefficient (zeros dropped).
    static RingElement laurent(std::map<int, Rat> coeffs);
    static RingElement laurent_term(int exp, Rat coeff = 1);
    static RingElement zero(Ring r);
    static RingElement one(Ring r);

    Ring ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;
    // Units: +-1 over Z, nonzero over Q, q*t^k over Q[t,t^-1].
    bool is_unit() const;

    const Rat& scalar() const { return value_; }        // Integers/Rationals
    const std::map<int, Rat>& coeffs() const { return coeffs_; }  // Laurent

    int lo_exp() const;   // Laurent only; 0 for zero
    int hi_exp() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    friend RingElement conj(const RingElement& a);   // t^k -> t^-k, id on Z, Q

    // Euclidean data.  norm: |n| over Z, degree span over Laurent (after
    // normalising away the t-power), 0/1 over Q.
    Int euclidean_norm() const;
    RingElement inverse() const;                     // units only

    std::string to_string() const;
    static RingElement parse(const std::string& text, Ring expected);

  private:
    Ring ring_;
    Rat value_;
    std::map<int, Rat> coeffs_;
    void trim();
    friend struct RingOps;
};

RingElement conj(const RingElement& a);

// a = q*b + r with norm(r) < norm(b) or r = 0.  Throws on b = 0 and on
// rings without a shipped division algorithm.
std::pair<RingElement, RingElement> euclidean_divmod(const RingElement& a,
                                                     const RingElement& b);

RingElement gcd(const RingElement& a, const RingElement& b);

// The unit u such that u*a is in canonical form: positive over Z, 1-leading
// over Q, and for Laurent a monic polynomial with nonzero constant term.
RingElement canonical_unit(const RingElement& a);

// ----------------------------------------------------------------------
// Fractions n/d over the Euclidean rings, kept in canonical reduced form.
class Fraction {
  public:
    Fraction() = default;
    Fraction(RingElement num, RingElement den);
    static Fraction from_ring(const RingElement& r);
    static Fraction zero(Ring r) { return from_ring(RingElement::zero(r)); }

    const RingElement& num() const { return num_; }
    const RingElement& den() const { return den_; }
    Ring ring() const { return num_.ring(); }
    bool is_zero() const { return num_.is_zero(); }
    // true iff the fraction lies in R itself
    bool is_integral() const;

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator-() const;
    bool operator==(const Fraction& o) const;
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    friend Fraction conj(const Fraction& f);

    std::string to_string() const;

  private:
    RingElement num_{RingElement::integer(0)};
    RingElement den_{RingElement::integer(1)};
    void canonicalize();
};

Fraction conj(const Fraction& f);

// ----------------------------------------------------------------------
// Values in S^-1 R / R with a canonical representative: the numerator is
// reduced modulo the denominator.  Value 0 iff the fraction lies in R.
class TorsionValue {
  public:
    TorsionValue() = default;
    explicit TorsionValue(const Fraction& f);
    static TorsionValue zero(Ring r) { return TorsionValue(Fraction::zero(r)); }

    const Fraction& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    TorsionValue operator+(const TorsionValue& o) const;
    TorsionValue operator-(const TorsionValue& o) const;
    TorsionValue operator-() const;
    // left module action of R
    friend TorsionValue operator*(const RingElement& r, const TorsionValue& v);
    friend TorsionValue operator*(const TorsionValue& v, const RingElement& r);
    bool operator==(const TorsionValue& o) const;
    bool operator!=(const TorsionValue& o) const { return !(*this == o); }

    friend TorsionValue conj(const TorsionValue& v);

    std::string to_string() const;

  private:
    Fraction rep_;
};

TorsionValue mod_ring(const Fraction& f);
TorsionValue conj(const TorsionValue& v);

}  // namespace blanchfield
