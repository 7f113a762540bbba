#pragma once

#include "codepth/error.hpp"
#include "codepth/powser.hpp"

#include <cstdint>
#include <string>

namespace codepth {

// Characteristic 0 means Q; otherwise an odd prime below 2^31.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    static FieldSpec rationals() { return {0}; }
    static FieldSpec prime(std::uint32_t p);

    bool is_rational() const { return characteristic == 0; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {}

    std::uint32_t characteristic() const { return p_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    value_type inv(value_type a) const;
    value_type from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type from(const Rational& q) const;
    Rational to_rational(value_type a) const { return Rational(static_cast<unsigned long>(a)); }
    void append_key(value_type a, std::string& out) const {
        out.append(reinterpret_cast<const char*>(&a), sizeof a);
    }

private:
    std::uint32_t p_;
};

class RationalField {
public:
    using value_type = Rational;

    std::uint32_t characteristic() const { return 0; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const { return 1 / a; }
    value_type from_int(long v) const { return Rational(v); }
    value_type from(const Rational& q) const { return q; }
    Rational to_rational(const value_type& a) const { return a; }
    void append_key(const value_type& a, std::string& out) const {
        out += a.get_str();
        out += ';';
    }
};

// Canonical representative of q in the given field (residue in [0,p) or q itself).
Rational normalize_scalar(const FieldSpec& f, const Rational& q);

template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.is_rational()) return fn(RationalField{});
    return fn(PrimeField{spec.characteristic});
}

} // namespace codepth
