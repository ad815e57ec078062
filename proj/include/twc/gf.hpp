#ifndef TWC_GF_HPP
#define TWC_GF_HPP

#include <cstdint>
#include <vector>

#include "twc/errors.hpp"

namespace twc {

/// Arithmetic tables for a small finite field F_q, q = p^e.
///
/// Elements are encoded as integers 0..q-1.  For e > 1 the code of an
/// element is its polynomial-basis coefficient vector read in base p
/// (c0 + c1*p + ...), reduced modulo the smallest monic irreducible
/// polynomial of degree e (smallest by its base-p coefficient code).
/// Immutable after construction.
class Field {
public:
    explicit Field(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const { return inv_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

private:
    int q_, p_, e_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Builds the field tables; throws NotAPrimePower unless q = p^e with p prime.
Field build_field(int q);

}  // namespace twc

#endif
