#pragma once

#include <cstdint>
#include <vector>

namespace kakeya {

// GF(p^e) with dense element indices 0..q-1.
//
// The index of an element encodes its coefficient vector over GF(p) in base
// p, constant term as the least significant digit. Index 0 is the additive
// identity and index 1 the multiplicative identity. Arithmetic is table
// driven; a Field is immutable after construction and safe to share across
// threads.
class Field {
public:
    static constexpr int kMaxOrder = 1024;

    // Chooses the modulus deterministically: the monic irreducible
    // polynomial of degree e over GF(p) whose base-p coefficient encoding is
    // smallest. Throws NonPrimeCharacteristic / OrderTooLarge.
    static Field make(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    // Modulus coefficients c0..ce (constant term first, ce == 1).
    // For e == 1 this is x - 0, i.e. {0, 1}.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;   // ZeroInverse on a == 0
    int pow(int a, long long n) const;

    bool is_square_order() const { return e_ % 2 == 0; }
    // For square q: the subfield order sqrt(q).
    int root_q() const;

private:
    Field() = default;

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<uint16_t> add_, mul_;
    std::vector<uint16_t> neg_, inv_;
};

} // namespace kakeya
