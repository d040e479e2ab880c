#include "kakeya/gf.hpp"

#include <algorithm>
#include <string>

#include "kakeya/error.hpp"

namespace kakeya {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b (b monic-izable, nonzero).
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    int db = degree(b);
    int lead_inv = 0;
    for (int x = 1; x < p; ++x)
        if (x * b[db] % p == 1) { lead_inv = x; break; }
    while (degree(a) >= db && !a.empty()) {
        int shift = degree(a) - db;
        int factor = a.back() * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            int idx = shift + i;
            a[idx] = ((a[idx] - factor * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_from_code(long long code, int p) {
    Poly out;
    while (code > 0) {
        out.push_back(static_cast<int>(code % p));
        code /= p;
    }
    return out;
}

// True if f (monic, degree e >= 1) has no monic divisor of degree 1..e/2.
// A root check would suffice for e <= 3; the generic test covers all e.
bool is_irreducible(const Poly& f, int p) {
    int e = degree(f);
    for (int d = 1; 2 * d <= e; ++d) {
        long long lo = 1;
        for (int i = 0; i < d; ++i) lo *= p;
        for (long long code = lo; code < 2 * lo; ++code) {
            Poly g = poly_from_code(code, p);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Field Field::make(int p, int e) {
    if (!is_prime(p))
        fail("NonPrimeCharacteristic", "characteristic " + std::to_string(p) + " is not prime");
    if (e < 1)
        fail("OrderTooLarge", "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder)
            fail("OrderTooLarge",
                 std::to_string(p) + "^" + std::to_string(e) + " exceeds the maximum order " +
                     std::to_string(kMaxOrder));
    }

    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = static_cast<int>(q);

    if (e == 1) {
        f.modulus_ = {0, 1};
    } else {
        // Smallest monic irreducible under the base-p coefficient encoding.
        long long pe = q;
        for (long long code = pe; code < 2 * pe; ++code) {
            Poly cand = poly_from_code(code, p);
            if (is_irreducible(cand, p)) {
                f.modulus_ = cand;
                break;
            }
        }
    }

    const int n = f.q_;
    auto to_vec = [&](int idx) {
        Poly v(e, 0);
        for (int i = 0; i < e; ++i) {
            v[i] = idx % p;
            idx /= p;
        }
        return v;
    };
    auto to_idx = [&](const Poly& v) {
        int idx = 0;
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) idx = idx * p + v[i];
        return idx;
    };

    f.add_.resize(static_cast<size_t>(n) * n);
    f.mul_.resize(static_cast<size_t>(n) * n);
    f.neg_.resize(n);
    f.inv_.assign(n, 0);

    for (int a = 0; a < n; ++a) {
        Poly va = to_vec(a);
        Poly nv(e);
        for (int i = 0; i < e; ++i) nv[i] = (p - va[i]) % p;
        f.neg_[a] = static_cast<uint16_t>(to_idx(nv));
        for (int b = 0; b < n; ++b) {
            Poly vb = to_vec(b);
            Poly sum(e);
            for (int i = 0; i < e; ++i) sum[i] = (va[i] + vb[i]) % p;
            f.add_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(to_idx(sum));

            Poly prod(2 * e - 1, 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p;
            Poly rem = e == 1 ? Poly{prod[0] % p} : poly_mod(prod, f.modulus_, p);
            trim(rem);
            rem.resize(e, 0);
            f.mul_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(to_idx(rem));
        }
    }

    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            if (f.mul_[static_cast<size_t>(a) * n + b] == 1) {
                f.inv_[a] = static_cast<uint16_t>(b);
                break;
            }

    return f;
}

int Field::inv(int a) const {
    if (a == 0) fail("ZeroInverse", "0 has no multiplicative inverse");
    return inv_[a];
}

int Field::pow(int a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    int result = 1;
    int base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

int Field::root_q() const {
    if (!is_square_order())
        fail("NotASquareOrder", "GF(" + std::to_string(q_) + ") has no subfield of index 2");
    int r = 1;
    for (int i = 0; i < e_ / 2; ++i) r *= p_;
    return r;
}

} // namespace kakeya
