#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kakeya/plane.hpp"

namespace kakeya {

// One chosen line per parallel class; chosen[c] belongs to class c.
struct LineSelection {
    const AffinePlane* plane = nullptr;
    std::vector<int32_t> chosen;
};

// Validates class membership (SelectionClassMismatch on violation).
LineSelection make_selection(const AffinePlane& pl, std::vector<int32_t> chosen);

// Covered points of a selection plus the per-point count of chosen lines.
struct KakeyaSet {
    const AffinePlane* plane = nullptr;
    LineSelection selection;
    std::vector<uint64_t> covered;    // point bitset
    std::vector<uint16_t> incidence;  // chosen lines through each point
    int size = 0;                     // |covered|
};

KakeyaSet cover(const LineSelection& sel);

// x[i] = number of points on exactly i chosen lines, i = 0..q+1.
using KnotSpectrum = std::vector<int64_t>;

KnotSpectrum knot_spectrum(const KakeyaSet& ks);

// The three double counts: sum x_i = q^2, sum i*x_i = q^2+q,
// sum i(i-1)*x_i = q^2+q.
bool verify_counting_identities(const KnotSpectrum& x, int q);

struct MaxKnot {
    int j;  // largest i with x_i > 0
    int k;  // q+1-j
};

MaxKnot max_knot(const KakeyaSet& ks);

// For a point P on q+1-k chosen lines: the k chosen lines missing P and the
// k unchosen lines through P. With require_max_knot set, P must realize the
// selection's largest knot (PointNotMaxKnot otherwise).
struct DerivedViews {
    std::vector<int32_t> l_prime;  // chosen, not through P
    std::vector<int32_t> m;        // through P, not chosen
};

DerivedViews derived_views(const KakeyaSet& ks, int point, bool require_max_knot = false);

// Selection file: one line of q+1 space-separated line indices, classes 0..q.
LineSelection load_selection(const AffinePlane& pl, std::istream& in);
void dump_selection(const LineSelection& sel, std::ostream& out);

// Maintains per-point counts and the knot histogram under single-line
// replacements at O(q) cost; the enumeration inner loop lives on this.
class IncrementalCover {
public:
    explicit IncrementalCover(const AffinePlane& pl);

    void set(const std::vector<int32_t>& chosen);

    // Replace the class-cls choice with new_line (same class, unchecked).
    void replace(int cls, int32_t new_line) {
        remove_line(chosen_[cls]);
        add_line(new_line);
        chosen_[cls] = new_line;
    }

    int size() const { return plane_->num_points() - static_cast<int>(hist_[0]); }
    int64_t x0() const { return hist_[0]; }
    int max_knot() const {
        for (int i = plane_->num_classes(); i > 0; --i)
            if (hist_[i] > 0) return i;
        return 0;
    }
    const std::vector<int64_t>& histogram() const { return hist_; }
    const std::vector<int32_t>& chosen() const { return chosen_; }

private:
    void add_line(int32_t l) {
        for (int32_t p : plane_->line(l)) ++hist_[++counts_[p]], --hist_[counts_[p] - 1];
    }
    void remove_line(int32_t l) {
        for (int32_t p : plane_->line(l)) ++hist_[--counts_[p]], --hist_[counts_[p] + 1];
    }

    const AffinePlane* plane_;
    std::vector<uint16_t> counts_;
    std::vector<int64_t> hist_;
    std::vector<int32_t> chosen_;
};

} // namespace kakeya
