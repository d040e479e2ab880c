#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kakeya/gf.hpp"

namespace kakeya {

// Affine plane of order q as a pure incidence structure: q^2 points,
// q^2+q lines of q points each, and q+1 parallel classes of q mutually
// disjoint lines. Lines are stored both as sorted point lists and as point
// bitsets (64 points per machine word); the enumeration inner loop works on
// the bitsets and the per-class line tables.
//
// Immutable after construction; shared read-only across workers.
class AffinePlane {
public:
    // Pinnable class/line pairs for translation symmetry reduction. Present
    // only on planes built by desarguesian_affine, where the translation
    // group is known to act transitively on the choices of both classes.
    struct TranslationPins {
        int class_a;
        int32_t line_a;
        int class_b;
        int32_t line_b;
    };

    // lines: point lists (will be sorted); classes: q+1 groups of q line
    // indices. Validates sizes and the class partition structure.
    static AffinePlane build(int q, std::vector<std::vector<int32_t>> lines,
                             std::vector<std::vector<int32_t>> classes,
                             std::optional<TranslationPins> pins = std::nullopt);

    int q() const { return q_; }
    int num_points() const { return q_ * q_; }
    int num_lines() const { return q_ * q_ + q_; }
    int num_classes() const { return q_ + 1; }
    int words_per_line() const { return words_per_line_; }

    std::span<const int32_t> line(int l) const {
        return {line_points_.data() + static_cast<size_t>(l) * q_, static_cast<size_t>(q_)};
    }
    std::span<const uint64_t> line_bits(int l) const {
        return {line_bits_.data() + static_cast<size_t>(l) * words_per_line_,
                static_cast<size_t>(words_per_line_)};
    }
    // Lines through a point, indexed by parallel class.
    std::span<const int32_t> lines_through(int p) const {
        return {point_lines_.data() + static_cast<size_t>(p) * num_classes(),
                static_cast<size_t>(num_classes())};
    }
    int class_of(int l) const { return class_of_[l]; }
    // Line indices of one class, ascending.
    std::span<const int32_t> class_lines(int c) const {
        return {class_lines_.data() + static_cast<size_t>(c) * q_, static_cast<size_t>(q_)};
    }
    bool point_on_line(int p, int l) const {
        return (line_bits(l)[p >> 6] >> (p & 63)) & 1;
    }

    const std::optional<TranslationPins>& translation_pins() const { return pins_; }

private:
    AffinePlane() = default;

    int q_ = 0;
    int words_per_line_ = 0;
    std::vector<int32_t> line_points_;   // num_lines x q, sorted per line
    std::vector<uint64_t> line_bits_;    // num_lines x words_per_line
    std::vector<int32_t> class_lines_;   // num_classes x q, ascending
    std::vector<int32_t> class_of_;      // per line
    std::vector<int32_t> point_lines_;   // num_points x num_classes
    std::optional<TranslationPins> pins_;
};

// AG(2,q) over the given field. Point (x,y) has index x*q + y. Line
// {y = m*x + c} has index m*q + c and class m; the vertical {x = c} has
// index q^2 + c and class q.
AffinePlane desarguesian_affine(const Field& f);

// PG(2,q): points and lines share one indexing of normalized homogeneous
// triples (first nonzero coordinate 1); point p lies on line l iff the dot
// product of their triples vanishes. Triples of shape (1,a,b) come first
// (index a*q+b), then (0,1,a) (index q^2+a), then (0,0,1) (index q^2+q).
struct ProjectivePlane {
    int q = 0;
    std::vector<std::array<int32_t, 3>> coords;
    std::vector<std::vector<int32_t>> line_points;  // sorted
    std::vector<std::vector<int32_t>> point_lines;  // sorted

    int num_points() const { return static_cast<int>(coords.size()); }
};

ProjectivePlane desarguesian_projective(const Field& f);

// Affine plane obtained by removing one line (and its points) from a
// projective plane. Classes are indexed by the removed line's points in
// ascending projective order; mapping tables back to projective indices are
// kept for subplane-based constructions.
struct AffineFromProjective {
    AffinePlane plane;
    int removed_line = -1;
    std::vector<int32_t> point_to_proj;      // affine point -> projective point
    std::vector<int32_t> proj_to_point;      // projective point -> affine point or -1
    std::vector<int32_t> line_to_proj;       // affine line -> projective line
    std::vector<int32_t> proj_to_line;       // projective line -> affine line or -1
    std::vector<int32_t> class_to_infpoint;  // class -> point of the removed line
};

AffineFromProjective affine_from_projective(const ProjectivePlane& pp, int line_at_infinity);

struct ValidationCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    std::string first_failure() const;
};

// Checks the 2-design property (every point pair on exactly one line), line
// sizes, and that every class partitions the point set.
ValidationReport verify_affine_axioms(const AffinePlane& pl);

// Text format: first line "q <order>", then one line per plane line:
// "L <class-index> <p0> ... <p(q-1)>". Class index -1 on every line means
// "infer classes" (greedy partition into disjoint families). Axioms are
// checked on load; failures raise AxiomViolation, malformed input ParseError.
AffinePlane load_plane(std::istream& in);
void dump_plane(const AffinePlane& pl, std::ostream& out);

// Baer subplane of PG(2,q), q square: the points fixed coordinatewise by
// a -> a^sqrt(q), i.e. with all normalized coordinates in the subfield.
struct BaerSubplane {
    int root_q = 0;
    std::vector<int32_t> points;          // sorted projective point indices
    std::vector<int32_t> meet_count;      // per line: 1 or root_q+1
    std::vector<int32_t> extended_lines;  // lines meeting in root_q+1 points
};

BaerSubplane baer_sublines(const Field& f, const ProjectivePlane& pp);

// Canonical incidence certificate: the lexicographically smallest sorted
// line-fingerprint list over all point relabelings induced by an ordered
// pair of classes and arbitrary line orderings within them. Equal
// certificates <=> isomorphic planes; cost grows as (q!)^2, so this is
// guarded to q <= 5.
std::vector<int32_t> canonical_certificate(const AffinePlane& pl);

} // namespace kakeya
