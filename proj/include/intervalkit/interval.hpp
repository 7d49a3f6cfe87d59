#pragma once

#include <intervalkit/errors.hpp>

#include <string>

namespace intervalkit {

/// Tolerance below which |b_c| or |ln b_w| counts as zero for inv/div.
inline constexpr double division_epsilon = 1e-12;

/// Endpoint pair [lo, hi] with lo <= hi. Degenerate pairs are allowed; this is
/// the result type of the classical (Moore / Hukuhara / gH) operations.
struct ExtendedInterval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr ExtendedInterval() = default;
    ExtendedInterval(double lo_, double hi_);

    static ExtendedInterval point(double x) { return {x, x}; }

    [[nodiscard]] double center() const noexcept { return 0.5 * (lo + hi); }
    [[nodiscard]] double radius() const noexcept { return 0.5 * (hi - lo); }
    [[nodiscard]] bool degenerate() const noexcept { return lo == hi; }
    [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }

    friend bool operator==(const ExtendedInterval&, const ExtendedInterval&) = default;
};

/// A non-degenerate interval number held as (center, log-radius).
///
/// In these coordinates every operation of the new arithmetic is plain
/// componentwise real arithmetic: addition adds, scalar multiplication scales,
/// multiplication multiplies and division divides. Endpoints are only
/// materialised on request.
class Interval {
public:
    /// The zero element.
    constexpr Interval() noexcept = default;

    /// [l, r] with l < r; throws DegenerateInterval otherwise.
    static Interval from_endpoints(double l, double r);
    /// <c; w> with w > 0.
    static Interval from_center_radius(double c, double w);
    /// Raw coordinates (center, ln radius). Both must be finite.
    static Interval from_coords(double center, double log_radius);

    /// <0; 1> = [-1, 1]
    static Interval zero() noexcept { return Interval(0.0, 0.0); }
    /// <1; e> = [1 - e, 1 + e]
    static Interval one() noexcept { return Interval(1.0, 1.0); }

    [[nodiscard]] double center() const noexcept { return center_; }
    [[nodiscard]] double log_radius() const noexcept { return log_radius_; }
    [[nodiscard]] double radius() const;
    [[nodiscard]] double lo() const;
    [[nodiscard]] double hi() const;
    [[nodiscard]] ExtendedInterval endpoints() const;

    // Bitwise equality of the coordinates.
    friend bool operator==(const Interval&, const Interval&) = default;

    // Allows ExtendedInterval parameters to accept an Interval directly.
    operator ExtendedInterval() const { return endpoints(); } // NOLINT(google-explicit-constructor)

private:
    constexpr Interval(double c, double rho) noexcept : center_(c), log_radius_(rho) {}

    double center_ = 0.0;
    double log_radius_ = 0.0;
};

enum class OrderRelation { Equal, Less, Greater, Incomparable };

std::string to_string(OrderRelation rel);

// ---- New arithmetic -------------------------------------------------------

Interval from_endpoints(double l, double r);
/// Embedding of a real: lambda -> lambda * 1 = <lambda; e^lambda>.
Interval from_real(double lambda);

Interval add(const Interval& a, const Interval& b);
Interval neg(const Interval& a) noexcept;
Interval sub(const Interval& a, const Interval& b);
Interval scalar_mul(double k, const Interval& a);
Interval mul(const Interval& a, const Interval& b);
/// Reciprocal <1/a_c; e^{1/ln a_w}>. Throws NotInvertible when a_c or ln a_w is
/// within division_epsilon of zero.
Interval inv(const Interval& a);
/// Throws DivisionUndefined when b_c or ln b_w is within division_epsilon of zero.
Interval div(const Interval& a, const Interval& b);
Interval pow_n(const Interval& a, unsigned n);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator*(double k, const Interval& a) { return scalar_mul(k, a); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }

// ---- Orderings ------------------------------------------------------------

/// (a_c - b_c) + (1 - sign|a_c - b_c|)(a_w / b_w - 1); <= 0 iff a <= b.
double phi(const Interval& a, const Interval& b);

/// Lexicographic order on (center, radius). Never Incomparable.
OrderRelation cmp_total(const Interval& a, const Interval& b);
/// Inclusion: Less means a is a proper subset of b.
OrderRelation cmp_subset(const Interval& a, const Interval& b);
/// Componentwise order on (center, radius).
OrderRelation cmp_preceq(const Interval& a, const Interval& b);

// ---- Classical operations ----------------------------------------------------

ExtendedInterval moore_add(const ExtendedInterval& a, const ExtendedInterval& b);
ExtendedInterval moore_sub(const ExtendedInterval& a, const ExtendedInterval& b);
/// Hukuhara difference; throws HDiffNotExists when a is narrower than b.
ExtendedInterval h_sub(const ExtendedInterval& a, const ExtendedInterval& b);
ExtendedInterval gh_sub(const ExtendedInterval& a, const ExtendedInterval& b);
ExtendedInterval moore_mul(const ExtendedInterval& a, const ExtendedInterval& b);
/// Throws MooreDivByZeroSpanning when 0 lies in b.
ExtendedInterval moore_div(const ExtendedInterval& a, const ExtendedInterval& b);
ExtendedInterval moore_scalar(double k, const ExtendedInterval& a);
ExtendedInterval moore_neg(const ExtendedInterval& a);

/// Inclusion between extended intervals with an absolute tolerance on the
/// endpoints. Less means a lies inside b.
OrderRelation cmp_subset(const ExtendedInterval& a, const ExtendedInterval& b, double tol = 0.0);

// ---- New vs classical ---------------------------------------------------------

enum class ComparedOp { Add, Sub, GhSub };

/// Tolerance used by classify_vs_classical when deciding Equal.
inline constexpr double classify_tolerance = 1e-9;

/// Computes the new-arithmetic result and the classical one and returns their
/// inclusion relation (Less: new result inside the classical one).
/// Sub compares a - b with the Moore difference, GhSub with the gH difference.
OrderRelation classify_vs_classical(ComparedOp op, const Interval& a, const Interval& b);
/// Same for k a versus k (.) a.
OrderRelation classify_vs_classical(double k, const Interval& a);

/// The relation predicted from radii alone by the trichotomy conditions,
/// without forming either result. Boundary cases report Equal.
OrderRelation predict_vs_classical(ComparedOp op, const Interval& a, const Interval& b);
OrderRelation predict_vs_classical(double k, const Interval& a);

// ---- Text ----------------------------------------------------------------------

/// Shortest round-trippable decimal.
std::string format_real(double x);
/// Fixed 17 significant digits (CSV columns).
std::string format_real17(double x);
/// "[l,r]"
std::string render_endpoints(const ExtendedInterval& a);
std::string render_endpoints(const Interval& a);
/// "<c;w>"
std::string render_center_radius(const Interval& a);

} // namespace intervalkit
