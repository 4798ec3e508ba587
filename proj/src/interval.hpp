#pragma once

#include <iosfwd>
#include <string>

#include "rational.hpp"

namespace ivfg {

// Verdict of the componentwise partial order on intervals.
enum class Ordering { Less, Equal, Greater, Incomparable };

// A membership degree [lo, hi] with 0 <= lo <= hi <= 1, exact rationals.
// Immutable; the constructor rejects anything outside the lattice.
class Interval {
public:
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

private:
    Rational lo_;
    Rational hi_;
};

// Componentwise minimum; the lattice meet.
Interval rmin(const Interval& a, const Interval& b);

// Componentwise maximum; the lattice join.
Interval rmax(const Interval& a, const Interval& b);

// Probabilistic sum per component: x + y - x*y. Closed over [0,1] intervals.
Interval isum(const Interval& a, const Interval& b);

// Scales both bounds by k; k must lie in [0,1].
Interval scale(const Rational& k, const Interval& d);

Ordering compare(const Interval& a, const Interval& b);

std::string to_string(const Interval& d);
std::string to_string(Ordering o);
std::ostream& operator<<(std::ostream& os, const Interval& d);
std::ostream& operator<<(std::ostream& os, Ordering o);

} // namespace ivfg
