#include "interval.hpp"

#include <ostream>

#include "errors.hpp"

namespace ivfg {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ < 0)
        throw ValidationError("interval lower bound " + format_rational(lo_) + " is negative");
    if (hi_ > 1)
        throw ValidationError("interval upper bound " + format_rational(hi_) + " exceeds 1");
    if (lo_ > hi_)
        throw ValidationError("interval lower bound " + format_rational(lo_) +
                              " exceeds upper bound " + format_rational(hi_));
}

Interval rmin(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval rmax(const Interval& a, const Interval& b) {
    return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval isum(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo() - a.lo() * b.lo(), a.hi() + b.hi() - a.hi() * b.hi());
}

Interval scale(const Rational& k, const Interval& d) {
    if (k < 0 || k > 1)
        throw ArgumentError("scale factor " + format_rational(k) + " is outside [0, 1]");
    return Interval(k * d.lo(), k * d.hi());
}

Ordering compare(const Interval& a, const Interval& b) {
    if (a == b)
        return Ordering::Equal;
    if (a.lo() <= b.lo() && a.hi() <= b.hi())
        return Ordering::Less;
    if (a.lo() >= b.lo() && a.hi() >= b.hi())
        return Ordering::Greater;
    return Ordering::Incomparable;
}

std::string to_string(const Interval& d) {
    return "[" + format_rational(d.lo()) + ", " + format_rational(d.hi()) + "]";
}

std::string to_string(Ordering o) {
    switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
    case Ordering::Incomparable: return "incomparable";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Interval& d) { return os << to_string(d); }
std::ostream& operator<<(std::ostream& os, Ordering o) { return os << to_string(o); }

} // namespace ivfg
