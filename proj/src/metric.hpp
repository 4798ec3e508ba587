#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ivfg {

// Rational extended with a single point at infinity, for unreachable pairs.
class ExtDist {
public:
    ExtDist() : finite_(true), value_(0) {}
    ExtDist(Rational value) : finite_(true), value_(std::move(value)) {}
    static ExtDist infinity() {
        ExtDist d;
        d.finite_ = false;
        return d;
    }

    bool is_finite() const { return finite_; }
    const Rational& value() const; // throws ArgumentError when infinite

    friend ExtDist operator+(const ExtDist& a, const ExtDist& b) {
        if (!a.finite_ || !b.finite_)
            return infinity();
        return ExtDist(a.value_ + b.value_);
    }
    friend bool operator==(const ExtDist& a, const ExtDist& b) {
        if (a.finite_ != b.finite_)
            return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtDist& a, const ExtDist& b) { return !(a == b); }
    friend bool operator<(const ExtDist& a, const ExtDist& b) {
        if (!a.finite_)
            return false;
        if (!b.finite_)
            return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtDist& a, const ExtDist& b) { return a < b || a == b; }
    friend bool operator>(const ExtDist& a, const ExtDist& b) { return b < a; }
    friend bool operator>=(const ExtDist& a, const ExtDist& b) { return b <= a; }

private:
    bool finite_;
    Rational value_;
};

std::string to_string(const ExtDist& d); // "inf" when infinite
std::ostream& operator<<(std::ostream& os, const ExtDist& d);

// Path distance between two vertices: each component is minimised over paths
// independently, lower over sums of 1/lo(edge), upper over sums of 1/hi(edge).
struct DistancePair {
    ExtDist lower;
    ExtDist upper;

    friend bool operator==(const DistancePair&, const DistancePair&) = default;
    friend bool operator<(const DistancePair& a, const DistancePair& b) {
        if (a.lower != b.lower)
            return a.lower < b.lower;
        return a.upper < b.upper;
    }
};

std::string to_string(const DistancePair& d);
std::ostream& operator<<(std::ostream& os, const DistancePair& d);

// Shortest reciprocal-membership distance, one Dijkstra run per component.
DistancePair distance(const Graph& g, const std::string& from, const std::string& to);

// All-pairs distances, indexed like Graph::vertex_ids().
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    const DistancePair& at(std::size_t i, std::size_t j) const;
    const DistancePair& at(const std::string& from, const std::string& to) const;
    std::size_t dimension() const { return ids_.size(); }
    const std::vector<std::string>& vertex_ids() const { return ids_; }

private:
    std::vector<std::string> ids_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<DistancePair>> cells_;
};

// Independent oracle: enumerates every simple path between the endpoints.
// Exponential, so it refuses graphs with more than ten vertices.
DistancePair brute_force_distance(const Graph& g, const std::string& from, const std::string& to);

// Sorted multiset of a vertex's distances to every vertex (itself included).
using DistanceProfile = std::vector<DistancePair>;

DistanceProfile distance_profile(const DistanceMatrix& m, std::size_t index);

} // namespace ivfg
