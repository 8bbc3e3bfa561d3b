#pragma once

#include "schurkit/decomposition.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace schurkit {

// Piecewise-linear path [0,1] -> h*_Q through (times[k], points[k]), with
// times[0] = 0 and points[0] = 0.  Paths built by the operators below are kept
// canonical: no breakpoint sits inside a straight segment, so two paths are
// equal as maps exactly when their breakpoint lists are equal.
struct Path {
    std::vector<Rational> times;
    std::vector<Weight> points;

    const Weight& endpoint() const { return points.back(); }
    // Position at time t (0 <= t <= 1).
    Weight at(const Rational& t) const;
    // Drops breakpoints interior to straight segments.
    void canonicalize();

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path& a, const Path& b) {
        return std::tie(a.times, a.points) <=> std::tie(b.times, b.points);
    }
};

// t -> t * lam.  Throws std::invalid_argument unless lam is dominant.
Path straight_path(const RootSystem& rs, const Weight& lam);

// Root operators for the simple root alpha_i (0-based); nullopt when the
// operator kills the path.
std::optional<Path> f_op(const RootSystem& rs, std::size_t i, const Path& p);
std::optional<Path> e_op(const RootSystem& rs, std::size_t i, const Path& p);

inline constexpr std::size_t kDefaultCrystalCap = 50000;

class CrystalTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

struct CrystalEdge {
    std::size_t from;
    std::size_t root;
    std::size_t to;
};

struct Crystal {
    RootSystem root_system;
    Weight highest;
    // elements[0] is the straight path; order is breadth-first with roots
    // tried in increasing index.
    std::vector<Path> elements;
    // f_root(elements[from]) = elements[to].
    std::vector<CrystalEdge> edges;

    std::size_t size() const noexcept { return elements.size(); }
    FormalCharacter endpoint_character() const;
};

Crystal generate_crystal(const RootSystem& rs, const Weight& lam, std::size_t cap = kDefaultCrystalCap);

using StringTuple = std::vector<int>;

// For each element, the exponents of a greedy e-string along word (0-based
// root indices): e_{word[0]} as often as possible, then e_{word[1]}, and so
// on.  Result is sorted and one tuple per element.  Throws std::logic_error
// if some string does not end at the straight path or two elements share a
// tuple.
std::vector<StringTuple> string_tuples(const Crystal& crystal, const std::vector<std::size_t>& word);

struct CensusEntry {
    Weight lambda;
    // -w0(lambda)
    Weight dual;
    std::size_t s_lambda;
    std::size_t s_dual_opp;
    std::int64_t weyl_dim;
    bool ok;
};

struct CensusReport {
    LieType type;
    int r;
    std::vector<std::size_t> word;
    std::vector<CensusEntry> entries;
    std::int64_t total;
    // sum over pi of dim L(lambda)^2
    std::int64_t expected;
    bool ok;
};

// |S_lambda| * |S^opp_{-w0 lambda}| against dim L(lambda)^2 for each lambda in pi.
CensusReport basis_census(const LieType& type, int r, std::size_t cap = kDefaultCrystalCap);

} // namespace schurkit
