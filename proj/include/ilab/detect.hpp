#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ilab/geom.hpp"
#include "ilab/poly.hpp"

namespace ilab {

enum class QuadricKind { plane, hyperboloid_one_sheet, cone, cylinder, other_quadric };

std::string_view to_string(QuadricKind kind);

/// Kinds that count as "plane or hyperboloid with one sheet" (cones and
/// cylinders included).
bool is_structured_kind(QuadricKind kind);

/// Inertia of a symmetric rational matrix: counts of positive, negative and
/// zero eigenvalues, read off the characteristic polynomial's coefficient signs.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int rank() const { return positive + negative; }
    /// (max, min) of the nonzero counts; invariant under scaling by -1.
    std::pair<int, int> unsigned_signature() const;
};

template <std::size_t N>
using SymMatrix = std::array<std::array<Rational, N>, N>;

/// Coefficients c_0..c_N of det(t I - M), c_N = 1.
template <std::size_t N>
std::array<Rational, N + 1> characteristic_polynomial(const SymMatrix<N>& m);

template <std::size_t N>
Inertia inertia(const SymMatrix<N>& m);

Quadric to_quadric(const MultiPoly& poly);
MultiPoly to_poly(const Quadric& q);

/// Throws ContractError unless the polynomial has degree 1 or 2.
QuadricKind classify_quadric(const Quadric& q);
QuadricKind classify_quadric(const MultiPoly& poly);

/// Canonical first kernel vector of the degree-2 containment system of the
/// seed, or nullopt when only the zero quadric contains it.
std::optional<MultiPoly> fit_quadric_to_seed(const std::vector<CurveRef>& seed);

struct StructuredFamily {
    MultiPoly surface;  // canonical, degree <= 2
    QuadricKind kind = QuadricKind::other_quadric;
    std::vector<std::size_t> members;  // global curve indices, ascending
};

struct DetectOptions {
    Rational A{3};
    std::uint64_t seed = 1;
    std::size_t seed_budget = 2000;       // random triples tried above the exhaustive limit
    std::size_t exhaustive_limit = 2000;  // enumerate all triples up to this many
};

/// Planes and one-sheet hyperboloids (cones, cylinders) containing >= A curves.
/// Each seed triple is fitted with a plane if one exists, otherwise with a
/// quadric; contained curves are absorbed. Families are deduplicated by
/// canonical surface and sorted by member count (descending), then surface.
/// The OpenMP version fits seeds concurrently; the serial one is the reference.
std::vector<StructuredFamily> find_structured_families(const Scene& scene, const DetectOptions& opt);
std::vector<StructuredFamily> find_structured_families_serial(const Scene& scene, const DetectOptions& opt);

/// Seed triples used by detection: all triples in lexicographic order when
/// C(N, 3) <= exhaustive_limit, otherwise seed_budget distinct random triples.
std::vector<std::array<std::size_t, 3>> seed_triples(std::size_t curve_count, const DetectOptions& opt);

}  // namespace ilab
