#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sgclass/lattice.hpp"

namespace sgclass {

enum class ValidationKind {
    NotSimplicial,
    ExtremalRaysNotIndependent,
    NotMinimal,
    NotSmallestOnRay,
    ZeroGenerator,
    DimensionMismatch,
    Overflow,
};

const char* to_string(ValidationKind kind);

struct ValidationError {
    ValidationKind kind;
    std::string detail;     // offending generator, counts, ...
    std::string str() const { return std::string(to_string(kind)) + ": " + detail; }
};

/// Success-or-ValidationError return. Construction failures are an expected
/// outcome in sweeps, so they stay off the exception path.
template <class T>
class Result {
public:
    Result(T value) : v_(std::move(value)) {}                // NOLINT
    Result(ValidationError err) : v_(std::move(err)) {}      // NOLINT

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }
    const T& value() const { return std::get<T>(v_); }
    T& value() { return std::get<T>(v_); }
    const ValidationError& error() const { return std::get<ValidationError>(v_); }

private:
    std::variant<T, ValidationError> v_;
};

/// Exact solver for the square system spanned by the extremal generators.
/// Stores the adjugate and determinant so that a solve is a handful of
/// integer multiplications; x = adjugate * z / det.
class ExtremalSolver {
public:
    ExtremalSolver() = default;
    /// columns must be linearly independent; callers validate first.
    static std::optional<ExtremalSolver> from_columns(const std::vector<LatticeVector>& columns);

    std::int64_t det() const { return det_; }

    RationalVector solve(const LatticeVector& z) const;

    /// Coordinates of z over the extremal basis when they are all integers.
    std::optional<std::vector<std::int64_t>> solve_integral(const LatticeVector& z) const;

    /// Residue of z modulo the lattice spanned by the extremal generators,
    /// encoded so that equal residues mean the difference is in that lattice.
    std::vector<std::int64_t> lattice_residue(const LatticeVector& z) const;

private:
    std::size_t d_ = 0;
    std::int64_t det_ = 0;
    std::vector<std::int64_t> adj_; // row-major d x d, adj * A = det * I
};

/// A simplicial affine semigroup, validated and normalized: the extremal
/// generators come first, both blocks are sorted lexicographically, and the
/// stored solver matches the extremal block.
class AffineSemigroup {
public:
    std::size_t dim() const { return d_; }
    std::size_t codim() const { return others_.size(); }
    std::size_t embedding_dim() const { return d_ + others_.size(); }

    const std::vector<LatticeVector>& extremal() const { return extremal_; }
    const std::vector<LatticeVector>& others() const { return others_; }
    const std::vector<LatticeVector>& generators() const { return all_; }

    const ExtremalSolver& solver() const { return solver_; }

    LatticeVector extremal_sum() const;

    friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
        return a.all_ == b.all_;
    }

private:
    friend Result<AffineSemigroup> make_semigroup(std::vector<LatticeVector> extremal,
                                                  std::vector<LatticeVector> others);
    std::size_t d_ = 0;
    std::vector<LatticeVector> extremal_;
    std::vector<LatticeVector> others_;
    std::vector<LatticeVector> all_;
    ExtremalSolver solver_;
};

/// Validates an explicit extremal/non-extremal split and assembles the
/// normalized semigroup. build_semigroup is the usual entry point; this one
/// exists for callers that already know the split.
Result<AffineSemigroup> make_semigroup(std::vector<LatticeVector> extremal,
                                       std::vector<LatticeVector> others);

/// Detects the extremal rays of the cone spanned by the given generators and
/// validates every structural requirement: generators nonzero in N^d, exactly
/// d extreme rays with independent spanning generators, every generator inside
/// their cone, each extremal generator smallest on its ray, and minimality of
/// the generating set.
Result<AffineSemigroup> build_semigroup(std::span<const LatticeVector> raw_generators);

/// Unique rational x with sum x_i a_i = z over the extremal generators.
RationalVector solve_extremal_coordinates(const AffineSemigroup& s, const LatticeVector& z);

/// z lies in the set of nonnegative integer combinations of the extremal rays.
bool in_free_extremal_span(const AffineSemigroup& s, const LatticeVector& z);

/// z lies in the group generated by the extremal rays (signs unrestricted).
bool in_extremal_group(const AffineSemigroup& s, const LatticeVector& z);

/// Exact test for z in the rational cone spanned by the given vectors,
/// decided by enumerating linearly independent subsets of at most dim(z)
/// vectors (Caratheodory).
bool in_rational_cone(const LatticeVector& z, std::span<const LatticeVector> rays);

/// Rank over Q of the given vectors.
std::size_t rational_rank(std::span<const LatticeVector> vectors);

} // namespace sgclass
