#include "sgclass/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sgclass/boxdp.hpp"

namespace sgclass {

const char* to_string(ValidationKind kind) {
    switch (kind) {
        case ValidationKind::NotSimplicial: return "NotSimplicial";
        case ValidationKind::ExtremalRaysNotIndependent: return "ExtremalRaysNotIndependent";
        case ValidationKind::NotMinimal: return "NotMinimal";
        case ValidationKind::NotSmallestOnRay: return "NotSmallestOnRay";
        case ValidationKind::ZeroGenerator: return "ZeroGenerator";
        case ValidationKind::DimensionMismatch: return "DimensionMismatch";
        case ValidationKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

namespace {

// Gaussian elimination over Q on an augmented system A x = b restricted to
// the chosen columns. Returns the unique solution when the columns are
// independent and the system is consistent.
std::optional<RationalVector> solve_columns(const std::vector<const LatticeVector*>& cols,
                                            const LatticeVector& b) {
    const std::size_t rows = b.dim();
    const std::size_t n = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (*cols[j])[i];
        m[i][n] = b[i];
    }
    std::vector<std::size_t> pivot_row(n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = row;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) return std::nullopt; // dependent columns
        std::swap(m[p], m[row]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (!m[i][n].is_zero()) return std::nullopt; // inconsistent
    RationalVector x(n);
    for (std::size_t col = 0; col < n; ++col)
        x[col] = m[pivot_row[col]][n] / m[pivot_row[col]][col];
    return x;
}

void independent_subsets(std::size_t n, std::size_t max_size,
                         std::vector<std::size_t>& current, std::size_t start,
                         const std::function<bool(const std::vector<std::size_t>&)>& visit,
                         bool& done) {
    if (done) return;
    if (!current.empty() && visit(current)) {
        done = true;
        return;
    }
    if (current.size() == max_size) return;
    for (std::size_t i = start; i < n && !done; ++i) {
        current.push_back(i);
        independent_subsets(n, max_size, current, i + 1, visit, done);
        current.pop_back();
    }
}

} // namespace

bool in_rational_cone(const LatticeVector& z, std::span<const LatticeVector> rays) {
    if (z.is_zero()) return true;
    std::vector<std::size_t> current;
    bool done = false;
    auto visit = [&](const std::vector<std::size_t>& subset) {
        std::vector<const LatticeVector*> cols;
        cols.reserve(subset.size());
        for (std::size_t i : subset) cols.push_back(&rays[i]);
        auto x = solve_columns(cols, z);
        return x && all_nonnegative(*x);
    };
    independent_subsets(rays.size(), z.dim(), current, 0, visit, done);
    return done;
}

std::size_t rational_rank(std::span<const LatticeVector> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t rows = vectors.size();
    const std::size_t cols = vectors[0].dim();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = vectors[i][j];
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<ExtremalSolver> ExtremalSolver::from_columns(const std::vector<LatticeVector>& columns) {
    const std::size_t d = columns.size();
    // Gauss-Jordan over Q on [A | I] yields A^{-1}; scaling by det gives the
    // integer adjugate used on the hot path.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = columns[j][i];
        m[i][d + i] = 1;
    }
    Rational det = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t p = col;
        while (p < d && m[p][col].is_zero()) ++p;
        if (p == d) return std::nullopt;
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (std::size_t j = 0; j < 2 * d; ++j) m[col][j] = m[col][j] * inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < 2 * d; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    if (!det.is_integer())
        throw InternalInvariantViolation("determinant of an integer matrix must be integral");
    ExtremalSolver s;
    s.d_ = d;
    s.det_ = det.num();
    s.adj_.resize(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Rational a = det * m[i][d + j];
            if (!a.is_integer())
                throw InternalInvariantViolation("adjugate of an integer matrix must be integral");
            s.adj_[i * d + j] = a.num();
        }
    }
    return s;
}

RationalVector ExtremalSolver::solve(const LatticeVector& z) const {
    RationalVector x(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < d_; ++j)
            acc += static_cast<__int128>(adj_[i * d_ + j]) * z[j];
        x[i] = Rational(checked_narrow(acc), det_);
    }
    return x;
}

std::optional<std::vector<std::int64_t>> ExtremalSolver::solve_integral(const LatticeVector& z) const {
    std::vector<std::int64_t> x(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < d_; ++j)
            acc += static_cast<__int128>(adj_[i * d_ + j]) * z[j];
        if (acc % det_ != 0) return std::nullopt;
        x[i] = checked_narrow(acc / det_);
    }
    return x;
}

std::vector<std::int64_t> ExtremalSolver::lattice_residue(const LatticeVector& z) const {
    const std::int64_t mod = det_ < 0 ? -det_ : det_;
    std::vector<std::int64_t> r(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < d_; ++j)
            acc += static_cast<__int128>(adj_[i * d_ + j]) * z[j];
        __int128 m = acc % mod;
        if (m < 0) m += mod;
        r[i] = static_cast<std::int64_t>(m);
    }
    return r;
}

LatticeVector AffineSemigroup::extremal_sum() const {
    LatticeVector s(d_);
    for (const auto& a : extremal_) s = s + a;
    return s;
}

namespace {

/// Is `target` a nonnegative integer combination of `gens`? Small reachability
/// walk over the box below target; generators outside the box never help.
bool representable(const LatticeVector& target, const std::vector<const LatticeVector*>& gens) {
    if (!target.is_nonnegative()) return false;
    std::vector<LatticeVector> usable;
    for (const LatticeVector* g : gens) usable.push_back(*g);
    return box_membership(usable, target, /*budget=*/1'000'000'000);
}

} // namespace

Result<AffineSemigroup> make_semigroup(std::vector<LatticeVector> extremal,
                                       std::vector<LatticeVector> others) {
    if (extremal.empty())
        return ValidationError{ValidationKind::DimensionMismatch, "no extremal generators"};
    const std::size_t d0 = extremal[0].dim();
    for (const auto& block : {extremal, others})
        for (const auto& g : block) {
            if (g.dim() != d0)
                return ValidationError{ValidationKind::DimensionMismatch, g.str()};
            if (g.is_zero()) return ValidationError{ValidationKind::ZeroGenerator, g.str()};
            if (!g.is_nonnegative())
                return ValidationError{ValidationKind::NotSimplicial,
                                       g.str() + " has a negative coordinate"};
        }
    if (extremal.size() != d0)
        return ValidationError{ValidationKind::NotSimplicial,
                               std::to_string(extremal.size()) + " extremal rays, dimension is " +
                                   std::to_string(d0)};

    std::sort(extremal.begin(), extremal.end());
    std::sort(others.begin(), others.end());

    {
        std::vector<LatticeVector> all = extremal;
        all.insert(all.end(), others.begin(), others.end());
        std::sort(all.begin(), all.end());
        auto dup = std::adjacent_find(all.begin(), all.end());
        if (dup != all.end())
            return ValidationError{ValidationKind::NotMinimal, dup->str() + " listed twice"};
    }

    auto solver = ExtremalSolver::from_columns(extremal);
    if (!solver)
        return ValidationError{ValidationKind::ExtremalRaysNotIndependent,
                               "extremal generators are linearly dependent"};

    // Simpliciality: every generator sits in the rational cone of the
    // extremal rays, i.e. has nonnegative rational coordinates over them.
    for (const auto& g : others) {
        RationalVector x = solver->solve(g);
        if (!all_nonnegative(x))
            return ValidationError{ValidationKind::NotSimplicial,
                                   g.str() + " is outside the extremal cone"};
    }

    // Each extremal generator is the smallest generator on its ray.
    for (std::size_t i = 0; i < extremal.size(); ++i) {
        const LatticeVector dir = extremal[i].primitive();
        const std::int64_t mult = extremal[i].content();
        for (const auto& g : others)
            if (g.primitive() == dir && g.content() <= mult)
                return ValidationError{ValidationKind::NotSmallestOnRay, g.str()};
        for (std::size_t j = 0; j < extremal.size(); ++j)
            if (j != i && extremal[j].primitive() == dir)
                return ValidationError{ValidationKind::NotSmallestOnRay, extremal[j].str()};
    }

    AffineSemigroup s;
    s.d_ = d0;
    s.extremal_ = std::move(extremal);
    s.others_ = std::move(others);
    s.all_ = s.extremal_;
    s.all_.insert(s.all_.end(), s.others_.begin(), s.others_.end());
    s.solver_ = *solver;

    // Minimality: no generator is a nonnegative integer combination of the
    // remaining ones.
    std::vector<const LatticeVector*> rest;
    for (std::size_t i = 0; i < s.all_.size(); ++i) {
        rest.clear();
        for (std::size_t j = 0; j < s.all_.size(); ++j)
            if (j != i) rest.push_back(&s.all_[j]);
        if (representable(s.all_[i], rest))
            return ValidationError{ValidationKind::NotMinimal, s.all_[i].str()};
    }
    return s;
}

Result<AffineSemigroup> build_semigroup(std::span<const LatticeVector> raw_generators) {
    if (raw_generators.empty())
        return ValidationError{ValidationKind::DimensionMismatch, "empty generator list"};
    const std::size_t d = raw_generators[0].dim();
    if (d == 0)
        return ValidationError{ValidationKind::DimensionMismatch, "zero-dimensional vectors"};
    for (const auto& g : raw_generators) {
        if (g.dim() != d)
            return ValidationError{ValidationKind::DimensionMismatch, g.str()};
        if (g.is_zero()) return ValidationError{ValidationKind::ZeroGenerator, g.str()};
        if (!g.is_nonnegative())
            return ValidationError{ValidationKind::NotSimplicial,
                                   g.str() + " has a negative coordinate"};
    }

    // Group generators by primitive direction; a direction is an extreme ray
    // exactly when it is not a nonnegative rational combination of the others.
    std::map<LatticeVector, LatticeVector> smallest_on_ray; // direction -> generator
    for (const auto& g : raw_generators) {
        auto [it, inserted] = smallest_on_ray.emplace(g.primitive(), g);
        if (!inserted && g.content() < it->second.content()) it->second = g;
    }
    std::vector<LatticeVector> directions;
    directions.reserve(smallest_on_ray.size());
    for (const auto& [dir, gen] : smallest_on_ray) directions.push_back(dir);

    std::vector<LatticeVector> extremal;
    std::vector<LatticeVector> rest_dirs;
    for (std::size_t i = 0; i < directions.size(); ++i) {
        rest_dirs.clear();
        for (std::size_t j = 0; j < directions.size(); ++j)
            if (j != i) rest_dirs.push_back(directions[j]);
        if (!in_rational_cone(directions[i], rest_dirs))
            extremal.push_back(smallest_on_ray.at(directions[i]));
    }
    if (extremal.size() != d)
        return ValidationError{ValidationKind::NotSimplicial,
                               "cone has " + std::to_string(extremal.size()) +
                                   " extreme rays, dimension is " + std::to_string(d)};

    std::vector<LatticeVector> others;
    std::sort(extremal.begin(), extremal.end());
    std::vector<bool> consumed(extremal.size(), false);
    for (const auto& g : raw_generators) {
        auto it = std::lower_bound(extremal.begin(), extremal.end(), g);
        if (it != extremal.end() && *it == g && !consumed[it - extremal.begin()]) {
            consumed[it - extremal.begin()] = true;
            continue;
        }
        others.push_back(g);
    }

    return make_semigroup(std::move(extremal), std::move(others));
}

RationalVector solve_extremal_coordinates(const AffineSemigroup& s, const LatticeVector& z) {
    return s.solver().solve(z);
}

bool in_free_extremal_span(const AffineSemigroup& s, const LatticeVector& z) {
    auto x = s.solver().solve_integral(z);
    if (!x) return false;
    for (std::int64_t v : *x)
        if (v < 0) return false;
    return true;
}

bool in_extremal_group(const AffineSemigroup& s, const LatticeVector& z) {
    return s.solver().solve_integral(z).has_value();
}

} // namespace sgclass
