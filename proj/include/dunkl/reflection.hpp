#pragma once

// Root systems, finite reflection groups and the Dunkl weight.

#include "dunkl/field.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A root normalised to <a,a> = 2.
struct Root {
    Point components;
};

/// Closure of the reflections of a root system under composition.
class ReflectionGroup {
public:
    explicit ReflectionGroup(std::vector<Matrix> elements) : elements_(std::move(elements)) {}

    std::size_t order() const { return elements_.size(); }
    const std::vector<Matrix>& elements() const { return elements_; }
    const Matrix& operator[](std::size_t i) const { return elements_[i]; }
    int dim() const { return elements_.empty() ? 0 : static_cast<int>(elements_.front().rows()); }

    /// All distinct images g.x.
    std::vector<Point> orbit(const Point& x, double tol = 1e-12) const;

private:
    std::vector<Matrix> elements_;
};

enum class ArithmeticMode { Exact, Float128 };

/// Reduced root system with a G-invariant multiplicity function.
///
/// Besides the normalised double-precision roots, every root keeps an
/// un-normalised direction in the coefficient field used for polynomial
/// arithmetic. The Dunkl operator only sees a root through
/// kappa * a_j / <x,a> and through the reflection, both of which are
/// invariant under rescaling a, so any nonzero multiple will do.
class RootSystem {
public:
    /// Catalogue names: "Z2", "A1", "Z2^d", "A2", "B2", "I2(m)" (case-insensitive).
    /// `multiplicity` holds one value per orbit, one per positive root, or a
    /// single value broadcast to every root.
    static RootSystem catalogue(const std::string& name, const std::vector<double>& multiplicity);

    /// Explicit positive roots; each is rescaled to |a|^2 = 2.
    static RootSystem from_roots(const std::vector<std::vector<double>>& roots,
                                 const std::vector<double>& multiplicity,
                                 std::string label = "explicit");

    const std::string& name() const { return name_; }
    /// True when built by catalogue(); name() is then a catalogue name.
    bool is_catalogue() const { return catalogue_; }
    int dim() const { return dim_; }
    std::size_t size() const { return roots_.size(); }
    const std::vector<Root>& positive_roots() const { return roots_; }
    const Root& root(std::size_t i) const { return roots_[i]; }
    double multiplicity(std::size_t i) const { return kappa_[i]; }
    const std::vector<double>& multiplicities() const { return kappa_; }
    /// Orbit label of each positive root (orbits of +-a under G).
    const std::vector<int>& orbit_labels() const { return orbit_of_root_; }
    int orbit_count() const { return orbit_count_; }
    /// One multiplicity per orbit, in orbit-label order.
    std::vector<double> orbit_multiplicities() const;

    const ReflectionGroup& group() const { return group_; }

    /// True when the roots are exactly sqrt(2) e_j, j = 1..d (the group Z2^d).
    bool is_coordinate_system() const { return coordinate_system_; }
    /// Per-axis multiplicity when is_coordinate_system().
    double axis_multiplicity(int axis) const;

    ArithmeticMode mode() const { return exact_directions_ ? ArithmeticMode::Exact : ArithmeticMode::Float128; }
    int radicand() const { return radicand_; }
    const std::optional<std::vector<std::vector<QuadraticNumber>>>& exact_directions() const {
        return exact_directions_;
    }
    const std::optional<std::vector<Rational>>& exact_multiplicities() const { return exact_kappa_; }
    const std::vector<std::vector<Real128>>& float_directions() const { return float_directions_; }

    /// Stable textual identity (group, roots, multiplicities) used for cache keys.
    std::string fingerprint() const;

private:
    RootSystem() = default;
    void finalize(const std::vector<double>& multiplicity);

    std::string name_;
    bool catalogue_ = false;
    int dim_ = 0;
    std::vector<Root> roots_;
    std::vector<double> kappa_;
    std::vector<int> orbit_of_root_;
    int orbit_count_ = 0;
    ReflectionGroup group_{{}};
    bool coordinate_system_ = false;
    int radicand_ = 0;
    std::optional<std::vector<std::vector<QuadraticNumber>>> exact_directions_;
    std::optional<std::vector<Rational>> exact_kappa_;
    std::vector<std::vector<Real128>> float_directions_;
};

/// x - <x,a> a for a normalised root.
Point reflect(const Root& alpha, const Point& x);

/// Reflection matrix I - a a^T for a normalised root.
Matrix reflection_matrix(const Root& alpha);

/// Breadth-first closure of the reflections; throws NonClosedSystem beyond `cap`.
ReflectionGroup generate_group(const std::vector<Root>& positive_roots, int dim, std::size_t cap = 1000000);
ReflectionGroup generate_group(const RootSystem& rs, std::size_t cap = 1000000);

/// w(x) = prod |<a,x>|^{2 kappa(a)}.
double weight(const RootSystem& rs, const Point& x);

/// gamma = sum of kappa over positive roots.
double gamma(const RootSystem& rs);

/// min over g of |g.x - y|.
double min_orbit_distance(const ReflectionGroup& g, const Point& x, const Point& y);
double max_orbit_distance(const ReflectionGroup& g, const Point& x, const Point& y);

}  // namespace dunkl
