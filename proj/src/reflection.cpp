#include "dunkl/reflection.hpp"

#include "dunkl/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <sstream>

namespace dunkl {

namespace {

constexpr double kRootTol = 1e-12;

std::vector<long long> matrix_key(const Matrix& m) {
    std::vector<long long> key(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.size(); ++i) key[i] = std::llround(m.data()[i] * 1e9);
    return key;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

// tan(a * 7.5 degrees) for 0 <= a < 24 as an element of Q(sqrt D). A value of
// nullopt at a == 12 means the direction is vertical.
struct ExactTan {
    bool available = false;
    bool vertical = false;
    QuadraticNumber value;
};

ExactTan exact_tan_7_5(int a) {
    ExactTan r;
    bool negate = false;
    if (a > 12) {
        a = 24 - a;
        negate = true;
    }
    r.available = true;
    switch (a) {
        case 0: r.value = QuadraticNumber(0); break;
        case 2: r.value = QuadraticNumber(Rational(2), Rational(-1), 3); break;  // 2 - sqrt3
        case 3: r.value = QuadraticNumber(Rational(-1), Rational(1), 2); break;  // sqrt2 - 1
        case 4: r.value = QuadraticNumber(Rational(0), Rational(1, 3), 3); break;
        case 6: r.value = QuadraticNumber(1); break;
        case 8: r.value = QuadraticNumber(Rational(0), Rational(1), 3); break;
        case 9: r.value = QuadraticNumber(Rational(1), Rational(1), 2); break;
        case 10: r.value = QuadraticNumber(Rational(2), Rational(1), 3); break;
        case 12: r.vertical = true; break;
        default: r.available = false; break;
    }
    if (negate) r.value = -r.value;
    return r;
}

std::vector<double> normalized(std::vector<double> v) {
    double n2 = 0;
    for (double c : v) n2 += c * c;
    if (n2 <= 0) throw InvalidRootSystem("zero root");
    // already normalised up to rounding: keep, so that re-normalising is a no-op
    if (std::abs(n2 - 2.0) <= 8 * std::numeric_limits<double>::epsilon()) return v;
    const double n = std::sqrt(n2);
    for (double& c : v) c = c / n * std::sqrt(2.0);
    return v;
}

}  // namespace

std::vector<Point> ReflectionGroup::orbit(const Point& x, double tol) const {
    std::vector<Point> out;
    for (const auto& g : elements_) {
        Point gx = g * x;
        bool seen = std::any_of(out.begin(), out.end(), [&](const Point& p) { return (p - gx).norm() <= tol; });
        if (!seen) out.push_back(std::move(gx));
    }
    return out;
}

Point reflect(const Root& alpha, const Point& x) { return x - x.dot(alpha.components) * alpha.components; }

Matrix reflection_matrix(const Root& alpha) {
    const auto d = alpha.components.size();
    return Matrix::Identity(d, d) - alpha.components * alpha.components.transpose();
}

ReflectionGroup generate_group(const std::vector<Root>& positive_roots, int dim, std::size_t cap) {
    std::vector<Matrix> gens;
    gens.reserve(positive_roots.size());
    for (const auto& r : positive_roots) gens.push_back(reflection_matrix(r));

    std::vector<Matrix> elements{Matrix::Identity(dim, dim)};
    std::map<std::vector<long long>, std::size_t> seen{{matrix_key(elements.front()), 0}};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        for (const auto& s : gens) {
            Matrix next = s * elements[cur];
            auto key = matrix_key(next);
            if (seen.count(key)) continue;
            if (elements.size() >= cap)
                throw NonClosedSystem("reflection closure exceeded " + std::to_string(cap) + " elements");
            seen.emplace(std::move(key), elements.size());
            frontier.push_back(elements.size());
            elements.push_back(std::move(next));
        }
    }
    return ReflectionGroup(std::move(elements));
}

ReflectionGroup generate_group(const RootSystem& rs, std::size_t cap) {
    return generate_group(rs.positive_roots(), rs.dim(), cap);
}

double weight(const RootSystem& rs, const Point& x) {
    double w = 1.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        double k = rs.multiplicity(i);
        if (k == 0.0) continue;
        w *= std::pow(std::abs(rs.root(i).components.dot(x)), 2.0 * k);
    }
    return w;
}

double gamma(const RootSystem& rs) {
    double g = 0;
    for (double k : rs.multiplicities()) g += k;
    return g;
}

double min_orbit_distance(const ReflectionGroup& g, const Point& x, const Point& y) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& m : g.elements()) best = std::min(best, (m * x - y).norm());
    return best;
}

double max_orbit_distance(const ReflectionGroup& g, const Point& x, const Point& y) {
    double best = 0;
    for (const auto& m : g.elements()) best = std::max(best, (m * x - y).norm());
    return best;
}

// ---------------------------------------------------------------------------

std::vector<double> RootSystem::orbit_multiplicities() const {
    std::vector<double> out(static_cast<std::size_t>(orbit_count_), 0.0);
    for (std::size_t i = 0; i < roots_.size(); ++i) out[orbit_of_root_[i]] = kappa_[i];
    return out;
}

double RootSystem::axis_multiplicity(int axis) const {
    if (!coordinate_system_) throw WrongGroup("axis multiplicity requires the group Z2^d");
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (std::abs(roots_[i].components[axis]) > 0.5) return kappa_[i];
    throw WrongGroup("no root on axis " + std::to_string(axis));
}

std::string RootSystem::fingerprint() const {
    std::ostringstream os;
    os.precision(17);
    os << name_ << "|d=" << dim_;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        os << "|";
        for (Eigen::Index j = 0; j < roots_[i].components.size(); ++j) os << roots_[i].components[j] << ",";
        os << "k=" << kappa_[i];
    }
    return os.str();
}

void RootSystem::finalize(const std::vector<double>& multiplicity) {
    for (const auto& r : roots_) {
        if (r.components.size() != dim_) throw InvalidRootSystem("root of wrong dimension");
        if (std::abs(r.components.squaredNorm() - 2.0) > kRootTol) throw InvalidRootSystem("root not normalised");
    }
    // reduced: no root parallel to another
    for (std::size_t i = 0; i < roots_.size(); ++i)
        for (std::size_t j = i + 1; j < roots_.size(); ++j)
            if (std::abs(std::abs(roots_[i].components.dot(roots_[j].components)) - 2.0) < 1e-9)
                throw InvalidRootSystem("roots " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");

    // closure: sigma_a(b) in R for all a, b
    auto find_root = [&](const Point& v) -> int {
        for (std::size_t k = 0; k < roots_.size(); ++k)
            if ((roots_[k].components - v).norm() < 1e-9 || (roots_[k].components + v).norm() < 1e-9)
                return static_cast<int>(k);
        return -1;
    };
    for (const auto& a : roots_)
        for (const auto& b : roots_)
            if (find_root(reflect(a, b.components)) < 0)
                throw InvalidRootSystem("root system is not closed under its reflections");

    group_ = generate_group(roots_, dim_);

    // orbits of +-roots under G
    orbit_of_root_.assign(roots_.size(), -1);
    orbit_count_ = 0;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (orbit_of_root_[i] >= 0) continue;
        for (const auto& g : group_.elements()) {
            int k = find_root(g * roots_[i].components);
            if (k >= 0) orbit_of_root_[k] = orbit_count_;
        }
        ++orbit_count_;
    }

    // multiplicity assignment
    kappa_.assign(roots_.size(), 0.0);
    if (multiplicity.size() == 1) {
        std::fill(kappa_.begin(), kappa_.end(), multiplicity.front());
    } else if (multiplicity.size() == static_cast<std::size_t>(orbit_count_)) {
        for (std::size_t i = 0; i < roots_.size(); ++i) kappa_[i] = multiplicity[orbit_of_root_[i]];
    } else if (multiplicity.size() == roots_.size()) {
        kappa_ = multiplicity;
        for (std::size_t i = 0; i < roots_.size(); ++i)
            for (std::size_t j = 0; j < roots_.size(); ++j)
                if (orbit_of_root_[i] == orbit_of_root_[j] && kappa_[i] != kappa_[j])
                    throw InvalidRootSystem("multiplicity is not G-invariant");
    } else {
        throw InvalidRootSystem("expected 1, " + std::to_string(orbit_count_) + " (orbits) or " +
                                std::to_string(roots_.size()) + " (roots) multiplicities, got " +
                                std::to_string(multiplicity.size()));
    }
    for (double k : kappa_)
        if (!(k >= 0.0) || !std::isfinite(k)) throw InvalidRootSystem("multiplicities must be finite and >= 0");

    coordinate_system_ = roots_.size() == static_cast<std::size_t>(dim_);
    for (const auto& r : roots_) {
        int nonzero = 0;
        for (Eigen::Index j = 0; j < r.components.size(); ++j)
            if (std::abs(r.components[j]) > 1e-12) ++nonzero;
        if (nonzero != 1) coordinate_system_ = false;
    }

    // exact multiplicities
    std::vector<Rational> ek;
    bool all_rational = true;
    for (double k : kappa_) {
        Rational q;
        if (!rationalize(k, q)) {
            all_rational = false;
            break;
        }
        ek.push_back(q);
    }
    if (all_rational) {
        exact_kappa_ = std::move(ek);
    } else {
        exact_kappa_.reset();
        exact_directions_.reset();
    }
    if (!exact_kappa_) exact_directions_.reset();
}

RootSystem RootSystem::catalogue(const std::string& raw_name, const std::vector<double>& multiplicity) {
    const std::string name = lower(raw_name);
    RootSystem rs;
    rs.name_ = raw_name;
    rs.catalogue_ = true;

    auto axis_system = [&](int d) {
        rs.dim_ = d;
        std::vector<std::vector<QuadraticNumber>> ed;
        for (int j = 0; j < d; ++j) {
            Point p = Point::Zero(d);
            p[j] = std::sqrt(2.0);
            rs.roots_.push_back({p});
            std::vector<QuadraticNumber> e(static_cast<std::size_t>(d), QuadraticNumber(0));
            e[j] = QuadraticNumber(1);
            ed.push_back(e);
            std::vector<Real128> f(static_cast<std::size_t>(d), Real128(0));
            f[j] = 1;
            rs.float_directions_.push_back(f);
        }
        rs.exact_directions_ = std::move(ed);
    };

    auto dihedral = [&](int m) {
        if (m < 1) throw InvalidRootSystem("I2(m) requires m >= 1");
        rs.dim_ = 2;
        const Real128 pi = boost::math::constants::pi<Real128>();
        std::vector<std::vector<QuadraticNumber>> ed;
        bool exact = (24 % m) == 0;
        int radicand = 0;
        for (int k = 0; k < m; ++k) {
            Real128 th = pi * k / m;
            Real128 c = cos(th), s = sin(th);
            if (abs(c) < 1e-30) c = 0;
            if (abs(s) < 1e-30) s = 0;
            rs.float_directions_.push_back({c, s});
            Point p(2);
            p << std::sqrt(2.0) * c.convert_to<double>(), std::sqrt(2.0) * s.convert_to<double>();
            rs.roots_.push_back({p});
            if (exact) {
                ExactTan t = exact_tan_7_5(24 * k / m);
                if (!t.available) {
                    exact = false;
                    continue;
                }
                if (!t.vertical && t.value.radicand() != 0) {
                    if (radicand != 0 && radicand != t.value.radicand()) exact = false;
                    radicand = t.value.radicand();
                }
                if (t.vertical)
                    ed.push_back({QuadraticNumber(0), QuadraticNumber(1)});
                else
                    ed.push_back({QuadraticNumber(1), t.value});
            }
        }
        if (exact) {
            rs.exact_directions_ = std::move(ed);
            rs.radicand_ = radicand;
        }
    };

    if (name == "z2" || name == "a1") {
        axis_system(1);
    } else if (name.rfind("z2^", 0) == 0) {
        int d = std::stoi(name.substr(3));
        if (d < 1) throw InvalidRootSystem("Z2^d requires d >= 1");
        axis_system(d);
    } else if (name == "a2") {
        dihedral(3);
    } else if (name == "b2") {
        dihedral(4);
    } else if (name.rfind("i2(", 0) == 0 && name.back() == ')') {
        dihedral(std::stoi(name.substr(3, name.size() - 4)));
    } else {
        throw InvalidRootSystem("unknown catalogue root system '" + raw_name + "'");
    }
    rs.finalize(multiplicity);
    return rs;
}

RootSystem RootSystem::from_roots(const std::vector<std::vector<double>>& roots, const std::vector<double>& multiplicity,
                                  std::string label) {
    if (roots.empty()) throw InvalidRootSystem("explicit root system needs at least one root");
    RootSystem rs;
    rs.name_ = std::move(label);
    rs.dim_ = static_cast<int>(roots.front().size());
    std::vector<std::vector<QuadraticNumber>> ed;
    bool exact = true;
    for (const auto& raw : roots) {
        if (static_cast<int>(raw.size()) != rs.dim_) throw InvalidRootSystem("roots of mixed dimension");
        auto n = normalized(raw);
        rs.roots_.push_back({Eigen::Map<const Point>(n.data(), static_cast<Eigen::Index>(n.size()))});
        std::vector<Real128> f;
        double scale = 0;
        for (double c : raw) scale = std::max(scale, std::abs(c));
        std::vector<QuadraticNumber> e;
        for (double c : raw) {
            f.emplace_back(c / scale);
            Rational q;
            if (exact && rationalize(c / scale, q, 10000, 1e-13))
                e.emplace_back(q);
            else
                exact = false;
        }
        rs.float_directions_.push_back(std::move(f));
        if (exact) ed.push_back(std::move(e));
    }
    if (exact) rs.exact_directions_ = std::move(ed);
    rs.finalize(multiplicity);
    return rs;
}

}  // namespace dunkl
