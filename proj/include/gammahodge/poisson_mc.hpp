#pragma once

// Seeded Monte Carlo checks of identities of the unit-intensity Poisson
// measure on a box window: the Laplace transform, the expansion of local
// functionals, and the generalized Mecke identity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammahodge/rng.hpp"

namespace gammahodge {

inline constexpr double kRelErrorFloor = 1e-8;
inline constexpr std::size_t kMaxMeckePoints = 1000;
inline constexpr std::size_t kMinLaplaceSamples = 10000;

// Box [0, L_1] × ... × [0, L_dim].
class Window {
  public:
    Window() = default;
    explicit Window(std::vector<double> lengths);

    std::size_t dim() const { return lengths_.size(); }
    const std::vector<double>& lengths() const { return lengths_; }
    double volume() const;
    bool contains(std::span<const double> x) const;

    friend bool operator==(const Window&, const Window&) = default;

  private:
    std::vector<double> lengths_;
};

class PointConfiguration {
  public:
    explicit PointConfiguration(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    void push_back(std::span<const double> x) { coords_.insert(coords_.end(), x.begin(), x.end()); }
    const std::vector<double>& coords() const { return coords_; }

    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

  private:
    std::size_t dim_;
    std::vector<double> coords_;
};

// Built-in bounded one-point functions on the window. Gaussian is
// amplitude * exp(-sum_a (x_a - L_a/2)^2 / (2 (width L_a)^2)) restricted
// to the box.
struct TestFunction {
    enum class Kind { Zero, Indicator, Gaussian };
    Kind kind = Kind::Indicator;
    double amplitude = 1.0;
    double width = 0.25;

    double operator()(const Window& w, std::span<const double> x) const;
    bool has_closed_form() const { return kind != Kind::Gaussian; }
    void validate() const;
};

// h(t) for the Mecke family.
enum class Polynomial { Const, Linear, Quadratic };
double evaluate(Polynomial h, double t);

struct LocalFunctional {
    enum class Kind { One, CountEquals, Linear, Quadratic };
    Kind kind = Kind::One;
    std::size_t k = 0;  // CountEquals: F = 1{|γ_Λ| = k}
    TestFunction phi;   // Linear: <φ,γ>; Quadratic: <φ,γ>^2
};

// f(γ, x_1..x_m) = g(x_1)⋯g(x_m) · h(<φ, γ \ {x_1..x_m}>).
struct MeckeFunction {
    TestFunction g;
    Polynomial h = Polynomial::Const;
    TestFunction phi;
};

struct McReport {
    std::string check;
    double estimate = 0.0;
    double reference = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;  // abs_error / max(|reference|, kRelErrorFloor)
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string rng = kRngName;
    std::optional<double> closed_form;      // when the family admits one
    std::optional<double> tail_bound;       // local expansion: truncated series tail
    std::optional<std::size_t> series_terms;
    std::optional<double> rhs_estimate;     // Mecke: MC mean of the augmented integral
    std::optional<double> rhs_std_error;
    std::optional<double> pooled_std_error;

    bool within(double sigmas) const { return abs_error <= sigmas * std_error; }
    friend bool operator==(const McReport&, const McReport&) = default;
};

std::uint64_t sample_poisson_count(double mean, SampleStream& stream);

PointConfiguration sample_configuration(const Window& window, SampleStream& stream);

// ∫_Λ φ^power dx by quadrature.
double integrate_power(const TestFunction& phi, const Window& window, int power);

McReport check_laplace(const TestFunction& f, const Window& window, std::uint64_t samples, std::uint64_t seed);

McReport check_local_expansion(const LocalFunctional& functional, const Window& window, std::uint64_t samples,
                               std::uint64_t seed, std::size_t series_terms);

McReport check_mecke(std::size_t m, const MeckeFunction& f, const Window& window, std::uint64_t samples,
                     std::uint64_t seed);

}  // namespace gammahodge

namespace gammahodge {

// One check request as read from a spec document.
struct PoissonSpec {
    enum class Check { Laplace, Local, Mecke };
    Check check = Check::Laplace;
    Window window{std::vector<double>{1.0}};
    std::uint64_t samples = 100000;
    std::optional<std::uint64_t> seed;
    TestFunction f;            // laplace
    LocalFunctional local;     // local
    std::size_t series_terms = 80;
    std::size_t m = 1;         // mecke
    MeckeFunction mecke;
};

// Throws InputError when no seed is set.
McReport run_check(const PoissonSpec& spec);

}  // namespace gammahodge
