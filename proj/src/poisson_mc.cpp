#include "gammahodge/poisson_mc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gammahodge/errors.hpp"
#include "gammahodge/quadrature.hpp"

namespace gammahodge {

Window::Window(std::vector<double> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw InputError("window needs dim >= 1");
    for (double l : lengths_)
        if (!(l > 0.0) || !std::isfinite(l)) throw InputError("window extents must be finite and positive");
}

double Window::volume() const {
    double v = 1.0;
    for (double l : lengths_) v *= l;
    return v;
}

bool Window::contains(std::span<const double> x) const {
    if (x.size() != lengths_.size()) return false;
    for (std::size_t a = 0; a < x.size(); ++a)
        if (x[a] < 0.0 || x[a] > lengths_[a]) return false;
    return true;
}

double TestFunction::operator()(const Window& w, std::span<const double> x) const {
    switch (kind) {
        case Kind::Zero:
            return 0.0;
        case Kind::Indicator:
            return w.contains(x) ? amplitude : 0.0;
        case Kind::Gaussian: {
            if (!w.contains(x)) return 0.0;
            double q = 0.0;
            for (std::size_t a = 0; a < x.size(); ++a) {
                const double s = width * w.lengths()[a];
                const double z = x[a] - 0.5 * w.lengths()[a];
                q += z * z / (2.0 * s * s);
            }
            return amplitude * std::exp(-q);
        }
    }
    return 0.0;
}

void TestFunction::validate() const {
    if (!std::isfinite(amplitude)) throw InputError("test function amplitude must be finite");
    if (kind == Kind::Gaussian && !(width > 0.0 && std::isfinite(width)))
        throw InputError("gaussian test function width must be finite and positive");
}

double evaluate(Polynomial h, double t) {
    switch (h) {
        case Polynomial::Const:
            return 1.0;
        case Polynomial::Linear:
            return t;
        case Polynomial::Quadratic:
            return t * t;
    }
    return 0.0;
}

std::uint64_t sample_poisson_count(double mean, SampleStream& stream) {
    // Inversion in chunks of mean <= 30, using additivity of Poisson counts.
    constexpr double kChunk = 30.0;
    std::uint64_t total = 0;
    double left = mean;
    while (left > 0.0) {
        const double mu = std::min(left, kChunk);
        left -= mu;
        const double u = stream.uniform();
        double p = std::exp(-mu);
        double cdf = p;
        std::uint64_t k = 0;
        while (u >= cdf && p > 0.0) {
            ++k;
            p *= mu / static_cast<double>(k);
            cdf += p;
        }
        total += k;
    }
    return total;
}

PointConfiguration sample_configuration(const Window& window, SampleStream& stream) {
    const std::uint64_t n = sample_poisson_count(window.volume(), stream);
    PointConfiguration config(window.dim());
    std::vector<double> x(window.dim());
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < x.size(); ++a) x[a] = stream.uniform() * window.lengths()[a];
        config.push_back(x);
    }
    return config;
}

double integrate_power(const TestFunction& phi, const Window& window, int power) {
    auto integrand = [&](std::span<const double> x) { return std::pow(phi(window, x), power); };
    return integrate_box(integrand, window.lengths()).value;
}

namespace {

struct Moments {
    double mean = 0.0;
    double std_error = 0.0;
};

// Welford over samples in index order; value(i) draws from its own streams.
Moments run_samples(std::uint64_t samples, const std::function<double(std::uint64_t)>& value) {
    if (samples < 2) throw InputError("Monte Carlo needs at least 2 samples");
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double x = value(i);
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    const double var = m2 / static_cast<double>(samples - 1);
    return {mean, std::sqrt(var / static_cast<double>(samples))};
}

// Stream ids: 2i for the primary configuration of sample i, 2i+1 for an
// independent companion configuration.
SampleStream primary_stream(std::uint64_t seed, std::uint64_t i) { return {seed, 2 * i}; }
SampleStream companion_stream(std::uint64_t seed, std::uint64_t i) { return {seed, 2 * i + 1}; }

double sum_over(const TestFunction& f, const Window& w, const PointConfiguration& config) {
    double s = 0.0;
    for (std::size_t i = 0; i < config.size(); ++i) s += f(w, config.point(i));
    return s;
}

void finish(McReport& r) {
    r.abs_error = std::abs(r.estimate - r.reference);
    r.rel_error = r.abs_error / std::max(std::abs(r.reference), kRelErrorFloor);
}

void require_agreement(double quadrature, double closed, const char* what) {
    if (std::abs(quadrature - closed) > 1e-10 * std::max(std::abs(closed), kRelErrorFloor))
        throw InvariantViolation(std::string("quadrature reference disagrees with closed form for ") + what);
}

// Closed forms of ∫φ and ∫φ² when φ is piecewise constant.
std::optional<std::pair<double, double>> closed_moments(const TestFunction& phi, double volume) {
    switch (phi.kind) {
        case TestFunction::Kind::Zero:
            return std::pair{0.0, 0.0};
        case TestFunction::Kind::Indicator:
            return std::pair{phi.amplitude * volume, phi.amplitude * phi.amplitude * volume};
        case TestFunction::Kind::Gaussian:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

McReport check_laplace(const TestFunction& f, const Window& window, std::uint64_t samples, std::uint64_t seed) {
    f.validate();
    if (samples < kMinLaplaceSamples) throw InputError("laplace check needs at least 10^4 samples");
    McReport r;
    r.check = "laplace";
    r.samples = samples;
    r.seed = seed;

    const double exponent = integrate_box(
        [&](std::span<const double> x) { return std::expm1(f(window, x)); }, window.lengths()).value;
    r.reference = std::exp(exponent);
    if (f.has_closed_form()) {
        const double c = f.kind == TestFunction::Kind::Zero ? 0.0 : f.amplitude;
        r.closed_form = std::exp(window.volume() * std::expm1(c));
        require_agreement(r.reference, *r.closed_form, "the Laplace transform");
    }

    const auto m = run_samples(samples, [&](std::uint64_t i) {
        auto stream = primary_stream(seed, i);
        return std::exp(sum_over(f, window, sample_configuration(window, stream)));
    });
    r.estimate = m.mean;
    r.std_error = m.std_error;
    finish(r);
    return r;
}

McReport check_local_expansion(const LocalFunctional& functional, const Window& window, std::uint64_t samples,
                               std::uint64_t seed, std::size_t series_terms) {
    functional.phi.validate();
    const double v = window.volume();
    const bool uses_phi =
        functional.kind == LocalFunctional::Kind::Linear || functional.kind == LocalFunctional::Kind::Quadratic;
    const double phi1 = uses_phi ? integrate_power(functional.phi, window, 1) : 0.0;
    const double phi2 = uses_phi ? integrate_power(functional.phi, window, 2) : 0.0;

    // (1/n!) ∫_{Λ^n} F dx / (v^n / n!), i.e. the n-th series term divided by the Poisson pmf
    auto weight = [&](std::size_t n) -> double {
        const double dn = static_cast<double>(n);
        switch (functional.kind) {
            case LocalFunctional::Kind::One:
                return 1.0;
            case LocalFunctional::Kind::CountEquals:
                return n == functional.k ? 1.0 : 0.0;
            case LocalFunctional::Kind::Linear:
                return dn * phi1 / v;
            case LocalFunctional::Kind::Quadratic:
                return dn * phi2 / v + dn * (dn - 1.0) * phi1 * phi1 / (v * v);
        }
        return 0.0;
    };

    McReport r;
    r.check = "local";
    r.samples = samples;
    r.seed = seed;
    r.series_terms = series_terms;

    double pmf = std::exp(-v);
    double series = 0.0;
    for (std::size_t n = 0; n <= series_terms; ++n) {
        if (n > 0) pmf *= v / static_cast<double>(n);
        series += pmf * weight(n);
    }
    r.reference = series;

    // Tail: explicit terms up to past 3v, then a geometric bound (term ratio <= 1/2 beyond 2.5v).
    double tail = 0.0;
    double last = 0.0;
    const auto stop = std::max<std::size_t>(series_terms + 1, static_cast<std::size_t>(3.0 * v) + 20) + 50;
    for (std::size_t n = series_terms + 1; n <= stop; ++n) {
        pmf *= v / static_cast<double>(n);
        last = pmf * std::abs(weight(n));
        tail += last;
    }
    tail += 2.0 * last;
    r.tail_bound = tail;
    if (tail > 1e-12 * std::max(std::abs(r.reference), kRelErrorFloor))
        throw InputError("series tail bound " + std::to_string(tail) + " not below 1e-12 of the mean with " +
                         std::to_string(series_terms) + " terms");

    std::optional<double> closed;
    switch (functional.kind) {
        case LocalFunctional::Kind::One:
            closed = 1.0;
            break;
        case LocalFunctional::Kind::CountEquals:
            closed = std::exp(-v + static_cast<double>(functional.k) * std::log(v) -
                              std::lgamma(static_cast<double>(functional.k) + 1.0));
            break;
        case LocalFunctional::Kind::Linear:
            if (auto mom = closed_moments(functional.phi, v)) closed = mom->first;
            break;
        case LocalFunctional::Kind::Quadratic:
            if (auto mom = closed_moments(functional.phi, v)) closed = mom->second + mom->first * mom->first;
            break;
    }
    if (closed) {
        r.closed_form = closed;
        require_agreement(r.reference, *closed, "the local expansion");
    }

    const auto m = run_samples(samples, [&](std::uint64_t i) -> double {
        auto stream = primary_stream(seed, i);
        const auto config = sample_configuration(window, stream);
        switch (functional.kind) {
            case LocalFunctional::Kind::One:
                return 1.0;
            case LocalFunctional::Kind::CountEquals:
                return config.size() == functional.k ? 1.0 : 0.0;
            case LocalFunctional::Kind::Linear:
                return sum_over(functional.phi, window, config);
            case LocalFunctional::Kind::Quadratic: {
                const double s = sum_over(functional.phi, window, config);
                return s * s;
            }
        }
        return 0.0;
    });
    r.estimate = m.mean;
    r.std_error = m.std_error;
    finish(r);
    return r;
}

McReport check_mecke(std::size_t m, const MeckeFunction& f, const Window& window, std::uint64_t samples,
                     std::uint64_t seed) {
    if (m < 1 || m > 3) throw InputError("Mecke check supports m in {1, 2, 3}");
    f.g.validate();
    f.phi.validate();
    const double v = window.volume();
    const double m_fact = std::tgamma(static_cast<double>(m) + 1.0);

    // ∫_{Λ^m} g(x_1)⋯g(x_m) dx = (∫_Λ g)^m; E[h(<φ,γ>)] from the first two moments of <φ,γ>.
    const double g_int = integrate_power(f.g, window, 1);
    const double phi1 = integrate_power(f.phi, window, 1);
    const double phi2 = integrate_power(f.phi, window, 2);
    auto expected_h = [](Polynomial h, double p1, double p2) {
        switch (h) {
            case Polynomial::Const:
                return 1.0;
            case Polynomial::Linear:
                return p1;
            case Polynomial::Quadratic:
                return p2 + p1 * p1;
        }
        return 0.0;
    };
    const double g_total = std::pow(g_int, static_cast<double>(m));

    McReport r;
    r.check = "mecke";
    r.samples = samples;
    r.seed = seed;
    r.reference = g_total * expected_h(f.h, phi1, phi2) / m_fact;

    const auto g_mom = closed_moments(f.g, v);
    const auto phi_mom = closed_moments(f.phi, v);
    if (g_mom && phi_mom) {
        r.closed_form = std::pow(g_mom->first, static_cast<double>(m)) *
                        expected_h(f.h, phi_mom->first, phi_mom->second) / m_fact;
        require_agreement(r.reference, *r.closed_form, "the Mecke identity");
    }

    // Left side: sum over m-subsets of γ of f(γ, x̄).
    const auto lhs = run_samples(samples, [&](std::uint64_t i) -> double {
        auto stream = primary_stream(seed, i);
        const auto config = sample_configuration(window, stream);
        const std::size_t n = config.size();
        if (n > kMaxMeckePoints)
            throw ResourceError("configuration with " + std::to_string(n) + " points exceeds the Mecke limit");
        std::vector<double> gv(n), pv(n);
        double total_phi = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            gv[j] = f.g(window, config.point(j));
            pv[j] = f.phi(window, config.point(j));
            total_phi += pv[j];
        }
        double sum = 0.0;
        if (m == 1) {
            for (std::size_t a = 0; a < n; ++a) sum += gv[a] * evaluate(f.h, total_phi - pv[a]);
        } else if (m == 2) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    sum += gv[a] * gv[b] * evaluate(f.h, total_phi - pv[a] - pv[b]);
        } else {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    for (std::size_t c = b + 1; c < n; ++c)
                        sum += gv[a] * gv[b] * gv[c] * evaluate(f.h, total_phi - pv[a] - pv[b] - pv[c]);
        }
        return sum;
    });

    // Right side: f(γ ∪ x̄, x̄) = g(x̄) h(<φ,γ>), integrated over x̄, on independent configurations.
    const auto rhs = run_samples(samples, [&](std::uint64_t i) {
        auto stream = companion_stream(seed, i);
        const auto config = sample_configuration(window, stream);
        return g_total * evaluate(f.h, sum_over(f.phi, window, config)) / m_fact;
    });

    r.estimate = lhs.mean;
    r.std_error = lhs.std_error;
    r.rhs_estimate = rhs.mean;
    r.rhs_std_error = rhs.std_error;
    r.pooled_std_error = std::hypot(lhs.std_error, rhs.std_error);
    finish(r);
    return r;
}

}  // namespace gammahodge

namespace gammahodge {

McReport run_check(const PoissonSpec& spec) {
    if (!spec.seed) throw InputError("poisson checks require a seed");
    switch (spec.check) {
        case PoissonSpec::Check::Laplace:
            return check_laplace(spec.f, spec.window, spec.samples, *spec.seed);
        case PoissonSpec::Check::Local:
            return check_local_expansion(spec.local, spec.window, spec.samples, *spec.seed, spec.series_terms);
        case PoissonSpec::Check::Mecke:
            return check_mecke(spec.m, spec.mecke, spec.window, spec.samples, *spec.seed);
    }
    throw InputError("unknown check");
}

}  // namespace gammahodge
