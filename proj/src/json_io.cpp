#include "gammahodge/json_io.hpp"

#include <functional>

#include "gammahodge/errors.hpp"

namespace gammahodge {

namespace {

// Runs a decoder, reporting schema problems as InputError.
template <class F>
auto decoding(const char* what, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid ") + what + ": " + e.what());
    }
}

Integer integer_from(const json& j) {
    if (j.is_string()) return from_decimal(j.get<std::string>());
    if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    throw InputError("expected an integer or decimal string, got " + j.dump());
}

std::size_t size_from(const json& j) {
    const Integer v = integer_from(j);
    if (v < 0 || !v.fits_ulong_p()) throw InputError("expected a non-negative machine-size integer");
    return v.get_ui();
}

json decimal_array(const std::vector<Integer>& values) {
    json a = json::array();
    for (const auto& v : values) a.push_back(to_decimal(v));
    return a;
}

json decimal(std::size_t v) { return std::to_string(v); }

Polynomial polynomial_from(const json& j) {
    const auto s = j.get<std::string>();
    if (s == "const") return Polynomial::Const;
    if (s == "linear") return Polynomial::Linear;
    if (s == "quadratic") return Polynomial::Quadratic;
    throw InputError("unknown h '" + s + "' (const, linear, quadratic)");
}

}  // namespace

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

json to_json(const BettiVector& v) { return {{"d", v.d}, {"beta", decimal_array(v.beta)}}; }

BettiVector betti_vector_from_json(const json& j) {
    return decoding("Betti vector", [&] {
        const std::size_t d = size_from(j.at("d"));
        std::vector<Integer> beta;
        for (const auto& e : j.at("beta")) beta.push_back(integer_from(e));
        return BettiVector(d, std::move(beta));
    });
}

json to_json(const BettiReport& r) {
    json j = {{"input", to_json(r.input)},
              {"n_min", 0},
              {"n_max", r.n_max},
              {"b", decimal_array(r.b)},
              {"warnings", r.warnings}};
    if (r.vanishing) j["vanishing"] = {{"K0", to_decimal(r.vanishing->k0)}, {"valid", r.vanishing->valid}};
    return j;
}

BettiReport betti_report_from_json(const json& j) {
    return decoding("Betti report", [&] {
        BettiReport r;
        r.input = betti_vector_from_json(j.at("input"));
        r.n_max = size_from(j.at("n_max"));
        for (const auto& e : j.at("b")) r.b.push_back(integer_from(e));
        r.warnings = j.value("warnings", std::vector<std::string>{});
        if (j.contains("vanishing"))
            r.vanishing = VanishingThreshold{integer_from(j["vanishing"].at("K0")), j["vanishing"].at("valid").get<bool>()};
        return r;
    });
}

SimplicialComplex complex_from_json(const json& j) {
    return decoding("complex", [&] {
        return SimplicialComplex::from_maximal(j.at("maximal").get<std::vector<std::vector<long long>>>());
    });
}

SimplicialReport simplicial_report(const SimplicialComplex& complex) {
    SimplicialReport r;
    r.maximal = complex.maximal();
    for (int k = 0; k <= complex.max_dim(); ++k) {
        r.f_vector.push_back(complex.count(k));
        r.hodge.push_back(hodge_decomposition_dims(complex, k));
    }
    r.betti = betti_numbers(complex);
    return r;
}

json to_json(const SimplicialReport& r) {
    json hodge = json::array();
    for (std::size_t k = 0; k < r.hodge.size(); ++k) {
        const auto& h = r.hodge[k];
        hodge.push_back({{"k", k},
                         {"chains", decimal(h.chains)},
                         {"harmonic", decimal(h.harmonic)},
                         {"exact", decimal(h.exact)},
                         {"coexact", decimal(h.coexact)}});
    }
    json betti = json::array(), f_vector = json::array();
    for (auto b : r.betti) betti.push_back(decimal(b));
    for (auto f : r.f_vector) f_vector.push_back(decimal(f));
    json j = {{"maximal", r.maximal}, {"f_vector", f_vector}, {"betti", betti}, {"hodge", hodge}};
    if (!r.kron_probes.empty()) {
        json probes = json::array();
        for (const auto& p : r.kron_probes)
            probes.push_back({{"size_a", p.size_a},
                              {"size_b", p.size_b},
                              {"computed", decimal(p.dims.computed)},
                              {"predicted", decimal(p.dims.predicted)}});
        j["kron_probes"] = probes;
    }
    return j;
}

SimplicialReport simplicial_report_from_json(const json& j) {
    return decoding("simplicial report", [&] {
        SimplicialReport r;
        r.maximal = j.at("maximal").get<std::vector<std::vector<long long>>>();
        for (const auto& e : j.at("f_vector")) r.f_vector.push_back(size_from(e));
        for (const auto& e : j.at("betti")) r.betti.push_back(size_from(e));
        for (const auto& h : j.at("hodge"))
            r.hodge.push_back({size_from(h.at("chains")), size_from(h.at("harmonic")), size_from(h.at("exact")),
                               size_from(h.at("coexact"))});
        if (j.contains("kron_probes"))
            for (const auto& p : j["kron_probes"])
                r.kron_probes.push_back({size_from(p.at("size_a")), size_from(p.at("size_b")),
                                         {size_from(p.at("computed")), size_from(p.at("predicted"))}});
        return r;
    });
}

TestFunction test_function_from_json(const json& j) {
    return decoding("test function", [&] {
        TestFunction f;
        const std::string kind = j.is_string() ? j.get<std::string>() : j.at("kind").get<std::string>();
        if (kind == "zero")
            f.kind = TestFunction::Kind::Zero;
        else if (kind == "indicator")
            f.kind = TestFunction::Kind::Indicator;
        else if (kind == "gaussian")
            f.kind = TestFunction::Kind::Gaussian;
        else
            throw InputError("unknown test function kind '" + kind + "' (zero, indicator, gaussian)");
        if (j.is_object()) {
            if (j.contains("amplitude")) f.amplitude = j["amplitude"].get<double>();
            if (j.contains("c")) f.amplitude = j["c"].get<double>();
            if (j.contains("width")) f.width = j["width"].get<double>();
        }
        f.validate();
        return f;
    });
}

PoissonSpec poisson_spec_from_json(const json& j) {
    return decoding("poisson spec", [&] {
        PoissonSpec s;
        const auto check = j.at("check").get<std::string>();
        const auto& w = j.at("window");
        auto lengths = w.at("lengths").get<std::vector<double>>();
        if (w.contains("dim") && w["dim"].get<std::size_t>() != lengths.size())
            throw InputError("window dim does not match the number of lengths");
        s.window = Window(std::move(lengths));
        if (j.contains("samples")) s.samples = j["samples"].get<std::uint64_t>();
        if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();

        if (check == "laplace") {
            s.check = PoissonSpec::Check::Laplace;
            if (j.contains("f")) s.f = test_function_from_json(j["f"]);
        } else if (check == "local") {
            s.check = PoissonSpec::Check::Local;
            const auto& F = j.at("F");
            const auto kind = F.at("kind").get<std::string>();
            if (kind == "one")
                s.local.kind = LocalFunctional::Kind::One;
            else if (kind == "count")
                s.local.kind = LocalFunctional::Kind::CountEquals;
            else if (kind == "linear")
                s.local.kind = LocalFunctional::Kind::Linear;
            else if (kind == "quadratic")
                s.local.kind = LocalFunctional::Kind::Quadratic;
            else
                throw InputError("unknown local functional '" + kind + "' (one, count, linear, quadratic)");
            if (F.contains("k")) s.local.k = F["k"].get<std::size_t>();
            if (F.contains("phi")) s.local.phi = test_function_from_json(F["phi"]);
            if (j.contains("series_terms")) s.series_terms = j["series_terms"].get<std::size_t>();
        } else if (check == "mecke") {
            s.check = PoissonSpec::Check::Mecke;
            s.m = j.at("m").get<std::size_t>();
            const auto& f = j.at("f");
            if (f.contains("g")) s.mecke.g = test_function_from_json(f["g"]);
            if (f.contains("h")) s.mecke.h = polynomial_from(f["h"]);
            if (f.contains("phi")) s.mecke.phi = test_function_from_json(f["phi"]);
        } else {
            throw InputError("unknown check '" + check + "' (laplace, local, mecke)");
        }
        return s;
    });
}

json to_json(const McReport& r) {
    json j = {{"check", r.check},         {"estimate", r.estimate},   {"reference", r.reference},
              {"abs_error", r.abs_error}, {"rel_error", r.rel_error}, {"std_error", r.std_error},
              {"samples", r.samples},     {"seed", r.seed},           {"rng", r.rng},
              {"rel_error_floor", kRelErrorFloor}};
    if (r.closed_form) j["closed_form"] = *r.closed_form;
    if (r.tail_bound) j["tail_bound"] = *r.tail_bound;
    if (r.series_terms) j["series_terms"] = *r.series_terms;
    if (r.rhs_estimate) j["rhs_estimate"] = *r.rhs_estimate;
    if (r.rhs_std_error) j["rhs_std_error"] = *r.rhs_std_error;
    if (r.pooled_std_error) j["pooled_std_error"] = *r.pooled_std_error;
    return j;
}

McReport mc_report_from_json(const json& j) {
    return decoding("MC report", [&] {
        McReport r;
        r.check = j.at("check").get<std::string>();
        r.estimate = j.at("estimate").get<double>();
        r.reference = j.at("reference").get<double>();
        r.abs_error = j.at("abs_error").get<double>();
        r.rel_error = j.at("rel_error").get<double>();
        r.std_error = j.at("std_error").get<double>();
        r.samples = j.at("samples").get<std::uint64_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.rng = j.at("rng").get<std::string>();
        if (j.contains("closed_form")) r.closed_form = j["closed_form"].get<double>();
        if (j.contains("tail_bound")) r.tail_bound = j["tail_bound"].get<double>();
        if (j.contains("series_terms")) r.series_terms = j["series_terms"].get<std::size_t>();
        if (j.contains("rhs_estimate")) r.rhs_estimate = j["rhs_estimate"].get<double>();
        if (j.contains("rhs_std_error")) r.rhs_std_error = j["rhs_std_error"].get<double>();
        if (j.contains("pooled_std_error")) r.pooled_std_error = j["pooled_std_error"].get<double>();
        return r;
    });
}

}  // namespace gammahodge
