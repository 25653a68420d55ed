#pragma once

// JSON wire formats. Exact integers (Betti numbers, dimensions) are written
// as decimal strings; they are read back from strings or plain numbers.

#include <json.hpp>

#include <string>
#include <vector>

#include "gammahodge/betti.hpp"
#include "gammahodge/hodge_discrete.hpp"
#include "gammahodge/poisson_mc.hpp"

namespace gammahodge {

using json = nlohmann::json;

// Parses text, mapping syntax errors to InputError.
json parse_json(const std::string& text);

json to_json(const BettiVector& v);
BettiVector betti_vector_from_json(const json& j);

json to_json(const BettiReport& r);
BettiReport betti_report_from_json(const json& j);

SimplicialComplex complex_from_json(const json& j);

struct KronProbe {
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    KernelDims dims;
};

struct SimplicialReport {
    std::vector<std::vector<long long>> maximal;
    std::vector<std::size_t> f_vector;  // simplex counts per dimension
    std::vector<std::size_t> betti;
    std::vector<HodgeDims> hodge;       // one per degree
    std::vector<KronProbe> kron_probes;
};

SimplicialReport simplicial_report(const SimplicialComplex& complex);
json to_json(const SimplicialReport& r);
SimplicialReport simplicial_report_from_json(const json& j);

TestFunction test_function_from_json(const json& j);
PoissonSpec poisson_spec_from_json(const json& j);

json to_json(const McReport& r);
McReport mc_report_from_json(const json& j);

}  // namespace gammahodge
