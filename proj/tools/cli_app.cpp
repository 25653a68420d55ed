#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gammahodge/errors.hpp"
#include "gammahodge/graded_algebra.hpp"
#include "gammahodge/json_io.hpp"

namespace gammahodge::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string output;
    std::string factor;
    std::string grid;
    std::size_t n_max = 10;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::size_t kron_probes = 0;
    bool infinite_volume = false;
    bool verbose = false;
};

// "-" is stdin, text starting with '{' or '[' is inline JSON, anything else a path.
json read_document(const std::string& source) {
    if (source.empty()) throw InputError("no input given (use --input)");
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return parse_json(source);
    std::stringstream buf;
    if (source == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(source);
        if (!in) throw InputError("cannot read input file '" + source + "'");
        buf << in.rdbuf();
    }
    return parse_json(buf.str());
}

void emit(const json& doc, const RunConfig& cfg, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    const std::filesystem::path target(cfg.output);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write output file '" + cfg.output + "'");
        f << text;
        if (!f.flush()) throw InputError("failed writing output file '" + cfg.output + "'");
    }
    std::filesystem::rename(tmp, target);
}

std::size_t word_cap() {
    if (const char* env = std::getenv("GAMMAHODGE_WORD_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw InputError("GAMMAHODGE_WORD_CAP must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return kDefaultWordCap;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto betti = betti_vector_from_json(read_document(cfg.input));
    const auto report = betti_report(betti, cfg.n_max);
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    emit(to_json(report), cfg, out);
    return kOk;
}

struct GridSpec {
    std::size_t l_max = 3;
    int degree_max = 4;
    std::size_t dim_max = 2;
    std::size_t m_max = 4;
    int n_max = 6;
    std::size_t betti_d_max = 3;
    long betti_beta_max = 2;
    std::size_t betti_n_max = 6;
};

GridSpec grid_from(const std::string& source) {
    GridSpec g;
    if (source.empty()) return g;
    const json j = read_document(source);
    try {
        g.l_max = j.value("l_max", g.l_max);
        g.degree_max = j.value("degree_max", g.degree_max);
        g.dim_max = j.value("dim_max", g.dim_max);
        g.m_max = j.value("m_max", g.m_max);
        g.n_max = j.value("n_max", g.n_max);
        g.betti_d_max = j.value("betti_d_max", g.betti_d_max);
        g.betti_beta_max = j.value("betti_beta_max", g.betti_beta_max);
        g.betti_n_max = j.value("betti_n_max", g.betti_n_max);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid grid: ") + e.what());
    }
    if (g.l_max < 1 || g.degree_max < 1 || g.betti_d_max < 1) throw InputError("grid bounds must be positive");
    return g;
}

// Multisets of l components drawn from degrees 1..degree_max and dims 0..dim_max.
std::vector<GradedSpace> grid_spaces(const GridSpec& g) {
    std::vector<Component> alphabet;
    for (int p = 1; p <= g.degree_max; ++p)
        for (std::size_t dim = 0; dim <= g.dim_max; ++dim) alphabet.push_back({p, dim});
    std::vector<GradedSpace> spaces;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!pick.empty()) {
            std::vector<Component> comps;
            for (auto i : pick) comps.push_back(alphabet[i]);
            spaces.emplace_back(std::move(comps));
        }
        if (pick.size() == g.l_max) return;
        for (std::size_t i = from; i < alphabet.size(); ++i) {
            pick.push_back(i);
            rec(i);
            pick.pop_back();
        }
    };
    rec(0);
    return spaces;
}

json space_json(const GradedSpace& space) {
    json degrees = json::array(), dims = json::array();
    for (const auto& c : space.components()) {
        degrees.push_back(c.degree);
        dims.push_back(c.dim);
    }
    return {{"degrees", degrees}, {"dims", dims}};
}

int cmd_algebra_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const GridSpec grid = grid_from(cfg.grid);
    const std::size_t cap = word_cap();
    std::size_t pass = 0, fail = 0, skipped = 0;

    json rows = json::array();
    for (const auto& space : grid_spaces(grid)) {
        for (std::size_t m = 0; m <= grid.m_max; ++m)
            for (int n = 0; n <= grid.n_max; ++n) {
                if (count_words(space, m, n) == 0) continue;
                json row = space_json(space);
                row["m"] = m;
                row["n"] = n;
                const Integer closed = sym_component_dim_closed(space, m, n);
                row["closed"] = to_decimal(closed);
                try {
                    const Integer brute = sym_component_dim_bruteforce(space, m, n, cap);
                    row["bruteforce"] = to_decimal(brute);
                    row["status"] = brute == closed ? "pass" : "fail";
                    (brute == closed ? pass : fail)++;
                } catch (const ResourceError& e) {
                    row["status"] = "skipped";
                    row["reason"] = e.what();
                    ++skipped;
                }
                rows.push_back(std::move(row));
            }
    }

    // b_n from the closed formula against the rank of P with p(i) = i.
    json betti_rows = json::array();
    std::vector<long> beta(grid.betti_d_max + 1, 0);
    std::function<void(std::size_t)> sweep = [&](std::size_t k) {
        if (k <= grid.betti_d_max) {
            for (long b = 0; b <= grid.betti_beta_max; ++b) {
                beta[k] = b;
                sweep(k + 1);
            }
            return;
        }
        const auto vec = BettiVector::from_ints(grid.betti_d_max, beta);
        std::vector<std::size_t> dims(beta.begin() + 1, beta.end());
        const auto space = GradedSpace::with_index_degrees(dims);
        for (std::size_t n = 0; n <= grid.betti_n_max; ++n) {
            json row = {{"beta", beta}, {"n", n}};
            const Integer formula = config_betti(vec, n);
            row["formula"] = to_decimal(formula);
            try {
                Integer brute = n == 0 ? Integer(1) : Integer(0);
                for (std::size_t m = 1; m <= n; ++m) brute += sym_component_dim_bruteforce(space, m, static_cast<int>(n), cap);
                row["bruteforce"] = to_decimal(brute);
                row["status"] = brute == formula ? "pass" : "fail";
                (brute == formula ? pass : fail)++;
            } catch (const ResourceError& e) {
                row["status"] = "skipped";
                row["reason"] = e.what();
                ++skipped;
            }
            betti_rows.push_back(std::move(row));
        }
    };
    sweep(1);

    json doc = {{"word_cap", cap},
                {"components", rows},
                {"config_betti", betti_rows},
                {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
    emit(doc, cfg, out);
    err << "algebra-check: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
    if (fail > 0) return kInternal;
    return skipped > 0 ? kPartial : kOk;
}

int cmd_simplicial(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto complex = complex_from_json(read_document(cfg.input));
    auto report = simplicial_report(complex);
    if (cfg.kron_probes > 0) {
        if (!cfg.seed) throw InputError("--kron-probes needs --seed");
        for (std::size_t i = 0; i < cfg.kron_probes; ++i) {
            SampleStream stream(*cfg.seed, i);
            auto random_gram = [&] {
                const std::size_t rows = 1 + stream.next_u64() % 6;
                const std::size_t cols = 1 + stream.next_u64() % 6;
                IntegerMatrix g(rows, cols);
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c) g(r, c) = static_cast<long>(stream.next_u64() % 5) - 2;
                return SymMatrix::gram(g);
            };
            const auto a = random_gram();
            const auto b = random_gram();
            const auto dims = kron_sum_kernel_dim(a, b);
            if (dims.computed != dims.predicted) throw InvariantViolation("Kronecker-sum kernel dimension mismatch");
            report.kron_probes.push_back({a.size(), b.size(), dims});
        }
    }
    emit(to_json(report), cfg, out);
    return kOk;
}

int cmd_poisson(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    auto spec = poisson_spec_from_json(read_document(cfg.input));
    if (cfg.seed) spec.seed = cfg.seed;
    if (cfg.samples) spec.samples = *cfg.samples;
    if (!spec.seed) throw InputError("poisson needs a seed (--seed or \"seed\" in the spec)");
    emit(to_json(run_check(spec)), cfg, out);
    return kOk;
}

BettiVector betti_of(const SimplicialComplex& complex) {
    const auto raw = betti_numbers(complex);
    std::vector<Integer> beta(raw.begin(), raw.end());
    if (beta.empty()) beta.push_back(0);
    if (beta.size() < 2) beta.push_back(0);
    const std::size_t d = beta.size() - 1;
    return BettiVector(d, std::move(beta));
}

int cmd_pipeline(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto base = complex_from_json(read_document(cfg.input));
    BettiVector x = betti_of(base);
    const BettiVector x_raw = x;
    if (cfg.infinite_volume && x.beta[0] != 0) {
        err << "note: --infinite-volume: beta_0 = " << to_decimal(x.beta[0]) << " of the base complex set to 0\n";
        x.beta[0] = 0;
    }
    BettiVector y = x;
    json pipeline = {{"base_betti", to_json(x_raw)}, {"infinite_volume", cfg.infinite_volume}};
    if (!cfg.factor.empty()) {
        const BettiVector m = betti_of(complex_from_json(read_document(cfg.factor)));
        y = kunneth_product(x, m);
        pipeline["factor_betti"] = to_json(m);
    }
    pipeline["betti"] = to_json(y);

    auto report = betti_report(y, cfg.n_max);
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    json doc = to_json(report);
    doc["pipeline"] = pipeline;
    emit(doc, cfg, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"L²-Betti numbers of configuration spaces and supporting identity checks", "gammahodge"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("-o,--output", cfg.output, "Write the JSON result to this file (atomically)");
    app.add_flag("-v,--verbose", cfg.verbose, "Log progress to stderr");

    auto* betti = app.add_subcommand("betti", "Configuration-space Betti numbers from a Betti vector");
    betti->add_option("-i,--input", cfg.input, "Betti vector JSON (path, inline, or - for stdin)")->required();
    betti->add_option("--n-max", cfg.n_max, "Largest order n to report");

    auto* algebra = app.add_subcommand("algebra-check", "Closed-form vs brute-force dimensions over a grid");
    algebra->add_option("--grid", cfg.grid, "Grid bounds JSON (path or inline)");

    auto* simplicial = app.add_subcommand("simplicial", "Betti numbers and Hodge decomposition of a complex");
    simplicial->add_option("-i,--input", cfg.input, "Complex JSON {\"maximal\": [...]}")->required();
    simplicial->add_option("--kron-probes", cfg.kron_probes, "Number of random Kronecker-sum kernel probes");
    simplicial->add_option("--seed", cfg.seed, "Seed for the probes");

    auto* poisson = app.add_subcommand("poisson", "Monte Carlo check of a Poisson-measure identity");
    poisson->add_option("-i,--input", cfg.input, "Check spec JSON")->required();
    poisson->add_option("--seed", cfg.seed, "Seed (overrides the spec)");
    poisson->add_option("--samples", cfg.samples, "Sample count (overrides the spec)");

    auto* pipeline = app.add_subcommand("pipeline", "Betti numbers of a complex fed into the configuration formula");
    pipeline->add_option("-i,--input", cfg.input, "Base complex JSON")->required();
    pipeline->add_option("--factor", cfg.factor, "Compact mark-space complex JSON (Künneth path)");
    pipeline->add_option("--n-max", cfg.n_max, "Largest order n to report");
    pipeline->add_flag("--infinite-volume", cfg.infinite_volume, "Treat the base as infinite volume (beta_0 := 0)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (betti->parsed()) return cmd_betti(cfg, out, err);
        if (algebra->parsed()) return cmd_algebra_check(cfg, out, err);
        if (simplicial->parsed()) return cmd_simplicial(cfg, out, err);
        if (poisson->parsed()) return cmd_poisson(cfg, out, err);
        if (pipeline->parsed()) return cmd_pipeline(cfg, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const InvariantViolation& e) {
        err << "internal invariant failed: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInput;
}

}  // namespace gammahodge::cli
