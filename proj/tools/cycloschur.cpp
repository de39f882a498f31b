// cycloschur: tabulate cyclotomic and Schur data, run the verifier, check
// total unimodularity, and search for non-unimodularity witnesses.
//
// Exit codes: 0 pass/found, 1 fail/not found, 2 usage or input error.

#include "cycloschur/json_io.hpp"
#include "cycloschur/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cycloschur;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Output {
    Format format = Format::text;
    std::string path;

    void emit(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
            std::cout.flush();
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + path + "'");
        out << body;
    }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// key,value lines for reports that are not naturally tabular.
void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else {
        out << csv_escape(prefix) << "," << csv_escape(j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::string as_csv(const Json& j) {
    std::ostringstream out;
    out << "key,value\n";
    flatten(j, "", out);
    return out.str();
}

std::string join(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].get_str();
    return out;
}

std::string matrix_text(const RationalMatrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells.push_back(m(i, j).get_str());
            width = std::max(width, cells.back().size());
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& c = cells[i * m.cols() + j];
            out << " " << std::string(width - c.size(), ' ') << c;
        }
        out << "\n";
    }
    return out.str();
}

std::uint64_t require_n(std::int64_t n, std::int64_t min, const char* what) {
    if (n < min) throw UsageError(std::string(what) + " must be at least " + std::to_string(min) + ", got " + std::to_string(n));
    return static_cast<std::uint64_t>(n);
}

// ---------------------------------------------------------------------------

int cmd_phi(std::int64_t raw_n, std::int64_t terms, const Output& out) {
    const std::uint64_t n = require_n(raw_n, 1, "n");
    if (terms < 0) throw UsageError("--terms must be nonnegative");
    const IntPolynomial& phi = cyclotomic_poly(n);
    const std::size_t max_degree = terms == 0 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(terms - 1);
    const std::vector<Integer> series = inverse_cyclotomic_series(n, max_degree);
    std::vector<std::size_t> offending;
    for (std::size_t i = 0; i < phi.coeffs().size(); ++i)
        if (abs(phi.coeffs()[i]) > 1) offending.push_back(i);

    if (out.format == Format::json) {
        Json j;
        j["schema"] = "1";
        j["n"] = n;
        j["degree"] = phi.degree();
        j["phi"] = polynomial_to_json(phi);
        j["inverse_series"] = coefficients_to_json(series);
        j["all_in_unit_set"] = offending.empty();
        j["offending_degrees"] = offending;
        out.emit(dump(j));
    } else if (out.format == Format::csv) {
        std::ostringstream s;
        s << "degree,phi,inverse_series\n";
        for (std::size_t i = 0; i < std::max(phi.coeffs().size(), series.size()); ++i) {
            s << i << ",";
            if (i < phi.coeffs().size()) s << phi.coeffs()[i];
            s << ",";
            if (i < series.size()) s << series[i];
            s << "\n";
        }
        out.emit(s.str());
    } else {
        std::ostringstream s;
        s << "Phi_" << n << "(x) = " << phi.to_string() << "\n";
        s << "coefficients (degree 0.." << phi.degree() << "): " << join(phi.coeffs()) << "\n";
        s << "1/Phi_" << n << " series (degree 0.." << max_degree << "): " << join(series) << "\n";
        s << "all in {1,0,-1}: " << (offending.empty() ? "true" : "false") << "\n";
        if (!offending.empty()) {
            s << "offending degrees:";
            for (auto d : offending) s << " " << d << " (" << phi.coeffs()[d] << ")";
            s << "\n";
        }
        out.emit(s.str());
    }
    return kPass;
}

int cmd_schur_table(std::int64_t raw_n, std::int64_t max_len, std::int64_t max_part, std::uint64_t budget,
                    const Output& out) {
    const std::uint64_t n = require_n(raw_n, 2, "n");
    if (max_len < 0 || max_part < 0) throw UsageError("--max-len and --max-part must be nonnegative");
    const std::uint64_t d = euler_phi(n);
    if (static_cast<std::uint64_t>(max_len) > d)
        throw UsageError("--max-len " + std::to_string(max_len) + " exceeds phi(" + std::to_string(n) + ") = " +
                         std::to_string(d) + ": there are only phi(n) primitive roots, so s_lambda is evaluated for "
                         "length(lambda) <= phi(n)");
    std::vector<Partition> rows;
    bool over = false;
    for_each_partition_in_box(static_cast<std::size_t>(max_len), static_cast<int>(max_part), [&](const Partition& p) {
        if (rows.size() == budget) {
            over = true;
            return false;
        }
        rows.push_back(p);
        return true;
    });
    if (over)
        throw UsageError("the box has more than --budget = " + std::to_string(budget) +
                         " partitions; raise --budget or use 'verify'");

    std::vector<Integer> values(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) { values[i] = schur_at_roots(n, rows[i]); });
    std::map<Integer, std::uint64_t> histogram;
    for (const auto& v : values) ++histogram[v];
    const bool unit = histogram.empty() || (histogram.begin()->first >= -1 && histogram.rbegin()->first <= 1);

    if (out.format == Format::json) {
        Json j;
        j["schema"] = "1";
        j["n"] = n;
        j["max_length"] = max_len;
        j["max_part"] = max_part;
        Json table = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) table.push_back(schur_row_to_json(n, rows[i], values[i]));
        j["rows"] = std::move(table);
        Json hist = Json::object();
        for (const auto& [v, c] : histogram) hist[v.get_str()] = c;
        j["histogram"] = std::move(hist);
        j["all_in_unit_set"] = unit;
        out.emit(dump(j));
    } else if (out.format == Format::csv) {
        std::ostringstream s;
        s << "n,lambda,value\n";
        for (std::size_t i = 0; i < rows.size(); ++i) s << n << "," << csv_escape(rows[i].to_string()) << "," << values[i] << "\n";
        out.emit(s.str());
    } else {
        std::ostringstream s;
        s << "n = " << n << ", phi(n) = " << d << ", box length <= " << max_len << ", parts <= " << max_part << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) s << rows[i].to_string() << "\t" << values[i] << "\n";
        s << "values:";
        for (const auto& [v, c] : histogram) s << " " << v << " x" << c;
        s << "\nall in {-1,0,1}: " << (unit ? "true" : "false") << "\n";
        out.emit(s.str());
    }
    return unit ? kPass : kFail;
}

int cmd_verify(std::int64_t raw_n, std::int64_t max_part, std::uint64_t budget, std::uint64_t seed, const Output& out) {
    const std::uint64_t n = require_n(raw_n, 2, "n");
    if (max_part < 0) throw UsageError("--max-part must be nonnegative");
    VerifyOptions options;
    options.partition_budget = budget;
    options.seed = seed;
    const TheoremVerdict v = verify_theorem(n, static_cast<int>(max_part), options);
    const Json j = verdict_to_json(v);
    if (out.format == Format::json) {
        out.emit(dump(j));
    } else if (out.format == Format::csv) {
        out.emit(as_csv(j));
    } else {
        std::ostringstream s;
        s << "n = " << n << ", phi(n) = " << euler_phi(n) << ", parts <= " << max_part << "\n";
        s << "condition on odd primes: " << (v.star.satisfied ? "satisfied" : "violated") << " (odd primes:";
        for (auto p : v.star.odd_prime_factors) s << " " << p;
        s << ")\n";
        s << "direct: " << (v.direct.pass ? "pass" : "fail") << ", " << v.direct.partitions << " partitions"
          << (v.direct.complete ? "" : " (stopped early)") << "\n";
        if (v.direct.counterexample)
            s << "  counterexample: lambda = " << v.direct.counterexample->first.to_string()
              << ", value = " << v.direct.counterexample->second << "\n";
        s << "structural: " << (v.structural.pass ? "pass" : "fail") << " (" << to_string(v.structural.mode) << ")";
        if (v.structural.abs_det) s << ", |det| = " << v.structural.abs_det->get_str();
        s << "\n";
        if (v.structural.witness)
            s << "  bases with |det| " << v.structural.witness->first_abs_det.get_str() << " and "
              << v.structural.witness->second_abs_det.get_str() << "\n";
        s << "consistent: " << (v.consistent() ? "true" : "false") << "\n";
        out.emit(s.str());
    }
    return v.direct.pass && v.structural.pass ? kPass : kFail;
}

int cmd_tu_check(const std::string& path, std::uint64_t samples, std::uint64_t seed, const Output& out) {
    if (path.empty()) throw UsageError("--matrix <path> is required");
    RationalMatrix m;
    try {
        m = read_matrix_file(path);
    } catch (const JsonInputError& e) {
        throw UsageError(e.what());
    }
    TuOptions options;
    options.samples = samples;
    options.seed = seed;
    const TuResult r = is_totally_unimodular(m, options);

    Json j;
    j["schema"] = "1";
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["totally_unimodular"] = r.totally_unimodular;
    j["mode"] = to_string(r.mode);
    j["submatrices_checked"] = r.submatrices_checked;
    if (r.witness) {
        Json w;
        w["rows"] = r.witness->rows;
        w["cols"] = r.witness->cols;
        w["determinant"] = r.witness->determinant.get_str();
        j["witness"] = std::move(w);
    }
    if (out.format == Format::json) {
        out.emit(dump(j));
    } else if (out.format == Format::csv) {
        out.emit(as_csv(j));
    } else {
        std::ostringstream s;
        s << m.rows() << "x" << m.cols() << " matrix: " << (r.totally_unimodular ? "totally unimodular" : "not totally unimodular")
          << " (" << to_string(r.mode) << ", " << r.submatrices_checked << " submatrices)\n";
        if (r.witness) {
            s << "witness rows:";
            for (auto i : r.witness->rows) s << " " << i;
            s << ", cols:";
            for (auto i : r.witness->cols) s << " " << i;
            s << ", determinant " << r.witness->determinant.get_str() << "\n";
        }
        out.emit(s.str());
    }
    return r.totally_unimodular ? kPass : kFail;
}

int cmd_witness(const std::vector<std::int64_t>& dims, std::uint64_t budget, std::uint64_t seed, const Output& out) {
    if (dims.empty()) throw UsageError("give at least one circuit dimension, e.g. 'witness 2 4 6'");
    VectorSystem x = maximal_circuit(require_n(dims.front(), 1, "dimension"));
    for (std::size_t i = 1; i < dims.size(); ++i) x = tensor_product(x, maximal_circuit(require_n(dims[i], 1, "dimension")));
    const auto w = find_nonunimodular_witness(x, budget, seed);

    Json j;
    j["schema"] = "1";
    j["dims"] = dims;
    j["ambient_dim"] = x.ambient_dim();
    j["vectors"] = x.size();
    j["budget"] = budget;
    j["seed"] = seed;
    j["found"] = w.has_value();
    if (w) {
        j["witness"] = basis_pair_to_json(*w);
        j["ratio"] = Rational(w->second_abs_det / w->first_abs_det).get_str();
    }
    if (out.format == Format::json) {
        out.emit(dump(j));
    } else if (out.format == Format::csv) {
        out.emit(as_csv(j));
    } else {
        std::ostringstream s;
        s << "tensor product of maximal circuits, dims";
        for (auto d : dims) s << " " << d;
        s << ": " << x.size() << " vectors in dimension " << x.ambient_dim() << "\n";
        if (!w) {
            s << "no witness within " << budget << " pivots (seed " << seed << ")\n";
        } else {
            const auto list = [](const std::vector<std::size_t>& v) {
                std::string t;
                for (auto i : v) t += (t.empty() ? "" : " ") + std::to_string(i);
                return t;
            };
            s << "basis A: " << list(w->first) << "\n  |det| = " << w->first_abs_det.get_str() << "\n";
            s << "basis B: " << list(w->second) << "\n  |det| = " << w->second_abs_det.get_str() << "\n";
            s << "ratio: " << Rational(w->second_abs_det / w->first_abs_det).get_str() << "\n";
        }
        out.emit(s.str());
    }
    return w ? kPass : kFail;
}

int cmd_network_demo(std::int64_t m, std::int64_t n, const Output& out) {
    const auto built = bipartite_construction(require_n(m, 1, "m"), require_n(n, 1, "n"));
    const RationalMatrix net = network_matrix(built.network);
    const bool matches = net == built.a.transpose();

    if (out.format == Format::json) {
        Json j;
        j["schema"] = "1";
        j["m"] = m;
        j["n"] = n;
        j["a"] = matrix_to_json(built.a);
        j["network"] = network_to_json(built.network);
        j["network_matrix"] = matrix_to_json(net);
        j["transpose_matches"] = matches;
        out.emit(dump(j));
    } else if (out.format == Format::csv) {
        std::ostringstream s;
        for (std::size_t i = 0; i < built.a.rows(); ++i)
            for (std::size_t c = 0; c < built.a.cols(); ++c) s << (c ? "," : "") << built.a(i, c).get_str() << (c + 1 == built.a.cols() ? "\n" : "");
        out.emit(s.str());
    } else {
        std::ostringstream s;
        s << "A (" << built.a.rows() << "x" << built.a.cols() << "):\n" << matrix_text(built.a);
        s << "vertices:";
        for (const auto& v : built.network.vertices()) s << " " << v;
        s << "\ntree arcs:";
        for (const auto& [u, v] : built.network.tree()) s << " (" << u << "," << v << ")";
        s << "\ngraph arcs:";
        for (const auto& [u, v] : built.network.edges()) s << " (" << u << "," << v << ")";
        s << "\nnetwork matrix (" << net.rows() << "x" << net.cols() << "):\n" << matrix_text(net);
        s << "transpose matches: " << (matches ? "true" : "false") << "\n";
        out.emit(s.str());
    }
    return matches ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation of Schur polynomials at primitive roots of unity, and unimodularity checks"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    Output out;
    std::string format = "text";
    const auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", out.path, "Write output to this file instead of stdout");
    };

    std::int64_t n = -1, max_len = -1, max_part = -1, terms = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;

    auto* phi = app.add_subcommand("phi", "Coefficients of Phi_n and a prefix of the series 1/Phi_n");
    phi->add_option("n,--n", n, "Conductor (n >= 1)")->required();
    phi->add_option("--terms", terms, "Number of series terms (default n + 1)");
    add_output(phi);

    auto* table = app.add_subcommand("schur-table", "s_lambda at the primitive n-th roots for every lambda in a box");
    table->add_option("n,--n", n, "Conductor (n >= 2)")->required();
    table->add_option("--max-len", max_len, "Largest length of lambda (<= phi(n))")->required();
    table->add_option("--max-part", max_part, "Largest part of lambda")->required();
    table->add_option("--budget", budget, "Largest number of rows")->default_val(1'000'000);
    add_output(table);

    auto* verify = app.add_subcommand("verify", "Direct and structural checks of the unit-value property for n");
    verify->add_option("n,--n", n, "Conductor (n >= 2)")->required();
    verify->add_option("--max-part", max_part, "Largest part in the direct check")->default_val(8);
    verify->add_option("--budget", budget, "Partitions evaluated by the direct check")->default_val(VerifyOptions{}.partition_budget);
    verify->add_option("--seed", seed, "Seed for the witness search")->default_val(1);
    add_output(verify);

    std::string matrix_path;
    auto* tu = app.add_subcommand("tu-check", "Total unimodularity of a matrix read from JSON");
    tu->add_option("--matrix", matrix_path, "JSON array of rows of integer strings")->required();
    tu->add_option("--budget", budget, "Submatrices drawn in sampled mode")->default_val(TuOptions{}.samples);
    tu->add_option("--seed", seed, "Seed for sampled mode")->default_val(0);
    add_output(tu);

    std::vector<std::int64_t> dims;
    auto* witness = app.add_subcommand("witness", "Search a tensor product of maximal circuits for bases with different |det|");
    witness->add_option("dims", dims, "Circuit dimensions, e.g. 2 4 6")->required();
    witness->add_option("--budget", budget, "Pivot budget")->default_val(kDefaultWitnessBudget);
    witness->add_option("--seed", seed, "Random seed")->default_val(1);
    add_output(witness);

    std::vector<std::int64_t> mn;
    auto* demo = app.add_subcommand("network-demo", "The bipartite network construction for circuits of sizes m+1 and n+1");
    demo->add_option("sizes", mn, "m n")->required()->expected(2);
    add_output(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    out.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

    try {
        if (phi->parsed()) return cmd_phi(n, terms, out);
        if (table->parsed()) return cmd_schur_table(n, max_len, max_part, budget, out);
        if (verify->parsed()) return cmd_verify(n, max_part, budget, seed, out);
        if (tu->parsed()) return cmd_tu_check(matrix_path, budget, seed, out);
        if (witness->parsed()) return cmd_witness(dims, budget, seed, out);
        if (demo->parsed()) return cmd_network_demo(mn[0], mn[1], out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
