// Command-line frontend: density/asymptotics tables, moment sequences,
// determinacy reports, additive-line (Gumbel-root) tables, seeded sampling,
// and the end-to-end verification suite.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammasg/asympt.hpp"
#include "gammasg/density.hpp"
#include "gammasg/gumbel.hpp"
#include "gammasg/moments.hpp"
#include "gammasg/parallel.hpp"
#include "gammasg/semigroup.hpp"
#include "gammasg/specfun.hpp"
#include "gammasg/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

// Shortest round-trip decimal representation.
std::string num(double x) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

struct GridSpec {
    double min = 0.1;
    double max = 10.0;
    long count = 50;
    std::string spacing = "log";

    std::vector<double> values() const {
        if (count < 1 || count > 10'000'000)
            throw gammasg::domain_error("grid count must be in [1, 1e7]");
        std::vector<double> out(count);
        if (count == 1) {
            out[0] = min;
            return out;
        }
        if (spacing == "log") {
            if (!(min > 0.0)) throw gammasg::domain_error("log spacing requires min > 0");
            for (long i = 0; i < count; ++i)
                out[i] = min * std::pow(max / min, static_cast<double>(i) / (count - 1));
        } else {
            for (long i = 0; i < count; ++i)
                out[i] = min + (max - min) * static_cast<double>(i) / (count - 1);
        }
        return out;
    }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> meta;
    // Optional trailing categorical column (e.g. the evaluation method).
    std::string label_column;
    std::vector<std::string> labels;
};

void write_table(const Table& table, const std::string& path, const std::string& format) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw gammasg::error("cannot open output file: " + path);
        os = &file;
    }
    const bool labeled = !table.label_column.empty();
    if (format == "json") {
        json meta;
        meta["version"] = kVersion;
        for (const auto& [k, v] : table.meta) {
            double parsed = 0.0;
            const auto res = std::from_chars(v.data(), v.data() + v.size(), parsed);
            if (res.ec == std::errc{} && res.ptr == v.data() + v.size())
                meta[k] = parsed;
            else
                meta[k] = v;
        }
        json rows = json::array();
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            json row;
            for (std::size_t i = 0; i < table.columns.size(); ++i)
                row[table.columns[i]] = table.rows[r][i];
            if (labeled) row[table.label_column] = table.labels[r];
            rows.push_back(std::move(row));
        }
        json doc;
        doc["meta"] = std::move(meta);
        doc["rows"] = std::move(rows);
        *os << doc.dump(2) << '\n';
        return;
    }
    for (const auto& [k, v] : table.meta) *os << "# " << k << "=" << v << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        *os << table.columns[i] << (i + 1 < table.columns.size() || labeled ? "," : "\n");
    if (labeled) *os << table.label_column << '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i)
            *os << num(row[i]) << (i + 1 < row.size() || labeled ? "," : "\n");
        if (labeled) *os << table.labels[r] << '\n';
    }
}

void add_params_meta(Table& table, const gammasg::SemigroupParams& p) {
    table.meta.emplace_back("a", num(p.a));
    table.meta.emplace_back("b", num(p.b));
    table.meta.emplace_back("c", num(p.c));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gamma-power product-convolution semigroups: densities, moments,\n"
                 "determinacy diagnostics, Gumbel convolution roots, and samplers."};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    gammasg::SemigroupParams params;
    GridSpec grid;
    std::string out_path;
    std::string format = "csv";

    auto add_common = [&](CLI::App* sub, bool with_grid, const char* grid_name) {
        sub->add_option("--a", params.a, "shape parameter a > 0")->capture_default_str();
        sub->add_option("--b", params.b, "shape parameter b > 0")->capture_default_str();
        sub->add_option("--c", params.c, "semigroup time c > 0")->capture_default_str();
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        if (with_grid) {
            sub->add_option(std::string("--") + grid_name + "-min", grid.min, "grid minimum")
                ->capture_default_str();
            sub->add_option(std::string("--") + grid_name + "-max", grid.max, "grid maximum")
                ->capture_default_str();
            sub->add_option("--count", grid.count, "grid size")->capture_default_str();
            sub->add_option("--spacing", grid.spacing, "linear or log")
                ->check(CLI::IsMember({"linear", "log"}))
                ->capture_default_str();
        }
    };

    // density
    auto* sub_density = app.add_subcommand("density", "table of (t, value, est_abs_err, method)");
    double tol = 1e-10;
    add_common(sub_density, true, "t");
    sub_density->add_option("--tol", tol, "target absolute tolerance for the inversion")
        ->capture_default_str();

    // moments
    auto* sub_moments = app.add_subcommand("moments", "table of (n, s_n, log s_n)");
    long n_max = 10;
    add_common(sub_moments, false, "");
    sub_moments->add_option("--n-max", n_max, "largest moment order")->capture_default_str();

    // classify
    auto* sub_classify =
        app.add_subcommand("classify", "determinacy verdict with Carleman/Krein diagnostics (JSON)");
    long carleman_n = 10'000;
    double krein_k = 2.0, krein_t = 1e4;
    add_common(sub_classify, false, "");
    sub_classify->add_option("--carleman-n", carleman_n, "Carleman term count")
        ->capture_default_str();
    sub_classify->add_option("--krein-k", krein_k, "Krein lower limit K >= 1")
        ->capture_default_str();
    sub_classify->add_option("--krein-t", krein_t, "Krein upper limit T")->capture_default_str();

    // asympt
    auto* sub_asympt =
        app.add_subcommand("asympt", "table of (t, density, leading_term, ratio)");
    std::string regime = "tail";
    add_common(sub_asympt, true, "t");
    sub_asympt->add_option("--regime", regime, "tail or origin")
        ->check(CLI::IsMember({"tail", "origin"}))
        ->capture_default_str();

    // gumbel
    auto* sub_gumbel = app.add_subcommand("gumbel", "additive-line tables");
    std::string gtable = "density";
    long gumbel_n = 12;
    add_common(sub_gumbel, true, "x");
    sub_gumbel->add_option("--table", gtable, "density, cumulants, poly, or moments")
        ->check(CLI::IsMember({"density", "cumulants", "poly", "moments"}))
        ->capture_default_str();
    sub_gumbel->add_option("--n-max", gumbel_n, "order for cumulants/poly/moments tables")
        ->capture_default_str();

    // sample
    auto* sub_sample = app.add_subcommand("sample", "seeded sample batch");
    std::uint64_t seed = 1;
    long sample_n = 1000;
    std::string kind = "tau";
    add_common(sub_sample, false, "");
    sub_sample->add_option("--n", sample_n, "sample count")->capture_default_str();
    sub_sample->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    sub_sample->add_option("--kind", kind, "tau (multiplicative) or gumbel (additive)")
        ->check(CLI::IsMember({"tau", "gumbel"}))
        ->capture_default_str();

    // verify
    auto* sub_verify =
        app.add_subcommand("verify", "run the end-to-end verification suite (exit 0 iff green)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (*sub_density) {
            const std::vector<double> ts = grid.values();
            const std::vector<gammasg::DensityValue> values =
                gammasg::density_grid(params, ts, tol);
            Table table;
            table.columns = {"t", "value", "est_abs_err"};
            table.label_column = "method";
            add_params_meta(table, params);
            table.meta.emplace_back("tol", num(tol));
            for (const auto& v : values) {
                table.rows.push_back({v.t, v.value, v.est_abs_err});
                table.labels.emplace_back(gammasg::to_string(v.method));
            }
            write_table(table, out_path, format);
        } else if (*sub_moments) {
            const gammasg::MomentSequence seq =
                gammasg::moment_sequence(params, static_cast<int>(n_max));
            Table table;
            table.columns = {"n", "s_n", "log_s_n"};
            add_params_meta(table, params);
            for (std::size_t n = 0; n < seq.values.size(); ++n)
                table.rows.push_back(
                    {static_cast<double>(n), seq.values[n], seq.log_values[n]});
            write_table(table, out_path, format);
        } else if (*sub_classify) {
            const gammasg::DeterminacyVerdict v = gammasg::classify(params);
            const gammasg::CarlemanDiagnostic cd =
                gammasg::carleman_diagnostic(params, carleman_n);
            const gammasg::KreinDiagnostic kd =
                gammasg::krein_diagnostic(params, krein_k, krein_t);
            json doc;
            doc["meta"] = {{"version", kVersion},
                           {"a", params.a},
                           {"b", params.b},
                           {"c", params.c}};
            doc["determinate"] = v.determinate;
            doc["boundary"] = v.boundary;
            doc["carleman"] = {{"fitted_exponent", cd.fitted_exponent},
                               {"partial_sum", cd.partial_sums.back()},
                               {"terms", carleman_n}};
            doc["krein"] = {{"integral_estimate", kd.integral_estimate},
                            {"exponent", kd.exponent},
                            {"bounded_at_infinity", kd.bounded_at_infinity},
                            {"K", krein_k},
                            {"T", krein_t}};
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!out_path.empty() && out_path != "-") {
                file.open(out_path);
                os = &file;
            }
            *os << doc.dump(2) << '\n';
        } else if (*sub_asympt) {
            const gammasg::Regime reg =
                regime == "tail" ? gammasg::Regime::tail : gammasg::Regime::origin;
            const std::vector<double> ts = grid.values();
            Table table;
            table.columns = {"t", "density", "leading_term", "ratio"};
            add_params_meta(table, params);
            table.meta.emplace_back("regime", regime);
            std::vector<std::vector<double>> rows(ts.size());
            gammasg::parallel_for(ts.size(), [&](std::size_t i) {
                const gammasg::DensityValue dv = gammasg::density(params, ts[i]);
                const gammasg::ApproxValue av = reg == gammasg::Regime::tail
                                                    ? gammasg::tail_asymptotic(params, ts[i])
                                                    : gammasg::origin_asymptotic(params, ts[i]);
                rows[i] = {ts[i], dv.value, av.leading_term,
                           std::exp(dv.log_value - av.log_leading)};
            });
            table.rows = std::move(rows);
            write_table(table, out_path, format);
        } else if (*sub_gumbel) {
            Table table;
            add_params_meta(table, params);
            if (gtable == "density") {
                if (grid.spacing == "log" && !(grid.min > 0.0)) grid.spacing = "linear";
                const std::vector<double> xs = grid.values();
                table.columns = {"x", "g"};
                std::vector<std::vector<double>> rows(xs.size());
                gammasg::parallel_for(xs.size(), [&](std::size_t i) {
                    rows[i] = {xs[i], gammasg::gumbel_density(params, xs[i])};
                });
                table.rows = std::move(rows);
            } else if (gtable == "cumulants") {
                const gammasg::CumulantSet cums =
                    gammasg::cumulants(params.a, params.b, static_cast<int>(gumbel_n));
                table.columns = {"n", "sigma_n"};
                for (std::size_t i = 0; i < cums.sigma.size(); ++i)
                    table.rows.push_back({static_cast<double>(i), cums.sigma[i]});
            } else if (gtable == "poly") {
                const gammasg::CumulantSet cums =
                    gammasg::cumulants(params.a, params.b, static_cast<int>(gumbel_n));
                const gammasg::MomentPolynomial poly =
                    gammasg::moment_polynomials(cums, static_cast<int>(gumbel_n));
                table.columns = {"n", "k", "a_nk"};
                for (int n = 1; n <= poly.max_order(); ++n)
                    for (int k = 1; k <= n; ++k)
                        table.rows.push_back({static_cast<double>(n), static_cast<double>(k),
                                              poly.coeff(n, k)});
            } else {  // moments: s_n(c) from the recursion
                const gammasg::CumulantSet cums =
                    gammasg::cumulants(params.a, params.b, static_cast<int>(gumbel_n));
                const gammasg::MomentPolynomial poly =
                    gammasg::moment_polynomials(cums, static_cast<int>(gumbel_n));
                table.columns = {"n", "s_n_c"};
                for (int n = 1; n <= poly.max_order(); ++n)
                    table.rows.push_back({static_cast<double>(n), poly.evaluate(n, params.c)});
            }
            write_table(table, out_path, format);
        } else if (*sub_sample) {
            const double c_int = params.c;
            if (c_int != std::floor(c_int) || c_int < 1.0)
                throw gammasg::domain_error("sample: c must be a positive integer");
            const gammasg::SampleBatch batch =
                kind == "tau"
                    ? gammasg::sample_tau_integer_c(params.a, params.b,
                                                    static_cast<int>(c_int), sample_n, seed)
                    : gammasg::sample_gumbel_root(params.a, params.b, static_cast<int>(c_int),
                                                  sample_n, seed);
            Table table;
            table.columns = {"value"};
            add_params_meta(table, params);
            table.meta.emplace_back("seed", std::to_string(batch.seed));
            table.meta.emplace_back("generator", batch.generator);
            table.meta.emplace_back("kind", kind);
            for (double v : batch.values) table.rows.push_back({v});
            write_table(table, out_path, format);
        } else if (*sub_verify) {
            const std::vector<gammasg::CheckResult> results = gammasg::run_verification_suite();
            return gammasg::report_checks(results, std::cout);
        }
    } catch (const gammasg::accuracy_error& e) {
        std::cerr << "numerical accuracy failure: " << e.what() << '\n';
        return 3;
    } catch (const gammasg::overflow_error& e) {
        std::cerr << "numerical range failure: " << e.what() << '\n';
        return 3;
    } catch (const gammasg::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
