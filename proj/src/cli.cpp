#include "ptiles/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "ptiles/errors.hpp"
#include "ptiles/fourier.hpp"
#include "ptiles/json_io.hpp"
#include "ptiles/selfcheck.hpp"
#include "ptiles/tiling.hpp"

namespace ptiles {

namespace {

using nlohmann::ordered_json;

// Carries the input origin so parse failures can point at path and byte.
struct ParseFailure {
    std::string origin;
    std::size_t byte;
    std::string message;
};

// An argument is inline JSON when it starts with '{'; otherwise a path.
nlohmann::json load_json(const std::string& arg) {
    std::string text;
    std::string origin;
    if (!arg.empty() && arg[0] == '{') {
        text = arg;
        origin = "<inline>";
    } else {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw FormatError("cannot open input file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        origin = arg;
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseFailure{origin, e.byte, e.what()};
    }
}

// "u" or "u/d" with d a positive power of p, e.g. "3/4" for p = 2.
Frequency parse_xi(const std::string& text, const PrimeBase& base) {
    std::size_t slash = text.find('/');
    std::string num_part = text.substr(0, slash == std::string::npos ? text.size() : slash);
    std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    long long num = 0;
    long long den = 0;
    try {
        std::size_t used = 0;
        num = std::stoll(num_part, &used);
        if (used != num_part.size()) throw std::invalid_argument(num_part);
        den = std::stoll(den_part, &used);
        if (used != den_part.size()) throw std::invalid_argument(den_part);
    } catch (const std::exception&) {
        throw FormatError("frequency must look like \"u\" or \"u/p^k\", got \"" + text + "\"");
    }
    if (den < 1) throw DomainError("frequency denominator must be positive");
    int exponent = 0;
    while (den % base.p() == 0) {
        den /= base.p();
        ++exponent;
    }
    if (den != 1)
        throw DomainError("frequency denominator must be a power of p=" +
                          std::to_string(base.p()));
    return RawFrequency{num, exponent}.normalized(base);
}

std::string show(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

std::string show(const Frequency& xi) {
    if (xi.is_trivial()) return "0";
    return std::to_string(xi.unit()) + "/" +
           std::to_string(xi.base().pow(xi.exponent()));
}

// The object whose transform ft/zeroset evaluate: exactly one of a point
// measure, a level set, or a compact open set.
struct TransformSource {
    std::optional<PointSet> t;
    std::optional<LevelSet> omega;
    std::optional<CompactOpenSet> set;

    static TransformSource load(const std::string& t_text, const std::string& omega_text,
                                const std::string& set_text) {
        TransformSource src;
        if (!t_text.empty()) src.t = read_point_set(load_json(t_text));
        if (!omega_text.empty()) src.omega = read_level_set(load_json(omega_text));
        if (!set_text.empty()) src.set = read_compact_open(load_json(set_text));
        return src;
    }

    PrimeBase base() const {
        if (t) return t->base();
        if (omega) return omega->base();
        return set->base();
    }

    FTValue at(const Frequency& xi) const {
        if (t) return ft_point_measure(*t, xi);
        if (omega) return ft_level_set(*omega, xi);
        return ft_compact_open(*set, xi);
    }
};

ordered_json frequency_json(const Frequency& xi) {
    ordered_json j;
    j["exponent"] = xi.exponent();
    j["unit"] = xi.unit();
    return j;
}

int cmd_verify(bool spectral, const std::string& omega_text, const std::string& t_text,
               const std::string& format, std::ostream& out) {
    LevelSet omega = read_level_set(load_json(omega_text));
    PointSet t = read_point_set(load_json(t_text));
    TilingReport report =
        spectral ? verify_tiling_spectral(omega, t) : verify_tiling(omega, t);
    if (format == "json") {
        ordered_json j;
        j["is_tiling"] = report.is_tiling;
        if (report.witness) j["witness"] = *report.witness;
        if (!report.coverage_histogram.empty()) {
            ordered_json h = ordered_json::object();
            for (const auto& [count, residues] : report.coverage_histogram)
                h[std::to_string(count)] = residues;
            j["coverage_histogram"] = std::move(h);
        }
        if (report.witness_frequency)
            j["witness_frequency"] = frequency_json(*report.witness_frequency);
        out << j.dump() << "\n";
    } else {
        out << "tiling: " << (report.is_tiling ? "true" : "false") << "\n";
        if (report.witness) out << "witness: " << *report.witness << "\n";
        for (const auto& [count, residues] : report.coverage_histogram)
            out << "coverage " << count << ": " << residues << " residues\n";
        if (report.witness_frequency)
            out << "witness frequency: " << show(*report.witness_frequency) << "\n";
    }
    return report.is_tiling ? 0 : 3;
}

int cmd_regularize(const std::string& omega_text, const std::string& t_text,
                   const std::string& format, std::ostream& out) {
    LevelSet omega = read_level_set(load_json(omega_text));
    PointSet t = read_point_set(load_json(t_text));
    CompactOpenSet shape = regularize(omega, t);
    if (format == "json") {
        out << write_compact_open(shape).dump() << "\n";
    } else {
        out << "balls: " << shape.balls().size() << "\n";
        for (const Ball& b : shape.balls())
            out << "B(" << b.center() << ", p^-" << b.level() << ")\n";
        out << "measure: " << show(shape.measure()) << "\n";
    }
    return 0;
}

int cmd_complements(const std::string& omega_text, const std::string& format,
                    std::ostream& out) {
    LevelSet omega = read_level_set(load_json(omega_text));
    std::vector<PointSet> list = find_complements(omega);
    if (format == "json") {
        ordered_json j;
        j["complements"] = ordered_json::array();
        for (const PointSet& t : list) j["complements"].push_back(write_point_set(t));
        out << j.dump() << "\n";
    } else {
        out << "complements: " << list.size() << "\n";
        for (const PointSet& t : list) {
            for (std::size_t i = 0; i < t.points().size(); ++i)
                out << (i ? " " : "") << t.points()[i];
            out << "\n";
        }
    }
    return 0;
}

int cmd_enumerate(long long p, int n, long long size, int jobs, std::ostream& out) {
    PrimeBase base(p);
    for (const CensusRecord& rec : census(base, n, size, jobs))
        out << write_census_record(rec).dump() << "\n";
    return 0;
}

int cmd_ft(const TransformSource& src, const std::string& xi_text,
           const std::string& format, std::ostream& out) {
    Frequency xi = parse_xi(xi_text, src.base());
    FTValue value = src.at(xi);
    const CyclotomicSum& sum = value.value;
    std::complex<double> approx = value.to_complex();
    if (format == "json") {
        ordered_json j;
        j["gamma"] = sum.gamma();
        j["coefficients"] = ordered_json::array();
        for (std::size_t i = 0; i < sum.coeffs().size(); ++i) {
            if (sum.coeffs()[i] == Rational(0)) continue;
            ordered_json c;
            c["index"] = i;
            c["value"] = show(sum.coeffs()[i]);
            j["coefficients"].push_back(std::move(c));
        }
        j["zero"] = value.is_zero();
        j["approx"] = {{"re", approx.real()}, {"im", approx.imag()}};
        out << j.dump() << "\n";
    } else {
        out << "gamma: " << sum.gamma() << "\n";
        for (std::size_t i = 0; i < sum.coeffs().size(); ++i)
            if (!(sum.coeffs()[i] == Rational(0)))
                out << "coeff " << i << ": " << show(sum.coeffs()[i]) << "\n";
        out << "zero: " << (value.is_zero() ? "true" : "false") << "\n";
        out << "approx: " << approx.real() << " " << approx.imag() << "\n";
    }
    return 0;
}

int cmd_zeroset(const TransformSource& src, int max_k, const std::string& format,
                std::ostream& out) {
    PrimeBase base = src.base();
    std::vector<Frequency> zeros;
    long long checked = 0;
    for (int k = 0; k <= max_k; ++k) {
        long long modulus = base.pow(k);
        for (long long u = k == 0 ? 0 : 1; u < (k == 0 ? 1 : modulus); ++u) {
            if (k >= 1 && u % base.p() == 0) continue;
            Frequency xi(base, k, u);
            ++checked;
            if (src.at(xi).is_zero()) zeros.push_back(xi);
        }
    }
    if (format == "json") {
        ordered_json j;
        j["checked"] = checked;
        j["zeros"] = ordered_json::array();
        for (const Frequency& xi : zeros) j["zeros"].push_back(frequency_json(xi));
        out << j.dump() << "\n";
    } else {
        out << "checked: " << checked << "\n";
        out << "zeros: " << zeros.size() << "\n";
        for (const Frequency& xi : zeros) out << show(xi) << "\n";
    }
    return 0;
}

int cmd_lemmas(long long p, int max_gamma, const std::string& format, std::ostream& out) {
    PrimeBase base(p);
    struct Row {
        const char* name;
        SweepResult result;
    };
    // Exhausting size-4 subsets of Z/p^3 is only affordable for small p;
    // larger primes sweep Z/p^2 (the non-vanishing radius still varies).
    int depth = p <= 3 ? 3 : 2;
    Row rows[] = {
        {"ball-transform-riemann", ball_transform_matches_riemann(base, max_gamma)},
        {"root-sum-zero-float", zero_test_matches_float(base, max_gamma, 1000, 0x5eed0001ULL)},
        {"p-point-vanishing", p_point_vanishing_equivalence(base)},
        {"nonvanishing-radius", nonvanishing_outside_radius(base, depth)},
    };
    bool all_pass = true;
    for (const Row& row : rows) all_pass = all_pass && row.result.pass;
    if (format == "json") {
        ordered_json j;
        j["sweeps"] = ordered_json::array();
        for (const Row& row : rows) {
            ordered_json s;
            s["name"] = row.name;
            s["pass"] = row.result.pass;
            s["checks"] = row.result.checks;
            if (!row.result.detail.empty()) s["detail"] = row.result.detail;
            j["sweeps"].push_back(std::move(s));
        }
        j["pass"] = all_pass;
        out << j.dump() << "\n";
    } else {
        for (const Row& row : rows) {
            out << row.name << ": " << (row.result.pass ? "pass" : "FAIL") << " ("
                << row.result.checks << " checks)";
            if (!row.result.detail.empty()) out << " " << row.result.detail;
            out << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for translational tilings of the p-adic integers"};
    app.name("ptiles");
    app.require_subcommand(1);

    std::string omega_text, t_text, set_text, xi_text;
    std::string format = "text";
    long long p_value = 2;
    int n_value = 0;
    long long size_value = 1;
    int jobs = 1;
    int max_k = 3;
    int max_gamma = 3;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--omega", omega_text, "level set (inline JSON or path)")->required();
        sub->add_option("--t", t_text, "point set (inline JSON or path)")->required();
        add_format(sub);
    };
    auto add_source = [&](CLI::App* sub) {
        auto* group = sub->add_option_group("input", "object to transform");
        group->add_option("--t", t_text, "point set (point measure)");
        group->add_option("--omega", omega_text, "level set (indicator)");
        group->add_option("--set", set_text, "compact open set (indicator)");
        group->require_option(1);
    };

    CLI::App* verify = app.add_subcommand("verify", "check a tiling pair directly");
    add_pair(verify);
    CLI::App* spectral = app.add_subcommand("spectral", "check a tiling pair via transforms");
    add_pair(spectral);
    CLI::App* regularize_cmd =
        app.add_subcommand("regularize", "round a tile to its compact open form");
    add_pair(regularize_cmd);

    CLI::App* complements_cmd =
        app.add_subcommand("complements", "find every tiling complement of a set");
    complements_cmd->add_option("--omega", omega_text, "level set (inline JSON or path)")
        ->required();
    add_format(complements_cmd);

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "census of all tiles of Z/p^n of a given size");
    enumerate_cmd->add_option("--p", p_value, "prime base")->required();
    enumerate_cmd->add_option("--n", n_value, "level (resolution p^n)")->required();
    enumerate_cmd->add_option("--size", size_value, "tile cardinality")->required();
    enumerate_cmd->add_option("--jobs", jobs, "worker threads")
        ->envname("PADIC_TILES_JOBS")
        ->capture_default_str();

    CLI::App* ft_cmd = app.add_subcommand("ft", "exact transform value at one frequency");
    add_source(ft_cmd);
    ft_cmd->add_option("--xi", xi_text, "frequency, e.g. 3/4")->required();
    add_format(ft_cmd);

    CLI::App* zeroset_cmd =
        app.add_subcommand("zeroset", "frequencies where the transform vanishes");
    add_source(zeroset_cmd);
    zeroset_cmd->add_option("--max-k", max_k, "largest frequency exponent")
        ->capture_default_str();
    add_format(zeroset_cmd);

    CLI::App* lemmas_cmd =
        app.add_subcommand("lemmas", "run the built-in exhaustive self-checks");
    lemmas_cmd->add_option("--p", p_value, "prime base")->required();
    lemmas_cmd->add_option("--max-gamma", max_gamma, "largest root-of-unity order exponent")
        ->capture_default_str();
    add_format(lemmas_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ptiles");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(false, omega_text, t_text, format, out);
        if (spectral->parsed()) return cmd_verify(true, omega_text, t_text, format, out);
        if (regularize_cmd->parsed()) return cmd_regularize(omega_text, t_text, format, out);
        if (complements_cmd->parsed()) return cmd_complements(omega_text, format, out);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(p_value, n_value, size_value, jobs, out);
        if (ft_cmd->parsed()) {
            TransformSource src = TransformSource::load(t_text, omega_text, set_text);
            return cmd_ft(src, xi_text, format, out);
        }
        if (zeroset_cmd->parsed()) {
            TransformSource src = TransformSource::load(t_text, omega_text, set_text);
            return cmd_zeroset(src, max_k, format, out);
        }
        if (lemmas_cmd->parsed()) return cmd_lemmas(p_value, max_gamma, format, out);
    } catch (const ParseFailure& failure) {
        err << "error: parse: " << failure.origin << ": byte " << failure.byte << ": "
            << failure.message << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << "error: format: " << e.what() << "\n";
        return 2;
    } catch (const AmbiguousCellError& e) {
        err << "error: ambiguous-cell: " << e.what() << "\n";
        return 1;
    } catch (const PrecisionError& e) {
        err << "error: precision: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: domain: " << e.what() << "\n";
        return 1;
    }
    err << "error: usage: no subcommand\n";
    return 2;
}

}  // namespace ptiles
