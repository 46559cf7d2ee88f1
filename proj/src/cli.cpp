#include "orthospec/cli.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthospec/identities.hpp"

namespace orthospec {

namespace {

struct Settings {
    long precision = 256;
    std::string tolerance = "1e-30";
    long max_terms = 100000;
    std::string format = "text";
    std::string output;  // empty means standard output
    std::string config_path;
    long count = 20;  // terms per family for cross-validate / generate
    long jobs = 0;    // 0 means one thread per hardware core
};

long parse_long_arg(const std::string& text, const std::string& what) {
    long value = 0;
    const char* end = text.data() + text.size();
    auto result = std::from_chars(text.data(), end, value);
    if (result.ec != std::errc() || result.ptr != end)
        throw std::invalid_argument(what + ": '" + text + "' is not an integer");
    return value;
}

std::string trimmed(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    size_t last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

void check_format(const std::string& format, const std::string& what) {
    if (format != "text" && format != "json" && format != "csv")
        throw std::invalid_argument(what + ": unknown format '" + format +
                                    "' (expected text, json, or csv)");
}

// Settings already fixed on the command line keep priority over the file.
struct Overridden {
    bool precision = false;
    bool tolerance = false;
    bool max_terms = false;
    bool format = false;
};

void apply_config_file(const std::string& path, Settings& settings, const Overridden& fixed) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trimmed(line.substr(0, eq));
        std::string value = trimmed(line.substr(eq + 1));
        if (key == "precision") {
            if (!fixed.precision) settings.precision = parse_long_arg(value, "config precision");
        } else if (key == "tolerance") {
            if (!fixed.tolerance) settings.tolerance = value;
        } else if (key == "max_terms") {
            if (!fixed.max_terms) settings.max_terms = parse_long_arg(value, "config max_terms");
        } else if (key == "format") {
            check_format(value, "config file line " + std::to_string(lineno));
            if (!fixed.format) settings.format = value;
        } else {
            throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> params;
    for (const std::string& entry : raw) {
        size_t eq = entry.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("malformed parameter '" + entry +
                                        "', expected key=value");
        params[entry.substr(0, eq)] = entry.substr(eq + 1);
    }
    return params;
}

void emit(const Settings& settings, const std::string& content) {
    if (settings.output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(settings.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write output file '" + settings.output + "'");
    out << content;
    if (!out) throw std::invalid_argument("error writing output file '" + settings.output + "'");
}

std::string csv_quote(const std::string& field) {
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string join_terms(const std::vector<long>& terms, const char* separator) {
    std::string out;
    for (long t : terms) {
        if (!out.empty()) out += separator;
        out += std::to_string(t);
    }
    return out;
}

std::string report_text(const VerificationReport& report) {
    const long digits = decimal_digits_for(report.precision_bits);
    std::ostringstream out;
    out << "id: " << report.id << "\n";
    if (report.params.empty())
        out << "params:\n";
    else
        out << "params: " << report.params << "\n";
    out << "precision bits: " << report.precision_bits << "\n";
    out << "terms used: " << join_terms(report.terms_used, ", ") << "\n";
    out << "partial sum: " << report.partial_sum.to_decimal(digits) << "\n";
    out << "rhs: " << report.rhs_value.to_decimal(digits) << "\n";
    out << "abs error: " << report.abs_error.to_decimal(digits) << "\n";
    out << "tail estimate (heuristic): " << report.tail_estimate.to_decimal(digits) << "\n";
    out << "converged: " << (report.converged ? "yes" : "no") << "\n";
    return out.str();
}

const char* csv_header() { return "id,params,terms_used,abs_error,tail_estimate,converged\n"; }

std::string report_csv_row(const VerificationReport& report) {
    const long digits = decimal_digits_for(report.precision_bits);
    std::ostringstream out;
    out << report.id << ',' << csv_quote(report.params) << ','
        << join_terms(report.terms_used, ";") << ',' << report.abs_error.to_decimal(digits) << ','
        << report.tail_estimate.to_decimal(digits) << ','
        << (report.converged ? "true" : "false") << "\n";
    return out.str();
}

BigReal parse_tolerance(const Settings& settings) {
    const long prec = settings.precision > min_precision ? settings.precision : min_precision;
    return BigReal::of_string(settings.tolerance, prec);
}

int command_list(const Settings& settings) {
    const auto& entries = catalog();
    size_t id_width = 0;
    size_t sig_width = 0;
    std::vector<std::string> signatures;
    signatures.reserve(entries.size());
    for (const IdentityTemplate& entry : entries) {
        std::string sig;
        for (const ParamSpec& p : entry.params) {
            if (!sig.empty()) sig += ',';
            sig += p.name + "=" + p.default_value;
        }
        if (sig.empty()) sig = "-";
        id_width = std::max(id_width, entry.id.size());
        sig_width = std::max(sig_width, sig.size());
        signatures.push_back(std::move(sig));
    }
    std::ostringstream out;
    for (size_t i = 0; i < entries.size(); ++i) {
        out << entries[i].id << std::string(id_width - entries[i].id.size() + 2, ' ')
            << signatures[i] << std::string(sig_width - signatures[i].size() + 2, ' ')
            << entries[i].description << "\n";
    }
    emit(settings, out.str());
    return 0;
}

int command_verify(const Settings& settings, const std::string& id,
                   const std::vector<std::string>& raw_params) {
    Identity ident = instantiate(id, parse_params(raw_params));
    VerificationReport report =
        verify(ident, settings.precision, parse_tolerance(settings), settings.max_terms);
    if (settings.format == "json") {
        emit(settings, report_to_json(report));
    } else if (settings.format == "csv") {
        emit(settings, csv_header() + report_csv_row(report));
    } else {
        emit(settings, report_text(report));
    }
    return report.converged ? 0 : 1;
}

int command_verify_all(const Settings& settings) {
    const auto& entries = catalog();
    const size_t n = entries.size();
    std::vector<std::optional<VerificationReport>> reports(n);
    std::vector<std::exception_ptr> failures(n);
    std::atomic<size_t> next{0};
    const BigReal tolerance = parse_tolerance(settings);

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                Identity ident = entries[i].instantiate({});
                reports[i] = verify(ident, settings.precision, tolerance, settings.max_terms);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    long jobs = settings.jobs;
    if (jobs <= 0) jobs = static_cast<long>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (static_cast<size_t>(jobs) > n) jobs = static_cast<long>(n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs - 1));
    for (long j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    for (size_t i = 0; i < n; ++i)
        if (failures[i]) std::rethrow_exception(failures[i]);

    bool all_converged = true;
    std::string out;
    if (settings.format == "json") {
        nlohmann::json array = nlohmann::json::array();
        for (const auto& report : reports)
            array.push_back(nlohmann::json::parse(report_to_json(*report)));
        out = array.dump(2) + "\n";
    } else if (settings.format == "csv") {
        out = csv_header();
        for (const auto& report : reports) out += report_csv_row(*report);
    } else {
        for (size_t i = 0; i < n; ++i) {
            if (i > 0) out += "\n";
            out += report_text(*reports[i]);
        }
    }
    for (const auto& report : reports) all_converged = all_converged && report->converged;
    emit(settings, out);
    return all_converged ? 0 : 1;
}

int command_cross_validate(const Settings& settings, const std::string& id,
                           const std::vector<std::string>& raw_params) {
    Identity ident = instantiate(id, parse_params(raw_params));
    std::optional<std::string> detail = cross_validate_detail(ident, settings.count);
    const bool matched = !detail.has_value();
    std::string out;
    if (settings.format == "json") {
        nlohmann::json j;
        j["id"] = ident.id;
        j["params"] = ident.params;
        j["count"] = settings.count;
        j["matched"] = matched;
        j["detail"] = matched ? nlohmann::json() : nlohmann::json(*detail);
        out = j.dump(2) + "\n";
    } else if (settings.format == "csv") {
        out = "id,params,count,matched,detail\n";
        out += ident.id + ',' + csv_quote(ident.params) + ',' + std::to_string(settings.count) +
               ',' + (matched ? "true" : "false") + ',' + csv_quote(matched ? "" : *detail) + "\n";
    } else {
        if (matched)
            out = "cross-validation passed: " + ident.id + " (" +
                  std::to_string(settings.count) + " terms per family)\n";
        else
            out = "cross-validation failed: " + ident.id + ": " + *detail + "\n";
    }
    emit(settings, out);
    return matched ? 0 : 1;
}

std::string rhs_to_text(const RhsSpec& rhs) {
    std::string out;
    if (rhs.pi2_coefficient != 0) out = "(" + rhs.pi2_coefficient.get_str() + ") * pi^2";
    for (const FiniteTermSpec& term : rhs.rogers_terms) {
        if (!out.empty()) out += " + ";
        out += "L(" + term.argument.to_string() + ")";
        if (term.weight != 1) out += " * " + term.weight.get_str();
    }
    return out.empty() ? "0" : out;
}

int command_generate(const Settings& settings, const std::string& id,
                     const std::vector<std::string>& raw_params) {
    Identity ident = instantiate(id, parse_params(raw_params));
    if (settings.count < 1) throw std::invalid_argument("count must be at least 1");
    const long digits = decimal_digits_for(settings.precision);
    auto term_string = [&](const SeriesSpec& series, long n) {
        if (series.arg) return series.arg(n).to_string();
        return series.arg_numeric(n, settings.precision).to_decimal(digits);
    };

    std::string out;
    if (settings.format == "json") {
        nlohmann::json j;
        j["id"] = ident.id;
        j["params"] = ident.params;
        j["rhs"]["pi2_coefficient"] = ident.rhs.pi2_coefficient.get_str();
        j["rhs"]["rogers_terms"] = nlohmann::json::array();
        for (const FiniteTermSpec& term : ident.rhs.rogers_terms)
            j["rhs"]["rogers_terms"].push_back(
                {{"argument", term.argument.to_string()}, {"weight", term.weight.get_str()}});
        j["series"] = nlohmann::json::array();
        for (const SeriesSpec& series : ident.series) {
            nlohmann::json s;
            s["label"] = series.label;
            s["start"] = series.start;
            s["weight"] = series.weight.get_str();
            s["terms"] = nlohmann::json::array();
            for (long n = series.start; n < series.start + settings.count; ++n)
                s["terms"].push_back(term_string(series, n));
            j["series"].push_back(std::move(s));
        }
        j["finite_terms"] = nlohmann::json::array();
        for (const FiniteTermSpec& term : ident.finite_terms)
            j["finite_terms"].push_back(
                {{"argument", term.argument.to_string()}, {"weight", term.weight.get_str()}});
        out = j.dump(2) + "\n";
    } else if (settings.format == "csv") {
        out = "kind,label,index,value\n";
        for (const SeriesSpec& series : ident.series)
            for (long n = series.start; n < series.start + settings.count; ++n)
                out += "series," + csv_quote(series.label) + ',' + std::to_string(n) + ',' +
                       csv_quote(term_string(series, n)) + "\n";
        for (size_t i = 0; i < ident.finite_terms.size(); ++i)
            out += "finite,," + std::to_string(i) + ',' +
                   csv_quote(ident.finite_terms[i].argument.to_string()) + "\n";
        out += "rhs,," + std::string("0,") + csv_quote(rhs_to_text(ident.rhs)) + "\n";
    } else {
        std::ostringstream text;
        text << "id: " << ident.id << "\n";
        if (ident.params.empty())
            text << "params:\n";
        else
            text << "params: " << ident.params << "\n";
        text << "rhs: " << rhs_to_text(ident.rhs) << "\n";
        for (const SeriesSpec& series : ident.series) {
            text << "series " << series.label << " (start " << series.start;
            if (series.weight != 1) text << ", weight " << series.weight.get_str();
            if (series.weight_fn) text << ", term-dependent weight";
            text << "):\n";
            for (long n = series.start; n < series.start + settings.count; ++n)
                text << "  " << n << ": " << term_string(series, n) << "\n";
        }
        if (!ident.finite_terms.empty()) {
            text << "finite terms:\n";
            for (const FiniteTermSpec& term : ident.finite_terms) {
                text << "  " << term.argument.to_string();
                if (term.weight != 1) text << " (weight " << term.weight.get_str() << ")";
                text << "\n";
            }
        }
        out = text.str();
    }
    emit(settings, out);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    Settings settings;

    if (const char* env = std::getenv("ORTHOSPEC_PRECISION")) {
        try {
            settings.precision = parse_long_arg(env, "ORTHOSPEC_PRECISION");
        } catch (const std::invalid_argument& error) {
            std::cerr << "error: " << error.what() << "\n";
            return 2;
        }
    }

    CLI::App app{"verify infinite Rogers dilogarithm identities"};
    app.require_subcommand(1);

    auto* opt_precision =
        app.add_option("--precision", settings.precision, "working precision in bits");
    auto* opt_tolerance =
        app.add_option("--tolerance", settings.tolerance, "convergence tolerance (decimal)");
    auto* opt_max_terms =
        app.add_option("--max-terms", settings.max_terms, "term cap per series");
    auto* opt_format = app.add_option("--format", settings.format, "output format")
                           ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", settings.output, "write the report to this file");
    app.add_option("--config", settings.config_path,
                   "key=value settings file (precision, tolerance, max_terms, format)");

    std::string id;
    std::vector<std::string> raw_params;

    auto* cmd_list = app.add_subcommand("list", "list the identity catalog");
    cmd_list->fallthrough();

    auto* cmd_verify = app.add_subcommand("verify", "verify one identity");
    cmd_verify->fallthrough();
    cmd_verify->add_option("--id", id, "identity id")->required();
    cmd_verify->add_option("--param", raw_params, "identity parameter key=value (repeatable)");

    auto* cmd_verify_all = app.add_subcommand("verify-all", "verify every catalog entry");
    cmd_verify_all->fallthrough();
    cmd_verify_all->add_option("--jobs", settings.jobs, "worker threads (default: all cores)");

    auto* cmd_cross = app.add_subcommand(
        "cross-validate", "compare geometric and arithmetic term streams exactly");
    cmd_cross->fallthrough();
    cmd_cross->add_option("--id", id, "identity id")->required();
    cmd_cross->add_option("--param", raw_params, "identity parameter key=value (repeatable)");
    cmd_cross->add_option("--count", settings.count, "terms per family to compare");

    auto* cmd_generate =
        app.add_subcommand("generate", "print the exact series arguments of an identity");
    cmd_generate->fallthrough();
    cmd_generate->add_option("--id", id, "identity id")->required();
    cmd_generate->add_option("--param", raw_params, "identity parameter key=value (repeatable)");
    cmd_generate->add_option("--count", settings.count, "terms per series to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) return app.exit(error);
        app.exit(error);
        return 2;
    }

    try {
        if (!settings.config_path.empty()) {
            Overridden fixed;
            fixed.precision = opt_precision->count() > 0;
            fixed.tolerance = opt_tolerance->count() > 0;
            fixed.max_terms = opt_max_terms->count() > 0;
            fixed.format = opt_format->count() > 0;
            apply_config_file(settings.config_path, settings, fixed);
        }
        check_format(settings.format, "--format");

        if (*cmd_list) return command_list(settings);
        if (*cmd_verify) return command_verify(settings, id, raw_params);
        if (*cmd_verify_all) return command_verify_all(settings);
        if (*cmd_cross) return command_cross_validate(settings, id, raw_params);
        if (*cmd_generate) return command_generate(settings, id, raw_params);
    } catch (const std::logic_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::runtime_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace orthospec
