#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// Drives the installed binary end to end through a shell, capturing exit
// code and both output streams. ORTHOSPEC_CLI_PATH is injected by the build.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const std::string& scratch_dir() {
    static const std::string dir = [] {
        char tmpl[] = "/tmp/orthospec_cli_XXXXXX";
        const char* made = mkdtemp(tmpl);
        REQUIRE(made != nullptr);
        return std::string(made);
    }();
    return dir;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    REQUIRE(static_cast<bool>(out));
}

// Runs the CLI with the given argument string. The environment prefix
// defaults to scrubbing ORTHOSPEC_PRECISION so ambient settings cannot
// leak into the tests.
RunResult run_cli(const std::string& args,
                  const std::string& env_prefix = "env -u ORTHOSPEC_PRECISION ") {
    static int counter = 0;
    const std::string out_path = scratch_dir() + "/out." + std::to_string(counter);
    const std::string err_path = scratch_dir() + "/err." + std::to_string(counter);
    ++counter;
    const std::string command = env_prefix + "'" + ORTHOSPEC_CLI_PATH + "' " + args + " >'" +
                                out_path + "' 2>'" + err_path + "'";
    const int status = std::system(command.c_str());
    RunResult result;
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

long count_lines(const std::string& text) {
    long lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("list prints the whole catalog deterministically") {
    const RunResult first = run_cli("list");
    CHECK(first.exit_code == 0);
    CHECK(first.err.empty());
    CHECK(count_lines(first.out) == 37);
    CHECK(first.out.rfind("prop-4.1", 0) == 0);
    CHECK(contains(first.out, "eq-13.3"));
    CHECK(contains(first.out, "thm-15.3"));
    CHECK(contains(first.out, "t=3"));

    const RunResult second = run_cli("list");
    CHECK(second.out == first.out);
}

TEST_CASE("verify converges and reports in text form") {
    const RunResult r =
        run_cli("verify --id eq-13.3 --precision 128 --tolerance 1e-3");
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "id: eq-13.3\n"));
    CHECK(contains(r.out, "precision bits: 128\n"));
    CHECK(contains(r.out, "tail estimate (heuristic): "));
    CHECK(contains(r.out, "converged: yes\n"));

    // Byte-for-byte deterministic.
    const RunResult again =
        run_cli("verify --id eq-13.3 --precision 128 --tolerance 1e-3");
    CHECK(again.out == r.out);
}

TEST_CASE("verify usage errors exit with 2") {
    const RunResult bad_param = run_cli("verify --id eq-5.3 --param t=2");
    CHECK(bad_param.exit_code == 2);
    CHECK(bad_param.out.empty());
    CHECK(bad_param.err.rfind("error:", 0) == 0);

    CHECK(run_cli("verify --id no-such-identity").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);                      // --id required
    CHECK(run_cli("verify --id eq-13.3 --param oops").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                            // subcommand required
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify --id eq-13.3 --format yaml").exit_code == 2);
    CHECK(run_cli("verify --id eq-13.3 --precision 32 --tolerance 1e-3").exit_code == 2);
}

TEST_CASE("a tolerance beyond the working precision fails honestly") {
    // At 64 bits the numeric evaluation error is far above 1e-30, so the
    // check reports non-convergence rather than papering over it.
    const RunResult r = run_cli("verify --id eq-5.4 --precision 64 --tolerance 1e-30");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "converged: no\n"));
}

TEST_CASE("json reports parse and differ only in timing between runs") {
    const RunResult r = run_cli(
        "verify --id eq-13.3 --precision 128 --tolerance 1e-3 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("id") == "eq-13.3");
    CHECK(j.at("precision_bits") == 128);
    CHECK(j.at("converged") == true);
    CHECK(j.at("terms_used").is_array());
    for (const char* key : {"partial_sum", "rhs", "abs_error", "tail_estimate"}) {
        CHECK(j.at(key).is_string());
    }
    CHECK(j.at("elapsed_ms").is_number());

    const RunResult again = run_cli(
        "verify --id eq-13.3 --precision 128 --tolerance 1e-3 --format json");
    nlohmann::json k = nlohmann::json::parse(again.out);
    j["elapsed_ms"] = 0.0;
    k["elapsed_ms"] = 0.0;
    CHECK(j.dump(2) == k.dump(2));
}

TEST_CASE("csv report format") {
    const RunResult r = run_cli(
        "verify --id eq-13.3 --precision 128 --tolerance 1e-3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("id,params,terms_used,abs_error,tail_estimate,converged\n", 0) == 0);
    CHECK(count_lines(r.out) == 2);
    CHECK(contains(r.out, "eq-13.3,"));
    CHECK(contains(r.out, ",true\n"));

    const RunResult again = run_cli(
        "verify --id eq-13.3 --precision 128 --tolerance 1e-3 --format csv");
    CHECK(again.out == r.out);
}

TEST_CASE("--output writes the report to a file and keeps stdout quiet") {
    const std::string path = scratch_dir() + "/report.txt";
    const RunResult direct =
        run_cli("verify --id eq-13.3 --precision 128 --tolerance 1e-3");
    const RunResult filed = run_cli(
        "verify --id eq-13.3 --precision 128 --tolerance 1e-3 --output '" + path + "'");
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(read_file(path) == direct.out);
}

TEST_CASE("ORTHOSPEC_PRECISION changes the default and loses to the flag") {
    const RunResult env_only =
        run_cli("verify --id eq-13.3 --tolerance 1e-3",
                "env ORTHOSPEC_PRECISION=128 ");
    CHECK(env_only.exit_code == 0);
    CHECK(contains(env_only.out, "precision bits: 128\n"));

    const RunResult flag_wins =
        run_cli("verify --id eq-13.3 --tolerance 1e-3 --precision 192",
                "env ORTHOSPEC_PRECISION=128 ");
    CHECK(contains(flag_wins.out, "precision bits: 192\n"));

    const RunResult malformed = run_cli("list", "env ORTHOSPEC_PRECISION=abc ");
    CHECK(malformed.exit_code == 2);
    CHECK(malformed.err.rfind("error:", 0) == 0);
}

TEST_CASE("config files supply defaults without overriding flags") {
    const std::string cfg = scratch_dir() + "/settings.cfg";
    write_file(cfg,
               "# verification defaults\n"
               "precision = 128\n"
               "tolerance = 1e-3\n"
               "format = csv\n");

    const RunResult from_cfg = run_cli("verify --id eq-13.3 --config '" + cfg + "'");
    CHECK(from_cfg.exit_code == 0);
    CHECK(from_cfg.out.rfind("id,params,", 0) == 0);
    CHECK(contains(from_cfg.out, ",true\n"));

    const RunResult flag_wins =
        run_cli("verify --id eq-13.3 --config '" + cfg + "' --format text");
    CHECK(flag_wins.exit_code == 0);
    CHECK(contains(flag_wins.out, "precision bits: 128\n"));
    CHECK(contains(flag_wins.out, "converged: yes\n"));

    const std::string bad_key = scratch_dir() + "/bad_key.cfg";
    write_file(bad_key, "precison = 128\n");
    CHECK(run_cli("list --config '" + bad_key + "'").exit_code == 2);

    const std::string bad_line = scratch_dir() + "/bad_line.cfg";
    write_file(bad_line, "precision\n");
    CHECK(run_cli("list --config '" + bad_line + "'").exit_code == 2);

    CHECK(run_cli("list --config '" + scratch_dir() + "/missing.cfg'").exit_code == 2);
}

TEST_CASE("cross-validate compares the two term streams") {
    const RunResult ok = run_cli("cross-validate --id eq-4.7 --count 25");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "cross-validation passed: eq-4.7 (25 terms per family)\n");

    const RunResult no_model = run_cli("cross-validate --id eq-5.3");
    CHECK(no_model.exit_code == 2);
    CHECK(no_model.err.rfind("error:", 0) == 0);

    const RunResult json_form =
        run_cli("cross-validate --id eq-13.3 --count 10 --format json");
    CHECK(json_form.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(json_form.out);
    CHECK(j.at("matched") == true);
    CHECK(j.at("count") == 10);
    CHECK(j.at("detail").is_null());
}

TEST_CASE("generate prints exact arguments") {
    const RunResult text = run_cli("generate --id eq-13.3 --count 3");
    CHECK(text.exit_code == 0);
    CHECK(contains(text.out, "id: eq-13.3\n"));
    CHECK(contains(text.out, "1/4"));
    CHECK(contains(text.out, "1/9"));
    CHECK(contains(text.out, "1/16"));
    CHECK(contains(text.out, "(1/6) * pi^2"));

    const RunResult json_form = run_cli("generate --id eq-13.3 --count 3 --format json");
    CHECK(json_form.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(json_form.out);
    REQUIRE(j.at("series").is_array());
    CHECK(j.at("series").size() == 1);
    const auto& terms = j.at("series")[0].at("terms");
    REQUIRE(terms.size() == 3);
    CHECK(terms[0] == "1/4");
    CHECK(terms[1] == "1/9");
    CHECK(terms[2] == "1/16");

    // Surd arguments print in the exact surd grammar.
    const RunResult surd = run_cli("generate --id eq-11.1 --count 2");
    CHECK(surd.exit_code == 0);
    CHECK(contains(surd.out, "sqrt(5)"));
}

TEST_CASE("verify-all covers the catalog in order") {
    const RunResult r = run_cli(
        "verify-all --precision 128 --tolerance 1e-10 --max-terms 20000 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 38);  // header + one row per entry
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "id,params,terms_used,abs_error,tail_estimate,converged");
    std::vector<std::string> ids;
    while (std::getline(lines, line)) {
        ids.push_back(line.substr(0, line.find(',')));
        CHECK(line.substr(line.size() - 5) == ",true");
    }
    REQUIRE(ids.size() == 37);
    CHECK(ids.front() == "prop-4.1");
    CHECK(ids.back() == "thm-15.3");
}
