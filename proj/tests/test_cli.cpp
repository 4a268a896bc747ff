#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "fseg/io.hpp"
#include "testutil.hpp"

namespace tu = fseg::testutil;

namespace {

// Path to the built binary, injected by ctest; tests are skipped without it.
const char* cli_path() {
    return std::getenv("FSEG_BIN");
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult res;
    const std::string cmd = std::string("'") + cli_path() + "' " + args + " 2>/dev/null";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf;
    while (std::fgets(buf.data(), buf.size(), pipe))
        res.out += buf.data();
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    if (end == std::string::npos)
        return "";
    auto begin = text.find_last_of('\n', end);
    return text.substr(begin == std::string::npos ? 0 : begin + 1, end - begin);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("segment reports K and per-segment lines") {
    if (!cli_path())
        return; // not running under ctest
    tu::TempFile input("cli_rows.txt");
    input.write_text("baaaa\nbaaab\nbabab\n");

    const RunResult res = run("segment -L 1 " + input.path());
    CHECK(res.exit_code == 0);
    CHECK(last_line(res.out) == "K\t2");

    // byte-identical on a second run
    const RunResult again = run("segment -L 1 " + input.path());
    CHECK(again.out == res.out);

    // rmq mode computes the same segmentation
    const RunResult rmq = run("segment -L 1 --mode rmq " + input.path());
    CHECK(rmq.out == res.out);
}

TEST_CASE("infeasible length exits with 1, input errors with 2") {
    if (!cli_path())
        return;
    tu::TempFile input("cli_short.txt");
    input.write_text("acgtacg\nacgtacg\n");
    CHECK(run("segment -L 9 " + input.path()).exit_code == 1);
    CHECK(run("segment -L 2 no_such_file.txt").exit_code == 2);

    tu::TempFile ragged("cli_ragged.txt");
    ragged.write_text("ab\nabc\n");
    CHECK(run("segment -L 1 " + ragged.path()).exit_code == 2);
}

TEST_CASE("founders writes valid FASTA and parses") {
    if (!cli_path())
        return;
    tu::TempFile input("cli_founders_in.txt");
    input.write_text("baaaa\nbaaab\nbabab\n");
    tu::TempFile fasta("cli_founders.fa");
    tu::TempFile parses("cli_parses.tsv");

    const RunResult res = run("founders -L 1 -o " + fasta.path() + " --parses " + parses.path() +
                              " " + input.path());
    REQUIRE(res.exit_code == 0);

    const fseg::Panel founders = fseg::read_fasta(fasta.path());
    CHECK(founders.rows() == 2); // K = 2 for this panel at L = 1
    CHECK(founders.columns() == 5);

    std::ifstream tsv(parses.path());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(tsv, line))
        ++lines;
    CHECK(lines % 3 == 0); // three recombinants, one line per segment each
    CHECK(lines > 0);
}

TEST_CASE("verify reports all cases ok") {
    if (!cli_path())
        return;
    const RunResult res = run("verify --cases 100 --seed 7");
    CHECK(res.exit_code == 0);
    CHECK(last_line(res.out) == "100/100 ok");
}

TEST_CASE("colstream input goes through the streaming path") {
    if (!cli_path())
        return;
    std::mt19937_64 rng(59);
    const fseg::Panel p = tu::random_panel(rng, 5, 30, 4);
    tu::TempFile stream("cli_stream.fseg");
    fseg::write_colstream(p, stream.path());

    tu::TempFile rows("cli_stream_rows.txt");
    std::string text;
    for (std::uint32_t i = 1; i <= p.rows(); ++i)
        text += p.decode_row(i) + "\n";
    rows.write_text(text);

    const RunResult from_stream = run("segment -L 3 --format colstream " + stream.path());
    const RunResult from_rows = run("segment -L 3 " + rows.path());
    CHECK(from_stream.exit_code == 0);
    CHECK(from_stream.out == from_rows.out);
}

} // TEST_SUITE
