// fseg: minimum segmentation of a haplotype panel and founder assembly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fseg/founders.hpp"
#include "fseg/io.hpp"
#include "fseg/oracle.hpp"
#include "fseg/pbwt.hpp"
#include "fseg/segmenter.hpp"

namespace {

using namespace fseg;

MaxMode parse_mode(const std::string& name) {
    if (name == "jump")
        return MaxMode::jump;
    if (name == "rmq")
        return MaxMode::rmq;
    throw IoError("unknown mode '" + name + "' (expected jump or rmq)");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw IoError("cannot open '" + path + "' for writing");
    return file;
}

void write_segmentation(std::ostream& out, const Segmentation& seg) {
    for (std::size_t j = 0; j < seg.segments(); ++j)
        out << seg.boundaries[j] + 1 << '\t' << seg.boundaries[j + 1] << '\t'
            << seg.cardinalities[j] << '\n';
    out << "K\t" << seg.max_cardinality() << '\n';
}

void write_fasta(std::ostream& out, const Panel& panel, const FounderSet& fs) {
    for (std::uint32_t f = 0; f < fs.founder_count(); ++f) {
        out << ">founder_" << f + 1 << '\n';
        const auto& seq = fs.founders[f];
        for (std::size_t pos = 0; pos < seq.size(); pos += 60) {
            const std::size_t end = std::min(pos + 60, seq.size());
            for (std::size_t i = pos; i < end; ++i)
                out.put(panel.decode(seq[i]));
            out.put('\n');
        }
        if (seq.empty())
            out.put('\n');
    }
}

void write_parses(std::ostream& out, const FounderSet& fs) {
    for (std::size_t i = 0; i < fs.parses.size(); ++i)
        for (std::size_t s = 0; s < fs.parses[i].size(); ++s)
            out << i + 1 << '\t' << s + 1 << '\t' << fs.parses[i][s] + 1 << '\n';
}

Panel random_panel(std::mt19937_64& rng, std::uint32_t m, pos_t n, std::uint32_t sigma) {
    std::uniform_int_distribution<int> sym(0, static_cast<int>(sigma) - 1);
    std::vector<std::uint8_t> data(static_cast<std::size_t>(m) * n);
    for (auto& b : data)
        b = static_cast<std::uint8_t>(sym(rng));
    return Panel::from_ranked(m, n, sigma, std::move(data));
}

int cmd_segment(const std::string& input, std::uint64_t L, const std::string& mode_name,
                const std::string& format_name, const std::string& output) {
    const MaxMode mode = parse_mode(mode_name);
    InputFormat format = parse_format(format_name);
    if (format == InputFormat::auto_detect)
        format = detect_format(input);

    Segmentation seg;
    if (format == InputFormat::colstream) {
        ColstreamSource source(input);
        seg = solve(source, L, mode);
    } else {
        const Panel panel = read_panel(input, format);
        seg = solve(panel, L, mode);
    }

    std::ofstream file;
    write_segmentation(open_output(file, output), seg);
    return 0;
}

int cmd_founders(const std::string& input, std::uint64_t L, const std::string& format_name,
                 const std::string& output, const std::string& parses_path) {
    const Panel panel = read_panel(input, parse_format(format_name));
    const Segmentation seg = solve(panel, L);
    const SegmentBlocks blocks = extract_blocks(panel, seg);
    const FounderSet fs = assemble_founders(blocks, seg.max_cardinality());
    if (!validate_founders(panel, fs))
        throw Error("internal error: assembled founders failed validation");

    std::ofstream file;
    write_fasta(open_output(file, output), panel, fs);
    if (!parses_path.empty()) {
        std::ofstream pf;
        write_parses(open_output(pf, parses_path), fs);
    }
    return 0;
}

// One randomized instance, cross-checked every way we know how.
bool verify_one(std::mt19937_64& rng, pos_t max_n, std::string& why) {
    std::uniform_int_distribution<int> m_dist(1, 8);
    std::uniform_int_distribution<int> l_dist(1, 6);
    const auto m = static_cast<std::uint32_t>(m_dist(rng));
    const std::uint32_t sigma = (rng() & 1) ? 4 : 2;
    const auto L = static_cast<std::uint64_t>(l_dist(rng));
    std::uniform_int_distribution<pos_t> n_dist(L, std::max<pos_t>(L, max_n));
    const pos_t n = n_dist(rng);
    const Panel panel = random_panel(rng, m, n, sigma);

    const OracleResult oracle = oracle_dp(panel, L);

    // pBWT: both variants against the definition.
    PbwtScratch scratch(sigma);
    PbwtColumn rmq_col = pbwt_init(m);
    PbwtColumn jump_col = pbwt_init(m);
    for (pos_t k = 1; k <= n; ++k) {
        const auto col = panel.column(k);
        rmq_col = pbwt_step_rmq(rmq_col, col, scratch);
        jump_col = pbwt_step_jump(std::move(jump_col), col, scratch);
        const PbwtColumn ref = naive_pbwt(panel, k);
        if (rmq_col.a != ref.a || rmq_col.d != ref.d) {
            why = "pbwt rmq variant disagrees with the definition at k=" + std::to_string(k);
            return false;
        }
        if (jump_col.a != ref.a || jump_col.d != ref.d) {
            why = "pbwt jump variant disagrees with the definition at k=" + std::to_string(k);
            return false;
        }
    }

    // Streaming M(k) against the recurrence, both range-max modes.
    for (const MaxMode mode : {MaxMode::jump, MaxMode::rmq}) {
        Segmenter seg(m, L, sigma, mode);
        for (pos_t k = 1; k <= n; ++k) {
            const auto out = seg.step(panel.column(k));
            if (out.value != oracle.M[k]) {
                why = "streaming M(" + std::to_string(k) + ") = " + std::to_string(out.value) +
                      ", recurrence says " + std::to_string(oracle.M[k]);
                return false;
            }
        }
    }

    // Brute force, segmentation, founders.
    if (enumerate_segmentations(panel, L) != oracle.optimum()) {
        why = "brute force disagrees with the recurrence";
        return false;
    }
    const Segmentation seg = solve(panel, L);
    if (!seg.valid_for(n) || seg.max_cardinality() != oracle.optimum()) {
        why = "reconstructed segmentation is invalid or suboptimal";
        return false;
    }
    const FounderSet fs = assemble_founders(extract_blocks(panel, seg), seg.max_cardinality());
    if (fs.founder_count() != oracle.optimum() || !validate_founders(panel, fs)) {
        why = "founder assembly failed validation";
        return false;
    }
    return true;
}

int cmd_verify(std::uint64_t cases, pos_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uint64_t ok = 0;
    for (std::uint64_t c = 1; c <= cases; ++c) {
        std::string why;
        if (verify_one(rng, max_n, why)) {
            ++ok;
        } else {
            std::cerr << "case " << c << " failed: " << why << '\n';
        }
    }
    if (ok == cases) {
        std::cout << ok << "/" << cases << " ok\n";
        return 0;
    }
    std::cout << ok << "/" << cases << " ok, " << cases - ok << " failed\n";
    return 1;
}

int cmd_bench(std::uint32_t m, pos_t n, std::uint32_t sigma, std::uint64_t L,
              const std::string& mode_name, std::uint32_t reps, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    const MaxMode mode = parse_mode(mode_name);
    std::mt19937_64 rng(seed);
    const Panel panel = random_panel(rng, m, n, sigma);

    std::vector<double> times;
    std::uint32_t optimum = 0;
    for (std::uint32_t rep = 0; rep < reps; ++rep) {
        const auto start = clock::now();
        const Segmentation seg = solve(panel, L, mode);
        times.push_back(std::chrono::duration<double>(clock::now() - start).count());
        optimum = seg.max_cardinality();
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    std::cout << "segment m=" << m << " n=" << n << " sigma=" << sigma << " L=" << L
              << " mode=" << mode_name << " K=" << optimum << '\n';
    std::cout << "total " << median << " s (median of " << reps << "), "
              << static_cast<std::uint64_t>(static_cast<double>(n) / median)
              << " columns/second\n";

    // pBWT column updates on their own, both variants.
    for (const char* variant : {"jump", "rmq"}) {
        PbwtScratch scratch(sigma);
        PbwtColumn cur = pbwt_init(m);
        PbwtColumn next;
        std::vector<std::uint8_t> col(m);
        const auto start = clock::now();
        for (pos_t k = 1; k <= n; ++k) {
            panel.column_into(k, col);
            if (variant[0] == 'j')
                pbwt_step_jump(cur, col, next, scratch);
            else
                pbwt_step_rmq(cur, col, next, scratch);
            std::swap(cur, next);
        }
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        std::cout << "pbwt " << variant << " " << secs << " s, "
                  << static_cast<std::uint64_t>(static_cast<double>(n) / secs)
                  << " columns/second";
        if (variant[0] == 'j')
            std::cout << " (" << static_cast<double>(scratch.maxd_touches) / static_cast<double>(n)
                      << " maxd touches/column; m*log2(sigma) = "
                      << static_cast<double>(m) * (sigma > 1 ? std::log2(sigma) : 1.0) << ")";
        std::cout << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum segmentation and founder assembly for haplotype panels"};
    app.require_subcommand(1);

    std::string input, output, parses_path, mode = "jump", format = "auto";
    std::uint64_t L = 0;

    auto* segment = app.add_subcommand("segment", "compute an optimal segmentation");
    segment->add_option("-L", L, "minimum segment length")->required();
    segment->add_option("--mode", mode, "range-maximum strategy: jump or rmq");
    segment->add_option("--format", format, "input format: auto, fasta, rows, colstream");
    segment->add_option("-o,--output", output, "output TSV path (default stdout)");
    segment->add_option("input", input, "input file")->required();

    auto* founders = app.add_subcommand("founders", "assemble founder sequences");
    founders->add_option("-L", L, "minimum segment length")->required();
    founders->add_option("--format", format, "input format: auto, fasta, rows, colstream");
    founders->add_option("-o,--output", output, "founder FASTA path (default stdout)");
    founders->add_option("--parses", parses_path, "per-recombinant parse TSV path");
    founders->add_option("input", input, "input file")->required();

    std::uint64_t cases = 500, seed = 1;
    pos_t max_n = 16;
    auto* verify = app.add_subcommand("verify", "cross-check against reference implementations");
    verify->add_option("--cases", cases, "number of random instances");
    verify->add_option("--max-n", max_n, "largest panel length");
    verify->add_option("--seed", seed, "random seed");

    std::uint32_t bench_m = 50, bench_sigma = 4, reps = 5;
    pos_t bench_n = 100000;
    std::uint64_t bench_L = 10;
    auto* bench = app.add_subcommand("bench", "time the streaming segmentation");
    bench->add_option("--m", bench_m, "rows");
    bench->add_option("--n", bench_n, "columns");
    bench->add_option("--sigma", bench_sigma, "alphabet size");
    bench->add_option("-L", bench_L, "minimum segment length");
    bench->add_option("--mode", mode, "range-maximum strategy: jump or rmq");
    bench->add_option("--reps", reps, "repetitions (median reported)");
    bench->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (segment->parsed())
            return cmd_segment(input, L, mode, format, output);
        if (founders->parsed())
            return cmd_founders(input, L, format, output, parses_path);
        if (verify->parsed())
            return cmd_verify(cases, max_n, seed);
        if (bench->parsed())
            return cmd_bench(bench_m, bench_n, bench_sigma, bench_L, mode, reps, seed);
    } catch (const fseg::InfeasibleLength& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
