#include "wimax/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "wimax/analysis.hpp"
#include "wimax/bitio.hpp"
#include "wimax/params.hpp"
#include "wimax/stream.hpp"

namespace wimax::cli {

namespace {

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::IoError:
        case Errc::PartialBlock:
            return 3;
        default:
            return 2;
    }
}

struct ParamArgs {
    std::string mod;
    uint32_t ncpbs = 0;
    uint32_t d = 16;

    InterleaverParams make() const { return make_params(*parse_modulation(mod), ncpbs, d); }
};

void add_param_options(CLI::App* cmd, ParamArgs& pa, bool required) {
    auto* mod = cmd->add_option("--mod", pa.mod, "modulation: qpsk, 16qam or 64qam")
                    ->transform(CLI::IsMember({"qpsk", "16qam", "64qam"}, CLI::ignore_case));
    auto* ncpbs = cmd->add_option("--ncpbs", pa.ncpbs, "block size in bits (Ncpbs)");
    if (required) {
        mod->required();
        ncpbs->required();
    }
    cmd->add_option("-d,--d", pa.d, "row count of the block deinterleaver (12 or 16)")
        ->capture_default_str();
}

struct IoArgs {
    std::string in_path;
    std::string out_path;
    std::string format = "ascii";
    std::string partial = "strict";
    uint64_t bits = 0;
};

void add_io_options(CLI::App* cmd, IoArgs& io) {
    cmd->add_option("--in", io.in_path, "input path (default: stdin)");
    cmd->add_option("--out", io.out_path, "output path (default: stdout)");
    cmd->add_option("--io-format", io.format, "bit stream format")
        ->transform(CLI::IsMember({"ascii", "raw"}))
        ->capture_default_str();
    cmd->add_option("--partial", io.partial, "trailing partial frame policy")
        ->transform(CLI::IsMember({"strict", "pad"}))
        ->capture_default_str();
    cmd->add_option("--bits", io.bits,
                    "declared payload bit count for raw input (0 = whole stream)");
}

std::istream& open_input(const std::string& path, std::istream& fallback,
                         std::ifstream& storage) {
    if (path.empty()) return fallback;
    storage.open(path, std::ios::binary);
    if (!storage) {
        throw InterleaverError(Errc::IoError, "cannot open input file: " + path);
    }
    return storage;
}

std::ostream& open_output(const std::string& path, std::ostream& fallback,
                          std::ofstream& storage) {
    if (path.empty()) return fallback;
    storage.open(path, std::ios::binary);
    if (!storage) {
        throw InterleaverError(Errc::IoError, "cannot open output file: " + path);
    }
    return storage;
}

int run_table(const ParamArgs& pa, uint32_t rows, uint32_t cols, const std::string& fmt,
              const std::string& out_path, std::ostream& out_fallback) {
    const InterleaverParams p = pa.make();
    if (rows == 0) rows = p.rows();
    if (cols == 0) cols = p.columns();
    const AddressTable table = emit_address_table(p, rows, cols);
    std::ofstream file;
    std::ostream& os = open_output(out_path, out_fallback, file);
    os << format_address_table(p, table,
                               fmt == "csv" ? TableFormat::Csv : TableFormat::Text);
    os.flush();
    if (!os) throw InterleaverError(Errc::IoError, "write failure on table output");
    return 0;
}

int run_pipe(const ParamArgs& pa, Direction direction, const IoArgs& io, std::istream& in,
             std::ostream& out, std::ostream& err) {
    const InterleaverParams p = pa.make();
    std::ifstream in_file;
    std::ofstream out_file;
    std::istream& is = open_input(io.in_path, in, in_file);
    std::ostream& os = open_output(io.out_path, out, out_file);

    std::unique_ptr<BitSource> source;
    std::unique_ptr<BitSink> sink;
    if (io.format == "raw") {
        source = std::make_unique<RawBitSource>(is, io.bits);
        sink = std::make_unique<RawBitSink>(os);
    } else {
        source = std::make_unique<AsciiBitSource>(is);
        sink = std::make_unique<AsciiBitSink>(os);
    }
    const PartialPolicy policy =
        io.partial == "pad" ? PartialPolicy::Pad : PartialPolicy::Strict;

    const StreamResult result = process_stream(p, direction, *source, *sink, policy);
    err << "processed " << result.frames << " frame" << (result.frames == 1 ? "" : "s");
    if (result.pad_bits > 0) {
        err << " (final frame padded with " << result.pad_bits << " zero bits)";
    }
    err << '\n';
    return 0;
}

int run_verify_one(const ParamArgs& pa, std::ostream& out) {
    const EquivalenceReport report = verify_equivalence(pa.make());
    out << to_json(report) << '\n';
    return report.passed() ? 0 : 1;
}

int run_verify_all(uint32_t max_ncpbs, uint32_t d, std::ostream& out) {
    if (d != 12 && d != 16) {
        throw InterleaverError(Errc::BadRowCount,
                               "row count d must be 12 or 16, got " + std::to_string(d));
    }
    uint32_t checked = 0;
    uint32_t failed = 0;
    for (uint32_t n = d; n <= max_ncpbs; n += d) {
        for (Modulation m : {Modulation::Qpsk, Modulation::Qam16, Modulation::Qam64}) {
            if ((n / d) % permutation_step(m) != 0) continue;
            const EquivalenceReport report = verify_equivalence(make_params(m, n, d));
            ++checked;
            out << to_string(m) << " ncpbs=" << n << " d=" << d;
            if (report.passed()) {
                out << " ok\n";
            } else {
                ++failed;
                out << " MISMATCH (" << report.mismatches.size() << " of "
                    << report.total_indices << " addresses differ)\n";
            }
        }
    }
    out << "checked " << checked << " parameter sets up to ncpbs=" << max_ncpbs << ": "
        << (failed == 0 ? "all equivalent" : std::to_string(failed) + " failed") << '\n';
    return failed == 0 ? 0 : 1;
}

int run_sweep(uint32_t max_ncpbs, uint32_t d, bool verify, std::ostream& out,
              std::ostream& err) {
    const auto entries = sweep_depths(max_ncpbs, d);
    uint32_t failed = 0;
    for (const auto& entry : entries) {
        out << to_string(entry.modulation) << ':';
        for (uint32_t n : entry.valid_ncpbs) out << ' ' << n;
        out << '\n';
        if (verify) {
            for (uint32_t n : entry.valid_ncpbs) {
                const auto report = verify_equivalence(make_params(entry.modulation, n, d));
                if (!report.passed()) {
                    ++failed;
                    err << "equivalence MISMATCH at " << to_string(entry.modulation)
                        << " ncpbs=" << n << " d=" << d << '\n';
                }
            }
        }
    }
    if (verify && failed == 0) err << "equivalence verified for all listed depths\n";
    return failed == 0 ? 0 : 1;
}

int run_disperse(const ParamArgs& pa, uint32_t start, uint32_t len, std::ostream& out) {
    const DispersionReport report = burst_dispersion(pa.make(), start, len);
    out << to_json(report) << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"IEEE 802.16 (WiMAX) channel interleaver toolkit"};
    app.require_subcommand(1);

    ParamArgs table_pa;
    uint32_t table_rows = 0;
    uint32_t table_cols = 0;
    std::string table_fmt = "txt";
    std::string table_out;
    auto* table_cmd =
        app.add_subcommand("table", "print the deinterleaver address table");
    add_param_options(table_cmd, table_pa, /*required=*/true);
    table_cmd->add_option("--rows", table_rows, "table rows to print (default: all d)");
    table_cmd->add_option("--cols", table_cols, "table columns to print (default: all)");
    table_cmd->add_option("--format", table_fmt, "table format")
        ->transform(CLI::IsMember({"txt", "csv"}))
        ->capture_default_str();
    table_cmd->add_option("--out", table_out, "output path (default: stdout)");

    ParamArgs il_pa;
    IoArgs il_io;
    auto* il_cmd = app.add_subcommand("interleave", "interleave a bit stream");
    add_param_options(il_cmd, il_pa, /*required=*/true);
    add_io_options(il_cmd, il_io);

    ParamArgs dl_pa;
    IoArgs dl_io;
    auto* dl_cmd = app.add_subcommand("deinterleave", "deinterleave a bit stream");
    add_param_options(dl_cmd, dl_pa, /*required=*/true);
    add_io_options(dl_cmd, dl_io);

    ParamArgs vf_pa;
    bool vf_all = false;
    uint32_t vf_max = 4608;
    auto* vf_cmd = app.add_subcommand(
        "verify", "check the floorless generator against the standard's equations");
    add_param_options(vf_cmd, vf_pa, /*required=*/false);
    vf_cmd->add_flag("--all", vf_all, "verify every valid depth up to --max-ncpbs");
    vf_cmd->add_option("--max-ncpbs", vf_max, "depth limit for --all")
        ->capture_default_str();

    uint32_t sw_max = 0;
    uint32_t sw_d = 16;
    bool sw_verify = false;
    auto* sw_cmd =
        app.add_subcommand("sweep", "list valid interleaving depths per modulation");
    sw_cmd->add_option("--max-ncpbs", sw_max, "depth limit")->required();
    sw_cmd->add_option("-d,--d", sw_d, "row count of the block deinterleaver (12 or 16)")
        ->capture_default_str();
    sw_cmd->add_flag("--verify", sw_verify, "also verify equivalence at each depth");

    ParamArgs ds_pa;
    uint32_t ds_start = 0;
    uint32_t ds_len = 0;
    auto* ds_cmd = app.add_subcommand(
        "disperse", "report error positions after deinterleaving a burst");
    add_param_options(ds_cmd, ds_pa, /*required=*/true);
    ds_cmd->add_option("--start", ds_start, "burst start in the received block")
        ->required();
    ds_cmd->add_option("--len", ds_len, "burst length in bits")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (table_cmd->parsed()) {
            return run_table(table_pa, table_rows, table_cols, table_fmt, table_out, out);
        }
        if (il_cmd->parsed()) {
            return run_pipe(il_pa, Direction::Interleave, il_io, in, out, err);
        }
        if (dl_cmd->parsed()) {
            return run_pipe(dl_pa, Direction::Deinterleave, dl_io, in, out, err);
        }
        if (vf_cmd->parsed()) {
            if (vf_all) return run_verify_all(vf_max, vf_pa.d, out);
            if (vf_pa.mod.empty() || vf_pa.ncpbs == 0) {
                err << "verify needs either --all or both --mod and --ncpbs\n";
                return 2;
            }
            return run_verify_one(vf_pa, out);
        }
        if (sw_cmd->parsed()) return run_sweep(sw_max, sw_d, sw_verify, out, err);
        if (ds_cmd->parsed()) return run_disperse(ds_pa, ds_start, ds_len, out);
        err << "no subcommand given\n";
        return 2;
    } catch (const InterleaverError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace wimax::cli
